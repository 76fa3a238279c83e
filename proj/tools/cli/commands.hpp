#pragma once

// Subcommands of the `emlab` tool. Each cmd_* builds a Table; run() parses
// argv, dispatches, and maps failures onto the exit-code scheme.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "emlab/arith.hpp"
#include "emlab/candidates.hpp"
#include "emlab/search.hpp"
#include "table.hpp"

namespace emlab::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitDomain = 2,
  kExitBudget = 3,
};

/// "a..b" or a single value "a".
std::pair<Int, Int> parse_range(std::string_view text);
KRange parse_k_range(std::string_view text);

Table cmd_sum(int k, const Int& m);
Table cmd_approx(int k, const Rat& m, std::optional<int> p);
Table cmd_poly(int k, bool full_eml);
Table cmd_candidates(int k, const DivisorBudget& budget);
Table cmd_signs(int k_max, const DivisorBudget& budget, unsigned jobs);
Table cmd_ratios(CaseKind c, KRange k_range, int step, int exact_cutoff, bool exact);
Table cmd_threshold(KRange k_range);
Table cmd_search(KRange k_range, const IntRange& m_range, unsigned jobs);
Table cmd_figure1(KRange k_range, const IntRange& m_range);
Table cmd_figure2(int k_to, int exact_cutoff, bool exact);

/// Full command line including the program name at args[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace emlab::cli

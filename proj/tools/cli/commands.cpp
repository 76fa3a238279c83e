#include "commands.hpp"

#include <CLI11.hpp>

#include <limits>

#include "emlab/approx.hpp"
#include "emlab/polyform.hpp"
#include "emlab/powersum.hpp"
#include "emlab/signanalysis.hpp"

namespace emlab::cli {

namespace {

int to_int(const Int& v, std::string_view what) {
  if (!v.fits_sint_p()) throw DomainError(std::string(what) + " out of range");
  return static_cast<int>(v.get_si());
}

std::string range_text(const Int& lo, const Int& hi) {
  return to_string(lo) + ".." + to_string(hi);
}

void add_exact_triplet(std::vector<std::string>& columns, const std::string& name) {
  columns.push_back(name);
  columns.push_back(name + "_sign");
  columns.push_back(name + "_log10");
}

void push_exact_triplet(std::vector<Cell>& row, const Rat& v) {
  row.push_back(exact_cell(v));
  row.push_back(static_cast<std::int64_t>(sign(v)));
  row.push_back(float_cell(log10_abs(v)));
}

}  // namespace

std::pair<Int, Int> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    Int v = parse_int(text);
    return {v, v};
  }
  return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
}

KRange parse_k_range(std::string_view text) {
  auto [lo, hi] = parse_range(text);
  return {to_int(lo, "k"), to_int(hi, "k")};
}

Table cmd_sum(int k, const Int& m) {
  Table t;
  t.command = "sum";
  t.params["k"] = k;
  t.params["m"] = to_string(m);
  t.columns = {"k", "m", "S", "EML", "diff", "m_pow_k"};
  const PowerSumQuery q(m - 1, k);
  const Int direct = sum_direct(q);
  const Int eml = sum_eml_exact(q);
  t.add_row({static_cast<std::int64_t>(k), int_cell(m), exact_cell(direct), exact_cell(eml),
             exact_cell(Int(direct - eml)),
             exact_cell(pow(m, static_cast<unsigned long>(k)))});
  return t;
}

Table cmd_approx(int k, const Rat& m, std::optional<int> p) {
  Table t;
  t.command = "approx";
  t.params["k"] = k;
  t.params["m"] = to_string(m);
  if (p) t.params["p"] = *p;
  t.columns = {"quantity", "exact", "value"};
  const RealArg arg(m);
  auto add = [&](const std::string& name, const Rat& v) {
    t.add_row({name, exact_cell(v), float_cell(v.get_d())});
  };
  add("S_R", s_r(arg, k));
  add("C", correction_first(arg, k));
  if (m >= 3) add("C_over_L", correction_ratio(arg, k));
  if (p) add("S_EML_p", s_eml_truncated(arg, k, *p));
  if (is_integer(m)) {
    add("S_exact", Rat(sum_direct(PowerSumQuery(m.get_num() - 1, k))));
  }
  return t;
}

Table cmd_poly(int k, bool full_eml) {
  const ClearedPoly cp = full_eml ? full_eml_poly(k) : cleared_poly(k);
  Table t;
  t.command = "poly";
  t.params["k"] = k;
  t.params["form"] = full_eml ? "full_eml" : "cleared";
  t.params["multiplier"] = to_string(cp.multiplier);
  t.params["degree"] = cp.poly.degree();
  t.columns = {"power", "coefficient"};
  for (std::size_t i = 0; i < cp.poly.coeffs().size(); ++i) {
    t.add_row({static_cast<std::int64_t>(i), exact_cell(cp.poly.coeffs()[i])});
  }
  return t;
}

Table cmd_candidates(int k, const DivisorBudget& budget) {
  const CandidateSet set = candidate_roots(k, budget);
  const auto highlighted = k >= 3 ? highlighted_candidates(k)
                                  : std::vector<std::pair<CaseKind, Int>>{};
  Table t;
  t.command = "candidates";
  t.params["k"] = k;
  t.params["source"] = std::string(source_name(set.source));
  t.params["constant_term"] = to_string(set.constant_term);
  t.params["leading_coefficient"] = to_string(set.leading_coefficient);
  t.columns = {"k", "source", "candidate", "integer_ge3", "highlighted"};
  if (set.has_factored_zero_root) {
    t.add_row({static_cast<std::int64_t>(k), std::string("P"), exact_cell(Int(0)), false,
               std::monostate{}});
  }
  for (const Rat& c : set.all_candidates) {
    std::string cases;
    if (is_integer(c)) {
      for (const auto& [kind, m0] : highlighted) {
        if (m0 != c.get_num()) continue;
        if (!cases.empty()) cases += ';';
        cases += case_name(kind);
      }
    }
    const bool ge3 = is_integer(c) && c >= 3;
    t.add_row({static_cast<std::int64_t>(k), std::string(source_name(set.source)),
               exact_cell(c), ge3,
               cases.empty() ? Cell{std::monostate{}} : Cell{cases}});
  }
  return t;
}

Table cmd_signs(int k_max, const DivisorBudget& budget, unsigned jobs) {
  Table t;
  t.command = "signs";
  t.params["k_max"] = k_max;
  t.columns = {"k", "case", "m0", "value", "sign", "value_log10"};
  for (const SignReport& r : sign_summary(k_max, budget, jobs)) {
    t.add_row({static_cast<std::int64_t>(r.k),
               std::string(r.case_kind ? case_name(*r.case_kind) : "FULL_SET"),
               int_cell(r.m0), exact_cell(r.value), std::string(sign_name(r.sign)),
               float_cell(log10_abs(r.value))});
  }
  return t;
}

Table cmd_ratios(CaseKind c, KRange k_range, int step, int exact_cutoff, bool exact) {
  const RatioSeries series = ratio_series(c, k_range.lo, k_range.hi, step, exact_cutoff);
  Table t;
  t.command = "ratios";
  t.params["case"] = std::string(case_name(c));
  t.params["k"] = std::to_string(k_range.lo) + ".." + std::to_string(k_range.hi);
  t.params["step"] = step;
  t.params["monotone_from"] = monotone_start(c);
  t.columns = {"case", "k", "R", "limit", "decreasing_step"};
  if (exact) t.columns.emplace_back("R_exact");
  const RatioPoint* prev = nullptr;
  for (const RatioPoint& p : series.points) {
    Cell step_flag = std::monostate{};
    if (p.k >= monotone_start(c) && prev != nullptr && prev->k >= monotone_start(c)) {
      step_flag = (prev->r_exact && p.r_exact) ? *p.r_exact < *prev->r_exact
                                               : p.r_float < prev->r_float;
    }
    std::vector<Cell> row{std::string(case_name(c)), static_cast<std::int64_t>(p.k),
                          static_cast<double>(p.r_float), static_cast<double>(p.limit),
                          step_flag};
    if (exact) row.push_back(p.r_exact ? exact_cell(*p.r_exact) : Cell{std::monostate{}});
    t.add_row(std::move(row));
    prev = &p;
  }
  return t;
}

Table cmd_threshold(KRange k_range) {
  if (k_range.hi < k_range.lo) throw DomainError("threshold: empty k range");
  Table t;
  t.command = "threshold";
  t.params["k"] = std::to_string(k_range.lo) + ".." + std::to_string(k_range.hi);
  t.columns = {"k", "predicted", "predicted_value", "crossing", "single_crossing"};
  for (int k = k_range.lo; k <= k_range.hi; ++k) {
    const ThresholdReport r = sign_threshold(k);
    t.add_row({static_cast<std::int64_t>(k), exact_cell(r.predicted),
               float_cell(r.predicted.get_d()), int_cell(r.crossing), r.single_crossing});
  }
  return t;
}

Table cmd_search(KRange k_range, const IntRange& m_range, unsigned jobs) {
  const SearchReport report = search_box(k_range, m_range, jobs);
  Table t;
  t.command = "search";
  t.params["k"] = std::to_string(k_range.lo) + ".." + std::to_string(k_range.hi);
  t.params["m"] = range_text(m_range.lo, m_range.hi);
  t.columns = {"k", "m"};
  for (const SearchHit& h : report.hits) {
    t.add_row({static_cast<std::int64_t>(h.k), int_cell(h.m)});
  }
  return t;
}

Table cmd_figure1(KRange k_range, const IntRange& m_range) {
  if (k_range.lo < 1 || k_range.hi < k_range.lo) throw DomainError("figure1: invalid k range");
  if (m_range.lo < 2 || m_range.hi < m_range.lo) throw DomainError("figure1: invalid m range");
  Table t;
  t.command = "figure1";
  t.params["k"] = std::to_string(k_range.lo) + ".." + std::to_string(k_range.hi);
  t.params["m"] = range_text(m_range.lo, m_range.hi);
  t.columns = {"k", "m"};
  for (const char* name : {"S_exact", "S_R", "m_pow_k", "P_R", "P_R_plus_C", "P_exact"}) {
    add_exact_triplet(t.columns, name);
  }
  for (int k = k_range.lo; k <= k_range.hi; ++k) {
    const auto uk = static_cast<unsigned long>(k);
    Int running = sum_direct(PowerSumQuery(m_range.lo - 1, k));
    for (Int m = m_range.lo; m <= m_range.hi; ++m) {
      if (m > m_range.lo) running += pow(Int(m - 1), uk);
      const RealArg arg{Rat(m)};
      const Rat exact(running);
      const Rat approx = s_r(arg, k);
      const Rat power(pow(m, uk));
      const Rat p_r = approx - power;
      std::vector<Cell> row{static_cast<std::int64_t>(k), int_cell(m)};
      row.reserve(t.columns.size());
      push_exact_triplet(row, exact);
      push_exact_triplet(row, approx);
      push_exact_triplet(row, power);
      push_exact_triplet(row, p_r);
      push_exact_triplet(row, p_r + correction_first(arg, k));
      push_exact_triplet(row, exact - power);
      t.add_row(std::move(row));
    }
  }
  return t;
}

Table cmd_figure2(int k_to, int exact_cutoff, bool exact) {
  if (k_to < 4) throw DomainError("figure2: k_to must be at least 4");
  Table t;
  t.command = "figure2";
  t.params["k_to"] = k_to;
  t.columns = {"case", "k", "m0", "value", "sign", "value_log10", "R", "limit"};
  if (exact) t.columns.emplace_back("R_exact");
  for (CaseKind c : kAllCases) {
    for (int k = case_min_k(c); k <= k_to; k += 2) {
      const Int m0 = case_m0(c, k);
      const SignReport s = sign_at(k, m0);
      const RatioPoint r = ratio_R(k, c, exact_cutoff);
      std::vector<Cell> row{std::string(case_name(c)), static_cast<std::int64_t>(k),
                            int_cell(m0), exact_cell(s.value), std::string(sign_name(s.sign)),
                            float_cell(log10_abs(s.value)), static_cast<double>(r.r_float),
                            static_cast<double>(r.limit)};
      if (exact) row.push_back(r.r_exact ? exact_cell(*r.r_exact) : Cell{std::monostate{}});
      t.add_row(std::move(row));
    }
  }
  return t;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-arithmetic workbench for the Erdos-Moser equation", "emlab"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "csv";
  int digits = 6;
  bool exact = false;
  unsigned jobs = 1;
  std::string trial_budget = "1000000";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--digits", digits, "Significant digits for float columns")
      ->check(CLI::Range(1, 50));
  app.add_flag("--exact", exact, "Add exact rational columns where available");
  app.add_option("--jobs", jobs, "Worker threads for range commands")
      ->check(CLI::Range(1U, 1024U));
  app.add_option("--trial-budget", trial_budget, "Largest trial divisor");

  std::string k_text;
  std::string m_text;
  int k_single = 0;
  int k_max = 0;
  int k_to = 100;
  int step = 2;
  int exact_cutoff = kDefaultExactCutoff;
  std::optional<int> p_order;
  bool full_eml = false;
  std::string case_text;

  auto* sum = app.add_subcommand("sum", "Direct and Euler-Maclaurin power sums");
  sum->add_option("--k", k_single)->required();
  sum->add_option("--m", m_text)->required();

  auto* approx = app.add_subcommand("approx", "Truncated approximants at rational m");
  approx->add_option("--k", k_single)->required();
  approx->add_option("--m", m_text, "Rational m, e.g. 7/2")->required();
  approx->add_option("--p", p_order, "Number of correction terms");

  auto* poly = app.add_subcommand("poly", "Cleared or full Euler-Maclaurin polynomial");
  poly->add_option("--k", k_single)->required();
  poly->add_flag("--full-eml", full_eml);

  auto* cands = app.add_subcommand("candidates", "Rational-root candidates");
  cands->add_option("--k", k_single)->required();

  auto* signs = app.add_subcommand("signs", "Signs at candidate roots for k <= k-max");
  signs->add_option("--k-max", k_max)->required();

  auto* ratios = app.add_subcommand("ratios", "Ratio series R(k) for one case");
  ratios->add_option("--case", case_text)->required();
  ratios->add_option("--k", k_text, "Range a..b")->required();
  ratios->add_option("--step", step);
  ratios->add_option("--exact-cutoff", exact_cutoff);

  auto* threshold = app.add_subcommand("threshold", "Sign crossing of S(m-1,k) - m^k");
  threshold->add_option("--k", k_text, "k or range a..b")->required();

  auto* search = app.add_subcommand("search", "Exhaustive solution search");
  search->add_option("--k", k_text, "Range a..b")->required();
  search->add_option("--m", m_text, "Range a..b")->required();

  auto* fig1 = app.add_subcommand("figure1", "Approximation quality grid");
  k_text = "2..102";
  m_text = "3..200";
  fig1->add_option("--k", k_text, "Range a..b (default 2..102)");
  fig1->add_option("--m", m_text, "Range a..b (default 3..200)");

  auto* fig2 = app.add_subcommand("figure2", "Cleared polynomial at highlighted candidates");
  fig2->add_option("--k-to", k_to, "Largest k (default 100)");
  fig2->add_option("--exact-cutoff", exact_cutoff);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const OutputFormat fmt{format == "json" ? Format::kJson : Format::kCsv, digits, exact};
    const DivisorBudget budget(parse_int(trial_budget));
    Table table;
    if (*sum) {
      table = cmd_sum(k_single, parse_int(m_text));
    } else if (*approx) {
      table = cmd_approx(k_single, parse_rat(m_text), p_order);
    } else if (*poly) {
      table = cmd_poly(k_single, full_eml);
    } else if (*cands) {
      table = cmd_candidates(k_single, budget);
    } else if (*signs) {
      table = cmd_signs(k_max, budget, jobs);
    } else if (*ratios) {
      const auto c = parse_case(case_text);
      if (!c) throw DomainError("unknown case '" + case_text + "'");
      table = cmd_ratios(*c, parse_k_range(k_text), step, exact_cutoff, exact);
    } else if (*threshold) {
      table = cmd_threshold(parse_k_range(k_text));
    } else if (*search) {
      auto [lo, hi] = parse_range(m_text);
      table = cmd_search(parse_k_range(k_text), IntRange{lo, hi}, jobs);
    } else if (*fig1) {
      auto [lo, hi] = parse_range(m_text);
      table = cmd_figure1(parse_k_range(k_text), IntRange{lo, hi});
    } else if (*fig2) {
      table = cmd_figure2(k_to, exact_cutoff, exact);
    }
    write_table(table, fmt, out);
    return kExitOk;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace emlab::cli

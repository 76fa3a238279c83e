#include "emlab/approx.hpp"

#include <algorithm>
#include <cstdlib>

#include "emlab/powersum.hpp"

namespace emlab {

namespace {

void require_k(int k) {
  if (k < 1) throw DomainError("k must be at least 1");
}

}  // namespace

RealArg::RealArg(Rat m) : m_(std::move(m)) {
  if (m_ < 2) throw DomainError("evaluation point m must be at least 2");
}

Rat s_r(const RealArg& m, int k) {
  require_k(k);
  const auto uk = static_cast<unsigned long>(k);
  const Rat x = m.m() - 1;
  return (pow(x, uk + 1) - 1) / Rat(k + 1) + (1 + pow(x, uk)) / Rat(2);
}

Rat correction_first(const RealArg& m, int k) {
  require_k(k);
  return eml_correction_term(m.m() - 1, k, 1);
}

Rat correction_ratio(const RealArg& m, int k) {
  require_k(k);
  if (m.m() < 3) throw DomainError("correction_ratio requires m >= 3");
  const Rat x = m.m() - 1;
  const Rat leading = pow(x, static_cast<unsigned long>(k) + 1) / Rat(k + 1);
  return abs(correction_first(m, k)) / leading;
}

Rat s_eml_truncated(const RealArg& m, int k, int p) {
  require_k(k);
  if (p < 0) throw DomainError("truncation order p must be non-negative");
  Rat total = s_r(m, k);
  const Rat x = m.m() - 1;
  const int last = std::min(p, k / 2);
  for (int r = 1; r <= last; ++r) total += eml_correction_term(x, k, r);
  return total;
}

}  // namespace emlab

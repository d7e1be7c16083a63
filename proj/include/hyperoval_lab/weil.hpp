#ifndef HYPEROVAL_LAB_WEIL_HPP
#define HYPEROVAL_LAB_WEIL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absfactor.hpp"
#include "curve.hpp"

namespace hyperoval_lab {

struct WeilRow {
  unsigned e = 0;
  std::uint64_t n_gk = 0;                     // projective points of g_k
  std::optional<std::uint64_t> n_factor;      // points of the certified factor
  std::optional<bool> bound_ok;               // Weil bound for the certified factor
};

struct WeilReport {
  unsigned k = 0;
  unsigned e_max = 0;
  bool certified = false;
  unsigned degree = 0;  // degree of the certified absolutely irreducible GF(2)-factor
  std::optional<MPoly> factor;
  std::vector<WeilRow> counts;
  std::uint64_t degenerate_max = 0;
  std::optional<unsigned> e0;
  std::string note;

  bool all_ok() const {
    for (const auto& r : counts)
      if (r.bound_ok && !*r.bound_ok) return false;
    return true;
  }
};

inline WeilReport weil_report(unsigned k, unsigned e_max, unsigned threads = 0, std::uint64_t seed = 0) {
  if (k < 8 || k % 2) throw PreconditionError("weil_report: k must be even and at least 8");
  if (e_max < 1 || e_max > 20) throw PreconditionError("weil_report: need 1 <= e_max <= 20");
  WeilReport rep;
  rep.k = k;
  rep.e_max = e_max;
  rep.degenerate_max = 3ull * k - 2;

  const FactorTree t = factor_tree(k, seed);
  // The largest GF(2)-factor that is absolutely irreducible, if any.
  const BaseFactor* best = nullptr;
  for (const auto& b : t.base)
    if (b.abs.r == 1 && (!best || b.f.total_degree() > best->f.total_degree())) best = &b;
  if (best) {
    rep.certified = true;
    rep.factor = best->f;
    rep.degree = static_cast<unsigned>(best->f.total_degree());
    rep.e0 = weil_threshold(rep.degree, rep.degenerate_max);
    if (rep.degree < k - 2) rep.note = "bound applied to a proper absolutely irreducible factor";
  } else {
    unsigned max_abs = 0;
    for (const auto& b : t.base) max_abs = std::max<unsigned>(max_abs, b.f.total_degree() / b.n());
    rep.note = "no absolutely irreducible factor over GF(2); Weil bound not asserted";
    if (max_abs == 1) rep.note += " (all absolute factors are lines)";
  }

  const MPoly g = build_gk(k);
  for (unsigned e = 1; e <= e_max; ++e) {
    WeilRow row;
    row.e = e;
    row.n_gk = count_points(g, e, threads);
    if (rep.certified) {
      row.n_factor = rep.degree == k - 2 ? row.n_gk : count_points(*rep.factor, e, threads);
      row.bound_ok = weil_bound_holds(*row.n_factor, e, rep.degree);
    }
    rep.counts.push_back(row);
  }
  return rep;
}

}  // namespace hyperoval_lab

#endif  // HYPEROVAL_LAB_WEIL_HPP

#ifndef HYPEROVAL_LAB_REPORT_HPP
#define HYPEROVAL_LAB_REPORT_HPP

// JSON views of the library's records. Keys are emitted in sorted order, so equal
// inputs give byte-identical documents.

#include <string>
#include <vector>

#include <json.hpp>

#include "absfactor.hpp"
#include "curve.hpp"
#include "field.hpp"
#include "hyperoval.hpp"
#include "intersect.hpp"
#include "mpoly.hpp"
#include "weil.hpp"

namespace hyperoval_lab::report {

using json = nlohmann::json;

inline constexpr const char* kSchema = "hyperoval-lab/1";

inline json envelope(const std::string& command, json result) {
  return json{{"schema", kSchema}, {"command", command}, {"result", std::move(result)}};
}

inline std::string bits(Bits b) { return FieldCtx::to_binary_string(b); }
inline json elem(const FFElem& a) { return bits(a.bits()); }

/// [{"exp":[i,j(,l)],"coeff":"0b.."}, ...] in graded lex order, largest first.
inline json poly(const MPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json ex = json::array();
    for (unsigned v = 0; v < p.nvars(); ++v) ex.push_back(e[v]);
    terms.push_back(json{{"exp", ex}, {"coeff", bits(c)}});
  }
  return terms;
}

inline json poly_with_field(const MPoly& p) {
  return json{{"field", p.ctx().degree()}, {"text", p.to_string()}, {"terms", poly(p)}};
}

inline json field(const FieldCtx& f) {
  return json{{"e", f.degree()}, {"q", f.size()}, {"modulus", f.modulus_string()}, {"primitive", bits(f.primitive())}};
}

inline json verdict(const HyperovalVerdict& v) {
  json w = nullptr;
  if (v.witness) w = json::array({bits((*v.witness)[0]), bits((*v.witness)[1]), bits((*v.witness)[2])});
  return json{{"k", v.k}, {"e", v.e}, {"hyperoval", v.is_hyperoval}, {"method", method_name(v.method)}, {"witness", w}};
}

inline json scan_rows(const std::vector<ScanRow>& rows) {
  json a = json::array();
  for (const auto& r : rows) {
    if (r.verdict) a.push_back(verdict(*r.verdict));
    else a.push_back(json{{"k", r.k}, {"e", r.e}, {"rejected", r.rejected}});
  }
  return a;
}

inline json sing_point(const SingPoint& P) {
  return json{{"alpha", elem(P.alpha)},
              {"beta", elem(P.beta)},
              {"type", type_name(P.ptype)},
              {"m_f", P.m_f},
              {"m_g", P.m_g},
              {"expected_m_f", P.expected_m_f},
              {"expected_m_g", P.expected_m_g},
              {"sigma", elem(P.sigma)},
              {"tau", elem(P.tau)},
              {"tangent_power_ok", P.tangent_power_ok},
              {"tangent_closed_form_ok", P.tangent_closed_form_ok},
              {"tangent_squarefree", P.tangent_squarefree},
              {"tangent_distinct_lines", P.tangent_distinct},
              {"tangent_field_degree", P.tangent_field_degree}};
}

inline json type_counts(const TypeCounts& c) { return json{{"I", c.type1}, {"II", c.type2}, {"III", c.type3}}; }

inline json curve(const CurveReport& r) {
  json pts = json::array();
  for (const auto& P : r.points) pts.push_back(sing_point(P));
  return json{
      {"params", {{"k", r.params.k}, {"i", r.params.i}, {"ell", r.params.ell}, {"split_degree", r.params.m_split}}},
      {"singular_points", pts},
      {"table_check",
       {{"counts", type_counts(r.counts)},
        {"expected_counts", type_counts(r.expected_counts)},
        {"counts_ok", r.counts_ok},
        {"multiplicities_ok", r.multiplicities_ok},
        {"tangents_ok", r.tangents_ok}}},
      {"infinity_check",
       {{"singular_at_infinity", r.infinity.singular_at_infinity},
        {"common_degree", r.infinity.common_degree},
        {"point_010_singular", r.infinity.point_010_singular}}}};
}

inline json weil(const WeilReport& r) {
  json rows = json::array();
  for (const auto& c : r.counts) {
    json row{{"e", c.e}, {"N_e", c.n_gk}};
    row["N_e_factor"] = c.n_factor ? json(*c.n_factor) : json(nullptr);
    row["bound_ok"] = c.bound_ok ? json(*c.bound_ok) : json(nullptr);
    rows.push_back(row);
  }
  return json{{"k", r.k},
              {"e_max", r.e_max},
              {"certified", r.certified},
              {"degree", r.degree},
              {"factor", r.factor ? poly_with_field(*r.factor) : json(nullptr)},
              {"counts", rows},
              {"degenerate_max", r.degenerate_max},
              {"e0", r.e0 ? json(*r.e0) : json(nullptr)},
              {"note", r.note}};
}

inline json proj_point(const ProjPoint& p) { return json::array({elem(p.c[0]), elem(p.c[1]), elem(p.c[2])}); }

inline json bezout(const BezoutAudit& a) {
  json pairs = json::array();
  for (const auto& p : a.pairs) {
    json recs = json::array();
    for (const auto& r : p.records) recs.push_back(json{{"point", proj_point(r.point)}, {"I", r.value}});
    pairs.push_back(json{{"u", p.u_id},
                         {"v", p.v_id},
                         {"records", recs},
                         {"total", p.total},
                         {"degree_product", p.degree_product},
                         {"ok", p.ok}});
  }
  return json{{"pairs", pairs}, {"all_ok", a.all_ok}};
}

inline json bezout_k(const GkBezoutAudit& r) {
  json fs = json::array();
  for (std::size_t n = 0; n < r.factors.size(); ++n)
    fs.push_back(json{{"id", n}, {"j", r.labels[n].j}, {"s", r.labels[n].s}, {"poly", poly_with_field(r.factors[n])}});
  json out = bezout(r.audit);
  out["k"] = r.k;
  out["factors"] = fs;
  out["within_total"] = r.within_total;
  out["cross_total"] = r.cross_total;
  return out;
}

inline json factor_tree(const FactorTree& t) {
  json base = json::array();
  for (const auto& b : t.base) {
    json abs = json::array();
    for (const auto& h : b.abs.abs_factors) abs.push_back(poly_with_field(h));
    json cert = json::array();
    for (auto d : b.abs.certified_with) cert.push_back(d);
    base.push_back(json{{"factor", poly_with_field(b.f)},
                        {"multiplicity", b.multiplicity},
                        {"r", b.abs.r},
                        {"n", b.n()},
                        {"abs_factors", abs},
                        {"certified_with", cert}});
  }
  return json{{"k", t.k}, {"unit", bits(t.unit)}, {"base_factors", base}};
}

inline json verdict_record(const VerdictRecord& v) {
  return json{{"k", v.k},
              {"verdict", std::string(1, verdict_letter(v.verdict))},
              {"tree", factor_tree(v.tree)},
              {"degrees_ok", v.degrees_ok},
              {"galois_ok", v.galois_ok},
              {"cota", {{"lhs_x2L", v.cota.lhs_scaled}, {"rhs_x2L", v.cota.rhs_scaled}, {"strict", v.cota.strict}}}};
}

inline json inequality(const InequalityRecord& r) {
  return json{{"i", r.i},
              {"ell", r.ell},
              {"first_x4", r.first_x4},
              {"first_positive", r.first_positive},
              {"second_lhs_x4", r.second_lhs_x4},
              {"second_rhs_x4", r.second_rhs_x4},
              {"second_holds", r.second_holds},
              {"second_reduced_lhs_x4", r.second_reduced_lhs_x4},
              {"second_reduced_rhs_x4", r.second_reduced_rhs_x4},
              {"second_reduced_holds", r.second_reduced_holds},
              {"second_reduced_exact_holds", r.second_reduced_exact_holds},
              {"l1_branch_holds", r.l1_branch_holds}};
}

inline json type_lemmas(const TypeLemmaReport& r) {
  json recs = json::array();
  for (const auto& x : r.records)
    recs.push_back(json{{"alpha", elem(x.alpha)},
                        {"beta", elem(x.beta)},
                        {"type", type_name(x.ptype)},
                        {"u", x.u_id},
                        {"v", x.v_id},
                        {"I", x.value},
                        {"admissible", x.admissible}});
  return json{{"k", r.k}, {"i", r.i}, {"type1_bound", r.type1_bound}, {"records", recs}, {"all_ok", r.all_ok}};
}

}  // namespace hyperoval_lab::report

#endif  // HYPEROVAL_LAB_REPORT_HPP

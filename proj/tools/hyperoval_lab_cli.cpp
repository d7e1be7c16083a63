// hyperoval-lab: command-line front end. Exit codes: 0 success, 1 a mathematical
// assertion failed, 2 usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hyperoval_lab/hyperoval_lab.hpp"

namespace {

using namespace hyperoval_lab;
using report::json;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> preamble;  // text-mode lines printed before the table

  void add(std::vector<std::string> r) { rows.push_back(std::move(r)); }
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char ch : s) o += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return o + "\"";
}

std::string render_csv(const Table& t) {
  std::ostringstream os;
  auto line = [&os](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
    os << "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

std::string render_text(const Table& t) {
  std::vector<std::size_t> w(t.header.size(), 0);
  for (std::size_t i = 0; i < t.header.size(); ++i) w[i] = t.header[i].size();
  for (const auto& r : t.rows)
    for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
  std::ostringstream os;
  for (const auto& p : t.preamble) os << p << "\n";
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "  " : "") << std::left << std::setw(static_cast<int>(w[i])) << r[i];
    os << "\n";
  };
  line(t.header);
  std::vector<std::string> rule;
  for (auto n : w) rule.push_back(std::string(n, '-'));
  line(rule);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

std::string yn(bool b) { return b ? "true" : "false"; }

struct Output {
  std::string format = "json";
  std::string path;

  void emit(const std::string& command, const json& j, const Table& t) const {
    std::string text;
    if (format == "json") text = report::envelope(command, j).dump() + "\n";
    else if (format == "csv") text = render_csv(t);
    else text = render_text(t);
    if (path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(path, std::ios::binary);
      if (!f) throw PreconditionError("cannot open output file " + path);
      f << text;
    }
  }
};

// ---------------------------------------------------------------------------

int cmd_fields(const Output& out, std::optional<unsigned> e, unsigned e_max) {
  json a = json::array();
  Table t{{"e", "q", "modulus", "primitive"}, {}, {}};
  const unsigned lo = e ? *e : 1, hi = e ? *e : e_max;
  if (lo < 1 || hi > kMaxFieldDegree) throw PreconditionError("field degree must be in 1..32");
  for (unsigned d = lo; d <= hi; ++d) {
    const FieldCtx& f = make_field(d);
    a.push_back(report::field(f));
    t.add({std::to_string(d), std::to_string(f.size()), f.modulus_string(), report::bits(f.primitive())});
  }
  out.emit("fields", a, t);
  return 0;
}

int cmd_hyperoval(const Output& out, unsigned k, unsigned e, const std::string& method) {
  const HyperovalVerdict v = hyperoval_test(k, e, method == "det" ? HyperovalMethod::Determinant : HyperovalMethod::Permutation);
  std::string w = "";
  if (v.witness) w = report::bits((*v.witness)[0]) + " " + report::bits((*v.witness)[1]) + " " + report::bits((*v.witness)[2]);
  Table t{{"k", "e", "method", "hyperoval", "witness"}, {{std::to_string(k), std::to_string(e), method_name(v.method), yn(v.is_hyperoval), w}}, {}};
  out.emit("hyperoval", report::verdict(v), t);
  return 0;
}

int cmd_scan(const Output& out, unsigned k_max, unsigned e_max, unsigned threads) {
  if (e_max > kPermutationMaxE) throw PreconditionError("scan: e-max too large");
  const auto rows = scan(k_max, e_max, threads);
  Table t{{"k", "e", "hyperoval", "witness"}, {}, {}};
  for (const auto& r : rows) {
    std::string w;
    if (r.verdict && r.verdict->witness)
      w = report::bits((*r.verdict->witness)[0]) + " " + report::bits((*r.verdict->witness)[1]) + " " +
          report::bits((*r.verdict->witness)[2]);
    t.add({std::to_string(r.k), std::to_string(r.e), r.verdict ? yn(r.verdict->is_hyperoval) : "rejected", w});
  }
  out.emit("scan", report::scan_rows(rows), t);
  return 0;
}

int cmd_curve_report(const Output& out, unsigned k, std::uint64_t seed) {
  const CurveReport r = curve_report(k, seed);
  const unsigned p = 1u << r.params.i;
  Table t{{"alpha", "beta", "type", "m_f", "m_g", "sigma", "tau", "tangent_ok"}, {}, {}};
  auto row = [&](const char* name, unsigned n, unsigned expect, int mf, int mg) {
    std::ostringstream s;
    s << std::left << std::setw(6) << name << std::setw(18) << (std::to_string(n) + " (expect " + std::to_string(expect) + ")")
      << std::setw(6) << mf << mg;
    return s.str();
  };
  t.preamble = {"k=" + std::to_string(k) + "  i=" + std::to_string(r.params.i) + "  ell=" + std::to_string(r.params.ell) +
                    "  field GF(2^" + std::to_string(r.params.m_split) + ")",
                "Type  Number of points  m_f   m_g",
                row("I", r.counts.type1, r.expected_counts.type1, static_cast<int>(p) + 1, static_cast<int>(p) - 2),
                row("II", r.counts.type2, r.expected_counts.type2, static_cast<int>(p), static_cast<int>(p) - 1),
                row("III", r.counts.type3, r.expected_counts.type3, static_cast<int>(p), static_cast<int>(p)),
                "singular at infinity: " + yn(r.infinity.singular_at_infinity), ""};
  for (const auto& P : r.points)
    t.add({P.alpha.to_string(), P.beta.to_string(), type_name(P.ptype), std::to_string(P.m_f), std::to_string(P.m_g),
           P.sigma.to_string(), P.tau.to_string(),
           yn(P.tangent_power_ok && P.tangent_closed_form_ok && P.tangent_squarefree)});
  out.emit("curve-report", report::curve(r), t);
  return r.counts_ok && r.multiplicities_ok && r.tangents_ok && !r.infinity.singular_at_infinity ? 0 : 1;
}

int cmd_weil(const Output& out, unsigned k, unsigned e_max, unsigned threads, std::uint64_t seed) {
  const WeilReport w = weil_report(k, e_max, threads, seed);
  Table t{{"e", "N_e", "N_e_factor", "bound_ok"}, {}, {}};
  t.preamble = {"k=" + std::to_string(k) + " certified=" + yn(w.certified) + " degree=" + std::to_string(w.degree) +
                " e0=" + (w.e0 ? std::to_string(*w.e0) : std::string("-")) + (w.note.empty() ? "" : "  " + w.note)};
  for (const auto& r : w.counts)
    t.add({std::to_string(r.e), std::to_string(r.n_gk), r.n_factor ? std::to_string(*r.n_factor) : "",
           r.bound_ok ? yn(*r.bound_ok) : ""});
  out.emit("weil", report::weil(w), t);
  return w.all_ok() ? 0 : 1;
}

int cmd_bezout(const Output& out, unsigned k, unsigned threads, std::uint64_t seed) {
  const GkBezoutAudit a = bezout_audit_k(k, threads, seed);
  const TypeLemmaReport tl = type_lemma_checks(k, threads, seed);
  Table t{{"u", "v", "point", "I", "total", "degree_product", "ok"}, {}, {}};
  t.preamble = {"k=" + std::to_string(k) + " absolute factors=" + std::to_string(a.factors.size()) +
                " within=" + std::to_string(a.within_total) + " cross=" + std::to_string(a.cross_total) +
                " type lemmas ok=" + yn(tl.all_ok)};
  for (const auto& p : a.audit.pairs)
    for (const auto& r : p.records)
      t.add({std::to_string(p.u_id), std::to_string(p.v_id),
             "(" + r.point.c[0].to_string() + ":" + r.point.c[1].to_string() + ":" + r.point.c[2].to_string() + ")",
             std::to_string(r.value), std::to_string(p.total), std::to_string(p.degree_product), yn(p.ok)});
  json j = report::bezout_k(a);
  j["type_lemmas"] = report::type_lemmas(tl);
  out.emit("bezout", j, t);
  return a.audit.all_ok && tl.all_ok ? 0 : 1;
}

int cmd_factor(const Output& out, unsigned k, std::optional<unsigned> ext, std::uint64_t seed) {
  if (ext) {
    const BiFactorization fz = factor_over(build_gk(k), make_field(*ext), seed);
    json a = json::array();
    Table t{{"factor", "multiplicity"}, {}, {}};
    for (const auto& f : fz.factors) {
      a.push_back(json{{"factor", report::poly_with_field(f.factor)}, {"multiplicity", f.multiplicity}});
      t.add({f.factor.to_string(), std::to_string(f.multiplicity)});
    }
    out.emit("factor", json{{"k", k}, {"ext", *ext}, {"unit", report::bits(fz.unit)}, {"factors", a}}, t);
    return fz.expand(make_field(*ext)) == build_gk(k).embed_into(make_field(*ext)) ? 0 : 1;
  }
  const VerdictRecord v = abs_irr_verdict(k, seed);
  Table t{{"j", "factor", "multiplicity", "r", "n", "abs_factor"}, {}, {}};
  t.preamble = {"k=" + std::to_string(k) + " verdict (" + std::string(1, verdict_letter(v.verdict)) + ")"};
  for (std::size_t j = 0; j < v.tree.base.size(); ++j) {
    const auto& b = v.tree.base[j];
    for (const auto& h : b.abs.abs_factors)
      t.add({std::to_string(j), b.f.to_string(), std::to_string(b.multiplicity), std::to_string(b.abs.r),
             std::to_string(b.n()), h.to_string()});
  }
  out.emit("factor", report::verdict_record(v), t);
  return v.degrees_ok && v.galois_ok && v.tree.expand() == build_gk(k) ? 0 : 1;
}

int cmd_verify_segre(const Output& out, unsigned k) {
  const bool ok = verify_segre_factorizations(k);
  Table t{{"k", "verified"}, {{std::to_string(k), yn(ok)}}, {}};
  out.emit("verify-segre", json{{"k", k}, {"verified", ok}}, t);
  return ok ? 0 : 1;
}

int cmd_inequality_scan(const Output& out, unsigned i_max, unsigned ell_max) {
  json a = json::array();
  Table t{{"i", "ell", "first_x4", "first_positive", "second_lhs_x4", "second_rhs_x4", "second_holds", "second_reduced_holds",
           "second_reduced_exact_holds", "l1_branch_holds"},
          {},
          {}};
  for (unsigned i = 1; i <= i_max; ++i)
    for (unsigned ell = 1; ell <= ell_max; ell += 2) {
      const InequalityRecord r = counting_inequalities(i, ell);
      a.push_back(report::inequality(r));
      t.add({std::to_string(i), std::to_string(ell), std::to_string(r.first_x4), yn(r.first_positive),
             std::to_string(r.second_lhs_x4), std::to_string(r.second_rhs_x4), yn(r.second_holds), yn(r.second_reduced_holds),
             yn(r.second_reduced_exact_holds), yn(r.l1_branch_holds)});
    }
  out.emit("inequality-scan", a, t);
  return 0;
}

int cmd_verify_paper(const Output& out, const VerifyOptions& o) {
  Table t{{"id", "criterion", "passed", "checks", "detail"}, {}, {}};
  json a = json::array();
  bool all = true;
  const auto results = verify_paper(o, [](const CriterionResult& r) {
    std::cerr << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.title << (r.detail.empty() ? "" : ": " + r.detail)
              << std::endl;
  });
  for (const auto& r : results) {
    all = all && r.passed;
    a.push_back(json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"checks", r.checks}, {"detail", r.detail}});
    t.add({std::to_string(r.id), r.title, yn(r.passed), std::to_string(r.checks), r.detail});
  }
  out.emit("verify-paper", json{{"criteria", a}, {"passed", all}}, t);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on monomial hyperovals and the curves g_k over GF(2)."};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(
      "CSV columns:\n"
      "  fields: e,q,modulus,primitive\n"
      "  hyperoval: k,e,method,hyperoval,witness\n"
      "  scan: k,e,hyperoval,witness\n"
      "  curve-report: alpha,beta,type,m_f,m_g,sigma,tau,tangent_ok\n"
      "  weil: e,N_e,N_e_factor,bound_ok\n"
      "  bezout: u,v,point,I,total,degree_product,ok\n"
      "  factor: j,factor,multiplicity,r,n,abs_factor (with --ext: factor,multiplicity)\n"
      "  verify-segre: k,verified\n"
      "  inequality-scan: i,ell,first_x4,first_positive,second_lhs_x4,second_rhs_x4,second_holds,second_reduced_holds,\n"
      "                   second_reduced_exact_holds,l1_branch_holds\n"
      "  verify-paper: id,criterion,passed,checks,detail\n"
      "Exit status: 0 success, 1 failed mathematical assertion, 2 usage error.");

  Output out;
  std::uint64_t seed = 0;
  unsigned threads = default_threads();
  app.add_option("--seed", seed, "Seed for randomized factorization steps")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads (default: HYPEROVAL_LAB_THREADS or hardware)")->check(CLI::PositiveNumber);
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
  app.add_option("--out", out.path, "Write the report to this file instead of stdout");

  unsigned k = 0, e = 0, k_max = 20, e_max = 12, i_max = 10, ell_max = 99;
  std::optional<unsigned> e_opt, ext;
  std::string method = "perm";
  bool dump = false;

  auto* fields = app.add_subcommand("fields", "Field tables for GF(2^e)");
  fields->add_flag("--dump", dump, "Dump modulus and primitive element");
  fields->add_option("--e", e_opt, "Single field degree");
  auto* fields_emax = fields->add_option("--e-max", e_max, "Largest degree listed")->check(CLI::Range(1u, 32u));

  auto* hyper = app.add_subcommand("hyperoval", "Is D(x^k) a hyperoval in PG(2, 2^e)?");
  hyper->add_option("--k", k, "Even exponent")->required();
  hyper->add_option("--e", e, "Field degree")->required();
  hyper->add_option("--method", method, "det or perm")->check(CLI::IsMember({"det", "perm"}))->capture_default_str();

  auto* scan_cmd = app.add_subcommand("scan", "Verdict grid over even k <= k-max and e <= e-max");
  scan_cmd->add_option("--k-max", k_max)->capture_default_str();
  scan_cmd->add_option("--e-max", e_max)->capture_default_str();

  auto* curve_cmd = app.add_subcommand("curve-report", "Singular points, multiplicities and tangent data of g_k");
  curve_cmd->add_option("--k", k)->required();

  auto* weil_cmd = app.add_subcommand("weil", "Point counts and the Weil threshold");
  weil_cmd->add_option("--k", k)->required();
  weil_cmd->add_option("--e-max", e_max)->capture_default_str();

  auto* bez = app.add_subcommand("bezout", "Bezout audit of the absolute factors of g_k");
  bez->add_option("--k", k)->required();

  auto* fac = app.add_subcommand("factor", "Factor tree and verdict for g_k");
  fac->add_option("--k", k)->required();
  fac->add_option("--ext", ext, "Factor over GF(2^ext) instead")->check(CLI::Range(1u, 32u));

  auto* segre = app.add_subcommand("verify-segre", "Check the closed-form factorization of g_k");
  segre->add_option("--k", k)->required();

  auto* ineq = app.add_subcommand("inequality-scan", "Tabulate the counting inequalities");
  ineq->add_option("--i-max", i_max)->capture_default_str()->check(CLI::Range(1u, 20u));
  ineq->add_option("--ell-max", ell_max)->capture_default_str()->check(CLI::Range(1u, 999u));

  auto* vp = app.add_subcommand("verify-paper", "Run every acceptance check");
  vp->add_option("--k-max", k_max)->capture_default_str();
  vp->add_option("--e-max", e_max)->capture_default_str();
  vp->add_option("--i-max", i_max)->capture_default_str()->check(CLI::Range(1u, 20u));
  vp->add_option("--ell-max", ell_max)->capture_default_str()->check(CLI::Range(1u, 999u));
  bool keep_going = false;
  vp->add_flag("--keep-going", keep_going, "Run every criterion even after a failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  }
  (void)fields_emax;

  try {
    if (*fields) return cmd_fields(out, e_opt, fields_emax->count() || !dump ? e_max : 32);
    if (*hyper) return cmd_hyperoval(out, k, e, method);
    if (*scan_cmd) return cmd_scan(out, k_max, e_max, threads);
    if (*curve_cmd) return cmd_curve_report(out, k, seed);
    if (*weil_cmd) return cmd_weil(out, k, e_max, threads, seed);
    if (*bez) return cmd_bezout(out, k, threads, seed);
    if (*fac) return cmd_factor(out, k, ext, seed);
    if (*segre) return cmd_verify_segre(out, k);
    if (*ineq) return cmd_inequality_scan(out, i_max, ell_max);
    if (*vp) {
      VerifyOptions o;
      o.k_max = k_max;
      o.e_max = e_max;
      o.i_max = i_max;
      o.ell_max = ell_max;
      o.threads = threads;
      o.seed = seed;
      o.fail_fast = !keep_going;
      return cmd_verify_paper(out, o);
    }
  } catch (const PreconditionError& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 2;
}

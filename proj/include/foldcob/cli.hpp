#pragma once
// Command-line front end.  Every computation the library exposes is reachable
// through a subcommand; --report additionally writes a structured JSON file
// whose layout is stable across runs.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "foldcob/catalog.hpp"
#include "foldcob/charnum.hpp"
#include "foldcob/configio.hpp"
#include "foldcob/expr.hpp"
#include "foldcob/fgab.hpp"
#include "foldcob/foldgroups.hpp"
#include "foldcob/normalforms.hpp"
#include "foldcob/steenrod.hpp"
#include "foldcob/verify.hpp"

#ifndef FOLDCOB_DATA_DIR
#define FOLDCOB_DATA_DIR ""
#endif

namespace foldcob {
namespace cli {

using json = nlohmann::ordered_json;

inline ManifoldModel build_model(const std::string& expr) {
  return evaluate_manifold(expr, [](const std::string& p) {
    return load_structure_model_file(p);
  });
}

inline std::string fmt_real(double v) {
  std::ostringstream o;
  o << v;
  return o.str();
}

/// Looks an element up by generator name first, then by basis monomial name.
inline RingElement find_element(const RingPtr& r, const std::string& name) {
  for (std::size_t g = 0; g < r->generators.size(); ++g)
    if (r->generators[g].name == name) return generator_element(r, g);
  for (std::uint32_t b = 0; b < r->basis.size(); ++b)
    if (r->basis[b].name == name) return basis_element(r, b);
  throw std::invalid_argument("cli: no generator or basis monomial named '" + name + "'");
}

struct PsiChoice {
  std::function<double(double)> f;
  std::string label;
};

/// psi specs: psi1, psi2, const:<v>, poly:c0,c1,...
inline PsiChoice parse_psi(const std::string& spec, double epsilon, double plateau) {
  if (spec == "psi1") return {polynomial({0, 1, -1}), "psi1 = -s(s-1)"};
  if (spec == "psi2") {
    if (!(epsilon > 0 && epsilon < 0.25))
      throw std::invalid_argument("cli: psi2 needs 0 < epsilon < 1/4");
    auto bump = plateau_bump(epsilon, plateau);
    return {[bump](double s) { return bump(s) - s * (s - 1); }, "psi2 = C - s(s-1)"};
  }
  if (spec.rfind("const:", 0) == 0) {
    double v = std::stod(spec.substr(6));
    return {polynomial({v}), "const " + fmt_real(v)};
  }
  if (spec.rfind("poly:", 0) == 0) {
    std::vector<double> c;
    std::string rest = spec.substr(5);
    std::istringstream in(rest);
    std::string tok;
    while (std::getline(in, tok, ',')) c.push_back(std::stod(tok));
    return {polynomial(c), "poly " + rest};
  }
  throw std::invalid_argument("cli: unknown psi spec '" + spec +
                              "' (use psi1, psi2, const:<v>, poly:c0,c1,...)");
}

inline std::string describe_event(const CuspEvent& e) {
  std::ostringstream o;
  o << (e.birth ? "birth" : "death") << " at s = " << detail::fmt_double(e.s) << " (slope "
    << (e.slope_sign < 0 ? "-" : "+") << ", count " << e.count_before << " -> "
    << e.count_after << ")";
  return o.str();
}

inline json event_json(const CuspEvent& e) {
  return json{{"s", detail::fmt_double(e.s)},
              {"kind", e.birth ? "birth" : "death"},
              {"count_before", e.count_before},
              {"count_after", e.count_after}};
}

inline std::string describe_family(const FamilyReport& r) {
  std::ostringstream o;
  if (r.cusp_free)
    o << "cusp-free";
  else {
    o << r.cusp_count << (r.cusp_count == 1 ? " event: " : " events: ");
    for (int i = 0; i < r.cusp_count; ++i)
      o << (i ? ", " : "") << describe_event(r.scan.events[static_cast<std::size_t>(i)]);
  }
  o << "; counts " << r.scan.count_at_min << " -> " << r.scan.count_at_max;
  if (!r.scan.degenerate.empty()) o << "; " << r.scan.degenerate.size() << " degenerate";
  if (r.two_critical_points_throughout) o << "; two critical points throughout";
  return o.str();
}

inline json family_json(const FamilyReport& r) {
  json events = json::array();
  for (const auto& e : r.scan.events) events.push_back(event_json(e));
  return json{{"name", r.name},
              {"events", events},
              {"degenerate_touches", r.scan.degenerate.size()},
              {"count_at_min", r.scan.count_at_min},
              {"count_at_max", r.scan.count_at_max},
              {"cusp_free", r.cusp_free},
              {"two_critical_points_throughout", r.two_critical_points_throughout}};
}

inline void write_report(const std::string& path, const json& doc) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cli: cannot write report file " + path);
  out << doc.dump(2) << "\n";
}

/// Parses argv and runs one subcommand.  Returns the process exit code:
/// 0 on success, 1 when a computation rejects its input, 2 on usage errors.
inline int run_command(int argc, const char* const* argv) {
  CLI::App app{"exact characteristic-class and fold-singularity calculator"};
  app.require_subcommand(1);

  std::string report_path;
  app.add_option("--report", report_path, "write a structured JSON report to this file");

  int rc = 0;
  json doc;

  // normal-class <expr> [--degree d]
  std::string nc_expr;
  int nc_degree = -1;
  auto* nc = app.add_subcommand("normal-class", "total tangent and normal classes of a manifold");
  nc->add_option("expr", nc_expr, "manifold expression, e.g. \"Dold(1,2) x RP(2)\"")->required();
  nc->add_option("--degree", nc_degree, "print only this graded component");
  nc->fallthrough();
  nc->callback([&] {
    auto m = build_model(nc_expr);
    auto wbar = normal_sw_class(m);
    std::cout << "manifold: " << m.name << " (dimension " << m.dimension << ", "
              << (m.orientable ? "orientable" : "non-orientable") << ")\n";
    if (nc_degree >= 0) {
      std::cout << "w_" << nc_degree << "    = "
                << graded_component(m.sw, nc_degree).to_string() << "\n";
      std::cout << "wbar_" << nc_degree << " = "
                << graded_component(wbar, nc_degree).to_string() << "\n";
    } else {
      std::cout << "w    = " << m.sw.to_string() << "\n";
      std::cout << "wbar = " << wbar.to_string() << "\n";
    }
    doc = json{{"command", "normal-class"},
               {"inputs", json{{"expr", nc_expr}, {"degree", nc_degree}}},
               {"results",
                json{{"manifold", m.name},
                     {"dimension", m.dimension},
                     {"orientable", m.orientable},
                     {"tangent", nc_degree >= 0 ? graded_component(m.sw, nc_degree).to_string()
                                                : m.sw.to_string()},
                     {"normal", nc_degree >= 0 ? graded_component(wbar, nc_degree).to_string()
                                               : wbar.to_string()}}}};
  });

  // sw-number <expr> --partition i,j,...
  std::string swn_expr;
  std::vector<int> swn_partition;
  bool swn_normal = false;
  auto* swn = app.add_subcommand("sw-number", "Stiefel-Whitney number for a partition");
  swn->add_option("expr", swn_expr, "manifold expression")->required();
  swn->add_option("--partition", swn_partition, "degrees, e.g. 2,3")
      ->required()
      ->delimiter(',');
  swn->add_flag("--normal", swn_normal, "pair normal classes instead of tangent ones");
  swn->fallthrough();
  swn->callback([&] {
    auto m = build_model(swn_expr);
    int v = sw_number(m, swn_partition, swn_normal);
    std::ostringstream lbl;
    for (std::size_t i = 0; i < swn_partition.size(); ++i)
      lbl << (i ? " " : "") << (swn_normal ? "wbar_" : "w_") << swn_partition[i];
    std::cout << lbl.str() << " [" << m.name << "] = " << v << "\n";
    doc = json{{"command", "sw-number"},
               {"inputs", json{{"expr", swn_expr},
                               {"partition", swn_partition},
                               {"normal", swn_normal}}},
               {"results", json{{"manifold", m.name}, {"value", v}}}};
  });

  // cusp-parity <expr>
  std::string cp_expr;
  auto* cp = app.add_subcommand("cusp-parity",
                                "parity of the cusp count of a generic map of W^{4k+2} into "
                                "euclidean space of dimension 6k+2");
  cp->add_option("expr", cp_expr, "manifold expression of dimension 2 mod 4")->required();
  cp->fallthrough();
  cp->callback([&] {
    auto m = build_model(cp_expr);
    auto r = cusp_parity(m);
    std::cout << "manifold: " << r.manifold << " (dimension " << m.dimension << ", k = "
              << r.k << ")\n";
    std::cout << "summands (wbar_" << 2 * r.k + 1 << "^2, wbar_" << 2 * r.k + 2 << " wbar_"
              << 2 * r.k << ") = (" << r.square_summand << ", " << r.mixed_summand << ")\n";
    std::cout << "parity " << r.parity << "\n";
    doc = json{{"command", "cusp-parity"},
               {"inputs", json{{"expr", cp_expr}}},
               {"results", json{{"manifold", r.manifold},
                                {"k", r.k},
                                {"square_summand", r.square_summand},
                                {"mixed_summand", r.mixed_summand},
                                {"parity", r.parity}}}};
  });

  // pontryagin <expr>... (family of equal dimension 4m)
  std::vector<std::string> pg_exprs;
  auto* pg = app.add_subcommand("pontryagin",
                                "top normal Pontryagin number(s) and the three-power gcd test");
  pg->add_option("expr", pg_exprs, "one or more oriented manifolds of equal dimension 4m")
      ->required();
  pg->fallthrough();
  pg->callback([&] {
    std::vector<ManifoldModel> fam;
    for (const auto& e : pg_exprs) fam.push_back(build_model(e));
    if (fam.front().dimension % 4 != 0)
      throw std::invalid_argument("cli: pontryagin needs dimension divisible by 4, and dim " +
                                  fam.front().name + " = " +
                                  std::to_string(fam.front().dimension));
    int m = fam.front().dimension / 4;
    auto r = pontryagin_gcd_estimate(m, fam);
    json values = json::array();
    for (std::size_t i = 0; i < fam.size(); ++i) {
      std::cout << "pbar_" << m << " [" << fam[i].name << "] = " << r.values[i] << "\n";
      values.push_back(json{{"manifold", fam[i].name}, {"value", r.values[i]}});
    }
    std::cout << "gcd = " << r.gcd << "; t(" << m << ") = " << r.t << ", 3^t = "
              << r.three_pow_t << "; divisible by 3^t: " << (r.divisible ? "yes" : "no")
              << "; equal to 3^t: " << (r.exact ? "yes" : "no") << "\n";
    doc = json{{"command", "pontryagin"},
               {"inputs", json{{"exprs", pg_exprs}}},
               {"results", json{{"m", m},
                                {"values", values},
                                {"gcd", r.gcd},
                                {"t", r.t},
                                {"three_pow_t", r.three_pow_t},
                                {"divisible", r.divisible},
                                {"exact", r.exact}}}};
  });

  // cusp-count <expr>
  std::string cc_expr;
  auto* cc = app.add_subcommand("cusp-count",
                                "algebraic cusp count (dim 4m) or cusp parity (dim 4k+2) of a "
                                "generic map to the fold-dimension euclidean target");
  cc->add_option("expr", cc_expr, "manifold expression")->required();
  cc->fallthrough();
  cc->callback([&] {
    auto m = build_model(cc_expr);
    if (m.dimension % 4 == 0 && m.dimension > 0) {
      int mm = m.dimension / 4;
      auto v = normal_pontryagin_number(m, mm);
      std::cout << "manifold: " << m.name << " (dimension " << m.dimension << ")\n";
      std::cout << "algebraic cusp count of a generic map to R^" << 6 * mm - 1 << ": pbar_"
                << mm << " [" << m.name << "] = " << v << "\n";
      doc = json{{"command", "cusp-count"},
                 {"inputs", json{{"expr", cc_expr}}},
                 {"results", json{{"manifold", m.name},
                                  {"mode", "algebraic"},
                                  {"target", "R^" + std::to_string(6 * mm - 1)},
                                  {"value", v}}}};
    } else if (m.dimension % 4 == 2) {
      auto r = cusp_parity(m);
      std::cout << "manifold: " << m.name << " (dimension " << m.dimension << ")\n";
      std::cout << "cusp parity of a generic map to R^" << 6 * r.k + 2 << ": " << r.parity
                << " (summands " << r.square_summand << ", " << r.mixed_summand << ")\n";
      doc = json{{"command", "cusp-count"},
                 {"inputs", json{{"expr", cc_expr}}},
                 {"results", json{{"manifold", m.name},
                                  {"mode", "parity"},
                                  {"target", "R^" + std::to_string(6 * r.k + 2)},
                                  {"value", r.parity}}}};
    } else {
      throw std::invalid_argument(
          "cli: cusp-count needs dimension 0 or 2 mod 4, and dim " + m.name + " = " +
          std::to_string(m.dimension));
    }
  });

  // group / bordism-group --n N --k K [--oriented] [--table file]
  int g_n = 0, g_k = 0;
  bool g_oriented = false;
  std::string g_table;
  auto add_group_options = [&](CLI::App* sub) {
    sub->add_option("--n", g_n, "source dimension n")->required();
    sub->add_option("--k", g_k, "codimension k of the target, n = 2k+1")->required();
    sub->add_flag("--oriented", g_oriented, "oriented sources");
    sub->add_option("--table", g_table, "bordism table file used to expand symbolic summands");
    sub->fallthrough();
  };
  auto run_group = [&](const char* name, GroupExpression (*fn)(int, int, bool)) {
    GroupExpression e = fn(g_n, g_k, g_oriented);
    if (!g_table.empty()) e = expand_with_table(e, load_bordism_table_file(g_table));
    std::cout << e.to_string() << "\n";
    doc = json{{"command", name},
               {"inputs", json{{"n", g_n},
                               {"k", g_k},
                               {"oriented", g_oriented},
                               {"table", g_table}}},
               {"results", json{{"group", e.to_string()}}}};
  };
  auto* gr = app.add_subcommand("group", "cobordism group of fold maps into euclidean space");
  add_group_options(gr);
  gr->callback([&] { run_group("group", fold_cobordism_group); });
  auto* bg = app.add_subcommand("bordism-group",
                                "bordism group of fold maps (source and target both move)");
  add_group_options(bg);
  bg->callback([&] { run_group("bordism-group", fold_bordism_group); });

  // target-group --n N --target profile [--oriented]
  int tg_n = 0;
  bool tg_oriented = false;
  std::string tg_profile;
  auto* tg = app.add_subcommand("target-group",
                                "cobordism group of fold maps into a fixed closed target");
  tg->add_option("--n", tg_n, "source dimension n (odd)")->required();
  tg->add_option("--target", tg_profile, "homology profile file for the target")->required();
  tg->add_flag("--oriented", tg_oriented, "oriented sources");
  tg->fallthrough();
  tg->callback([&] {
    auto p = load_homology_profile_file(tg_profile);
    auto e = target_fold_group(tg_n, p, tg_oriented);
    std::cout << e.to_string() << "\n";
    doc = json{{"command", "target-group"},
               {"inputs", json{{"n", tg_n},
                               {"target", tg_profile},
                               {"profile", p.name},
                               {"oriented", tg_oriented}}},
               {"results", json{{"group", e.to_string()}}}};
  });

  // steenrod <expr> --op i,j,... [--on name]
  std::string st_expr, st_on;
  std::vector<int> st_ops;
  auto* st = app.add_subcommand("steenrod", "apply a composite of squares to a class");
  st->add_option("expr", st_expr, "manifold expression")->required();
  st->add_option("--op", st_ops, "square indices left to right, e.g. 4,2 for Sq^4 Sq^2")
      ->required()
      ->delimiter(',');
  st->add_option("--on", st_on, "generator or basis monomial to act on (default: first generator)");
  st->fallthrough();
  st->callback([&] {
    auto m = build_model(st_expr);
    SteenrodContext ctx(m);
    RingElement x = st_on.empty() ? generator_element(m.ring, 0) : find_element(m.ring, st_on);
    std::string xname = st_on.empty() ? m.ring->generators[0].name : st_on;
    RingElement out = x;
    for (auto i = st_ops.rbegin(); i != st_ops.rend(); ++i) out = ctx.sq(*i, out);
    std::ostringstream lbl;
    for (int i : st_ops) lbl << "Sq^" << i << " ";
    lbl << xname;
    auto paired = pair_with_fundamental_class(out);
    std::cout << lbl.str() << " = " << out.to_string() << "\n";
    std::cout << "<" << lbl.str() << ", [" << m.name << "]> = " << paired << "\n";
    doc = json{{"command", "steenrod"},
               {"inputs", json{{"expr", st_expr}, {"op", st_ops}, {"on", xname}}},
               {"results", json{{"manifold", m.name},
                                {"value", out.to_string()},
                                {"paired", paired}}}};
  });

  // wu-check <expr>
  std::string wc_expr;
  auto* wc = app.add_subcommand("wu-check",
                                "Wu class and the consistency of w with the square action");
  wc->add_option("expr", wc_expr, "manifold expression")->required();
  wc->fallthrough();
  wc->callback([&] {
    auto m = build_model(wc_expr);
    SteenrodContext ctx(m);
    auto v = wu_class(ctx);
    auto sqv = ctx.total_sq(v);
    bool ok = wu_check(ctx);
    std::cout << "manifold: " << m.name << " (dimension " << m.dimension << ")\n";
    std::cout << "wu class v = " << v.to_string() << "\n";
    std::cout << "Sq(v)      = " << sqv.to_string() << "\n";
    std::cout << "w          = " << m.sw.to_string() << "\n";
    std::cout << "consistent: " << (ok ? "yes" : "no") << "\n";
    doc = json{{"command", "wu-check"},
               {"inputs", json{{"expr", wc_expr}}},
               {"results", json{{"manifold", m.name},
                                {"wu", v.to_string()},
                                {"sq_wu", sqv.to_string()},
                                {"w", m.sw.to_string()},
                                {"consistent", ok}}}};
    if (!ok) rc = 1;
  });

  // normal-form: --eval | --scan | --scenario
  bool nf_eval = false, nf_scenario = false;
  std::string nf_scan;
  int nf_k = 1, nf_samples = 2000;
  std::vector<double> nf_t;
  double nf_s = 0, nf_x = 0, nf_min = -0.25, nf_max = 1.25;
  double nf_epsilon = 0.1, nf_plateau = -1.0 / 3.0, nf_tolerance = 1e-9;
  auto* nf = app.add_subcommand("normal-form",
                                "evaluate the cusp normal form or scan one-parameter families");
  nf->add_flag("--eval", nf_eval, "evaluate the degree-k normal form at a point");
  nf->add_option("--scan", nf_scan, "scan a family: psi1, psi2, const:<v>, poly:c0,c1,...");
  nf->add_flag("--scenario", nf_scenario, "run the paired two-family comparison");
  nf->add_option("--k", nf_k, "normal-form degree k (eval)");
  nf->add_option("--t", nf_t, "2k unfolding coordinates (eval)")->delimiter(',');
  nf->add_option("--s", nf_s, "family parameter (eval)");
  nf->add_option("--x", nf_x, "source coordinate (eval)");
  nf->add_option("--min", nf_min, "scan range start");
  nf->add_option("--max", nf_max, "scan range end");
  nf->add_option("--samples", nf_samples, "scan sample count");
  nf->add_option("--tolerance", nf_tolerance, "zero-classification tolerance");
  nf->add_option("--epsilon", nf_epsilon, "ramp width for psi2 and the scenario");
  nf->add_option("--plateau", nf_plateau, "plateau level for psi2 and the scenario");
  nf->fallthrough();
  nf->callback([&] {
    int modes = (nf_eval ? 1 : 0) + (nf_scan.empty() ? 0 : 1) + (nf_scenario ? 1 : 0);
    if (modes != 1)
      throw CLI::ValidationError("normal-form",
                                 "choose exactly one of --eval, --scan, --scenario");
    if (nf_eval) {
      auto img = eval_morin(MorinCuspMap{nf_k}, nf_t, nf_s, nf_x);
      std::ostringstream ys, zs;
      for (std::size_t i = 0; i < img.y.size(); ++i) ys << (i ? ", " : "") << fmt_real(img.y[i]);
      for (std::size_t i = 0; i < img.z.size(); ++i) zs << (i ? ", " : "") << fmt_real(img.z[i]);
      std::cout << "y = (" << ys.str() << ")\n";
      std::cout << "z = (" << zs.str() << ")\n";
      std::cout << "u = " << fmt_real(img.u) << "\n";
      doc = json{{"command", "normal-form"},
                 {"inputs", json{{"mode", "eval"},
                                 {"k", nf_k},
                                 {"t", nf_t},
                                 {"s", nf_s},
                                 {"x", nf_x}}},
                 {"results", json{{"y", img.y}, {"z", img.z}, {"u", img.u}}}};
    } else if (!nf_scan.empty()) {
      auto choice = parse_psi(nf_scan, nf_epsilon, nf_plateau);
      FamilyModel fam;
      fam.name = choice.label;
      fam.psi = choice.f;
      fam.s_min = nf_min;
      fam.s_max = nf_max;
      fam.sample_count = nf_samples;
      fam.tolerance = nf_tolerance;
      auto r = scan_family(fam);
      std::cout << "family " << choice.label << " on [" << fmt_real(nf_min) << ", "
                << fmt_real(nf_max) << "], " << nf_samples << " samples\n";
      std::cout << describe_family(r) << "\n";
      doc = json{{"command", "normal-form"},
                 {"inputs", json{{"mode", "scan"},
                                 {"psi", nf_scan},
                                 {"min", nf_min},
                                 {"max", nf_max},
                                 {"samples", nf_samples}}},
                 {"results", family_json(r)}};
    } else {
      auto r = two_family_scenario(nf_epsilon, nf_plateau, nf_samples > 2000 ? nf_samples : 4000);
      std::cout << "epsilon = " << fmt_real(r.epsilon) << ", plateau = " << fmt_real(r.plateau)
                << "\n";
      std::cout << "psi1 = -s(s-1):    " << describe_family(r.psi1) << "\n";
      std::cout << "psi2 = C - s(s-1): " << describe_family(r.psi2) << "\n";
      std::cout << "dichotomy (one cusp-free, one with a cancelling pair): "
                << (r.dichotomy ? "yes" : "no") << "\n";
      std::cout << "roles as described: " << (r.roles_as_described ? "yes" : "no") << "\n";
      doc = json{{"command", "normal-form"},
                 {"inputs", json{{"mode", "scenario"},
                                 {"epsilon", nf_epsilon},
                                 {"plateau", nf_plateau}}},
                 {"results", json{{"psi1", family_json(r.psi1)},
                                  {"psi2", family_json(r.psi2)},
                                  {"dichotomy", r.dichotomy},
                                  {"roles_as_described", r.roles_as_described},
                                  {"flipped_scanned", r.flipped_scanned}}}};
      if (r.flipped_scanned) {
        std::cout << "sign-flipped variants:\n";
        std::cout << "  -psi1 = s(s-1):    " << describe_family(r.flipped1) << "\n";
        std::cout << "  -psi2 = s(s-1) - C: " << describe_family(r.flipped2) << "\n";
        doc["results"]["flipped1"] = family_json(r.flipped1);
        doc["results"]["flipped2"] = family_json(r.flipped2);
      }
    }
  });

  // verify-paper [--data-dir dir]
  std::string vp_data = FOLDCOB_DATA_DIR;
  auto* vp = app.add_subcommand("verify-paper",
                                "replay the bundled verification suite and print one line per "
                                "claim");
  vp->add_option("--data-dir", vp_data, "directory holding optional ring presentations");
  vp->fallthrough();
  vp->callback([&] {
    auto rep = run_verification(vp_data);
    std::cout << render_verification(rep);
    json items = json::array();
    for (const auto& it : rep.items)
      items.push_back(json{{"id", it.id},
                           {"title", it.title},
                           {"inputs", it.inputs},
                           {"computed", it.computed},
                           {"expected", it.expected},
                           {"kind", it.kind},
                           {"status", it.status}});
    doc = json{{"command", "verify-paper"},
               {"inputs", json{{"data_dir", vp_data}}},
               {"results", json{{"items", items},
                                {"passed", rep.passed},
                                {"failed", rep.failed},
                                {"skipped", rep.skipped}}}};
    if (!rep.ok()) rc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "foldcob: " << e.what() << "\n";
    return 1;
  }
  write_report(report_path, doc);
  return rc;
}

}  // namespace cli

using cli::run_command;

}  // namespace foldcob

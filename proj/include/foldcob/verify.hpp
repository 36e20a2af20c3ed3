#pragma once
// Batch verification suite: one record per headline computation, runnable
// from the CLI (verify-paper) or the standalone acceptance binary.  Every
// item is deterministic, so two runs render byte-identical reports.

#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "foldcob/catalog.hpp"
#include "foldcob/charnum.hpp"
#include "foldcob/configio.hpp"
#include "foldcob/expr.hpp"
#include "foldcob/fgab.hpp"
#include "foldcob/foldgroups.hpp"
#include "foldcob/normalforms.hpp"
#include "foldcob/steenrod.hpp"

namespace foldcob {

struct VerifyItem {
  std::string id;
  std::string title;
  std::string inputs;
  std::string computed;
  std::string expected;
  std::string kind;    // "reference": checked against the cited literature
                       // value; "derived": fixed by this library's own oracle
  std::string status;  // PASS / FAIL / SKIP
  std::string message;
};

struct VerifyReport {
  std::vector<VerifyItem> items;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  bool ok() const { return failed == 0; }
};

namespace detail {

inline std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

template <class Body>
inline void run_verify_item(VerifyReport& rep, const char* id, const char* title,
                            const char* kind, Body&& body) {
  VerifyItem item;
  item.id = id;
  item.title = title;
  item.kind = kind;
  bool ok = false;
  try {
    ok = body(item);
  } catch (const std::exception& e) {
    ok = false;
    item.status.clear();
    item.message = e.what();
  }
  if (item.status.empty()) item.status = ok ? "PASS" : "FAIL";
  if (item.status == "PASS")
    ++rep.passed;
  else if (item.status == "SKIP")
    ++rep.skipped;
  else
    ++rep.failed;
  rep.items.push_back(std::move(item));
}

inline HomologyProfile sphere_profile(int n) {
  HomologyProfile p;
  p.name = "S" + std::to_string(n);
  p.dimension = n;
  p.orientable = true;
  p.groups.assign(static_cast<std::size_t>(n) + 1, FGAbGroup{});
  p.groups.front() = FGAbGroup{1, {}};
  p.groups.back() = FGAbGroup{1, {}};
  return p;
}

}  // namespace detail

/// Runs the whole suite.  `data_dir` points at optional ring presentations;
/// the Wall manifold item is skipped (not failed) when the file is absent.
inline VerifyReport run_verification(const std::string& data_dir = "") {
  using detail::fmt_double;
  using detail::run_verify_item;
  VerifyReport rep;

  run_verify_item(rep, "A1", "normal numbers of the real projective plane", "reference",
                  [](VerifyItem& it) {
                    auto rp2 = real_projective(2);
                    int n11 = sw_number(rp2, {1, 1}, true);
                    int n2 = sw_number(rp2, {2}, true);
                    std::ostringstream c;
                    c << "wbar_1 wbar_1 [RP(2)] = " << n11 << ", wbar_2 [RP(2)] = " << n2;
                    it.inputs = "RP(2); normal-class partitions (1,1) and (2)";
                    it.computed = c.str();
                    it.expected = "wbar_1 wbar_1 [RP(2)] = 1, wbar_2 [RP(2)] = 0";
                    return n11 == 1 && n2 == 0;
                  });

  run_verify_item(rep, "A2", "tangent numbers of the five-dimensional Dold manifold",
                  "reference", [](VerifyItem& it) {
                    auto y = dold(1, 2);
                    bool w1 = graded_component(y.sw, 1).is_zero();
                    bool w5 = graded_component(y.sw, 5).is_zero();
                    int n23 = sw_number(y, {2, 3}, false);
                    std::ostringstream c;
                    c << "w_1 = " << (w1 ? "0" : "nonzero") << ", w_5 = "
                      << (w5 ? "0" : "nonzero") << ", w_2 w_3 [Dold(1,2)] = " << n23;
                    it.inputs = "Dold(1,2); classes w_1, w_5; number w_2 w_3";
                    it.computed = c.str();
                    it.expected = "w_1 = 0, w_5 = 0, w_2 w_3 [Dold(1,2)] = 1";
                    return w1 && w5 && n23 == 1;
                  });

  run_verify_item(rep, "A3", "cusp parity of squared products", "reference",
                  [](VerifyItem& it) {
                    auto r1 = cusp_parity(evaluate_manifold("Dold(1,2)^2"));
                    auto r2 = cusp_parity(evaluate_manifold("(Dold(1,2) x RP(2))^2"));
                    std::ostringstream c;
                    c << "Dold(1,2)^2: summands (" << r1.square_summand << ", "
                      << r1.mixed_summand << "), parity " << r1.parity
                      << "; (Dold(1,2) x RP(2))^2: parity " << r2.parity;
                    it.inputs = "Dold(1,2)^2; (Dold(1,2) x RP(2))^2";
                    it.computed = c.str();
                    it.expected =
                        "Dold(1,2)^2: summands (0, 1), parity 1; (Dold(1,2) x RP(2))^2: "
                        "parity 1";
                    return r1.square_summand == 0 && r1.mixed_summand == 1 && r1.parity == 1 &&
                           r2.parity == 1;
                  });

  run_verify_item(
      rep, "A4", "odd-degree square summand vanishes on squares", "reference",
      [](VerifyItem& it) {
        const std::vector<std::string> odd = {"S(1)",      "S(3)",      "RP(3)", "RP(7)",
                                              "Dold(1,2)", "Dold(1,2) x RP(2)"};
        bool all = true;
        std::ostringstream c;
        for (std::size_t i = 0; i < odd.size(); ++i) {
          auto n = evaluate_manifold(odd[i]);
          auto sq = cusp_parity(product(n, n));
          all = all && sq.square_summand == 0;
          bool compound = odd[i].find(" x ") != std::string::npos;
          c << (i ? ", " : "") << (compound ? "(" : "") << odd[i] << (compound ? ")" : "")
            << "^2: " << sq.square_summand;
        }
        it.inputs = "six odd-dimensional catalog manifolds, each squared";
        it.computed = c.str();
        it.expected = "square summand 0 on every square";
        return all;
      });

  run_verify_item(rep, "A5", "iterated squares pair to one on complex projective four-space",
                  "reference", [](VerifyItem& it) {
                    auto cp4 = complex_projective(4);
                    SteenrodContext ctx(cp4);
                    auto a = generator_element(cp4.ring, 0);
                    auto v = ctx.sq(4, ctx.sq(2, a));
                    auto n = pair_with_fundamental_class(v);
                    std::ostringstream c;
                    c << "<Sq^4 Sq^2 a, [CP(4)]> = " << n;
                    it.inputs = "CP(4); degree-2 generator a";
                    it.computed = c.str();
                    it.expected = "<Sq^4 Sq^2 a, [CP(4)]> = 1";
                    return n == 1;
                  });

  run_verify_item(rep, "A6", "triadic invariant sample values", "reference",
                  [](VerifyItem& it) {
                    int t1 = t_invariant(1);
                    int t8 = t_invariant(8);
                    std::ostringstream c;
                    c << "t(1) = " << t1 << ", t(8) = " << t8;
                    it.inputs = "m = 1; m = 8";
                    it.computed = c.str();
                    it.expected = "t(1) = 1, t(8) = 2";
                    return t1 == 1 && t8 == 2;
                  });

  run_verify_item(
      rep, "A7", "normal Pontryagin numbers and their three-power gcd", "derived",
      [](VerifyItem& it) {
        auto p1 = normal_pontryagin_number(complex_projective(2), 1);
        auto fam = std::vector<ManifoldModel>{
            complex_projective(4), product(complex_projective(2), complex_projective(2))};
        auto g = pontryagin_gcd_estimate(2, fam);
        std::ostringstream c;
        c << "pbar_1 [CP(2)] = " << p1 << "; pbar_2 values " << g.values[0] << ", "
          << g.values[1] << "; gcd " << g.gcd << " vs 3^t(2) = " << g.three_pow_t;
        it.inputs = "CP(2); CP(4); CP(2) x CP(2)";
        it.computed = c.str();
        it.expected = "|pbar_1 [CP(2)]| = 3 = 3^t(1); gcd(15, 9) = 3 = 3^t(2)";
        bool first = (p1 == 3 || p1 == -3) && pow3(t_invariant(1)) == 3;
        return first && g.gcd == 3 && g.exact;
      });

  run_verify_item(
      rep, "A8", "fold map group assembly", "reference", [](VerifyItem& it) {
        std::string c1 = fold_cobordism_group(1, 0, true).to_string();
        std::string c5 = fold_cobordism_group(5, 2, true).to_string();
        std::string c7 = fold_cobordism_group(7, 3, true).to_string();
        std::string u9 = fold_cobordism_group(9, 4, false).to_string();
        std::string b5 = fold_bordism_group(5, 2, true).to_string();
        std::string t1 = target_fold_group(1, detail::sphere_profile(1), true).to_string();
        std::ostringstream c;
        c << "(1,0) or: " << c1 << "; (5,2) or: " << c5 << "; (7,3) or: " << c7
          << "; (9,4) unor: " << u9 << "; bordism (5,2) or: " << b5 << "; circle target: "
          << t1;
        it.inputs = "(n,k) = (1,0), (5,2), (7,3) oriented, (9,4) unoriented; "
                    "bordism (5,2); circle target, n = 1";
        it.computed = c.str();
        it.expected = "(1,0) or: Z2; (5,2) or: Z2 + Z2; (7,3) or: Omega(7) + Z(3^1); "
                      "(9,4) unor: N(9); bordism (5,2) or: Z2; circle target: Z + Z2";
        return c1 == "Z2" && c5 == "Z2 + Z2" && c7 == "Omega(7) + Z(3^1)" && u9 == "N(9)" &&
               b5 == "Z2" && t1 == "Z + Z2";
      });

  run_verify_item(
      rep, "A9", "seven-dimensional target condition", "reference", [](VerifyItem& it) {
        auto s7 = detail::sphere_profile(7);
        auto holds7 = target_condition_dim7(s7);

        HomologyProfile s1s6;
        s1s6.name = "S1 x S6";
        s1s6.dimension = 7;
        s1s6.orientable = true;
        s1s6.groups.assign(8, FGAbGroup{});
        s1s6.groups[0] = FGAbGroup{1, {}};
        s1s6.groups[1] = FGAbGroup{1, {}};
        s1s6.groups[6] = FGAbGroup{1, {}};
        s1s6.groups[7] = FGAbGroup{1, {}};
        auto fails16 = target_condition_dim7(s1s6);

        std::mt19937 rng(4242);
        std::uniform_int_distribution<int> rank(0, 2);
        std::uniform_int_distribution<int> tcount(0, 2);
        const std::int64_t pool[] = {2, 3, 4, 5, 6, 9};
        std::uniform_int_distribution<int> pick(0, 5);
        int agree = 0;
        for (int trial = 0; trial < 100; ++trial) {
          HomologyProfile p;
          p.dimension = 7;
          p.groups.assign(8, FGAbGroup{});
          p.groups[0] = FGAbGroup{1, {}};
          p.groups[7] = FGAbGroup{1, {}};
          for (int j = 1; j <= 5; ++j) {
            FGAbGroup g;
            g.free_rank = rank(rng);
            int n = tcount(rng);
            for (int i = 0; i < n; ++i) g.torsion.push_back(pool[pick(rng)]);
            p.groups[static_cast<std::size_t>(j)] = normalize(g);
          }
          p.groups[6] = FGAbGroup{p.groups[1].free_rank, {}};
          bool via_condition = target_condition_dim7(p).holds;
          bool via_bordism = hom_z2(omega6_of_target(p).group).is_trivial();
          if (via_condition == via_bordism) ++agree;
        }

        std::ostringstream c;
        c << "S7: " << (holds7.holds ? "holds" : "fails") << "; S1 x S6: "
          << (fails16.holds ? "holds" : "fails") << " with witness " << fails16.witness
          << "; bordism agreement " << agree << "/100";
        it.inputs = "profiles S7 and S1 x S6; 100 seeded random duality-closed profiles";
        it.computed = c.str();
        it.expected =
            "S7: holds; S1 x S6: fails with witness H_1(P; Z/2) = Z2; bordism agreement "
            "100/100";
        return holds7.holds && !fails16.holds && fails16.witness == "H_1(P; Z/2) = Z2" &&
               agree == 100;
      });

  run_verify_item(
      rep, "A10", "Wu consistency sweep", "derived", [](VerifyItem& it) {
        const std::vector<std::string> catalog = {
            "RP(2)", "RP(3)", "RP(4)", "CP(1)",     "CP(2)",     "CP(3)",
            "S(1)",  "S(2)",  "S(3)",  "S(4)",      "Dold(1,2)", "Dold(2,1)"};
        int pass = 0;
        for (const auto& name : catalog)
          if (wu_check(SteenrodContext(evaluate_manifold(name)))) ++pass;

        const std::vector<std::string> pool = {"RP(2)", "RP(3)", "CP(1)",    "CP(2)",
                                               "S(1)",  "S(3)",  "Dold(1,2)"};
        std::mt19937 rng(9090);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        int ppass = 0;
        std::ostringstream tried;
        for (int trial = 0; trial < 10; ++trial) {
          std::string expr = pool[pick(rng)] + " x " + pool[pick(rng)];
          if (wu_check(SteenrodContext(evaluate_manifold(expr)))) ++ppass;
          tried << (trial ? ", " : "") << expr;
        }
        std::ostringstream c;
        c << "catalog " << pass << "/" << catalog.size() << "; products " << ppass << "/10 ("
          << tried.str() << ")";
        it.inputs = "twelve catalog models; 10 seeded random two-factor products";
        it.computed = c.str();
        it.expected = "catalog 12/12; products 10/10";
        return pass == static_cast<int>(catalog.size()) && ppass == 10;
      });

  run_verify_item(
      rep, "A11", "one-parameter cusp scan", "derived", [](VerifyItem& it) {
        FamilyModel fam;
        fam.name = "s(s-1)";
        fam.psi = polynomial({0, -1, 1});
        fam.s_min = -0.25;
        fam.s_max = 1.25;
        auto scan = detect_cusps(fam);
        bool shape = scan.events.size() == 2 && !scan.events[0].birth &&
                     std::fabs(scan.events[0].s) < 1e-9 && scan.events[1].birth &&
                     std::fabs(scan.events[1].s - 1.0) < 1e-9;

        FamilyModel flat;
        flat.name = "-1";
        flat.psi = polynomial({-1});
        auto fscan = detect_cusps(flat);
        bool fold_only = fscan.events.empty() && fscan.count_at_min == 2 &&
                         fscan.count_at_max == 2;

        std::mt19937 rng(3137);
        std::uniform_int_distribution<int> deg(1, 4);
        std::uniform_int_distribution<int> coeff(-3, 3);
        int scans = 0, held = 0, attempts = 0;
        while (scans < 200 && attempts < 4000) {
          ++attempts;
          std::vector<double> c(static_cast<std::size_t>(deg(rng)) + 1);
          bool allzero = true;
          for (auto& v : c) {
            v = coeff(rng);
            allzero = allzero && v == 0;
          }
          if (allzero) continue;
          FamilyModel f;
          f.psi = polynomial(c);
          f.s_min = -1.5;
          f.s_max = 1.5;
          f.sample_count = 3000;
          CuspScan s;
          try {
            s = detect_cusps(f);
          } catch (const std::exception&) {
            continue;  // endpoint zero or coarse sampling; draw again
          }
          ++scans;
          int births = 0, deaths = 0;
          for (const auto& e : s.events) (e.birth ? births : deaths)++;
          if (s.count_at_max - s.count_at_min == 2 * (deaths - births)) ++held;
        }

        std::ostringstream c;
        c << "s(s-1): ";
        for (std::size_t i = 0; i < scan.events.size(); ++i)
          c << (i ? ", " : "") << (scan.events[i].birth ? "birth" : "death") << " at "
            << fmt_double(scan.events[i].s);
        c << "; constant -1: " << fscan.events.size() << " events, " << fscan.count_at_min
          << " critical points throughout; parity invariant " << held << "/" << scans;
        it.inputs = "s(s-1) on [-0.25, 1.25]; constant -1; 200 seeded polynomial families";
        it.computed = c.str();
        it.expected =
            "s(s-1): death at 0.000000, birth at 1.000000; constant -1: 0 events, 2 "
            "critical points throughout; parity invariant 200/200";
        return shape && fold_only && scans == 200 && held == 200;
      });

  run_verify_item(
      rep, "A12", "Wall manifold relation", "reference", [&data_dir](VerifyItem& it) {
        it.expected = "summands (1, 1), sum 0 mod 2";
        std::filesystem::path path;
        if (!data_dir.empty()) path = std::filesystem::path(data_dir) / "wall_x6.ring";
        if (path.empty() || !std::filesystem::exists(path)) {
          it.status = "SKIP";
          it.inputs = path.empty() ? "no data directory given" : path.string();
          it.computed = "ring presentation not provided";
          return true;
        }
        it.inputs = path.string();
        auto x6 = load_structure_model_file(path.string());
        auto r = cusp_parity(x6);
        std::ostringstream c;
        c << x6.name << ": summands (" << r.square_summand << ", " << r.mixed_summand
          << "), sum " << r.parity << " mod 2";
        it.computed = c.str();
        return r.square_summand == 1 && r.mixed_summand == 1 && r.parity == 0;
      });

  return rep;
}

/// Plain-text rendering, one block per item, stable across runs.
inline std::string render_verification(const VerifyReport& rep) {
  std::ostringstream o;
  for (const auto& it : rep.items) {
    o << it.id;
    for (std::size_t i = it.id.size(); i < 4; ++i) o << ' ';
    o << it.status;
    for (std::size_t i = it.status.size(); i < 6; ++i) o << ' ';
    o << it.title << "\n";
    o << "      inputs:   " << it.inputs << "\n";
    o << "      computed: " << it.computed << "\n";
    o << "      expected: " << it.expected << "\n";
    if (!it.message.empty()) o << "      error:    " << it.message << "\n";
  }
  o << rep.passed << " passed, " << rep.failed << " failed, " << rep.skipped << " skipped\n";
  return o.str();
}

}  // namespace foldcob

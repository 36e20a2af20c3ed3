#pragma once

// Numeric side of the local theory: evaluation of the cusp normal form, and
// a scanner that finds birth/death events of fold-point pairs in a
// 1-parameter family x^3 + psi(s) x of functions.

#include <cmath>
#include <cstddef>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace foldcob {

/// The cusp normal form around a point of the singular locus: source
/// coordinates (t_1..t_2k, s, x), target coordinates (y_1..y_{2k+1}, z_1..z_k, u).
struct MorinCuspMap {
  int k = 0;
};

struct MorinImage {
  std::vector<double> y;  // 2k+1 entries, the last equal to s
  std::vector<double> z;  // k entries, z_j = x t_{2j-1} + x^2 t_{2j}
  double u = 0;           // x (x^2 + s)
};

inline MorinImage eval_morin(const MorinCuspMap& map, const std::vector<double>& t, double s,
                             double x) {
  if (map.k < 0) throw std::invalid_argument("normalforms: k must be >= 0");
  if (static_cast<int>(t.size()) != 2 * map.k) {
    std::ostringstream o;
    o << "normalforms: expected " << 2 * map.k << " t-coordinates, got " << t.size();
    throw std::invalid_argument(o.str());
  }
  MorinImage out;
  out.y = t;
  out.y.push_back(s);
  for (int j = 1; j <= map.k; ++j)
    out.z.push_back(x * t[2 * j - 2] + x * x * t[2 * j - 1]);
  out.u = x * (x * x + s);
  return out;
}

/// Number of critical points of x -> x^3 + psi x: two for psi < 0, one
/// degenerate point at psi = 0, none for psi > 0.  Values within tolerance
/// of zero count as the degenerate case.
inline int critical_points(double psi, double tolerance = 0.0) {
  if (std::fabs(psi) <= tolerance) return 1;
  return psi < 0 ? 2 : 0;
}

/// Horner evaluation; coefficient i multiplies s^i.
inline std::function<double(double)> polynomial(std::vector<double> coefficients) {
  if (coefficients.empty())
    throw std::invalid_argument("normalforms: polynomial needs at least one coefficient");
  return [c = std::move(coefficients)](double s) {
    double v = 0;
    for (std::size_t i = c.size(); i > 0; --i) v = v * s + c[i - 1];
    return v;
  };
}

struct FamilyModel {
  std::string name;
  std::function<double(double)> psi;
  double s_min = 0;
  double s_max = 1;
  int sample_count = 2000;
  double tolerance = 1e-9;
};

/// A transverse zero of psi.  The slope decides the label: negative slope
/// destroys the pair of critical points (death), positive slope creates it
/// (birth).  Counts refer to critical points of the x-family just before and
/// after the crossing.
struct CuspEvent {
  double s = 0;
  int slope_sign = 0;
  bool birth = false;
  int count_before = 0;
  int count_after = 0;
};

struct CuspScan {
  std::vector<CuspEvent> events;
  std::vector<double> degenerate;  // touches of zero without a sign change
  int count_at_min = 0;
  int count_at_max = 0;
};

namespace detail {

inline int fuzzy_sign(double v, double tolerance) {
  if (std::fabs(v) <= tolerance) return 0;
  return v < 0 ? -1 : 1;
}

// Each coarse interval is probed on a finer grid; more than one slope
// reversal, or any zero crossing invisible at the coarse endpoints, means
// the scan resolution cannot separate the events.
inline void check_interval_resolution(const FamilyModel& fam, double a, double b, int sign_a,
                                      int sign_b) {
  constexpr int kSub = 16;
  double prev = fam.psi(a);
  double prev_slope = 0;
  int slope_flips = 0;
  int value_flips = 0;
  int prev_value_sign = fuzzy_sign(prev, fam.tolerance);
  for (int i = 1; i <= kSub; ++i) {
    double s = a + (b - a) * i / kSub;
    double v = fam.psi(s);
    double slope = v - prev;
    if (slope != 0) {
      if (prev_slope != 0 && (slope < 0) != (prev_slope < 0)) ++slope_flips;
      prev_slope = slope;
    }
    int vs = fuzzy_sign(v, fam.tolerance);
    if (vs != 0 && prev_value_sign != 0 && vs != prev_value_sign) ++value_flips;
    if (vs != 0) prev_value_sign = vs;
    prev = v;
  }
  bool hidden_crossing = value_flips > (sign_a != sign_b && sign_a != 0 && sign_b != 0 ? 1 : 0);
  if (slope_flips >= 2 || hidden_crossing) {
    std::ostringstream o;
    o << "normalforms: sampling too coarse near s in [" << a << ", " << b
      << "]: adjacent samples bracket more than one sign change of psi'; rerun with a higher "
         "sample_count";
    throw std::runtime_error(o.str());
  }
}

inline double bisect_zero(const std::function<double(double)>& f, double a, double b) {
  double fa = f(a);
  for (int i = 0; i < 80; ++i) {
    double mid = 0.5 * (a + b);
    double fm = f(mid);
    if (fm == 0) return mid;
    if ((fm < 0) == (fa < 0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace detail

/// Scans psi over [s_min, s_max] and reports every transverse zero as a
/// birth or death of a critical-point pair.  Endpoints must be non-zero
/// within tolerance, otherwise the count there is ambiguous.
inline CuspScan detect_cusps(const FamilyModel& fam) {
  if (!fam.psi) throw std::invalid_argument("normalforms: family has no psi");
  if (!(fam.s_min < fam.s_max))
    throw std::invalid_argument("normalforms: need s_min < s_max");
  if (fam.sample_count < 2)
    throw std::invalid_argument("normalforms: need at least 2 samples");
  if (!(fam.tolerance > 0))
    throw std::invalid_argument("normalforms: tolerance must be positive");

  const int n = fam.sample_count;
  std::vector<double> s(n + 1), v(n + 1);
  for (int i = 0; i <= n; ++i) {
    s[i] = fam.s_min + (fam.s_max - fam.s_min) * i / n;
    v[i] = fam.psi(s[i]);
  }
  if (std::fabs(v[0]) <= fam.tolerance || std::fabs(v[n]) <= fam.tolerance)
    throw std::invalid_argument(
        "normalforms: psi vanishes within tolerance of an endpoint of the scan range; widen the "
        "range so every event is interior");

  std::vector<int> sign(n + 1);
  for (int i = 0; i <= n; ++i) sign[i] = detail::fuzzy_sign(v[i], fam.tolerance);
  for (int i = 0; i < n; ++i)
    detail::check_interval_resolution(fam, s[i], s[i + 1], sign[i], sign[i + 1]);

  CuspScan scan;
  scan.count_at_min = critical_points(v[0], fam.tolerance);
  scan.count_at_max = critical_points(v[n], fam.tolerance);

  // Walk consecutive samples of non-zero sign; a zero run between them is a
  // degenerate touch when the signs agree and the event locus otherwise.
  int prev = 0;
  for (int i = 1; i <= n; ++i) {
    if (sign[i] == 0) continue;
    if (sign[i] != sign[prev]) {
      CuspEvent ev;
      if (i == prev + 1) {
        ev.s = detail::bisect_zero(fam.psi, s[prev], s[i]);
      } else {
        ev.s = 0.5 * (s[prev + 1] + s[i - 1]);
      }
      ev.slope_sign = sign[i];
      ev.birth = ev.slope_sign > 0;
      ev.count_before = sign[prev] < 0 ? 2 : 0;
      ev.count_after = sign[i] < 0 ? 2 : 0;
      scan.events.push_back(ev);
    } else if (i > prev + 1) {
      scan.degenerate.push_back(0.5 * (s[prev + 1] + s[i - 1]));
    }
    prev = i;
  }
  return scan;
}

/// One family of the two-family comparison: its scan plus the derived
/// verdicts used by the dichotomy check.
struct FamilyReport {
  std::string name;
  CuspScan scan;
  int cusp_count = 0;
  bool cusp_free = false;
  bool two_critical_points_throughout = false;
};

inline FamilyReport scan_family(const FamilyModel& fam) {
  FamilyReport r;
  r.name = fam.name;
  r.scan = detect_cusps(fam);
  r.cusp_count = static_cast<int>(r.scan.events.size());
  r.cusp_free = r.scan.events.empty();
  r.two_critical_points_throughout =
      r.cusp_free && r.scan.degenerate.empty() && r.scan.count_at_min == 2;
  return r;
}

/// The two printed families: psi1(s) = -s(s-1), and psi2 = C - s(s-1) with C
/// a plateau function that is 0 outside [-3e/4, 1+3e/4], equal to `plateau`
/// on [-e/4, 1+e/4], and monotone on the two ramps.
struct ScenarioReport {
  double epsilon = 0;
  double plateau = 0;
  FamilyReport psi1;
  FamilyReport psi2;
  bool dichotomy = false;           // one family cusp-free, the other with exactly two events
  bool roles_as_described = false;  // psi1 cusp-free and psi2 carrying the cancelling pair
  bool flipped_scanned = false;     // sign-flipped variants scanned when the roles come out swapped
  FamilyReport flipped1;
  FamilyReport flipped2;
};

/// C(s) for the scenario, with smoothstep ramps.
inline std::function<double(double)> plateau_bump(double epsilon, double plateau) {
  return [epsilon, plateau](double s) {
    auto ramp = [](double tau) { return tau * tau * (3 - 2 * tau); };
    double lo0 = -0.75 * epsilon, lo1 = -0.25 * epsilon;
    double hi1 = 1 + 0.25 * epsilon, hi0 = 1 + 0.75 * epsilon;
    if (s <= lo0 || s >= hi0) return 0.0;
    if (s < lo1) return plateau * ramp((s - lo0) / (lo1 - lo0));
    if (s <= hi1) return plateau;
    return plateau * ramp((hi0 - s) / (hi0 - hi1));
  };
}

inline ScenarioReport two_family_scenario(double epsilon, double plateau = -1.0 / 3.0,
                                          int sample_count = 4000) {
  if (!(epsilon > 0 && epsilon < 0.25))
    throw std::invalid_argument("normalforms: scenario needs 0 < epsilon < 1/4");
  ScenarioReport rep;
  rep.epsilon = epsilon;
  rep.plateau = plateau;

  auto base = [](double s) { return -s * (s - 1); };
  auto bump = plateau_bump(epsilon, plateau);

  FamilyModel f1{"psi1", base, -epsilon, 1 + epsilon, sample_count, 1e-9};
  FamilyModel f2{"psi2", [=](double s) { return bump(s) + base(s); }, -epsilon, 1 + epsilon,
                 sample_count, 1e-9};
  rep.psi1 = scan_family(f1);
  rep.psi2 = scan_family(f2);

  auto pair_of = [](const FamilyReport& a, const FamilyReport& b) {
    return a.two_critical_points_throughout && b.cusp_count == 2;
  };
  rep.dichotomy = pair_of(rep.psi1, rep.psi2) || pair_of(rep.psi2, rep.psi1);
  rep.roles_as_described = pair_of(rep.psi1, rep.psi2);

  if (!rep.roles_as_described) {
    rep.flipped_scanned = true;
    FamilyModel g1{"psi1-flipped", [=](double s) { return -base(s); }, -epsilon, 1 + epsilon,
                   sample_count, 1e-9};
    FamilyModel g2{"psi2-flipped", [=](double s) { return -(bump(s) + base(s)); }, -epsilon,
                   1 + epsilon, sample_count, 1e-9};
    rep.flipped1 = scan_family(g1);
    rep.flipped2 = scan_family(g2);
  }
  return rep;
}

}  // namespace foldcob

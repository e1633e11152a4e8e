#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kplanar/rational.hpp"

namespace kplanar {

struct Unavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Setting { unrestricted, c3free, c4free, girth5 };

inline const char* setting_name(Setting s) {
  switch (s) {
    case Setting::unrestricted: return "unrestricted";
    case Setting::c3free: return "c3free";
    case Setting::c4free: return "c4free";
    case Setting::girth5: return "girth5";
  }
  return "?";
}

inline std::optional<Setting> parse_setting(const std::string& s) {
  for (Setting x : {Setting::unrestricted, Setting::c3free, Setting::c4free,
                    Setting::girth5})
    if (s == setting_name(x)) return x;
  return std::nullopt;
}

enum class Direction { density_upper, density_lower, cr_upper, cr_lower };

// value = radicand^(1/degree); always irrational here (degree 2 or 3,
// radicand not a perfect power), so comparisons go through cross-powering.
struct RootConstant {
  Rational radicand;
  int degree = 2;
};

// sign of (radicand^(1/degree) - x), exactly
inline int compare_root_to_rational(const RootConstant& rc, const Rational& x) {
  if (x.sign() < 0) return 1;  // radicand > 0
  const Rational xp = x.pow((unsigned)rc.degree);
  if (rc.radicand > xp) return 1;
  if (rc.radicand < xp) return -1;
  return 0;
}

// floor(10^digits * radicand^(1/degree)) as an integer, exactly:
// the largest m with m^degree * den <= num * 10^(digits*degree).
inline Int floor_scaled_root(const RootConstant& rc, int digits) {
  Int scale = 1;
  for (int i = 0; i < digits * rc.degree; ++i) scale *= 10;
  const Int target_num = rc.radicand.num() * scale;
  const Int& den = rc.radicand.den();
  Int m = integer_root(target_num / den, (unsigned)rc.degree);
  // fix up boundary effects of the integer division
  while (boost::multiprecision::pow(m + 1, (unsigned)rc.degree) * den <= target_num) ++m;
  while (boost::multiprecision::pow(m, (unsigned)rc.degree) * den > target_num) --m;
  return m;
}

struct Enclosure {
  Rational lo, hi;
};

// Certified enclosure: lo^d <= radicand <= hi^d and hi-lo <= 10^-digits.
inline Enclosure enclose_root(const RootConstant& rc, int digits = 7) {
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Int m = floor_scaled_root(rc, digits);
  return {Rational(m, scale), Rational(m + 1, scale)};
}

// Conservative fixed-point rendering of an irrational root: round up for
// upper bounds, down for lower bounds, never towards the bound.
inline std::string render_root_decimal(const RootConstant& rc, int digits,
                                       bool round_up) {
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Int m = floor_scaled_root(rc, digits);
  // roots of non-perfect powers are irrational, so rounding up always bumps
  if (round_up) ++m;
  return Rational(m, scale).decimal(digits, Rounding::down);
}

inline std::string render_rational_decimal(const Rational& v, int digits,
                                           bool round_up) {
  return v.decimal(digits, round_up ? Rounding::up : Rounding::down);
}

// ---------------------------------------------------------------------------
// Crossing-lemma machinery
// ---------------------------------------------------------------------------

struct CrossingLemmaResult {
  Rational coefficient;  // cr(G) >= coefficient * m^3/n^2
  Rational threshold;    // valid once m >= threshold * n
};

// From a per-member bound cr(H) >= a*mu - b*nu over a hereditary family.
inline CrossingLemmaResult crossing_lemma_coefficient(const Rational& a,
                                                      const Rational& b) {
  if (a.sign() <= 0 || b.sign() <= 0)
    throw std::domain_error("crossing_lemma_coefficient: need a, b > 0");
  const Rational coeff = Rational(4) * a.pow(3) / (Rational(27) * b.pow(2));
  const Rational threshold = Rational(3) * b / (Rational(2) * a);
  return {coeff, threshold};
}

// mu_i given as (slope, intercept): mu_i(n) = slope*n + intercept.
using MuBound = std::pair<Rational, Rational>;

inline Rational naive_cr_lower(int k, const std::vector<MuBound>& mu,
                               const Rational& n, const Rational& m) {
  if (k < 1 || (int)mu.size() != k)
    throw std::invalid_argument("naive_cr_lower: need exactly k mu bounds");
  Rational sum(0);
  for (const auto& [slope, intercept] : mu) sum += slope * n + intercept;
  return Rational(k) * m - sum;
}

// Best known crossing-number upper bounds for 2- and 3-planar graphs.
inline Rational cr_upper(int k, const Rational& n) {
  if (n < Rational(2)) throw std::domain_error("cr_upper: need n >= 2");
  if (k == 2) return (Rational(10) * n - Rational(20)) / Rational(3);
  if (k == 3) return (Rational(33) * n - Rational(66)) / Rational(5);
  throw Unavailable("cr_upper: only k in {2,3}; otherwise only trivial km/2");
}

inline Rational cr_upper_slope(int k) {
  if (k == 2) return Rational(10, 3);
  if (k == 3) return Rational(33, 5);
  throw Unavailable("cr_upper_slope: only k in {2,3}");
}

// c*m^3/n^2 <= u*n  <=>  m <= (u/c)^(1/3) * n
inline RootConstant derive_cubic_density(const Rational& c, const Rational& u) {
  if (c.sign() <= 0 || u.sign() <= 0)
    throw std::domain_error("derive_cubic_density: need c, u > 0");
  return RootConstant{u / c, 3};
}

// km/2 >= c*m^3/n^2  <=>  m <= sqrt(k/(2c)) * n
inline RootConstant derive_sqrt_density(const Rational& c) {
  return RootConstant{Rational(1) / (Rational(2) * c), 2};
}

// ---------------------------------------------------------------------------
// The per-setting ingredients (density upper bounds used as mu-lists, and
// the (a, b) pairs they induce)
// ---------------------------------------------------------------------------

// mu_i(n): max edges of an i-planar member of the setting. Intercepts follow
// the statements used in the derivations; the i=2 entries round the
// irrational constants up, which keeps them valid upper bounds.
inline std::vector<MuBound> mu_list(Setting s, int k) {
  std::vector<MuBound> all;
  switch (s) {
    case Setting::c3free:
      all = {{Rational(2), Rational(0)},
             {Rational(3), Rational(0)},
             {Rational(4), Rational(0)}};
      break;
    case Setting::c4free:
      all = {{Rational(15, 7), Rational(-30, 7)},
             {Rational(5, 2), Rational(-5)},
             {Rational(3929, 1000), Rational(0)}};
      break;
    case Setting::girth5:
      all = {{Rational(5, 3), Rational(0)},
             {Rational(12, 5), Rational(0)},
             {Rational(3597, 1000), Rational(0)}};
      break;
    case Setting::unrestricted:
      all = {{Rational(3), Rational(-6)},
             {Rational(4), Rational(-8)},
             {Rational(5), Rational(-10)}};
      break;
  }
  if (k < 1 || k > (int)all.size())
    throw Unavailable("mu_list: no bound list for this k");
  all.resize(k);
  return all;
}

// (a, b) for the crossing-lemma step of each setting, from the mu slopes.
inline std::pair<Rational, Rational> crossing_lemma_ab(Setting s) {
  switch (s) {
    case Setting::c3free: {
      auto mu = mu_list(s, 3);
      return {Rational(3), mu[0].first + mu[1].first + mu[2].first};  // (3, 9)
    }
    case Setting::c4free: {
      auto mu = mu_list(s, 2);
      return {Rational(2), mu[0].first + mu[1].first};  // (2, 65/14)
    }
    case Setting::girth5: {
      auto mu = mu_list(s, 2);
      return {Rational(2), mu[0].first + mu[1].first};  // (2, 61/15)
    }
    default:
      throw Unavailable("crossing_lemma_ab: no derived pair for this setting");
  }
}

// cr(G) >= coefficient * m^3/n^2 for the three restricted settings.
inline CrossingLemmaResult cr_lower_coefficient(Setting s) {
  auto [a, b] = crossing_lemma_ab(s);
  return crossing_lemma_coefficient(a, b);
}

// ---------------------------------------------------------------------------
// Density bounds: full catalogue of Table 1
// ---------------------------------------------------------------------------

struct BoundConstant {
  // The bound is slope*n + intercept, or root^(1/deg)*n, or sqrt-form times
  // sqrt(k)*n when per_sqrt_k is set.
  std::optional<Rational> slope;
  Rational intercept;
  std::optional<RootConstant> root;
  bool per_sqrt_k = false;
  bool cited = false;  // literature value, displayed but not derived here
  std::string source;
  std::optional<Rational> validity_threshold;  // applicable once m >= t*n
  std::string note;

  Rational evaluate(const Rational& n) const {
    if (root) throw std::domain_error("evaluate: irrational constant");
    return *slope * n + intercept;
  }
};

inline BoundConstant rational_bound(Rational slope, Rational intercept,
                                    std::string source, bool cited = false) {
  BoundConstant b;
  b.slope = std::move(slope);
  b.intercept = std::move(intercept);
  b.source = std::move(source);
  b.cited = cited;
  return b;
}

inline BoundConstant root_bound(RootConstant rc, std::string source) {
  BoundConstant b;
  b.root = std::move(rc);
  b.intercept = Rational(0);
  b.source = std::move(source);
  return b;
}

// Maximum edge count of k-planar graphs in the setting (upper bounds).
inline BoundConstant density_upper(Setting s, int k) {
  const Rational u2 = cr_upper_slope(2), u3 = cr_upper_slope(3);
  switch (k) {
    case 0:
      switch (s) {
        case Setting::unrestricted:
          return rational_bound(Rational(3), Rational(-6), "Euler");
        case Setting::c3free:
          return rational_bound(Rational(2), Rational(-4), "Euler, bipartite-style count");
        case Setting::c4free:
          return rational_bound(Rational(15, 7), Rational(-30, 7),
                                "planar C4-free bound", true);
        case Setting::girth5:
          return rational_bound(Rational(5, 3), Rational(-10, 3), "Euler with girth 5");
      }
      break;
    case 1:
      switch (s) {
        case Setting::unrestricted:
          return rational_bound(Rational(4), Rational(-8), "1-planar density", true);
        case Setting::c3free:
          return rational_bound(Rational(3), Rational(-6),
                                "density formula, t=3, C5-cell credit");
        case Setting::c4free:
          return rational_bound(Rational(5, 2), Rational(-5),
                                "discharging, alpha=4/5");
        case Setting::girth5:
          return rational_bound(Rational(12, 5), Rational(0),
                                "discharging, alpha=5/6");
      }
      break;
    case 2:
      switch (s) {
        case Setting::unrestricted:
          return rational_bound(Rational(5), Rational(-10), "2-planar density", true);
        case Setting::c3free:
          return rational_bound(Rational(4), Rational(-8), "discharging, alpha=1/2");
        case Setting::c4free: {
          auto cl = cr_lower_coefficient(s);
          auto b = root_bound(derive_cubic_density(cl.coefficient, u2),
                              "crossing lemma (a=2, b=65/14) against 10n/3");
          b.validity_threshold = cl.threshold;
          return b;
        }
        case Setting::girth5: {
          auto cl = cr_lower_coefficient(s);
          auto b = root_bound(derive_cubic_density(cl.coefficient, u2),
                              "crossing lemma (a=2, b=61/15) against 10n/3");
          b.validity_threshold = cl.threshold;
          return b;
        }
      }
      break;
    case 3:
      switch (s) {
        case Setting::unrestricted:
          return rational_bound(Rational(11, 2), Rational(-11), "3-planar density",
                                true);
        case Setting::c3free: {
          auto cl = cr_lower_coefficient(s);
          auto b = root_bound(derive_cubic_density(cl.coefficient, u3),
                              "crossing lemma (a=3, b=9) against 33n/5");
          b.validity_threshold = cl.threshold;
          return b;
        }
        case Setting::c4free: {
          auto cl = cr_lower_coefficient(s);
          auto b = root_bound(derive_cubic_density(cl.coefficient, u3),
                              "crossing lemma (a=2, b=65/14) against 33n/5");
          b.validity_threshold = cl.threshold;
          return b;
        }
        case Setting::girth5: {
          auto cl = cr_lower_coefficient(s);
          auto b = root_bound(derive_cubic_density(cl.coefficient, u3),
                              "crossing lemma (a=2, b=61/15) against 33n/5");
          b.validity_threshold = cl.threshold;
          return b;
        }
      }
      break;
    default:
      break;
  }
  throw Unavailable("density_upper: no populated cell for this (k, setting)");
}

// sqrt(k)-form upper bounds for general k >= 1 in the restricted settings.
// Returns the constant times sqrt(k)*n plus the density precondition.
inline BoundConstant density_upper_general_k(Setting s, long long k) {
  if (k < 1) throw std::invalid_argument("density_upper_general_k: k >= 1");
  if (s == Setting::unrestricted)
    throw Unavailable("general-k unrestricted bound is cited literature only");
  auto cl = cr_lower_coefficient(s);
  RootConstant base = derive_sqrt_density(cl.coefficient);
  BoundConstant b;
  b.root = RootConstant{base.radicand * Rational(Int(k)), 2};
  b.per_sqrt_k = true;
  b.intercept = Rational(0);
  switch (s) {
    case Setting::c3free:
      b.validity_threshold = Rational(9, 2);
      b.source = "km/2 against the C3-free crossing bound";
      break;
    case Setting::c4free:
      b.validity_threshold = Rational(3483, 1000);
      b.source = "km/2 against the C4-free crossing bound";
      break;
    case Setting::girth5:
      b.validity_threshold = Rational(61, 20);
      b.source = "km/2 against the girth-5 crossing bound";
      break;
    default:
      break;
  }
  return b;
}

// Construction lower bounds (Table 1 lower row entries).
inline BoundConstant density_lower(Setting s, int k) {
  switch (k) {
    case 0:
      return density_upper(s, 0);  // tight at k = 0
    case 1:
      switch (s) {
        case Setting::unrestricted:
          return rational_bound(Rational(4), Rational(0), "1-planar density", true);
        case Setting::c3free:
          return rational_bound(Rational(3), Rational(0), "C3-free 1-planar family",
                                true);
        case Setting::c4free:
          return rational_bound(Rational(12, 5), Rational(0),
                                "wrapped grid construction");
        case Setting::girth5:
          return rational_bound(Rational(13, 6), Rational(0),
                                "Petersen honeycomb construction");
      }
      break;
    case 2:
      switch (s) {
        case Setting::unrestricted:
          return rational_bound(Rational(5), Rational(0), "2-planar density", true);
        case Setting::c3free:
          return rational_bound(Rational(7, 2), Rational(0),
                                "bipartite beyond-planar family", true);
        case Setting::c4free:
          return rational_bound(Rational(5, 2), Rational(0),
                                "hexagonal chord construction");
        case Setting::girth5:
          return rational_bound(Rational(16, 7), Rational(0),
                                "honeycomb with blue extension");
      }
      break;
    case 3:
      switch (s) {
        case Setting::unrestricted:
          return rational_bound(Rational(11, 2), Rational(0), "3-planar density",
                                true);
        case Setting::c3free:
          return rational_bound(Rational(4), Rational(0),
                                "bipartite beyond-planar family", true);
        case Setting::c4free: {
          throw Unavailable(
              "no dedicated construction; the 2-planar C4-free bound 5n/2 "
              "carries over trivially");
        }
        case Setting::girth5:
          return rational_bound(Rational(5, 2), Rational(0),
                                "slope-grid construction");
      }
      break;
    default:
      break;
  }
  throw Unavailable("density_lower: no populated cell for this (k, setting)");
}

}  // namespace kplanar

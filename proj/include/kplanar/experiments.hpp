#pragma once

#include <cstdint>

#include "kplanar/bounds.hpp"
#include "kplanar/drawing.hpp"

namespace kplanar {

// splitmix64. Per-trial substreams are counter-based: trial i starts from
// the avalanche mix of (seed + (i+1)*golden), so streams neither overlap
// nor depend on evaluation order. Plain seed+i*golden would make stream i+1
// a one-step shift of stream i, since next() itself advances by golden.
struct SplitMix64 {
  uint64_t state;

  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  static SplitMix64 stream(uint64_t seed, uint64_t counter) {
    return {mix(seed + (counter + 1) * 0x9E3779B97F4A7C15ULL)};
  }
  uint64_t next() { return mix(state += 0x9E3779B97F4A7C15ULL); }
};

inline constexpr const char* kPrngId = "splitmix64-counter";

struct SamplingConfig {
  Rational p;
  long long trials = 0;
  uint64_t seed = 0;
};

struct SamplingReport {
  std::string prng = kPrngId;
  Rational p;
  long long trials = 0;
  uint64_t seed = 0;
  long long n = 0, m = 0, cr = 0;
  Rational mean_vertices, mean_edges, mean_crossings;
  Rational expected_vertices, expected_edges, expected_crossings;
  // relative errors |mean - expected| / expected; zero when expected is zero
  Rational rel_err_vertices, rel_err_edges, rel_err_crossings;
  std::vector<std::array<long long, 3>> per_trial;  // filled on request
};

namespace detail {

// Exact Bernoulli(p) from a uniform 64-bit draw: alive iff u*den < num*2^64.
class BernoulliThreshold {
 public:
  explicit BernoulliThreshold(const Rational& p) {
    if (p.num() == p.den()) {
      always_ = true;
      return;
    }
    num_ = p.num().convert_to<uint64_t>();
    den_ = p.den().convert_to<uint64_t>();
  }
  bool operator()(uint64_t u) const {
    if (always_) return true;
    return (unsigned __int128)u * den_ < ((unsigned __int128)num_ << 64);
  }

 private:
  bool always_ = false;
  uint64_t num_ = 0, den_ = 1;
};

}  // namespace detail

// Random induced subsampling: every vertex survives independently with
// probability p; a crossing survives iff all four endpoints of its edge
// pair do. Deterministic given the seed.
inline SamplingReport sample_induced(const DrawnGraph& d,
                                     const SamplingConfig& cfg) {
  if (cfg.p.sign() <= 0 || cfg.p > Rational(1))
    throw std::invalid_argument("sample_induced: need 0 < p <= 1");
  if (cfg.trials < 1)
    throw std::invalid_argument("sample_induced: need trials >= 1");
  if (cfg.p.den() > (Int(1) << 63))
    throw std::invalid_argument("sample_induced: denominator of p too large");

  // validation also enforces the no-adjacent-crossings precondition that
  // the p^4 identity needs
  auto cs = compute_crossing_set(d);

  const int n = d.graph.n;
  const int m = d.graph.m();
  const long long cr = (long long)cs.crossings.size();
  std::vector<std::array<int, 4>> quads;
  quads.reserve(cs.crossings.size());
  for (const auto& c : cs.crossings) {
    auto [a1, a2] = d.graph.edges[c.edge_a];
    auto [b1, b2] = d.graph.edges[c.edge_b];
    quads.push_back({a1, a2, b1, b2});
  }

  detail::BernoulliThreshold alive_draw(cfg.p);
  std::vector<char> alive(n);
  long long sum_v = 0, sum_e = 0, sum_c = 0;
  SamplingReport rep;

  for (long long t = 0; t < cfg.trials; ++t) {
    SplitMix64 rng = SplitMix64::stream(cfg.seed, (uint64_t)t);
    long long kv = 0, ke = 0, kc = 0;
    for (int v = 0; v < n; ++v) {
      alive[v] = alive_draw(rng.next());
      kv += alive[v];
    }
    for (auto [u, v] : d.graph.edges) ke += alive[u] && alive[v];
    for (const auto& q : quads)
      kc += alive[q[0]] && alive[q[1]] && alive[q[2]] && alive[q[3]];
    sum_v += kv;
    sum_e += ke;
    sum_c += kc;
  }

  rep.p = cfg.p;
  rep.trials = cfg.trials;
  rep.seed = cfg.seed;
  rep.n = n;
  rep.m = m;
  rep.cr = cr;
  const Rational T(cfg.trials);
  rep.mean_vertices = Rational(sum_v) / T;
  rep.mean_edges = Rational(sum_e) / T;
  rep.mean_crossings = Rational(sum_c) / T;
  rep.expected_vertices = cfg.p * Rational(n);
  rep.expected_edges = cfg.p.pow(2) * Rational(m);
  rep.expected_crossings = cfg.p.pow(4) * Rational(cr);
  auto rel = [](const Rational& mean, const Rational& exp) {
    if (exp.is_zero()) return Rational(0);
    return (mean - exp).abs() / exp;
  };
  rep.rel_err_vertices = rel(rep.mean_vertices, rep.expected_vertices);
  rep.rel_err_edges = rel(rep.mean_edges, rep.expected_edges);
  rep.rel_err_crossings = rel(rep.mean_crossings, rep.expected_crossings);
  return rep;
}

// Variant that also records the per-trial statistics (for CSV export).
inline SamplingReport sample_induced_with_trials(const DrawnGraph& d,
                                                 const SamplingConfig& cfg) {
  auto cs = compute_crossing_set(d);
  SamplingReport rep = sample_induced(d, cfg);
  rep.per_trial.reserve(cfg.trials);
  std::vector<std::array<int, 4>> quads;
  for (const auto& c : cs.crossings) {
    auto [a1, a2] = d.graph.edges[c.edge_a];
    auto [b1, b2] = d.graph.edges[c.edge_b];
    quads.push_back({a1, a2, b1, b2});
  }
  detail::BernoulliThreshold alive_draw(cfg.p);
  std::vector<char> alive(d.graph.n);
  for (long long t = 0; t < cfg.trials; ++t) {
    SplitMix64 rng = SplitMix64::stream(cfg.seed, (uint64_t)t);
    long long kv = 0, ke = 0, kc = 0;
    for (int v = 0; v < d.graph.n; ++v) {
      alive[v] = alive_draw(rng.next());
      kv += alive[v];
    }
    for (auto [u, v] : d.graph.edges) ke += alive[u] && alive[v];
    for (const auto& q : quads)
      kc += alive[q[0]] && alive[q[1]] && alive[q[2]] && alive[q[3]];
    rep.per_trial.push_back({kv, ke, kc});
  }
  return rep;
}

struct OptimalP {
  Rational p;          // 3bn / (2am)
  bool clamped = false; // true when the optimum exceeds 1 (bound inapplicable)
};

inline OptimalP optimal_p(const Rational& a, const Rational& b,
                          const Rational& n, const Rational& m) {
  if (a.sign() <= 0 || b.sign() <= 0 || n.sign() <= 0 || m.sign() <= 0)
    throw std::domain_error("optimal_p: all inputs must be positive");
  Rational p = Rational(3) * b * n / (Rational(2) * a * m);
  if (p > Rational(1)) return {Rational(1), true};
  return {p, false};
}

struct RemovalAudit {
  std::vector<std::pair<int, int>> trace;  // (edge, crossings at removal)
  long long trace_total = 0;
  Rational bound;  // k*m - sum mu_i(n)
  bool pass = false;
};

// Runs the greedy uncrossing and compares the removed-crossing total with
// the naive lower bound for the given mu list.
inline RemovalAudit removal_audit(const DrawnGraph& d,
                                  const std::vector<MuBound>& mu) {
  RemovalAudit audit;
  audit.trace = greedy_uncross(d);
  for (auto [e, c] : audit.trace) audit.trace_total += c;
  const int k = (int)mu.size();
  audit.bound =
      naive_cr_lower(k, mu, Rational(d.graph.n), Rational(d.graph.m()));
  audit.pass = Rational(audit.trace_total) >= audit.bound;
  return audit;
}

}  // namespace kplanar

#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "degdiv/clustering.hpp"
#include "degdiv/collision.hpp"
#include "degdiv/constructions.hpp"
#include "degdiv/degree_diversity.hpp"
#include "degdiv/errors.hpp"
#include "degdiv/graph.hpp"
#include "degdiv/homogeneous.hpp"
#include "degdiv/rational.hpp"
#include "degdiv/rng.hpp"

namespace degdiv {

inline std::string fmt_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

/// One verified inequality: both sides are recorded so the report is
/// self-contained for offline re-verification.
struct CheckRecord {
  std::string id;
  bool pass = true;
  std::string lhs;
  std::string rhs;
  std::string tolerance;  // empty for exact comparisons
  std::string detail;
};

struct VerificationReport {
  std::string subject;
  std::vector<std::pair<std::string, std::string>> quantities;
  std::vector<CheckRecord> checks;
  std::uint64_t seed = 0;
  long trials = 0;
  bool statistically_insufficient = false;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  void quantity(const std::string& name, const std::string& value) { quantities.emplace_back(name, value); }
  void quantity(const std::string& name, double value) { quantities.emplace_back(name, fmt_double(value)); }
  void quantity(const std::string& name, long value) { quantities.emplace_back(name, std::to_string(value)); }
};

struct HistogramRow {
  int degree = 0;
  double predicted = 0.0;
  double observed_mean = 0.0;
  double observed_std = 0.0;
  double z = 0.0;
};

struct HistogramReport {
  std::string subject;
  std::uint64_t seed = 0;
  long trials = 0;
  std::vector<HistogramRow> rows;
  double mean_sample_size = 0.0;
  bool statistically_insufficient = false;
};

namespace detail {

inline void sample_half_words(SplitMix64& rng, int n, std::vector<Word>& u) {
  const int w = words_for(n);
  u.resize(w);
  for (int i = 0; i < w; ++i) u[i] = rng.next();
  if (w > 0 && (n & 63)) u[w - 1] &= (Word(1) << (n & 63)) - 1;
}

inline int default_thread_count() {
  if (const char* env = std::getenv("DEGDIV_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

/// Run `body(state, trial)` for all trials, chunked over threads, merging
/// chunk states in chunk order. Bodies must derive all randomness from the
/// trial index so the merged result is identical to a sequential run.
template <class State, class Body, class Merge>
State run_trials(long trials, int threads, State init, Body body, Merge merge) {
  if (threads <= 0) threads = default_thread_count();
  threads = static_cast<int>(std::min<long>(threads, std::max<long>(trials, 1)));
  if (threads == 1) {
    State s = init;
    for (long t = 0; t < trials; ++t) body(s, t);
    return s;
  }
  std::vector<State> states(threads, init);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const long chunk = (trials + threads - 1) / threads;
  for (int i = 0; i < threads; ++i) {
    const long lo = i * chunk, hi = std::min(trials, lo + chunk);
    pool.emplace_back([&, i, lo, hi] {
      for (long t = lo; t < hi; ++t) body(states[i], t);
    });
  }
  for (auto& th : pool) th.join();
  State out = std::move(states[0]);
  for (int i = 1; i < threads; ++i) merge(out, states[i]);
  return out;
}

inline std::string rat_or_flag(const Rational& r, bool exact) {
  return exact ? rat_str(r) : fmt_double(to_double(r)) + " (estimate)";
}

}  // namespace detail

/// End-to-end check of the distinct-degree lower bound on one graph:
/// f-lower-bound vs (1/250)sqrt(n/hom), the expected-collision inequality,
/// and (when hom is exact) the distance-mass chain.
inline VerificationReport verify_theorem1(const Graph& g, long trials, std::uint64_t seed,
                                          int hom_guard = kDefaultExactGuard,
                                          int f_guard = kDefaultEnumGuard) {
  VerificationReport rep;
  rep.subject = "theorem1";
  rep.seed = seed;
  rep.trials = trials;
  const int n = g.n();
  rep.quantity("n", long(n));
  rep.quantity("edges", long(g.edge_count()));

  const HomResult h = n <= hom_guard ? hom(g, hom_guard) : hom_estimate(g, mix_stream(seed, 0x686f6d));
  rep.quantity("hom", long(h.size));
  rep.quantity("hom_exact", h.exact ? "true" : "false");

  DiversityWitness fw;
  bool f_is_exact = false;
  if (n <= f_guard) {
    fw = f_exact(g, f_guard);
    f_is_exact = true;
  } else {
    fw = randomized_witness(g, trials, seed);
  }
  rep.quantity("f_lower", long(fw.distinct_count));
  rep.quantity("f_exact", f_is_exact ? "true" : "false");

  if (n >= 1) {
    const double bound = theorem1_bound(n, h.size);
    rep.quantity("bound", bound);
    rep.checks.push_back({"theorem1.lower-bound", double(fw.distinct_count) >= bound,
                          std::to_string(fw.distinct_count), fmt_double(bound), "", ""});
  }

  if (n >= 2) {
    const DegreeGraphEdges e = expected_degree_graph_edges(g);
    rep.quantity("expected_degree_edges", rat_str(e.exact));
    rep.checks.push_back({"eq3.1.expected-edges", e.bound_holds, rat_str(e.exact), fmt_double(e.bound), "", ""});
  }

  if (h.exact && n >= 1) {
    Rational pair_mass = 0;
    long double inv_sqrt_sum = 0.0L;
    Rational worst_mass = 0;
    for (int x = 0; x < n; ++x) {
      Rational mass = distance_mass(g, x);
      if (mass > worst_mass) worst_mass = mass;
      for (int y = x + 1; y < n; ++y) {
        const int d = nbhd_distance(g, x, y);
        pair_mass += Rational(1, d + 1);
        inv_sqrt_sum += 1.0L / std::sqrt(static_cast<long double>(d) + 1.0L);
      }
    }
    rep.checks.push_back({"distance-mass.per-vertex", worst_mass <= Rational(2 * h.size),
                          rat_str(worst_mass), std::to_string(2 * h.size), "", "max over vertices"});
    rep.checks.push_back({"eq3.2.first", pair_mass <= Rational(BigInt(n) * h.size), rat_str(pair_mass),
                          std::to_string(static_cast<long long>(n) * h.size), "", ""});
    if (n >= 2) {
      const long double pairs = static_cast<long double>(n) * (n - 1) / 2.0L;
      const long double rhs = inv_sqrt_sum * inv_sqrt_sum / pairs;
      const long double lhs = pair_mass.convert_to<long double>();
      rep.checks.push_back({"eq3.2.second", lhs >= rhs * (1.0L - 1e-12L), fmt_double(double(lhs)),
                            fmt_double(double(rhs)), "1e-12 rel", ""});
    }
  }
  return rep;
}

/// The extremal construction at a given (k, m): m cliques of size k-1 must
/// realise f = k-1 and hom = max(m, k-1) exactly.
inline VerificationReport verify_theorem2_construction(int k, int m, int guard = kDefaultEnumGuard) {
  if (k < 2 || m < 1) throw std::invalid_argument("verify_theorem2_construction: need k >= 2, m >= 1");
  if ((k - 1) * m > guard)
    throw capability_error("verify_theorem2_construction: n=" + std::to_string((k - 1) * m) +
                           " exceeds brute-force guard " + std::to_string(guard));
  VerificationReport rep;
  rep.subject = "theorem2 construction k=" + std::to_string(k) + " m=" + std::to_string(m);
  const Graph g = disjoint_cliques(m, k - 1);
  const DiversityWitness fw = f_exact(g, guard);
  const HomResult h = hom(g, std::max(guard, kDefaultExactGuard));
  rep.quantity("n", long(g.n()));
  rep.quantity("k", long(k));
  rep.quantity("m", long(m));
  rep.quantity("f", long(fw.distinct_count));
  rep.quantity("hom", long(h.size));
  rep.checks.push_back({"construction.f", fw.distinct_count == k - 1, std::to_string(fw.distinct_count),
                        std::to_string(k - 1), "", ""});
  rep.checks.push_back({"construction.hom", h.size == std::max(m, k - 1), std::to_string(h.size),
                        std::to_string(std::max(m, k - 1)), "", ""});
  return rep;
}

/// Sampled degree histogram of G[U] for a disjoint union of equal cliques:
/// degree i should appear about n/2^k * C(k-1, i) times per draw.
inline HistogramReport degree_histogram_experiment(const Graph& g, int k, long trials, std::uint64_t seed,
                                                   int threads = 1) {
  const int n = g.n();
  if (k < 1) throw std::invalid_argument("degree_histogram_experiment: k must be >= 1");
  if (n == 0 || n % k != 0)
    throw std::invalid_argument("degree_histogram_experiment: n must be a positive multiple of k");
  if (trials < 1) throw std::invalid_argument("degree_histogram_experiment: trials must be >= 1");
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != k - 1)
      throw std::invalid_argument("degree_histogram_experiment: expected a disjoint union of K_" +
                                  std::to_string(k));
    const int base = (v / k) * k;
    for (int u = base; u < base + k; ++u)
      if (u != v && !g.adjacent(u, v))
        throw std::invalid_argument("degree_histogram_experiment: vertex blocks are not cliques");
  }

  struct State {
    std::vector<std::int64_t> sum, sumsq;
    std::int64_t size_sum = 0;
  };
  State init;
  init.sum.assign(k, 0);
  init.sumsq.assign(k, 0);

  State st = detail::run_trials(
      trials, threads, init,
      [&](State& s, long t) {
        SplitMix64 rng = trial_stream(seed, static_cast<std::uint64_t>(t));
        std::vector<Word> u;
        detail::sample_half_words(rng, n, u);
        std::vector<int> cnt(k, 0);
        int size = 0;
        for (int i = 0; i < words_for(n); ++i) {
          Word bits = u[i];
          while (bits) {
            const int v = i * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            ++size;
            int d = 0;
            auto rv = g.row(v);
            for (int j = 0; j < words_for(n); ++j) d += std::popcount(rv[j] & u[j]);
            ++cnt[d];
          }
        }
        s.size_sum += size;
        for (int i = 0; i < k; ++i) {
          s.sum[i] += cnt[i];
          s.sumsq[i] += std::int64_t(cnt[i]) * cnt[i];
        }
      },
      [&](State& a, const State& b) {
        a.size_sum += b.size_sum;
        for (int i = 0; i < k; ++i) {
          a.sum[i] += b.sum[i];
          a.sumsq[i] += b.sumsq[i];
        }
      });

  HistogramReport rep;
  rep.subject = "degree histogram, n=" + std::to_string(n) + " k=" + std::to_string(k);
  rep.seed = seed;
  rep.trials = trials;
  rep.statistically_insufficient = trials < 2;
  rep.mean_sample_size = double(st.size_sum) / double(trials);
  for (int i = 0; i < k; ++i) {
    HistogramRow row;
    row.degree = i;
    row.predicted = double(n) * to_double(Rational(binomial(k - 1, i), pow2(static_cast<unsigned>(k))));
    row.observed_mean = double(st.sum[i]) / double(trials);
    if (trials >= 2) {
      const double var =
          (double(st.sumsq[i]) - double(trials) * row.observed_mean * row.observed_mean) / double(trials - 1);
      row.observed_std = std::sqrt(std::max(var, 0.0));
    }
    const double se = row.observed_std / std::sqrt(double(trials));
    row.z = se > 0.0 ? (row.observed_mean - row.predicted) / se
                     : (row.observed_mean == row.predicted ? 0.0 : std::numeric_limits<double>::infinity());
    rep.rows.push_back(row);
  }
  return rep;
}

/// Empirical frequencies of the two bad events behind the positive-
/// probability argument (small sample, oversized degree graph), plus the
/// sampled mean of e(D) against its exact expectation.
inline VerificationReport concentration_checks(const Graph& g, long trials, std::uint64_t seed,
                                               int hom_guard = kDefaultExactGuard, int threads = 1) {
  if (trials < 1) throw std::invalid_argument("concentration_checks: trials must be >= 1");
  const int n = g.n();
  if (n < 1) throw std::invalid_argument("concentration_checks: graph is empty");

  VerificationReport rep;
  rep.subject = "concentration";
  rep.seed = seed;
  rep.trials = trials;
  rep.statistically_insufficient = trials < 2;
  rep.quantity("n", long(n));

  const HomResult h = n <= hom_guard ? hom(g, hom_guard) : hom_estimate(g, mix_stream(seed, 0x686f6d));
  rep.quantity("hom", long(h.size));
  rep.quantity("hom_exact", h.exact ? "true" : "false");
  const double edge_threshold = 12.0 * std::sqrt(std::pow(double(n), 3) * double(h.size));
  rep.quantity("edge_threshold", edge_threshold);

  const DegreeGraphEdges expected = expected_degree_graph_edges(g);
  rep.quantity("expected_degree_edges", rat_str(expected.exact));

  struct State {
    long small_sample = 0;
    long oversized = 0;
    std::int64_t e_sum = 0;
    std::int64_t e_sumsq = 0;
  };

  State st = detail::run_trials(
      trials, threads, State{},
      [&](State& s, long t) {
        SplitMix64 rng = trial_stream(seed, static_cast<std::uint64_t>(t));
        std::vector<Word> u;
        detail::sample_half_words(rng, n, u);
        std::vector<int> cnt(n, 0);
        std::vector<int> touched;
        int size = 0;
        for (int i = 0; i < words_for(n); ++i) {
          Word bits = u[i];
          while (bits) {
            const int v = i * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            ++size;
            int d = 0;
            auto rv = g.row(v);
            for (int j = 0; j < words_for(n); ++j) d += std::popcount(rv[j] & u[j]);
            if (cnt[d]++ == 0) touched.push_back(d);
          }
        }
        std::int64_t e = 0;
        for (int d : touched) {
          e += std::int64_t(cnt[d]) * (cnt[d] - 1) / 2;
          cnt[d] = 0;
        }
        if (3 * size < n) ++s.small_sample;
        if (double(e) > edge_threshold) ++s.oversized;
        s.e_sum += e;
        s.e_sumsq += e * e;
      },
      [](State& a, const State& b) {
        a.small_sample += b.small_sample;
        a.oversized += b.oversized;
        a.e_sum += b.e_sum;
        a.e_sumsq += b.e_sumsq;
      });

  auto freq_check = [&](const std::string& id, long count) {
    const double f = double(count) / double(trials);
    const double margin = 3.0 * std::sqrt(f * (1.0 - f) / double(trials));
    rep.checks.push_back({id, f + margin < 1.0 / 3.0, fmt_double(f) + " (+3se " + fmt_double(margin) + ")",
                          fmt_double(1.0 / 3.0), "3 sigma", std::to_string(count) + "/" + std::to_string(trials)});
  };

  rep.quantity("freq_small_sample", double(st.small_sample) / double(trials));
  if (n >= 250) freq_check("concentration.sample-size", st.small_sample);
  freq_check("concentration.degree-edges", st.oversized);

  const double mean_e = double(st.e_sum) / double(trials);
  rep.quantity("mean_degree_edges", mean_e);
  if (trials >= 2) {
    const double var = (double(st.e_sumsq) - double(trials) * mean_e * mean_e) / double(trials - 1);
    const double se = std::sqrt(std::max(var, 0.0)) / std::sqrt(double(trials));
    const double diff = std::abs(mean_e - to_double(expected.exact));
    rep.checks.push_back({"concentration.mean-degree-edges", diff <= 3.0 * se,
                          fmt_double(mean_e), rat_str(expected.exact), "3 sigma",
                          "|diff|=" + fmt_double(diff) + " se=" + fmt_double(se)});
  }
  return rep;
}

/// Every computable inequality, on every labeled graph with at most n_max
/// vertices. Stops at the first counterexample; one check row per claim.
inline VerificationReport exhaustive_small_sweep(int n_max) {
  if (n_max < 0 || n_max > 6) throw std::invalid_argument("exhaustive_small_sweep: n_max must lie in [0, 6]");
  VerificationReport rep;
  rep.subject = "exhaustive sweep, all labeled graphs with n <= " + std::to_string(n_max);

  struct Claim {
    const char* id;
    bool pass = true;
    std::string lhs, rhs, detail;
  };
  std::vector<Claim> claims = {
      {"complement.involution"}, {"delta.range"},          {"delta.complement-invariant"},
      {"delta.triangle"},        {"hom.complement-duality"}, {"f.complement-duality"},
      {"caro-wei.independence"}, {"caro-wei.turan-form"},  {"lemma3.1.pairs"},
      {"distance-mass.per-vertex"}, {"eq3.2.first"},       {"eq3.2.second"},
      {"prop2.1.bounded-side"},  {"prop2.2.high-degree"},  {"claim4.2.subsets"},
      {"theorem1.bound"},
  };
  auto fail = [&](int idx, const std::string& lhs, const std::string& rhs, int n, std::uint64_t mask) {
    claims[idx].pass = false;
    claims[idx].lhs = lhs;
    claims[idx].rhs = rhs;
    claims[idx].detail = "counterexample n=" + std::to_string(n) + " edge_mask=" + std::to_string(mask);
  };

  long graphs_checked = 0;
  bool stop = false;
  for (int n = 0; n <= n_max && !stop; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs) && !stop; ++mask) {
      const Graph g = from_edge_mask(n, mask);
      const Graph gc = complement(g);
      ++graphs_checked;

      if (complement(gc) != g) fail(0, "complement(complement(g))", "g", n, mask);

      std::vector<int> delta(static_cast<std::size_t>(n) * n, 0);
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          const int d = nbhd_distance(g, x, y);
          delta[x * n + y] = delta[y * n + x] = d;
          if (d < 0 || d > n - 2) fail(1, std::to_string(d), "[0," + std::to_string(n - 2) + "]", n, mask);
          if (d != nbhd_distance(gc, x, y))
            fail(2, std::to_string(d), std::to_string(nbhd_distance(gc, x, y)), n, mask);
        }
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (x != y && y != z && x != z && delta[x * n + y] + delta[y * n + z] < delta[x * n + z])
              fail(3, std::to_string(delta[x * n + y] + delta[y * n + z]), std::to_string(delta[x * n + z]), n,
                   mask);

      const int omega = max_clique(g).size;
      const int alpha = max_clique(gc).size;  // independence number of g
      const int hom_value = std::max(omega, alpha);
      if (hom(g).size != hom_value || hom(gc).size != hom_value)
        fail(4, std::to_string(hom(g).size), std::to_string(hom(gc).size), n, mask);

      const int f_value = f_exact(g).distinct_count;
      const int f_comp = f_exact(gc).distinct_count;
      if (f_value != f_comp) fail(5, std::to_string(f_value), std::to_string(f_comp), n, mask);

      const CaroWei cw = caro_wei_sum(g);
      if (BigInt(alpha) < rational_ceil(cw.sum)) fail(6, std::to_string(alpha), rat_str(cw.sum), n, mask);
      if (cw.sum < cw.turan_bound) fail(7, rat_str(cw.sum), rat_str(cw.turan_bound), n, mask);

      Rational pair_mass = 0;
      long double inv_sqrt_sum = 0.0L;
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          const int d = delta[x * n + y];
          const CollisionProb p = collision_prob_pair(g, x, y);
          if (!less_than_inv_sqrt(p.exact, 20, d + 1))
            fail(8, rat_str(p.exact), "20/sqrt(" + std::to_string(d + 1) + ")", n, mask);
          pair_mass += Rational(1, d + 1);
          inv_sqrt_sum += 1.0L / std::sqrt(static_cast<long double>(d) + 1.0L);
        }

      for (int x = 0; x < n; ++x) {
        const Rational mass = distance_mass(g, x);
        if (mass > Rational(2 * hom_value)) fail(9, rat_str(mass), std::to_string(2 * hom_value), n, mask);
      }

      if (pair_mass > Rational(BigInt(n) * hom_value))
        fail(10, rat_str(pair_mass), std::to_string(n * hom_value), n, mask);
      if (n >= 2) {
        const long double pairs_ld = static_cast<long double>(n) * (n - 1) / 2.0L;
        const long double rhs = inv_sqrt_sum * inv_sqrt_sum / pairs_ld;
        if (pair_mass.convert_to<long double>() < rhs * (1.0L - 1e-12L))
          fail(11, fmt_double(double(pair_mass.convert_to<long double>())), fmt_double(double(rhs)), n, mask);
      }

      if (n >= 2) {
        int k_star = 0;
        for (int x = 0; x < n; ++x)
          for (int y = x + 1; y < n; ++y) k_star = std::max(k_star, delta[x * n + y]);
        const int min_side = std::min(g.max_degree(), gc.max_degree());
        if (min_side > 4 * k_star) fail(12, std::to_string(min_side), std::to_string(4 * k_star), n, mask);
      }

      {
        const int k = f_value + 1;
        const int dmax = g.max_degree();
        const long cap = (long(dmax) * dmax + 1) * k;
        if (high_degree_count(g, k) > cap) fail(13, std::to_string(high_degree_count(g, k)),
                                                std::to_string(cap), n, mask);
      }

      if (n >= 1) {
        const int k = f_value + 1;
        std::vector<double> weight(static_cast<std::size_t>(n) * n, 0.0);
        for (int x = 0; x < n; ++x)
          for (int y = x + 1; y < n; ++y)
            weight[x * n + y] = 5.0 / std::sqrt(double(delta[x * n + y]) + 1.0);
        for (std::uint64_t wmask = 1; wmask < (std::uint64_t(1) << n); ++wmask) {
          double sum = 0.0;
          const int wsize = std::popcount(wmask);
          for (int x = 0; x < n; ++x) {
            if (!((wmask >> x) & 1)) continue;
            for (int y = x + 1; y < n; ++y)
              if ((wmask >> y) & 1) sum += weight[x * n + y];
          }
          const double rhs = (double(wsize) * wsize - 3.0 * k * wsize) / (54.0 * k);
          if (!(sum > rhs)) {
            fail(14, fmt_double(sum), fmt_double(rhs), n, mask);
            break;
          }
        }
      }

      if (n >= 1) {
        const double bound = theorem1_bound(n, hom_value);
        if (f_value < 1 || double(f_value) < bound)
          fail(15, std::to_string(f_value), fmt_double(bound), n, mask);
      }

      for (const auto& c : claims)
        if (!c.pass) stop = true;
    }
  }

  rep.quantity("graphs_checked", graphs_checked);
  for (const auto& c : claims) rep.checks.push_back({c.id, c.pass, c.lhs, c.rhs, "", c.detail});
  return rep;
}

}  // namespace degdiv

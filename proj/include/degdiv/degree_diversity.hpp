#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "degdiv/errors.hpp"
#include "degdiv/graph.hpp"
#include "degdiv/rng.hpp"

namespace degdiv {

inline constexpr int kDefaultEnumGuard = 24;

/// Partition of a subset U by degree in G[U]: the degree graph D given as
/// its clique decomposition, one class per degree value, degrees ascending.
struct DegreeClass {
  int degree = 0;
  VertexSet members;
};

struct DegreeClasses {
  VertexSet subset;
  std::vector<DegreeClass> classes;

  int distinct_count() const { return static_cast<int>(classes.size()); }
};

inline DegreeClasses degree_classes(const Graph& g, const VertexSet& u) {
  if (u.parent_n() != g.n()) throw std::invalid_argument("degree_classes: subset does not belong to this graph");
  DegreeClasses out;
  out.subset = u;
  std::vector<std::pair<int, int>> by_degree;  // (degree in G[U], vertex)
  u.for_each([&](int v) { by_degree.emplace_back(degree_in(g, v, u), v); });
  std::sort(by_degree.begin(), by_degree.end());
  for (std::size_t i = 0; i < by_degree.size();) {
    DegreeClass cls;
    cls.degree = by_degree[i].first;
    cls.members = VertexSet(g.n());
    std::size_t j = i;
    while (j < by_degree.size() && by_degree[j].first == cls.degree) cls.members.set(by_degree[j++].second);
    out.classes.push_back(std::move(cls));
    i = j;
  }
  return out;
}

/// A subset whose induced subgraph exhibits distinct_count distinct
/// degrees, plus one representative per degree class. Any witness is a
/// certified lower bound on f(G) and can be re-verified from the subset.
struct DiversityWitness {
  VertexSet subset;
  int distinct_count = 0;
  VertexSet representatives;
};

namespace detail {

inline DiversityWitness witness_from_subset(const Graph& g, const VertexSet& u) {
  DegreeClasses dc = degree_classes(g, u);
  DiversityWitness w;
  w.subset = u;
  w.distinct_count = dc.distinct_count();
  w.representatives = VertexSet(g.n());
  for (const auto& cls : dc.classes) w.representatives.set(cls.members.first());
  return w;
}

}  // namespace detail

/// Exact f(G) by subset enumeration in increasing popcount (Gosper's hack
/// inside each band), so the first maximiser found is automatically the
/// smallest subset and then the smallest mask. Stops as soon as the global
/// ceiling max(1, n-1) is reached. Guarded: 2^n subsets.
inline DiversityWitness f_exact(const Graph& g, int guard = kDefaultEnumGuard) {
  const int n = g.n();
  if (n > guard)
    throw capability_error("f_exact: n=" + std::to_string(n) + " exceeds enumeration guard " +
                           std::to_string(guard) + "; use randomized_witness");
  if (n > 62) throw capability_error("f_exact: n too large for 64-bit subset masks");
  if (n == 0) return DiversityWitness{VertexSet(0), 0, VertexSet(0)};

  std::vector<std::uint64_t> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = g.row(v)[0];

  const int ceiling = n <= 1 ? n : n - 1;  // 0 and m-1 cannot both occur
  int best = 0;
  std::uint64_t best_mask = 0;
  for (int m = 1; m <= n && best < ceiling; ++m) {
    std::uint64_t mask = (std::uint64_t(1) << m) - 1;
    const std::uint64_t last = mask << (n - m);
    while (true) {
      std::uint64_t seen = 0;
      for (std::uint64_t rest = mask; rest;) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        seen |= std::uint64_t(1) << std::popcount(rows[v] & mask);
      }
      const int cnt = std::popcount(seen);
      if (cnt > best) {
        best = cnt;
        best_mask = mask;
        if (best == ceiling) break;
      }
      if (mask == last) break;
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  VertexSet u(n);
  for (int v = 0; v < n; ++v)
    if ((best_mask >> v) & 1) u.set(v);
  return detail::witness_from_subset(g, u);
}

/// Best witness over `trials` independent 1/2-random subsets. Trial i draws
/// from trial_stream(seed, i), so the outcome is a pure function of
/// (g, trials, seed) and is unchanged by evaluation order. Ties are broken
/// toward smaller subsets, then smaller masks.
inline DiversityWitness randomized_witness(const Graph& g, long trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("randomized_witness: trials must be >= 1");
  const int n = g.n();
  const int w = words_for(n);

  std::vector<Word> u(w), best_u(w, 0);
  int best_count = -1, best_size = 0;
  std::vector<long> stamp(std::max(n, 1), -1);

  auto mask_less = [w](const std::vector<Word>& a, const std::vector<Word>& b) {
    for (int i = w; i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  };

  for (long t = 0; t < trials; ++t) {
    SplitMix64 rng = trial_stream(seed, static_cast<std::uint64_t>(t));
    for (int i = 0; i < w; ++i) u[i] = rng.next();
    if (n & 63) u[w - 1] &= (Word(1) << (n & 63)) - 1;

    int count = 0, size = 0;
    for (int i = 0; i < w; ++i) {
      Word bits = u[i];
      while (bits) {
        const int v = i * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        ++size;
        int d = 0;
        auto rv = g.row(v);
        for (int j = 0; j < w; ++j) d += std::popcount(rv[j] & u[j]);
        if (stamp[d] != t) {
          stamp[d] = t;
          ++count;
        }
      }
    }
    const bool better = count > best_count ||
                        (count == best_count &&
                         (size < best_size || (size == best_size && mask_less(u, best_u))));
    if (better) {
      best_count = count;
      best_size = size;
      best_u = u;
    }
  }
  return detail::witness_from_subset(g, VertexSet::from_words(n, best_u));
}

/// (1/250) * sqrt(n / hom).
inline double theorem1_bound(long n, long hom_value) {
  if (hom_value < 1) throw std::invalid_argument("theorem1_bound: hom must be >= 1");
  return std::sqrt(double(n) / double(hom_value)) / 250.0;
}

/// Pairwise distance mass of a set: sum over unordered pairs in w of
/// 5/sqrt(delta+1). Upper-bounds the expected number of degree collisions
/// inside w under half-sampling.
inline double dhat(const Graph& g, const VertexSet& w) {
  if (w.parent_n() != g.n()) throw std::invalid_argument("dhat: subset does not belong to this graph");
  auto vs = w.to_vector();
  double sum = 0.0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      sum += 5.0 / std::sqrt(double(nbhd_distance(g, vs[i], vs[j])) + 1.0);
  return sum;
}

}  // namespace degdiv

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "degdiv/graph.hpp"
#include "degdiv/rng.hpp"

namespace degdiv {

/// m disjoint copies of K_k; component c occupies the contiguous vertex
/// block [c*k, (c+1)*k). The block layout is part of the contract so that
/// planted-recovery tests can assert set equality.
inline Graph disjoint_cliques(int m, int k) {
  if (m < 1 || k < 1) throw std::invalid_argument("disjoint_cliques: m and k must be >= 1");
  Graph g(m * k);
  for (int c = 0; c < m; ++c)
    for (int i = c * k; i < (c + 1) * k; ++i)
      for (int j = i + 1; j < (c + 1) * k; ++j) g.add_edge(i, j);
  return g;
}

/// k/b disjoint copies of the complement of (n/k cliques of size b), i.e.
/// k/b complete (n/k)-partite blocks with parts of size b. Components are
/// contiguous blocks of n*b/k vertices, parts contiguous sub-blocks of b.
/// Rejects non-divisible parameters rather than rounding.
inline Graph example3(int k, int b, int n) {
  if (b < 1 || k < 1 || n < 1) throw std::invalid_argument("example3: parameters must be >= 1");
  if (b > k) throw std::invalid_argument("example3: b must not exceed k");
  if (k % b != 0) throw std::invalid_argument("example3: b must divide k");
  if (n % k != 0) throw std::invalid_argument("example3: k must divide n");
  const int copies = k / b;
  const int copy_size = n / copies;  // = (n/k)*b
  Graph g(n);
  for (int c = 0; c < copies; ++c) {
    const int base = c * copy_size;
    for (int i = 0; i < copy_size; ++i)
      for (int j = i + 1; j < copy_size; ++j)
        if (i / b != j / b) g.add_edge(base + i, base + j);
  }
  return g;
}

/// G(n, p): every unordered pair is an edge independently with probability
/// p. Pairs are drawn in lexicographic order from SplitMix64(seed), so the
/// graph is a pure function of (n, p, seed).
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("random_graph: negative n");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_graph: p must lie in [0, 1]");
  Graph g(n);
  SplitMix64 rng(seed);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_double() < p) g.add_edge(u, v);
  return g;
}

/// Graph from a bitmask over the C(n,2) vertex pairs in lexicographic order
/// (0,1),(0,2),...,(0,n-1),(1,2),...; bit i set means pair i is an edge.
/// This is the enumeration order used by the exhaustive sweeps.
inline Graph from_edge_mask(int n, std::uint64_t mask) {
  if (n < 0 || n > 11) throw std::invalid_argument("from_edge_mask: n out of range for a 64-bit mask");
  Graph g(n);
  int i = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++i)
      if ((mask >> i) & 1) g.add_edge(u, v);
  return g;
}

struct FamilySpec {
  enum class Family { disjoint_cliques, example3, random };
  Family family = Family::disjoint_cliques;
  int m = 0;
  int k = 0;
  int b = 0;
  int n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
};

inline Graph build(const FamilySpec& spec) {
  switch (spec.family) {
    case FamilySpec::Family::disjoint_cliques:
      return disjoint_cliques(spec.m, spec.k);
    case FamilySpec::Family::example3:
      return example3(spec.k, spec.b, spec.n);
    case FamilySpec::Family::random:
      return random_graph(spec.n, spec.p, spec.seed);
  }
  throw std::invalid_argument("build: unknown family");
}

inline std::string describe(const FamilySpec& spec) {
  using F = FamilySpec::Family;
  switch (spec.family) {
    case F::disjoint_cliques:
      return "disjoint_cliques(m=" + std::to_string(spec.m) + ",k=" + std::to_string(spec.k) + ")";
    case F::example3:
      return "example3(k=" + std::to_string(spec.k) + ",b=" + std::to_string(spec.b) +
             ",n=" + std::to_string(spec.n) + ")";
    case F::random:
      return "random(n=" + std::to_string(spec.n) + ",p=" + std::to_string(spec.p) +
             ",seed=" + std::to_string(spec.seed) + ")";
  }
  return "?";
}

}  // namespace degdiv

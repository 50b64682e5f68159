#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "degdiv/errors.hpp"
#include "degdiv/graph.hpp"
#include "degdiv/rational.hpp"

namespace degdiv {

inline constexpr long kCollisionExactGuard = 4096;

/// The split of a vertex pair's differing neighbourhoods:
/// s = |Gamma(x)\Gamma(y)|, t = |Gamma(y)\Gamma(x)|. For an edge the pair
/// itself lands in the split sets, so s+t = delta+2; otherwise s+t = delta.
struct CollisionParams {
  long s = 0;
  long t = 0;
  bool edge = false;

  long delta() const { return s + t - (edge ? 2 : 0); }

  static CollisionParams of_pair(const Graph& g, int x, int y) {
    if (x == y) throw std::invalid_argument("CollisionParams: vertices must be distinct");
    auto rx = g.row(x);
    auto ry = g.row(y);
    CollisionParams p;
    for (std::size_t i = 0; i < rx.size(); ++i) {
      p.s += std::popcount(rx[i] & ~ry[i]);
      p.t += std::popcount(ry[i] & ~rx[i]);
    }
    p.edge = g.adjacent(x, y);
    return p;
  }
};

/// Probability that a 1/2-random subset hits two disjoint pools of sizes s
/// and t equally often. Exact rationals up to s+t <= guard; beyond that a
/// log-gamma float value flagged non-exact.
struct CollisionProb {
  bool is_exact = true;
  Rational exact;  // meaningful only when is_exact
  double value = 0.0;
};

/// 2^-(s+t) * sum_i C(s,i)C(t,i). The sum is evaluated term-by-term and
/// checked against the closed form C(s+t,t)/2^(s+t); the two routes must
/// agree exactly.
inline CollisionProb collision_prob_exact(long s, long t, long guard = kCollisionExactGuard) {
  if (s < 0 || t < 0) throw std::invalid_argument("collision_prob_exact: negative pool size");
  if (s + t > guard) {
    CollisionProb p;
    p.is_exact = false;
    p.value = std::exp(std::lgamma(double(s + t + 1)) - std::lgamma(double(s + 1)) -
                       std::lgamma(double(t + 1)) - double(s + t) * std::log(2.0));
    return p;
  }
  const long m = std::min(s, t);
  BigInt sum = 0;
  BigInt term = 1;  // C(s,i)*C(t,i), rolled up from i=0
  for (long i = 0;; ++i) {
    sum += term;
    if (i == m) break;
    term *= s - i;
    term *= t - i;
    term /= (i + 1);
    term /= (i + 1);
  }
  BigInt closed = binomial(s + t, t);
  if (sum != closed) throw std::logic_error("collision_prob_exact: sum and closed form disagree");
  CollisionProb p;
  p.exact = Rational(closed, pow2(static_cast<unsigned>(s + t)));
  p.value = to_double(p.exact);
  return p;
}

/// P(deg_U(x) = deg_U(y)) over the full 1/2-random U, membership of x and y
/// included (not conditioned on x,y in U).
inline CollisionProb collision_prob_pair(const Graph& g, int x, int y, long guard = kCollisionExactGuard) {
  auto p = CollisionParams::of_pair(g, x, y);
  return collision_prob_exact(p.s, p.t, guard);
}

/// 20 / sqrt(delta + 1): the per-pair collision probability cap.
inline double lemma31_bound(long delta) {
  if (delta < 0) throw std::invalid_argument("lemma31_bound: negative distance");
  return 20.0 / std::sqrt(double(delta) + 1.0);
}

/// p < c / sqrt(d), decided exactly by comparing squares: p^2 * d < c^2.
/// Requires p >= 0, d >= 1.
inline bool less_than_inv_sqrt(const Rational& p, long c, long d) {
  return p * p * d < Rational(BigInt(c) * c);
}

struct DegreeGraphEdges {
  Rational exact;      // E[e(D)] = sum over pairs of P(collision)/4
  double bound = 0.0;  // sum over pairs of 5/sqrt(delta+1)
  bool bound_holds = false;
};

/// Exact expected edge count of the degree graph D together with its
/// distance-based upper bound. Every pair must be within the exact guard.
inline DegreeGraphEdges expected_degree_graph_edges(const Graph& g) {
  DegreeGraphEdges out;
  out.exact = 0;
  for (int x = 0; x < g.n(); ++x)
    for (int y = x + 1; y < g.n(); ++y) {
      CollisionProb p = collision_prob_pair(g, x, y);
      if (!p.is_exact)
        throw capability_error("expected_degree_graph_edges: pair exceeds the exact guard");
      out.exact += p.exact / 4;
      out.bound += 5.0 / std::sqrt(double(nbhd_distance(g, x, y)) + 1.0);
    }
  out.bound_holds = g.n() < 2 || to_double(out.exact) < out.bound;
  return out;
}

/// sum over y != x of 1/(delta(x,y)+1), exact.
inline Rational distance_mass(const Graph& g, int x) {
  Rational sum = 0;
  for (int y = 0; y < g.n(); ++y)
    if (y != x) sum += Rational(1, nbhd_distance(g, x, y) + 1);
  return sum;
}

/// First s in [0, s_max] with 2^-s * C(s, floor(s/2)) >= 10/sqrt(s+1), or -1
/// if the strict bound holds everywhere. Decided by exact squared
/// comparison: C(s,floor(s/2))^2 * (s+1) < 100 * 4^s. The central binomial
/// is stepped incrementally, so the whole range costs O(s_max) big-int ops.
inline long central_binomial_first_violation(long s_max) {
  BigInt c = 1;      // C(s, floor(s/2))
  BigInt pow4 = 1;   // 4^s
  for (long s = 0; s <= s_max; ++s) {
    if (c * c * (s + 1) >= 100 * pow4) return s;
    // step s -> s+1
    long h = s / 2;
    if (s % 2 == 0) {
      // C(2h+1, h) = C(2h, h) * (2h+1)/(h+1)
      c *= 2 * h + 1;
      c /= h + 1;
    } else {
      // C(2h+2, h+1) = C(2h+1, h) * (2h+2)/(h+1)
      c *= 2 * h + 2;
      c /= h + 1;
    }
    pow4 <<= 2;
  }
  return -1;
}

}  // namespace degdiv

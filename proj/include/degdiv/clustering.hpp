#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "degdiv/graph.hpp"

namespace degdiv {

/// The constant cascade behind the partition guarantee. These blow up
/// astronomically for any desk-scale n; they exist for formula-level
/// self-consistency checks, not for driving the partition procedure.
struct PaperConstants {
  int k = 0;
  double eps = 0.0;
  double beta = 0.0;   // eps / 10k
  double eta = 0.0;    // eps*beta / 10^5 k^2
  double J = 0.0;      // 10^4 k^12 2^(4k) / eta^4
  double J_alt = 0.0;  // 10^24 k^20 2^(4k) / (eps*beta)^4; equals J algebraically
  double K = 0.0;      // 2 (10^6 k^2 + J log(10^4 k)/log(1+beta/2))
  double Delta = 0.0;  // 4K
  double L = 0.0;      // (Delta^2 + 1) k
};

inline PaperConstants paper_constants(int k, double eps) {
  if (k < 2) throw std::invalid_argument("paper_constants: k must be >= 2");
  if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("paper_constants: eps must lie in (0, 1/2)");
  PaperConstants c;
  c.k = k;
  c.eps = eps;
  c.beta = eps / (10.0 * k);
  c.eta = eps * c.beta / (1e5 * k * k);
  c.J = 1e4 * std::pow(double(k), 12) * std::exp2(4.0 * k) / std::pow(c.eta, 4);
  c.J_alt = 1e24 * std::pow(double(k), 20) * std::exp2(4.0 * k) / std::pow(eps * c.beta, 4);
  c.K = 2.0 * (1e6 * k * k + c.J * std::log(1e4 * k) / std::log1p(c.beta / 2.0));
  c.Delta = 4.0 * c.K;
  c.L = (c.Delta * c.Delta + 1.0) * k;
  for (double v : {c.beta, c.eta, c.J, c.J_alt, c.K, c.Delta, c.L})
    if (!(v > 0.0) || !std::isfinite(v)) throw std::domain_error("paper_constants: constant overflowed");
  return c;
}

/// Thresholds steering the partition procedure. The defaults leave the
/// paper-scale fractions at their degenerate desk values; callers pin
/// seed_radius and link_dist to the structure they expect to recover.
struct ClusterParams {
  double seed_radius = 1.0;      // d0: ball radius around a seed vertex (strict <)
  double link_dist = 1.0;        // J: fringe attachment distance (<=) and inter-cluster floor
  double growth_ratio = 0.05;    // absorb the fringe while |T| >= ratio * |C|
  double seed_frac = 0.0;        // a seed needs >= frac * |W| vertices in its ball
  double min_cluster_frac = 0.0; // clusters below frac * n are demoted to leftover
};

struct ClusterResult {
  std::vector<VertexSet> clusters;
  VertexSet leftover;
  // Thresholds actually achieved; -1 when there is no pair of that kind.
  int max_intra_delta = -1;
  int min_inter_delta = -1;
};

/// Grow clusters from dense seed balls. Repeatedly: pick the vertex of the
/// working set with the largest ball {x : delta(seed,x) < seed_radius}
/// (lowest index on ties); absorb the fringe within link_dist in whole
/// batches while it stays at least growth_ratio of the cluster; then close
/// the cluster and discard the last thin fringe to the leftover. Stops when
/// no qualifying seed remains. Deterministic.
inline ClusterResult partition(const Graph& g, const ClusterParams& p) {
  const int n = g.n();
  if (n == 0) throw std::invalid_argument("partition: graph is empty");
  ClusterResult result;
  result.leftover = VertexSet(n);

  VertexSet work = VertexSet::full(n);
  while (!work.empty()) {
    const auto active = work.to_vector();
    // seed selection: largest ball, lowest index on ties
    int seed = -1, seed_ball = -1;
    for (int w : active) {
      int ball = 0;
      for (int x : active)
        if (x != w && nbhd_distance(g, w, x) < p.seed_radius) ++ball;
      if (ball > seed_ball) {
        seed = w;
        seed_ball = ball;
      }
    }
    if (seed < 0 || double(seed_ball) < p.seed_frac * double(active.size())) {
      result.leftover = result.leftover | work;
      break;
    }

    VertexSet cluster(n);
    cluster.set(seed);
    for (int x : active)
      if (x != seed && nbhd_distance(g, seed, x) < p.seed_radius) cluster.set(x);

    VertexSet fringe(n);
    while (true) {
      fringe = VertexSet(n);
      int fringe_size = 0;
      for (int x : active) {
        if (cluster.test(x) || fringe.test(x)) continue;
        bool linked = false;
        cluster.for_each([&](int y) {
          if (!linked && nbhd_distance(g, x, y) <= p.link_dist) linked = true;
        });
        if (linked) {
          fringe.set(x);
          ++fringe_size;
        }
      }
      if (fringe_size > 0 && double(fringe_size) >= p.growth_ratio * double(cluster.count())) {
        cluster = cluster | fringe;
      } else {
        break;
      }
    }
    if (double(cluster.count()) >= p.min_cluster_frac * double(n))
      result.clusters.push_back(cluster);
    else
      result.leftover = result.leftover | cluster;
    result.leftover = result.leftover | fringe;
    work = work.minus(cluster).minus(fringe);
  }

  // thresholds actually achieved
  for (const auto& a : result.clusters) {
    auto vs = a.to_vector();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        result.max_intra_delta = std::max(result.max_intra_delta, nbhd_distance(g, vs[i], vs[j]));
  }
  for (std::size_t a = 0; a < result.clusters.size(); ++a)
    for (std::size_t b = a + 1; b < result.clusters.size(); ++b)
      result.clusters[a].for_each([&](int x) {
        result.clusters[b].for_each([&](int y) {
          const int d = nbhd_distance(g, x, y);
          if (result.min_inter_delta < 0 || d < result.min_inter_delta) result.min_inter_delta = d;
        });
      });
  return result;
}

struct PropertyCheck {
  std::string id;
  bool pass = true;
  std::string witness;  // filled on failure
};

struct PartitionReport {
  std::vector<PropertyCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Check a ClusterResult against the four advertised properties (coverage,
/// minimum cluster size, intra-cluster distance < K, inter-cluster distance
/// > J) plus the structural disjoint-cover invariant. Failures carry a
/// witnessing vertex or pair.
inline PartitionReport validate_partition(const Graph& g, const ClusterResult& r, double K, double J,
                                          int min_size, int max_leftover) {
  PartitionReport rep;
  const int n = g.n();

  PropertyCheck structure{"structure.disjoint-cover", true, ""};
  VertexSet seen(n);
  for (std::size_t i = 0; i < r.clusters.size() && structure.pass; ++i) {
    if (seen.intersects(r.clusters[i])) {
      structure.pass = false;
      structure.witness = "cluster " + std::to_string(i + 1) + " overlaps an earlier set";
    }
    seen = seen | r.clusters[i];
  }
  if (structure.pass && seen.intersects(r.leftover)) {
    structure.pass = false;
    structure.witness = "leftover overlaps a cluster";
  }
  if (structure.pass && (seen | r.leftover) != VertexSet::full(n)) {
    structure.pass = false;
    structure.witness = "clusters and leftover do not cover the vertex set";
  }
  rep.checks.push_back(structure);

  PropertyCheck coverage{"1.coverage", true, ""};
  if (r.leftover.count() > max_leftover) {
    coverage.pass = false;
    coverage.witness = "leftover has " + std::to_string(r.leftover.count()) + " > " +
                       std::to_string(max_leftover) + " vertices";
  }
  rep.checks.push_back(coverage);

  PropertyCheck size_check{"2.min-size", true, ""};
  for (std::size_t i = 0; i < r.clusters.size() && size_check.pass; ++i)
    if (r.clusters[i].count() < min_size) {
      size_check.pass = false;
      size_check.witness = "cluster " + std::to_string(i + 1) + " has " +
                           std::to_string(r.clusters[i].count()) + " < " + std::to_string(min_size) +
                           " vertices";
    }
  rep.checks.push_back(size_check);

  PropertyCheck intra{"3.intra-distance", true, ""};
  for (std::size_t i = 0; i < r.clusters.size() && intra.pass; ++i) {
    auto vs = r.clusters[i].to_vector();
    for (std::size_t a = 0; a < vs.size() && intra.pass; ++a)
      for (std::size_t b = a + 1; b < vs.size() && intra.pass; ++b) {
        const int d = nbhd_distance(g, vs[a], vs[b]);
        if (!(double(d) < K)) {
          intra.pass = false;
          intra.witness = "pair (" + std::to_string(vs[a]) + "," + std::to_string(vs[b]) + ") in cluster " +
                          std::to_string(i + 1) + " has delta=" + std::to_string(d);
        }
      }
  }
  rep.checks.push_back(intra);

  PropertyCheck inter{"4.inter-distance", true, ""};
  for (std::size_t i = 0; i < r.clusters.size() && inter.pass; ++i)
    for (std::size_t j = i + 1; j < r.clusters.size() && inter.pass; ++j) {
      auto va = r.clusters[i].to_vector();
      auto vb = r.clusters[j].to_vector();
      for (int x : va) {
        for (int y : vb) {
          const int d = nbhd_distance(g, x, y);
          if (!(double(d) > J)) {
            inter.pass = false;
            inter.witness = "pair (" + std::to_string(x) + "," + std::to_string(y) + ") across clusters " +
                            std::to_string(i + 1) + "," + std::to_string(j + 1) + " has delta=" +
                            std::to_string(d);
            break;
          }
        }
        if (!inter.pass) break;
      }
    }
  rep.checks.push_back(inter);
  return rep;
}

/// x and y are S-independent when their closed neighbourhoods inside S are
/// disjoint (in G, or in the complement when in_complement). Sampled
/// degrees of S-independent vertices are independent random variables.
inline bool s_independent(const Graph& g, const VertexSet& s, int x, int y, bool in_complement = false) {
  if (s.parent_n() != g.n()) throw std::invalid_argument("s_independent: subset does not belong to this graph");
  if (x == y) throw std::invalid_argument("s_independent: vertices must be distinct");
  if (!s.test(x) || !s.test(y)) throw std::invalid_argument("s_independent: both vertices must lie in S");
  VertexSet nx = in_complement ? g.non_neighbors(x) : g.neighbors(x);
  VertexSet ny = in_complement ? g.non_neighbors(y) : g.neighbors(y);
  VertexSet cx = (nx & s).set(x);
  VertexSet cy = (ny & s).set(y);
  return !cx.intersects(cy);
}

/// The unique non-negative r with r*n/(k-1+eps) < a_size - eta*n <=
/// (r+1)*n/(k-1+eps). Always <= k-1.
inline int compute_r(int a_size, int n, int k, double eps, double eta) {
  if (n < 1 || k < 2) throw std::invalid_argument("compute_r: need n >= 1 and k >= 2");
  const double value = double(a_size) - eta * double(n);
  if (!(value > 0.0)) throw std::domain_error("compute_r: set not larger than eta*n, r undefined");
  const double step = double(n) / (double(k) - 1.0 + eps);
  long r = static_cast<long>(std::ceil(value / step)) - 1;
  // nudge against float rounding at interval boundaries
  while (r >= 0 && double(r) * step >= value) --r;
  while (double(r + 1) * step < value) ++r;
  if (r < 0 || r > k - 1) throw std::logic_error("compute_r: index escaped [0, k-1]");
  return static_cast<int>(r);
}

enum class Side { graph, complement, neither };

/// Which side (if any) has maximum degree at most 4K. When all pairwise
/// neighbourhood distances are at most K, one side always qualifies.
inline Side bounded_degree_side(const Graph& g, double K) {
  const int n = g.n();
  int max_deg = 0, min_deg = n;
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    max_deg = std::max(max_deg, d);
    min_deg = std::min(min_deg, d);
  }
  if (n == 0) return Side::graph;
  if (double(max_deg) <= 4.0 * K) return Side::graph;
  if (double(n - 1 - min_deg) <= 4.0 * K) return Side::complement;
  return Side::neither;
}

/// Number of vertices of degree at least k-1.
inline int high_degree_count(const Graph& g, int k) {
  int c = 0;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) >= k - 1) ++c;
  return c;
}

struct IndependentCore {
  bool in_complement = false;  // orientation actually used
  VertexSet core;
};

/// Select a pairwise A-independent core of A: orient to the side of G[A]
/// with smaller maximum degree (ties keep the graph side), drop vertices of
/// degree >= k-1 together with everything dependent on them, keep degrees
/// in [r, k-2], then greedily pick A-independent vertices by ascending
/// index. May come back empty when nothing qualifies.
inline IndependentCore independent_core(const Graph& g, const VertexSet& a, int k, int r) {
  if (a.parent_n() != g.n()) throw std::invalid_argument("independent_core: subset does not belong to this graph");
  if (r > k - 2) throw std::invalid_argument("independent_core: requires r <= k-2");
  if (r < 0) throw std::invalid_argument("independent_core: negative r");

  auto members = a.to_vector();
  int max_deg_graph = 0, max_deg_comp = 0;
  for (int v : members) {
    const int d = degree_in(g, v, a);
    max_deg_graph = std::max(max_deg_graph, d);
    max_deg_comp = std::max(max_deg_comp, static_cast<int>(members.size()) - 1 - d);
  }
  IndependentCore out;
  out.in_complement = max_deg_comp < max_deg_graph;

  auto closed_nbhd_in_a = [&](int v) {
    VertexSet nb = out.in_complement ? g.non_neighbors(v) : g.neighbors(v);
    return (nb & a).set(v);
  };
  auto deg_f = [&](int v) {
    const int d = degree_in(g, v, a);
    return out.in_complement ? static_cast<int>(members.size()) - 1 - d : d;
  };

  VertexSet high_closure(g.n());  // closed neighbourhoods of deg >= k-1 vertices
  for (int v : members)
    if (deg_f(v) >= k - 1) high_closure = high_closure | closed_nbhd_in_a(v);

  VertexSet taken_closure(g.n());
  out.core = VertexSet(g.n());
  for (int v : members) {
    const int d = deg_f(v);
    if (d < r || d > k - 2) continue;
    VertexSet cl = closed_nbhd_in_a(v);
    if (cl.intersects(high_closure)) continue;
    if (cl.intersects(taken_closure)) continue;
    out.core.set(v);
    taken_closure = taken_closure | cl;
  }
  return out;
}

}  // namespace degdiv

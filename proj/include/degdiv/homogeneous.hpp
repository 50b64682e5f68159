#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "degdiv/errors.hpp"
#include "degdiv/graph.hpp"
#include "degdiv/rational.hpp"
#include "degdiv/rng.hpp"

namespace degdiv {

inline constexpr int kDefaultExactGuard = 64;

struct HomWitness {
  enum class Kind { clique, independent };
  Kind kind = Kind::clique;
  VertexSet members;
  int size = 0;
};

namespace detail {

/// Branch-and-bound maximum clique over bitset rows with a greedy-colouring
/// upper bound. Vertices are searched in descending-degree order (ties by
/// index) so results are deterministic.
class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const Graph& g) : g_(g), n_(g.n()), w_(words_for(g.n())) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      int da = g.degree(a), db = g.degree(b);
      return da != db ? da > db : a < b;
    });
    adj_.assign(static_cast<std::size_t>(n_) * w_, 0);
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i) pos[order_[i]] = i;
    for (int v = 0; v < n_; ++v) {
      Word* out = &adj_[static_cast<std::size_t>(pos[v]) * w_];
      for (int u : g.neighbors(v).to_vector()) out[pos[u] >> 6] |= Word(1) << (pos[u] & 63);
    }
    cand_.assign(static_cast<std::size_t>(n_ + 1) * std::max(w_, 1), 0);
    scratch_q_.assign(w_, 0);
    scratch_c_.assign(w_, 0);
    colour_seq_.resize(n_ + 1);
    r_stack_.resize(n_);
  }

  VertexSet run() {
    if (n_ == 0) return VertexSet(0);
    Word* root = &cand_[0];
    for (int v = 0; v < n_; ++v) root[v >> 6] |= Word(1) << (v & 63);
    best_ = 0;
    expand(0, 0);
    VertexSet members(n_);
    for (int i : best_members_) members.set(order_[i]);
    return members;
  }

 private:
  const Word* row(int v) const { return &adj_[static_cast<std::size_t>(v) * w_]; }

  bool any(const Word* p) const {
    for (int i = 0; i < w_; ++i)
      if (p[i]) return true;
    return false;
  }

  // Greedy sequential colouring of the candidate set; emits (vertex, colour)
  // with colours non-decreasing. colour is an upper bound on the largest
  // clique inside the still-unprocessed candidates.
  void colour(const Word* P, std::vector<std::pair<int, int>>& seq) {
    seq.clear();
    std::copy(P, P + w_, scratch_q_.begin());
    int c = 0;
    while (any(scratch_q_.data())) {
      ++c;
      std::copy(scratch_q_.begin(), scratch_q_.end(), scratch_c_.begin());
      while (true) {
        int v = -1;
        for (int i = 0; i < w_; ++i)
          if (scratch_c_[i]) {
            v = i * 64 + std::countr_zero(scratch_c_[i]);
            break;
          }
        if (v < 0) break;
        scratch_c_[v >> 6] &= ~(Word(1) << (v & 63));
        scratch_q_[v >> 6] &= ~(Word(1) << (v & 63));
        const Word* rv = row(v);
        for (int i = 0; i < w_; ++i) scratch_c_[i] &= ~rv[i];
        seq.emplace_back(v, c);
      }
    }
  }

  void expand(int depth, int r_size) {
    Word* P = &cand_[static_cast<std::size_t>(depth) * w_];
    auto& seq = colour_seq_[depth];
    colour(P, seq);
    for (int i = static_cast<int>(seq.size()) - 1; i >= 0; --i) {
      if (r_size + seq[i].second <= best_) return;
      const int v = seq[i].first;
      r_stack_[r_size] = v;
      Word* C = &cand_[static_cast<std::size_t>(depth + 1) * w_];
      const Word* rv = row(v);
      bool child_any = false;
      for (int j = 0; j < w_; ++j) {
        C[j] = P[j] & rv[j];
        child_any |= C[j] != 0;
      }
      if (!child_any) {
        if (r_size + 1 > best_) {
          best_ = r_size + 1;
          best_members_.assign(r_stack_.begin(), r_stack_.begin() + best_);
        }
      } else {
        expand(depth + 1, r_size + 1);
      }
      P[v >> 6] &= ~(Word(1) << (v & 63));
    }
  }

  const Graph& g_;
  int n_, w_;
  std::vector<int> order_;
  std::vector<Word> adj_;
  std::vector<Word> cand_;
  std::vector<Word> scratch_q_, scratch_c_;
  std::vector<std::vector<std::pair<int, int>>> colour_seq_;
  std::vector<int> r_stack_;
  std::vector<int> best_members_;
  int best_ = 0;
};

inline void verify_clique(const Graph& g, const VertexSet& members) {
  auto vs = members.to_vector();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) throw std::logic_error("clique witness failed self-check");
}

inline void verify_independent(const Graph& g, const VertexSet& members) {
  auto vs = members.to_vector();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) throw std::logic_error("independent-set witness failed self-check");
}

}  // namespace detail

/// Exact maximum clique. Refuses graphs beyond the guard; use greedy_clique
/// or caro_wei_greedy on larger instances.
inline HomWitness max_clique(const Graph& g, int guard_n = kDefaultExactGuard) {
  if (g.n() > guard_n)
    throw capability_error("max_clique: n=" + std::to_string(g.n()) + " exceeds exact-search guard " +
                           std::to_string(guard_n) + "; use the heuristic path");
  detail::MaxCliqueSearch search(g);
  VertexSet members = search.run();
  detail::verify_clique(g, members);
  return {HomWitness::Kind::clique, members, members.count()};
}

inline HomWitness max_independent_set(const Graph& g, int guard_n = kDefaultExactGuard) {
  if (g.n() > guard_n)
    throw capability_error("max_independent_set: n=" + std::to_string(g.n()) + " exceeds exact-search guard " +
                           std::to_string(guard_n) + "; use the heuristic path");
  HomWitness w = max_clique(complement(g), guard_n);
  detail::verify_independent(g, w.members);
  return {HomWitness::Kind::independent, w.members, w.size};
}

struct HomResult {
  int size = 0;
  HomWitness witness;
  bool exact = true;
};

/// hom(G): the larger of the clique and independence numbers, with a
/// witness. Ties keep the clique side.
inline HomResult hom(const Graph& g, int guard_n = kDefaultExactGuard) {
  HomWitness c = max_clique(g, guard_n);
  HomWitness i = max_independent_set(g, guard_n);
  return c.size >= i.size ? HomResult{c.size, c, true} : HomResult{i.size, i, true};
}

/// Greedy clique in descending-degree order; a cheap certified lower bound.
inline VertexSet greedy_clique(const Graph& g) {
  std::vector<int> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    int da = g.degree(a), db = g.degree(b);
    return da != db ? da > db : a < b;
  });
  VertexSet cand = VertexSet::full(g.n());
  VertexSet taken(g.n());
  for (int v : order) {
    if (!cand.test(v)) continue;
    taken.set(v);
    cand = cand & g.neighbors(v);
  }
  return taken;
}

struct CaroWei {
  Rational sum;          // sum over v of 1/(deg(v)+1)
  Rational turan_bound;  // v(G)^2 / (2 e(G) + v(G)); 0 for the empty graph
};

inline CaroWei caro_wei_sum(const Graph& g) {
  CaroWei cw;
  cw.sum = 0;
  for (int v = 0; v < g.n(); ++v) cw.sum += Rational(1, g.degree(v) + 1);
  if (g.n() == 0)
    cw.turan_bound = 0;
  else
    cw.turan_bound = Rational(BigInt(g.n()) * g.n(), 2 * g.edge_count() + g.n());
  return cw;
}

/// Random uniform vertex ordering; keep exactly the vertices that precede
/// all of their neighbours. The result is independent and its expected size
/// equals caro_wei_sum(g).
inline VertexSet caro_wei_greedy(const Graph& g, std::uint64_t seed) {
  const int n = g.n();
  SplitMix64 rng(seed);
  std::vector<std::uint64_t> key(n);
  for (auto& k : key) k = rng.next();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return key[a] != key[b] ? key[a] < key[b] : a < b;
  });
  VertexSet seen(n);
  VertexSet kept(n);
  for (int v : order) {
    if (!seen.intersects(g.neighbors(v))) kept.set(v);
    seen.set(v);
  }
  return kept;
}

/// Heuristic hom estimate for graphs beyond the exact guard: the better of
/// a greedy clique and one Caro-Wei draw. Flagged non-exact.
inline HomResult hom_estimate(const Graph& g, std::uint64_t seed) {
  VertexSet c = greedy_clique(g);
  VertexSet i = caro_wei_greedy(g, seed);
  if (c.count() >= i.count())
    return {c.count(), {HomWitness::Kind::clique, c, c.count()}, false};
  return {i.count(), {HomWitness::Kind::independent, i, i.count()}, false};
}

}  // namespace degdiv

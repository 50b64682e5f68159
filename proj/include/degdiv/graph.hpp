#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace degdiv {

using Word = std::uint64_t;

inline int words_for(int n) { return (n + 63) >> 6; }

/// Subset of the vertices of an n-vertex graph, stored as a bitmask.
/// Immutable by convention once handed out; every set bit is < parent_n.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int parent_n) : n_(parent_n), w_(words_for(parent_n), 0) {
    if (parent_n < 0) throw std::invalid_argument("VertexSet: negative size");
  }

  static VertexSet full(int parent_n) {
    VertexSet s(parent_n);
    for (auto& w : s.w_) w = ~Word(0);
    s.trim();
    return s;
  }

  static VertexSet of(int parent_n, std::initializer_list<int> vs) {
    VertexSet s(parent_n);
    for (int v : vs) s.set(v);
    return s;
  }

  static VertexSet from_words(int parent_n, std::span<const Word> words) {
    VertexSet s(parent_n);
    if (words.size() != s.w_.size())
      throw std::invalid_argument("VertexSet: word count mismatch");
    std::copy(words.begin(), words.end(), s.w_.begin());
    s.trim();
    return s;
  }

  int parent_n() const { return n_; }

  int count() const {
    int c = 0;
    for (Word w : w_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (Word w : w_)
      if (w) return false;
    return true;
  }

  bool test(int v) const {
    check_vertex(v);
    return (w_[v >> 6] >> (v & 63)) & 1;
  }

  VertexSet& set(int v) {
    check_vertex(v);
    w_[v >> 6] |= Word(1) << (v & 63);
    return *this;
  }

  VertexSet& reset(int v) {
    check_vertex(v);
    w_[v >> 6] &= ~(Word(1) << (v & 63));
    return *this;
  }

  std::span<const Word> words() const { return w_; }

  VertexSet operator&(const VertexSet& o) const { return zip(o, [](Word a, Word b) { return a & b; }); }
  VertexSet operator|(const VertexSet& o) const { return zip(o, [](Word a, Word b) { return a | b; }); }
  VertexSet operator^(const VertexSet& o) const { return zip(o, [](Word a, Word b) { return a ^ b; }); }
  VertexSet minus(const VertexSet& o) const { return zip(o, [](Word a, Word b) { return a & ~b; }); }

  VertexSet complemented() const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }

  bool intersects(const VertexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  int first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      Word w = w_[i];
      while (w) {
        f(static_cast<int>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  bool operator==(const VertexSet&) const = default;

  /// Numeric order of the masks (vertex 0 is the least significant bit);
  /// the deterministic tie-break for witnesses. Returns <0, 0 or >0.
  static int compare(const VertexSet& a, const VertexSet& b) {
    a.check_same(b);
    for (std::size_t i = a.w_.size(); i-- > 0;) {
      if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i] ? -1 : 1;
    }
    return 0;
  }

 private:
  template <class Op>
  VertexSet zip(const VertexSet& o, Op op) const {
    check_same(o);
    VertexSet r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = op(w_[i], o.w_[i]);
    return r;
  }

  void check_same(const VertexSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("VertexSet: parent size mismatch");
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex " + std::to_string(v) + " out of range");
  }

  void trim() {
    if (n_ & 63) w_.back() &= (Word(1) << (n_ & 63)) - 1;
  }

  int n_ = 0;
  std::vector<Word> w_;
};

/// Simple undirected graph as n rows of n-bit adjacency masks. Symmetric,
/// loop-free, immutable by convention once built; neighbourhood queries are
/// word-parallel AND/XOR/popcount over the rows.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n), w_(words_for(n)), adj_(static_cast<std::size_t>(n) * words_for(n), 0) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  }

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int n() const { return n_; }
  int words() const { return w_; }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u) * w_ + (v >> 6)] |= Word(1) << (v & 63);
    adj_[static_cast<std::size_t>(v) * w_ + (u >> 6)] |= Word(1) << (u & 63);
  }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u) * w_ + (v >> 6)] >> (v & 63)) & 1;
  }

  std::span<const Word> row(int v) const {
    check_vertex(v);
    return {&adj_[static_cast<std::size_t>(v) * w_], static_cast<std::size_t>(w_)};
  }

  int degree(int v) const {
    int d = 0;
    for (Word w : row(v)) d += std::popcount(w);
    return d;
  }

  int max_degree() const {
    int m = 0;
    for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
    return m;
  }

  std::int64_t edge_count() const {
    std::int64_t s = 0;
    for (int v = 0; v < n_; ++v) s += degree(v);
    return s / 2;
  }

  VertexSet neighbors(int v) const { return VertexSet::from_words(n_, row(v)); }

  /// Everything not adjacent to v, excluding v itself.
  VertexSet non_neighbors(int v) const {
    return neighbors(v).complemented().reset(v);
  }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range");
  }

  int n_ = 0;
  int w_ = 0;
  std::vector<Word> adj_;

  friend Graph complement(const Graph&);
};

inline Graph complement(const Graph& g) {
  Graph c(g.n_);
  for (int v = 0; v < g.n_; ++v) {
    Word* out = &c.adj_[static_cast<std::size_t>(v) * c.w_];
    const Word* in = &g.adj_[static_cast<std::size_t>(v) * g.w_];
    for (int i = 0; i < g.w_; ++i) out[i] = ~in[i];
    if (g.n_ & 63) out[g.w_ - 1] &= (Word(1) << (g.n_ & 63)) - 1;
    out[v >> 6] &= ~(Word(1) << (v & 63));  // no loops
  }
  return c;
}

/// |Gamma(v) ∩ s|; v's own membership in s is irrelevant.
inline int degree_in(const Graph& g, int v, const VertexSet& s) {
  if (s.parent_n() != g.n()) throw std::invalid_argument("degree_in: subset does not belong to this graph");
  auto r = g.row(v);
  auto sw = s.words();
  int d = 0;
  for (std::size_t i = 0; i < sw.size(); ++i) d += std::popcount(r[i] & sw[i]);
  return d;
}

/// Neighbourhood distance: |(Gamma(x)\{y}) symdiff (Gamma(y)\{x})|.
/// Symmetric, in [0, n-2], and satisfies the triangle inequality.
inline int nbhd_distance(const Graph& g, int x, int y) {
  if (x == y) throw std::invalid_argument("nbhd_distance: vertices must be distinct");
  auto rx = g.row(x);
  auto ry = g.row(y);
  int d = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) d += std::popcount(rx[i] ^ ry[i]);
  // x and y themselves never count: drop the two bits the xor picks up
  // whenever the pair is an edge.
  if (g.adjacent(x, y)) d -= 2;
  return d;
}

struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_to_new;  // -1 where absent
  std::vector<int> new_to_old;  // ascending
};

/// G[s] on |s| vertices, relabelled densely in ascending order of s.
inline InducedSubgraph induced(const Graph& g, const VertexSet& s) {
  if (s.parent_n() != g.n()) throw std::invalid_argument("induced: subset does not belong to this graph");
  InducedSubgraph out;
  out.new_to_old = s.to_vector();
  out.old_to_new.assign(g.n(), -1);
  const int m = static_cast<int>(out.new_to_old.size());
  for (int i = 0; i < m; ++i) out.old_to_new[out.new_to_old[i]] = i;
  out.graph = Graph(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(out.new_to_old[i], out.new_to_old[j])) out.graph.add_edge(i, j);
  return out;
}

}  // namespace degdiv

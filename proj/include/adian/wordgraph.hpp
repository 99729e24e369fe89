#ifndef ADIAN_WORDGRAPH_HPP_
#define ADIAN_WORDGRAPH_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace adian {

using vertex_type = uint32_t;
using PathTrace = std::vector<vertex_type>;

//! Birooted edge-labeled inverse word graph. Only positive edges are stored;
//! an edge u --g--> v is kept as the half (g, v) in u's list and the reverse
//! index half (g^-1, u) in v's list, so reading an inverse letter is a plain
//! list lookup and the involution holds by construction.
//!
//! Vertices are never deleted: folding merges them through a union-find
//! (path halving, splice-by-list-size) and edge lists are re-queued until no
//! two half-edges at a vertex carry the same letter. fold_count() counts
//! vertex merges only; removing a parallel duplicate edge is not a merge.
class WordGraph {
 public:
  explicit WordGraph(uint32_t alphabet_size) : alphabet_(alphabet_size) {}

  uint32_t alphabet_size() const { return alphabet_; }

  vertex_type add_vertex() {
    vertex_type v = static_cast<vertex_type>(parent_.size());
    parent_.push_back(v);
    adj_.emplace_back();
    ++num_vertices_;
    return v;
  }

  //! Number of live (canonical) vertices.
  size_t num_vertices() const { return num_vertices_; }

  //! Number of positive edges.
  size_t num_edges() const { return num_edges_; }

  uint64_t fold_count() const { return fold_count_; }

  vertex_type find(vertex_type v) const {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void set_roots(vertex_type alpha, vertex_type beta) {
    alpha_ = alpha;
    beta_ = beta;
  }

  vertex_type alpha() const { return find(alpha_); }
  vertex_type beta() const { return find(beta_); }

  //! Add the edge u --x--> v (stored positively; an inverse x flips it).
  void add_edge(vertex_type u, Letter x, vertex_type v) {
    if (x.is_inverse()) {
      std::swap(u, v);
      x = x.inverse();
    }
    u = find(u);
    v = find(v);
    adj_[u].push_back(Half{x, v});
    adj_[v].push_back(Half{x.inverse(), u});
    ++num_edges_;
  }

  //! Canonical vertex ids in ascending order.
  std::vector<vertex_type> canonical_vertices() const {
    std::vector<vertex_type> out;
    out.reserve(num_vertices_);
    for (vertex_type v = 0; v < parent_.size(); ++v) {
      if (find(v) == v) {
        out.push_back(v);
      }
    }
    return out;
  }

  //! All half-edges at v as (letter, canonical target), in list order.
  template <typename F>
  void for_each_half(vertex_type v, F&& f) const {
    for (const Half& h : adj_[find(v)]) {
      f(h.letter, find(h.to));
    }
  }

  //! All positive edges as (src, gen, dst) over canonical ids, sorted.
  std::vector<std::array<vertex_type, 3>> positive_edges() const {
    std::vector<std::array<vertex_type, 3>> out;
    out.reserve(num_edges_);
    for (vertex_type v : canonical_vertices()) {
      for (const Half& h : adj_[v]) {
        if (h.letter.is_positive()) {
          out.push_back({v, h.letter.gen(), find(h.to)});
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  //! Unique x-successor of v in a deterministic graph (first match otherwise).
  std::optional<vertex_type> target(vertex_type v, Letter x) const {
    for (const Half& h : adj_[find(v)]) {
      if (h.letter == x) {
        return find(h.to);
      }
    }
    return std::nullopt;
  }

  bool is_deterministic() const {
    for (vertex_type v : canonical_vertices()) {
      std::set<uint32_t> seen;
      for (const Half& h : adj_[v]) {
        if (!seen.insert(h.letter.code()).second) {
          return false;
        }
      }
    }
    return true;
  }

  //! Determinize: repeatedly merge the targets of same-labeled half-edges
  //! (Stallings folding) until none remain. Confluent, so the quotient does
  //! not depend on processing order. Returns the number of vertex merges.
  size_t fold() {
    uint64_t before = fold_count_;
    std::vector<vertex_type> work = canonical_vertices();
    while (!work.empty()) {
      vertex_type v = find(work.back());
      work.pop_back();
      cleanup_vertex(v, work);
    }
    return static_cast<size_t>(fold_count_ - before);
  }

  //! Involution bookkeeping check: every stored half has its mirror.
  bool involution_consistent() const {
    std::map<std::array<uint32_t, 3>, long> balance;  // (min, max over (v,letter,to) halves)
    size_t halves = 0;
    for (vertex_type v : canonical_vertices()) {
      for (const Half& h : adj_[v]) {
        ++halves;
        vertex_type t = find(h.to);
        if (h.letter.is_positive()) {
          balance[{v, h.letter.code(), t}] += 1;
        } else {
          balance[{t, h.letter.inverse().code(), v}] -= 1;
        }
      }
    }
    if (halves != 2 * num_edges_) {
      return false;
    }
    for (const auto& [key, count] : balance) {
      if (count != 0) {
        return false;
      }
    }
    return true;
  }

 private:
  struct Half {
    Letter letter;
    vertex_type to;
  };

  vertex_type unite(vertex_type a, vertex_type b, std::vector<vertex_type>& work) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return a;
    }
    if (adj_[a].size() < adj_[b].size() ||
        (adj_[a].size() == adj_[b].size() && b < a)) {
      std::swap(a, b);
    }
    adj_[a].insert(adj_[a].end(), adj_[b].begin(), adj_[b].end());
    adj_[b].clear();
    adj_[b].shrink_to_fit();
    parent_[b] = a;
    --num_vertices_;
    ++fold_count_;
    // The merge can create same-letter clashes at the merged vertex and at
    // any of its neighbors; re-queue them all.
    work.push_back(a);
    for (const Half& h : adj_[a]) {
      work.push_back(h.to);
    }
    return a;
  }

  void cleanup_vertex(vertex_type v, std::vector<vertex_type>& work) {
    bool restart = true;
    while (restart) {
      restart = false;
      v = find(v);
      auto& list = adj_[v];
      std::map<uint32_t, vertex_type> first;  // letter code -> canonical target
      for (size_t i = 0; i < list.size(); ++i) {
        vertex_type t = find(list[i].to);
        list[i].to = t;
        auto [it, inserted] = first.try_emplace(list[i].letter.code(), t);
        if (inserted) {
          continue;
        }
        if (it->second != t) {
          unite(it->second, t, work);
          restart = true;
          break;
        }
        // Exact parallel duplicate: drop this half and one mirror half.
        Letter mirror = list[i].letter.inverse();
        list.erase(list.begin() + i);
        auto& tl = adj_[find(t)];
        for (size_t j = 0; j < tl.size(); ++j) {
          if (tl[j].letter == mirror && find(tl[j].to) == v) {
            tl.erase(tl.begin() + j);
            break;
          }
        }
        --num_edges_;
        restart = true;
        break;
      }
    }
  }

  uint32_t alphabet_;
  mutable std::vector<vertex_type> parent_;
  std::vector<std::vector<Half>> adj_;
  size_t num_vertices_ = 0;
  size_t num_edges_ = 0;
  uint64_t fold_count_ = 0;
  vertex_type alpha_ = 0;
  vertex_type beta_ = 0;
};

// ---------------------------------------------------------------------------
// Construction.
// ---------------------------------------------------------------------------

//! Linear graph of w: a simple path alpha = g0 -> g1 -> ... -> gn = beta
//! whose i-th edge is labeled w[i] (inverse letters become reversed positive
//! edges). The empty word gives a single vertex with alpha = beta.
inline WordGraph linear_graph(uint32_t alphabet_size, const Word& w) {
  WordGraph g(alphabet_size);
  vertex_type prev = g.add_vertex();
  g.set_roots(prev, prev);
  for (Letter x : w) {
    vertex_type next = g.add_vertex();
    g.add_edge(prev, x, next);
    prev = next;
  }
  g.set_roots(0, prev);
  return g;
}

inline WordGraph linear_graph(const Presentation& p, const Word& w) {
  return linear_graph(p.alphabet_size(), w);
}

inline WordGraph fold_to_deterministic(WordGraph g) {
  g.fold();
  return g;
}

//! Munn tree of w: the determinized linear graph.
inline WordGraph munn_tree(uint32_t alphabet_size, const Word& w) {
  return fold_to_deterministic(linear_graph(alphabet_size, w));
}

inline WordGraph munn_tree(const Presentation& p, const Word& w) {
  return munn_tree(p.alphabet_size(), w);
}

// ---------------------------------------------------------------------------
// Reading.
// ---------------------------------------------------------------------------

//! Trace of reading w from start: the visited vertices, length |w| + 1.
//! Meaningful on deterministic graphs, where the trace is unique.
inline std::optional<PathTrace> read_word(const WordGraph& g, vertex_type start, const Word& w) {
  PathTrace trace;
  trace.reserve(w.size() + 1);
  vertex_type v = g.find(start);
  trace.push_back(v);
  for (Letter x : w) {
    auto next = g.target(v, x);
    if (!next) {
      return std::nullopt;
    }
    v = *next;
    trace.push_back(v);
  }
  return trace;
}

//! Membership of w in the language of the birooted graph: w is readable
//! from alpha and ends at beta.
inline bool accepts(const WordGraph& g, const Word& w) {
  auto trace = read_word(g, g.alpha(), w);
  return trace && trace->back() == g.beta();
}

// ---------------------------------------------------------------------------
// Canonical form and isomorphism.
// ---------------------------------------------------------------------------

namespace detail {

//! Breadth-first numbering from alpha, neighbors explored in letter-code
//! order. On a deterministic graph this is the unique label-respecting
//! numbering, so two graphs are birooted-isomorphic exactly when their
//! renumbered edge lists and beta positions agree.
struct BfsNumbering {
  std::vector<vertex_type> order;          // dense id -> canonical id
  std::map<vertex_type, uint32_t> index;  // canonical id -> dense id
};

inline BfsNumbering bfs_numbering(const WordGraph& g) {
  BfsNumbering num;
  vertex_type root = g.alpha();
  num.order.push_back(root);
  num.index.emplace(root, 0);
  for (size_t i = 0; i < num.order.size(); ++i) {
    vertex_type v = num.order[i];
    for (uint32_t code = 0; code < 2 * g.alphabet_size(); ++code) {
      auto t = g.target(v, Letter::from_code(code));
      if (t && num.index.find(*t) == num.index.end()) {
        num.index.emplace(*t, static_cast<uint32_t>(num.order.size()));
        num.order.push_back(*t);
      }
    }
  }
  if (num.order.size() != g.num_vertices()) {
    throw Error(Error::Code::NotConnected, "graph has vertices unreachable from alpha");
  }
  return num;
}

}  // namespace detail

struct CanonicalForm {
  uint32_t alphabet;
  uint32_t num_vertices;
  uint32_t beta;
  std::vector<std::array<uint32_t, 3>> edges;  // (src, gen, dst), dense ids, sorted

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

inline CanonicalForm canonical_form(const WordGraph& g) {
  auto num = detail::bfs_numbering(g);
  CanonicalForm form;
  form.alphabet = g.alphabet_size();
  form.num_vertices = static_cast<uint32_t>(g.num_vertices());
  form.beta = num.index.at(g.beta());
  for (auto [u, gen, v] : g.positive_edges()) {
    form.edges.push_back({num.index.at(u), gen, num.index.at(v)});
  }
  std::sort(form.edges.begin(), form.edges.end());
  return form;
}

//! Birooted isomorphism of deterministic, alpha-connected graphs.
inline bool birooted_isomorphic(const WordGraph& a, const WordGraph& b) {
  return canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------------------
// Positive structure.
// ---------------------------------------------------------------------------

namespace detail {

//! Positive out-neighbors of v as (gen, target), sorted.
inline std::vector<std::pair<uint32_t, vertex_type>> positive_out(const WordGraph& g,
                                                                  vertex_type v) {
  std::vector<std::pair<uint32_t, vertex_type>> out;
  g.for_each_half(v, [&](Letter x, vertex_type t) {
    if (x.is_positive()) {
      out.emplace_back(x.gen(), t);
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline bool has_positive_in(const WordGraph& g, vertex_type v) {
  bool found = false;
  g.for_each_half(v, [&](Letter x, vertex_type) { found = found || x.is_inverse(); });
  return found;
}

inline bool has_positive_out(const WordGraph& g, vertex_type v) {
  bool found = false;
  g.for_each_half(v, [&](Letter x, vertex_type) { found = found || x.is_positive(); });
  return found;
}

}  // namespace detail

//! First directed cycle through positive edges, as a closed vertex list
//! (front == back), or nullopt if the positive part is acyclic. Scan order
//! is deterministic: vertices ascending, letters ascending.
inline std::optional<std::vector<vertex_type>> find_positive_cycle(const WordGraph& g) {
  enum Color : uint8_t { White, Gray, Black };
  std::map<vertex_type, Color> color;
  auto verts = g.canonical_vertices();
  for (vertex_type v : verts) {
    color[v] = White;
  }
  for (vertex_type root : verts) {
    if (color[root] != White) {
      continue;
    }
    // Iterative DFS keeping the gray path for cycle reconstruction.
    std::vector<std::pair<vertex_type, size_t>> stack{{root, 0}};
    std::vector<vertex_type> path{root};
    color[root] = Gray;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto out = detail::positive_out(g, v);
      if (next >= out.size()) {
        color[v] = Black;
        stack.pop_back();
        path.pop_back();
        continue;
      }
      vertex_type t = out[next++].second;
      if (color[t] == Gray) {
        auto at = std::find(path.begin(), path.end(), t);
        std::vector<vertex_type> cycle(at, path.end());
        cycle.push_back(t);
        return cycle;
      }
      if (color[t] == White) {
        color[t] = Gray;
        stack.emplace_back(t, 0);
        path.push_back(t);
      }
    }
  }
  return std::nullopt;
}

//! All maximal positive paths from start with their traces, in lexicographic
//! label order. A path is maximal when its endpoint has no positive
//! out-edge; if start itself has none, the unique such path is empty.
//! Requires the positive part reachable from start to be acyclic.
inline std::vector<std::pair<Word, PathTrace>> maximal_positive_path_traces(const WordGraph& g,
                                                                            vertex_type start) {
  start = g.find(start);
  {
    // Cycle guard restricted to the part reachable from start.
    enum Color : uint8_t { White, Gray, Black };
    std::map<vertex_type, Color> color;
    std::vector<std::pair<vertex_type, size_t>> stack{{start, 0}};
    color[start] = Gray;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto out = detail::positive_out(g, v);
      if (next >= out.size()) {
        color[v] = Black;
        stack.pop_back();
        continue;
      }
      vertex_type t = out[next++].second;
      auto it = color.find(t);
      if (it == color.end()) {
        color[t] = Gray;
        stack.emplace_back(t, 0);
      } else if (it->second == Gray) {
        throw Error(Error::Code::PositiveCycle, "positive cycle reachable from start");
      }
    }
  }
  std::vector<std::pair<Word, PathTrace>> out;
  Word label;
  PathTrace trace{start};
  // Depth-first enumeration; letter order makes the output lexicographic.
  auto rec = [&](auto&& self, vertex_type v) -> void {
    auto succ = detail::positive_out(g, v);
    if (succ.empty()) {
      out.emplace_back(label, trace);
      return;
    }
    for (auto [gen, t] : succ) {
      label.push_back(Letter::positive(gen));
      trace.push_back(t);
      self(self, t);
      label.pop_back();
      trace.pop_back();
    }
  };
  rec(rec, start);
  return out;
}

inline std::vector<std::pair<Word, vertex_type>> maximal_positive_paths(const WordGraph& g,
                                                                        vertex_type start) {
  std::vector<std::pair<Word, vertex_type>> out;
  for (auto& [label, trace] : maximal_positive_path_traces(g, start)) {
    out.emplace_back(std::move(label), trace.back());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Transforms and export.
// ---------------------------------------------------------------------------

//! Mirror image: every positive edge u --g--> v becomes v --g--> u and the
//! roots swap, so a path labeled w from x to y becomes a path labeled
//! reversed(w) from y to x. fold_count carries over as construction history.
inline WordGraph reversed(const WordGraph& g) {
  WordGraph out(g.alphabet_size());
  std::map<vertex_type, vertex_type> to_new;
  for (vertex_type v : g.canonical_vertices()) {
    to_new[v] = out.add_vertex();
  }
  for (auto [u, gen, v] : g.positive_edges()) {
    out.add_edge(to_new[v], Letter::positive(gen), to_new[u]);
  }
  out.set_roots(to_new.at(g.beta()), to_new.at(g.alpha()));
  return out;
}

//! Map from canonical vertex id to its position in the reversed graph built
//! by reversed(); exposed for callers that must transport traces.
inline std::map<vertex_type, vertex_type> reversal_vertex_map(const WordGraph& g) {
  std::map<vertex_type, vertex_type> to_new;
  vertex_type next = 0;
  for (vertex_type v : g.canonical_vertices()) {
    to_new[v] = next++;
  }
  return to_new;
}

//! Graphviz export. Vertices use the breadth-first dense numbering, alpha is
//! a double circle, beta has a bold outline.
inline std::string to_dot(const WordGraph& g, const Presentation& p) {
  auto num = detail::bfs_numbering(g);
  std::string out = "digraph G {\n  rankdir=LR;\n  node [shape=circle];\n";
  uint32_t alpha = num.index.at(g.alpha());
  uint32_t beta = num.index.at(g.beta());
  if (alpha == beta) {
    out += "  " + std::to_string(alpha) + " [shape=doublecircle, style=bold];\n";
  } else {
    out += "  " + std::to_string(alpha) + " [shape=doublecircle];\n";
    out += "  " + std::to_string(beta) + " [style=bold];\n";
  }
  std::vector<std::array<uint32_t, 3>> edges;
  for (auto [u, gen, v] : g.positive_edges()) {
    edges.push_back({num.index.at(u), gen, num.index.at(v)});
  }
  std::sort(edges.begin(), edges.end());
  for (auto [u, gen, v] : edges) {
    out += "  " + std::to_string(u) + " -> " + std::to_string(v) + " [label=\"" + p.name(gen) +
           "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace adian

#endif  // ADIAN_WORDGRAPH_HPP_

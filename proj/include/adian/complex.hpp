#ifndef ADIAN_COMPLEX_HPP_
#define ADIAN_COMPLEX_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "presentation.hpp"
#include "word.hpp"
#include "wordgraph.hpp"

namespace adian {

//! 2-cell spanned by one relation instance: both sides of relation
//! relation_index are readable between the same pair of vertices, and the
//! traces record the exact paths. Two instances with identical traces are
//! the same face, which keeps the face set stable under re-runs.
struct Face {
  uint32_t relation_index;
  PathTrace lhs_trace;
  PathTrace rhs_trace;

  friend auto operator<=>(const Face&, const Face&) = default;
};

//! Word graph plus the faces pasted onto it so far.
struct Complex {
  Presentation presentation;
  WordGraph graph;
  std::set<Face> faces;

  Complex(Presentation p, WordGraph g)
      : presentation(std::move(p)), graph(std::move(g)) {}
};

inline Face canonical_face(const WordGraph& g, Face f) {
  for (vertex_type& v : f.lhs_trace) {
    v = g.find(v);
  }
  for (vertex_type& v : f.rhs_trace) {
    v = g.find(v);
  }
  return f;
}

//! Insert a face (traces canonicalized first); false if already present.
inline bool record_face(Complex& c, Face f) {
  return c.faces.insert(canonical_face(c.graph, std::move(f))).second;
}

//! Rewrite all face traces through the union-find and drop duplicates that
//! folding has identified.
inline void canonicalize_faces(Complex& c) {
  std::set<Face> fresh;
  for (const Face& f : c.faces) {
    fresh.insert(canonical_face(c.graph, f));
  }
  c.faces = std::move(fresh);
}

//! Fold the skeleton and re-canonicalize faces. Returns vertex merges.
inline size_t fold_complex(Complex& c) {
  size_t merges = c.graph.fold();
  canonicalize_faces(c);
  return merges;
}

//! Add a fresh path labeled w from start to end: interior vertices are new,
//! endpoints are the given ones. Returns the trace. w must be nonempty.
inline PathTrace glue_path(WordGraph& g, vertex_type start, const Word& w, vertex_type end) {
  PathTrace trace;
  trace.reserve(w.size() + 1);
  vertex_type cur = g.find(start);
  trace.push_back(cur);
  for (size_t i = 0; i < w.size(); ++i) {
    vertex_type next = (i + 1 == w.size()) ? g.find(end) : g.add_vertex();
    g.add_edge(cur, w[i], next);
    cur = next;
    trace.push_back(cur);
  }
  return trace;
}

struct AttachResult {
  bool face_added;  // the face was not already present
  bool glued;       // a fresh copy of one side was pasted in
  PathTrace lhs_trace;
  PathTrace rhs_trace;
};

//! Ensure relation rel spans a face at base: if only one side is readable
//! from base, paste a fresh copy of the other side co-terminally with it;
//! then record the face. Throws SideNotReadable when neither side can be
//! read. The caller folds afterwards if gluing may have broken determinism
//! (pasting at a vertex with no out-edge on the first pasted letter keeps
//! the graph deterministic and needs no fold).
inline AttachResult attach_face(Complex& c, uint32_t rel, vertex_type base) {
  const Relation& r = c.presentation.relations().at(rel);
  auto lt = read_word(c.graph, base, r.lhs);
  auto rt = read_word(c.graph, base, r.rhs);
  AttachResult out{false, false, {}, {}};
  if (lt && rt && lt->back() == rt->back()) {
    out.lhs_trace = *lt;
    out.rhs_trace = *rt;
  } else if (lt) {
    out.glued = true;
    out.lhs_trace = *lt;
    out.rhs_trace = glue_path(c.graph, base, r.rhs, lt->back());
  } else if (rt) {
    out.glued = true;
    out.lhs_trace = glue_path(c.graph, base, r.lhs, rt->back());
    out.rhs_trace = *rt;
  } else {
    throw Error(Error::Code::SideNotReadable,
                "no side of relation " + std::to_string(rel) + " is readable here");
  }
  out.face_added = record_face(c, Face{rel, out.lhs_trace, out.rhs_trace});
  return out;
}

//! Single expansion step at (rel, base). Unlike attach_face this refuses to
//! be a no-op: if both sides already run co-terminally the step does not
//! apply. Leaves the complex unfolded so the caller can inspect the paste.
inline AttachResult elementary_expansion(Complex& c, uint32_t rel, vertex_type base) {
  const Relation& r = c.presentation.relations().at(rel);
  auto lt = read_word(c.graph, base, r.lhs);
  auto rt = read_word(c.graph, base, r.rhs);
  if (lt && rt && lt->back() == rt->back()) {
    throw Error(Error::Code::NotApplicable, "both sides already readable and co-terminal");
  }
  return attach_face(c, rel, base);
}

// ---------------------------------------------------------------------------
// Contractibility check via homology rank.
// ---------------------------------------------------------------------------

namespace detail {

//! Rank of an integer matrix over the rationals, by fraction-free
//! (Bareiss) elimination in 128-bit integers. Throws on overflow instead
//! of wrapping; the matrices here are small and sparse, so growth past the
//! guard means a bug, not a workload.
inline size_t integer_matrix_rank(std::vector<std::vector<long long>> input) {
  using Big = __int128;
  const Big guard = Big(1) << 100;
  size_t rows = input.size();
  if (rows == 0) {
    return 0;
  }
  size_t cols = input[0].size();
  std::vector<std::vector<Big>> a(rows, std::vector<Big>(cols));
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) {
      a[r][c] = input[r][c];
    }
  }
  Big prev = 1;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) {
      ++piv;
    }
    if (piv == rows) {
      continue;
    }
    std::swap(a[rank], a[piv]);
    for (size_t r = rank + 1; r < rows; ++r) {
      for (size_t c = col + 1; c < cols; ++c) {
        Big hi = a[rank][col];
        Big lo = a[r][col];
        if (hi > guard || -hi > guard || lo > guard || -lo > guard ||
            a[r][c] > guard || -a[r][c] > guard || a[rank][c] > guard || -a[rank][c] > guard) {
          throw std::overflow_error("rank computation exceeded the integer guard");
        }
        a[r][c] = (hi * a[r][c] - lo * a[rank][c]) / prev;
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

//! Rank over GF(p) of a sparsely stored matrix, p = 2^31 - 1. Never more
//! than the rank over the rationals, so it serves as a cheap lower bound
//! certificate for large matrices.
inline size_t sparse_rank_mod_p(std::vector<std::map<size_t, long long>> rows) {
  constexpr long long p = 2147483647;
  auto norm = [](long long v) {
    v %= p;
    return v < 0 ? v + p : v;
  };
  auto pow_mod = [&](long long base, long long exp) {
    long long acc = 1;
    base = norm(base);
    while (exp > 0) {
      if (exp & 1) {
        acc = acc * base % p;
      }
      base = base * base % p;
      exp >>= 1;
    }
    return acc;
  };
  std::map<size_t, std::map<size_t, long long>> pivots;  // leading column -> row
  size_t rank = 0;
  for (auto& row : rows) {
    for (auto it = row.begin(); it != row.end();) {
      it->second = norm(it->second);
      it = it->second == 0 ? row.erase(it) : std::next(it);
    }
    while (!row.empty()) {
      size_t lead = row.begin()->first;
      auto hit = pivots.find(lead);
      if (hit == pivots.end()) {
        long long inv = pow_mod(row.begin()->second, p - 2);
        for (auto& [col, v] : row) {
          v = v * inv % p;
        }
        pivots.emplace(lead, std::move(row));
        ++rank;
        break;
      }
      long long factor = row.begin()->second;
      for (const auto& [col, v] : hit->second) {
        long long next = norm(row[col] - factor * v % p);
        if (next == 0) {
          row.erase(col);
        } else {
          row[col] = next;
        }
      }
    }
  }
  return rank;
}

}  // namespace detail

struct BettiReport {
  size_t vertices;
  size_t edges;
  size_t faces;
  size_t cycle_rank;     // independent cycles of the 1-skeleton: E - V + 1
  size_t boundary_rank;  // rank of the face boundary matrix over the rationals
  bool pass;             // first homology vanishes rationally
};

//! Check that the pasted faces kill every independent cycle of the
//! 1-skeleton: rank of the face boundary matrix must equal E - V + 1.
//! Requires a folded, alpha-connected complex.
inline BettiReport betti_check(const Complex& c) {
  BettiReport rep{};
  rep.vertices = c.graph.num_vertices();
  rep.edges = c.graph.num_edges();
  rep.faces = c.faces.size();
  detail::bfs_numbering(c.graph);  // throws NotConnected if disconnected
  rep.cycle_rank = rep.edges + 1 - rep.vertices;
  std::map<std::array<vertex_type, 3>, size_t> col;  // positive edge -> column
  for (auto e : c.graph.positive_edges()) {
    size_t next = col.size();
    col.emplace(e, next);
  }
  std::vector<std::map<size_t, long long>> sparse;
  auto add_side = [&](std::map<size_t, long long>& row, const Word& w, const PathTrace& t,
                      long long sign) {
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i].is_positive()) {
        row[col.at({t[i], w[i].gen(), t[i + 1]})] += sign;
      } else {
        row[col.at({t[i + 1], w[i].gen(), t[i]})] -= sign;
      }
    }
  };
  for (const Face& f : c.faces) {
    const Relation& r = c.presentation.relations().at(f.relation_index);
    std::map<size_t, long long> row;
    add_side(row, r.lhs, f.lhs_trace, +1);
    add_side(row, r.rhs, f.rhs_trace, -1);
    sparse.push_back(std::move(row));
  }
  // Each face boundary is a closed 1-chain, so the rational rank can never
  // exceed the cycle rank, and the modular rank can never exceed the
  // rational one. When the cheap modular rank already reaches the cycle
  // rank, all three coincide; only a shortfall needs the exact elimination.
  size_t modular = detail::sparse_rank_mod_p(sparse);
  if (modular == rep.cycle_rank) {
    rep.boundary_rank = modular;
  } else {
    std::vector<std::vector<long long>> matrix;
    matrix.reserve(sparse.size());
    for (const auto& row : sparse) {
      std::vector<long long> dense(col.size(), 0);
      for (const auto& [idx, v] : row) {
        dense[idx] = v;
      }
      matrix.push_back(std::move(dense));
    }
    rep.boundary_rank = detail::integer_matrix_rank(std::move(matrix));
  }
  rep.pass = rep.boundary_rank == rep.cycle_rank;
  return rep;
}

// ---------------------------------------------------------------------------
// Transforms and export.
// ---------------------------------------------------------------------------

//! Presentation with every relation side written backwards.
inline Presentation reversed_presentation(const Presentation& p) {
  Presentation out;
  for (const Generator& g : p.generators()) {
    out.add_generator(g.name);
  }
  for (const Relation& r : p.relations()) {
    out.add_relation(reversed(r.lhs), reversed(r.rhs));
  }
  return out;
}

//! Mirror image of the whole complex, over the mirrored presentation. A
//! face survives with both traces reversed, since a path reading w backwards
//! reads the reversed word.
inline Complex reversed(const Complex& c) {
  Complex out(reversed_presentation(c.presentation), reversed(c.graph));
  auto to_new = reversal_vertex_map(c.graph);
  for (const Face& f : c.faces) {
    Face nf{f.relation_index, f.lhs_trace, f.rhs_trace};
    std::reverse(nf.lhs_trace.begin(), nf.lhs_trace.end());
    std::reverse(nf.rhs_trace.begin(), nf.rhs_trace.end());
    for (vertex_type& v : nf.lhs_trace) {
      v = to_new.at(c.graph.find(v));
    }
    for (vertex_type& v : nf.rhs_trace) {
      v = to_new.at(c.graph.find(v));
    }
    out.faces.insert(std::move(nf));
  }
  return out;
}

//! Graphviz export of the skeleton, with one comment line per face.
inline std::string to_dot(const Complex& c) {
  std::string base = to_dot(c.graph, c.presentation);
  base.erase(base.size() - 2);  // drop the closing "}\n"
  auto num = detail::bfs_numbering(c.graph);
  auto render = [&](const PathTrace& t) {
    std::string s;
    for (size_t i = 0; i < t.size(); ++i) {
      if (i > 0) {
        s += ",";
      }
      s += std::to_string(num.index.at(c.graph.find(t[i])));
    }
    return s;
  };
  std::vector<std::string> lines;
  for (const Face& f : c.faces) {
    lines.push_back("  // face rel=" + std::to_string(f.relation_index) + " lhs=" +
                    render(f.lhs_trace) + " rhs=" + render(f.rhs_trace) + "\n");
  }
  std::sort(lines.begin(), lines.end());
  for (const std::string& line : lines) {
    base += line;
  }
  base += "}\n";
  return base;
}

}  // namespace adian

#endif  // ADIAN_COMPLEX_HPP_

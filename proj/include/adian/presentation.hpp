#ifndef ADIAN_PRESENTATION_HPP_
#define ADIAN_PRESENTATION_HPP_

#include <cctype>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "word.hpp"

namespace adian {

struct Generator {
  uint32_t id;
  std::string name;
};

//! One defining relation lhs = rhs. Both sides are positive and non-empty;
//! Presentation::add_relation enforces this.
struct Relation {
  Word lhs;
  Word rhs;
};

//! A finite inverse monoid presentation Inv<X | R> given by a positive
//! presentation: finitely many generators and relations between positive
//! words. Value type; generator ids are dense 0..n-1 in declaration order.
class Presentation {
 public:
  Presentation() = default;

  uint32_t add_generator(const std::string& name, long line = -1) {
    validate_name(name, line);
    if (index_.count(name) != 0) {
      throw Error(Error::Code::DuplicateGenerator, "\"" + name + "\"", line);
    }
    uint32_t id = static_cast<uint32_t>(generators_.size());
    generators_.push_back(Generator{id, name});
    index_.emplace(name, id);
    return id;
  }

  void add_relation(Word lhs, Word rhs, long line = -1) {
    check_side(lhs, line);
    check_side(rhs, line);
    relations_.push_back(Relation{std::move(lhs), std::move(rhs)});
  }

  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Relation>& relations() const { return relations_; }
  uint32_t alphabet_size() const { return static_cast<uint32_t>(generators_.size()); }

  std::optional<uint32_t> generator_id(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  const std::string& name(uint32_t gen) const { return generators_.at(gen).name; }

  bool single_char_names() const {
    for (const auto& g : generators_) {
      if (g.name.size() != 1) {
        return false;
      }
    }
    return true;
  }

  //! Parse a word over X u X^-1. Tokens are separated by whitespace or '.',
  //! a trailing ' inverts the preceding generator, and when every generator
  //! name is a single character an unseparated compact string is accepted
  //! ("ab'b" = a b' b). The empty string is the empty word.
  Word parse_word(std::string_view text) const {
    Word out;
    std::string token;
    auto flush = [&](long pos) {
      if (!token.empty()) {
        parse_token(token, out, pos);
        token.clear();
      }
    };
    for (size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '.') {
        flush(-1);
      } else {
        token.push_back(c);
      }
    }
    flush(-1);
    return out;
  }

  //! Render a word as space-separated generator names with ' for inverses.
  std::string format_word(const Word& w) const {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += name(w[i].gen());
      if (w[i].is_inverse()) {
        out += '\'';
      }
    }
    return out;
  }

 private:
  void parse_token(const std::string& token, Word& out, long line) const {
    if (single_char_names()) {
      // Compact mode: each character is a generator, ' binds to the left.
      size_t i = 0;
      while (i < token.size()) {
        std::string name(1, token[i]);
        auto id = generator_id(name);
        if (!id) {
          if (token[i] == '\'') {
            throw Error(Error::Code::StrayQuote, "in \"" + token + "\"", line);
          }
          throw Error(Error::Code::UnknownGenerator, "\"" + name + "\"", line);
        }
        ++i;
        bool inv = false;
        if (i < token.size() && token[i] == '\'') {
          inv = true;
          ++i;
          if (i < token.size() && token[i] == '\'') {
            throw Error(Error::Code::StrayQuote, "in \"" + token + "\"", line);
          }
        }
        out.push_back(Letter(*id, inv));
      }
      return;
    }
    std::string name = token;
    bool inv = false;
    if (!name.empty() && name.back() == '\'') {
      inv = true;
      name.pop_back();
    }
    if (name.empty()) {
      throw Error(Error::Code::StrayQuote, "in \"" + token + "\"", line);
    }
    auto id = generator_id(name);
    if (!id) {
      throw Error(Error::Code::UnknownGenerator, "\"" + name + "\"", line);
    }
    out.push_back(Letter(*id, inv));
  }

  static void validate_name(const std::string& name, long line) {
    if (name.empty()) {
      throw Error(Error::Code::MalformedLine, "empty generator name", line);
    }
    for (char c : name) {
      unsigned char u = static_cast<unsigned char>(c);
      if (!std::isprint(u) || std::isspace(u) || c == '\'' || c == '=' || c == '#') {
        throw Error(Error::Code::MalformedLine, "invalid generator name \"" + name + "\"", line);
      }
    }
  }

  void check_side(const Word& side, long line) const {
    if (side.empty()) {
      throw Error(Error::Code::EmptyRelationSide, "", line);
    }
    for (Letter x : side) {
      if (x.is_inverse()) {
        throw Error(Error::Code::InverseLetterInRelation, name(x.gen()) + "'", line);
      }
      if (x.gen() >= alphabet_size()) {
        throw Error(Error::Code::UnknownGenerator, "", line);
      }
    }
  }

  std::vector<Generator> generators_;
  std::vector<Relation> relations_;
  std::map<std::string, uint32_t> index_;
};

//! Parse the presentation file format:
//!   # comment
//!   generators: a b
//!   relation: a b b = b a
//! Exactly one generators line, which must precede every relation line.
inline Presentation parse_presentation(std::istream& in) {
  Presentation p;
  bool have_generators = false;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) {
      continue;  // blank or comment-only line
    }
    if (head == "generators:") {
      if (have_generators) {
        throw Error(Error::Code::MalformedLine, "second generators line", line_no);
      }
      have_generators = true;
      std::string name;
      while (ls >> name) {
        p.add_generator(name, line_no);
      }
      if (p.alphabet_size() == 0) {
        throw Error(Error::Code::MalformedLine, "generators line lists no generators", line_no);
      }
    } else if (head == "relation:") {
      if (!have_generators) {
        throw Error(Error::Code::MalformedLine, "relation before generators line", line_no);
      }
      std::vector<std::string> lhs_tokens, rhs_tokens;
      bool seen_eq = false;
      std::string token;
      while (ls >> token) {
        if (token == "=") {
          if (seen_eq) {
            throw Error(Error::Code::MalformedLine, "more than one = in relation", line_no);
          }
          seen_eq = true;
        } else {
          (seen_eq ? rhs_tokens : lhs_tokens).push_back(token);
        }
      }
      if (!seen_eq) {
        throw Error(Error::Code::MalformedLine, "relation has no =", line_no);
      }
      auto side = [&](const std::vector<std::string>& tokens) {
        Word w;
        for (const auto& t : tokens) {
          if (t.find('\'') != std::string::npos) {
            throw Error(Error::Code::InverseLetterInRelation, "\"" + t + "\"", line_no);
          }
          auto id = p.generator_id(t);
          if (!id) {
            throw Error(Error::Code::UnknownGenerator, "\"" + t + "\"", line_no);
          }
          w.push_back(Letter::positive(*id));
        }
        return w;
      };
      p.add_relation(side(lhs_tokens), side(rhs_tokens), line_no);
    } else {
      throw Error(Error::Code::MalformedLine, "expected generators: or relation:", line_no);
    }
  }
  if (!have_generators) {
    throw Error(Error::Code::MalformedLine, "missing generators line", line_no + 1);
  }
  return p;
}

inline Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

// ---------------------------------------------------------------------------
// Adian condition: left and right graphs.
// ---------------------------------------------------------------------------

enum class Side { Left, Right };

//! Undirected multigraph on the generators with one edge per relation
//! joining the first (Side::Left) or last (Side::Right) letters of its two
//! sides. Self-loops and parallel edges are kept: they count as cycles.
struct SideGraph {
  uint32_t num_vertices = 0;
  std::vector<std::pair<uint32_t, uint32_t>> edges;  // one per relation, in order
};

inline SideGraph side_graph(const Presentation& p, Side side) {
  SideGraph g;
  g.num_vertices = p.alphabet_size();
  for (const auto& rel : p.relations()) {
    uint32_t u, v;
    if (side == Side::Left) {
      u = rel.lhs.front().gen();
      v = rel.rhs.front().gen();
    } else {
      u = rel.lhs.back().gen();
      v = rel.rhs.back().gen();
    }
    g.edges.emplace_back(u, v);
  }
  return g;
}

namespace detail {

//! Cycle test for an undirected multigraph via union-find; a self-loop or a
//! parallel edge joins two already-joined vertices and is caught the same way.
inline bool multigraph_is_forest(uint32_t num_vertices,
                                 const std::vector<std::pair<uint32_t, uint32_t>>& edges) {
  std::vector<uint32_t> parent(num_vertices);
  for (uint32_t i = 0; i < num_vertices; ++i) {
    parent[i] = i;
  }
  auto find = [&](uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (auto [u, v] : edges) {
    uint32_t ru = find(u), rv = find(v);
    if (ru == rv) {
      return false;
    }
    parent[ru] = rv;
  }
  return true;
}

}  // namespace detail

//! A presentation is Adian when both its left graph and its right graph are
//! cycle-free (self-loops and parallel edges included).
inline bool is_adian(const Presentation& p) {
  for (Side side : {Side::Left, Side::Right}) {
    SideGraph g = side_graph(p, side);
    if (!detail::multigraph_is_forest(g.num_vertices, g.edges)) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Condition (*) on overlaps of R-words.
// ---------------------------------------------------------------------------

//! Witness of a violation: `fragment` is a proper prefix (or dually suffix)
//! of `rword_a` and a suffix (prefix) of `rword_b`.
struct StarWitness {
  bool prefix_case;  // true: proper prefix of rword_a is a suffix of rword_b
  Word fragment;
  Word rword_a;
  Word rword_b;
};

struct StarResult {
  bool ok;
  std::optional<StarWitness> witness;
};

namespace detail {

//! Distinct relation sides, in first-occurrence order (lhs before rhs,
//! relations in declaration order).
inline std::vector<Word> r_words(const Presentation& p) {
  std::vector<Word> out;
  std::set<Word> seen;
  for (const auto& rel : p.relations()) {
    for (const Word* side : {&rel.lhs, &rel.rhs}) {
      if (seen.insert(*side).second) {
        out.push_back(*side);
      }
    }
  }
  return out;
}

inline bool is_suffix(const Word& frag, const Word& w) {
  return frag.size() <= w.size() && std::equal(frag.rbegin(), frag.rend(), w.rbegin());
}

inline bool is_prefix(const Word& frag, const Word& w) {
  return frag.size() <= w.size() && std::equal(frag.begin(), frag.end(), w.begin());
}

}  // namespace detail

//! Check that no proper prefix of an R-word is a suffix of any R-word
//! (itself included), and dually with prefix and suffix exchanged. The scan
//! is deterministic, so the witness returned for a violation is stable:
//! R-words in first-occurrence order, fragments shortest first.
inline StarResult check_star(const Presentation& p) {
  auto words = detail::r_words(p);
  for (bool prefix_case : {true, false}) {
    for (const Word& a : words) {
      for (size_t len = 1; len < a.size(); ++len) {
        Word frag = prefix_case ? Word(a.begin(), a.begin() + len)
                                : Word(a.end() - len, a.end());
        for (const Word& b : words) {
          bool hit = prefix_case ? detail::is_suffix(frag, b) : detail::is_prefix(frag, b);
          if (hit) {
            return StarResult{false, StarWitness{prefix_case, frag, a, b}};
          }
        }
      }
    }
  }
  return StarResult{true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Bi-sided graph.
// ---------------------------------------------------------------------------

//! Directed multigraph on the distinct R-words recording how R-words sit
//! inside relations and inside each other:
//!  - Rel:     (u, xvy) a relation with v an R-word, x,y nonempty: u -> v,
//!             one edge per factorization, labeled (x, y);
//!  - Subword: u == xvy for distinct R-words u, v with x,y nonempty: u -> v;
//!  - Sym:     a relation (u, v) with neither side properly containing an
//!             R-word: one undirected edge u -- v labeled (empty, empty).
struct BiSidedEdge {
  enum class Kind { Rel, Subword, Sym };
  uint32_t src;
  uint32_t dst;
  Word x;
  Word y;
  Kind kind;
};

struct BiSidedGraph {
  std::vector<Word> vertices;  // distinct R-words, first-occurrence order
  std::vector<BiSidedEdge> edges;

  std::optional<uint32_t> vertex_of(const Word& w) const {
    for (uint32_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i] == w) {
        return i;
      }
    }
    return std::nullopt;
  }
};

namespace detail {

//! True when w contains an occurrence of any R-word other than w occupying
//! the whole of w; prefix and suffix occurrences count.
inline bool properly_contains_r_word(const Word& w, const std::vector<Word>& words) {
  for (const Word& v : words) {
    if (v.size() >= w.size()) {
      continue;  // a same-length occurrence would be the whole of w, not proper
    }
    for (size_t pos = 0; pos + v.size() <= w.size(); ++pos) {
      if (std::equal(v.begin(), v.end(), w.begin() + pos)) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace detail

inline BiSidedGraph build_bisided(const Presentation& p) {
  BiSidedGraph g;
  g.vertices = detail::r_words(p);
  auto vertex = [&](const Word& w) { return *g.vertex_of(w); };

  // Rel edges: one per relation orientation and per interior factorization.
  for (const auto& rel : p.relations()) {
    for (auto [u, w] : {std::pair{&rel.lhs, &rel.rhs}, std::pair{&rel.rhs, &rel.lhs}}) {
      for (const Word& v : g.vertices) {
        if (v.size() + 2 > w->size()) {
          continue;  // x and y must both be nonempty
        }
        for (size_t pos = 1; pos + v.size() + 1 <= w->size(); ++pos) {
          if (std::equal(v.begin(), v.end(), w->begin() + pos)) {
            Word x(w->begin(), w->begin() + pos);
            Word y(w->begin() + pos + v.size(), w->end());
            g.edges.push_back(BiSidedEdge{vertex(*u), vertex(v), std::move(x), std::move(y),
                                          BiSidedEdge::Kind::Rel});
          }
        }
      }
    }
  }
  // Subword edges: interior factorizations between distinct R-words.
  for (const Word& u : g.vertices) {
    for (const Word& v : g.vertices) {
      if (v == u || v.size() + 2 > u.size()) {
        continue;
      }
      for (size_t pos = 1; pos + v.size() + 1 <= u.size(); ++pos) {
        if (std::equal(v.begin(), v.end(), u.begin() + pos)) {
          Word x(u.begin(), u.begin() + pos);
          Word y(u.begin() + pos + v.size(), u.end());
          g.edges.push_back(BiSidedEdge{vertex(u), vertex(v), std::move(x), std::move(y),
                                        BiSidedEdge::Kind::Subword});
        }
      }
    }
  }
  // Sym edges: relations whose sides are both free of proper R-word content.
  for (const auto& rel : p.relations()) {
    if (!detail::properly_contains_r_word(rel.lhs, g.vertices) &&
        !detail::properly_contains_r_word(rel.rhs, g.vertices)) {
      g.edges.push_back(
          BiSidedEdge{vertex(rel.lhs), vertex(rel.rhs), {}, {}, BiSidedEdge::Kind::Sym});
    }
  }
  return g;
}

//! Forest test in multigraph semantics (each edge once, Sym edges once,
//! loops and parallel edges are cycles). On failure `cycle` holds a closed
//! vertex path witnessing the cycle.
struct ForestResult {
  bool is_forest;
  std::vector<uint32_t> cycle;
};

inline ForestResult forest_check(const BiSidedGraph& g) {
  uint32_t n = static_cast<uint32_t>(g.vertices.size());
  std::vector<uint32_t> parent(n);
  for (uint32_t i = 0; i < n; ++i) {
    parent[i] = i;
  }
  auto find = [&](uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  // Adjacency over the edges accepted so far, for witness reconstruction.
  std::vector<std::vector<uint32_t>> adj(n);
  for (const auto& e : g.edges) {
    if (e.src == e.dst) {
      return ForestResult{false, {e.src, e.dst}};
    }
    uint32_t ru = find(e.src), rv = find(e.dst);
    if (ru == rv) {
      // Path from src to dst through accepted edges, plus the closing edge.
      std::vector<uint32_t> prev(n, n);
      std::vector<uint32_t> queue{e.src};
      prev[e.src] = e.src;
      for (size_t i = 0; i < queue.size() && prev[e.dst] == n; ++i) {
        for (uint32_t w : adj[queue[i]]) {
          if (prev[w] == n) {
            prev[w] = queue[i];
            queue.push_back(w);
          }
        }
      }
      std::vector<uint32_t> path{e.dst};
      while (path.back() != e.src) {
        path.push_back(prev[path.back()]);
      }
      std::reverse(path.begin(), path.end());  // src ... dst through the forest
      path.push_back(e.src);                   // closing edge makes it a cycle
      return ForestResult{false, path};
    }
    parent[ru] = rv;
    adj[e.src].push_back(e.dst);
    adj[e.dst].push_back(e.src);
  }
  return ForestResult{true, {}};
}

inline bool is_forest(const BiSidedGraph& g) { return forest_check(g).is_forest; }

// ---------------------------------------------------------------------------
// Classification.
// ---------------------------------------------------------------------------

namespace detail {

struct BsShape {
  uint32_t m;
  uint32_t n;
  uint32_t a_gen;
  uint32_t b_gen;
  bool sides_swapped;
};

//! Match the two-generator one-relation shape a b^m = b^n a, trying both
//! generator role assignments and both side orders.
inline std::optional<BsShape> match_bs_shape(const Presentation& p) {
  if (p.alphabet_size() != 2 || p.relations().size() != 1) {
    return std::nullopt;
  }
  const auto& rel = p.relations().front();
  auto match_side = [](const Word& w, uint32_t a, uint32_t b,
                       bool a_first) -> std::optional<uint32_t> {
    // a_first: w == a b^k, else w == b^k a; returns k >= 1.
    if (w.size() < 2) {
      return std::nullopt;
    }
    Letter la = Letter::positive(a), lb = Letter::positive(b);
    if (a_first ? (w.front() != la) : (w.back() != la)) {
      return std::nullopt;
    }
    size_t begin = a_first ? 1 : 0;
    size_t end = a_first ? w.size() : w.size() - 1;
    for (size_t i = begin; i < end; ++i) {
      if (w[i] != lb) {
        return std::nullopt;
      }
    }
    return static_cast<uint32_t>(end - begin);
  };
  for (bool swap_sides : {false, true}) {
    const Word& s1 = swap_sides ? rel.rhs : rel.lhs;
    const Word& s2 = swap_sides ? rel.lhs : rel.rhs;
    for (uint32_t a : {0u, 1u}) {
      uint32_t b = 1 - a;
      auto m = match_side(s1, a, b, /* a_first = */ true);
      auto n = match_side(s2, a, b, /* a_first = */ false);
      if (m && n) {
        return BsShape{*m, *n, a, b, swap_sides};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

//! Decidability classes, ordered checks: NonAdian, then the a b^m = b^n a
//! family, then condition (*) with a bi-sided forest, then generic Adian.
struct DecidabilityClass {
  enum class Tag { NonAdian, AdianStarForest, AdianBsFamily, AdianGeneric };
  Tag tag;
  uint32_t m = 0;  // meaningful for AdianBsFamily only
  uint32_t n = 0;

  std::string to_string() const {
    switch (tag) {
      case Tag::NonAdian: return "NonAdian";
      case Tag::AdianStarForest: return "AdianStarForest";
      case Tag::AdianBsFamily:
        return "AdianBsFamily(" + std::to_string(m) + "," + std::to_string(n) + ")";
      case Tag::AdianGeneric: return "AdianGeneric";
    }
    return "";
  }
};

inline DecidabilityClass classify(const Presentation& p) {
  if (!is_adian(p)) {
    return {DecidabilityClass::Tag::NonAdian};
  }
  if (auto bs = detail::match_bs_shape(p)) {
    return {DecidabilityClass::Tag::AdianBsFamily, bs->m, bs->n};
  }
  if (check_star(p).ok && is_forest(build_bisided(p))) {
    return {DecidabilityClass::Tag::AdianStarForest};
  }
  return {DecidabilityClass::Tag::AdianGeneric};
}

}  // namespace adian

#endif  // ADIAN_PRESENTATION_HPP_

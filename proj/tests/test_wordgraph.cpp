#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "helpers.hpp"

using namespace adian;
using testutil::w;

namespace {

Word random_word(std::mt19937& rng, uint32_t alphabet, size_t max_len) {
  std::uniform_int_distribution<size_t> len(0, max_len);
  std::uniform_int_distribution<uint32_t> code(0, 2 * alphabet - 1);
  Word out;
  size_t n = len(rng);
  for (size_t i = 0; i < n; ++i) {
    out.push_back(Letter::from_code(code(rng)));
  }
  return out;
}

}  // namespace

TEST_CASE("linear graph of the empty word") {
  WordGraph g = linear_graph(2, {});
  REQUIRE(g.num_vertices() == 1);
  REQUIRE(g.num_edges() == 0);
  REQUIRE(g.alpha() == g.beta());
  REQUIRE(accepts(g, {}));
}

TEST_CASE("linear graph stores inverse letters as reversed edges") {
  auto p = testutil::free2_presentation();
  WordGraph g = linear_graph(p, w(p, "a b'"));
  REQUIRE(g.num_vertices() == 3);
  REQUIRE(g.num_edges() == 2);
  REQUIRE(accepts(g, w(p, "a b'")));
  auto edges = g.positive_edges();
  REQUIRE(edges.size() == 2);
  // The b-edge runs backwards: from the endpoint into the middle vertex.
  REQUIRE(edges[0][1] == 0);  // a-edge
  REQUIRE(edges[1][1] == 1);  // b-edge
  REQUIRE(edges[1][0] == g.beta());
}

TEST_CASE("folding merges distinct targets and counts only merges") {
  auto p = testutil::free2_presentation();
  SECTION("a a' b: one merge") {
    WordGraph g = munn_tree(p, w(p, "a a' b"));
    REQUIRE(g.num_vertices() == 3);
    REQUIRE(g.num_edges() == 2);
    REQUIRE(g.fold_count() == 1);
    REQUIRE(g.is_deterministic());
    REQUIRE(accepts(g, w(p, "a a' b")));
    REQUIRE(accepts(g, w(p, "b")));
    REQUIRE(!accepts(g, w(p, "a")));
  }
  SECTION("a b b' a': collapses to a two-edge tree with equal roots") {
    WordGraph g = munn_tree(p, w(p, "a b b' a'"));
    REQUIRE(g.num_vertices() == 3);
    REQUIRE(g.num_edges() == 2);
    REQUIRE(g.fold_count() == 2);
    REQUIRE(g.alpha() == g.beta());
    REQUIRE(accepts(g, w(p, "a b b' a'")));
    REQUIRE(accepts(g, {}));
  }
  SECTION("a b b' b: cascade with a duplicate-edge drop that is not a merge") {
    WordGraph g = munn_tree(p, w(p, "a b b' b"));
    REQUIRE(g.num_vertices() == 3);
    REQUIRE(g.num_edges() == 2);
    REQUIRE(g.fold_count() == 2);
    REQUIRE(birooted_isomorphic(g, munn_tree(p, w(p, "a b"))));
  }
  SECTION("positive words never fold") {
    WordGraph g = munn_tree(p, w(p, "a b b a b"));
    REQUIRE(g.fold_count() == 0);
    REQUIRE(g.num_vertices() == 6);
  }
}

TEST_CASE("reading words and targets") {
  auto p = testutil::free2_presentation();
  WordGraph g = munn_tree(p, w(p, "a b"));
  auto trace = read_word(g, g.alpha(), w(p, "a b"));
  REQUIRE(trace.has_value());
  REQUIRE(trace->size() == 3);
  REQUIRE(trace->front() == g.alpha());
  REQUIRE(trace->back() == g.beta());
  REQUIRE(!read_word(g, g.alpha(), w(p, "b")).has_value());
  // Reading backwards with inverses retraces the path.
  REQUIRE(accepts(g, w(p, "a b b' b")));
  auto mid = g.target(g.alpha(), Letter::positive(0));
  REQUIRE(mid.has_value());
  REQUIRE(g.target(*mid, Letter::positive(0).inverse()) == g.alpha());
}

TEST_CASE("canonical forms separate words the monoid separates") {
  auto p = testutil::free2_presentation();
  REQUIRE(birooted_isomorphic(munn_tree(p, w(p, "a b")), munn_tree(p, w(p, "a b"))));
  REQUIRE(!birooted_isomorphic(munn_tree(p, w(p, "a b")), munn_tree(p, w(p, "b a"))));
  REQUIRE(!birooted_isomorphic(munn_tree(p, w(p, "a a'")), munn_tree(p, w(p, "a' a"))));
  REQUIRE(!birooted_isomorphic(munn_tree(p, w(p, "a a'")), munn_tree(p, {})));
  // Same underlying tree, roots distinguish them.
  REQUIRE(!birooted_isomorphic(munn_tree(p, w(p, "a b b'")), munn_tree(p, w(p, "a b"))));
}

TEST_CASE("canonical form requires reachability from the left root") {
  WordGraph g(2);
  vertex_type v0 = g.add_vertex();
  g.add_vertex();  // unreachable
  g.set_roots(v0, v0);
  REQUIRE_THROWS_MATCHES(canonical_form(g), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == Error::Code::NotConnected;
                         }));
}

TEST_CASE("positive cycle detection") {
  auto p = testutil::free2_presentation();
  REQUIRE(!find_positive_cycle(munn_tree(p, w(p, "a b a' b a"))).has_value());
  WordGraph g(2);
  vertex_type v0 = g.add_vertex();
  vertex_type v1 = g.add_vertex();
  g.add_edge(v0, Letter::positive(0), v1);
  g.add_edge(v1, Letter::positive(1), v0);
  g.set_roots(v0, v0);
  auto cyc = find_positive_cycle(g);
  REQUIRE(cyc.has_value());
  REQUIRE(cyc->front() == cyc->back());
  REQUIRE(cyc->size() == 3);
}

TEST_CASE("maximal positive paths enumerate in label order") {
  WordGraph g(2);
  vertex_type v0 = g.add_vertex();
  vertex_type v1 = g.add_vertex();
  vertex_type v2 = g.add_vertex();
  vertex_type v3 = g.add_vertex();
  g.add_edge(v0, Letter::positive(0), v1);
  g.add_edge(v0, Letter::positive(1), v2);
  g.add_edge(v1, Letter::positive(1), v3);
  g.set_roots(v0, v3);
  auto paths = maximal_positive_paths(g, v0);
  REQUIRE(paths.size() == 2);
  REQUIRE(paths[0].first == Word{Letter::positive(0), Letter::positive(1)});
  REQUIRE(paths[0].second == v3);
  REQUIRE(paths[1].first == Word{Letter::positive(1)});
  REQUIRE(paths[1].second == v2);
  // A vertex without positive out-edges contributes the empty path.
  auto at_sink = maximal_positive_paths(g, v3);
  REQUIRE(at_sink.size() == 1);
  REQUIRE(at_sink[0].first.empty());
  REQUIRE(at_sink[0].second == v3);

  g.add_edge(v3, Letter::positive(0), v0);
  REQUIRE_THROWS_MATCHES(maximal_positive_paths(g, v0), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == Error::Code::PositiveCycle;
                         }));
}

TEST_CASE("reversal mirrors the language") {
  auto p = testutil::free2_presentation();
  for (const char* text : {"a b", "a b b' a'", "a a' b", "b a a b'"}) {
    WordGraph g = munn_tree(p, w(p, text));
    WordGraph r = reversed(g);
    REQUIRE(accepts(r, reversed(w(p, text))));
    REQUIRE(birooted_isomorphic(reversed(r), g));
    REQUIRE(r.num_vertices() == g.num_vertices());
    REQUIRE(r.num_edges() == g.num_edges());
  }
}

TEST_CASE("graphviz export is stable and marks the roots") {
  auto p = testutil::free2_presentation();
  WordGraph g = munn_tree(p, w(p, "a b"));
  std::string dot = to_dot(g, p);
  REQUIRE(dot == to_dot(g, p));
  REQUIRE(dot.find("doublecircle") != std::string::npos);
  REQUIRE(dot.find("label=\"a\"") != std::string::npos);
  REQUIRE(dot.find("rankdir=LR") != std::string::npos);
  WordGraph idem = munn_tree(p, w(p, "a a'"));
  REQUIRE(to_dot(idem, p).find("doublecircle, style=bold") != std::string::npos);
}

TEST_CASE("random words: folding invariants") {
  std::mt19937 rng(20240817);
  auto p = testutil::free2_presentation();
  for (int i = 0; i < 200; ++i) {
    Word u = random_word(rng, 2, 10);
    WordGraph g = munn_tree(p, u);
    REQUIRE(g.is_deterministic());
    REQUIRE(g.involution_consistent());
    REQUIRE(accepts(g, u));
    // w and w w^-1 w fold to the same birooted tree.
    Word www = concat(concat(u, inverse(u)), u);
    REQUIRE(birooted_isomorphic(g, munn_tree(p, www)));
    // w w^-1 closes up at the left root.
    WordGraph idem = munn_tree(p, concat(u, inverse(u)));
    REQUIRE(idem.alpha() == idem.beta());
  }
}

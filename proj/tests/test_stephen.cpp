#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "helpers.hpp"

using namespace adian;
using testutil::w;

TEST_CASE("closure of a b b over a b b = b a") {
  auto p = testutil::bs_presentation(2, 1);
  ClosureOutcome out = schutzenberger(p, w(p, "a b b"));
  REQUIRE(out.status == ClosureStatus::Closed);
  REQUIRE(out.rounds_used == 1);
  REQUIRE(out.complex.graph.num_vertices() == 5);
  REQUIRE(out.complex.graph.num_edges() == 5);
  REQUIRE(out.complex.faces.size() == 1);
  REQUIRE(out.fold_merges == 0);
  REQUIRE(accepts(out.complex.graph, w(p, "a b b")));
  REQUIRE(accepts(out.complex.graph, w(p, "b a")));
  REQUIRE(!accepts(out.complex.graph, w(p, "b")));
  REQUIRE(betti_check(out.complex).pass);

  auto paths = maximal_positive_paths(out.complex.graph, out.complex.graph.alpha());
  REQUIRE(paths.size() == 2);
  REQUIRE(paths[0].first == w(p, "a b b"));
  REQUIRE(paths[1].first == w(p, "b a"));
  REQUIRE(paths[0].second == out.complex.graph.beta());
  REQUIRE(paths[1].second == out.complex.graph.beta());

  ClosureOutcome other = schutzenberger(p, w(p, "b a"));
  REQUIRE(other.rounds_used == 1);
  REQUIRE(birooted_isomorphic(out.complex.graph, other.complex.graph));
  REQUIRE(out.complex.faces.size() == other.complex.faces.size());
}

TEST_CASE("closure of b b b a over a b b = b a") {
  auto p = testutil::bs_presentation(2, 1);
  ClosureOutcome out = schutzenberger(p, w(p, "b b b a"));
  REQUIRE(out.status == ClosureStatus::Closed);
  REQUIRE(out.rounds_used == 3);
  REQUIRE(out.complex.graph.num_vertices() == 11);
  REQUIRE(out.complex.graph.num_edges() == 13);
  REQUIRE(out.complex.faces.size() == 3);
  REQUIRE(out.fold_merges == 0);
  REQUIRE(betti_check(out.complex).pass);
  REQUIRE(!find_positive_cycle(out.complex.graph).has_value());
}

TEST_CASE("free presentations close immediately") {
  auto p = testutil::free2_presentation();
  ClosureOutcome out = schutzenberger(p, w(p, "a b b' a'"));
  REQUIRE(out.status == ClosureStatus::Closed);
  REQUIRE(out.rounds_used == 0);
  REQUIRE(out.complex.faces.empty());
  REQUIRE(birooted_isomorphic(out.complex.graph, munn_tree(p, w(p, "a b b' a'"))));
}

TEST_CASE("a b a = b grows without bound") {
  auto p = testutil::aba_presentation();
  SECTION("first round doubles back") {
    ClosureOutcome out = schutzenberger(p, w(p, "b"), Budget{100000, 1});
    REQUIRE(out.status == ClosureStatus::Exhausted);
    REQUIRE(out.rounds_used == 1);
    REQUIRE(out.complex.graph.num_vertices() == 4);
    REQUIRE(out.complex.graph.num_edges() == 4);
    REQUIRE(out.complex.faces.size() == 1);
  }
  SECTION("two more vertices per round") {
    ClosureOutcome r2 = schutzenberger(p, w(p, "b"), Budget{100000, 2});
    ClosureOutcome r3 = schutzenberger(p, w(p, "b"), Budget{100000, 3});
    REQUIRE(r2.complex.graph.num_vertices() == 6);
    REQUIRE(r3.complex.graph.num_vertices() == 8);
  }
  SECTION("vertex budget stops the closure") {
    ClosureOutcome out = schutzenberger(p, w(p, "b"), Budget{10, 10000});
    REQUIRE(out.status == ClosureStatus::Exhausted);
    REQUIRE(out.complex.graph.num_vertices() <= 12);
  }
  SECTION("acceptance in an approximation is conclusive") {
    REQUIRE(equal_words(p, w(p, "b"), w(p, "a b a"), Budget{100000, 2}).is_true());
    REQUIRE(natural_leq(p, w(p, "b"), w(p, "a b a"), Budget{100000, 2}).is_true());
  }
  SECTION("one completed closure settles a rejection") {
    // The closure of a finishes at once and does not accept b, so the
    // answer is final even though the closure of b ran out of budget.
    REQUIRE(equal_words(p, w(p, "b"), w(p, "a"), Budget{50, 10}).is_false());
  }
  SECTION("with both closures out of budget the answer stays open") {
    TriBool ans = equal_words(p, w(p, "b"), w(p, "b b"), Budget{50, 10});
    REQUIRE(ans.is_unknown());
    REQUIRE(ans.reason == kBudgetReason);
  }
}

TEST_CASE("equality decisions over a b b = b a") {
  auto p = testutil::bs_presentation(2, 1);
  REQUIRE(equal_words(p, w(p, "a b b"), w(p, "b a")).is_true());
  REQUIRE(equal_words(p, w(p, "a b"), w(p, "b a")).is_false());
  REQUIRE(equal_words(p, w(p, "a b"), w(p, "a b")).is_true());
  REQUIRE(equal_words(p, w(p, "a b b a"), w(p, "b a a")).is_true());
  REQUIRE(equal_words(p, w(p, "a b b a"), w(p, "a a b b")).is_false());
  // Words with inverses go through the same procedure.
  REQUIRE(equal_words(p, w(p, "a b b a'"), w(p, "b a a'")).is_true());
  REQUIRE(equal_words(p, w(p, "a b a'"), w(p, "b")).is_false());
  REQUIRE(equal_words(p, w(p, "a b b b' b"), w(p, "b a")).is_true());
}

TEST_CASE("natural order over the free inverse monoid") {
  auto p = testutil::free2_presentation();
  REQUIRE(natural_leq(p, w(p, "a a'"), {}).is_true());
  REQUIRE(natural_leq(p, {}, w(p, "a a'")).is_false());
  REQUIRE(natural_leq(p, w(p, "a b b' a' a"), w(p, "a")).is_true());
  REQUIRE(natural_leq(p, w(p, "a"), w(p, "b")).is_false());
}

TEST_CASE("idempotency") {
  auto free2 = testutil::free2_presentation();
  REQUIRE(is_idempotent(free2, w(free2, "a a'")).is_true());
  REQUIRE(is_idempotent(free2, w(free2, "a")).is_false());
  auto p = testutil::bs_presentation(2, 1);
  // a b b a' b' = b a a' b', which conjugates the idempotent a a'.
  REQUIRE(is_idempotent(p, w(p, "a b b a' b'")).is_true());
  REQUIRE(is_idempotent(p, w(p, "a b a'")).is_false());
  REQUIRE(is_idempotent(p, w(p, "a b b a a' b' b' a'")).is_true());
}

TEST_CASE("identity in the group image") {
  auto p = testutil::bs_presentation(2, 1);
  REQUIRE(equals_identity_in_group(p, w(p, "a b b a' b'")).is_true());
  REQUIRE(equals_identity_in_group(p, w(p, "a")).is_false());
  REQUIRE(equals_identity_in_group(p, w(p, "a a'")).is_true());
  Presentation loopy;
  loopy.add_generator("a");
  loopy.add_relation(loopy.parse_word("a a"), loopy.parse_word("a a a"));
  REQUIRE_THROWS_MATCHES(equals_identity_in_group(loopy, loopy.parse_word("a")), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == Error::Code::NotAdian;
                         }));
}

TEST_CASE("round observer sees every round") {
  auto p = testutil::bs_presentation(2, 1);
  std::vector<size_t> seen;
  schutzenberger(p, w(p, "b b b a"), Budget{}, [&](const Complex& c, size_t round) {
    REQUIRE(c.graph.is_deterministic());
    seen.push_back(round);
  });
  // Three changing rounds plus the final fixpoint check.
  REQUIRE(seen == std::vector<size_t>{1, 2, 3, 4});
}

TEST_CASE("closure by positive saturation agrees with plain closure") {
  auto bs = testutil::bs_presentation(2, 1);
  auto star = testutil::star13_presentation();
  auto free2 = testutil::free2_presentation();
  struct Case {
    const Presentation* p;
    const char* text;
  };
  std::vector<Case> cases = {
      {&bs, "a b b"}, {&bs, "b b b a"}, {&bs, "a b"}, {&bs, "a b b a' b'"},
      {&bs, "b' a b"}, {&bs, ""},       {&star, "a"}, {&star, "f c g h'"},
      {&free2, "a b b' a'"},
  };
  for (const auto& tc : cases) {
    CAPTURE(tc.text);
    Word word = tc.p->parse_word(tc.text);
    SaturationResult sat = close_by_positive_saturation(*tc.p, word);
    ClosureOutcome plain = schutzenberger(*tc.p, word);
    REQUIRE(sat.closure.status == ClosureStatus::Closed);
    REQUIRE(plain.status == ClosureStatus::Closed);
    REQUIRE(birooted_isomorphic(sat.closure.complex.graph, plain.complex.graph));
    REQUIRE(sat.closure.complex.faces.size() == plain.complex.faces.size());
  }
}

TEST_CASE("saturation rejects presentations with side-graph cycles") {
  Presentation loopy;
  loopy.add_generator("a");
  loopy.add_relation(loopy.parse_word("a a"), loopy.parse_word("a a a"));
  REQUIRE_THROWS_AS(close_by_positive_saturation(loopy, loopy.parse_word("a")), Error);
}

#include <sstream>

#include "catch2/catch_amalgamated.hpp"
#include "helpers.hpp"

using namespace adian;
using testutil::w;

TEST_CASE("letters pack generator and orientation") {
  Letter a = Letter::positive(0);
  Letter b = Letter::positive(1);
  REQUIRE(a.code() == 0);
  REQUIRE(a.inverse().code() == 1);
  REQUIRE(b.code() == 2);
  REQUIRE(a < a.inverse());
  REQUIRE(a.inverse() < b);
  REQUIRE(a.inverse().inverse() == a);
  REQUIRE(a.is_positive());
  REQUIRE(a.inverse().is_inverse());
  REQUIRE(Letter::from_code(3) == b.inverse());
  REQUIRE(a.inverse().gen() == 0);
}

TEST_CASE("word helpers") {
  auto p = testutil::free2_presentation();
  Word u = w(p, "a b b'");
  REQUIRE(inverse(u) == w(p, "b b' a'"));
  REQUIRE(reversed(u) == w(p, "b' b a"));
  REQUIRE(concat(u, w(p, "a")) == w(p, "a b b' a"));
  REQUIRE(is_positive(w(p, "a b a")));
  REQUIRE(!is_positive(u));
  REQUIRE(repeated(Letter::positive(1), 3) == w(p, "b b b"));
  REQUIRE(repeated(Letter::positive(1), 0).empty());
}

TEST_CASE("word parsing, compact and spaced") {
  auto p = testutil::free2_presentation();
  REQUIRE(p.parse_word("abb'a'") == p.parse_word("a b b' a'"));
  REQUIRE(p.parse_word("a.b.b'") == p.parse_word("a b b'"));
  REQUIRE(p.parse_word("").empty());
  REQUIRE(p.format_word(p.parse_word("a b' b")) == "a b' b");
  REQUIRE_THROWS_MATCHES(p.parse_word("a c"), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == Error::Code::UnknownGenerator;
                         }));
  REQUIRE_THROWS_MATCHES(p.parse_word("'a"), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == Error::Code::StrayQuote;
                         }));
}

TEST_CASE("multi-character generator names need separators") {
  Presentation p;
  p.add_generator("x1");
  p.add_generator("x2");
  REQUIRE(p.parse_word("x1 x2'").size() == 2);
  REQUIRE(!p.single_char_names());
  // No compact mode: an unseparated clump is a single unknown name.
  REQUIRE_THROWS_AS(p.parse_word("x1x2"), Error);
}

TEST_CASE("presentation text format") {
  std::istringstream in(
      "# comment line\n"
      "generators: a b\n"
      "\n"
      "relation: a b b = b a   # inline trailer is part of no token\n");
  Presentation p = parse_presentation(in);
  REQUIRE(p.alphabet_size() == 2);
  REQUIRE(p.relations().size() == 1);
  REQUIRE(p.relations()[0].lhs == w(p, "a b b"));
  REQUIRE(p.relations()[0].rhs == w(p, "b a"));
}

TEST_CASE("presentation parse errors carry line numbers") {
  auto expect_error = [](const std::string& text, Error::Code code, long line) {
    try {
      parse_presentation(text);
      FAIL("expected a parse error");
    } catch (const Error& e) {
      REQUIRE(e.code() == code);
      REQUIRE(e.line() == line);
    }
  };
  expect_error("relation: a = b\n", Error::Code::MalformedLine, 1);
  expect_error("generators: a a\n", Error::Code::DuplicateGenerator, 1);
  expect_error("generators: a b\nrelation: a b\n", Error::Code::MalformedLine, 2);
  expect_error("generators: a b\nrelation: a = b = a\n", Error::Code::MalformedLine, 2);
  expect_error("generators: a b\nrelation: = b\n", Error::Code::EmptyRelationSide, 2);
  expect_error("generators: a b\nrelation: a' = b\n", Error::Code::InverseLetterInRelation, 2);
  expect_error("generators: a b\nrelation: a = c\n", Error::Code::UnknownGenerator, 2);
  expect_error("generators: a b\ngenerators: c\n", Error::Code::MalformedLine, 2);
}

TEST_CASE("side graphs detect cycle-free presentations") {
  REQUIRE(is_adian(testutil::bs_presentation(2, 1)));
  REQUIRE(is_adian(testutil::aba_presentation()));
  REQUIRE(is_adian(testutil::star13_presentation()));
  REQUIRE(is_adian(testutil::star11_presentation()));
  REQUIRE(is_adian(testutil::free2_presentation()));

  // a a = a a a: both side graphs get a loop at a.
  Presentation loopy;
  loopy.add_generator("a");
  loopy.add_relation(loopy.parse_word("a a"), loopy.parse_word("a a a"));
  REQUIRE(!is_adian(loopy));

  // Two relations with the same first letters on both sides: the left
  // graph gets a double edge between a and b.
  Presentation doubled;
  doubled.add_generator("a");
  doubled.add_generator("b");
  doubled.add_generator("c");
  doubled.add_relation(doubled.parse_word("a c"), doubled.parse_word("b c"));
  doubled.add_relation(doubled.parse_word("a c c"), doubled.parse_word("b c c"));
  REQUIRE(!is_adian(doubled));
}

TEST_CASE("overlap condition on relation words") {
  SECTION("a b b = b a fails: prefix a of a b b is a suffix of b a") {
    auto res = check_star(testutil::bs_presentation(2, 1));
    REQUIRE(!res.ok);
    REQUIRE(res.witness.has_value());
    auto pres = testutil::bs_presentation(2, 1);
    REQUIRE(res.witness->prefix_case);
    REQUIRE(res.witness->fragment == w(pres, "a"));
    REQUIRE(res.witness->rword_a == w(pres, "a b b"));
    REQUIRE(res.witness->rword_b == w(pres, "b a"));
  }
  SECTION("a b a = b fails") {
    REQUIRE(!check_star(testutil::aba_presentation()).ok);
  }
  SECTION("the thirteen-generator example passes") {
    REQUIRE(check_star(testutil::star13_presentation()).ok);
  }
  SECTION("the eleven-generator example passes") {
    REQUIRE(check_star(testutil::star11_presentation()).ok);
  }
  SECTION("no relations passes vacuously") {
    REQUIRE(check_star(testutil::free2_presentation()).ok);
  }
}

TEST_CASE("two-sided overlap graph") {
  SECTION("thirteen generators: forest with eight vertices") {
    auto p = testutil::star13_presentation();
    BiSidedGraph g = build_bisided(p);
    REQUIRE(g.vertices.size() == 8);
    REQUIRE(g.edges.size() == 6);
    REQUIRE(is_forest(g));
    auto res = forest_check(g);
    REQUIRE(res.is_forest);
    REQUIRE(res.cycle.empty());
  }
  SECTION("eleven generators: triangle through the three short words") {
    auto p = testutil::star11_presentation();
    BiSidedGraph g = build_bisided(p);
    auto res = forest_check(g);
    REQUIRE(!res.is_forest);
    REQUIRE(res.cycle.size() >= 3);
    REQUIRE(res.cycle.front() == res.cycle.back());
  }
  SECTION("a b a = b: loop forced by the self-overlap") {
    auto res = forest_check(build_bisided(testutil::aba_presentation()));
    REQUIRE(!res.is_forest);
  }
}

TEST_CASE("classification") {
  REQUIRE(classify(testutil::bs_presentation(2, 1)).to_string() == "AdianBsFamily(2,1)");
  REQUIRE(classify(testutil::bs_presentation(3, 2)).to_string() == "AdianBsFamily(3,2)");
  REQUIRE(classify(testutil::bs_presentation(1, 3)).to_string() == "AdianBsFamily(1,3)");
  REQUIRE(classify(testutil::bs_presentation(2, 2)).to_string() == "AdianBsFamily(2,2)");
  REQUIRE(classify(testutil::star13_presentation()).tag == DecidabilityClass::Tag::AdianStarForest);
  REQUIRE(classify(testutil::star11_presentation()).tag == DecidabilityClass::Tag::AdianGeneric);
  REQUIRE(classify(testutil::aba_presentation()).tag == DecidabilityClass::Tag::AdianGeneric);
  REQUIRE(classify(testutil::free2_presentation()).tag ==
          DecidabilityClass::Tag::AdianStarForest);
  Presentation loopy;
  loopy.add_generator("a");
  loopy.add_relation(loopy.parse_word("a a"), loopy.parse_word("a a a"));
  REQUIRE(classify(loopy).tag == DecidabilityClass::Tag::NonAdian);
}

TEST_CASE("one-relation shape matching") {
  auto direct = detect_bs(testutil::bs_presentation(3, 1));
  REQUIRE(direct.has_value());
  REQUIRE(direct->m == 3);
  REQUIRE(direct->n == 1);
  REQUIRE(!direct->sides_swapped);
  REQUIRE(!direct->mirrored());

  // Same relation written the other way round.
  Presentation swapped;
  swapped.add_generator("a");
  swapped.add_generator("b");
  swapped.add_relation(swapped.parse_word("b a"), swapped.parse_word("a b b"));
  auto sw = detect_bs(swapped);
  REQUIRE(sw.has_value());
  REQUIRE(sw->m == 2);
  REQUIRE(sw->n == 1);
  REQUIRE(sw->sides_swapped);

  // Roles of the generators flipped: b a a = a b.
  Presentation roles;
  roles.add_generator("a");
  roles.add_generator("b");
  roles.add_relation(roles.parse_word("b a a"), roles.parse_word("a b"));
  auto rl = detect_bs(roles);
  REQUIRE(rl.has_value());
  REQUIRE(rl->m == 2);
  REQUIRE(rl->n == 1);
  REQUIRE(rl->a_gen == roles.generator_id("b").value());
  REQUIRE(rl->b_gen == roles.generator_id("a").value());

  REQUIRE(!detect_bs(testutil::aba_presentation()).has_value());
  REQUIRE(!detect_bs(testutil::free2_presentation()).has_value());
  REQUIRE(detect_bs(testutil::bs_presentation(1, 2))->mirrored());
}

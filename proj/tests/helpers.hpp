#ifndef TESTS_HELPERS_HPP_
#define TESTS_HELPERS_HPP_

#include <fstream>
#include <sstream>
#include <string>

#include "adian/adian.hpp"

namespace testutil {

//! <a, b | a b^m = b^n a>
inline adian::Presentation bs_presentation(size_t m, size_t n) {
  adian::Presentation p;
  uint32_t a = p.add_generator("a");
  uint32_t b = p.add_generator("b");
  adian::Word lhs{adian::Letter::positive(a)};
  for (size_t i = 0; i < m; ++i) {
    lhs.push_back(adian::Letter::positive(b));
  }
  adian::Word rhs;
  for (size_t i = 0; i < n; ++i) {
    rhs.push_back(adian::Letter::positive(b));
  }
  rhs.push_back(adian::Letter::positive(a));
  p.add_relation(lhs, rhs);
  return p;
}

//! <a, b | a b a = b>
inline adian::Presentation aba_presentation() {
  adian::Presentation p;
  p.add_generator("a");
  p.add_generator("b");
  p.add_relation(p.parse_word("a b a"), p.parse_word("b"));
  return p;
}

//! Free inverse monoid on two generators.
inline adian::Presentation free2_presentation() {
  adian::Presentation p;
  p.add_generator("a");
  p.add_generator("b");
  return p;
}

//! Thirteen generators a..m with a = f c g, b = h c i, c = d e, l = j m m k.
inline adian::Presentation star13_presentation() {
  adian::Presentation p;
  for (char c = 'a'; c <= 'm'; ++c) {
    p.add_generator(std::string(1, c));
  }
  p.add_relation(p.parse_word("a"), p.parse_word("f c g"));
  p.add_relation(p.parse_word("b"), p.parse_word("h c i"));
  p.add_relation(p.parse_word("c"), p.parse_word("d e"));
  p.add_relation(p.parse_word("l"), p.parse_word("j m m k"));
  return p;
}

//! Eleven generators a..k with a = f b g, a = j c k, b = h c i, c = d e.
inline adian::Presentation star11_presentation() {
  adian::Presentation p;
  for (char c = 'a'; c <= 'k'; ++c) {
    p.add_generator(std::string(1, c));
  }
  p.add_relation(p.parse_word("a"), p.parse_word("f b g"));
  p.add_relation(p.parse_word("a"), p.parse_word("j c k"));
  p.add_relation(p.parse_word("b"), p.parse_word("h c i"));
  p.add_relation(p.parse_word("c"), p.parse_word("d e"));
  return p;
}

inline adian::Word w(const adian::Presentation& p, const std::string& text) {
  return p.parse_word(text);
}

inline std::string data_file(const std::string& name) {
  return std::string(ADIAN_DATA_DIR) + "/" + name;
}

inline adian::Presentation load_presentation(const std::string& name) {
  std::ifstream in(data_file(name));
  return adian::parse_presentation(in);
}

}  // namespace testutil

#endif  // TESTS_HELPERS_HPP_

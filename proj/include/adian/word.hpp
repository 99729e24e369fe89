#ifndef ADIAN_WORD_HPP_
#define ADIAN_WORD_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <vector>

namespace adian {

//! A letter of the doubled alphabet X u X^-1, packed as gen * 2 + sign bit.
//! The packing fixes the canonical letter order used everywhere an order is
//! needed (exports, site scans, path enumeration): by generator id, with the
//! positive letter before its formal inverse.
class Letter {
 public:
  constexpr Letter(uint32_t gen, bool inverse) : code_(gen * 2 + (inverse ? 1 : 0)) {}

  static constexpr Letter positive(uint32_t gen) { return Letter(gen, false); }
  static constexpr Letter inverse_of(uint32_t gen) { return Letter(gen, true); }
  static constexpr Letter from_code(uint32_t code) { return Letter(code / 2, code % 2 != 0); }

  constexpr uint32_t gen() const { return code_ / 2; }
  constexpr bool is_positive() const { return code_ % 2 == 0; }
  constexpr bool is_inverse() const { return code_ % 2 != 0; }
  //! The involution x -> x^-1.
  constexpr Letter inverse() const { return from_code(code_ ^ 1u); }
  constexpr uint32_t code() const { return code_; }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  uint32_t code_;
};

using Word = std::vector<Letter>;

inline bool is_positive(const Word& w) {
  return std::all_of(w.begin(), w.end(), [](Letter x) { return x.is_positive(); });
}

//! Formal inverse: reverse the word and invert every letter.
inline Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return out;
}

//! Mirror image: reverse the letters without inverting them.
inline Word reversed(const Word& w) {
  return Word(w.rbegin(), w.rend());
}

inline Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

inline Word repeated(Letter x, size_t count) {
  return Word(count, x);
}

//! Largest generator id occurring in w, plus one; 0 for the empty word.
inline uint32_t min_alphabet_size(const Word& w) {
  uint32_t size = 0;
  for (Letter x : w) {
    size = std::max(size, x.gen() + 1);
  }
  return size;
}

}  // namespace adian

#endif  // ADIAN_WORD_HPP_

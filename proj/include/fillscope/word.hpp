#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace fillscope {

using GenId = std::uint32_t;

struct Syllable {
  GenId gen = 0;
  std::int64_t exp = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// An element of a free group in run-length form.
///
/// Invariant: adjacent syllables carry distinct generators and no exponent is
/// zero. The empty word is the identity. Words do not know their generator
/// table; range checks happen where a word meets a Presentation.
class Word {
 public:
  Word() = default;

  /// Freely reduces arbitrary syllable input.
  static Word from_raw(std::span<const Syllable> raw);
  static Word from_raw(std::initializer_list<Syllable> raw) {
    return from_raw(std::span<const Syllable>(raw.begin(), raw.size()));
  }
  static Word generator(GenId g, std::int64_t exp = 1) {
    return from_raw({Syllable{g, exp}});
  }
  /// Letters are signed, 1-based: +k is generator k-1, -k its inverse.
  static Word from_letters(std::span<const int> letters);

  const std::vector<Syllable>& syllables() const noexcept { return syl_; }
  bool is_identity() const noexcept { return syl_.empty(); }
  std::size_t syllable_count() const noexcept { return syl_.size(); }
  /// Sum of |exponent| over syllables.
  std::uint64_t length() const noexcept;
  /// 1 + largest generator id used, 0 for the identity.
  GenId generator_bound() const noexcept;
  /// Signed letter expansion (see from_letters). Expands powers in full.
  std::vector<int> letters() const;
  std::int64_t exponent_sum(GenId g) const noexcept;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  explicit Word(std::vector<Syllable> s) : syl_(std::move(s)) {}
  std::vector<Syllable> syl_;

  friend Word multiply(const Word&, const Word&);
};

Word free_reduce(std::span<const Syllable> raw);
Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
Word power(const Word& u, std::int64_t k);
Word commutator(const Word& u, const Word& v);  // u v u^-1 v^-1
Word conjugate(const Word& by, const Word& u);  // by u by^-1

inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

struct CyclicReduction {
  Word reduced;
  Word conjugator;  // u == conjugator * reduced * conjugator^-1
};

CyclicReduction cyclically_reduce(const Word& u);
bool is_cyclically_reduced(const Word& u);

/// True when u and v are equal up to cyclic rotation (free conjugacy of
/// cyclically reduced words).
bool cyclic_equal(const Word& u, const Word& v);

}  // namespace fillscope

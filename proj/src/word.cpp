#include "fillscope/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace fillscope {

namespace {

void push_syllable(std::vector<Syllable>& stack, Syllable s) {
  if (s.exp == 0) return;
  if (!stack.empty() && stack.back().gen == s.gen) {
    stack.back().exp += s.exp;
    if (stack.back().exp == 0) stack.pop_back();
    return;
  }
  stack.push_back(s);
}

}  // namespace

Word Word::from_raw(std::span<const Syllable> raw) {
  std::vector<Syllable> out;
  out.reserve(raw.size());
  for (const auto& s : raw) push_syllable(out, s);
  return Word(std::move(out));
}

Word Word::from_letters(std::span<const int> letters) {
  std::vector<Syllable> out;
  out.reserve(letters.size());
  for (int l : letters) {
    if (l == 0) continue;
    push_syllable(out, Syllable{static_cast<GenId>(std::abs(l) - 1), l > 0 ? 1 : -1});
  }
  return Word(std::move(out));
}

std::uint64_t Word::length() const noexcept {
  std::uint64_t n = 0;
  for (const auto& s : syl_) n += static_cast<std::uint64_t>(std::llabs(s.exp));
  return n;
}

GenId Word::generator_bound() const noexcept {
  GenId b = 0;
  for (const auto& s : syl_) b = std::max(b, s.gen + 1);
  return b;
}

std::vector<int> Word::letters() const {
  std::vector<int> out;
  out.reserve(length());
  for (const auto& s : syl_) {
    const int l = static_cast<int>(s.gen) + 1;
    const int signed_l = s.exp > 0 ? l : -l;
    for (std::int64_t i = 0; i < std::llabs(s.exp); ++i) out.push_back(signed_l);
  }
  return out;
}

std::int64_t Word::exponent_sum(GenId g) const noexcept {
  std::int64_t e = 0;
  for (const auto& s : syl_)
    if (s.gen == g) e += s.exp;
  return e;
}

Word free_reduce(std::span<const Syllable> raw) { return Word::from_raw(raw); }

Word multiply(const Word& u, const Word& v) {
  std::vector<Syllable> out = u.syl_;
  out.reserve(u.syl_.size() + v.syl_.size());
  for (const auto& s : v.syl_) push_syllable(out, s);
  return Word(std::move(out));
}

Word invert(const Word& u) {
  std::vector<Syllable> raw(u.syllables().rbegin(), u.syllables().rend());
  for (auto& s : raw) s.exp = -s.exp;
  return Word::from_raw(raw);
}

Word power(const Word& u, std::int64_t k) {
  if (k == 0 || u.is_identity()) return Word{};
  const Word base = k > 0 ? u : invert(u);
  std::uint64_t n = static_cast<std::uint64_t>(k > 0 ? k : -k);
  // A single syllable stays a single syllable.
  if (base.syllable_count() == 1) {
    const auto s = base.syllables().front();
    return Word::generator(s.gen, s.exp * static_cast<std::int64_t>(n));
  }
  Word result;
  Word sq = base;
  while (n > 0) {
    if (n & 1U) result = result * sq;
    n >>= 1U;
    if (n > 0) sq = sq * sq;
  }
  return result;
}

Word commutator(const Word& u, const Word& v) {
  return u * v * invert(u) * invert(v);
}

Word conjugate(const Word& by, const Word& u) { return by * u * invert(by); }

bool is_cyclically_reduced(const Word& u) {
  const auto& s = u.syllables();
  return s.size() < 2 || s.front().gen != s.back().gen;
}

CyclicReduction cyclically_reduce(const Word& u) {
  std::vector<Syllable> s = u.syllables();
  std::vector<Syllable> conj;
  std::size_t lo = 0;
  std::size_t hi = s.size();  // half-open live range
  while (hi - lo >= 2 && s[lo].gen == s[hi - 1].gen) {
    const Syllable first = s[lo];
    const Syllable last = s[hi - 1];
    conj.push_back(first);
    if (first.exp + last.exp == 0) {
      ++lo;
      --hi;
    } else {
      // g^a X g^b == g^a (X g^(a+b)) g^-a
      ++lo;
      s[hi - 1].exp = first.exp + last.exp;
      break;
    }
  }
  std::vector<Syllable> body(s.begin() + static_cast<std::ptrdiff_t>(lo),
                             s.begin() + static_cast<std::ptrdiff_t>(hi));
  return CyclicReduction{Word::from_raw(body), Word::from_raw(conj)};
}

namespace {

// Syllables of the cyclic word: a first and last syllable on the same
// generator are one syllable once the word is closed up.
std::vector<Syllable> cyclic_syllables(const Word& u) {
  std::vector<Syllable> s = u.syllables();
  if (s.size() > 1 && s.front().gen == s.back().gen) {
    s.front().exp += s.back().exp;
    s.pop_back();
  }
  return s;
}

}  // namespace

bool cyclic_equal(const Word& u, const Word& v) {
  const auto a = cyclic_syllables(u);
  const auto b = cyclic_syllables(v);
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const std::size_t n = a.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i) same = a[(i + shift) % n] == b[i];
    if (same) return true;
  }
  return false;
}

}  // namespace fillscope

#include "fillscope/tietze.hpp"

#include <optional>

namespace fillscope {

namespace {

std::uint64_t occurrences(const Word& w, GenId g) {
  std::uint64_t n = 0;
  for (const auto& s : w.syllables())
    if (s.gen == g) n += static_cast<std::uint64_t>(s.exp > 0 ? s.exp : -s.exp);
  return n;
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (const auto& s : w.syllables()) out = out * power(images[s.gen], s.exp);
  return out;
}

bool same_relator(const Word& a, const Word& b) {
  return cyclic_equal(a, b) || cyclic_equal(a, normalize_relator(invert(b)));
}

class Simplifier {
 public:
  explicit Simplifier(const Presentation& p) : gens_(p.generators()), periph_(p.peripheral()) {
    for (const auto& r : p.relators()) rels_.push_back(r);
    for (GenId g = 0; g < gens_.size(); ++g) images_.push_back(Word::generator(g));
  }

  TietzeResult run(const Presentation& original, const TietzeEffort& effort) {
    tidy();
    while (moves_.size() < effort.max_moves) {
      if (shorten_once()) continue;
      if (eliminate_once()) continue;
      break;
    }
    std::optional<Peripheral> periph = periph_;
    if (periph && (periph->meridian.is_identity() || periph->longitude.is_identity())) {
      moves_.push_back("drop degenerate peripheral data");
      periph.reset();
    }
    Presentation out(gens_, rels_, periph);
    return TietzeResult{out, GeneratorMap(original, images_), moves_};
  }

 private:
  std::uint64_t total() const {
    std::uint64_t n = 0;
    for (const auto& r : rels_) n += r.length();
    return n;
  }

  void tidy() {
    std::vector<Word> kept;
    for (auto& r : rels_) {
      Word n = normalize_relator(r);
      if (n.is_identity()) {
        moves_.push_back("drop trivial relator");
        continue;
      }
      bool dup = false;
      for (const auto& k : kept) dup = dup || same_relator(k, n);
      if (dup) {
        moves_.push_back("drop duplicate relator");
        continue;
      }
      kept.push_back(std::move(n));
    }
    rels_ = std::move(kept);
  }

  // Replace a piece u of relator i by v^-1 whenever u v is a rotation of
  // relator j (or its inverse) and |u| > |v|. Applies the best such move.
  bool shorten_once() {
    struct Move {
      std::size_t target = 0;
      Word replacement;
      std::uint64_t gain = 0;
    };
    std::optional<Move> best;
    for (std::size_t i = 0; i < rels_.size(); ++i) {
      const auto r = rels_[i].letters();
      const std::size_t n = r.size();
      for (std::size_t j = 0; j < rels_.size(); ++j) {
        if (i == j) continue;
        for (const Word& base : {rels_[j], invert(rels_[j])}) {
          const auto s = base.letters();
          const std::size_t len = s.size();
          for (std::size_t rot = 0; rot < len; ++rot) {
            for (std::size_t st = 0; st < n; ++st) {
              std::size_t k = 0;
              while (k < n && k < len && r[(st + k) % n] == s[(rot + k) % len]) ++k;
              if (2 * k <= len) continue;
              std::vector<int> letters;
              for (std::size_t m = len; m > k; --m) letters.push_back(-s[(rot + m - 1) % len]);
              for (std::size_t m = k; m < n; ++m) letters.push_back(r[(st + m) % n]);
              Word candidate = normalize_relator(Word::from_letters(letters));
              const std::uint64_t old_len = rels_[i].length();
              if (candidate.length() >= old_len) continue;
              const std::uint64_t gain = old_len - candidate.length();
              if (!best || gain > best->gain) best = Move{i, std::move(candidate), gain};
            }
          }
        }
      }
    }
    if (!best) return false;
    moves_.push_back("shorten relator " + std::to_string(best->target) + " by " +
                     std::to_string(best->gain));
    rels_[best->target] = std::move(best->replacement);
    tidy();
    return true;
  }

  bool eliminate_once() {
    const std::uint64_t before = total();
    struct Choice {
      GenId gen = 0;
      std::size_t relator = 0;
      Word value;
      std::uint64_t after = 0;
    };
    std::optional<Choice> best;
    for (std::size_t i = 0; i < rels_.size(); ++i) {
      const auto& syl = rels_[i].syllables();
      for (std::size_t k = 0; k < syl.size(); ++k) {
        const GenId g = syl[k].gen;
        if (occurrences(rels_[i], g) != 1) continue;
        // Rotate so that g^eps is last: B A g^eps = 1.
        std::vector<Syllable> rest(syl.begin() + static_cast<std::ptrdiff_t>(k) + 1, syl.end());
        rest.insert(rest.end(), syl.begin(), syl.begin() + static_cast<std::ptrdiff_t>(k));
        const Word ba = Word::from_raw(rest);
        const Word value = syl[k].exp > 0 ? invert(ba) : ba;
        std::uint64_t after = 0;
        const auto images = elimination_images(g, value);
        for (std::size_t j = 0; j < rels_.size(); ++j)
          if (j != i) after += normalize_relator(substitute(rels_[j], images)).length();
        if (after > before) continue;
        if (!best || after < best->after) best = Choice{g, i, value, after};
      }
    }
    if (!best) return false;
    moves_.push_back("eliminate " + gens_[best->gen] + " using relator " + std::to_string(best->relator));
    const auto images = elimination_images(best->gen, best->value);
    std::vector<Word> rels;
    for (std::size_t j = 0; j < rels_.size(); ++j)
      if (j != best->relator) rels.push_back(substitute(rels_[j], images));
    rels_ = std::move(rels);
    for (auto& w : images_) w = substitute(w, images);
    if (periph_) {
      periph_->meridian = substitute(periph_->meridian, images);
      periph_->longitude = substitute(periph_->longitude, images);
    }
    gens_.erase(gens_.begin() + best->gen);
    tidy();
    return true;
  }

  // Images of the current generators after removing g := value.
  std::vector<Word> elimination_images(GenId g, const Word& value) const {
    std::vector<Word> shift;
    for (GenId h = 0; h < gens_.size(); ++h)
      shift.push_back(h == g ? Word{} : Word::generator(h < g ? h : h - 1));
    std::vector<Word> images = shift;
    images[g] = substitute(value, shift);
    return images;
  }

  std::vector<std::string> gens_;
  std::vector<Word> rels_;
  std::optional<Peripheral> periph_;
  std::vector<Word> images_;
  std::vector<std::string> moves_;
};

}  // namespace

TietzeResult tietze_simplify(const Presentation& p, const TietzeEffort& effort) {
  return Simplifier(p).run(p, effort);
}

}  // namespace fillscope

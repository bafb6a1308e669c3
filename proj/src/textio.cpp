#include "fillscope/textio.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "fillscope/error.hpp"

namespace fillscope {

namespace {

constexpr std::int64_t kMaxExponent = std::int64_t{1} << 40;
constexpr std::uint64_t kMaxSyllables = 1U << 24;
constexpr int kMaxDepth = 200;

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& reason) const {
    throw ParseError(ErrorKind::SyntaxError, pos_, reason);
  }

  std::string name() {
    skip_space();
    if (pos_ >= text_.size() || !is_name_start(text_[pos_])) fail("expected a generator name");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0)
      ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    std::int64_t v = 0;
    const char* first = text_.data() + digits;
    const char* last = text_.data() + pos_;
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || v > kMaxExponent) {
      pos_ = start;
      fail("integer out of range");
    }
    return text_[start] == '-' ? -v : v;
  }

  Word word(const std::vector<std::string>& gens, int depth = 0) {
    if (depth > kMaxDepth) fail("nesting too deep");
    Word w = item(gens, depth);
    while (starts_item()) w = checked(w * item(gens, depth));
    return w;
  }

  std::size_t pos() const noexcept { return pos_; }

 private:
  bool starts_item() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    if (c == '*') {
      ++pos_;
      skip_space();
      if (pos_ >= text_.size()) fail("dangling '*'");
      c = text_[pos_];
      if (!(is_name_start(c) || c == '(' || c == '1')) fail("expected a factor after '*'");
      return true;
    }
    return is_name_start(c) || c == '(' || c == '1';
  }

  Word item(const std::vector<std::string>& gens, int depth) {
    Word base;
    skip_space();
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      if (peek() == ')') fail("empty parentheses");
      base = word(gens, depth + 1);
      expect(')');
    } else if (c == '1') {
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0)
        fail("only the literal 1 may appear as a number");
    } else if (is_name_start(c)) {
      const std::string n = name();
      GenId id = 0;
      bool found = false;
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == n) {
          id = static_cast<GenId>(i);
          found = true;
          break;
        }
      if (!found) throw ParseError(ErrorKind::UnknownGenerator, start, "unknown generator " + n);
      base = Word::generator(id);
    } else {
      fail("expected a generator, '1' or '('");
    }
    if (accept('^')) {
      const std::int64_t k = integer();
      if (base.syllable_count() > 1 &&
          static_cast<std::uint64_t>(k < 0 ? -k : k) * base.syllable_count() > kMaxSyllables)
        fail("power too large");
      base = power(base, k);
    }
    return base;
  }

  Word checked(Word w) {
    if (w.syllable_count() > kMaxSyllables) fail("word too long");
    return w;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Word parse_relator(Parser& ps, const std::vector<std::string>& gens) {
  Word lhs = ps.word(gens);
  if (ps.accept('=')) {
    Word rhs = ps.word(gens);
    return lhs * invert(rhs);
  }
  return lhs;
}

std::string serialize_syllable(const Syllable& s, const std::vector<std::string>& gens) {
  std::string out = gens.at(s.gen);
  if (s.exp != 1) out += "^" + std::to_string(s.exp);
  return out;
}

}  // namespace

Word parse_word(const SourceText& s, const std::vector<std::string>& gens) {
  Parser ps(s.text);
  if (ps.at_end()) ps.fail("empty word (use 1 for the identity)");
  Word w = ps.word(gens);
  if (!ps.at_end()) ps.fail("unexpected trailing input");
  return w;
}

Word parse_word(std::string_view s, const Presentation& p) {
  return parse_word(SourceText{std::string(s)}, p.generators());
}

Presentation parse_presentation(const SourceText& s) {
  Parser ps(s.text);
  ps.expect('<');
  std::vector<std::string> gens;
  std::unordered_set<std::string> seen;
  if (ps.peek() == '|' || ps.peek() == '>')
    throw ParseError(ErrorKind::EmptyGeneratorList, ps.pos(), "no generators");
  do {
    const std::size_t at = ps.pos();
    std::string n = ps.name();
    if (!seen.insert(n).second)
      throw ParseError(ErrorKind::DuplicateGenerator, at, "duplicate generator " + n);
    gens.push_back(std::move(n));
  } while (ps.accept(','));

  std::vector<Word> rels;
  std::optional<Peripheral> periph;
  if (ps.accept('|')) {
    if (ps.peek() != '|' && ps.peek() != '>') {
      do {
        rels.push_back(parse_relator(ps, gens));
      } while (ps.accept(','));
    }
    if (ps.accept('|')) {
      const auto keyword = [&](const char* kw) {
        const std::size_t at = ps.pos();
        if (ps.name() != kw) throw ParseError(ErrorKind::SyntaxError, at, std::string("expected ") + kw);
        ps.expect('=');
      };
      keyword("meridian");
      Word mer = ps.word(gens);
      ps.expect(',');
      keyword("longitude");
      Word lon = ps.word(gens);
      if (mer.is_identity() || lon.is_identity()) ps.fail("peripheral words must be nontrivial");
      periph = Peripheral{std::move(mer), std::move(lon)};
    }
  }
  ps.expect('>');
  if (!ps.at_end()) ps.fail("unexpected trailing input");
  return Presentation(std::move(gens), std::move(rels), std::move(periph));
}

Slope parse_slope(std::string_view s) {
  const auto bad = [&](const std::string& why) {
    return ParseError(ErrorKind::SyntaxError, 0, "bad slope '" + std::string(s) + "': " + why);
  };
  const auto slash = s.find('/');
  const auto parse_int = [&](std::string_view t) {
    std::int64_t v = 0;
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size())
      throw bad("not an integer");
    return v;
  };
  const std::int64_t p = parse_int(s.substr(0, slash));
  const std::int64_t q = slash == std::string_view::npos ? 1 : parse_int(s.substr(slash + 1));
  if (q == 0) throw bad("the meridian slope 1/0 is not a filling slope");
  try {
    return Slope(p, q);
  } catch (const Error& e) {
    throw bad(e.what());
  }
}

std::string serialize(const Word& w, const std::vector<std::string>& gens) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += "*";
    out += serialize_syllable(s, gens);
  }
  return out;
}

std::string serialize(const Presentation& p) {
  std::string out = "< ";
  for (std::size_t i = 0; i < p.generators().size(); ++i) {
    if (i > 0) out += ", ";
    out += p.generators()[i];
  }
  out += " |";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    out += i > 0 ? ", " : " ";
    out += serialize(p.relators()[i], p.generators());
  }
  if (p.peripheral()) {
    out += " | meridian = " + serialize(p.peripheral()->meridian, p.generators());
    out += ", longitude = " + serialize(p.peripheral()->longitude, p.generators());
  }
  out += " >";
  return out;
}

std::string serialize(const Slope& s) { return to_string(s); }

SourceText read_source(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return SourceText{ss.str(), path};
}

}  // namespace fillscope

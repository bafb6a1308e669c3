#include "fillscope/coset_table.hpp"

#include <sstream>

#include "fillscope/error.hpp"
#include "fillscope/textio.hpp"

namespace fillscope {

CosetTable::CosetTable(std::size_t n_gens, std::size_t n_cosets, std::vector<Coset> entries,
                       bool complete, std::vector<Word> subgroup_gens)
    : n_gens_(n_gens),
      n_cosets_(n_cosets),
      entries_(std::move(entries)),
      complete_(complete),
      subgroup_(std::move(subgroup_gens)) {
  if (entries_.size() != n_cosets_ * column_count())
    throw Error(ErrorKind::BadParameters, "coset table entry count mismatch");
}

CosetTable CosetTable::from_permutations(const std::vector<std::vector<Coset>>& perms,
                                         std::vector<Word> subgroup_gens) {
  const std::size_t n_gens = perms.size();
  const std::size_t n = perms.empty() ? 1 : perms.front().size();
  std::vector<Coset> entries(n * 2 * n_gens, kUndefined);
  for (std::size_t g = 0; g < n_gens; ++g) {
    if (perms[g].size() != n) throw Error(ErrorKind::BadParameters, "permutation degree mismatch");
    for (std::size_t c = 0; c < n; ++c) {
      const Coset d = perms[g][c];
      if (d < 0 || static_cast<std::size_t>(d) >= n)
        throw Error(ErrorKind::BadParameters, "permutation entry out of range");
      entries[c * 2 * n_gens + 2 * g] = d;
      entries[static_cast<std::size_t>(d) * 2 * n_gens + 2 * g + 1] = static_cast<Coset>(c);
    }
  }
  bool complete = true;
  for (Coset e : entries) complete = complete && e != kUndefined;
  return CosetTable(n_gens, n, std::move(entries), complete, std::move(subgroup_gens));
}

std::vector<Coset> CosetTable::generator_permutation(GenId g) const {
  std::vector<Coset> out(n_cosets_);
  for (std::size_t c = 0; c < n_cosets_; ++c) out[c] = at(static_cast<Coset>(c), 2 * g);
  return out;
}

namespace {

// Applies column `col` `steps` times, shortcutting through the cycle.
std::optional<Coset> apply_power(const CosetTable& t, Coset c, std::size_t col, std::uint64_t steps) {
  if (steps > t.coset_count()) {
    Coset x = c;
    std::uint64_t len = 0;
    do {
      x = t.at(x, col);
      if (x == kUndefined) return std::nullopt;
      ++len;
    } while (x != c && len <= t.coset_count());
    if (x == c) steps %= len;
  }
  for (std::uint64_t i = 0; i < steps; ++i) {
    c = t.at(c, col);
    if (c == kUndefined) return std::nullopt;
  }
  return c;
}

}  // namespace

std::optional<Coset> evaluate_on_cosets(const CosetTable& t, const Word& w, Coset start) {
  if (w.generator_bound() > t.generator_count())
    throw Error(ErrorKind::GeneratorOutOfRange, "word uses a generator outside the coset table");
  if (start < 0 || static_cast<std::size_t>(start) >= t.coset_count())
    throw Error(ErrorKind::BadParameters, "start coset out of range");
  Coset c = start;
  for (const auto& s : w.syllables()) {
    const std::size_t col = 2 * s.gen + (s.exp > 0 ? 0 : 1);
    const auto steps = static_cast<std::uint64_t>(s.exp > 0 ? s.exp : -s.exp);
    const auto next = apply_power(t, c, col, steps);
    if (!next) return std::nullopt;
    c = *next;
  }
  return c;
}

std::optional<std::vector<Coset>> permutation_of(const CosetTable& t, const Word& w) {
  std::vector<Coset> out(t.coset_count());
  for (std::size_t c = 0; c < t.coset_count(); ++c) {
    const auto img = evaluate_on_cosets(t, w, static_cast<Coset>(c));
    if (!img) return std::nullopt;
    out[c] = *img;
  }
  return out;
}

bool is_identity_permutation(const std::vector<Coset>& perm) {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<Coset>(i)) return false;
  return true;
}

TableCheck verify_table(const CosetTable& t, const Presentation& p) {
  const auto fail = [](std::string why) { return TableCheck{false, std::move(why)}; };
  if (t.generator_count() != p.generator_count()) return fail("generator count mismatch");
  const std::size_t n = t.coset_count();
  if (n == 0) return fail("empty table");
  for (std::size_t col = 0; col < t.column_count(); ++col) {
    std::vector<char> hit(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
      const Coset d = t.at(static_cast<Coset>(c), col);
      if (d < 0 || static_cast<std::size_t>(d) >= n) return fail("undefined or out-of-range entry");
      if (hit[static_cast<std::size_t>(d)]) return fail("column is not injective");
      hit[static_cast<std::size_t>(d)] = 1;
      if (t.at(d, col ^ 1U) != static_cast<Coset>(c)) return fail("inverse column disagrees");
    }
  }
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    const auto letters = p.relators()[i].letters();
    for (std::size_t c = 0; c < n; ++c) {
      Coset x = static_cast<Coset>(c);
      for (int l : letters) x = t.at(x, letter_column(l));
      if (x != static_cast<Coset>(c))
        return fail("relator " + std::to_string(i) + " moves coset " + std::to_string(c + 1));
    }
  }
  for (const auto& h : t.subgroup_generators()) {
    Coset x = 0;
    for (int l : h.letters()) x = t.at(x, letter_column(l));
    if (x != 0) return fail("subgroup generator does not fix coset 1");
  }
  return TableCheck{true, {}};
}

std::string dump_table(const CosetTable& t, const std::vector<std::string>& gen_names) {
  std::ostringstream out;
  out << "cosettable 1\n";
  out << "generators";
  for (const auto& g : gen_names) out << ' ' << g;
  out << "\ncosets " << t.coset_count() << "\ncomplete " << (t.complete() ? 1 : 0) << '\n';
  for (const auto& h : t.subgroup_generators()) out << "subgroup " << serialize(h, gen_names) << '\n';
  for (std::size_t g = 0; g < t.generator_count(); ++g) {
    out << "perm " << gen_names.at(g) << ':';
    for (std::size_t c = 0; c < t.coset_count(); ++c) {
      const Coset d = t.at(static_cast<Coset>(c), 2 * g);
      out << ' ' << (d == kUndefined ? 0 : d + 1);
    }
    out << '\n';
  }
  out << "end\n";
  return out.str();
}

CosetTable parse_table_dump(const std::string& text, std::vector<std::string>* gen_names) {
  std::istringstream in(text);
  const auto bad = [](const std::string& why) {
    return Error(ErrorKind::CertificateFailure, "coset table dump: " + why);
  };
  std::string line;
  std::vector<std::string> names;
  std::size_t n = 0;
  bool complete = false;
  std::vector<std::string> subgroup_text;
  std::vector<std::vector<Coset>> perms;
  bool header = false;
  bool ended = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "cosettable") {
      header = true;
    } else if (key == "generators") {
      for (std::string g; ls >> g;) names.push_back(g);
    } else if (key == "cosets") {
      ls >> n;
    } else if (key == "complete") {
      int c = 0;
      ls >> c;
      complete = c != 0;
    } else if (key == "subgroup") {
      std::string rest;
      std::getline(ls, rest);
      subgroup_text.push_back(rest);
    } else if (key == "perm") {
      std::string name;
      ls >> name;
      if (name.empty() || name.back() != ':') throw bad("malformed perm row");
      name.pop_back();
      if (perms.size() >= names.size() || names[perms.size()] != name)
        throw bad("perm rows out of generator order");
      std::vector<Coset> row;
      for (long long v; ls >> v;) {
        if (v < 0 || static_cast<std::size_t>(v) > n) throw bad("entry out of range");
        row.push_back(static_cast<Coset>(v - 1));
      }
      if (row.size() != n) throw bad("perm row has wrong length");
      perms.push_back(std::move(row));
    } else if (key == "end") {
      ended = true;
      break;
    } else {
      throw bad("unknown key " + key);
    }
  }
  if (!header || !ended || perms.size() != names.size() || n == 0) throw bad("incomplete dump");
  std::vector<Coset> entries(n * 2 * names.size(), kUndefined);
  for (std::size_t g = 0; g < names.size(); ++g)
    for (std::size_t c = 0; c < n; ++c) {
      const Coset d = perms[g][c];
      entries[c * 2 * names.size() + 2 * g] = d;
      if (d != kUndefined) {
        auto& back = entries[static_cast<std::size_t>(d) * 2 * names.size() + 2 * g + 1];
        if (back != kUndefined) throw bad("generator action is not injective");
        back = static_cast<Coset>(c);
      }
    }
  std::vector<Word> subgroup;
  for (const auto& s : subgroup_text) subgroup.push_back(parse_word(SourceText{s}, names));
  if (gen_names) *gen_names = names;
  return CosetTable(names.size(), n, std::move(entries), complete, std::move(subgroup));
}

}  // namespace fillscope

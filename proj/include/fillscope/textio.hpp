#pragma once

// Text grammar for words, presentations and slopes (the `.fp` format).
//
//   word         := item ( ('*' | whitespace) item )*
//   item         := atom ( '^' signed-integer )?
//   atom         := name | '1' | '(' word ')'
//   presentation := '<' gens [ '|' relators [ '|' peripheral ] ] '>'
//   relators     := [ relator ( ',' relator )* ]      relator := word [ '=' word ]
//   peripheral   := 'meridian' '=' word ',' 'longitude' '=' word
//
// Names match [A-Za-z][A-Za-z0-9_]*. '#' starts a comment running to end of
// line. `w1 = w2` is stored as the single relator w1 w2^-1.

#include <string>
#include <string_view>
#include <vector>

#include "fillscope/presentation.hpp"
#include "fillscope/slope.hpp"

namespace fillscope {

struct SourceText {
  std::string text;
  std::string origin = "<inline>";
};

Word parse_word(const SourceText& s, const std::vector<std::string>& gens);
Word parse_word(std::string_view s, const Presentation& p);
Presentation parse_presentation(const SourceText& s);
Slope parse_slope(std::string_view s);

std::string serialize(const Word& w, const std::vector<std::string>& gens);
std::string serialize(const Presentation& p);
std::string serialize(const Slope& s);

SourceText read_source(const std::string& path);

}  // namespace fillscope

#pragma once

// Line-oriented text format for codes.
//
//   kind: additive | binary
//   n: <alpha + 2 beta>
//   alpha: <count>
//   beta: <count>
//
// followed by generator rows "b b ... | q q ..." (additive) or one lowercase
// hex word per line (binary). Hex words carry ceil(n/4) digits; coordinate 0
// is the most significant bit and unused low bits are zero. Binary bodies are
// written sorted and deduplicated. Blank lines and lines starting with '#'
// are ignored when parsing.

#include <string>
#include <string_view>
#include <vector>

#include "z2z4/additive_code.hpp"
#include "z2z4/binary_code.hpp"

namespace z2z4 {

struct CodeFile {
  enum class Kind { additive, binary };
  Kind kind = Kind::binary;
  unsigned n = 0, alpha = 0, beta = 0;
  std::vector<MixedWord> rows;  // additive
  std::vector<Word> words;      // binary, bit i = coordinate i

  friend bool operator==(const CodeFile&, const CodeFile&) = default;
};

std::string render(const CodeFile& f);
/// Throws ParseError with a line number on malformed input.
CodeFile parse_codefile(std::string_view text);

CodeFile read_codefile(const std::string& path);
void write_codefile(const std::string& path, const CodeFile& f);

CodeFile to_file(const AdditiveCode& code);
/// A binary code with a default split of alpha = n, beta = 0.
CodeFile to_file(const BinaryCode& code);
CodeFile to_file(const BinaryCode& code, unsigned alpha, unsigned beta);

AdditiveCode additive_from(const CodeFile& f);
/// Binary files as stored; additive files via the Gray image.
BinaryCode binary_from(const CodeFile& f, std::uint64_t max_span = kDefaultMaxSpan);

std::string word_to_hex(Word w, unsigned n);
Word word_from_hex(std::string_view hex, unsigned n);

}  // namespace z2z4

#include "z2z4/codefile.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace z2z4 {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

unsigned parse_count(std::string_view s, std::size_t line) {
  unsigned v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) fail(line, "expected a non-negative integer");
  return v;
}

}  // namespace

std::string word_to_hex(Word w, unsigned n) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const unsigned digits = (n + 3) / 4;
  std::string s(digits, '0');
  for (unsigned d = 0; d < digits; ++d) {
    unsigned v = 0;
    for (unsigned k = 0; k < 4; ++k) {
      const unsigned i = 4 * d + k;
      v = (v << 1) | (i < n ? static_cast<unsigned>((w >> i) & 1u) : 0u);
    }
    s[d] = kDigits[v];
  }
  return s;
}

Word word_from_hex(std::string_view hex, unsigned n) {
  const unsigned digits = (n + 3) / 4;
  if (hex.size() != digits) throw ParseError("expected " + std::to_string(digits) + " hex digits");
  Word w = 0;
  for (unsigned d = 0; d < digits; ++d) {
    const char c = hex[d];
    unsigned v;
    if (c >= '0' && c <= '9')
      v = c - '0';
    else if (c >= 'a' && c <= 'f')
      v = c - 'a' + 10;
    else
      throw ParseError(std::string("invalid hex digit '") + c + "'");
    for (unsigned k = 0; k < 4; ++k) {
      const unsigned i = 4 * d + k;
      const bool bit = (v >> (3 - k)) & 1u;
      if (!bit) continue;
      if (i >= n) throw ParseError("padding bits must be zero");
      w |= Word{1} << i;
    }
  }
  return w;
}

std::string render(const CodeFile& f) {
  std::ostringstream out;
  out << "kind: " << (f.kind == CodeFile::Kind::additive ? "additive" : "binary") << '\n'
      << "n: " << f.n << '\n'
      << "alpha: " << f.alpha << '\n'
      << "beta: " << f.beta << '\n';
  if (f.kind == CodeFile::Kind::additive) {
    for (const auto& r : f.rows) {
      std::string line;
      for (auto s : r.bsyms) {
        line += static_cast<char>('0' + s);
        line += ' ';
      }
      line += '|';
      for (auto s : r.qsyms) {
        line += ' ';
        line += static_cast<char>('0' + s);
      }
      out << line << '\n';
    }
  } else {
    std::vector<std::string> lines;
    lines.reserve(f.words.size());
    for (Word w : f.words) lines.push_back(word_to_hex(w, f.n));
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    for (const auto& l : lines) out << l << '\n';
  }
  return out.str();
}

CodeFile parse_codefile(std::string_view text) {
  CodeFile f;
  static constexpr const char* kKeys[] = {"kind", "n", "alpha", "beta"};
  unsigned header = 0;
  std::size_t lineno = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (header < 4) {
      const auto colon = line.find(':');
      if (colon == std::string_view::npos || trim(line.substr(0, colon)) != kKeys[header])
        fail(lineno, std::string("expected header '") + kKeys[header] + ":'");
      const std::string_view value = trim(line.substr(colon + 1));
      switch (header) {
        case 0:
          if (value == "additive")
            f.kind = CodeFile::Kind::additive;
          else if (value == "binary")
            f.kind = CodeFile::Kind::binary;
          else
            fail(lineno, "kind must be 'additive' or 'binary'");
          break;
        case 1: f.n = parse_count(value, lineno); break;
        case 2: f.alpha = parse_count(value, lineno); break;
        case 3:
          f.beta = parse_count(value, lineno);
          if (f.alpha + 2 * f.beta != f.n) fail(lineno, "n must equal alpha + 2 beta");
          if (f.n == 0 || f.n > kMaxLength) fail(lineno, "length must be between 1 and 64");
          break;
      }
      ++header;
      continue;
    }

    if (f.kind == CodeFile::Kind::binary) {
      try {
        f.words.push_back(word_from_hex(line, f.n));
      } catch (const ParseError& e) {
        fail(lineno, e.what());
      }
      continue;
    }

    MixedWord row;
    bool bar = false;
    std::string_view rest = line;
    while (!rest.empty()) {
      const auto sp = rest.find_first_of(" \t");
      const std::string_view tok = rest.substr(0, sp);
      rest = sp == std::string_view::npos ? std::string_view{} : trim(rest.substr(sp));
      if (tok == "|") {
        if (bar) fail(lineno, "more than one '|'");
        bar = true;
        continue;
      }
      if (tok.size() != 1 || tok[0] < '0' || tok[0] > '3') fail(lineno, "symbols must be single digits");
      const auto v = static_cast<std::uint8_t>(tok[0] - '0');
      if (!bar) {
        if (v > 1) fail(lineno, "binary symbols must be 0 or 1");
        row.bsyms.push_back(v);
      } else {
        row.qsyms.push_back(v);
      }
    }
    if (!bar) fail(lineno, "missing '|' between binary and quaternary parts");
    if (row.alpha() != f.alpha || row.beta() != f.beta) fail(lineno, "row shape differs from the header");
    f.rows.push_back(std::move(row));
  }
  if (header < 4) fail(lineno, "incomplete header");
  if (f.kind == CodeFile::Kind::binary) {
    std::vector<Word> sorted = f.words;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw ParseError("duplicate codeword");
  }
  return f;
}

CodeFile read_codefile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_codefile(ss.str());
}

void write_codefile(const std::string& path, const CodeFile& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << render(f);
  if (!out) throw InvalidArgument("write failed: " + path);
}

CodeFile to_file(const AdditiveCode& code) {
  CodeFile f;
  f.kind = CodeFile::Kind::additive;
  f.alpha = code.alpha();
  f.beta = code.beta();
  f.n = code.length();
  f.rows = code.generators();
  return f;
}

CodeFile to_file(const BinaryCode& code) { return to_file(code, code.length(), 0); }

CodeFile to_file(const BinaryCode& code, unsigned alpha, unsigned beta) {
  if (alpha + 2 * beta != code.length()) throw LengthMismatch("alpha + 2 beta differs from the code length");
  CodeFile f;
  f.kind = CodeFile::Kind::binary;
  f.alpha = alpha;
  f.beta = beta;
  f.n = code.length();
  f.words.assign(code.words().begin(), code.words().end());
  return f;
}

AdditiveCode additive_from(const CodeFile& f) {
  if (f.kind != CodeFile::Kind::additive) throw InvalidArgument("expected an additive code file");
  return AdditiveCode(f.alpha, f.beta, f.rows);
}

BinaryCode binary_from(const CodeFile& f, std::uint64_t max_span) {
  if (f.kind == CodeFile::Kind::additive) return additive_from(f).gray_image(max_span);
  return BinaryCode(f.n, f.words);
}

}  // namespace z2z4

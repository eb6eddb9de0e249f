#include "z2z4/binary_code.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>

#include "z2z4/closure.hpp"
#include "z2z4/kernels.hpp"

namespace z2z4 {

BinaryCode::BinaryCode(unsigned n, std::vector<Word> words) : n_(n), words_(std::move(words)) {
  check_length(n);
  const Word mask = low_mask(n);
  for (Word w : words_)
    if (w & ~mask) throw InvalidArgument("codeword has bits beyond the code length");
  if (!std::is_sorted(words_.begin(), words_.end())) std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  if (words_.size() > std::numeric_limits<std::uint32_t>::max()) throw BudgetExceeded("code too large to index");
  build_index();
}

BinaryCode BinaryCode::from_strings(std::initializer_list<std::string_view> words) {
  std::vector<BinaryWord> ws;
  for (auto s : words) ws.push_back(BinaryWord::from_string(s));
  if (ws.empty()) throw InvalidArgument("empty word list");
  return from_words(ws.front().size(), ws);
}

BinaryCode BinaryCode::from_words(unsigned n, std::span<const BinaryWord> words) {
  std::vector<Word> bits;
  bits.reserve(words.size());
  for (const auto& w : words) {
    if (w.size() != n) throw LengthMismatch("codewords of different lengths");
    bits.push_back(w.bits());
  }
  return BinaryCode(n, std::move(bits));
}

// Buckets on the top b bits of the n-bit value, b about log2(size) and at most 22,
// so a lookup is one directory read plus a binary search over a few words.
void BinaryCode::build_index() {
  directory_.clear();
  bucket_shift_ = n_;
  if (words_.size() < 64 || n_ == 0) return;
  const unsigned b = std::min({n_, static_cast<unsigned>(std::bit_width(words_.size())) - 1, 22u});
  bucket_shift_ = n_ - b;
  const std::size_t buckets = std::size_t{1} << b;
  directory_.assign(buckets + 1, 0);
  std::size_t k = 0;
  for (std::size_t bkt = 0; bkt <= buckets; ++bkt) {
    while (k < words_.size() && (words_[k] >> bucket_shift_) < bkt) ++k;
    directory_[bkt] = static_cast<std::uint32_t>(k);
  }
}

std::optional<std::size_t> BinaryCode::index_of(Word w) const noexcept {
  auto lo = words_.begin(), hi = words_.end();
  if (!directory_.empty()) {
    const Word bkt = w >> bucket_shift_;
    if (bkt + 1 >= directory_.size()) return std::nullopt;
    lo = words_.begin() + directory_[bkt];
    hi = words_.begin() + directory_[bkt + 1];
  }
  const auto it = std::lower_bound(lo, hi, w);
  if (it == hi || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - words_.begin());
}

unsigned min_distance(const BinaryCode& code, const MinDistanceOptions& opts) {
  if (code.size() < 2) throw InvalidArgument("minimum distance needs at least two codewords");
  if (opts.structure && code.contains_zero() && is_closed_under_star(code, *opts.structure))
    return kernels::min_nonzero_weight(code.words());
  const std::uint64_t n = code.size();
  if (n * (n - 1) / 2 > opts.max_pairs)
    throw BudgetExceeded("pairwise distance scan over budget; supply a verified structure");
  const auto words = code.words();
  unsigned best = kernels::kNoWeight;
  for (std::size_t i = 0; i + 1 < words.size() && best > 1; ++i)
    best = std::min(best, kernels::min_xor_weight(words.subspan(i + 1), words[i]));
  return best;
}

const char* to_string(CodeClass c) noexcept {
  switch (c) {
    case CodeClass::perfect: return "perfect";
    case CodeClass::extended_perfect: return "extended_perfect";
    case CodeClass::preparata_like: return "preparata_like";
    case CodeClass::none: break;
  }
  return "none";
}

CodeClass classify(const BinaryCode& code, const MinDistanceOptions& opts) {
  const unsigned n = code.length();
  if (code.size() < 2 || n < 2) return CodeClass::none;
  using u128 = unsigned __int128;
  const u128 size = code.size();
  const u128 space = u128{1} << n;
  const bool perfect_size = size * (n + 1) == space;
  const bool extended_size = size * n * 2 == space;
  const bool preparata_size = size * n * n == space && std::has_single_bit(n) && std::countr_zero(n) % 2 == 0;
  if (!perfect_size && !extended_size && !preparata_size) return CodeClass::none;
  const unsigned d = min_distance(code, opts);
  if (perfect_size && d >= 3) return CodeClass::perfect;
  if (extended_size && d >= 4) return CodeClass::extended_perfect;
  if (preparata_size && d >= 6) return CodeClass::preparata_like;
  return CodeClass::none;
}

unsigned rank(const BinaryCode& code) {
  std::array<Word, kMaxLength> basis{};  // basis[b] has leading bit b
  unsigned r = 0;
  for (Word w : code.words()) {
    while (w) {
      const unsigned b = 63 - static_cast<unsigned>(std::countl_zero(w));
      if (!basis[b]) {
        basis[b] = w;
        ++r;
        break;
      }
      w ^= basis[b];
    }
    if (r == code.length()) break;
  }
  return r;
}

std::vector<std::uint64_t> weight_distribution(const BinaryCode& code) {
  kernels::WeightHistogram hist{};
  kernels::weight_histogram(code.words(), hist);
  return std::vector<std::uint64_t>(hist.begin(), hist.begin() + code.length() + 1);
}

BinaryCode parity_extend(const BinaryCode& code) {
  const unsigned n = code.length();
  check_length(n + 1);
  std::vector<Word> out;
  out.reserve(code.size());
  for (Word w : code.words()) out.push_back(w | (Word{popcount(w) & 1u} << n));
  return BinaryCode(n + 1, std::move(out));
}

BinaryCode puncture_last(const BinaryCode& code) {
  const unsigned n = code.length();
  if (n < 2) throw InvalidArgument("cannot puncture a code of length < 2");
  std::vector<Word> out;
  out.reserve(code.size());
  for (Word w : code.words()) out.push_back(w & low_mask(n - 1));
  return BinaryCode(n - 1, std::move(out));
}

BinaryCode hamming7_fixture() {
  return BinaryCode::from_strings({"0000000", "0001011", "0010110", "0101100", "1011000", "0110001", "1100010",
                                   "1000101", "1110100", "1101001", "1010011", "0100111", "1001110", "0011101",
                                   "0111010", "1111111"});
}

}  // namespace z2z4

#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "z2z4/word.hpp"

namespace z2z4 {

/// A sorted, duplicate-free set of words of one length, with a bucketed
/// membership index over the top bits of the (numerically sorted) words.
class BinaryCode {
 public:
  BinaryCode() = default;
  BinaryCode(unsigned n, std::vector<Word> words);

  static BinaryCode from_strings(std::initializer_list<std::string_view> words);
  static BinaryCode from_words(unsigned n, std::span<const BinaryWord> words);

  unsigned length() const noexcept { return n_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  std::span<const Word> words() const noexcept { return words_; }
  Word operator[](std::size_t i) const noexcept { return words_[i]; }

  std::optional<std::size_t> index_of(Word w) const noexcept;
  bool contains(Word w) const noexcept { return index_of(w).has_value(); }
  bool contains(const BinaryWord& w) const noexcept { return w.size() == n_ && contains(w.bits()); }
  bool contains_zero() const noexcept { return !words_.empty() && words_.front() == 0; }

  friend bool operator==(const BinaryCode& a, const BinaryCode& b) noexcept {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  void build_index();

  unsigned n_ = 0;
  std::vector<Word> words_;
  unsigned bucket_shift_ = 0;
  std::vector<std::uint32_t> directory_;
};

struct MinDistanceOptions {
  /// When given and the code is verified closed under *_pi, the distance is
  /// read off the nonzero weights instead of scanning all pairs.
  const Involution* structure = nullptr;
  std::uint64_t max_pairs = std::uint64_t{1} << 31;
};

/// Throws InvalidArgument for fewer than two words, BudgetExceeded when the
/// pair scan is over budget and no usable structure was supplied.
unsigned min_distance(const BinaryCode& code, const MinDistanceOptions& opts = {});

enum class CodeClass { perfect, extended_perfect, preparata_like, none };

const char* to_string(CodeClass c) noexcept;

CodeClass classify(const BinaryCode& code, const MinDistanceOptions& opts = {});

/// Dimension of the linear span over Z2.
unsigned rank(const BinaryCode& code);

std::vector<std::uint64_t> weight_distribution(const BinaryCode& code);

/// Appends an overall parity bit as coordinate n.
BinaryCode parity_extend(const BinaryCode& code);
/// Deletes coordinate n-1.
BinaryCode puncture_last(const BinaryCode& code);

/// The cyclic Hamming code of length 7 as a 16-word list.
BinaryCode hamming7_fixture();

}  // namespace z2z4

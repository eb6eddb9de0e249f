#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "z2z4/binary_code.hpp"
#include "z2z4/word.hpp"

namespace z2z4 {

inline constexpr std::uint64_t kDefaultMaxSpan = std::uint64_t{1} << 27;

struct CodeType {
  unsigned alpha, beta, gamma, delta;
  friend bool operator==(const CodeType&, const CodeType&) = default;
};

/// A subgroup of Z2^alpha x Z4^beta given by generators. The constructor
/// reduces the generators to a direct-sum basis (Smith form over Z4 with the
/// binary coordinates embedded as {0,2}), so size and type are known without
/// enumeration. Check rows are generators of the dual: w is a codeword iff
/// inner_product(w, h) = 0 for every check row h.
class AdditiveCode {
 public:
  AdditiveCode() = default;
  AdditiveCode(unsigned alpha, unsigned beta, std::vector<MixedWord> generators);

  /// The code {x : inner_product(x, h) = 0 for all rows h}.
  static AdditiveCode from_check_rows(unsigned alpha, unsigned beta, std::vector<MixedWord> rows);

  unsigned alpha() const noexcept { return alpha_; }
  unsigned beta() const noexcept { return beta_; }
  unsigned length() const noexcept { return alpha_ + 2 * beta_; }
  const std::vector<MixedWord>& generators() const noexcept { return generators_; }
  /// Basis elements and their additive orders (2 or 4).
  const std::vector<std::pair<MixedWord, unsigned>>& basis() const noexcept { return basis_; }
  const std::vector<MixedWord>& check_rows() const noexcept { return check_rows_; }

  /// log2 |C| = gamma + 2 delta.
  unsigned log2_size() const noexcept { return gamma_ + 2 * delta_; }
  std::uint64_t size() const;
  /// (alpha, beta; gamma, delta) from the Smith form.
  CodeType type() const noexcept { return {alpha_, beta_, gamma_, delta_}; }

  /// Syndrome test against the check rows.
  bool contains(const MixedWord& w) const;

  /// Packed Gray images of all codewords, sorted. Enumerates the basis as a
  /// mixed-radix counter, moving between neighbours by *_pi with pi standard.
  BinaryCode gray_image(std::uint64_t max_span = kDefaultMaxSpan) const;
  /// All codewords, sorted lexicographically.
  std::vector<MixedWord> span(std::uint64_t max_span = kDefaultMaxSpan) const;

  friend bool operator==(const AdditiveCode& a, const AdditiveCode& b);

 private:
  void reduce();

  unsigned alpha_ = 0, beta_ = 0;
  unsigned gamma_ = 0, delta_ = 0;
  std::vector<MixedWord> generators_;
  std::vector<std::pair<MixedWord, unsigned>> basis_;
  std::vector<MixedWord> check_rows_;
};

AdditiveCode dual(const AdditiveCode& code);

enum class MembershipRoute { syndrome, span_search, order_test };

/// Three independent decision routes; they must agree.
bool membership(const AdditiveCode& code, const MixedWord& w, MembershipRoute route = MembershipRoute::syndrome);

/// (alpha, beta; gamma, delta) from |C| and the number of 2-torsion
/// codewords, counted over the materialized span.
CodeType code_type(const AdditiveCode& code, std::uint64_t max_span = kDefaultMaxSpan);

/// Whether the Gray preimages of the words form a subgroup of Z2^alpha x Z4^beta.
/// Works in the packed natural encoding with direct mod-2/mod-4 addition, so it
/// is independent of the *_pi implementation.
bool is_additive(const BinaryCode& cands, unsigned alpha, unsigned beta);

struct PerfectParams {
  int r = 0;
  int t = 0;
  int gamma_dot() const noexcept { return 2 * r - t; }
  int delta() const noexcept { return t - r; }
  int gamma() const noexcept { return 2 * r - t + 1; }
  int delta_dot() const noexcept { return t - r - 1; }
};

enum class Family { mixed, z4 };

void validate_params(const PerfectParams& p, Family family);

/// 1-perfect code of type (2^r - 1, 2^{t-1} - 2^{r-1}).
AdditiveCode construct_perfect(const PerfectParams& p);
/// Extended 1-perfect code of type (2^r, 2^{t-1} - 2^{r-1}).
AdditiveCode construct_extended_perfect(const PerfectParams& p);
/// Extended 1-perfect code of type (0, 2^{t-1}).
AdditiveCode construct_z4_extended_perfect(const PerfectParams& p);
AdditiveCode hadamard_dual(const PerfectParams& p, Family family);

/// Self-dual length-8 quaternary code of type (0, 8; 0, 4).
AdditiveCode octacode();
BinaryCode nordstrom_robinson();

}  // namespace z2z4

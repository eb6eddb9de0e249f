#pragma once

// Binary words, coordinate permutations, involutions and the twisted
// group operation x *_pi y = x + y + (x + pi(x)) (y + pi(y)).
//
// Words are bit-packed: coordinate i lives in bit i of a 64-bit machine word.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "z2z4/error.hpp"

namespace z2z4 {

using Word = std::uint64_t;

inline constexpr unsigned kMaxLength = 64;

constexpr Word low_mask(unsigned n) noexcept {
  return n >= 64 ? ~Word{0} : (Word{1} << n) - 1;
}

inline unsigned popcount(Word w) noexcept { return static_cast<unsigned>(std::popcount(w)); }

void check_length(unsigned n);

class BinaryWord {
 public:
  BinaryWord() = default;
  BinaryWord(unsigned n, Word bits);

  static BinaryWord zero(unsigned n) { return BinaryWord(n, 0); }
  /// Parses "0110..." with the first character as coordinate 0.
  static BinaryWord from_string(std::string_view s);

  unsigned size() const noexcept { return n_; }
  Word bits() const noexcept { return bits_; }
  bool operator[](unsigned i) const noexcept { return (bits_ >> i) & 1u; }
  unsigned weight() const noexcept { return popcount(bits_); }
  std::string to_string() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::uint8_t n_ = 0;
  Word bits_ = 0;
};

/// Coordinatewise sum modulo 2.
BinaryWord operator+(const BinaryWord& x, const BinaryWord& y);
/// Coordinatewise product modulo 2.
BinaryWord operator*(const BinaryWord& x, const BinaryWord& y);

unsigned distance(const BinaryWord& x, const BinaryWord& y);

enum class Parity { even, odd };

struct WeightParity {
  unsigned weight;
  Parity parity;
};

WeightParity weight_parity(const BinaryWord& x);

/// A bijection of {0..n-1}; image[i] = sigma(i). Acts on words by
/// sigma(x)_i = x_{sigma^{-1}(i)}, i.e. bit j of x moves to bit sigma(j).
class CoordPermutation {
 public:
  CoordPermutation() = default;
  explicit CoordPermutation(std::span<const unsigned> image);
  CoordPermutation(std::initializer_list<unsigned> image)
      : CoordPermutation(std::span<const unsigned>(image.begin(), image.size())) {}

  static CoordPermutation identity(unsigned n);
  /// Builds from disjoint cycles, e.g. {{0, 1}, {2, 4}}.
  static CoordPermutation from_cycles(unsigned n, std::initializer_list<std::initializer_list<unsigned>> cycles);
  static CoordPermutation from_cycles(unsigned n, const std::vector<std::vector<unsigned>>& cycles);
  static CoordPermutation transposition(unsigned n, unsigned a, unsigned b);

  unsigned size() const noexcept { return n_; }
  unsigned operator()(unsigned i) const noexcept { return image_[i]; }
  std::vector<unsigned> images() const;
  const std::uint8_t* data() const noexcept { return image_.data(); }

  CoordPermutation inverse() const;
  bool is_identity() const noexcept;
  bool is_involution() const noexcept;
  unsigned first_moved_point() const noexcept;  // size() if identity

  Word apply(Word x) const noexcept;

  /// Space-separated image list, the command-line format.
  std::string to_string() const;
  /// Disjoint-cycle notation, "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const CoordPermutation& a, const CoordPermutation& b) noexcept;
  friend std::strong_ordering operator<=>(const CoordPermutation& a, const CoordPermutation& b) noexcept;

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxLength> image_{};
};

/// Function composition: (a * b)(i) = a(b(i)).
CoordPermutation operator*(const CoordPermutation& a, const CoordPermutation& b);

BinaryWord apply_perm(const CoordPermutation& sigma, const BinaryWord& x);

/// Swapping pattern of an involution grouped by pair distance, so that
/// pi(x) is a handful of delta-swaps: for each (shift, mask),
/// t = ((x >> shift) ^ x) & mask; x ^= t | (t << shift).
struct TwistSpec {
  struct DeltaSwap {
    unsigned shift;
    Word mask;
  };
  std::vector<DeltaSwap> swaps;

  Word apply(Word x) const noexcept {
    for (const auto& s : swaps) {
      const Word t = ((x >> s.shift) ^ x) & s.mask;
      x ^= t | (t << s.shift);
    }
    return x;
  }
};

/// A coordinate permutation of order at most 2: a Z2Z4 structure.
class Involution {
 public:
  Involution() = default;
  explicit Involution(const CoordPermutation& p);

  static Involution identity(unsigned n) { return Involution(CoordPermutation::identity(n)); }

  const CoordPermutation& perm() const noexcept { return perm_; }
  unsigned size() const noexcept { return perm_.size(); }
  unsigned operator()(unsigned i) const noexcept { return perm_(i); }
  /// Number of self-adjacent coordinates.
  unsigned alpha() const noexcept { return alpha_; }
  /// Number of adjacent pairs.
  unsigned beta() const noexcept { return (size() - alpha_) / 2; }
  Word fixed_mask() const noexcept { return fixed_mask_; }
  const TwistSpec& twist() const noexcept { return twist_; }

  Word apply(Word x) const noexcept { return twist_.apply(x); }

  friend bool operator==(const Involution& a, const Involution& b) noexcept { return a.perm_ == b.perm_; }
  friend auto operator<=>(const Involution& a, const Involution& b) noexcept { return a.perm_ <=> b.perm_; }

 private:
  CoordPermutation perm_;
  unsigned alpha_ = 0;
  Word fixed_mask_ = 0;
  TwistSpec twist_;
};

/// x *_pi y on packed words; px = pi(x), py = pi(y).
constexpr Word star_twisted(Word x, Word y, Word px, Word py) noexcept {
  return x ^ y ^ ((x ^ px) & (y ^ py));
}

inline Word star(Word x, Word y, const Involution& pi) noexcept {
  return star_twisted(x, y, pi.apply(x), pi.apply(y));
}

BinaryWord star(const BinaryWord& x, const BinaryWord& y, const Involution& pi);

/// Fixes 0..alpha-1 and swaps (alpha+2k, alpha+2k+1) for k < beta.
Involution standard_involution(unsigned alpha, unsigned beta);

struct StructureType {
  unsigned alpha;
  unsigned beta;
  friend bool operator==(const StructureType&, const StructureType&) = default;
  friend auto operator<=>(const StructureType&, const StructureType&) = default;
};

StructureType involution_type(const Involution& pi);

/// Element of {0,1}^alpha x {0,1,2,3}^beta.
struct MixedWord {
  std::vector<std::uint8_t> bsyms;
  std::vector<std::uint8_t> qsyms;

  MixedWord() = default;
  MixedWord(std::vector<std::uint8_t> b, std::vector<std::uint8_t> q);

  static MixedWord zero(unsigned alpha, unsigned beta);

  unsigned alpha() const noexcept { return static_cast<unsigned>(bsyms.size()); }
  unsigned beta() const noexcept { return static_cast<unsigned>(qsyms.size()); }
  bool is_zero() const noexcept;
  std::string to_string() const;

  friend bool operator==(const MixedWord&, const MixedWord&) = default;
  friend auto operator<=>(const MixedWord&, const MixedWord&) = default;
};

/// Coordinatewise addition, mod 2 on the binary part and mod 4 on the quaternary part.
MixedWord operator+(const MixedWord& x, const MixedWord& y);
MixedWord operator-(const MixedWord& x);
MixedWord scale(const MixedWord& x, unsigned k);

/// The mod-4 pairing 2*sum(x_i y_i) + sum(x'_j y'_j).
unsigned inner_product(const MixedWord& x, const MixedWord& y);

/// phi(0)=00, phi(1)=01, phi(2)=11, phi(3)=10, applied to each quaternary symbol.
BinaryWord gray(const MixedWord& m);
Word gray_bits(const MixedWord& m);
MixedWord gray_inv(const BinaryWord& x, unsigned alpha, unsigned beta);

}  // namespace z2z4

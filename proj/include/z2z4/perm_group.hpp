#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "z2z4/word.hpp"

namespace z2z4 {

using BigInt = boost::multiprecision::cpp_int;

/// A permutation group held as a base and strong generating set, built by
/// the deterministic Schreier-Sims variant of Knuth (adding generators one at
/// a time, with transversals closed under Schreier generators on the fly).
///
/// The base runs over all n points (a caller-supplied prefix first, then the
/// remaining points in increasing order); level k stores the coset
/// representatives T_k[j] of G_(b_0..b_{k-1}) mapping b_k to j. Every element
/// is uniquely T_0[j_0] * T_1[j_1] * ... * T_{n-1}[j_{n-1}].
class PermGroup {
 public:
  PermGroup() = default;
  explicit PermGroup(unsigned n, std::span<const unsigned> base_prefix = {});

  static PermGroup from_generators(unsigned n, std::span<const CoordPermutation> gens,
                                   std::span<const unsigned> base_prefix = {});

  unsigned degree() const noexcept { return n_; }
  /// Generators in insertion order, identity and redundant elements skipped.
  const std::vector<CoordPermutation>& generators() const noexcept { return gens_; }
  const std::vector<unsigned>& base() const noexcept { return base_; }

  /// Adds a generator; a no-op when it is already a member.
  void add_generator(const CoordPermutation& g);

  BigInt order() const;
  bool contains(const CoordPermutation& g) const;

  /// Points j with T_k[j] present, in increasing order; this is the orbit of
  /// b_k under the pointwise stabilizer of b_0..b_{k-1}.
  std::vector<unsigned> fundamental_orbit(unsigned level) const;
  const CoordPermutation& transversal(unsigned level, unsigned point) const;

  /// Visits every element in a fixed order; stops early when fn returns false.
  /// Throws BudgetExceeded when order() > limit.
  void for_each_element(const std::function<bool(const CoordPermutation&)>& fn,
                        std::uint64_t limit = std::uint64_t{1} << 22) const;
  std::vector<CoordPermutation> elements(std::uint64_t limit = std::uint64_t{1} << 22) const;

  /// Orbit partition of {0..n-1}: orbit id per point, ids ordered by least point.
  std::vector<unsigned> orbit_ids() const;
  std::vector<unsigned> orbit(unsigned point) const;

 private:
  struct Level {
    std::vector<std::optional<CoordPermutation>> rep;      // rep[j] maps b_k to j
    std::vector<std::optional<CoordPermutation>> rep_inv;  // inverses
    std::vector<CoordPermutation> strong;                  // S_k
  };

  bool sift_member(unsigned level, CoordPermutation g) const;
  void add_at(unsigned level, const CoordPermutation& g);
  void close_at(unsigned level, const CoordPermutation& g);

  unsigned n_ = 0;
  std::vector<unsigned> base_;
  std::vector<Level> levels_;
  std::vector<CoordPermutation> gens_;
};

}  // namespace z2z4

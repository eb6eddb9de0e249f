#pragma once

#include <cstdint>
#include <vector>

#include "z2z4/additive_code.hpp"
#include "z2z4/binary_code.hpp"
#include "z2z4/perm_group.hpp"
#include "z2z4/word.hpp"

namespace z2z4 {

struct SymmetryOptions {
  /// Wall-clock budget; 0 disables it. On expiry the partial group is
  /// returned with certified = false.
  double timeout_s = 0;
  /// Restrict the search to permutations commuting with this involution,
  /// which yields Sym_pi(C) directly.
  const Involution* commute_with = nullptr;
  /// A structure the code may be closed under. Closure is verified first; if it
  /// holds, candidates commuting with it are checked on *_pi generators only.
  const Involution* structure = nullptr;
  /// The second-smallest weight class joins the refinement only when it has at
  /// most this many words.
  std::size_t second_class_cap = std::size_t{1} << 17;
  /// Classes with more words than this refine the root partition only.
  std::size_t node_class_cap = std::size_t{1} << 12;
  /// Worker threads for full-code candidate checks; 0 reads Z2Z4_THREADS.
  unsigned threads = 0;
};

struct SymmetryStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t full_checks = 0;
  std::uint64_t generator_checks = 0;
  double seconds = 0;
};

struct SymmetryResult {
  PermGroup group;
  /// Generators sorted by image array.
  std::vector<CoordPermutation> generators;
  bool certified = true;
  SymmetryStats stats;
};

/// Sym(C): all coordinate permutations mapping the code onto itself, found by
/// individualization-refinement backtracking. Cells are refined by incidence
/// with the supports of the two smallest nonzero weight classes; every leaf
/// permutation is verified against the code itself.
SymmetryResult symmetry_group(const BinaryCode& code, const SymmetryOptions& opts = {});

/// Whether sigma maps the code onto itself, checking all codewords.
bool stabilizes(const CoordPermutation& sigma, const BinaryCode& code, unsigned threads = 1);

/// {g in G : g pi = pi g}, by backtracking through a BSGS whose base lists
/// each pi-pair consecutively.
PermGroup sym_pi(const PermGroup& g, const Involution& pi);

/// A coordinate permutation of Z2^alpha x Z4^beta preserving the split,
/// followed by sign changes: apply(w).q[qperm[k]] = (negate[k] ? -1 : 1) w.q[k].
struct MonomialTransform {
  unsigned alpha = 0, beta = 0;
  std::vector<unsigned> bperm;
  std::vector<unsigned> qperm;
  std::vector<std::uint8_t> negate;

  MixedWord apply(const MixedWord& w) const;
  friend bool operator==(const MonomialTransform&, const MonomialTransform&) = default;
};

/// Composition: (a * b).apply(w) = a.apply(b.apply(w)).
MonomialTransform operator*(const MonomialTransform& a, const MonomialTransform& b);

/// Throws PreconditionViolation unless sigma commutes with the standard involution.
MonomialTransform sym_to_monomial(const CoordPermutation& sigma, unsigned alpha, unsigned beta);
CoordPermutation monomial_to_sym(const MonomialTransform& m);

/// Sym_pi of the Gray images of C and of its dual coincide (pi standard).
bool verify_maut_duality(const AdditiveCode& code, const SymmetryOptions& opts = {});

/// |C| * |Sym(C)|.
BigInt aut_order(const BinaryCode& code, const PermGroup& sym);

enum class OrderFamily { perfect_a, extended_b, z4_c };

/// Closed-form |Sym(C)| for the three families.
BigInt predict_order(const PerfectParams& p, OrderFamily family);

}  // namespace z2z4

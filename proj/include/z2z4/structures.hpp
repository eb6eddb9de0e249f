#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "z2z4/additive_code.hpp"
#include "z2z4/binary_code.hpp"
#include "z2z4/closure.hpp"
#include "z2z4/perm_group.hpp"
#include "z2z4/symmetry.hpp"

namespace z2z4 {

/// x *_pi y in C for all x, y in C. All pairs when |C|^2 <= 2^24, otherwise
/// greedy subgroup growth, which rejects codes without the zero word.
bool closure_check(const BinaryCode& code, const Involution& pi, const ClosureOptions& opts = {});

struct StructureReport {
  std::string code_id;
  /// Sorted by image array.
  std::vector<Involution> structures;
  bool is_linear = false;
  std::vector<StructureType> types;  // parallel to structures
  std::uint64_t involutions_in_sym = 0;  // identity included
  std::uint64_t conjugacy_classes = 0;
};

struct EnumerateOptions {
  std::uint64_t max_involutions = std::uint64_t{1} << 22;
};

/// Every structure of C lies in Sym(C), since pi(x) = (x *_pi x) *_pi x. The
/// involutions of Sym(C) are enumerated by backtracking through its BSGS and
/// closure is decided once per conjugacy class under Sym(C).
StructureReport enumerate_structures(const BinaryCode& code, const PermGroup& sym, std::string code_id = {},
                                     const EnumerateOptions& opts = {});

struct ConflictWitness {
  BinaryWord v, u;
  unsigned i = 0;
  BinaryWord p1;  // v *_pi u
  BinaryWord p2;  // v *_tau u
};

struct WitnessOptions {
  /// Check that C is extended 1-perfect and closed under pi before searching.
  bool check_preconditions = true;
};

/// Weight-4 codewords v, u with v_i = u_{pi(i)} = 1 and all other support
/// coordinates independent (j' not in {j, pi(j), tau(j)}). Such a pair makes
/// v *_pi u and v *_tau u = v + u codewords at distance 2. Empty when no pair
/// exists. Throws PreconditionViolation when tau = pi or no coordinate i with
/// pi(i) not in {i, tau(i)} exists.
std::optional<ConflictWitness> conflict_witness(const BinaryCode& code, const Involution& pi, const Involution& tau,
                                                const WitnessOptions& opts = {});

struct CompletionOptions {
  /// Process words and candidates in decreasing instead of increasing order.
  bool reverse_order = false;
  std::uint64_t max_backtrack_nodes = 1'000'000;
};

struct CompletionStats {
  std::uint64_t forced = 0;
  std::uint64_t backtrack_nodes = 0;
  std::uint64_t solutions = 0;  // found by an exhaustive uniqueness check, when run
};

/// The extended 1-perfect code containing a Preparata-like code P, by
/// constraint propagation over the words of P's parity: every word of the
/// other parity is at distance 1 from exactly one codeword.
BinaryCode complete_to_extended_perfect(const BinaryCode& p, const CompletionOptions& opts = {},
                                        CompletionStats* stats = nullptr);

/// Counts completions by exhausting the backtracking tree (up to `limit`).
std::uint64_t count_completions(const BinaryCode& p, std::uint64_t limit = 2, const CompletionOptions& opts = {});

struct Theorem1Report {
  PerfectParams params;
  Family family = Family::mixed;
  unsigned n = 0;
  StructureType type{};
  unsigned rank = 0;
  BigInt sym_order, sym_pi_order;
  StructureReport structures;
  bool certified = true;
  /// n > 16: one structure and Sym = Sym_pi. For n = 16 the observations are
  /// reported without a claim.
  std::optional<bool> holds;
};

Theorem1Report verify_theorem1(const PerfectParams& p, Family family, const SymmetryOptions& opts = {});

}  // namespace z2z4

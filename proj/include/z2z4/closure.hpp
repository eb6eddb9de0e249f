#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "z2z4/binary_code.hpp"
#include "z2z4/word.hpp"

namespace z2z4 {

struct ClosureOptions {
  /// Codes with |C|^2 at most this are checked over all pairs.
  std::uint64_t pair_limit = std::uint64_t{1} << 24;
  /// Number of pseudo-random pairs probed before the exact subgroup growth.
  unsigned probe_pairs = 256;
};

/// out[k] = xs[k] (op) y for a commutative group operation on packed words.
using BatchOp = std::function<void(std::span<const Word> xs, Word y, std::span<Word> out)>;

/// Decides whether `set` is closed under `op`, where op is the operation of an
/// abelian group of exponent dividing 4 on {0,1}^n with identity 0. Pairwise
/// scan for small sets; otherwise grows a subgroup H inside the set coset by
/// coset and accepts iff H reaches the full set. When `generators` is given and
/// the set is closed, it receives a generating set found during the growth.
bool is_closed_under_op(const BinaryCode& set, const BatchOp& op, const ClosureOptions& opts = {},
                        std::vector<Word>* generators = nullptr);

/// Closure of the code under x *_pi y.
bool is_closed_under_star(const BinaryCode& code, const Involution& pi, const ClosureOptions& opts = {},
                          std::vector<Word>* generators = nullptr);

}  // namespace z2z4

#pragma once

// Data-parallel inner loops over arrays of packed words. Every kernel has a
// scalar reference and an AVX2 variant; the variant is picked once at startup
// from the CPU features and can be overridden for equivalence testing.

#include <array>
#include <cstdint>
#include <span>

#include "z2z4/word.hpp"

namespace z2z4::kernels {

enum class Isa { scalar, avx2 };

inline constexpr unsigned kNoWeight = ~0u;

bool isa_supported(Isa isa) noexcept;
Isa active_isa() noexcept;
/// Throws InvalidArgument when the ISA was not compiled in or the CPU lacks it.
void set_isa(Isa isa);
const char* isa_name(Isa isa) noexcept;

using WeightHistogram = std::array<std::uint64_t, kMaxLength + 1>;
using ColumnCounts = std::array<std::uint64_t, kMaxLength>;

/// Smallest popcount among nonzero words, kNoWeight if there is none.
unsigned min_nonzero_weight(std::span<const Word> words);
/// Smallest popcount(w ^ x) over all w, kNoWeight on empty input.
unsigned min_xor_weight(std::span<const Word> words, Word x);
/// hist[w] += number of words of weight w.
void weight_histogram(std::span<const Word> words, WeightHistogram& hist);
/// counts[i] += number of words with coordinate i set.
void column_counts(std::span<const Word> words, ColumnCounts& counts);
/// out[k] = xs[k] *_pi y, with pi given by its delta-swap pattern.
void star_batch(std::span<const Word> xs, Word y, const TwistSpec& twist, std::span<Word> out);

namespace scalar {
unsigned min_nonzero_weight(std::span<const Word> words);
unsigned min_xor_weight(std::span<const Word> words, Word x);
void weight_histogram(std::span<const Word> words, WeightHistogram& hist);
void column_counts(std::span<const Word> words, ColumnCounts& counts);
void star_batch(std::span<const Word> xs, Word y, const TwistSpec& twist, std::span<Word> out);
}  // namespace scalar

namespace avx2 {
unsigned min_nonzero_weight(std::span<const Word> words);
unsigned min_xor_weight(std::span<const Word> words, Word x);
void weight_histogram(std::span<const Word> words, WeightHistogram& hist);
void column_counts(std::span<const Word> words, ColumnCounts& counts);
void star_batch(std::span<const Word> xs, Word y, const TwistSpec& twist, std::span<Word> out);
}  // namespace avx2

}  // namespace z2z4::kernels

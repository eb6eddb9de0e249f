#include <algorithm>

#include "z2z4/kernels.hpp"

namespace z2z4::kernels::scalar {

unsigned min_nonzero_weight(std::span<const Word> words) {
  unsigned best = kNoWeight;
  for (Word w : words)
    if (w) best = std::min(best, popcount(w));
  return best;
}

unsigned min_xor_weight(std::span<const Word> words, Word x) {
  unsigned best = kNoWeight;
  for (Word w : words) best = std::min(best, popcount(w ^ x));
  return best;
}

void weight_histogram(std::span<const Word> words, WeightHistogram& hist) {
  for (Word w : words) ++hist[popcount(w)];
}

void column_counts(std::span<const Word> words, ColumnCounts& counts) {
  for (Word w : words) {
    while (w) {
      ++counts[static_cast<unsigned>(std::countr_zero(w))];
      w &= w - 1;
    }
  }
}

void star_batch(std::span<const Word> xs, Word y, const TwistSpec& twist, std::span<Word> out) {
  if (out.size() < xs.size()) throw LengthMismatch("star_batch output is too short");
  const Word dy = y ^ twist.apply(y);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const Word x = xs[k];
    out[k] = x ^ y ^ ((x ^ twist.apply(x)) & dy);
  }
}

}  // namespace z2z4::kernels::scalar

// Compiled with -mavx2; only reached after the dispatcher has checked the CPU.

#include <immintrin.h>

#include <algorithm>

#include "z2z4/kernels.hpp"

namespace z2z4::kernels::avx2 {

namespace {

inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2,
                                       3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

// Per-64-bit-lane popcount with the upper 32 bits saturated, so that an
// unsigned 32-bit lane minimum only sees the counts.
inline __m256i popcount_lanes(__m256i v) {
  return _mm256_or_si256(popcount_epi64(v), _mm256_set1_epi64x(static_cast<long long>(0xffffffff00000000ULL)));
}

inline unsigned hmin_epu32(__m256i v) {
  alignas(32) std::uint32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return *std::min_element(lanes, lanes + 8);
}

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

}  // namespace

unsigned min_nonzero_weight(std::span<const Word> words) {
  const std::size_t n = words.size();
  const std::size_t body = n & ~std::size_t{3};
  const __m256i none = _mm256_set1_epi64x(0xff);
  __m256i best = _mm256_set1_epi32(-1);
  for (std::size_t k = 0; k < body; k += 4) {
    const __m256i w = load(words.data() + k);
    const __m256i zero = _mm256_cmpeq_epi64(w, _mm256_setzero_si256());
    const __m256i cnt = _mm256_or_si256(popcount_lanes(w), _mm256_and_si256(zero, none));
    best = _mm256_min_epu32(best, cnt);
  }
  unsigned r = hmin_epu32(best);
  if (r >= 0xff) r = kNoWeight;
  const unsigned tail = scalar::min_nonzero_weight(words.subspan(body));
  return std::min(r, tail);
}

unsigned min_xor_weight(std::span<const Word> words, Word x) {
  const std::size_t n = words.size();
  const std::size_t body = n & ~std::size_t{3};
  const __m256i vx = _mm256_set1_epi64x(static_cast<long long>(x));
  __m256i best = _mm256_set1_epi32(-1);
  for (std::size_t k = 0; k < body; k += 4) {
    const __m256i w = _mm256_xor_si256(load(words.data() + k), vx);
    best = _mm256_min_epu32(best, popcount_lanes(w));
  }
  unsigned r = body ? hmin_epu32(best) : kNoWeight;
  return std::min(r, scalar::min_xor_weight(words.subspan(body), x));
}

void weight_histogram(std::span<const Word> words, WeightHistogram& hist) {
  const std::size_t n = words.size();
  const std::size_t body = n & ~std::size_t{3};
  alignas(32) std::uint64_t lanes[4];
  for (std::size_t k = 0; k < body; k += 4) {
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), popcount_epi64(load(words.data() + k)));
    ++hist[lanes[0]];
    ++hist[lanes[1]];
    ++hist[lanes[2]];
    ++hist[lanes[3]];
  }
  scalar::weight_histogram(words.subspan(body), hist);
}

void column_counts(std::span<const Word> words, ColumnCounts& counts) {
  // Byte counters: lane byte (8*k + m) of acc[j] counts bit j of byte m of word k,
  // i.e. column 8*m + j. Flushed before any byte can overflow.
  const std::size_t n = words.size();
  const std::size_t body = n & ~std::size_t{3};
  const __m256i one = _mm256_set1_epi8(1);
  std::size_t k = 0;
  while (k < body) {
    __m256i acc[8];
    for (auto& a : acc) a = _mm256_setzero_si256();
    const std::size_t stop = std::min(body, k + 4 * 255);
    for (; k < stop; k += 4) {
      const __m256i v = load(words.data() + k);
      for (int j = 0; j < 8; ++j) {
        const __m256i bit = _mm256_and_si256(_mm256_srl_epi16(v, _mm_cvtsi32_si128(j)), one);
        acc[j] = _mm256_add_epi8(acc[j], bit);
      }
    }
    alignas(32) std::uint8_t bytes[32];
    for (int j = 0; j < 8; ++j) {
      _mm256_store_si256(reinterpret_cast<__m256i*>(bytes), acc[j]);
      for (int lane = 0; lane < 4; ++lane)
        for (int m = 0; m < 8; ++m) counts[8 * m + j] += bytes[8 * lane + m];
    }
  }
  scalar::column_counts(words.subspan(body), counts);
}

void star_batch(std::span<const Word> xs, Word y, const TwistSpec& twist, std::span<Word> out) {
  if (out.size() < xs.size()) throw LengthMismatch("star_batch output is too short");
  const Word dy_scalar = y ^ twist.apply(y);
  const __m256i vy = _mm256_set1_epi64x(static_cast<long long>(y));
  const __m256i dy = _mm256_set1_epi64x(static_cast<long long>(dy_scalar));
  const std::size_t n = xs.size();
  const std::size_t body = n & ~std::size_t{3};
  for (std::size_t k = 0; k < body; k += 4) {
    const __m256i x = load(xs.data() + k);
    __m256i px = x;
    for (const auto& s : twist.swaps) {
      const __m128i cnt = _mm_cvtsi32_si128(static_cast<int>(s.shift));
      const __m256i mask = _mm256_set1_epi64x(static_cast<long long>(s.mask));
      const __m256i t = _mm256_and_si256(_mm256_xor_si256(_mm256_srl_epi64(px, cnt), px), mask);
      px = _mm256_xor_si256(px, _mm256_or_si256(t, _mm256_sll_epi64(t, cnt)));
    }
    const __m256i twisted = _mm256_and_si256(_mm256_xor_si256(x, px), dy);
    const __m256i r = _mm256_xor_si256(_mm256_xor_si256(x, vy), twisted);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + k), r);
  }
  scalar::star_batch(xs.subspan(body), y, twist, out.subspan(body));
}

}  // namespace z2z4::kernels::avx2

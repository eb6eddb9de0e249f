#include <atomic>

#include "z2z4/kernels.hpp"

namespace z2z4::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(Z2Z4_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{cpu_has_avx2() ? Isa::avx2 : Isa::scalar};
  return isa;
}

}  // namespace

bool isa_supported(Isa isa) noexcept { return isa == Isa::scalar || cpu_has_avx2(); }

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (!isa_supported(isa)) throw InvalidArgument(std::string("kernel ISA not available: ") + isa_name(isa));
  current().store(isa, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) noexcept { return isa == Isa::avx2 ? "avx2" : "scalar"; }

#if defined(Z2Z4_HAVE_AVX2)
#define Z2Z4_DISPATCH(fn, ...) \
  (active_isa() == Isa::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define Z2Z4_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

unsigned min_nonzero_weight(std::span<const Word> words) { return Z2Z4_DISPATCH(min_nonzero_weight, words); }

unsigned min_xor_weight(std::span<const Word> words, Word x) { return Z2Z4_DISPATCH(min_xor_weight, words, x); }

void weight_histogram(std::span<const Word> words, WeightHistogram& hist) {
  Z2Z4_DISPATCH(weight_histogram, words, hist);
}

void column_counts(std::span<const Word> words, ColumnCounts& counts) { Z2Z4_DISPATCH(column_counts, words, counts); }

void star_batch(std::span<const Word> xs, Word y, const TwistSpec& twist, std::span<Word> out) {
  Z2Z4_DISPATCH(star_batch, xs, y, twist, out);
}

#undef Z2Z4_DISPATCH

}  // namespace z2z4::kernels

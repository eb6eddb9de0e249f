#include <doctest.h>

#include <random>

#include "z2z4/kernels.hpp"

using namespace z2z4;
namespace k = z2z4::kernels;

TEST_CASE("kernel dispatch names and selection") {
  CHECK(k::isa_supported(k::Isa::scalar));
  CHECK(std::string(k::isa_name(k::Isa::avx2)) == "avx2");
  const k::Isa before = k::active_isa();
  k::set_isa(k::Isa::scalar);
  CHECK(k::active_isa() == k::Isa::scalar);
  k::set_isa(before);
}

#if defined(Z2Z4_HAVE_AVX2)
TEST_CASE("scalar and AVX2 kernels agree") {
  if (!k::isa_supported(k::Isa::avx2)) {
    MESSAGE("AVX2 not available; equivalence not exercised");
    return;
  }
  std::mt19937_64 rng(99);
  for (unsigned n : {1u, 7u, 16u, 31u, 32u, 33u, 63u, 64u}) {
    for (std::size_t len : {0ul, 1ul, 3ul, 4ul, 5ul, 17ul, 1000ul, 4099ul}) {
      std::vector<Word> w(len);
      for (auto& x : w) x = rng() & low_mask(n) & (rng() | rng());
      if (len > 2) w[1] = 0;
      CHECK(k::scalar::min_nonzero_weight(w) == k::avx2::min_nonzero_weight(w));
      const Word x = rng() & low_mask(n);
      CHECK(k::scalar::min_xor_weight(w, x) == k::avx2::min_xor_weight(w, x));
      k::WeightHistogram h1{}, h2{};
      k::scalar::weight_histogram(w, h1);
      k::avx2::weight_histogram(w, h2);
      CHECK(h1 == h2);
      k::ColumnCounts c1{}, c2{};
      k::scalar::column_counts(w, c1);
      k::avx2::column_counts(w, c2);
      CHECK(c1 == c2);
      for (unsigned beta = 0; 2 * beta <= n; beta += 3) {
        const Involution pi = standard_involution(n - 2 * beta, beta);
        std::vector<Word> o1(len), o2(len);
        k::scalar::star_batch(w, x, pi.twist(), o1);
        k::avx2::star_batch(w, x, pi.twist(), o2);
        CHECK(o1 == o2);
        for (std::size_t i = 0; i < len; ++i) REQUIRE(o1[i] == star(w[i], x, pi));
      }
    }
  }
}
#endif

TEST_CASE("kernel reference values") {
  const std::vector<Word> w{0, 0b1011, 0b11, 0b1111111};
  CHECK(k::min_nonzero_weight(w) == 2);
  CHECK(k::min_xor_weight(w, 0b1) == 1);
  CHECK(k::min_nonzero_weight(std::vector<Word>{0, 0}) == k::kNoWeight);
  CHECK(k::min_xor_weight({}, 5) == k::kNoWeight);
  k::WeightHistogram h{};
  k::weight_histogram(w, h);
  CHECK(h[0] == 1);
  CHECK(h[2] == 1);
  CHECK(h[3] == 1);
  CHECK(h[7] == 1);
  k::ColumnCounts c{};
  k::column_counts(w, c);
  CHECK(c[0] == 3);
  CHECK(c[2] == 1);
  CHECK(c[6] == 1);
}

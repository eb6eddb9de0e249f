#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "z2z4/word.hpp"

using namespace z2z4;

TEST_CASE("binary words: parsing, sums and weights") {
  const BinaryWord x = BinaryWord::from_string("0110100");
  CHECK(x.size() == 7);
  CHECK(x[1]);
  CHECK_FALSE(x[0]);
  CHECK(x.weight() == 3);
  CHECK(x.to_string() == "0110100");
  const BinaryWord y = BinaryWord::from_string("1100001");
  CHECK((x + y).to_string() == "1010101");
  CHECK((x * y).to_string() == "0100000");
  CHECK(distance(x, y) == 4);
  CHECK(weight_parity(x).parity == Parity::odd);
  CHECK_THROWS_AS(x + BinaryWord::from_string("01"), LengthMismatch);
  CHECK_THROWS_AS(BinaryWord::from_string("012"), ParseError);
}

TEST_CASE("coordinate permutations") {
  const auto s = CoordPermutation::from_cycles(5, {{0, 1, 2}});
  const auto t = CoordPermutation::transposition(5, 0, 4);
  CHECK((s * t)(4) == s(t(4)));
  CHECK((s * s.inverse()).is_identity());
  CHECK(s.to_cycle_string() == "(0 1 2)");
  CHECK(CoordPermutation::identity(3).to_cycle_string() == "()");
  CHECK(s.to_string() == "1 2 0 3 4");
  // Bit j moves to sigma(j).
  CHECK(s.apply(0b00001) == 0b00010);
  CHECK(apply_perm(s, BinaryWord::from_string("10000")).to_string() == "01000");
  CHECK(t.is_involution());
  CHECK_FALSE(s.is_involution());
  CHECK_THROWS_AS(CoordPermutation({0, 0, 1}), InvalidArgument);

  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    std::vector<unsigned> a(23), b(23);
    std::iota(a.begin(), a.end(), 0u);
    std::iota(b.begin(), b.end(), 0u);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const CoordPermutation pa(a), pb(b);
    const Word x = rng() & low_mask(23);
    CHECK((pa * pb).apply(x) == pa.apply(pb.apply(x)));
    CHECK(pa.apply(x) == oracle::permute(x, a));
  }
}

TEST_CASE("involutions: twist agrees with the permutation, types") {
  for (unsigned n = 1; n <= 7; ++n)
    for (const auto& img : oracle::all_involutions(n)) {
      const Involution pi{CoordPermutation(img)};
      for (Word x = 0; x < (Word{1} << n); ++x) REQUIRE(pi.apply(x) == oracle::permute(x, img));
      unsigned fixed = 0;
      for (unsigned i = 0; i < n; ++i) fixed += img[i] == i;
      CHECK(involution_type(pi) == StructureType{fixed, (n - fixed) / 2});
    }
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    std::vector<unsigned> pts(64), img(64);
    std::iota(pts.begin(), pts.end(), 0u);
    std::shuffle(pts.begin(), pts.end(), rng);
    std::iota(img.begin(), img.end(), 0u);
    const unsigned pairs = rng() % 33;
    for (unsigned p = 0; p < pairs; ++p) std::swap(img[pts[2 * p]], img[pts[2 * p + 1]]);
    const Involution pi{CoordPermutation(img)};
    const Word x = rng(), y = rng();
    CHECK(pi.apply(x) == oracle::permute(x, img));
    CHECK(star(x, y, pi) == oracle::star(x, y, img));
  }
  CHECK_THROWS_AS(Involution(CoordPermutation::from_cycles(3, {{0, 1, 2}})), InvalidArgument);
  const Involution s = standard_involution(2, 3);
  CHECK(s.perm().to_string() == "0 1 3 2 5 4 7 6");
  CHECK(s.alpha() == 2);
  CHECK(s.beta() == 3);
}

// Group laws and the twisted-square lemma over every triple for n <= 10 and
// every standard type, with pi(x) tabulated once per type.
TEST_CASE("star group laws, exhaustive for n <= 10") {
  for (unsigned n = 1; n <= 10; ++n)
    for (unsigned beta = 0; 2 * beta <= n; ++beta) {
      const Involution pi = standard_involution(n - 2 * beta, beta);
      const Word size = Word{1} << n;
      std::vector<Word> tw(size);
      for (Word x = 0; x < size; ++x) tw[x] = x ^ pi.apply(x);
      auto op = [&](Word x, Word y) { return x ^ y ^ (tw[x] & tw[y]); };
      std::uint64_t bad = 0;
      for (Word x = 0; x < size; ++x) {
        bad += op(x, 0) != x;
        bad += op(x, pi.apply(x)) != 0;         // inverse
        bad += op(op(x, x), x) != pi.apply(x);  // lemma
        for (Word y = 0; y < size; ++y) {
          const Word xy = op(x, y);
          bad += xy != op(y, x);
          for (Word z = 0; z < size; ++z) bad += op(xy, z) != op(x, op(y, z));
        }
      }
      CHECK_MESSAGE(bad == 0, "n=", n, " beta=", beta);
    }
}

TEST_CASE("star laws for arbitrary involutions, randomized above n = 10") {
  std::mt19937_64 rng(5);
  for (unsigned n : {11u, 16u, 24u, 32u, 48u, 64u}) {
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<unsigned> pts(n), img(n);
      std::iota(pts.begin(), pts.end(), 0u);
      std::iota(img.begin(), img.end(), 0u);
      std::shuffle(pts.begin(), pts.end(), rng);
      const unsigned pairs = rng() % (n / 2 + 1);
      for (unsigned p = 0; p < pairs; ++p) std::swap(img[pts[2 * p]], img[pts[2 * p + 1]]);
      const Involution pi{CoordPermutation(img)};
      for (int k = 0; k < 200; ++k) {
        const Word m = low_mask(n);
        const Word x = rng() & m, y = rng() & m, z = rng() & m;
        REQUIRE(star(star(x, y, pi), z, pi) == star(x, star(y, z, pi), pi));
        REQUIRE(star(x, y, pi) == star(y, x, pi));
        REQUIRE(star(star(x, x, pi), x, pi) == pi.apply(x));
      }
    }
  }
}

TEST_CASE("Gray map table and the additive bridge") {
  CHECK(gray(MixedWord({}, {0, 1, 2, 3})).to_string() == "00011110");
  CHECK(gray(MixedWord({1, 0}, {1})).to_string() == "1001");
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned beta = 0; 2 * beta <= n; ++beta) {
      const unsigned alpha = n - 2 * beta;
      const Involution pi = standard_involution(alpha, beta);
      const auto all = oracle::ambient(alpha, beta);
      std::uint64_t bad = 0;
      for (const auto& a : all) {
        bad += gray_bits(a) != oracle::gray(a);
        bad += !(gray_inv(gray(a), alpha, beta) == a);
        for (const auto& b : all) bad += gray_bits(a + b) != star(gray_bits(a), gray_bits(b), pi);
      }
      CHECK_MESSAGE(bad == 0, "alpha=", alpha, " beta=", beta);
    }
}

TEST_CASE("mixed words: arithmetic and the pairing") {
  const MixedWord x({1, 0}, {1, 3, 2}), y({1, 1}, {3, 3, 1});
  CHECK((x + y) == MixedWord({0, 1}, {0, 2, 3}));
  CHECK((x + -x).is_zero());
  CHECK(scale(x, 2) == MixedWord({0, 0}, {2, 2, 0}));
  CHECK(inner_product(x, y) == oracle::pairing(x, y));
  CHECK_THROWS_AS(MixedWord({2}, {}), InvalidArgument);
  CHECK_THROWS_AS(x + MixedWord({1}, {1}), LengthMismatch);
  for (const auto& a : oracle::ambient(2, 2))
    for (const auto& b : oracle::ambient(2, 2)) REQUIRE(inner_product(a, b) == oracle::pairing(a, b));
}

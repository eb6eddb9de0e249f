#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "z2z4/perm_group.hpp"
#include "z2z4/symmetry.hpp"

using namespace z2z4;

namespace {

CoordPermutation random_perm(std::mt19937_64& rng, unsigned n) {
  std::vector<unsigned> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::shuffle(img.begin(), img.end(), rng);
  return CoordPermutation(img);
}

std::set<Word> image_set(const AdditiveCode& c) { return oracle::as_set(c.gray_image()); }

}  // namespace

TEST_CASE("permutation groups from generators") {
  const auto t = CoordPermutation::transposition(3, 0, 1);
  const auto c = CoordPermutation::from_cycles(3, {{0, 1, 2}});
  const std::vector<CoordPermutation> s3{t, c};
  const PermGroup g = PermGroup::from_generators(3, s3);
  CHECK(g.order() == 6);
  CHECK(g.elements().size() == 6);

  const std::vector<CoordPermutation> cyc{CoordPermutation::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}})};
  CHECK(PermGroup::from_generators(7, cyc).order() == 7);

  const std::vector<CoordPermutation> sn{CoordPermutation::transposition(12, 0, 1),
                                         CoordPermutation::from_cycles(12, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}})};
  CHECK(PermGroup::from_generators(12, sn).order() == BigInt(479001600));
  CHECK_THROWS_AS(PermGroup::from_generators(12, sn).elements(), BudgetExceeded);

  const std::vector<CoordPermutation> bad{CoordPermutation::identity(4), CoordPermutation::identity(5)};
  CHECK_THROWS_AS(PermGroup::from_generators(4, bad), LengthMismatch);
}

TEST_CASE("membership is consistent with closure under products") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 20; ++rep) {
    const unsigned n = 6 + rng() % 5;
    std::vector<CoordPermutation> gens;
    // Two generators that usually give a proper subgroup: a product of disjoint
    // transpositions and a permutation of a block.
    gens.push_back(CoordPermutation::transposition(n, 0, 1) * CoordPermutation::transposition(n, 2, 3));
    gens.push_back(CoordPermutation::from_cycles(n, {{0, 2, 4}}));
    if (rep % 3 == 0) gens.push_back(random_perm(rng, n));
    const PermGroup g = PermGroup::from_generators(n, gens);
    const auto els = g.elements();
    CHECK(BigInt(els.size()) == g.order());
    std::set<CoordPermutation> set(els.begin(), els.end());
    CHECK(set.size() == els.size());
    for (int k = 0; k < 100; ++k) {
      const auto& a = els[rng() % els.size()];
      const auto& b = els[rng() % els.size()];
      REQUIRE(g.contains(a * b));
      REQUIRE(set.count(a * b.inverse()));
      const auto x = random_perm(rng, n);
      REQUIRE(g.contains(x) == (set.count(x) > 0));
    }
    // The orbit product equals the order.
    BigInt prod = 1;
    for (unsigned l = 0; l < n; ++l) prod *= static_cast<unsigned>(g.fundamental_orbit(l).size());
    CHECK(prod == g.order());
  }
}

TEST_CASE("symmetry group of the Hamming fixture against all 5040 permutations") {
  const BinaryCode h = hamming7_fixture();
  const auto brute = oracle::symmetry_filter(oracle::as_set(h), 7);
  CHECK(brute.size() == 168);
  const SymmetryResult s = symmetry_group(h);
  CHECK(s.certified);
  CHECK(s.group.order() == 168);
  for (const auto& img : brute) REQUIRE(s.group.contains(CoordPermutation(img)));
  CHECK(aut_order(h, s.group) == 2688);
}

TEST_CASE("symmetry groups of small codes match brute force") {
  std::vector<Word> all(8);
  std::iota(all.begin(), all.end(), Word{0});
  CHECK(symmetry_group(BinaryCode(3, all)).group.order() == 6);
  CHECK(symmetry_group(BinaryCode(5, {0})).group.order() == 120);
  CHECK(aut_order(BinaryCode(5, {0}), symmetry_group(BinaryCode(5, {0})).group) == 120);

  std::mt19937_64 rng(32);
  for (int k = 0; k < 40; ++k) {
    const unsigned n = 4 + rng() % 5;  // n <= 8
    std::vector<Word> words;
    const unsigned count = 2 + rng() % 12;
    for (unsigned i = 0; i < count; ++i) words.push_back(rng() & low_mask(n));
    const BinaryCode c(n, words);
    const auto brute = oracle::symmetry_filter(oracle::as_set(c), n);
    const SymmetryResult s = symmetry_group(c);
    CHECK(s.group.order() == brute.size());
    for (const auto& g : s.generators) CHECK(stabilizes(g, c));
  }
  for (int k = 0; k < 30; ++k) {
    const AdditiveCode a = oracle::random_code(rng, 8);
    const BinaryCode c = a.gray_image();
    const Involution pi = standard_involution(a.alpha(), a.beta());
    SymmetryOptions o;
    o.structure = &pi;
    const auto brute = oracle::symmetry_filter(oracle::as_set(c), c.length());
    CHECK(symmetry_group(c, o).group.order() == brute.size());
  }
}

TEST_CASE("Nordstrom-Robinson symmetry order") {
  const BinaryCode nr = nordstrom_robinson();
  const SymmetryResult s = symmetry_group(nr);
  CHECK(s.group.order() == 40320);
  CHECK(aut_order(nr, s.group) == 10321920);
  for (const auto& g : s.generators) CHECK(stabilizes(g, nr));
}

TEST_CASE("symmetry search is deterministic and sorted") {
  const BinaryCode c = construct_extended_perfect({2, 4}).gray_image();
  const Involution pi = standard_involution(4, 6);
  SymmetryOptions o;
  o.structure = &pi;
  const SymmetryResult a = symmetry_group(c, o);
  const SymmetryResult b = symmetry_group(c, o);
  CHECK(a.generators == b.generators);
  CHECK(std::is_sorted(a.generators.begin(), a.generators.end()));
  SymmetryOptions one = o, four = o;
  one.threads = 1;
  four.threads = 4;
  CHECK(symmetry_group(c, one).generators == symmetry_group(c, four).generators);
  // Without the structure hint every candidate is checked against the whole code.
  const SymmetryResult plain = symmetry_group(c);
  CHECK(plain.group.order() == a.group.order());
  CHECK(plain.stats.generator_checks == 0);
}

TEST_CASE("sym_pi by centralizer search matches element filtering") {
  const BinaryCode c = construct_extended_perfect({2, 4}).gray_image();
  const Involution pi = standard_involution(4, 6);
  const SymmetryResult s = symmetry_group(c);
  const PermGroup sp = sym_pi(s.group, pi);
  CHECK(sp.order() == 384);
  std::uint64_t filtered = 0;
  s.group.for_each_element([&](const CoordPermutation& g) {
    filtered += g * pi.perm() == pi.perm() * g;
    return true;
  });
  CHECK(sp.order() == filtered);
  CHECK(sym_pi(s.group, Involution::identity(16)).order() == s.group.order());
  for (const auto& g : sp.generators()) CHECK(s.group.contains(g));

  std::mt19937_64 rng(33);
  for (int k = 0; k < 25; ++k) {
    const AdditiveCode a = oracle::random_code(rng, 10);
    const BinaryCode img = a.gray_image();
    const Involution p = standard_involution(a.alpha(), a.beta());
    const SymmetryResult sy = symmetry_group(img);
    std::uint64_t count = 0;
    sy.group.for_each_element([&](const CoordPermutation& g) {
      count += g * p.perm() == p.perm() * g;
      return true;
    });
    CHECK(sym_pi(sy.group, p).order() == count);
    SymmetryOptions o;
    o.commute_with = &p;
    CHECK(symmetry_group(img, o).group.order() == count);
  }
}

TEST_CASE("monomial transforms and the permutation bridge") {
  const auto id = CoordPermutation::identity(7);
  const MonomialTransform m = sym_to_monomial(id, 3, 2);
  CHECK(m.bperm == std::vector<unsigned>{0, 1, 2});
  CHECK(m.qperm == std::vector<unsigned>{0, 1});
  CHECK(m.negate == std::vector<std::uint8_t>{0, 0});
  CHECK(monomial_to_sym(m) == id);

  // Swapping the two Gray bits of quaternary coordinate 0 negates it.
  const MonomialTransform neg = sym_to_monomial(CoordPermutation::transposition(7, 3, 4), 3, 2);
  CHECK(neg.negate == std::vector<std::uint8_t>{1, 0});
  CHECK(neg.qperm == std::vector<unsigned>{0, 1});
  // Exchanging two bit-pairs exchanges the quaternary positions.
  const auto block = CoordPermutation::transposition(7, 3, 5) * CoordPermutation::transposition(7, 4, 6);
  const MonomialTransform sw = sym_to_monomial(block, 3, 2);
  CHECK(sw.qperm == std::vector<unsigned>{1, 0});
  CHECK(sw.negate == std::vector<std::uint8_t>{0, 0});
  CHECK_THROWS_AS(sym_to_monomial(CoordPermutation::transposition(7, 2, 3), 3, 2), PreconditionViolation);

  // Gray-conjugation: Phi(m(w)) = sigma(Phi(w)) on every word.
  const AdditiveCode c = construct_extended_perfect({2, 4});
  const Involution pi = standard_involution(4, 6);
  const SymmetryResult s = symmetry_group(c.gray_image());
  const PermGroup sp = sym_pi(s.group, pi);
  const auto words = c.span();
  for (const auto& g : sp.generators()) {
    const MonomialTransform mg = sym_to_monomial(g, 4, 6);
    CHECK(monomial_to_sym(mg) == g);
    for (const auto& w : words) {
      REQUIRE(gray_bits(mg.apply(w)) == g.apply(gray_bits(w)));
      REQUIRE(c.contains(mg.apply(w)));
    }
  }
  const auto& gens = sp.generators();
  for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
    const MonomialTransform a = sym_to_monomial(gens[i], 4, 6), b = sym_to_monomial(gens[i + 1], 4, 6);
    CHECK(monomial_to_sym(a * b) == gens[i] * gens[i + 1]);
  }
}

// Monomial automorphisms of C and of its dual, by exhausting all
// alpha! beta! 2^beta transforms.
TEST_CASE("MAut(C) = MAut(dual) on 100 random small codes") {
  std::mt19937_64 rng(34);
  for (int k = 0; k < 100; ++k) {
    AdditiveCode c;
    do c = oracle::random_code(rng, 8, 2); while (c.alpha() > 4 || c.beta() > 3);
    const AdditiveCode d = dual(c);
    const auto cs = oracle::span(c.alpha(), c.beta(), c.generators());
    const auto ds = oracle::span(d.alpha(), d.beta(), d.generators());
    auto stab = [](const std::set<MixedWord>& s, const MonomialTransform& m) {
      for (const auto& w : s)
        if (!s.count(m.apply(w))) return false;
      return true;
    };
    std::uint64_t both = 0, only_one = 0;
    std::vector<unsigned> bp(c.alpha()), qp(c.beta());
    std::iota(bp.begin(), bp.end(), 0u);
    do {
      std::iota(qp.begin(), qp.end(), 0u);
      do {
        for (unsigned signs = 0; signs < (1u << c.beta()); ++signs) {
          MonomialTransform m{c.alpha(), c.beta(), bp, qp, std::vector<std::uint8_t>(c.beta())};
          for (unsigned j = 0; j < c.beta(); ++j) m.negate[j] = (signs >> j) & 1u;
          const bool a = stab(cs, m), b = stab(ds, m);
          both += a && b;
          only_one += a != b;
        }
      } while (std::next_permutation(qp.begin(), qp.end()));
    } while (std::next_permutation(bp.begin(), bp.end()));
    CHECK(only_one == 0);
    CHECK(verify_maut_duality(c));
    const Involution pi = standard_involution(c.alpha(), c.beta());
    CHECK(sym_pi(symmetry_group(c.gray_image()).group, pi).order() == both);
  }
  CHECK(verify_maut_duality(octacode()));
  CHECK(verify_maut_duality(construct_extended_perfect({2, 4})));
}

TEST_CASE("closed-form orders") {
  CHECK(predict_order({2, 4}, OrderFamily::extended_b) == 384);
  CHECK(predict_order({3, 5}, OrderFamily::extended_b) == 12288);
  CHECK(predict_order({2, 4}, OrderFamily::perfect_a) == 96);
  CHECK(predict_order({2, 4}, OrderFamily::perfect_a) * 4 == predict_order({2, 4}, OrderFamily::extended_b));
  CHECK(predict_order({2, 5}, OrderFamily::z4_c) == 12288);
  CHECK_THROWS_AS(predict_order({2, 4}, OrderFamily::z4_c), InvalidArgument);
  CHECK_THROWS_AS(predict_order({1, 4}, OrderFamily::extended_b), InvalidArgument);
  // Hamming codes: GL(4,2) and AGL(4,2).
  CHECK(predict_order({4, 4}, OrderFamily::perfect_a) == 20160);
  CHECK(predict_order({4, 4}, OrderFamily::extended_b) == 322560);
}

TEST_CASE("searched orders match the closed forms at length 15 and 16") {
  for (int r = 2; r <= 4; ++r) {
    const AdditiveCode p = construct_perfect({r, 4});
    const Involution pi = standard_involution(p.alpha(), p.beta());
    SymmetryOptions o;
    o.structure = &pi;
    const SymmetryResult s = symmetry_group(p.gray_image(), o);
    CHECK(s.group.order() == predict_order({r, 4}, OrderFamily::perfect_a));
    CHECK(sym_pi(s.group, pi).order() == s.group.order());

    const AdditiveCode e = construct_extended_perfect({r, 4});
    const Involution pe = standard_involution(e.alpha(), e.beta());
    o.structure = &pe;
    const SymmetryResult se = symmetry_group(e.gray_image(), o);
    const PermGroup spe = sym_pi(se.group, pe);
    CHECK(spe.order() == predict_order({r, 4}, OrderFamily::extended_b));
    // The self-adjacent coordinates form a single orbit.
    const auto orb = spe.orbit(0);
    CHECK(std::count_if(orb.begin(), orb.end(), [&](unsigned x) { return x < e.alpha(); }) == e.alpha());
    // Type (8,4) admits a second structure of the same type: Sym is twice Sym_pi.
    CHECK(se.group.order() == (r == 3 ? 2 : 1) * spe.order());
  }
}

TEST_CASE("timeouts return an uncertified partial group") {
  const BinaryCode c = construct_extended_perfect({2, 4}).gray_image();
  SymmetryOptions o;
  o.timeout_s = 1e-9;
  const SymmetryResult s = symmetry_group(c, o);
  CHECK_FALSE(s.certified);
  CHECK(s.group.order() <= 384);
  for (const auto& g : s.generators) CHECK(stabilizes(g, c));
}

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "z2z4/structures.hpp"

using namespace z2z4;

namespace {

Involution cycles(unsigned n, std::initializer_list<std::initializer_list<unsigned>> c) {
  return Involution(CoordPermutation::from_cycles(n, c));
}

SymmetryResult sym_with(const BinaryCode& c, const Involution& pi) {
  SymmetryOptions o;
  o.structure = &pi;
  return symmetry_group(c, o);
}

}  // namespace

TEST_CASE("closure examples") {
  const BinaryCode h = hamming7_fixture();
  CHECK(closure_check(h, cycles(7, {{0, 1}, {2, 4}})));
  CHECK(closure_check(BinaryCode(2, {0, 3}), cycles(2, {{0, 1}})));
  std::mt19937_64 rng(41);
  for (int k = 0; k < 50; ++k) {
    const unsigned n = 2 + rng() % 6;
    std::vector<Word> w{0};
    while (w.size() < 3) {
      const Word x = rng() & low_mask(n);
      if (std::find(w.begin(), w.end(), x) == w.end()) w.push_back(x);
    }
    const BinaryCode three(n, w);
    for (const auto& img : oracle::all_involutions(n)) REQUIRE_FALSE(closure_check(three, Involution(CoordPermutation(img))));
  }
  CHECK_THROWS_AS(closure_check(h, Involution::identity(6)), LengthMismatch);
}

TEST_CASE("the large-code closure path agrees with the pair scan") {
  std::mt19937_64 rng(42);
  ClosureOptions small_limit;
  small_limit.pair_limit = 0;  // force the subgroup-growth path
  for (int k = 0; k < 60; ++k) {
    const AdditiveCode c = oracle::random_code(rng, 10);
    const BinaryCode img = c.gray_image();
    const auto set = oracle::as_set(img);
    for (int j = 0; j < 4; ++j) {
      std::vector<unsigned> pts(img.length()), p(img.length());
      std::iota(pts.begin(), pts.end(), 0u);
      std::iota(p.begin(), p.end(), 0u);
      std::shuffle(pts.begin(), pts.end(), rng);
      const unsigned pairs = j == 0 ? c.beta() : static_cast<unsigned>(rng() % (img.length() / 2 + 1));
      if (j == 0)
        p = standard_involution(c.alpha(), c.beta()).perm().images();
      else
        for (unsigned q = 0; q < pairs; ++q) std::swap(p[pts[2 * q]], p[pts[2 * q + 1]]);
      const Involution pi{CoordPermutation(p)};
      const bool expect = oracle::closed(set, p);
      REQUIRE(closure_check(img, pi) == expect);
      REQUIRE(closure_check(img, pi, small_limit) == expect);
    }
  }
  // Sets without the zero word are rejected by the growth path.
  CHECK_FALSE(closure_check(BinaryCode(2, {1, 2}), Involution::identity(2), small_limit));
}

TEST_CASE("Hamming fixture: 22 structures, all involutions of its symmetry group") {
  const BinaryCode h = hamming7_fixture();
  const SymmetryResult s = symmetry_group(h);
  const StructureReport rep = enumerate_structures(h, s.group, "hamming7");
  CHECK(rep.code_id == "hamming7");
  CHECK(rep.structures.size() == 22);
  CHECK(rep.involutions_in_sym == 22);
  CHECK(rep.is_linear);
  CHECK(std::is_sorted(rep.structures.begin(), rep.structures.end()));
  for (auto base : {cycles(7, {{0, 1}, {2, 4}}), cycles(7, {{0, 2}, {1, 4}}), cycles(7, {{0, 4}, {1, 2}})})
    for (unsigned k = 0; k < 7; ++k) {
      std::vector<unsigned> img(7);
      for (unsigned i = 0; i < 7; ++i) img[(i + k) % 7] = (base(i) + k) % 7;
      CHECK(std::binary_search(rep.structures.begin(), rep.structures.end(), Involution(CoordPermutation(img))));
    }
  // All involutions of S_7 that close the code, by brute force.
  const auto set = oracle::as_set(h);
  std::vector<Involution> brute;
  for (const auto& img : oracle::all_involutions(7))
    if (oracle::closed(set, img)) brute.emplace_back(CoordPermutation(img));
  std::sort(brute.begin(), brute.end());
  CHECK(brute == rep.structures);
}

TEST_CASE("every structure lies in Sym: the twisted cube is pi(x)") {
  const BinaryCode h = hamming7_fixture();
  const StructureReport rep = enumerate_structures(h, symmetry_group(h).group);
  for (const auto& pi : rep.structures)
    for (Word x : h.words()) {
      REQUIRE(star(star(x, x, pi), x, pi) == pi.apply(x));
      REQUIRE(h.contains(pi.apply(x)));
    }
  std::vector<std::pair<AdditiveCode, const char*>> codes{
      {construct_perfect({2, 4}), "perfect"}, {construct_extended_perfect({2, 4}), "eperfect"},
      {construct_z4_extended_perfect({2, 4}), "z4"}, {octacode(), "octacode"}};
  for (const auto& [c, name] : codes) {
    const BinaryCode img = c.gray_image();
    const Involution pi = standard_involution(c.alpha(), c.beta());
    for (Word x : img.words()) REQUIRE(img.contains(star(star(x, x, pi), x, pi)));
    CHECK(stabilizes(pi.perm(), img));
  }
}

TEST_CASE("structures of the length-16 codes") {
  // Z4-linear, rank 13: three conjugate fixed-point-free structures.
  {
    const AdditiveCode z = construct_z4_extended_perfect({2, 4});
    const BinaryCode img = z.gray_image();
    const Involution pi = standard_involution(0, 8);
    const SymmetryResult s = sym_with(img, pi);
    CHECK(s.group.order() == 3 * sym_pi(s.group, pi).order());
    const StructureReport rep = enumerate_structures(img, s.group);
    CHECK_FALSE(rep.is_linear);
    for (const auto& t : rep.types) CHECK(t == StructureType{0, 8});
  }
  // Z4-linear, rank 11: also linear.
  {
    const AdditiveCode z = construct_z4_extended_perfect({3, 4});
    const BinaryCode img = z.gray_image();
    const SymmetryResult s = sym_with(img, standard_involution(0, 8));
    const StructureReport rep = enumerate_structures(img, s.group);
    CHECK(rep.is_linear);
    CHECK(std::count(rep.types.begin(), rep.types.end(), StructureType{0, 8}) >= 1);
    CHECK(std::binary_search(rep.structures.begin(), rep.structures.end(), standard_involution(0, 8)));
    for (const auto& p : rep.structures) CHECK(oracle::closed(oracle::as_set(img), p.perm().images()));
  }
  // Mixed type (4,6): only the standard structure.
  {
    const AdditiveCode e = construct_extended_perfect({2, 4});
    const Involution pi = standard_involution(4, 6);
    const BinaryCode img = e.gray_image();
    const StructureReport rep = enumerate_structures(img, sym_with(img, pi).group);
    REQUIRE(rep.structures.size() == 1);
    CHECK(rep.structures[0] == pi);
  }
  // Every report lists structures of one type, except where the identity joins.
  {
    const AdditiveCode e = construct_extended_perfect({3, 4});
    const BinaryCode img = e.gray_image();
    const StructureReport rep = enumerate_structures(img, sym_with(img, standard_involution(8, 4)).group);
    CHECK(rep.structures.size() == 2);
    for (const auto& t : rep.types) CHECK(t == StructureType{8, 4});
  }
}

TEST_CASE("structures of the length-15 codes extend to the parity extension") {
  const AdditiveCode p = construct_perfect({2, 4});
  const BinaryCode img = p.gray_image();
  const StructureReport rep = enumerate_structures(img, sym_with(img, standard_involution(3, 6)).group);
  CHECK(rep.structures.size() == 1);
  const BinaryCode ext = parity_extend(img);
  for (const auto& s : rep.structures) {
    auto im = s.perm().images();
    im.push_back(15);
    CHECK(closure_check(ext, Involution(CoordPermutation(im))));
  }
}

TEST_CASE("conflict witnesses") {
  const AdditiveCode e = construct_extended_perfect({3, 5});
  const BinaryCode img = e.gray_image();
  const Involution pi = standard_involution(8, 12);
  std::mt19937_64 rng(43);
  for (int k = 0; k < 5; ++k) {
    const unsigned a = 8 + 2 * (rng() % 12);
    unsigned b;
    do b = 8 + 2 * (rng() % 12) + (rng() & 1); while (b / 2 == a / 2);
    const auto sg = CoordPermutation::transposition(32, a, b);
    const Involution tau(sg * pi.perm() * sg.inverse());
    WitnessOptions o;
    o.check_preconditions = k == 0;
    const auto w = conflict_witness(img, pi, tau, o);
    REQUIRE(w.has_value());
    CHECK(w->v.weight() == 4);
    CHECK(w->u.weight() == 4);
    CHECK(img.contains(w->v.bits()));
    CHECK(img.contains(w->u.bits()));
    CHECK(w->v[w->i]);
    CHECK(w->u[pi(w->i)]);
    CHECK(distance(w->p1, w->p2) == 2);
    CHECK(w->p2 == w->v + w->u);
    CHECK(w->p1 == star(w->v, w->u, pi));
    CHECK(w->p2 == star(w->v, w->u, tau));
    // Both products cannot be codewords of an extended 1-perfect code.
    CHECK_FALSE((img.contains(w->p1.bits()) && img.contains(w->p2.bits())));
  }
  CHECK_THROWS_AS(conflict_witness(img, pi, pi), PreconditionViolation);

  const AdditiveCode z = construct_z4_extended_perfect({3, 4});
  CHECK_FALSE(conflict_witness(z.gray_image(), standard_involution(0, 8), Involution::identity(16)).has_value());
  // Preconditions are checked.
  const BinaryCode h = hamming7_fixture();
  CHECK_THROWS_AS(conflict_witness(h, cycles(7, {{0, 1}, {2, 4}}), Involution::identity(7)), PreconditionViolation);
}

TEST_CASE("completion of the Nordstrom-Robinson code") {
  const BinaryCode nr = nordstrom_robinson();
  CompletionStats stats;
  const BinaryCode c = complete_to_extended_perfect(nr, {}, &stats);
  CHECK(c.size() == 2048);
  CHECK(classify(c) == CodeClass::extended_perfect);
  for (Word w : nr.words()) CHECK(c.contains(w));
  CompletionOptions rev;
  rev.reverse_order = true;
  CHECK(complete_to_extended_perfect(nr, rev) == c);
  CHECK(count_completions(nr, 2) == 1);
  // Closure transfers from every structure of the Preparata-like code.
  const StructureReport rep = enumerate_structures(nr, symmetry_group(nr).group);
  CHECK_FALSE(rep.structures.empty());
  for (const auto& pi : rep.structures) CHECK(closure_check(c, pi));
  // The extended 1-perfect input is returned unchanged.
  CHECK(complete_to_extended_perfect(c) == c);
  CHECK_THROWS_AS(complete_to_extended_perfect(hamming7_fixture()), PreconditionViolation);
}

TEST_CASE("structural claim at length 16 is reported, not asserted") {
  const Theorem1Report r = verify_theorem1({2, 4}, Family::mixed);
  CHECK(r.n == 16);
  CHECK_FALSE(r.holds.has_value());
  CHECK(r.sym_order == r.sym_pi_order);
  const Theorem1Report z = verify_theorem1({2, 4}, Family::z4);
  CHECK(z.sym_order == 3 * z.sym_pi_order);
  CHECK(z.rank == 13);
}

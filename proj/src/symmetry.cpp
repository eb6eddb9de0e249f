#include <algorithm>
#include <functional>
#include <optional>

#include "z2z4/symmetry.hpp"

namespace z2z4 {

namespace {

bool commutes(const CoordPermutation& a, const CoordPermutation& b) { return a * b == b * a; }

// Backtracking over base images for elements of the centralizer of pi. The
// base lists each pi-pair consecutively, so a partial element is rejected as
// soon as one pair is placed inconsistently.
class CentralizerSearch {
 public:
  CentralizerSearch(const PermGroup& g, const Involution& pi) : pi_(pi), n_(g.degree()) {
    std::vector<unsigned> base;
    std::vector<bool> placed(n_, false);
    for (unsigned i = 0; i < n_; ++i) {
      if (placed[i]) continue;
      base.push_back(i);
      placed[i] = true;
      if (pi(i) != i) {
        base.push_back(pi(i));
        placed[pi(i)] = true;
      }
    }
    g_ = PermGroup::from_generators(n_, g.generators(), base);
    for (unsigned k = 0; k < n_; ++k) orbits_.push_back(g_.fundamental_orbit(k));
  }

  PermGroup run() {
    const auto& base = g_.base();
    std::vector<CoordPermutation> found;
    for (int l = static_cast<int>(n_) - 1; l >= 0; --l) {
      if (orbits_[l].size() < 2) continue;
      const unsigned b = base[l];
      std::vector<unsigned> parent(n_);
      for (unsigned i = 0; i < n_; ++i) parent[i] = i;
      auto find = [&](unsigned x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      auto unite = [&](const CoordPermutation& s) {
        for (unsigned i = 0; i < n_; ++i) {
          const unsigned a = find(i), c = find(s(i));
          if (a != c) parent[std::max(a, c)] = std::min(a, c);
        }
      };
      for (const auto& s : found) unite(s);
      std::vector<unsigned> failed;
      for (unsigned j : orbits_[l]) {
        if (j == b || find(j) == find(b)) continue;
        if (std::any_of(failed.begin(), failed.end(), [&](unsigned f) { return find(f) == find(j); })) continue;
        const CoordPermutation h = g_.transversal(static_cast<unsigned>(l), j);
        std::optional<CoordPermutation> s;
        if (consistent(h, static_cast<unsigned>(l))) s = extend(h, static_cast<unsigned>(l) + 1);
        if (s) {
          found.push_back(*s);
          unite(*s);
        } else {
          failed.push_back(j);
        }
      }
    }
    std::sort(found.begin(), found.end());
    return PermGroup::from_generators(n_, found, g_.base());
  }

 private:
  // The images of b_0..b_k under any completion of prefix are prefix(b_m).
  bool consistent(const CoordPermutation& prefix, unsigned k) const {
    const unsigned b = g_.base()[k];
    const unsigned pb = pi_(b);
    if (pb == b) return pi_(prefix(b)) == prefix(b);
    if (k > 0 && g_.base()[k - 1] == pb) return prefix(b) == pi_(prefix(pb));
    return true;
  }

  std::optional<CoordPermutation> extend(const CoordPermutation& prefix, unsigned k) const {
    if (k == n_) {
      if (commutes(prefix, pi_.perm())) return prefix;
      return std::nullopt;
    }
    if (orbits_[k].size() < 2) {
      if (!consistent(prefix, k)) return std::nullopt;
      return extend(prefix, k + 1);
    }
    for (unsigned j : orbits_[k]) {
      const CoordPermutation h = prefix * g_.transversal(k, j);
      if (!consistent(h, k)) continue;
      if (auto s = extend(h, k + 1)) return s;
    }
    return std::nullopt;
  }

  const Involution& pi_;
  unsigned n_;
  PermGroup g_;
  std::vector<std::vector<unsigned>> orbits_;
};

}  // namespace

PermGroup sym_pi(const PermGroup& g, const Involution& pi) {
  if (pi.size() != g.degree()) throw LengthMismatch("involution degree differs from group degree");
  if (pi.perm().is_identity()) return g;
  return CentralizerSearch(g, pi).run();
}

// ---------------------------------------------------------------------------

MixedWord MonomialTransform::apply(const MixedWord& w) const {
  if (w.alpha() != alpha || w.beta() != beta) throw LengthMismatch("mixed word shape differs from the transform");
  MixedWord r = MixedWord::zero(alpha, beta);
  for (unsigned i = 0; i < alpha; ++i) r.bsyms[bperm[i]] = w.bsyms[i];
  for (unsigned k = 0; k < beta; ++k) r.qsyms[qperm[k]] = negate[k] ? (4 - w.qsyms[k]) & 3u : w.qsyms[k];
  return r;
}

MonomialTransform operator*(const MonomialTransform& a, const MonomialTransform& b) {
  if (a.alpha != b.alpha || a.beta != b.beta) throw LengthMismatch("monomial transforms of different shape");
  MonomialTransform r{a.alpha, a.beta, std::vector<unsigned>(a.alpha), std::vector<unsigned>(a.beta),
                      std::vector<std::uint8_t>(a.beta)};
  for (unsigned i = 0; i < a.alpha; ++i) r.bperm[i] = a.bperm[b.bperm[i]];
  for (unsigned k = 0; k < a.beta; ++k) {
    r.qperm[k] = a.qperm[b.qperm[k]];
    r.negate[k] = b.negate[k] ^ a.negate[b.qperm[k]];
  }
  return r;
}

MonomialTransform sym_to_monomial(const CoordPermutation& sigma, unsigned alpha, unsigned beta) {
  if (sigma.size() != alpha + 2 * beta) throw LengthMismatch("permutation degree differs from alpha + 2 beta");
  if (!commutes(sigma, standard_involution(alpha, beta).perm()))
    throw PreconditionViolation("permutation does not commute with the standard involution");
  MonomialTransform m{alpha, beta, std::vector<unsigned>(alpha), std::vector<unsigned>(beta),
                      std::vector<std::uint8_t>(beta)};
  for (unsigned i = 0; i < alpha; ++i) m.bperm[i] = sigma(i);
  for (unsigned k = 0; k < beta; ++k) {
    const unsigned off = sigma(alpha + 2 * k) - alpha;
    m.qperm[k] = off / 2;
    m.negate[k] = off & 1u;  // the two Gray bits swap: phi(y) becomes phi(-y)
  }
  return m;
}

CoordPermutation monomial_to_sym(const MonomialTransform& m) {
  std::vector<unsigned> img(m.alpha + 2 * m.beta);
  for (unsigned i = 0; i < m.alpha; ++i) img[i] = m.bperm[i];
  for (unsigned k = 0; k < m.beta; ++k) {
    const unsigned to = m.alpha + 2 * m.qperm[k];
    img[m.alpha + 2 * k] = to + m.negate[k];
    img[m.alpha + 2 * k + 1] = to + 1 - m.negate[k];
  }
  return CoordPermutation(img);
}

bool verify_maut_duality(const AdditiveCode& code, const SymmetryOptions& opts) {
  const Involution pi = standard_involution(code.alpha(), code.beta());
  SymmetryOptions o = opts;
  o.commute_with = &pi;
  const SymmetryResult a = symmetry_group(code.gray_image(), o);
  const SymmetryResult b = symmetry_group(dual(code).gray_image(), o);
  if (!a.certified || !b.certified) throw BudgetExceeded("symmetry search timed out");
  if (a.group.order() != b.group.order()) return false;
  auto inside = [](const SymmetryResult& x, const SymmetryResult& y) {
    return std::all_of(x.generators.begin(), x.generators.end(),
                       [&](const CoordPermutation& g) { return y.group.contains(g); });
  };
  return inside(a, b) && inside(b, a);
}

BigInt aut_order(const BinaryCode& code, const PermGroup& sym) { return BigInt(code.size()) * sym.order(); }

BigInt predict_order(const PerfectParams& p, OrderFamily family) {
  validate_params(p, family == OrderFamily::z4_c ? Family::z4 : Family::mixed);
  // Twice the exponent of 2, then the two products of (2^i - 1).
  long twice = 0;
  int first = 0, second = 0;
  if (family == OrderFamily::z4_c) {
    if (p.t <= 4) throw InvalidArgument("the Z4-linear order formula needs t > 4");
    const long g = p.gamma(), d = p.delta_dot();
    twice = g * g + 3 * g + 4 * g * d + 3 * d * d + 5 * d + 2;
    first = p.gamma();
    second = p.delta_dot();
  } else {
    const long g = p.gamma_dot(), d = p.delta();
    const long sign = family == OrderFamily::perfect_a ? -1 : 1;
    twice = g * g + sign * g + 4 * g * d + 3 * d * d + sign * d;
    first = p.gamma_dot();
    second = p.delta();
  }
  BigInt o = BigInt(1) << static_cast<unsigned>(twice / 2);
  for (int i = 1; i <= first; ++i) o *= (BigInt(1) << i) - 1;
  for (int i = 1; i <= second; ++i) o *= (BigInt(1) << i) - 1;
  return o;
}

}  // namespace z2z4

#include "z2z4/additive_code.hpp"

#include <algorithm>
#include <bit>

#include "z2z4/closure.hpp"
#include "z2z4/z4_matrix.hpp"

namespace z2z4 {

namespace {

void require_shape(const MixedWord& w, unsigned alpha, unsigned beta) {
  if (w.alpha() != alpha || w.beta() != beta) throw LengthMismatch("mixed word does not match the code shape");
}

// Binary symbols embedded as {0,2} so that everything lives in Z4^{alpha+beta}.
z4::Row embed(const MixedWord& w) {
  z4::Row r;
  r.reserve(w.alpha() + w.beta());
  for (auto b : w.bsyms) r.push_back(static_cast<std::uint8_t>(2 * b));
  for (auto q : w.qsyms) r.push_back(q);
  return r;
}

z4::Matrix embed_rows(const std::vector<MixedWord>& rows, unsigned alpha, unsigned beta) {
  std::vector<z4::Row> m;
  m.reserve(rows.size());
  for (const auto& w : rows) m.push_back(embed(w));
  return z4::Matrix(m, alpha + beta);
}

// Generators of {x : inner_product(x, h) = 0 for all rows h}. With the rows
// embedded, the pairing is the plain Z4 dot product against x lifted to
// Z4^{alpha+beta}, in which only the parity of a binary coordinate matters.
std::vector<MixedWord> orthogonal_generators(const std::vector<MixedWord>& rows, unsigned alpha, unsigned beta) {
  std::vector<MixedWord> out;
  for (const auto& k : z4::kernel(embed_rows(rows, alpha, beta))) {
    MixedWord w = MixedWord::zero(alpha, beta);
    for (unsigned i = 0; i < alpha; ++i) w.bsyms[i] = k[i] & 1u;
    for (unsigned j = 0; j < beta; ++j) w.qsyms[j] = k[alpha + j];
    if (!w.is_zero()) out.push_back(std::move(w));
  }
  return out;
}

Word quaternary_first_bits(unsigned alpha, unsigned beta) {
  Word m = 0;
  for (unsigned k = 0; k < beta; ++k) m |= Word{1} << (alpha + 2 * k);
  return m;
}

}  // namespace

AdditiveCode::AdditiveCode(unsigned alpha, unsigned beta, std::vector<MixedWord> generators)
    : alpha_(alpha), beta_(beta), generators_(std::move(generators)) {
  check_length(alpha + 2 * beta);
  for (const auto& g : generators_) require_shape(g, alpha, beta);
  reduce();
  check_rows_ = orthogonal_generators(generators_, alpha_, beta_);
}

AdditiveCode AdditiveCode::from_check_rows(unsigned alpha, unsigned beta, std::vector<MixedWord> rows) {
  check_length(alpha + 2 * beta);
  for (const auto& h : rows) require_shape(h, alpha, beta);
  AdditiveCode c;
  c.alpha_ = alpha;
  c.beta_ = beta;
  c.generators_ = orthogonal_generators(rows, alpha, beta);
  c.check_rows_ = std::move(rows);
  c.reduce();
  return c;
}

void AdditiveCode::reduce() {
  basis_.clear();
  gamma_ = delta_ = 0;
  for (auto& [row, order] : z4::row_basis(embed_rows(generators_, alpha_, beta_))) {
    MixedWord w = MixedWord::zero(alpha_, beta_);
    for (unsigned i = 0; i < alpha_; ++i) w.bsyms[i] = (row[i] >> 1) & 1u;
    for (unsigned j = 0; j < beta_; ++j) w.qsyms[j] = row[alpha_ + j];
    (order == 2 ? gamma_ : delta_) += 1;
    basis_.emplace_back(std::move(w), order);
  }
}

std::uint64_t AdditiveCode::size() const {
  if (log2_size() >= 64) throw BudgetExceeded("code size does not fit in 64 bits");
  return std::uint64_t{1} << log2_size();
}

bool AdditiveCode::contains(const MixedWord& w) const {
  require_shape(w, alpha_, beta_);
  return std::all_of(check_rows_.begin(), check_rows_.end(),
                     [&](const MixedWord& h) { return inner_product(w, h) == 0; });
}

BinaryCode AdditiveCode::gray_image(std::uint64_t max_span) const {
  if (log2_size() >= 64 || size() > max_span) throw BudgetExceeded("span exceeds the enumeration budget");
  const std::uint64_t total = size();
  const Involution pi = standard_involution(alpha_, beta_);
  std::vector<Word> g;
  std::vector<unsigned> order;
  for (const auto& [w, o] : basis_) {
    g.push_back(gray_bits(w));
    order.push_back(o);
  }
  std::vector<unsigned> digit(g.size(), 0);
  std::vector<Word> out;
  out.reserve(total);
  Word cur = 0;
  out.push_back(cur);
  for (std::uint64_t step = 1; step < total; ++step) {
    for (std::size_t k = 0;; ++k) {
      cur = star(cur, g[k], pi);
      if (++digit[k] < order[k]) break;
      digit[k] = 0;
    }
    out.push_back(cur);
  }
  return BinaryCode(length(), std::move(out));
}

std::vector<MixedWord> AdditiveCode::span(std::uint64_t max_span) const {
  const BinaryCode img = gray_image(max_span);
  std::vector<MixedWord> out;
  out.reserve(img.size());
  for (Word w : img.words()) out.push_back(gray_inv(BinaryWord(length(), w), alpha_, beta_));
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const AdditiveCode& a, const AdditiveCode& b) {
  if (a.alpha_ != b.alpha_ || a.beta_ != b.beta_ || a.log2_size() != b.log2_size()) return false;
  return std::all_of(b.generators_.begin(), b.generators_.end(), [&](const MixedWord& g) { return a.contains(g); });
}

AdditiveCode dual(const AdditiveCode& code) {
  return AdditiveCode::from_check_rows(code.alpha(), code.beta(), code.generators());
}

bool membership(const AdditiveCode& code, const MixedWord& w, MembershipRoute route) {
  require_shape(w, code.alpha(), code.beta());
  switch (route) {
    case MembershipRoute::syndrome:
      return code.contains(w);
    case MembershipRoute::span_search:
      return code.gray_image().contains(gray_bits(w));
    case MembershipRoute::order_test: {
      auto gens = code.generators();
      gens.push_back(w);
      return AdditiveCode(code.alpha(), code.beta(), std::move(gens)).log2_size() == code.log2_size();
    }
  }
  return false;
}

CodeType code_type(const AdditiveCode& code, std::uint64_t max_span) {
  const BinaryCode img = code.gray_image(max_span);
  const Word first = quaternary_first_bits(code.alpha(), code.beta());
  // x + x = 0 iff every quaternary symbol is 0 or 2, i.e. both Gray bits agree.
  std::uint64_t torsion = 0;
  for (Word w : img.words()) torsion += ((w ^ (w >> 1)) & first) == 0;
  const unsigned log_size = static_cast<unsigned>(std::countr_zero(img.size()));
  const unsigned log_torsion = static_cast<unsigned>(std::countr_zero(torsion));
  const unsigned delta = log_size - log_torsion;
  return {code.alpha(), code.beta(), log_torsion - delta, delta};
}

bool is_additive(const BinaryCode& cands, unsigned alpha, unsigned beta) {
  if (cands.length() != alpha + 2 * beta) throw LengthMismatch("code length differs from alpha + 2 beta");
  const Word first = quaternary_first_bits(alpha, beta);
  const Word fixed = low_mask(alpha);
  // Natural encoding: each quaternary symbol as (low bit, high bit) in its pair.
  std::vector<Word> nat;
  nat.reserve(cands.size());
  for (Word w : cands.words()) {
    const Word g0 = w & first, g1 = (w >> 1) & first;
    nat.push_back((w & fixed) | (g0 ^ g1) | (g0 << 1));
  }
  const BinaryCode set(cands.length(), std::move(nat));
  BatchOp add = [first](std::span<const Word> xs, Word y, std::span<Word> out) {
    for (std::size_t k = 0; k < xs.size(); ++k) out[k] = xs[k] ^ y ^ ((xs[k] & y & first) << 1);
  };
  return is_closed_under_op(set, add);
}

// ---------------------------------------------------------------------------

void validate_params(const PerfectParams& p, Family family) {
  const int r = p.r, t = p.t;
  bool ok = t >= 4 && t <= 6;
  if (family == Family::mixed)
    ok = ok && 2 * r >= t && r <= t;
  else
    ok = ok && 2 * r >= t - 1 && r <= t - 1;
  if (!ok)
    throw InvalidArgument("parameters out of range: r=" + std::to_string(r) + " t=" + std::to_string(t));
}

namespace {

using Element = std::vector<std::uint8_t>;

// All elements of Z_{m_0} x Z_{m_1} x ..., in lexicographic order.
std::vector<Element> group_elements(const std::vector<unsigned>& moduli) {
  std::vector<Element> out{Element(moduli.size(), 0)};
  for (std::size_t c = 0; c < moduli.size(); ++c) {
    std::vector<Element> next;
    for (const auto& e : out)
      for (unsigned v = 0; v < moduli[c]; ++v) {
        Element f = e;
        f[c] = static_cast<std::uint8_t>(v);
        next.push_back(std::move(f));
      }
    out = std::move(next);
  }
  // Building the first component outermost gives lexicographic order.
  std::sort(out.begin(), out.end());
  return out;
}

bool has_order_le_2(const Element& e, const std::vector<unsigned>& moduli) {
  for (std::size_t c = 0; c < moduli.size(); ++c)
    if (moduli[c] == 4 && (e[c] & 1u)) return false;
  return true;
}

Element negate(const Element& e, const std::vector<unsigned>& moduli) {
  Element f = e;
  for (std::size_t c = 0; c < moduli.size(); ++c) f[c] = static_cast<std::uint8_t>((moduli[c] - e[c]) % moduli[c]);
  return f;
}

Element prepend(std::uint8_t v, const Element& e) {
  Element f(e.size() + 1);
  f[0] = v;
  std::copy(e.begin(), e.end(), f.begin() + 1);
  return f;
}

// The code {x : sum x_i bcol_i + sum y_j qcol_j = 0 in G}, expressed through
// one check row per cyclic component of G.
AdditiveCode syndrome_kernel(const std::vector<unsigned>& moduli, const std::vector<Element>& bcols,
                             const std::vector<Element>& qcols) {
  const unsigned alpha = static_cast<unsigned>(bcols.size());
  const unsigned beta = static_cast<unsigned>(qcols.size());
  std::vector<MixedWord> rows;
  for (std::size_t c = 0; c < moduli.size(); ++c) {
    MixedWord h = MixedWord::zero(alpha, beta);
    if (moduli[c] == 2) {
      for (unsigned i = 0; i < alpha; ++i) h.bsyms[i] = bcols[i][c];
      for (unsigned j = 0; j < beta; ++j) h.qsyms[j] = static_cast<std::uint8_t>(2 * qcols[j][c]);
    } else {
      for (unsigned i = 0; i < alpha; ++i) h.bsyms[i] = bcols[i][c] >> 1;
      for (unsigned j = 0; j < beta; ++j) h.qsyms[j] = qcols[j][c];
    }
    rows.push_back(std::move(h));
  }
  return AdditiveCode::from_check_rows(alpha, beta, std::move(rows));
}

std::vector<unsigned> mixed_moduli(const PerfectParams& p) {
  std::vector<unsigned> m(static_cast<std::size_t>(p.gamma_dot()), 2u);
  m.insert(m.end(), static_cast<std::size_t>(p.delta()), 4u);
  return m;
}

void mixed_columns(const std::vector<unsigned>& moduli, bool include_zero, std::vector<Element>& bcols,
                   std::vector<Element>& qcols) {
  for (const auto& g : group_elements(moduli)) {
    if (has_order_le_2(g, moduli)) {
      if (include_zero || std::any_of(g.begin(), g.end(), [](auto v) { return v != 0; })) bcols.push_back(g);
    } else if (g < negate(g, moduli)) {
      qcols.push_back(g);
    }
  }
}

}  // namespace

AdditiveCode construct_perfect(const PerfectParams& p) {
  validate_params(p, Family::mixed);
  const auto moduli = mixed_moduli(p);
  std::vector<Element> bcols, qcols;
  mixed_columns(moduli, false, bcols, qcols);
  return syndrome_kernel(moduli, bcols, qcols);
}

AdditiveCode construct_extended_perfect(const PerfectParams& p) {
  validate_params(p, Family::mixed);
  const auto moduli = mixed_moduli(p);
  std::vector<Element> bcols, qcols;
  mixed_columns(moduli, true, bcols, qcols);
  for (auto& c : bcols) c = prepend(1, c);
  for (auto& c : qcols) c = prepend(1, c);
  std::vector<unsigned> ext{2u};
  ext.insert(ext.end(), moduli.begin(), moduli.end());
  return syndrome_kernel(ext, bcols, qcols);
}

AdditiveCode construct_z4_extended_perfect(const PerfectParams& p) {
  validate_params(p, Family::z4);
  std::vector<unsigned> h_moduli(static_cast<std::size_t>(p.gamma()), 2u);
  h_moduli.insert(h_moduli.end(), static_cast<std::size_t>(p.delta_dot()), 4u);
  std::vector<Element> qcols;
  for (const auto& h : group_elements(h_moduli)) qcols.push_back(prepend(1, h));
  std::vector<unsigned> moduli{4u};
  moduli.insert(moduli.end(), h_moduli.begin(), h_moduli.end());
  return syndrome_kernel(moduli, {}, qcols);
}

AdditiveCode hadamard_dual(const PerfectParams& p, Family family) {
  return dual(family == Family::mixed ? construct_extended_perfect(p) : construct_z4_extended_perfect(p));
}

AdditiveCode octacode() {
  static constexpr std::uint8_t kRows[4][8] = {
      {1, 0, 0, 0, 3, 1, 2, 1},
      {0, 1, 0, 0, 1, 2, 3, 1},
      {0, 0, 1, 0, 3, 3, 3, 2},
      {0, 0, 0, 1, 2, 3, 1, 1},
  };
  std::vector<MixedWord> gens;
  for (const auto& row : kRows) gens.emplace_back(std::vector<std::uint8_t>{}, std::vector<std::uint8_t>(row, row + 8));
  return AdditiveCode(0, 8, std::move(gens));
}

BinaryCode nordstrom_robinson() { return octacode().gray_image(); }

}  // namespace z2z4

#include "z2z4/word.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace z2z4 {

void check_length(unsigned n) {
  if (n > kMaxLength) throw InvalidArgument("word length " + std::to_string(n) + " exceeds 64");
}

BinaryWord::BinaryWord(unsigned n, Word bits) : n_(static_cast<std::uint8_t>(n)), bits_(bits) {
  check_length(n);
  if ((bits & ~low_mask(n)) != 0) throw InvalidArgument("word has bits beyond its length");
}

BinaryWord BinaryWord::from_string(std::string_view s) {
  check_length(static_cast<unsigned>(s.size()));
  Word bits = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      bits |= Word{1} << i;
    else if (s[i] != '0')
      throw ParseError("binary word must consist of 0 and 1");
  }
  return BinaryWord(static_cast<unsigned>(s.size()), bits);
}

std::string BinaryWord::to_string() const {
  std::string s(n_, '0');
  for (unsigned i = 0; i < n_; ++i)
    if ((*this)[i]) s[i] = '1';
  return s;
}

namespace {

void require_same_length(const BinaryWord& x, const BinaryWord& y) {
  if (x.size() != y.size()) throw LengthMismatch("binary words of different lengths");
}

}  // namespace

BinaryWord operator+(const BinaryWord& x, const BinaryWord& y) {
  require_same_length(x, y);
  return BinaryWord(x.size(), x.bits() ^ y.bits());
}

BinaryWord operator*(const BinaryWord& x, const BinaryWord& y) {
  require_same_length(x, y);
  return BinaryWord(x.size(), x.bits() & y.bits());
}

unsigned distance(const BinaryWord& x, const BinaryWord& y) {
  require_same_length(x, y);
  return popcount(x.bits() ^ y.bits());
}

WeightParity weight_parity(const BinaryWord& x) {
  const unsigned w = x.weight();
  return {w, (w & 1u) ? Parity::odd : Parity::even};
}

// ---------------------------------------------------------------------------

CoordPermutation::CoordPermutation(std::span<const unsigned> image) {
  check_length(static_cast<unsigned>(image.size()));
  n_ = static_cast<std::uint8_t>(image.size());
  Word seen = 0;
  for (unsigned i = 0; i < n_; ++i) {
    const unsigned v = image[i];
    if (v >= n_ || ((seen >> v) & 1u)) throw InvalidArgument("image list is not a permutation");
    seen |= Word{1} << v;
    image_[i] = static_cast<std::uint8_t>(v);
  }
}

CoordPermutation CoordPermutation::identity(unsigned n) {
  check_length(n);
  CoordPermutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (unsigned i = 0; i < n; ++i) p.image_[i] = static_cast<std::uint8_t>(i);
  return p;
}

CoordPermutation CoordPermutation::from_cycles(unsigned n, const std::vector<std::vector<unsigned>>& cycles) {
  std::vector<unsigned> img(n);
  for (unsigned i = 0; i < n; ++i) img[i] = i;
  Word touched = 0;
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] >= n || ((touched >> c[k]) & 1u)) throw InvalidArgument("cycles are not disjoint");
      touched |= Word{1} << c[k];
      img[c[k]] = c[(k + 1) % c.size()];
    }
  }
  return CoordPermutation(img);
}

CoordPermutation CoordPermutation::from_cycles(unsigned n,
                                               std::initializer_list<std::initializer_list<unsigned>> cycles) {
  std::vector<std::vector<unsigned>> cs;
  for (const auto& c : cycles) cs.emplace_back(c);
  return from_cycles(n, cs);
}

CoordPermutation CoordPermutation::transposition(unsigned n, unsigned a, unsigned b) {
  if (a == b) return identity(n);
  return from_cycles(n, std::vector<std::vector<unsigned>>{{a, b}});
}

std::vector<unsigned> CoordPermutation::images() const {
  return std::vector<unsigned>(image_.begin(), image_.begin() + n_);
}

CoordPermutation CoordPermutation::inverse() const {
  CoordPermutation r;
  r.n_ = n_;
  for (unsigned i = 0; i < n_; ++i) r.image_[image_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

bool CoordPermutation::is_identity() const noexcept {
  for (unsigned i = 0; i < n_; ++i)
    if (image_[i] != i) return false;
  return true;
}

bool CoordPermutation::is_involution() const noexcept {
  for (unsigned i = 0; i < n_; ++i)
    if (image_[image_[i]] != i) return false;
  return true;
}

unsigned CoordPermutation::first_moved_point() const noexcept {
  for (unsigned i = 0; i < n_; ++i)
    if (image_[i] != i) return i;
  return n_;
}

Word CoordPermutation::apply(Word x) const noexcept {
  Word r = 0;
  while (x) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(x));
    r |= Word{1} << image_[j];
    x &= x - 1;
  }
  return r;
}

std::string CoordPermutation::to_string() const {
  std::string s;
  for (unsigned i = 0; i < n_; ++i) {
    if (i) s += ' ';
    s += std::to_string(image_[i]);
  }
  return s;
}

std::string CoordPermutation::to_cycle_string() const {
  std::string s;
  Word seen = 0;
  for (unsigned i = 0; i < n_; ++i) {
    if (((seen >> i) & 1u) || image_[i] == i) continue;
    s += '(';
    unsigned j = i;
    bool first = true;
    do {
      if (!first) s += ' ';
      first = false;
      s += std::to_string(j);
      seen |= Word{1} << j;
      j = image_[j];
    } while (j != i);
    s += ')';
  }
  return s.empty() ? "()" : s;
}

bool operator==(const CoordPermutation& a, const CoordPermutation& b) noexcept {
  return a.n_ == b.n_ && std::equal(a.image_.begin(), a.image_.begin() + a.n_, b.image_.begin());
}

std::strong_ordering operator<=>(const CoordPermutation& a, const CoordPermutation& b) noexcept {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.image_.begin(), a.image_.begin() + a.n_, b.image_.begin(),
                                                b.image_.begin() + b.n_);
}

CoordPermutation operator*(const CoordPermutation& a, const CoordPermutation& b) {
  if (a.size() != b.size()) throw LengthMismatch("composing permutations of different degree");
  std::vector<unsigned> img(a.size());
  for (unsigned i = 0; i < a.size(); ++i) img[i] = a(b(i));
  return CoordPermutation(img);
}

BinaryWord apply_perm(const CoordPermutation& sigma, const BinaryWord& x) {
  if (sigma.size() != x.size()) throw LengthMismatch("permutation degree differs from word length");
  return BinaryWord(x.size(), sigma.apply(x.bits()));
}

// ---------------------------------------------------------------------------

Involution::Involution(const CoordPermutation& p) : perm_(p) {
  if (!p.is_involution()) throw InvalidArgument("permutation is not an involution");
  std::map<unsigned, Word> by_shift;
  for (unsigned i = 0; i < p.size(); ++i) {
    const unsigned j = p(i);
    if (j == i) {
      ++alpha_;
      fixed_mask_ |= Word{1} << i;
    } else if (i < j) {
      by_shift[j - i] |= Word{1} << i;
    }
  }
  for (const auto& [shift, mask] : by_shift) twist_.swaps.push_back({shift, mask});
}

BinaryWord star(const BinaryWord& x, const BinaryWord& y, const Involution& pi) {
  if (x.size() != y.size() || x.size() != pi.size()) throw LengthMismatch("star operands differ in length");
  return BinaryWord(x.size(), star(x.bits(), y.bits(), pi));
}

Involution standard_involution(unsigned alpha, unsigned beta) {
  const unsigned n = alpha + 2 * beta;
  check_length(n);
  std::vector<unsigned> img(n);
  for (unsigned i = 0; i < alpha; ++i) img[i] = i;
  for (unsigned k = 0; k < beta; ++k) {
    img[alpha + 2 * k] = alpha + 2 * k + 1;
    img[alpha + 2 * k + 1] = alpha + 2 * k;
  }
  return Involution(CoordPermutation(img));
}

StructureType involution_type(const Involution& pi) { return {pi.alpha(), pi.beta()}; }

// ---------------------------------------------------------------------------

MixedWord::MixedWord(std::vector<std::uint8_t> b, std::vector<std::uint8_t> q)
    : bsyms(std::move(b)), qsyms(std::move(q)) {
  for (auto s : bsyms)
    if (s > 1) throw InvalidArgument("binary symbol out of range");
  for (auto s : qsyms)
    if (s > 3) throw InvalidArgument("quaternary symbol out of range");
}

MixedWord MixedWord::zero(unsigned alpha, unsigned beta) {
  MixedWord m;
  m.bsyms.assign(alpha, 0);
  m.qsyms.assign(beta, 0);
  return m;
}

bool MixedWord::is_zero() const noexcept {
  return std::all_of(bsyms.begin(), bsyms.end(), [](auto s) { return s == 0; }) &&
         std::all_of(qsyms.begin(), qsyms.end(), [](auto s) { return s == 0; });
}

std::string MixedWord::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < bsyms.size(); ++i) {
    s += static_cast<char>('0' + bsyms[i]);
    s += ' ';
  }
  s += '|';
  for (auto q : qsyms) {
    s += ' ';
    s += static_cast<char>('0' + q);
  }
  return s;
}

namespace {

void require_same_shape(const MixedWord& x, const MixedWord& y) {
  if (x.alpha() != y.alpha() || x.beta() != y.beta()) throw LengthMismatch("mixed words of different shape");
}

constexpr std::uint8_t kPhi[4] = {0b00, 0b10, 0b11, 0b01};  // bit0 = first Gray coordinate

}  // namespace

MixedWord operator+(const MixedWord& x, const MixedWord& y) {
  require_same_shape(x, y);
  MixedWord r = x;
  for (std::size_t i = 0; i < r.bsyms.size(); ++i) r.bsyms[i] ^= y.bsyms[i];
  for (std::size_t j = 0; j < r.qsyms.size(); ++j) r.qsyms[j] = (r.qsyms[j] + y.qsyms[j]) & 3u;
  return r;
}

MixedWord operator-(const MixedWord& x) {
  MixedWord r = x;
  for (auto& q : r.qsyms) q = (4 - q) & 3u;
  return r;
}

MixedWord scale(const MixedWord& x, unsigned k) {
  MixedWord r = x;
  for (auto& b : r.bsyms) b = (b * k) & 1u;
  for (auto& q : r.qsyms) q = (q * k) & 3u;
  return r;
}

unsigned inner_product(const MixedWord& x, const MixedWord& y) {
  require_same_shape(x, y);
  unsigned acc = 0;
  for (std::size_t i = 0; i < x.bsyms.size(); ++i) acc += 2u * x.bsyms[i] * y.bsyms[i];
  for (std::size_t j = 0; j < x.qsyms.size(); ++j) acc += static_cast<unsigned>(x.qsyms[j]) * y.qsyms[j];
  return acc & 3u;
}

Word gray_bits(const MixedWord& m) {
  const unsigned alpha = m.alpha();
  check_length(alpha + 2 * m.beta());
  Word w = 0;
  for (unsigned i = 0; i < alpha; ++i) w |= Word{m.bsyms[i]} << i;
  for (unsigned k = 0; k < m.beta(); ++k) w |= Word{kPhi[m.qsyms[k]]} << (alpha + 2 * k);
  return w;
}

BinaryWord gray(const MixedWord& m) { return BinaryWord(m.alpha() + 2 * m.beta(), gray_bits(m)); }

MixedWord gray_inv(const BinaryWord& x, unsigned alpha, unsigned beta) {
  if (x.size() != alpha + 2 * beta) throw LengthMismatch("word length differs from alpha + 2 beta");
  static constexpr std::uint8_t kInv[4] = {0, 3, 1, 2};  // indexed by the two Gray bits, low = first
  MixedWord m = MixedWord::zero(alpha, beta);
  for (unsigned i = 0; i < alpha; ++i) m.bsyms[i] = x[i];
  for (unsigned k = 0; k < beta; ++k) {
    const unsigned pair = static_cast<unsigned>((x.bits() >> (alpha + 2 * k)) & 3u);
    m.qsyms[k] = kInv[pair];
  }
  return m;
}

}  // namespace z2z4

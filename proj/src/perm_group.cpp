#include "z2z4/perm_group.hpp"

#include <algorithm>
#include <numeric>

namespace z2z4 {

PermGroup::PermGroup(unsigned n, std::span<const unsigned> base_prefix) : n_(n) {
  check_length(n);
  std::vector<bool> used(n, false);
  for (unsigned b : base_prefix) {
    if (b >= n || used[b]) throw InvalidArgument("base prefix has repeated or out-of-range points");
    used[b] = true;
    base_.push_back(b);
  }
  for (unsigned p = 0; p < n; ++p)
    if (!used[p]) base_.push_back(p);
  levels_.resize(n);
  for (unsigned k = 0; k < n; ++k) {
    levels_[k].rep.resize(n);
    levels_[k].rep_inv.resize(n);
    levels_[k].rep[base_[k]] = CoordPermutation::identity(n);
    levels_[k].rep_inv[base_[k]] = CoordPermutation::identity(n);
  }
}

PermGroup PermGroup::from_generators(unsigned n, std::span<const CoordPermutation> gens,
                                     std::span<const unsigned> base_prefix) {
  PermGroup g(n, base_prefix);
  for (const auto& s : gens) g.add_generator(s);
  return g;
}

bool PermGroup::sift_member(unsigned level, CoordPermutation g) const {
  for (unsigned k = level; k < n_; ++k) {
    const unsigned j = g(base_[k]);
    const auto& inv = levels_[k].rep_inv[j];
    if (!inv) return false;
    g = *inv * g;
  }
  return g.is_identity();
}

// Knuth's procedure A: make g, which fixes b_0..b_{level-1}, a member of the
// level's group.
void PermGroup::add_at(unsigned level, const CoordPermutation& g) {
  if (sift_member(level, g)) return;
  Level& lv = levels_[level];
  lv.strong.push_back(g);
  std::vector<unsigned> points;
  for (unsigned j = 0; j < n_; ++j)
    if (lv.rep[j]) points.push_back(j);
  for (unsigned j : points) close_at(level, g * *levels_[level].rep[j]);
}

// Procedure B: g lies in the level's group; extend the transversal or push
// the Schreier generator one level down.
void PermGroup::close_at(unsigned level, const CoordPermutation& g) {
  Level& lv = levels_[level];
  const unsigned j = g(base_[level]);
  if (!lv.rep[j]) {
    lv.rep[j] = g;
    lv.rep_inv[j] = g.inverse();
    // S_k does not change while this level is being closed.
    for (std::size_t s = 0; s < lv.strong.size(); ++s) close_at(level, lv.strong[s] * g);
  } else {
    const CoordPermutation h = *lv.rep_inv[j] * g;
    if (!h.is_identity()) add_at(level + 1, h);
  }
}

void PermGroup::add_generator(const CoordPermutation& g) {
  if (g.size() != n_) throw LengthMismatch("generator degree differs from the group degree");
  if (g.is_identity() || contains(g)) return;
  gens_.push_back(g);
  add_at(0, g);
}

BigInt PermGroup::order() const {
  BigInt o = 1;
  for (const auto& lv : levels_)
    o *= static_cast<unsigned>(std::count_if(lv.rep.begin(), lv.rep.end(), [](const auto& r) { return r.has_value(); }));
  return o;
}

bool PermGroup::contains(const CoordPermutation& g) const {
  if (g.size() != n_) return false;
  return sift_member(0, g);
}

std::vector<unsigned> PermGroup::fundamental_orbit(unsigned level) const {
  std::vector<unsigned> out;
  for (unsigned j = 0; j < n_; ++j)
    if (levels_.at(level).rep[j]) out.push_back(j);
  return out;
}

const CoordPermutation& PermGroup::transversal(unsigned level, unsigned point) const {
  const auto& r = levels_.at(level).rep.at(point);
  if (!r) throw InvalidArgument("point is not in the fundamental orbit");
  return *r;
}

void PermGroup::for_each_element(const std::function<bool(const CoordPermutation&)>& fn,
                                 std::uint64_t limit) const {
  if (order() > limit) throw BudgetExceeded("group too large to enumerate");
  // Only levels with a nontrivial transversal contribute.
  std::vector<std::vector<unsigned>> orbits;
  std::vector<unsigned> levels;
  for (unsigned k = 0; k < n_; ++k) {
    auto o = fundamental_orbit(k);
    if (o.size() > 1) {
      orbits.push_back(std::move(o));
      levels.push_back(k);
    }
  }
  std::vector<CoordPermutation> prefix(levels.size() + 1, CoordPermutation::identity(n_));
  bool go = true;
  std::function<void(std::size_t)> rec = [&](std::size_t d) {
    if (!go) return;
    if (d == levels.size()) {
      go = fn(prefix[d]);
      return;
    }
    for (unsigned j : orbits[d]) {
      prefix[d + 1] = prefix[d] * transversal(levels[d], j);
      rec(d + 1);
      if (!go) return;
    }
  };
  rec(0);
}

std::vector<CoordPermutation> PermGroup::elements(std::uint64_t limit) const {
  std::vector<CoordPermutation> out;
  for_each_element(
      [&](const CoordPermutation& g) {
        out.push_back(g);
        return true;
      },
      limit);
  return out;
}

std::vector<unsigned> PermGroup::orbit_ids() const {
  std::vector<unsigned> parent(n_);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](unsigned x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens_)
    for (unsigned i = 0; i < n_; ++i) {
      const unsigned a = find(i), b = find(g(i));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<unsigned> id(n_), root_id(n_, ~0u);
  unsigned next = 0;
  for (unsigned i = 0; i < n_; ++i) {
    const unsigned r = find(i);
    if (root_id[r] == ~0u) root_id[r] = next++;
    id[i] = root_id[r];
  }
  return id;
}

std::vector<unsigned> PermGroup::orbit(unsigned point) const {
  const auto id = orbit_ids();
  std::vector<unsigned> out;
  for (unsigned i = 0; i < n_; ++i)
    if (id[i] == id.at(point)) out.push_back(i);
  return out;
}

}  // namespace z2z4

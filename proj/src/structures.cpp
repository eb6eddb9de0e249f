#include "z2z4/structures.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace z2z4 {

bool closure_check(const BinaryCode& code, const Involution& pi, const ClosureOptions& opts) {
  return is_closed_under_star(code, pi, opts);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<CoordPermutation> involutions_of(const PermGroup& g, std::uint64_t limit) {
  const unsigned n = g.degree();
  const auto& base = g.base();
  std::vector<int> level_of(n);
  for (unsigned k = 0; k < n; ++k) level_of[base[k]] = static_cast<int>(k);
  std::vector<unsigned> levels;
  std::vector<std::vector<unsigned>> orbits;
  for (unsigned k = 0; k < n; ++k) {
    auto o = g.fundamental_orbit(k);
    if (o.size() > 1) {
      levels.push_back(k);
      orbits.push_back(std::move(o));
    }
  }
  std::vector<CoordPermutation> out;
  // Images of b_0..b_k are final once the level-k factor is chosen.
  auto consistent = [&](const CoordPermutation& h, unsigned k) {
    for (unsigned m = 0; m <= k; ++m) {
      const unsigned y = h(base[m]);
      if (level_of[y] <= static_cast<int>(k) && h(y) != base[m]) return false;
    }
    return true;
  };
  std::function<void(std::size_t, const CoordPermutation&)> rec = [&](std::size_t d, const CoordPermutation& prefix) {
    if (d == levels.size()) {
      if (prefix.is_involution()) {
        if (out.size() >= limit) throw BudgetExceeded("too many involutions in the symmetry group");
        out.push_back(prefix);
      }
      return;
    }
    for (unsigned j : orbits[d]) {
      const CoordPermutation h = prefix * g.transversal(levels[d], j);
      if (consistent(h, levels[d])) rec(d + 1, h);
    }
  };
  rec(0, CoordPermutation::identity(n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

StructureReport enumerate_structures(const BinaryCode& code, const PermGroup& sym, std::string code_id,
                                     const EnumerateOptions& opts) {
  if (sym.degree() != code.length()) throw LengthMismatch("group degree differs from code length");
  StructureReport rep;
  rep.code_id = std::move(code_id);
  const auto inv = involutions_of(sym, opts.max_involutions);
  rep.involutions_in_sym = inv.size();
  std::vector<bool> seen(inv.size(), false);
  std::vector<CoordPermutation> ginv;
  for (const auto& s : sym.generators()) ginv.push_back(s.inverse());
  for (std::size_t i = 0; i < inv.size(); ++i) {
    if (seen[i]) continue;
    ++rep.conjugacy_classes;
    // Conjugation by Sym(C) carries structures to structures, so one
    // closure test decides the whole class.
    std::vector<std::size_t> cls{i};
    seen[i] = true;
    for (std::size_t q = 0; q < cls.size(); ++q) {
      const CoordPermutation& x = inv[cls[q]];
      for (std::size_t s = 0; s < ginv.size(); ++s) {
        const CoordPermutation c = sym.generators()[s] * x * ginv[s];
        const auto it = std::lower_bound(inv.begin(), inv.end(), c);
        const auto idx = static_cast<std::size_t>(it - inv.begin());
        if (it == inv.end() || !(*it == c)) throw std::logic_error("conjugate involution missing from enumeration");
        if (!seen[idx]) {
          seen[idx] = true;
          cls.push_back(idx);
        }
      }
    }
    if (!closure_check(code, Involution(inv[i]))) continue;
    for (auto idx : cls) rep.structures.emplace_back(inv[idx]);
  }
  std::sort(rep.structures.begin(), rep.structures.end());
  for (const auto& s : rep.structures) {
    rep.types.push_back(involution_type(s));
    if (s.perm().is_identity()) rep.is_linear = true;
  }
  return rep;
}

// ---------------------------------------------------------------------------

std::optional<ConflictWitness> conflict_witness(const BinaryCode& code, const Involution& pi, const Involution& tau,
                                                const WitnessOptions& opts) {
  const unsigned n = code.length();
  if (pi.size() != n || tau.size() != n) throw LengthMismatch("involution degree differs from code length");
  if (pi == tau) throw PreconditionViolation("the two structures coincide");
  std::vector<unsigned> starts;
  for (unsigned i = 0; i < n; ++i)
    if (pi(i) != i && pi(i) != tau(i)) starts.push_back(i);
  if (starts.empty()) throw PreconditionViolation("no coordinate i with pi(i) outside {i, tau(i)}");
  if (opts.check_preconditions) {
    if (!closure_check(code, pi)) throw PreconditionViolation("code is not closed under pi");
    MinDistanceOptions md;
    md.structure = &pi;
    if (classify(code, md) != CodeClass::extended_perfect)
      throw PreconditionViolation("code is not extended 1-perfect");
  }

  // near[j]: the coordinates that are not independent from j.
  std::vector<Word> near(n);
  for (unsigned j = 0; j < n; ++j) near[j] = (Word{1} << j) | (Word{1} << pi(j)) | (Word{1} << tau(j));
  auto near_set = [&](Word s) {
    Word r = 0;
    for (; s; s &= s - 1) r |= near[std::countr_zero(s)];
    return r;
  };
  std::vector<Word> w4;
  for (Word x : code.words())
    if (popcount(x) == 4) w4.push_back(x);

  for (unsigned i : starts) {
    const Word bi = Word{1} << i, bpi = Word{1} << pi(i);
    for (Word v : w4) {
      if (!(v & bi)) continue;
      const Word blocked_by_v = near_set(v);
      const Word blocked_by_rest = near_set(v & ~bi);
      for (Word u : w4) {
        if (!(u & bpi)) continue;
        // pi(i) may only meet i itself; every other pair must be independent.
        if ((u & ~bpi) & blocked_by_v) continue;
        if (bpi & blocked_by_rest) continue;
        const Word p1 = star(v, u, pi), p2 = star(v, u, tau);
        if (p2 != (v ^ u) || popcount(p1 ^ p2) != 2) continue;
        return ConflictWitness{BinaryWord(n, v), BinaryWord(n, u), i, BinaryWord(n, p1), BinaryWord(n, p2)};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

enum : std::uint8_t { kUnknown = 0, kIn = 1, kOut = 2 };

// The even (or odd) words are the candidates; every word of the other parity
// must be at distance 1 from exactly one chosen candidate.
class Completion {
 public:
  Completion(const BinaryCode& p, const CompletionOptions& opts) : opts_(opts), n_(p.length()) {
    if (n_ > 24) throw BudgetExceeded("completion supports lengths up to 24");
    if (!std::has_single_bit(n_)) throw Infeasible("no extended 1-perfect code of this length");
    space_ = std::size_t{1} << n_;
    target_ = space_ / 2 / n_;
    parity_ = popcount(p[0]) & 1u;
    for (Word w : p.words())
      if ((popcount(w) & 1u) != parity_) throw Infeasible("words of both parities");
    status_.assign(space_, kUnknown);
    covered_.assign(space_, 0);
    unknown_ = space_ / 2;
    p_ = p.words();
  }

  struct State {
    std::vector<std::uint8_t> status, covered;
    std::uint64_t in = 0, unknown = 0;
  };

  // Returns the number of solutions found (stopping at `want`).
  std::uint64_t solve(std::uint64_t want, std::vector<Word>* first, CompletionStats* stats) {
    State s{status_, covered_, 0, unknown_};
    std::deque<Word> work;
    bool ok = true;
    if (opts_.reverse_order) {
      for (auto it = p_.rbegin(); it != p_.rend() && ok; ++it) ok = set_in(s, *it, work);
    } else {
      for (auto it = p_.begin(); it != p_.end() && ok; ++it) ok = set_in(s, *it, work);
    }
    if (!ok) throw Infeasible("the input words conflict");
    stats_ = stats;
    want_ = want;
    first_ = first;
    found_ = 0;
    search(std::move(s), std::move(work));
    return found_;
  }

 private:
  bool candidate(Word w) const { return (popcount(w) & 1u) == parity_; }

  bool set_in(State& s, Word w, std::deque<Word>& work) {
    if (s.status[w] == kIn) return true;
    if (s.status[w] == kOut) return false;
    s.status[w] = kIn;
    ++s.in;
    --s.unknown;
    for (unsigned i = 0; i < n_; ++i) {
      const Word o = w ^ (Word{1} << i);
      if (++s.covered[o] > 1) return false;
      work.push_back(o);
    }
    return true;
  }

  void set_out(State& s, Word w, std::deque<Word>& work) {
    s.status[w] = kOut;
    --s.unknown;
    for (unsigned i = 0; i < n_; ++i) work.push_back(w ^ (Word{1} << i));
  }

  bool propagate(State& s, std::deque<Word>& work) {
    for (;;) {
      while (!work.empty()) {
        const Word o = work.front();
        work.pop_front();
        if (s.covered[o] == 1) {
          for (unsigned i = 0; i < n_; ++i) {
            const Word e = o ^ (Word{1} << i);
            if (s.status[e] == kUnknown) set_out(s, e, work);
          }
          continue;
        }
        unsigned cnt = 0;
        Word last = 0;
        for (unsigned i = 0; i < n_; ++i) {
          const Word e = o ^ (Word{1} << i);
          if (s.status[e] != kOut) ++cnt, last = e;
        }
        if (cnt == 0) return false;
        if (cnt == 1) {
          if (stats_) ++stats_->forced;
          if (!set_in(s, last, work)) return false;
        }
      }
      if (s.in > target_ || s.in + s.unknown < target_) return false;
      if (s.unknown == 0 || s.in + s.unknown != target_) return true;
      // Cardinality: every remaining candidate is needed.
      for (std::size_t k = 0; k < space_; ++k) {
        const Word w = opts_.reverse_order ? space_ - 1 - k : k;
        if (candidate(w) && s.status[w] == kUnknown) {
          if (stats_) ++stats_->forced;
          if (!set_in(s, w, work)) return false;
        }
      }
    }
  }

  void search(State s, std::deque<Word> work) {
    if (found_ >= want_) return;
    if (stats_ && ++stats_->backtrack_nodes > opts_.max_backtrack_nodes) throw Stalled("completion budget exhausted");
    if (!propagate(s, work)) return;
    if (s.unknown == 0) {
      if (s.in != target_) return;
      if (found_++ == 0 && first_) {
        first_->clear();
        for (std::size_t w = 0; w < space_; ++w)
          if (s.status[w] == kIn) first_->push_back(w);
      }
      return;
    }
    // Branch on the uncovered word with the fewest remaining candidates.
    Word best = 0;
    unsigned best_cnt = n_ + 1;
    for (std::size_t k = 0; k < space_; ++k) {
      const Word o = opts_.reverse_order ? space_ - 1 - k : k;
      if (candidate(o) || s.covered[o]) continue;
      unsigned cnt = 0;
      for (unsigned i = 0; i < n_; ++i) cnt += s.status[o ^ (Word{1} << i)] == kUnknown;
      if (cnt < best_cnt) best_cnt = cnt, best = o;
    }
    std::vector<Word> cands;
    for (unsigned i = 0; i < n_; ++i) {
      const Word e = best ^ (Word{1} << i);
      if (s.status[e] == kUnknown) cands.push_back(e);
    }
    std::sort(cands.begin(), cands.end());
    if (opts_.reverse_order) std::reverse(cands.begin(), cands.end());
    for (Word e : cands) {
      State t = s;
      std::deque<Word> w2;
      if (set_in(t, e, w2)) search(std::move(t), std::move(w2));
      if (found_ >= want_) return;
    }
  }

  const CompletionOptions& opts_;
  unsigned n_;
  std::size_t space_ = 0;
  std::uint64_t target_ = 0;
  unsigned parity_ = 0;
  std::vector<std::uint8_t> status_, covered_;
  std::uint64_t unknown_ = 0;
  std::span<const Word> p_;
  CompletionStats* stats_ = nullptr;
  std::uint64_t want_ = 1, found_ = 0;
  std::vector<Word>* first_ = nullptr;
};

}  // namespace

BinaryCode complete_to_extended_perfect(const BinaryCode& p, const CompletionOptions& opts, CompletionStats* stats) {
  const CodeClass cls = classify(p);
  if (cls == CodeClass::extended_perfect) return p;
  if (cls != CodeClass::preparata_like) throw PreconditionViolation("input is not a Preparata-like code");
  std::vector<Word> words;
  CompletionStats local;
  if (!stats) stats = &local;
  if (Completion(p, opts).solve(1, &words, stats) == 0) throw Infeasible("no extended 1-perfect code contains the input");
  BinaryCode c(p.length(), std::move(words));
  if (classify(c) != CodeClass::extended_perfect) throw Infeasible("completion is not extended 1-perfect");
  for (Word w : p.words())
    if (!c.contains(w)) throw Infeasible("completion does not contain the input");
  return c;
}

std::uint64_t count_completions(const BinaryCode& p, std::uint64_t limit, const CompletionOptions& opts) {
  CompletionStats stats;
  return Completion(p, opts).solve(limit, nullptr, &stats);
}

// ---------------------------------------------------------------------------

Theorem1Report verify_theorem1(const PerfectParams& p, Family family, const SymmetryOptions& opts) {
  const AdditiveCode code = family == Family::mixed ? construct_extended_perfect(p) : construct_z4_extended_perfect(p);
  const BinaryCode img = code.gray_image();
  const Involution pi = standard_involution(code.alpha(), code.beta());
  SymmetryOptions o = opts;
  o.structure = &pi;
  const SymmetryResult sym = symmetry_group(img, o);

  Theorem1Report r;
  r.params = p;
  r.family = family;
  r.n = img.length();
  r.type = {code.alpha(), code.beta()};
  r.rank = rank(img);
  r.certified = sym.certified;
  r.sym_order = sym.group.order();
  r.sym_pi_order = sym_pi(sym.group, pi).order();
  r.structures = enumerate_structures(img, sym.group, family == Family::mixed ? "eperfect" : "z4eperfect");
  if (r.n > 16)
    r.holds = r.certified && r.structures.structures.size() == 1 && r.structures.structures[0] == pi &&
              r.sym_order == r.sym_pi_order;
  return r;
}

}  // namespace z2z4

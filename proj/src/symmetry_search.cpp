#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>

#include "z2z4/closure.hpp"
#include "z2z4/kernels.hpp"
#include "z2z4/symmetry.hpp"

namespace z2z4 {

namespace {

constexpr std::uint64_t mix(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Byte-sliced image tables: sigma(x) is the OR of eight lookups.
class PermTable {
 public:
  explicit PermTable(const CoordPermutation& s) {
    for (unsigned byte = 0; byte < 8; ++byte)
      for (unsigned v = 0; v < 256; ++v) {
        Word img = 0;
        for (unsigned b = 0; b < 8; ++b) {
          const unsigned i = 8 * byte + b;
          if (((v >> b) & 1u) && i < s.size()) img |= Word{1} << s(i);
        }
        table_[byte][v] = img;
      }
  }
  Word operator()(Word x) const noexcept {
    Word r = 0;
    for (unsigned byte = 0; byte < 8 && x; ++byte, x >>= 8) r |= table_[byte][x & 0xff];
    return r;
  }

 private:
  std::array<std::array<Word, 256>, 8> table_{};
};

unsigned thread_count(unsigned requested) {
  if (requested) return requested;
  if (const char* env = std::getenv("Z2Z4_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(std::min(v, 256));
  }
  return 1;
}

bool all_images_in(const PermTable& t, std::span<const Word> words, const BinaryCode& code, unsigned threads) {
  if (threads <= 1 || words.size() < (std::size_t{1} << 16)) {
    for (Word w : words)
      if (!code.contains(t(w))) return false;
    return true;
  }
  std::atomic<bool> ok{true};
  std::vector<std::thread> pool;
  const std::size_t chunk = (words.size() + threads - 1) / threads;
  for (unsigned k = 0; k < threads; ++k) {
    const std::size_t lo = std::min(words.size(), k * chunk), hi = std::min(words.size(), lo + chunk);
    pool.emplace_back([&, lo, hi] {
      for (std::size_t i = lo; i < hi && ok.load(std::memory_order_relaxed); ++i)
        if (!code.contains(t(words[i]))) ok.store(false, std::memory_order_relaxed);
    });
  }
  for (auto& th : pool) th.join();
  return ok.load();
}

struct Partition {
  std::vector<std::vector<std::uint8_t>> cells;
  std::array<std::uint8_t, kMaxLength> cell_of{};

  void reindex() {
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (auto p : cells[c]) cell_of[p] = static_cast<std::uint8_t>(c);
  }
};

Partition individualize(const Partition& p, unsigned cell, unsigned v) {
  Partition q;
  q.cells.reserve(p.cells.size() + 1);
  for (unsigned c = 0; c < p.cells.size(); ++c) {
    if (c != cell) {
      q.cells.push_back(p.cells[c]);
      continue;
    }
    q.cells.push_back({static_cast<std::uint8_t>(v)});
    std::vector<std::uint8_t> rest;
    for (auto x : p.cells[c])
      if (x != v) rest.push_back(x);
    q.cells.push_back(std::move(rest));
  }
  q.reindex();
  return q;
}

struct BlockClass {
  std::uint64_t tag;
  std::vector<Word> blocks;  // sorted
};

// Equitable-style refinement against block incidences: a point's signature is
// a commutative hash over the blocks through it of the multiset of cells the
// block meets. Cells split by signature value in increasing order, so the
// result depends only on the labelled structure, never on point names.
class Refiner {
 public:
  Refiner(unsigned n, std::vector<BlockClass> classes) : n_(n), classes_(std::move(classes)) {}

  std::uint64_t refine(Partition& p) const {
    std::uint64_t trace = mix(p.cells.size());
    std::array<std::uint64_t, kMaxLength> sig{};
    for (;;) {
      if (p.cells.size() == n_) break;
      sig.fill(0);
      for (const auto& cls : classes_) {
        for (Word b : cls.blocks) {
          std::uint64_t h = 0;
          for (Word m = b; m; m &= m - 1) h += mix(p.cell_of[std::countr_zero(m)] + 1);
          h = mix(h ^ cls.tag);
          for (Word m = b; m; m &= m - 1) sig[std::countr_zero(m)] += h;
        }
      }
      std::vector<std::vector<std::uint8_t>> next;
      next.reserve(n_);
      bool split = false;
      for (std::size_t c = 0; c < p.cells.size(); ++c) {
        auto cell = p.cells[c];
        if (cell.size() > 1) {
          std::stable_sort(cell.begin(), cell.end(), [&](auto a, auto b) { return sig[a] < sig[b]; });
          if (sig[cell.front()] != sig[cell.back()]) {
            split = true;
            std::size_t start = 0;
            for (std::size_t i = 1; i <= cell.size(); ++i) {
              if (i == cell.size() || sig[cell[i]] != sig[cell[start]]) {
                trace = mix(trace ^ mix(c * 131 + (i - start)) ^ sig[cell[start]]);
                std::vector<std::uint8_t> part(cell.begin() + start, cell.begin() + i);
                std::sort(part.begin(), part.end());
                next.push_back(std::move(part));
                start = i;
              }
            }
            continue;
          }
        }
        next.push_back(p.cells[c]);
      }
      if (!split) break;
      p.cells = std::move(next);
      p.reindex();
    }
    return mix(trace ^ p.cells.size());
  }

 private:
  unsigned n_;
  std::vector<BlockClass> classes_;
};

struct PathNode {
  Partition part;  // before individualization
  unsigned target = 0;
  unsigned point = 0;
  std::uint64_t child_trace = 0;
};

class Search {
 public:
  Search(const BinaryCode& code, const SymmetryOptions& opts)
      : code_(code), opts_(opts), n_(code.length()), threads_(thread_count(opts.threads)),
        start_(std::chrono::steady_clock::now()) {
    build_classes();
    if (opts.structure && opts.structure->size() == n_ && code.contains_zero())
      structure_closed_ = is_closed_under_star(code, *opts.structure, {}, &structure_gens_);
  }

  SymmetryResult run() {
    // Large classes refine the root only; below it they cost far more than
    // the nodes they prune.
    std::vector<BlockClass> node_classes;
    for (const auto& cls : classes_)
      if (cls.blocks.size() <= opts_.node_class_cap) node_classes.push_back(cls);
    const Refiner refiner(n_, node_classes);
    Partition root;
    std::vector<std::uint8_t> all(n_);
    for (unsigned i = 0; i < n_; ++i) all[i] = static_cast<std::uint8_t>(i);
    if (n_) root.cells.push_back(all);
    root.reindex();
    Refiner(n_, classes_).refine(root);
    refiner.refine(root);

    std::vector<PathNode> path;
    Partition cur = root;
    while (cur.cells.size() < n_) {
      unsigned target = 0;
      std::size_t best = n_ + 1;
      for (unsigned c = 0; c < cur.cells.size(); ++c)
        if (cur.cells[c].size() > 1 && cur.cells[c].size() < best) best = cur.cells[c].size(), target = c;
      const unsigned b = *std::min_element(cur.cells[target].begin(), cur.cells[target].end());
      Partition child = individualize(cur, target, b);
      const std::uint64_t t = refiner.refine(child);
      path.push_back({cur, target, b, t});
      cur = std::move(child);
    }
    left_leaf_ = cur;
    path_ = &path;
    refiner_ = &refiner;

    std::vector<std::pair<CoordPermutation, unsigned>> found;  // generator, level
    std::vector<unsigned> base;
    for (const auto& node : path) base.push_back(node.point);
    BigInt order = 1;
    for (int l = static_cast<int>(path.size()) - 1; l >= 0; --l) {
      const PathNode& node = path[l];
      std::vector<unsigned> parent(n_);
      for (unsigned i = 0; i < n_; ++i) parent[i] = i;
      auto find = [&](unsigned x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      auto unite = [&](const CoordPermutation& g) {
        for (unsigned i = 0; i < n_; ++i) {
          const unsigned a = find(i), b = find(g(i));
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
      };
      for (const auto& [g, lvl] : found) unite(g);
      std::vector<unsigned> failed;
      auto cell = node.part.cells[node.target];
      std::sort(cell.begin(), cell.end());
      for (unsigned v : cell) {
        if (v == node.point || find(v) == find(node.point)) continue;
        if (std::any_of(failed.begin(), failed.end(), [&](unsigned f) { return find(f) == find(v); })) continue;
        if (timed_out()) break;
        Partition q = individualize(node.part, node.target, v);
        std::optional<CoordPermutation> g;
        if (refiner.refine(q) == node.child_trace) g = explore(q, static_cast<unsigned>(l) + 1);
        if (g) {
          found.emplace_back(*g, static_cast<unsigned>(l));
          unite(*g);
        } else {
          failed.push_back(v);
        }
      }
      const auto orbit = std::count_if(cell.begin(), cell.end(), [&](unsigned v) { return find(v) == find(node.point); });
      order *= static_cast<unsigned>(orbit);
    }

    SymmetryResult res;
    res.certified = !timed_out_;
    for (const auto& [g, lvl] : found) res.generators.push_back(g);
    std::sort(res.generators.begin(), res.generators.end());
    res.group = PermGroup::from_generators(n_, res.generators, base);
    if (res.certified && res.group.order() != order)
      throw std::logic_error("symmetry search: orbit product disagrees with the group order");
    stats_.seconds = elapsed();
    res.stats = stats_;
    return res;
  }

 private:
  void build_classes() {
    kernels::WeightHistogram hist{};
    kernels::weight_histogram(code_.words(), hist);
    std::vector<unsigned> weights;
    for (unsigned w = 1; w <= n_ && weights.size() < 2; ++w)
      if (hist[w]) weights.push_back(w);
    for (std::size_t k = 0; k < weights.size(); ++k) {
      if (k == 1 && hist[weights[k]] > opts_.second_class_cap) break;
      BlockClass cls{mix(weights[k]), {}};
      for (Word x : code_.words())
        if (popcount(x) == weights[k]) cls.blocks.push_back(x);
      classes_.push_back(std::move(cls));
    }
    if (opts_.commute_with) {
      const Involution& pi = *opts_.commute_with;
      if (pi.size() != n_) throw LengthMismatch("involution degree differs from code length");
      BlockClass pairs{mix(1000), {}}, fixed{mix(1001), {}};
      for (unsigned i = 0; i < n_; ++i) {
        if (pi(i) == i)
          fixed.blocks.push_back(Word{1} << i);
        else if (i < pi(i))
          pairs.blocks.push_back((Word{1} << i) | (Word{1} << pi(i)));
      }
      classes_.push_back(std::move(pairs));
      classes_.push_back(std::move(fixed));
    }
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  bool timed_out() {
    if (!timed_out_ && opts_.timeout_s > 0 && elapsed() > opts_.timeout_s) timed_out_ = true;
    return timed_out_;
  }

  std::optional<CoordPermutation> explore(const Partition& q, unsigned depth) {
    ++stats_.nodes;
    const auto& path = *path_;
    if (depth == path.size()) {
      if (q.cells.size() != n_) return std::nullopt;
      std::vector<unsigned> img(n_);
      for (unsigned c = 0; c < n_; ++c) img[left_leaf_.cells[c][0]] = q.cells[c][0];
      CoordPermutation sigma(img);
      ++stats_.leaves;
      if (accept(sigma)) return sigma;
      return std::nullopt;
    }
    const PathNode& node = path[depth];
    if (q.cells.size() != node.part.cells.size() || q.cells[node.target].size() != node.part.cells[node.target].size())
      return std::nullopt;
    for (unsigned w : q.cells[node.target]) {
      if (timed_out()) return std::nullopt;
      Partition q2 = individualize(q, node.target, w);
      if (refiner_->refine(q2) != node.child_trace) continue;
      if (auto g = explore(q2, depth + 1)) return g;
    }
    return std::nullopt;
  }

  bool accept(const CoordPermutation& sigma) {
    if (opts_.commute_with) {
      const auto& pi = opts_.commute_with->perm();
      if (!(sigma * pi == pi * sigma)) return false;
    }
    const PermTable t(sigma);
    for (const auto& cls : classes_)
      for (Word b : cls.blocks)
        if (!std::binary_search(cls.blocks.begin(), cls.blocks.end(), t(b))) return false;
    if (structure_closed_) {
      const auto& pi = opts_.structure->perm();
      if (sigma * pi == pi * sigma) {
        // sigma(x *_pi y) = sigma(x) *_pi sigma(y), so sigma(C) is the *_pi-span
        // of the generator images and C is *_pi-closed.
        ++stats_.generator_checks;
        return std::all_of(structure_gens_.begin(), structure_gens_.end(),
                           [&](Word g) { return code_.contains(t(g)); });
      }
    }
    // Cheap sampled rejection before the full scan.
    const auto words = code_.words();
    if (words.size() > 4096) {
      std::mt19937_64 rng(0xc0dec0deULL);
      std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
      for (int k = 0; k < 1024; ++k)
        if (!code_.contains(t(words[pick(rng)]))) return false;
    }
    ++stats_.full_checks;
    return all_images_in(t, words, code_, threads_);
  }

  const BinaryCode& code_;
  const SymmetryOptions& opts_;
  unsigned n_;
  unsigned threads_;
  std::chrono::steady_clock::time_point start_;
  std::vector<BlockClass> classes_;
  bool structure_closed_ = false;
  std::vector<Word> structure_gens_;
  bool timed_out_ = false;
  SymmetryStats stats_;
  Partition left_leaf_;
  const std::vector<PathNode>* path_ = nullptr;
  const Refiner* refiner_ = nullptr;
};

}  // namespace

SymmetryResult symmetry_group(const BinaryCode& code, const SymmetryOptions& opts) {
  if (code.empty()) throw InvalidArgument("symmetry group of an empty code");
  return Search(code, opts).run();
}

bool stabilizes(const CoordPermutation& sigma, const BinaryCode& code, unsigned threads) {
  if (sigma.size() != code.length()) throw LengthMismatch("permutation degree differs from code length");
  return all_images_in(PermTable(sigma), code.words(), code, thread_count(threads));
}

}  // namespace z2z4

#include "z2z4/closure.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "z2z4/kernels.hpp"

namespace z2z4 {

namespace {

constexpr std::size_t kChunk = 4096;

bool all_pairs_closed(const BinaryCode& set, const BatchOp& op) {
  const auto words = set.words();
  std::vector<Word> out(kChunk);
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i; j < words.size(); j += kChunk) {
      const std::size_t len = std::min(kChunk, words.size() - j);
      op(words.subspan(j, len), words[i], std::span<Word>(out.data(), len));
      for (std::size_t k = 0; k < len; ++k)
        if (!set.contains(out[k])) return false;
    }
  }
  return true;
}

}  // namespace

bool is_closed_under_op(const BinaryCode& set, const BatchOp& op, const ClosureOptions& opts,
                        std::vector<Word>* generators) {
  if (generators) generators->clear();
  if (set.empty() || !set.contains_zero()) return false;
  const std::size_t size = set.size();
  if (!std::has_single_bit(size)) return false;
  const auto words = set.words();

  const bool small = static_cast<unsigned __int128>(size) * size <= opts.pair_limit;
  if (small && !generators) return all_pairs_closed(set, op);

  if (!small) {
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_int_distribution<std::size_t> pick(0, size - 1);
    for (unsigned k = 0; k < opts.probe_pairs; ++k) {
      const Word x = words[pick(rng)];
      Word p;
      op(std::span<const Word>(&x, 1), words[pick(rng)], std::span<Word>(&p, 1));
      if (!set.contains(p)) return false;
    }
  }

  // Subgroup H as a bitmap over the set's indices plus the list of its members.
  std::vector<std::uint64_t> in_h((size + 63) / 64, 0);
  std::vector<std::uint32_t> members;
  members.reserve(size);
  auto mark = [&](std::size_t idx) {
    in_h[idx >> 6] |= std::uint64_t{1} << (idx & 63);
    members.push_back(static_cast<std::uint32_t>(idx));
  };
  auto marked = [&](std::size_t idx) { return (in_h[idx >> 6] >> (idx & 63)) & 1u; };
  mark(0);

  std::vector<Word> gather(kChunk), out(kChunk);
  std::size_t next = 1;
  while (members.size() < size) {
    while (marked(next)) ++next;
    const Word g = words[next];
    if (generators) generators->push_back(g);
    const std::size_t m = members.size();
    Word cur = g;
    for (;;) {
      const auto ci = set.index_of(cur);
      if (!ci) return false;
      if (marked(*ci)) break;
      // Coset cur + H.
      for (std::size_t j = 0; j < m; j += kChunk) {
        const std::size_t len = std::min(kChunk, m - j);
        for (std::size_t k = 0; k < len; ++k) gather[k] = words[members[j + k]];
        op(std::span<const Word>(gather.data(), len), cur, std::span<Word>(out.data(), len));
        for (std::size_t k = 0; k < len; ++k) {
          const auto idx = set.index_of(out[k]);
          if (!idx || marked(*idx)) return false;
          mark(*idx);
        }
      }
      Word nxt;
      op(std::span<const Word>(&cur, 1), g, std::span<Word>(&nxt, 1));
      cur = nxt;
    }
  }
  return true;
}

bool is_closed_under_star(const BinaryCode& code, const Involution& pi, const ClosureOptions& opts,
                          std::vector<Word>* generators) {
  if (pi.size() != code.length()) throw LengthMismatch("involution degree differs from code length");
  const TwistSpec& twist = pi.twist();
  BatchOp op = [&twist](std::span<const Word> xs, Word y, std::span<Word> out) {
    kernels::star_batch(xs, y, twist, out);
  };
  return is_closed_under_op(code, op, opts, generators);
}

}  // namespace z2z4

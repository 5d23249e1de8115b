#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bitgraph/bits/bitvec.hpp"
#include "bitgraph/bits/wordops.hpp"

namespace bitgraph {

/// Set-only dynamic bit vector: bits transition 0 -> 1 and never back.
/// Single writer, no concurrent mutation contract.
///
/// rank/select stay consistent with the payload after every set1. The
/// directory is two-level like BitVec's, but updatable: 16-bit popcounts per
/// 512-bit block plus Fenwick-style cumulative counters over 4096-bit
/// superblocks, so set1 costs O(lg #superblocks) counter updates.
///
/// Size in bits (length L > 0), reported exactly by bits_of():
///   64*ceil(L/64) + 16*(floor(L/512)+1) + 32*(ceil(L/4096)+1)
class MarkVec {
 public:
  static constexpr uint64_t kSuperBits = 4096;
  static constexpr uint64_t kBlockBits = 512;

  MarkVec() = default;
  explicit MarkVec(uint64_t length) : len_(length) {
    if (len_ == 0) return;
    words_.assign(detail::words_for(len_), 0);
    pc_.assign(len_ / kBlockBits + 1, 0);
    fen_.assign((len_ + kSuperBits - 1) / kSuperBits + 1, 0);
  }

  uint64_t size() const { return len_; }
  uint64_t popcount() const { return ones_; }

  bool access(uint64_t pos) const {
    assert(pos < len_);
    return (words_[pos >> 6] >> (pos & 63)) & 1;
  }

  void prefetch(uint64_t pos) const {
    if (pos < len_) __builtin_prefetch(&words_[pos >> 6]);
  }

  /// Sets bit `pos`; a second set of the same position is a no-op.
  void set1(uint64_t pos) {
    if (pos >= len_) throw std::out_of_range("MarkVec::set1: position out of range");
    uint64_t& w = words_[pos >> 6];
    const uint64_t bit = uint64_t{1} << (pos & 63);
    if (w & bit) return;
    w |= bit;
    ++pc_[pos / kBlockBits];
    fen_add(pos / kSuperBits, 1);
    ++ones_;
  }

  uint64_t rank1(uint64_t pos) const {
    assert(pos <= len_);
    if (pos == 0) return 0;
    const uint64_t sb = pos / kSuperBits, b = pos / kBlockBits;
    uint64_t r = fen_prefix(sb);
    for (uint64_t blk = sb * (kSuperBits / kBlockBits); blk < b; ++blk) r += pc_[blk];
    const uint64_t word_at = pos >> 6;
    for (uint64_t w = b * (kBlockBits / 64); w < word_at; ++w) r += std::popcount(words_[w]);
    if (pos & 63) r += std::popcount(words_[word_at] & detail::low_mask(pos & 63));
    return r;
  }

  std::optional<uint64_t> select1(uint64_t k) const {
    if (k == 0 || k > ones_) return std::nullopt;
    // Fenwick descend: largest superblock index whose prefix count is < k.
    uint64_t idx = 0, rem = k;
    for (uint64_t step = std::bit_floor(fen_.size() - 1); step > 0; step /= 2) {
      if (idx + step <= fen_.size() - 1 && fen_[idx + step] < rem) {
        idx += step;
        rem -= fen_[idx];
      }
    }
    uint64_t b = idx * (kSuperBits / kBlockBits);
    while (pc_[b] < rem) rem -= pc_[b++];
    for (uint64_t w = b * (kBlockBits / 64);; ++w) {
      const uint64_t c = std::popcount(words_[w]);
      if (c >= rem) return w * 64 + detail::select_in_word(words_[w], static_cast<uint32_t>(rem));
      rem -= c;
    }
  }

  /// Largest set position in [lo, hi), or none. Empty range yields none.
  std::optional<uint64_t> rightmost_set_in_range(uint64_t lo, uint64_t hi) const {
    assert(lo <= hi && hi <= len_);
    return BitVec::detail_scan_back(words_, lo, hi);
  }

  /// Smallest set position in [lo, hi), or none.
  std::optional<uint64_t> leftmost_set_in_range(uint64_t lo, uint64_t hi) const {
    assert(lo <= hi && hi <= len_);
    return BitVec::detail_scan_forward(words_, lo, hi);
  }

  /// Exact allocated size in bits; see class comment for the formula.
  uint64_t bits_of() const {
    if (len_ == 0) return 0;
    return 64 * words_.size() + 16 * pc_.size() + 32 * fen_.size();
  }

  /// Converts to a static BitVec, reusing the payload words.
  BitVec freeze() && { return BitVec::from_words(len_, std::move(words_)); }

 private:
  void fen_add(uint64_t sb, uint32_t delta) {
    for (uint64_t i = sb + 1; i < fen_.size(); i += i & (~i + 1)) fen_[i] += delta;
  }
  // Sum of superblock totals for superblocks [0, sb).
  uint64_t fen_prefix(uint64_t sb) const {
    uint64_t s = 0;
    for (uint64_t i = sb; i > 0; i -= i & (~i + 1)) s += fen_[i];
    return s;
  }

  uint64_t len_ = 0;
  uint64_t ones_ = 0;
  std::vector<uint64_t> words_;
  std::vector<uint16_t> pc_;
  std::vector<uint32_t> fen_;
};

}  // namespace bitgraph

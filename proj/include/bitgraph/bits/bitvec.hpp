#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bitgraph/bits/wordops.hpp"

namespace bitgraph {

/// Static bit sequence with rank/select support. Immutable after build and
/// safe for concurrent reads.
///
/// Layout: the payload is packed into 64-bit words. A two-level directory
/// accelerates rank: superblocks of 4096 bits store absolute 32-bit counts,
/// blocks of 512 bits store 16-bit counts relative to their superblock.
/// rank1 is O(1); select1/select0 binary-search the superblock directory and
/// then scan at most eight block counters and eight words.
///
/// Size in bits (length L > 0), reported exactly by bits_of():
///   64*ceil(L/64) + 32*(floor(L/4096)+1) + 16*(floor(L/512)+1)
/// An empty vector owns no storage and reports 0.
class BitVec {
 public:
  static constexpr uint64_t kSuperBits = 4096;
  static constexpr uint64_t kBlockBits = 512;

  BitVec() = default;

  /// Takes ownership of pre-packed payload words; bits at positions >= length
  /// must be zero.
  static BitVec from_words(uint64_t length, std::vector<uint64_t> words) {
    BitVec bv;
    bv.len_ = length;
    bv.words_ = std::move(words);
    bv.words_.resize(detail::words_for(length), 0);
    bv.build_directory();
    return bv;
  }

  uint64_t size() const { return len_; }
  bool empty() const { return len_ == 0; }
  uint64_t ones() const { return ones_; }

  bool access(uint64_t pos) const {
    assert(pos < len_);
    return (words_[pos >> 6] >> (pos & 63)) & 1;
  }

  /// Number of set bits in [0, pos). pos may equal size().
  uint64_t rank1(uint64_t pos) const {
    assert(pos <= len_);
    if (pos == 0) return 0;
    const uint64_t sb = pos / kSuperBits, b = pos / kBlockBits;
    uint64_t r = super_[sb] + block_[b];
    const uint64_t word_begin = b * (kBlockBits / 64), word_at = pos >> 6;
    for (uint64_t w = word_begin; w < word_at; ++w) r += std::popcount(words_[w]);
    if (pos & 63) r += std::popcount(words_[word_at] & detail::low_mask(pos & 63));
    return r;
  }

  uint64_t rank0(uint64_t pos) const { return pos - rank1(pos); }

  /// Position of the k-th set bit, k in [1, ones()]. None if out of range.
  std::optional<uint64_t> select1(uint64_t k) const {
    if (k == 0 || k > ones_) return std::nullopt;
    // Largest superblock whose prefix count is < k.
    uint64_t lo = 0, hi = super_.size() - 1;
    while (lo < hi) {
      const uint64_t mid = (lo + hi + 1) / 2;
      if (super_[mid] < k) lo = mid; else hi = mid - 1;
    }
    uint64_t rem = k - super_[lo];
    uint64_t b = lo * (kSuperBits / kBlockBits);
    const uint64_t b_end = std::min<uint64_t>(block_.size() - 1, (lo + 1) * (kSuperBits / kBlockBits));
    while (b + 1 <= b_end && block_[b + 1] < rem && (b + 1) % (kSuperBits / kBlockBits) != 0) ++b;
    rem -= block_[b];
    for (uint64_t w = b * (kBlockBits / 64);; ++w) {
      const uint64_t c = std::popcount(words_[w]);
      if (c >= rem) return w * 64 + detail::select_in_word(words_[w], static_cast<uint32_t>(rem));
      rem -= c;
    }
  }

  /// Position of the k-th zero bit, k in [1, size()-ones()].
  std::optional<uint64_t> select0(uint64_t k) const {
    if (k == 0 || k > len_ - ones_) return std::nullopt;
    const auto zeros_before_super = [&](uint64_t s) { return s * kSuperBits - super_[s]; };
    uint64_t lo = 0, hi = super_.size() - 1;
    while (lo < hi) {
      const uint64_t mid = (lo + hi + 1) / 2;
      if (zeros_before_super(mid) < k) lo = mid; else hi = mid - 1;
    }
    uint64_t rem = k - zeros_before_super(lo);
    uint64_t b = lo * (kSuperBits / kBlockBits);
    const uint64_t b_end = std::min<uint64_t>(block_.size() - 1, (lo + 1) * (kSuperBits / kBlockBits));
    const auto zeros_in_block_prefix = [&](uint64_t blk) {
      return (blk - lo * (kSuperBits / kBlockBits)) * kBlockBits - block_[blk];
    };
    while (b + 1 <= b_end && (b + 1) % (kSuperBits / kBlockBits) != 0 && zeros_in_block_prefix(b + 1) < rem) ++b;
    rem -= zeros_in_block_prefix(b);
    for (uint64_t w = b * (kBlockBits / 64);; ++w) {
      const uint64_t c = std::popcount(~words_[w]);
      if (c >= rem) return w * 64 + detail::select_in_word(~words_[w], static_cast<uint32_t>(rem));
      rem -= c;
    }
  }

  /// Largest set position in [lo, hi), scanning words from the top.
  std::optional<uint64_t> rightmost_set_in_range(uint64_t lo, uint64_t hi) const {
    assert(lo <= hi && hi <= len_);
    return detail_scan_back(words_, lo, hi);
  }

  /// Smallest set position in [lo, hi), scanning words from the bottom.
  std::optional<uint64_t> leftmost_set_in_range(uint64_t lo, uint64_t hi) const {
    assert(lo <= hi && hi <= len_);
    return detail_scan_forward(words_, lo, hi);
  }

  /// Exact allocated size in bits; see class comment for the formula.
  uint64_t bits_of() const {
    if (len_ == 0) return 0;
    return 64 * words_.size() + 32 * super_.size() + 16 * block_.size();
  }

  const std::vector<uint64_t>& words() const { return words_; }

  static std::optional<uint64_t> detail_scan_back(const std::vector<uint64_t>& words,
                                                  uint64_t lo, uint64_t hi) {
    if (lo >= hi) return std::nullopt;
    uint64_t w = (hi - 1) >> 6;
    const uint64_t w_lo = lo >> 6;
    uint64_t cur = words[w] & detail::low_mask(((hi - 1) & 63) + 1);
    while (true) {
      if (w == w_lo) cur &= ~detail::low_mask(lo & 63);
      if (cur != 0) return w * 64 + (63 - std::countl_zero(cur));
      if (w == w_lo) return std::nullopt;
      cur = words[--w];
    }
  }

  static std::optional<uint64_t> detail_scan_forward(const std::vector<uint64_t>& words,
                                                     uint64_t lo, uint64_t hi) {
    if (lo >= hi) return std::nullopt;
    uint64_t w = lo >> 6;
    const uint64_t w_hi = (hi - 1) >> 6;
    uint64_t cur = words[w] & ~detail::low_mask(lo & 63);
    while (true) {
      if (w == w_hi) cur &= detail::low_mask(((hi - 1) & 63) + 1);
      if (cur != 0) return w * 64 + std::countr_zero(cur);
      if (w == w_hi) return std::nullopt;
      cur = words[++w];
    }
  }

 private:
  void build_directory() {
    const uint64_t nb = len_ / kBlockBits + 1, nsb = len_ / kSuperBits + 1;
    super_.assign(nsb, 0);
    block_.assign(nb, 0);
    uint64_t total = 0, in_super = 0;
    for (uint64_t b = 0; b < nb; ++b) {
      if (b % (kSuperBits / kBlockBits) == 0) {
        super_[b / (kSuperBits / kBlockBits)] = static_cast<uint32_t>(total);
        in_super = 0;
      }
      block_[b] = static_cast<uint16_t>(in_super);
      const uint64_t w_begin = b * (kBlockBits / 64);
      const uint64_t w_end = std::min<uint64_t>(words_.size(), (b + 1) * (kBlockBits / 64));
      for (uint64_t w = w_begin; w < w_end; ++w) {
        const uint64_t c = std::popcount(words_[w]);
        total += c;
        in_super += c;
      }
    }
    ones_ = total;
  }

  uint64_t len_ = 0;
  uint64_t ones_ = 0;
  std::vector<uint64_t> words_;
  std::vector<uint32_t> super_;
  std::vector<uint16_t> block_;
};

/// Incremental builder for BitVec payloads.
class BitBuilder {
 public:
  void push_back(bool bit) {
    if ((len_ & 63) == 0) words_.push_back(0);
    if (bit) words_.back() |= uint64_t{1} << (len_ & 63);
    ++len_;
  }
  void append_zeros(uint64_t count) {
    len_ += count;
    words_.resize(detail::words_for(len_), 0);
  }
  uint64_t size() const { return len_; }
  BitVec build() && { return BitVec::from_words(len_, std::move(words_)); }

 private:
  uint64_t len_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace bitgraph

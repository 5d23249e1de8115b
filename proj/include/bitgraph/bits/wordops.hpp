#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace bitgraph::detail {

inline constexpr uint64_t kWordBits = 64;

inline uint64_t words_for(uint64_t bits) { return (bits + 63) / 64; }

// Mask with the lowest `k` bits set, k in [0, 64].
inline uint64_t low_mask(uint64_t k) {
  return k >= 64 ? ~uint64_t{0} : ((uint64_t{1} << k) - 1);
}

// Position of the r-th (1-based) set bit of `word`. Precondition: popcount >= r >= 1.
inline uint32_t select_in_word(uint64_t word, uint32_t r) {
  for (uint32_t i = 1; i < r; ++i) word &= word - 1;
  return static_cast<uint32_t>(std::countr_zero(word));
}

// Reads `width` bits (width <= 64) starting at bit offset `pos` from `words`.
inline uint64_t read_bits(const std::vector<uint64_t>& words, uint64_t pos, uint32_t width) {
  if (width == 0) return 0;
  const uint64_t w = pos >> 6, off = pos & 63;
  uint64_t v = words[w] >> off;
  if (off + width > 64) v |= words[w + 1] << (64 - off);
  return v & low_mask(width);
}

// Writes the low `width` bits of `value` at bit offset `pos`.
inline void write_bits(std::vector<uint64_t>& words, uint64_t pos, uint32_t width, uint64_t value) {
  if (width == 0) return;
  const uint64_t w = pos >> 6, off = pos & 63;
  const uint64_t m = low_mask(width);
  words[w] = (words[w] & ~(m << off)) | ((value & m) << off);
  if (off + width > 64) {
    const uint32_t spill = static_cast<uint32_t>(off + width - 64);
    words[w + 1] = (words[w + 1] & ~low_mask(spill)) | ((value & m) >> (64 - off));
  }
}

}  // namespace bitgraph::detail

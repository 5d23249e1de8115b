#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bitgraph/bits/bitvec.hpp"
#include "bitgraph/bits/wordops.hpp"

namespace bitgraph {

/// Packed array of per-vertex scan offsets with variable field widths.
///
/// Field v holds a value in [0, cap_v] and occupies exactly
/// bit_width(cap_v) = ceil(lg(cap_v + 1)) bits, so the whole payload is
/// sum_v ceil(lg(cap_v + 1)) bits. Field boundaries are recovered from a
/// unary width vector (w_v zeros then a one per vertex) with select1. A
/// second packed array of the same widths stores each field's cap so that
/// out-of-range writes are rejected exactly.
class CursorArray {
 public:
  CursorArray() = default;

  /// cap_of(v) gives the inclusive maximum value of field v (for scan
  /// cursors: the vertex degree).
  template <class CapFn>
  CursorArray(uint32_t n, CapFn&& cap_of) : n_(n) {
    BitBuilder boundary;
    for (uint32_t v = 0; v < n; ++v) {
      const uint32_t w = std::bit_width(static_cast<uint64_t>(cap_of(v)));
      boundary.append_zeros(w);
      boundary.push_back(true);
      total_width_ += w;
    }
    boundary_ = std::move(boundary).build();
    payload_.assign(detail::words_for(total_width_), 0);
    caps_.assign(detail::words_for(total_width_), 0);
    uint64_t pos = 0;
    for (uint32_t v = 0; v < n; ++v) {
      const uint64_t cap = cap_of(v);
      const uint32_t w = std::bit_width(cap);
      detail::write_bits(caps_, pos, w, cap);
      pos += w;
    }
  }

  /// Resolved location of one field; caches the select-based boundary lookup
  /// so repeated access to the current vertex's cursor is O(1).
  struct Field {
    uint64_t start = 0;
    uint32_t width = 0;
  };

  Field field(uint32_t v) const {
    assert(v < n_);
    // One select for the previous terminator; v's own terminator is at most
    // field-width-many bits further, a bounded forward scan.
    uint64_t start, end;
    if (v == 0) {
      start = 0;
      end = *boundary_.leftmost_set_in_range(0, boundary_.size());
    } else {
      const uint64_t prev = *boundary_.select1(v);
      start = prev - (v - 1);
      end = *boundary_.leftmost_set_in_range(prev + 1, boundary_.size());
    }
    Field f;
    f.start = start;
    f.width = static_cast<uint32_t>((end - v) - start);
    return f;
  }

  /// Inclusive maximum value of the field (for scan cursors: the degree).
  uint64_t cap(const Field& f) const { return detail::read_bits(caps_, f.start, f.width); }

  uint64_t get(const Field& f) const { return detail::read_bits(payload_, f.start, f.width); }

  void set(const Field& f, uint64_t value) {
    if (value > cap(f))
      throw std::out_of_range("CursorArray::set: offset exceeds field capacity");
    detail::write_bits(payload_, f.start, f.width, value);
  }

  uint64_t get(uint32_t v) const { return get(field(v)); }
  void set(uint32_t v, uint64_t value) { set(field(v), value); }

  uint32_t size() const { return n_; }

  /// Zeroes every field; lets a frozen traversal state be re-walked.
  void reset_all() { std::fill(payload_.begin(), payload_.end(), 0); }

  /// Exact packed payload size: sum over v of ceil(lg(cap_v + 1)) bits.
  uint64_t payload_bits() const { return total_width_; }

  /// Payload words + cap words + boundary vector with its directory.
  uint64_t bits_of() const {
    return 64 * payload_.size() + 64 * caps_.size() + boundary_.bits_of();
  }

 private:
  uint32_t n_ = 0;
  uint64_t total_width_ = 0;
  std::vector<uint64_t> payload_;
  std::vector<uint64_t> caps_;
  BitVec boundary_;
};

}  // namespace bitgraph

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace bitgraph {

/// Bit-exact working-space accounting for one algorithm run.
///
/// Every audited structure reports its exact size (its bits_of() formula) on
/// allocation and again when released or replaced; the ledger keeps a running
/// total and its peak. Sizes come from structure self-report, not allocator
/// introspection. The input representation is recorded separately and never
/// contributes to the peak. O(lg n)-bit scalar registers are charged as one
/// fixed 1024-bit bucket per run.
class SpaceLedger {
 public:
  static constexpr uint64_t kRegisterBucketBits = 1024;

  /// What a structure is indexed by, for the word-array guard.
  enum class Index { vertex, slot, scalar, other };

  struct Entry {
    std::string name;
    uint64_t bits = 0;
    Index index = Index::other;
    uint32_t uniform_width = 0;     // per-element field width; 0 = variable/packed
    bool live = true;

    bool operator==(const Entry& o) const {
      return name == o.name && bits == o.bits && index == o.index &&
             uniform_width == o.uniform_width && live == o.live;
    }
  };

  void on_alloc(std::string name, uint64_t bits, Index index, uint32_t uniform_width) {
    entries_.push_back({std::move(name), bits, index, uniform_width, true});
    current_ += bits;
    peak_ = std::max(peak_, current_);
  }

  /// Releases the most recent live entry with this name.
  void on_free(const std::string& name) {
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
      if (it->live && it->name == name) {
        it->live = false;
        current_ -= it->bits;
        return;
      }
    }
  }

  /// Idempotent: the register bucket is charged once per run no matter how
  /// many components of the run claim their scalars.
  void ensure_register_bucket() {
    if (has_registers_) return;
    has_registers_ = true;
    on_alloc("registers", kRegisterBucketBits, Index::scalar, 0);
  }

  void set_input_bits(uint64_t bits) { input_bits_ = bits; }
  uint64_t input_bits() const { return input_bits_; }

  uint64_t current_bits() const { return current_; }
  uint64_t peak_working_bits() const { return peak_; }
  const std::vector<Entry>& entries() const { return entries_; }

  uint64_t bits_of(const std::string& name) const {
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
      if (it->name == name) return it->bits;
    return 0;
  }

  /// True iff no audited structure is a vertex-indexed array of uniform
  /// field width >= ceil(lg n) bits (width-1 vectors always pass). Packed
  /// variable-width structures are judged by their declared total instead.
  bool word_array_guard_ok(uint32_t n) const {
    const uint32_t limit = std::max<uint32_t>(2, std::bit_width(std::max<uint32_t>(n, 1) - 1));
    for (const auto& e : entries_) {
      if (e.index == Index::vertex && e.uniform_width >= limit) return false;
    }
    return true;
  }

  bool same_entries(const SpaceLedger& other) const {
    return entries_ == other.entries_ && peak_ == other.peak_ && input_bits_ == other.input_bits_;
  }

 private:
  std::vector<Entry> entries_;
  uint64_t current_ = 0, peak_ = 0, input_bits_ = 0;
  bool has_registers_ = false;
};

}  // namespace bitgraph

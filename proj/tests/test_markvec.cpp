#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "bitgraph/bits/markvec.hpp"
#include "bitgraph/oracle/rng.hpp"

using bitgraph::MarkVec;
using bitgraph::oracle::SplitMix64;

TEST_CASE("markvec set/rank/select basics") {
  MarkVec mv(5);
  mv.set1(3);
  CHECK(mv.rank1(5) == 1);
  CHECK(*mv.select1(1) == 3);
  mv.set1(3);  // idempotent
  CHECK(mv.rank1(5) == 1);
  CHECK(mv.popcount() == 1);
  CHECK_THROWS_AS(mv.set1(5), std::out_of_range);
}

TEST_CASE("zero-length markvec") {
  MarkVec mv(0);
  CHECK(mv.rank1(0) == 0);
  CHECK_FALSE(mv.select1(1).has_value());
  CHECK(mv.bits_of() == 0);
  CHECK_THROWS_AS(mv.set1(0), std::out_of_range);
}

TEST_CASE("interleaved sets and queries match a naive bit array") {
  const uint64_t len = 9000;
  MarkVec mv(len);
  std::vector<bool> naive(len, false);
  SplitMix64 rng(42);
  uint64_t ones = 0;
  for (int op = 0; op < 10000; ++op) {
    switch (rng.next_below(4)) {
      case 0: {
        const uint64_t pos = rng.next_below(len);
        if (!naive[pos]) {
          naive[pos] = true;
          ++ones;
        }
        mv.set1(pos);
        break;
      }
      case 1: {
        const uint64_t pos = rng.next_below(len + 1);
        uint64_t want = 0;
        for (uint64_t i = 0; i < pos; ++i) want += naive[i];
        REQUIRE(mv.rank1(pos) == want);
        break;
      }
      case 2: {
        if (ones == 0) break;
        const uint64_t k = 1 + rng.next_below(ones);
        uint64_t seen = 0, want = 0;
        for (uint64_t i = 0; i < len; ++i) {
          if (naive[i] && ++seen == k) {
            want = i;
            break;
          }
        }
        REQUIRE(mv.select1(k) == want);
        break;
      }
      default: {
        uint64_t lo = rng.next_below(len + 1), hi = rng.next_below(len + 1);
        if (lo > hi) std::swap(lo, hi);
        std::optional<uint64_t> want;
        for (uint64_t i = lo; i < hi; ++i)
          if (naive[i]) want = i;
        REQUIRE(mv.rightmost_set_in_range(lo, hi) == want);
        std::optional<uint64_t> first;
        for (uint64_t i = lo; i < hi && !first; ++i)
          if (naive[i]) first = i;
        REQUIRE(mv.leftmost_set_in_range(lo, hi) == first);
        break;
      }
    }
  }
  CHECK(mv.popcount() == ones);
}

TEST_CASE("markvec rightmost_set basics on 10110") {
  MarkVec mv(5);
  mv.set1(0);
  mv.set1(2);
  mv.set1(3);
  CHECK(*mv.rightmost_set_in_range(0, 5) == 3);
  CHECK_FALSE(mv.rightmost_set_in_range(4, 5).has_value());
  CHECK_FALSE(mv.rightmost_set_in_range(2, 2).has_value());
}

TEST_CASE("markvec bits_of matches its formula") {
  for (uint64_t len : {1ull, 64ull, 512ull, 513ull, 4096ull, 5000ull, 100000ull}) {
    MarkVec mv(len);
    const uint64_t expect = 64 * ((len + 63) / 64) + 16 * (len / 512 + 1) +
                            32 * ((len + 4095) / 4096 + 1);
    CHECK(mv.bits_of() == expect);
  }
}

TEST_CASE("freeze preserves the payload") {
  const uint64_t len = 3000;
  MarkVec mv(len);
  SplitMix64 rng(7);
  std::vector<bool> naive(len, false);
  for (int i = 0; i < 500; ++i) {
    const uint64_t pos = rng.next_below(len);
    naive[pos] = true;
    mv.set1(pos);
  }
  const bitgraph::BitVec bv = std::move(mv).freeze();
  for (uint64_t i = 0; i < len; ++i) CHECK(bv.access(i) == naive[i]);
  CHECK(bv.rank1(len) == bv.ones());
}

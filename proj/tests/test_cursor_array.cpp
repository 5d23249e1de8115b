#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <vector>

#include "bitgraph/bits/cursor_array.hpp"
#include "bitgraph/oracle/rng.hpp"

using bitgraph::CursorArray;
using bitgraph::oracle::SplitMix64;

namespace {
CursorArray from_degrees(const std::vector<uint32_t>& deg) {
  return CursorArray(static_cast<uint32_t>(deg.size()), [&](uint32_t v) { return deg[v]; });
}
}  // namespace

TEST_CASE("cursor array basics for degrees (3,1,2)") {
  CursorArray c = from_degrees({3, 1, 2});
  CHECK(c.get(0) == 0);
  CHECK(c.get(1) == 0);
  CHECK(c.get(2) == 0);
  c.set(0, 2);
  CHECK(c.get(0) == 2);
  CHECK(c.get(1) == 0);
  c.set(0, 3);
  CHECK(c.get(0) == 3);
  CHECK_THROWS_AS(c.set(0, 4), std::out_of_range);
  CHECK_THROWS_AS(c.set(1, 2), std::out_of_range);
  // payload: bit_width(3)+bit_width(1)+bit_width(2) = 2+1+2
  CHECK(c.payload_bits() == 5);
}

TEST_CASE("degree-zero fields hold only zero") {
  CursorArray c = from_degrees({0, 5, 0});
  CHECK(c.get(0) == 0);
  c.set(0, 0);  // legal no-op
  CHECK_THROWS_AS(c.set(0, 1), std::out_of_range);
  c.set(1, 5);
  CHECK(c.get(1) == 5);
  CHECK(c.get(2) == 0);
}

TEST_CASE("random set/get sequence matches a plain array") {
  SplitMix64 rng(11);
  const uint32_t n = 700;
  std::vector<uint32_t> deg(n);
  uint64_t width_sum = 0;
  for (auto& d : deg) {
    d = static_cast<uint32_t>(rng.next_below(97));
    width_sum += std::bit_width(d);
  }
  CursorArray c = from_degrees(deg);
  CHECK(c.payload_bits() == width_sum);  // exactly sum ceil(lg(d+1))
  std::vector<uint32_t> plain(n, 0);
  for (int op = 0; op < 20000; ++op) {
    const auto v = static_cast<uint32_t>(rng.next_below(n));
    if (rng.next_below(2) == 0) {
      const auto off = static_cast<uint32_t>(rng.next_below(deg[v] + 1));
      c.set(v, off);
      plain[v] = off;
    } else {
      REQUIRE(c.get(v) == plain[v]);
    }
  }
  for (uint32_t v = 0; v < n; ++v) REQUIRE(c.get(v) == plain[v]);
  c.reset_all();
  for (uint32_t v = 0; v < n; ++v) REQUIRE(c.get(v) == 0);
}

TEST_CASE("field handles expose capacity") {
  CursorArray c = from_degrees({7, 0, 64});
  const auto f0 = c.field(0);
  CHECK(f0.width == 3);
  CHECK(c.cap(f0) == 7);
  const auto f2 = c.field(2);
  CHECK(f2.width == 7);  // bit_width(64)
  CHECK(c.cap(f2) == 64);
  c.set(f2, 64);
  CHECK(c.get(f2) == 64);
}

#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bitgraph {

/// Input rejected by a loader; carries the 1-based line number at fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(uint64_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  uint64_t line() const { return line_; }

 private:
  uint64_t line_ = 0;
};

/// Read-only adjacency-array graph.
///
/// Neighbor lists are concatenated into one array with per-vertex offsets
/// (CSR layout). List order is exactly edge input order; nothing is sorted.
/// Undirected edges appear once in each endpoint's list (a self-loop
/// contributes two entries to its vertex's list). Directed graphs also carry
/// the transposed arrays, built by a stable counting sort over the input
/// edge sequence, so in-neighbor lists are likewise in input order.
///
/// The whole object is the input representation: immutable after load and
/// excluded from working-space accounting.
class AdjGraph {
 public:
  AdjGraph() = default;

  static AdjGraph from_edges(uint32_t n, bool directed,
                             std::vector<std::pair<uint32_t, uint32_t>> edges) {
    AdjGraph g;
    g.n_ = n;
    g.m_ = static_cast<uint64_t>(edges.size());
    g.directed_ = directed;
    if ((directed ? g.m_ : 2 * g.m_) > UINT32_MAX)
      throw std::invalid_argument("too many adjacency slots for 32-bit offsets");
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    }
    g.build_csr(edges);
    g.edges_ = std::move(edges);
    g.has_edge_list_ = true;
    return g;
  }

  uint32_t num_vertices() const { return n_; }
  uint64_t num_edges() const { return m_; }
  bool directed() const { return directed_; }

  /// Number of forward adjacency slots: m for directed, 2m for undirected.
  uint64_t total_slots() const { return fwd_nbr_.size(); }

  uint32_t degree(uint32_t v) const { return fwd_off_[v + 1] - fwd_off_[v]; }
  uint32_t in_degree(uint32_t v) const { return rev_off_[v + 1] - rev_off_[v]; }

  std::span<const uint32_t> fwd_offsets() const { return fwd_off_; }
  std::span<const uint32_t> fwd_neighbors() const { return fwd_nbr_; }
  std::span<const uint32_t> rev_offsets() const { return rev_off_; }
  std::span<const uint32_t> rev_neighbors() const { return rev_nbr_; }
  std::span<const uint32_t> neighbors(uint32_t v) const {
    return {fwd_nbr_.data() + fwd_off_[v], static_cast<size_t>(degree(v))};
  }

  bool has_edge_list() const { return has_edge_list_; }
  std::span<const std::pair<uint32_t, uint32_t>> edges() const { return edges_; }

  /// Size of the input representation in bits (reported by the audit,
  /// never counted as working space).
  uint64_t input_bits() const {
    uint64_t bits = 32 * (fwd_off_.size() + fwd_nbr_.size() + rev_off_.size() + rev_nbr_.size());
    if (has_edge_list_) bits += 64 * edges_.size();
    return bits;
  }

  // ---- text format -------------------------------------------------------
  // Header `n m directed|undirected`, then m lines `u v`. Lines starting
  // with '#' and blank lines are ignored; CRLF accepted.

  static AdjGraph load_edgelist(std::istream& in) {
    uint64_t line_no = 0;
    std::string line;
    auto next_line = [&](std::string& out) -> bool {
      while (std::getline(in, out)) {
        ++line_no;
        if (!out.empty() && out.back() == '\r') out.pop_back();
        size_t i = out.find_first_not_of(" \t");
        if (i == std::string::npos || out[i] == '#') continue;
        return true;
      }
      ++line_no;
      return false;
    };

    if (!next_line(line)) throw ParseError(line_no, "missing header");
    uint64_t n = 0, m = 0;
    std::string mode;
    {
      std::array<char, 32> buf{};
      if (std::sscanf(line.c_str(), "%lu %lu %31s", &n, &m, buf.data()) != 3)
        throw ParseError(line_no, "malformed header, expected `n m directed|undirected`");
      mode = buf.data();
    }
    bool directed;
    if (mode == "directed") directed = true;
    else if (mode == "undirected") directed = false;
    else throw ParseError(line_no, "unknown mode `" + mode + "`");
    if (n > UINT32_MAX) throw ParseError(line_no, "vertex count too large");

    std::vector<std::pair<uint32_t, uint32_t>> edges;
    edges.reserve(m);
    for (uint64_t i = 0; i < m; ++i) {
      if (!next_line(line))
        throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(i));
      uint64_t u, v;
      char trail;
      const int got = std::sscanf(line.c_str(), "%lu %lu %c", &u, &v, &trail);
      if (got < 2) throw ParseError(line_no, "malformed edge line `" + line + "`");
      if (got == 3 && trail != '#') throw ParseError(line_no, "trailing junk on edge line");
      if (u >= n) throw ParseError(line_no, "vertex id " + std::to_string(u) + " >= n");
      if (v >= n) throw ParseError(line_no, "vertex id " + std::to_string(v) + " >= n");
      edges.emplace_back(static_cast<uint32_t>(u), static_cast<uint32_t>(v));
    }
    if (next_line(line)) throw ParseError(line_no, "unexpected extra edge line");
    return from_edges(static_cast<uint32_t>(n), directed, std::move(edges));
  }

  /// Writes the text form. Graphs that retain their edge sequence (text or
  /// generator origin) round-trip to identical arrays; binary-loaded graphs
  /// are emitted in canonical slot order instead.
  void save_edgelist(std::ostream& out) const {
    out << n_ << ' ' << m_ << ' ' << (directed_ ? "directed" : "undirected") << '\n';
    if (has_edge_list_) {
      for (auto [u, v] : edges_) out << u << ' ' << v << '\n';
      return;
    }
    if (directed_) {
      for (uint32_t u = 0; u < n_; ++u)
        for (uint32_t v : neighbors(u)) out << u << ' ' << v << '\n';
      return;
    }
    // Undirected without the original sequence: emit each edge from its
    // smaller endpoint; self-loops appear twice in their list, emit every
    // second occurrence.
    for (uint32_t u = 0; u < n_; ++u) {
      bool loop_parity = false;
      for (uint32_t v : neighbors(u)) {
        if (v > u) {
          out << u << ' ' << v << '\n';
        } else if (v == u) {
          if (loop_parity) out << u << ' ' << v << '\n';
          loop_parity = !loop_parity;
        }
      }
    }
  }

  // ---- binary format -----------------------------------------------------
  // Little-endian. Header: 8 bytes "SGR1\0\0\0\0", u64 n, u64 m, u64 flags
  // (bit 0: directed). Then fwd_offsets (n+1 u32), fwd_neighbors (u32 each);
  // for directed graphs also rev_offsets (n+1 u32) and rev_neighbors
  // (m u32). Bit-exact round trip.

  void save_binary(std::ostream& out) const {
    const char magic[8] = {'S', 'G', 'R', '1', 0, 0, 0, 0};
    out.write(magic, 8);
    write_u64(out, n_);
    write_u64(out, m_);
    write_u64(out, directed_ ? 1 : 0);
    write_u32s(out, fwd_off_);
    write_u32s(out, fwd_nbr_);
    if (directed_) {
      write_u32s(out, rev_off_);
      write_u32s(out, rev_nbr_);
    }
  }

  static AdjGraph load_binary(std::istream& in) {
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, "SGR1\0\0\0\0", 8) != 0)
      throw ParseError(1, "bad magic, not an SGR1 file");
    AdjGraph g;
    const uint64_t n = read_u64(in), m = read_u64(in), flags = read_u64(in);
    if (!in || n > UINT32_MAX) throw ParseError(1, "corrupt binary header");
    g.n_ = static_cast<uint32_t>(n);
    g.m_ = m;
    g.directed_ = flags & 1;
    const uint64_t slots = g.directed_ ? m : 2 * m;
    read_u32s(in, g.fwd_off_, n + 1);
    read_u32s(in, g.fwd_nbr_, slots);
    if (g.directed_) {
      read_u32s(in, g.rev_off_, n + 1);
      read_u32s(in, g.rev_nbr_, m);
    } else {
      g.rev_off_.clear();
      g.rev_nbr_.clear();
    }
    if (!in) throw ParseError(1, "truncated binary payload");
    g.validate_offsets();
    return g;
  }

 private:
  void build_csr(const std::vector<std::pair<uint32_t, uint32_t>>& edges) {
    fwd_off_.assign(n_ + 1, 0);
    for (auto [u, v] : edges) {
      ++fwd_off_[u + 1];
      if (!directed_) ++fwd_off_[v + 1];
    }
    for (uint32_t i = 0; i < n_; ++i) fwd_off_[i + 1] += fwd_off_[i];
    fwd_nbr_.assign(fwd_off_[n_], 0);
    std::vector<uint32_t> cur(fwd_off_.begin(), fwd_off_.end() - 1);
    for (auto [u, v] : edges) {
      fwd_nbr_[cur[u]++] = v;
      if (!directed_) fwd_nbr_[cur[v]++] = u;
    }
    if (directed_) {
      rev_off_.assign(n_ + 1, 0);
      for (auto [u, v] : edges) ++rev_off_[v + 1];
      for (uint32_t i = 0; i < n_; ++i) rev_off_[i + 1] += rev_off_[i];
      rev_nbr_.assign(m_, 0);
      std::vector<uint32_t> rcur(rev_off_.begin(), rev_off_.end() - 1);
      for (auto [u, v] : edges) rev_nbr_[rcur[v]++] = u;
    }
  }

  void validate_offsets() const {
    auto check = [&](const std::vector<uint32_t>& off, const std::vector<uint32_t>& nbr) {
      if (off.size() != n_ + 1 || off[0] != 0 || off[n_] != nbr.size())
        throw ParseError(1, "inconsistent offset array");
      for (uint32_t i = 0; i < n_; ++i)
        if (off[i] > off[i + 1]) throw ParseError(1, "offsets not monotone");
      for (uint32_t x : nbr)
        if (x >= n_) throw ParseError(1, "neighbor id out of range");
    };
    check(fwd_off_, fwd_nbr_);
    if (directed_) check(rev_off_, rev_nbr_);
  }

  static void write_u64(std::ostream& out, uint64_t x) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((x >> (8 * i)) & 0xff);
    out.write(b, 8);
  }
  static uint64_t read_u64(std::istream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    uint64_t x = 0;
    for (int i = 0; i < 8; ++i) x |= static_cast<uint64_t>(b[i]) << (8 * i);
    return x;
  }
  static void write_u32s(std::ostream& out, const std::vector<uint32_t>& xs) {
    for (uint32_t x : xs) {
      char b[4];
      for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((x >> (8 * i)) & 0xff);
      out.write(b, 4);
    }
  }
  static void read_u32s(std::istream& in, std::vector<uint32_t>& xs, uint64_t count) {
    xs.assign(count, 0);
    for (uint64_t i = 0; i < count && in; ++i) {
      unsigned char b[4];
      in.read(reinterpret_cast<char*>(b), 4);
      uint32_t x = 0;
      for (int j = 0; j < 4; ++j) x |= static_cast<uint32_t>(b[j]) << (8 * j);
      xs[i] = x;
    }
  }

  uint32_t n_ = 0;
  uint64_t m_ = 0;
  bool directed_ = false;
  std::vector<uint32_t> fwd_off_, fwd_nbr_;
  std::vector<uint32_t> rev_off_, rev_nbr_;
  std::vector<std::pair<uint32_t, uint32_t>> edges_;
  bool has_edge_list_ = false;
};

}  // namespace bitgraph

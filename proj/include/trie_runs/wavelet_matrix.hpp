#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace trie_runs {

/// Plain bit vector with constant-time rank. Each 64-bit word sits next to
/// the count of ones before it, so a rank touches one cache line.
class RankBitVector {
 public:
  RankBitVector() = default;
  explicit RankBitVector(std::size_t size)
      : size_(size), blocks_((size + 63) / 64 + 1) {}

  void set(std::size_t i) { blocks_[i / 64].bits |= std::uint64_t{1} << (i % 64); }
  bool operator[](std::size_t i) const {
    return (blocks_[i / 64].bits >> (i % 64)) & 1u;
  }
  std::size_t size() const { return size_; }

  // Call once after all bits are set.
  void build_rank() {
    std::uint64_t total = 0;
    for (auto& b : blocks_) {
      b.before = total;
      total += static_cast<std::uint64_t>(std::popcount(b.bits));
    }
  }

  // number of 1s in [0, i)
  std::size_t rank1(std::size_t i) const {
    const Block& blk = blocks_[i / 64];
    const std::size_t b = i % 64;
    std::size_t r = blk.before;
    if (b) r += static_cast<std::size_t>(std::popcount(blk.bits << (64 - b)));
    return r;
  }
  std::size_t rank0(std::size_t i) const { return i - rank1(i); }

 private:
  struct alignas(16) Block {
    std::uint64_t bits = 0;
    std::uint64_t before = 0;
  };
  std::size_t size_ = 0;
  std::vector<Block> blocks_;
};

/// Wavelet matrix over a sequence of integers in [0, 2^bits). Supports
/// counting values below a threshold and k-th smallest value in a range, both
/// in O(bits).
class WaveletMatrix {
 public:
  WaveletMatrix() = default;
  explicit WaveletMatrix(std::span<const std::uint32_t> values);

  std::size_t size() const { return size_; }

  /// Count of values < y among positions [first, last).
  std::size_t count_less(std::size_t first, std::size_t last,
                         std::uint64_t y) const;
  /// k-th smallest (0-based) value among positions [first, last); k < last-first.
  std::uint32_t kth_smallest(std::size_t first, std::size_t last,
                             std::size_t k) const;

 private:
  std::size_t size_ = 0;
  unsigned bits_ = 0;
  std::vector<RankBitVector> levels_;
  std::vector<std::size_t> zeros_;
};

}  // namespace trie_runs

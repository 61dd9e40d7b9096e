#include "trie_runs/wavelet_matrix.hpp"

#include <algorithm>

namespace trie_runs {

WaveletMatrix::WaveletMatrix(std::span<const std::uint32_t> values)
    : size_(values.size()) {
  std::uint32_t max_value = 0;
  for (auto v : values) max_value = std::max(max_value, v);
  bits_ = std::max(1u, static_cast<unsigned>(std::bit_width(max_value)));

  std::vector<std::uint32_t> cur(values.begin(), values.end());
  std::vector<std::uint32_t> next(cur.size());
  levels_.reserve(bits_);
  zeros_.reserve(bits_);
  for (unsigned level = 0; level < bits_; ++level) {
    const unsigned shift = bits_ - 1 - level;
    RankBitVector bv(size_);
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < size_; ++i) {
      if ((cur[i] >> shift) & 1u) {
        bv.set(i);
      } else {
        ++zeros;
      }
    }
    bv.build_rank();
    // Stable partition: zeros first, then ones.
    std::size_t z = 0;
    std::size_t o = zeros;
    for (std::size_t i = 0; i < size_; ++i) {
      if ((cur[i] >> shift) & 1u) {
        next[o++] = cur[i];
      } else {
        next[z++] = cur[i];
      }
    }
    cur.swap(next);
    levels_.push_back(std::move(bv));
    zeros_.push_back(zeros);
  }
}

std::size_t WaveletMatrix::count_less(std::size_t first, std::size_t last,
                                      std::uint64_t y) const {
  if (first >= last) return 0;
  if (y >= (std::uint64_t{1} << bits_)) return last - first;
  std::size_t result = 0;
  for (unsigned level = 0; level < bits_; ++level) {
    const unsigned shift = bits_ - 1 - level;
    const auto& bv = levels_[level];
    const std::size_t z_first = bv.rank0(first);
    const std::size_t z_last = bv.rank0(last);
    if ((y >> shift) & 1u) {
      result += z_last - z_first;
      first = zeros_[level] + (first - z_first);
      last = zeros_[level] + (last - z_last);
    } else {
      first = z_first;
      last = z_last;
    }
  }
  return result;
}

std::uint32_t WaveletMatrix::kth_smallest(std::size_t first, std::size_t last,
                                          std::size_t k) const {
  std::uint32_t value = 0;
  for (unsigned level = 0; level < bits_; ++level) {
    const auto& bv = levels_[level];
    const std::size_t z_first = bv.rank0(first);
    const std::size_t z_last = bv.rank0(last);
    const std::size_t zeros_here = z_last - z_first;
    value <<= 1;
    if (k < zeros_here) {
      first = z_first;
      last = z_last;
    } else {
      k -= zeros_here;
      value |= 1u;
      first = zeros_[level] + (first - z_first);
      last = zeros_[level] + (last - z_last);
    }
  }
  return value;
}

}  // namespace trie_runs

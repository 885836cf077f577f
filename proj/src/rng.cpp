#include "ffgeom/rng.hpp"

namespace ffgeom {

IndexPermutation::IndexPermutation(std::uint64_t size, std::uint64_t seed) : size_(size) {
  unsigned bits = 2;
  while (bits < 64 && (std::uint64_t{1} << bits) < size) bits += 2;
  half_bits_ = bits / 2;
  half_mask_ = (std::uint64_t{1} << half_bits_) - 1;
  std::uint64_t s = seed;
  for (auto& k : keys_) {
    s = splitmix64(s);
    k = s;
  }
}

std::uint64_t IndexPermutation::permute_block(std::uint64_t x) const {
  std::uint64_t left = x >> half_bits_;
  std::uint64_t right = x & half_mask_;
  for (std::uint64_t key : keys_) {
    const std::uint64_t f = splitmix64(right ^ key) & half_mask_;
    const std::uint64_t next = left ^ f;
    left = right;
    right = next;
  }
  return (left << half_bits_) | right;
}

std::uint64_t IndexPermutation::operator()(std::uint64_t index) const {
  // Each walk stays inside the block's cycle, so the result is a bijection on [0, size).
  std::uint64_t x = permute_block(index);
  while (x >= size_) x = permute_block(x);
  return x;
}

}  // namespace ffgeom

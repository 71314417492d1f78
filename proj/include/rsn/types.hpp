#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace rsn {

// Subsets of a finite, indexed carrier (universe elements, lattice elements).
// Bit i stands for the element with index i. boost::dynamic_bitset compares
// bitsets numerically (bit i has weight 2^i), which is exactly the canonical
// "as integers" order used throughout for deterministic listings.
using Bitset = boost::dynamic_bitset<>;

inline Bitset make_bitset(std::size_t n) { return Bitset(n); }

inline Bitset make_bitset(std::size_t n, std::initializer_list<std::size_t> bits) {
  Bitset b(n);
  for (std::size_t i : bits) b.set(i);
  return b;
}

inline std::vector<std::size_t> bit_indices(const Bitset& b) {
  std::vector<std::size_t> out;
  out.reserve(b.count());
  for (std::size_t i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) out.push_back(i);
  return out;
}

}  // namespace rsn

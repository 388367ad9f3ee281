#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace exgeo {

// Strictly increasing 1-based index tuples encoded as bitmasks: index i
// corresponds to bit (i-1). Degree = popcount.

using Mask = std::uint32_t;

inline int mask_degree(Mask m) { return std::popcount(m); }

inline Mask mask_from_indices(const std::vector<int>& idx) {
  Mask m = 0;
  for (int i : idx) m |= Mask(1) << (i - 1);
  return m;
}

inline std::vector<int> mask_to_indices(Mask m) {
  std::vector<int> idx;
  for (int i = 0; m != 0; ++i, m >>= 1)
    if (m & 1) idx.push_back(i + 1);
  return idx;
}

/// Sign of sorting the concatenation (a-tuple, b-tuple) of disjoint masks into
/// increasing order; 0 when the masks overlap.
inline int merge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Count pairs (i in a, j in b) with i > j.
  int inversions = 0;
  for (Mask rest = b; rest != 0; rest &= rest - 1) {
    const Mask low = rest & ~(rest - 1);      // lowest bit of b not yet handled
    inversions += std::popcount(a & ~(low - 1) & ~low);
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

/// Sign of removing index i from tuple m: (-1)^(number of entries before i).
inline int removal_sign(Mask m, int i) {
  const Mask before = m & ((Mask(1) << (i - 1)) - 1);
  return (std::popcount(before) % 2 == 0) ? 1 : -1;
}

/// All degree-p masks on n indices, in increasing mask order.
std::vector<Mask> masks_of_degree(int n, int p);

inline Mask full_mask(int n) { return (Mask(1) << n) - 1; }

}  // namespace exgeo

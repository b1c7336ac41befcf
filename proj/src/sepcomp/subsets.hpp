#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace sepcomp {

// Subsets of the domain X = {0..|X|-1} as bitmasks.
using Mask = std::uint32_t;

inline int mask_size(Mask m) { return std::popcount(m); }

inline Mask full_mask(int universe_size) {
  return universe_size >= 32 ? ~Mask{0}
                             : (Mask{1} << universe_size) - 1;
}

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

// Size-then-value order; used everywhere a family of subsets is listed.
inline bool mask_less(Mask a, Mask b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

inline std::string mask_to_string(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if (m & (Mask{1} << i)) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
  s += "}";
  return s;
}

/// A deduplicated family of subsets of {0..universe_size-1}, sorted by
/// (size, value). D(A) and E(A) are stored this way.
struct SetFamily {
  int universe_size = 0;
  std::vector<Mask> members;

  bool contains(Mask m) const {
    for (Mask x : members)
      if (x == m) return true;
    return false;
  }

  std::size_t size() const { return members.size(); }
};

}  // namespace sepcomp

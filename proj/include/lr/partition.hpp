#pragma once

#include <vector>
#include <string>

namespace lr {

using Int = long long;

// A partition: weakly decreasing list of nonnegative integers with an
// explicit length. Trailing zeros are significant: (3,1,0) != (3,1).
struct Partition {
  std::vector<Int> parts;

  Partition() = default;
  explicit Partition(std::vector<Int> p);  // throws std::invalid_argument

  int length() const { return static_cast<int>(parts.size()); }
  Int part(int i) const;  // 1-based, returns 0 past the end
  bool operator==(const Partition&) const = default;
};

// Multiset union of parts, re-sorted descending. Length adds.
Partition direct_sum(const Partition& a, const Partition& b);

// Componentwise <= after zero-padding to the longer length.
bool contains(const Partition& outer, const Partition& inner);

Int weight(const Partition& a);

Partition zero_padded(const Partition& a, int len);

std::string to_string(const Partition& a);  // "(3,2,1)"
Partition parse_partition(const std::string& s);  // "3,2,1" or "(3,2,1)"

// Pair outer/inner with containment checked, padded to a common length.
struct SkewShape {
  Partition outer, inner;
  SkewShape(const Partition& out, const Partition& in);
};

}  // namespace lr

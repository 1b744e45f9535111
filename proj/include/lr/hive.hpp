#pragma once

#include "lr/filling.hpp"
#include "lr/partition.hpp"

#include <vector>

namespace lr {

// Triangular array h_{pq}, 0 <= q <= p <= side(), stored row by row:
// h[p] = (h_{p0}, ..., h_{pp}).  h_{00} = 0 for a valid hive.
struct Hive {
  std::vector<std::vector<Int>> h;

  Hive() : h{{0}} {}
  explicit Hive(std::vector<std::vector<Int>> rows);  // shape-checked

  int side() const { return static_cast<int>(h.size()) - 1; }
  Int H(int p, int q) const;
  bool operator==(const Hive&) const = default;
};

// h_{00} = 0 plus the three rhombus families:
//   right     h_{ij} + h_{i-1,j-1} >= h_{i-1,j} + h_{i,j-1}   (2<=i<=r, 1<=j<=i-1)
//   vertical  h_{i-1,j} + h_{ij}   >= h_{i-1,j-1} + h_{i,j+1} (2<=i<=r, 1<=j<=i-1)
//   left      h_{ij} + h_{i,j+1}   >= h_{i-1,j} + h_{i+1,j+1} (1<=i<=r-1, 0<=j<=i-1)
ValidationReport validate_hive(const Hive& hv);

struct HiveType {
  Partition mu, nu, lambda;
};

// Boundary differences: mu_i = h_{i0}-h_{i-1,0}, nu_i = h_{ri}-h_{r,i-1},
// lambda_i = h_{ii}-h_{i-1,i-1}.  Throws if a difference sequence is not a
// partition.
HiveType hive_type(const Hive& hv);

// h_{pq} = sum_{s<=p} mu_s + sum_{i<=q} sum_{j<=p} k_{ij}
Hive hive_from_filling(const LRFilling& f);

// k_{ij} = h_{j-1,i-1} + h_{ji} - h_{j-1,i} - h_{j,i-1} (i < j),
// k_{jj} = h_{jj} - h_{j,j-1}
LRFilling filling_from_hive(const Hive& hv);

// All hives with the boundary determined by (mu, nu; lambda), ordered by the
// row-major interior assignment.
std::vector<Hive> enumerate_hives(const Partition& mu, const Partition& nu,
                                  const Partition& lambda);
Int count_hives(const Partition& mu, const Partition& nu, const Partition& lambda);

}  // namespace lr

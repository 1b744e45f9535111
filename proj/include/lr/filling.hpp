#pragma once

#include "lr/partition.hpp"

#include <random>
#include <string>
#include <vector>

namespace lr {

// Littlewood-Richardson filling of type (mu, nu; lambda).
// k[j-1][i-1] = k_{ij} = number of cells with label i in row j, 1 <= i <= j.
// All three partitions are zero-padded to the same number of rows.
struct LRFilling {
  Partition mu, nu, lambda;
  std::vector<std::vector<Int>> k;

  LRFilling() = default;
  LRFilling(Partition mu_, Partition nu_, Partition lambda_,
            std::vector<std::vector<Int>> k_);  // shape-checked

  int rows() const { return static_cast<int>(k.size()); }
  Int K(int i, int j) const;   // k_{ij}
  Int& K(int i, int j);
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(const std::string& msg);
  std::string joined() const;
};

// Checks, with one failure message per violated condition:
//   row sums        mu_j + sum_s k_{sj} = lambda_j
//   content sums    sum_s k_{is} = nu_i
//   column strict   mu_j + sum_{s<=i} k_{sj} <= mu_{j-1} + sum_{s<=i-1} k_{s,j-1}
//   lattice word    sum_{s<=j+1} k_{i+1,s} <= sum_{s<=j} k_{is}
// plus nonnegativity of every k_{ij}.
ValidationReport validate_lr(const LRFilling& f);

// Number of label-i cells in rows i..j (0 when j < i).
Int content_prefix(const LRFilling& f, int i, int j);

// Labels of row j's content cells in weakly increasing order.
std::vector<Int> row_labels(const LRFilling& f, int j);

// Row/cell picture of a (possibly mid-rearrangement) tableau.
// Cell value 0 is an inner (unfilled) box; v >= 1 is the label v.
struct TableauGrid {
  std::vector<std::vector<Int>> rows;
  Int content_bound = 0;  // labels lie in 1..content_bound
  bool operator==(const TableauGrid&) const = default;
};

// Row j: mu_j inner cells, then k_{1j} ones, ..., k_{jj} j's.
TableauGrid filling_to_grid(const LRFilling& f);

// Inverse: counts labels per row. Checks inner prefixes = mu, row lengths =
// lambda, labels within 1..row index, and content totals = nu; throws on any
// mismatch. Does not run the LR checks (caller validates).
LRFilling grid_to_filling(const TableauGrid& g, const Partition& mu, const Partition& nu,
                          const Partition& lambda);

// All fillings of the given type, ordered lexicographically by the
// row-major sequence (k_11, k_12, k_22, k_13, ...).
std::vector<LRFilling> enumerate_fillings(const Partition& mu, const Partition& nu,
                                          const Partition& lambda);
Int count_fillings(const Partition& mu, const Partition& nu, const Partition& lambda);

// Constructive sampler: always returns a valid filling with rows() == nrows
// and parts bounded by max_part.
LRFilling random_filling(std::mt19937& rng, int nrows, Int max_part);

}  // namespace lr

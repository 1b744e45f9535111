#pragma once

#include "lr/filling.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lr {

// Merged content labels 1..n (n = rows of f1 + rows of f2), one per part of
// nu+nu', largest part first.  Ties go to the content that ends in the higher
// merged row; zero parts fall back to f1-then-index order.
struct LabelMap {
  std::vector<int> from1, from2;  // from1[c-1] = merged label of f1's content c
  int n() const { return int(from1.size() + from2.size()); }
};

struct RowOrigin {
  int source = 1;  // 1 or 2
  int row = 1;     // row within that source filling
};

// Grid rows of both fillings ordered by weakly decreasing length; equal
// lengths keep f1's rows first, in source order.
std::vector<RowOrigin> merge_order(const LRFilling& f1, const LRFilling& f2);

LabelMap relabel_contents(const LRFilling& f1, const LRFilling& f2);

TableauGrid initial_grid(const LRFilling& f1, const LRFilling& f2,
                         const LabelMap& m);

// Within each column, inner cells float above labels, everything else keeps
// its order; the inner region becomes the diagram of mu+mu'.
TableauGrid normalize_inner(const TableauGrid& g);

struct Violation {
  enum Kind { RowBound, Word, ColumnStrict } kind = RowBound;
  int row = 0, col = 0;  // the bad box (upper cell for ColumnStrict)
  Int small = 0, big = 0;
};

enum class Phase { RowBound, General };

// RowBound phase: top row first, largest out-of-range value first.
// General phase: first cell in reading order — row ascending, column
// descending — that is a lattice-word bad box or sits directly above a
// strictly smaller label.
std::optional<Violation> next_violation(const TableauGrid& g, Phase phase);

// One swap of the summation algorithm.  strand_a holds the cells of the
// smaller label, strand_b the larger, matched in reading order; replay is a
// pointwise exchange of cell contents.  mu_switch steps record the content
// cells that trade places with inner cells of the row below (labels [0,0]).
struct TraceStep {
  std::string kind;  // "mu_switch", "row_bound", "word", "column_strict"
  std::vector<std::pair<int, int>> strand_a, strand_b;  // (row, col), 1-based
  std::array<Int, 2> labels{0, 0};
};

struct StepTrace {
  std::vector<TraceStep> steps;
};

// Mutates g.  Throws std::logic_error when no pivot balances the strands.
TraceStep resolve_violation(TableauGrid& g, const Violation& v);

// Pointwise replay of one step (used for the trace invariant and by tests).
void apply_step(TableauGrid& g, const TraceStep& s);

TableauGrid finalize_rows(const TableauGrid& g);

struct SumOptions {
  Int step_cap_factor = 16;  // cap = factor * n * (|lambda| + |lambda'|)
};

struct SumResult {
  LRFilling sum;
  StepTrace trace;
  LabelMap labels;
  std::vector<RowOrigin> rows;
  TableauGrid initial;  // merged and relabeled, before any step
  TableauGrid final;    // after the last step, rows not yet sorted
};

// The summation operation: merge, relabel, normalize the inner shape, then
// repair row-bound, lattice-word and column violations by strand swaps until
// the grid is the filling of type (mu+mu', nu+nu'; lambda+lambda').
SumResult sum_fillings(const LRFilling& f1, const LRFilling& f2,
                       const SumOptions& opts = {});

}  // namespace lr

#include "lr/summation.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lr {

namespace {

int row_len(const TableauGrid& g, int r) {
  return int(g.rows[r - 1].size());
}

Int& cell(TableauGrid& g, int r, int c) { return g.rows[r - 1][c - 1]; }
Int cell(const TableauGrid& g, int r, int c) { return g.rows[r - 1][c - 1]; }

// Reading order: row ascending, column descending ("north-east first").
bool reading_before(std::pair<int, int> a, std::pair<int, int> b) {
  return a.first != b.first ? a.first < b.first : a.second > b.second;
}

// Cells with the given label at positions up to and including (r, c).
Int count_upto(const TableauGrid& g, Int label, int r, int c) {
  Int n = 0;
  for (int i = 1; i <= r; ++i)
    for (int j = row_len(g, i); j >= 1; --j) {
      if (i == r && j < c) break;
      if (cell(g, i, j) == label) ++n;
    }
  return n;
}

Int count_rows_above(const TableauGrid& g, Int label, int r) {
  Int n = 0;
  for (int i = 1; i < r; ++i)
    for (int j = 1; j <= row_len(g, i); ++j)
      if (cell(g, i, j) == label) ++n;
  return n;
}

int inner_length(const TableauGrid& g, int r) {
  int m = 0;
  while (m < row_len(g, r) && cell(g, r, m + 1) == 0) ++m;
  for (int c = m + 1; c <= row_len(g, r); ++c)
    if (cell(g, r, c) == 0)
      throw std::logic_error("inner cells of row " + std::to_string(r) +
                             " are not contiguous");
  return m;
}

}  // namespace

std::vector<RowOrigin> merge_order(const LRFilling& f1, const LRFilling& f2) {
  std::vector<RowOrigin> rows;
  for (int j = 1; j <= f1.rows(); ++j) rows.push_back({1, j});
  for (int j = 1; j <= f2.rows(); ++j) rows.push_back({2, j});
  auto len = [&](const RowOrigin& o) {
    return o.source == 1 ? f1.lambda.part(o.row) : f2.lambda.part(o.row);
  };
  std::stable_sort(rows.begin(), rows.end(),
                   [&](const RowOrigin& a, const RowOrigin& b) {
                     return len(a) > len(b);
                   });
  return rows;
}

LabelMap relabel_contents(const LRFilling& f1, const LRFilling& f2) {
  const auto order = merge_order(f1, f2);
  // Merged position of each source row.
  std::array<std::vector<int>, 2> pos;
  pos[0].assign(f1.rows() + 1, 0);
  pos[1].assign(f2.rows() + 1, 0);
  for (size_t i = 0; i < order.size(); ++i)
    pos[order[i].source - 1][order[i].row] = int(i) + 1;

  struct Part {
    Int value;
    int end_row;  // last merged row holding this content; INT_MAX if none
    int source, c;
  };
  std::vector<Part> parts;
  auto collect = [&](const LRFilling& f, int source) {
    for (int c = 1; c <= f.rows(); ++c) {
      int end = INT_MAX;
      for (int j = c; j <= f.rows(); ++j)
        if (f.K(c, j) > 0) end = pos[source - 1][j];
      parts.push_back({f.nu.part(c), end, source, c});
    }
  };
  collect(f1, 1);
  collect(f2, 2);
  std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.end_row != b.end_row) return a.end_row < b.end_row;
    if (a.source != b.source) return a.source < b.source;
    return a.c < b.c;
  });

  LabelMap m;
  m.from1.assign(f1.rows(), 0);
  m.from2.assign(f2.rows(), 0);
  for (size_t i = 0; i < parts.size(); ++i) {
    auto& dst = parts[i].source == 1 ? m.from1 : m.from2;
    dst[parts[i].c - 1] = int(i) + 1;
  }
  for (const auto& v : {m.from1, m.from2})
    if (std::adjacent_find(v.begin(), v.end(), std::greater_equal<int>()) !=
        v.end())
      throw std::logic_error("relabeling is not increasing within a source");
  return m;
}

TableauGrid initial_grid(const LRFilling& f1, const LRFilling& f2,
                         const LabelMap& m) {
  const TableauGrid g1 = filling_to_grid(f1), g2 = filling_to_grid(f2);
  TableauGrid g;
  g.content_bound = m.n();
  for (const auto& o : merge_order(f1, f2)) {
    const auto& src = o.source == 1 ? g1 : g2;
    const auto& map = o.source == 1 ? m.from1 : m.from2;
    std::vector<Int> row = src.rows[o.row - 1];
    for (auto& v : row)
      if (v != 0) v = map[v - 1];
    g.rows.push_back(std::move(row));
  }
  return g;
}

TableauGrid normalize_inner(const TableauGrid& g) {
  const int n = int(g.rows.size());
  for (int r = 1; r + 1 <= n; ++r)
    if (row_len(g, r) < row_len(g, r + 1))
      throw std::invalid_argument("row lengths must weakly decrease");
  TableauGrid out = g;
  const int width = n == 0 ? 0 : row_len(g, 1);
  for (int c = 1; c <= width; ++c) {
    std::vector<Int> labels;
    int depth = 0, zeros = 0;
    for (int r = 1; r <= n && row_len(g, r) >= c; ++r, ++depth) {
      if (cell(g, r, c) == 0)
        ++zeros;
      else
        labels.push_back(cell(g, r, c));
    }
    for (int r = 1; r <= depth; ++r)
      cell(out, r, c) = r <= zeros ? 0 : labels[r - zeros - 1];
  }
  return out;
}

std::optional<Violation> next_violation(const TableauGrid& g, Phase phase) {
  const int n = int(g.rows.size());
  if (phase == Phase::RowBound) {
    for (int r = 1; r <= n; ++r) {
      Int big = 0;
      for (int c = 1; c <= row_len(g, r); ++c) big = std::max(big, cell(g, r, c));
      if (big <= r) continue;
      for (int c = row_len(g, r); c >= 1; --c)
        if (cell(g, r, c) == big)
          return Violation{Violation::RowBound, r, c, Int(r), big};
    }
    return std::nullopt;
  }
  for (int r = 1; r <= n; ++r)
    for (int c = row_len(g, r); c >= 1; --c) {
      const Int v = cell(g, r, c);
      if (v == 0) continue;
      // Equal labels stacked in a column are not a violation here: no swap
      // could make progress.  Word repairs below break such stacks apart.
      if (r < n && row_len(g, r + 1) >= c && cell(g, r + 1, c) != 0 &&
          cell(g, r + 1, c) < v)
        return Violation{Violation::ColumnStrict, r, c, cell(g, r + 1, c), v};
      if (v >= 2 && count_upto(g, v, r, c) > count_rows_above(g, v - 1, r))
        return Violation{Violation::Word, r, c, v - 1, v};
    }
  return std::nullopt;
}

TraceStep resolve_violation(TableauGrid& g, const Violation& v) {
  TraceStep step;
  step.labels = {v.small, v.big};
  if (v.kind == Violation::ColumnStrict) {
    step.kind = "column_strict";
    step.strand_a = {{v.row + 1, v.col}};
    step.strand_b = {{v.row, v.col}};
    std::swap(cell(g, v.row, v.col), cell(g, v.row + 1, v.col));
    return step;
  }
  step.kind = v.kind == Violation::RowBound ? "row_bound" : "word";

  // The frame opens at the top of the diagram for row-bound repairs and at
  // the bad box for word repairs, then moves south-west until the strands of
  // the two labels balance at a cell holding the smaller one.  Anchoring the
  // word frame at its bad box keeps cells north-east of it untouched, so a
  // repair never pushes large labels back into already-clean upper rows.
  const int n = int(g.rows.size());
  const bool anchored = v.kind == Violation::Word;
  std::optional<std::pair<int, int>> pivot;
  Int small_seen = 0, big_seen = anchored ? 1 : 0;
  for (int r = anchored ? v.row : 1; r <= n && !pivot; ++r) {
    const int c0 = anchored && r == v.row ? v.col - 1 : row_len(g, r);
    for (int c = c0; c >= 1; --c) {
      const Int val = cell(g, r, c);
      if (val == v.small) ++small_seen;
      if (val == v.big) ++big_seen;
      if (val != v.small) continue;
      if ((anchored || r > v.row) && small_seen == big_seen) {
        pivot = {r, c};
        break;
      }
    }
  }
  if (!pivot) {
    std::ostringstream os;
    os << "no pivot balances label " << v.small << " against " << v.big
       << " for the violation at row " << v.row << ", column " << v.col;
    throw std::logic_error(os.str());
  }

  if (anchored) step.strand_b.push_back({v.row, v.col});
  for (int r = anchored ? v.row : 1; r <= pivot->first; ++r) {
    const int c0 = anchored && r == v.row ? v.col - 1 : row_len(g, r);
    for (int c = c0; c >= 1; --c) {
      if (r == pivot->first && reading_before(*pivot, {r, c})) break;
      if (cell(g, r, c) == v.small) step.strand_a.push_back({r, c});
      if (cell(g, r, c) == v.big) step.strand_b.push_back({r, c});
    }
  }
  if (step.strand_a.size() != step.strand_b.size())
    throw std::logic_error("strand lengths disagree at the pivot");
  for (auto [r, c] : step.strand_a) cell(g, r, c) = v.big;
  for (auto [r, c] : step.strand_b) cell(g, r, c) = v.small;
  return step;
}

void apply_step(TableauGrid& g, const TraceStep& s) {
  if (s.strand_a.size() != s.strand_b.size())
    throw std::invalid_argument("step strands differ in length");
  for (size_t i = 0; i < s.strand_a.size(); ++i)
    std::swap(cell(g, s.strand_a[i].first, s.strand_a[i].second),
              cell(g, s.strand_b[i].first, s.strand_b[i].second));
}

TableauGrid finalize_rows(const TableauGrid& g) {
  TableauGrid out = g;
  for (auto& row : out.rows) {
    auto first = std::find_if(row.begin(), row.end(),
                              [](Int v) { return v != 0; });
    std::sort(first, row.end());
  }
  return out;
}

SumResult sum_fillings(const LRFilling& f1, const LRFilling& f2,
                       const SumOptions& opts) {
  for (const auto* f : {&f1, &f2})
    if (auto rep = validate_lr(*f); !rep.ok)
      throw std::invalid_argument("invalid filling: " + rep.joined());

  SumResult res;
  res.rows = merge_order(f1, f2);
  res.labels = relabel_contents(f1, f2);
  res.initial = initial_grid(f1, f2, res.labels);

  TableauGrid g = res.initial;
  const int n = int(g.rows.size());
  const Int cap =
      opts.step_cap_factor * n * (weight(f1.lambda) + weight(f2.lambda));
  auto guard = [&] {
    if (Int(res.trace.steps.size()) > cap)
      throw std::logic_error("step cap of " + std::to_string(cap) +
                             " exceeded");
  };

  // Sort the inner lengths by bubbling content cells down past shorter inner
  // rows; each exchange is one mu_switch step.
  std::vector<int> inner(n + 1, 0);
  for (int r = 1; r <= n; ++r) inner[r] = inner_length(g, r);
  for (bool moved = true; moved;) {
    moved = false;
    for (int r = 1; r + 1 <= n; ++r) {
      if (inner[r] >= inner[r + 1]) continue;
      TraceStep step;
      step.kind = "mu_switch";
      for (int c = inner[r] + 1; c <= inner[r + 1]; ++c) {
        step.strand_a.push_back({r, c});
        step.strand_b.push_back({r + 1, c});
      }
      apply_step(g, step);
      res.trace.steps.push_back(std::move(step));
      guard();
      std::swap(inner[r], inner[r + 1]);
      moved = true;
    }
  }
  {
    const TableauGrid sorted = normalize_inner(res.initial);
    if (g.rows != sorted.rows)
      throw std::logic_error("mu switches disagree with the column sort");
  }

  // Violation counts are not monotone under single repairs (a swap can expose
  // new violations on either side of itself), so progress is guarded by
  // forbidding revisits: a repeated grid state would disprove termination.
  std::set<std::vector<std::vector<Int>>> seen{g.rows};
  for (Phase phase : {Phase::RowBound, Phase::General}) {
    while (auto v = next_violation(g, phase)) {
      res.trace.steps.push_back(resolve_violation(g, *v));
      guard();
      if (!seen.insert(g.rows).second)
        throw std::logic_error("repair loop revisited a grid state");
    }
  }
  res.final = g;

  {
    TableauGrid replay = res.initial;
    for (const auto& s : res.trace.steps) apply_step(replay, s);
    if (replay.rows != res.final.rows)
      throw std::logic_error("trace replay does not reproduce the result");
  }

  const Partition mu = direct_sum(f1.mu, f2.mu);
  const Partition nu = direct_sum(f1.nu, f2.nu);
  const Partition lambda = direct_sum(f1.lambda, f2.lambda);
  try {
    res.sum = grid_to_filling(finalize_rows(g), mu, nu, lambda);
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(std::string("summation left a malformed grid: ") +
                           e.what());
  }
  if (auto rep = validate_lr(res.sum); !rep.ok)
    throw std::logic_error("summation result is not a valid filling: " +
                           rep.joined());
  return res;
}

}  // namespace lr

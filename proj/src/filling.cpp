#include "lr/filling.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lr {

LRFilling::LRFilling(Partition mu_, Partition nu_, Partition lambda_,
                     std::vector<std::vector<Int>> k_)
    : k(std::move(k_)) {
  const int r = static_cast<int>(k.size());
  if (mu_.length() > r || nu_.length() > r || lambda_.length() > r)
    throw std::invalid_argument("filling: type partition longer than the k triangle");
  for (int j = 1; j <= r; ++j)
    if (static_cast<int>(k[j - 1].size()) != j)
      throw std::invalid_argument("filling: k row " + std::to_string(j) + " needs " +
                                  std::to_string(j) + " entries");
  mu = zero_padded(mu_, r);
  nu = zero_padded(nu_, r);
  lambda = zero_padded(lambda_, r);
}

Int LRFilling::K(int i, int j) const {
  if (i < 1 || j < i || j > rows())
    throw std::invalid_argument("k index out of range");
  return k[j - 1][i - 1];
}

Int& LRFilling::K(int i, int j) {
  if (i < 1 || j < i || j > rows())
    throw std::invalid_argument("k index out of range");
  return k[j - 1][i - 1];
}

void ValidationReport::fail(const std::string& msg) {
  ok = false;
  failures.push_back(msg);
}

std::string ValidationReport::joined() const {
  std::string out;
  for (const auto& f : failures) {
    if (!out.empty()) out += "; ";
    out += f;
  }
  return out;
}

Int content_prefix(const LRFilling& f, int i, int j) {
  Int s = 0;
  for (int row = i; row <= std::min(j, f.rows()); ++row) s += f.K(i, row);
  return s;
}

std::vector<Int> row_labels(const LRFilling& f, int j) {
  std::vector<Int> out;
  for (int i = 1; i <= j; ++i)
    out.insert(out.end(), static_cast<size_t>(f.K(i, j)), static_cast<Int>(i));
  return out;
}

TableauGrid filling_to_grid(const LRFilling& f) {
  const auto rep = validate_lr(f);
  if (!rep.ok)
    throw std::invalid_argument("filling_to_grid requires a valid filling: " + rep.joined());
  TableauGrid g;
  g.content_bound = f.rows();
  g.rows.resize(f.rows());
  for (int j = 1; j <= f.rows(); ++j) {
    auto& row = g.rows[j - 1];
    row.assign(static_cast<size_t>(f.mu.part(j)), 0);
    const auto labels = row_labels(f, j);
    row.insert(row.end(), labels.begin(), labels.end());
  }
  return g;
}

LRFilling grid_to_filling(const TableauGrid& g, const Partition& mu, const Partition& nu,
                          const Partition& lambda) {
  const int r = std::max({mu.length(), nu.length(), lambda.length()});
  if (static_cast<int>(g.rows.size()) != r)
    throw std::invalid_argument("grid has " + std::to_string(g.rows.size()) +
                                " rows, expected " + std::to_string(r));
  std::vector<std::vector<Int>> k(r);
  for (int j = 1; j <= r; ++j) {
    k[j - 1].assign(j, 0);
    const auto& row = g.rows[j - 1];
    if (static_cast<Int>(row.size()) != lambda.part(j))
      throw std::invalid_argument("row " + std::to_string(j) + " has length " +
                                  std::to_string(row.size()) + ", expected lambda_" +
                                  std::to_string(j) + " = " + std::to_string(lambda.part(j)));
    for (size_t c = 0; c < row.size(); ++c) {
      const bool in_inner = static_cast<Int>(c) < mu.part(j);
      if (in_inner != (row[c] == 0))
        throw std::invalid_argument("row " + std::to_string(j) +
                                    ": inner cells must fill exactly the first mu_" +
                                    std::to_string(j) + " = " + std::to_string(mu.part(j)) +
                                    " positions");
      if (row[c] == 0) continue;
      if (row[c] < 1 || row[c] > j)
        throw std::invalid_argument("row " + std::to_string(j) + " holds label " +
                                    std::to_string(row[c]) + " outside 1.." +
                                    std::to_string(j));
      ++k[j - 1][row[c] - 1];
    }
  }
  for (int i = 1; i <= r; ++i) {
    Int total = 0;
    for (int j = i; j <= r; ++j) total += k[j - 1][i - 1];
    if (total != nu.part(i))
      throw std::invalid_argument("label " + std::to_string(i) + " appears " +
                                  std::to_string(total) + " times, expected nu_" +
                                  std::to_string(i) + " = " + std::to_string(nu.part(i)));
  }
  return LRFilling(mu, nu, lambda, std::move(k));
}

ValidationReport validate_lr(const LRFilling& f) {
  ValidationReport rep;
  const int r = f.rows();
  auto sub = [](int i, int j) {
    return "{" + std::to_string(i) + "," + std::to_string(j) + "}";
  };
  for (int j = 1; j <= r; ++j)
    for (int i = 1; i <= j; ++i)
      if (f.K(i, j) < 0) rep.fail("k_" + sub(i, j) + " is negative");
  for (int j = 1; j <= r; ++j) {
    Int s = f.mu.part(j);
    for (int i = 1; i <= j; ++i) s += f.K(i, j);
    if (s != f.lambda.part(j))
      rep.fail("row sum (j=" + std::to_string(j) + "): " + std::to_string(s) +
               " != lambda_" + std::to_string(j) + " = " + std::to_string(f.lambda.part(j)));
  }
  for (int i = 1; i <= r; ++i) {
    Int s = content_prefix(f, i, r);
    if (s != f.nu.part(i))
      rep.fail("content sum (i=" + std::to_string(i) + "): " + std::to_string(s) +
               " != nu_" + std::to_string(i) + " = " + std::to_string(f.nu.part(i)));
  }
  for (int j = 2; j <= r; ++j)
    for (int i = 1; i <= j; ++i) {
      Int lhs = f.mu.part(j);
      for (int s = 1; s <= i; ++s) lhs += f.K(s, j);
      Int rhs = f.mu.part(j - 1);
      for (int s = 1; s + 1 <= i; ++s) rhs += f.K(s, j - 1);
      if (lhs > rhs)
        rep.fail("column strict (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                 "): " + std::to_string(lhs) + " > " + std::to_string(rhs));
    }
  for (int i = 1; i + 1 <= r; ++i)
    for (int j = i; j + 1 <= r; ++j) {
      Int lhs = content_prefix(f, i + 1, j + 1);
      Int rhs = content_prefix(f, i, j);
      if (lhs > rhs)
        rep.fail("lattice word (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                 "): " + std::to_string(lhs) + " > " + std::to_string(rhs));
    }
  return rep;
}

namespace {

// Depth-first search over cells in row-major order. For each free cell the
// admissible interval is the intersection of the row remainder, the content
// cap, the column-strictness cap, and the word cap; the diagonal cell and the
// last row are forced by the row and content sums respectively.
template <class Emit>
void search_cell(const Partition& mu, const Partition& nu, const Partition& lambda,
                 int j, int i, std::vector<std::vector<Int>>& k, const Emit& emit) {
  const int r = lambda.length();
  if (j > r) {
    emit(k);
    return;
  }
  if (i > j) {
    search_cell(mu, nu, lambda, j + 1, 1, k, emit);
    return;
  }
  Int used_row = 0;
  for (int s = 1; s < i; ++s) used_row += k[j - 1][s - 1];
  Int content_before = 0;
  for (int s = i; s < j; ++s) content_before += k[s - 1][i - 1];

  const Int row_rem = lambda.part(j) - mu.part(j) - used_row;
  Int lo = 0;
  Int hi = std::min(row_rem, nu.part(i) - content_before);
  if (j >= 2) {
    Int cap = mu.part(j - 1) - mu.part(j) - used_row;
    for (int s = 1; s < i; ++s) cap += k[j - 2][s - 1];
    hi = std::min(hi, cap);
  }
  if (i >= 2) {
    Int cap = -content_before;
    for (int s = i - 1; s < j; ++s) cap += k[s - 1][i - 2];
    hi = std::min(hi, cap);
  }
  if (i == j) {  // row sum fixes the diagonal entry
    lo = std::max(lo, row_rem);
    hi = std::min(hi, row_rem);
  }
  if (j == r) {  // content sum fixes the whole last row
    const Int v = nu.part(i) - content_before;
    lo = std::max(lo, v);
    hi = std::min(hi, v);
  }
  for (Int v = lo; v <= hi; ++v) {
    k[j - 1][i - 1] = v;
    search_cell(mu, nu, lambda, j, i + 1, k, emit);
  }
  k[j - 1][i - 1] = 0;
}

template <class Emit>
void search_all(const Partition& mu, const Partition& nu, const Partition& lambda,
                const Emit& emit) {
  if (weight(mu) + weight(nu) != weight(lambda)) return;
  const int r = std::max({mu.length(), nu.length(), lambda.length()});
  const Partition mp = zero_padded(mu, r), np = zero_padded(nu, r), lp = zero_padded(lambda, r);
  std::vector<std::vector<Int>> k(r);
  for (int j = 1; j <= r; ++j) k[j - 1].assign(j, 0);
  search_cell(mp, np, lp, 1, 1, k, emit);
}

}  // namespace

std::vector<LRFilling> enumerate_fillings(const Partition& mu, const Partition& nu,
                                          const Partition& lambda) {
  std::vector<LRFilling> out;
  const int r = std::max({mu.length(), nu.length(), lambda.length()});
  const Partition mp = zero_padded(mu, r), np = zero_padded(nu, r), lp = zero_padded(lambda, r);
  search_all(mu, nu, lambda, [&](const std::vector<std::vector<Int>>& k) {
    out.emplace_back(mp, np, lp, k);
  });
  return out;
}

Int count_fillings(const Partition& mu, const Partition& nu, const Partition& lambda) {
  Int n = 0;
  search_all(mu, nu, lambda, [&](const std::vector<std::vector<Int>>&) { ++n; });
  return n;
}

LRFilling random_filling(std::mt19937& rng, int nrows, Int max_part) {
  const int r = nrows;
  std::uniform_int_distribution<Int> mu_dist(0, std::max<Int>(0, max_part / 2));
  std::vector<Int> mu_parts(r);
  for (auto& m : mu_parts) m = mu_dist(rng);
  std::sort(mu_parts.rbegin(), mu_parts.rend());
  const Partition mu = Partition(mu_parts);

  std::vector<std::vector<Int>> k(r);
  std::vector<Int> lambda_parts(r, 0);
  for (int j = 1; j <= r; ++j) {
    k[j - 1].assign(j, 0);
    const Int row_cap = (j == 1 ? max_part : lambda_parts[j - 2]);
    Int used_row = 0;
    for (int i = 1; i <= j; ++i) {
      Int hi = row_cap - mu.part(j) - used_row;
      Int content_before = 0;
      for (int s = i; s < j; ++s) content_before += k[s - 1][i - 1];
      hi = std::min(hi, max_part - content_before);
      if (j >= 2) {
        Int cap = mu.part(j - 1) - mu.part(j) - used_row;
        for (int s = 1; s < i; ++s) cap += k[j - 2][s - 1];
        hi = std::min(hi, cap);
      }
      if (i >= 2) {
        Int cap = -content_before;
        for (int s = i - 1; s < j; ++s) cap += k[s - 1][i - 2];
        hi = std::min(hi, cap);
      }
      const Int v = hi <= 0 ? 0 : std::uniform_int_distribution<Int>(0, hi)(rng);
      k[j - 1][i - 1] = v;
      used_row += v;
    }
    lambda_parts[j - 1] = mu.part(j) + used_row;
  }
  std::vector<Int> nu_parts(r, 0);
  for (int i = 1; i <= r; ++i)
    for (int s = i; s <= r; ++s) nu_parts[i - 1] += k[s - 1][i - 1];

  LRFilling f(mu, Partition(nu_parts), Partition(lambda_parts), std::move(k));
  const auto rep = validate_lr(f);
  if (!rep.ok)
    throw std::logic_error("random_filling produced an invalid filling: " + rep.joined());
  return f;
}

}  // namespace lr

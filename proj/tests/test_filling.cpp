#include "doctest.h"
#include "lr/filling.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

using namespace lr;

namespace {

Partition P(std::vector<Int> v) { return Partition(std::move(v)); }

LRFilling F(std::vector<Int> mu, std::vector<Int> nu, std::vector<Int> lambda,
            std::vector<std::vector<Int>> k) {
  return LRFilling(P(std::move(mu)), P(std::move(nu)), P(std::move(lambda)), std::move(k));
}

// Independent oracle: walk the full box 0 <= k_{ij} <= min(lambda_j - mu_j, nu_i)
// and keep whatever validate_lr accepts. Deliberately shares no pruning logic
// with count_fillings.
Int brute_count(const Partition& mu, const Partition& nu, const Partition& lambda) {
  const int r = std::max({mu.length(), nu.length(), lambda.length()});
  std::vector<std::pair<int, int>> cells;
  for (int j = 1; j <= r; ++j)
    for (int i = 1; i <= j; ++i) cells.push_back({i, j});
  std::vector<std::vector<Int>> k(r);
  for (int j = 1; j <= r; ++j) k[j - 1].assign(j, 0);
  Int count = 0;
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == cells.size()) {
      LRFilling f(zero_padded(mu, r), zero_padded(nu, r), zero_padded(lambda, r), k);
      if (validate_lr(f).ok) ++count;
      return;
    }
    auto [i, j] = cells[idx];
    const Int cap = std::min(lambda.part(j) - mu.part(j), nu.part(i));
    for (Int v = 0; v <= cap; ++v) {
      k[j - 1][i - 1] = v;
      self(self, idx + 1);
    }
    k[j - 1][i - 1] = 0;
  };
  rec(rec, 0);
  return count;
}

// The skew tableau with lambda=(11,10,7,5), mu=(7,4,2,1), nu=(8,5,4,2).
LRFilling paper_tableau() {
  return F({7, 4, 2, 1}, {8, 5, 4, 2}, {11, 10, 7, 5},
           {{4}, {2, 4}, {1, 1, 3}, {1, 0, 1, 2}});
}

// The filling corresponding to the size-5 hive example.
LRFilling hive_tableau() {
  return F({10, 9, 5, 3, 1}, {12, 11, 7, 6, 1}, {18, 16, 12, 11, 8},
           {{8}, {0, 7}, {2, 1, 4}, {1, 2, 2, 3}, {1, 1, 1, 3, 1}});
}

}  // namespace

TEST_CASE("constructor checks triangular shape") {
  CHECK_THROWS_AS(F({1}, {1}, {2}, {{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(F({1}, {1}, {2}, {{1}, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(F({1, 1, 1}, {1}, {2}, {{1}}), std::invalid_argument);
  CHECK_NOTHROW(F({1}, {1}, {2}, {{1}}));
  CHECK_NOTHROW(F({}, {}, {}, {}));
}

TEST_CASE("skew tableau example validates") {
  const auto f = paper_tableau();
  const auto rep = validate_lr(f);
  CHECK(rep.ok);
  CHECK(rep.failures.empty());
  CHECK(f.K(2, 4) == 0);
  CHECK(content_prefix(f, 1, 4) == 8);
}

TEST_CASE("swapping k_12 and k_22 breaks the content sums") {
  auto f = paper_tableau();
  std::swap(f.K(1, 2), f.K(2, 2));
  const auto rep = validate_lr(f);
  CHECK(!rep.ok);
  const bool content1 = std::any_of(rep.failures.begin(), rep.failures.end(), [](const auto& m) {
    return m.find("content sum (i=1)") != std::string::npos;
  });
  CHECK(content1);
}

TEST_CASE("empty and zero-content fillings validate") {
  CHECK(validate_lr(F({}, {}, {}, {})).ok);
  CHECK(validate_lr(F({3, 1}, {0, 0}, {3, 1}, {{0}, {0, 0}})).ok);
  CHECK(validate_lr(F({3, 1}, {}, {3, 1}, {{0}, {0, 0}})).ok);
}

TEST_CASE("each condition is reported with its indices") {
  auto bad_row = F({1}, {2}, {2}, {{0}});  // row sum off by one, content off too
  auto rep = validate_lr(bad_row);
  CHECK(!rep.ok);
  CHECK(rep.joined().find("row sum (j=1)") != std::string::npos);

  // column strictness: rows [_,1],[1,1] puts two 1's in one column
  auto bad_col = F({1, 0}, {3, 0}, {2, 2}, {{1}, {2, 0}});
  rep = validate_lr(bad_col);
  CHECK(!rep.ok);
  CHECK(rep.joined().find("column strict") != std::string::npos);

  // word condition: a 2 in row 2 with no 1 in row 1
  auto bad_word = F({3, 0}, {1, 1}, {3, 2}, {{0}, {1, 1}});
  rep = validate_lr(bad_word);
  CHECK(!rep.ok);
  CHECK(rep.joined().find("lattice word (i=1, j=1)") != std::string::npos);

  auto negative = F({1}, {-0}, {0}, {{-1}});
  rep = validate_lr(negative);
  CHECK(!rep.ok);
  CHECK(rep.joined().find("negative") != std::string::npos);
}

TEST_CASE("grid round trip") {
  const auto f = paper_tableau();
  const auto g = filling_to_grid(f);
  REQUIRE(g.rows.size() == 4);
  CHECK(g.rows[0] == std::vector<Int>{0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1});
  CHECK(g.rows[1] == std::vector<Int>{0, 0, 0, 0, 1, 1, 2, 2, 2, 2});
  CHECK(g.rows[2] == std::vector<Int>{0, 0, 1, 2, 3, 3, 3});
  CHECK(g.rows[3] == std::vector<Int>{0, 1, 3, 4, 4});
  const auto back = grid_to_filling(g, f.mu, f.nu, f.lambda);
  CHECK(back.k == f.k);
  CHECK(back.mu == f.mu);
}

TEST_CASE("grid round trip on the r=2 example") {
  const auto f = F({2, 1}, {2, 1}, {3, 3}, {{1}, {1, 1}});
  const auto g = filling_to_grid(f);
  CHECK(g.rows[0] == std::vector<Int>{0, 0, 1});
  CHECK(g.rows[1] == std::vector<Int>{0, 1, 2});
  CHECK(grid_to_filling(g, f.mu, f.nu, f.lambda).k == f.k);
}

TEST_CASE("grid_to_filling rejects malformed grids") {
  const auto f = F({2, 1}, {2, 1}, {3, 3}, {{1}, {1, 1}});
  auto g = filling_to_grid(f);
  SUBCASE("wrong row length") {
    g.rows[0].push_back(1);
    CHECK_THROWS_AS(grid_to_filling(g, f.mu, f.nu, f.lambda), std::invalid_argument);
  }
  SUBCASE("label above the row index") {
    g.rows[0][2] = 2;
    CHECK_THROWS_AS(grid_to_filling(g, f.mu, f.nu, f.lambda), std::invalid_argument);
  }
  SUBCASE("content mismatch") {
    g.rows[1][2] = 1;
    CHECK_THROWS_AS(grid_to_filling(g, f.mu, f.nu, f.lambda), std::invalid_argument);
  }
  SUBCASE("inner cell out of place") {
    g.rows[1][1] = 0;
    g.rows[1][0] = 1;
    CHECK_THROWS_AS(grid_to_filling(g, f.mu, f.nu, f.lambda), std::invalid_argument);
  }
}

TEST_CASE("all-inner grid gives the zero filling") {
  const auto f = F({3, 1}, {0, 0}, {3, 1}, {{0}, {0, 0}});
  const auto g = filling_to_grid(f);
  for (const auto& row : g.rows)
    for (auto c : row) CHECK(c == 0);
  CHECK(grid_to_filling(g, f.mu, f.nu, f.lambda).k == f.k);
}

TEST_CASE("counting matches the exhaustive oracle on fixed triples") {
  const std::vector<std::array<Partition, 3>> triples = {
      {P({2, 1}), P({2, 1}), P({3, 3})},
      {P({2, 1}), P({2, 1}), P({3, 2, 1})},
      {P({1}), P({1}), P({1, 1})},
      {P({1}), P({1}), P({2})},
      {P({3, 1}), P({}), P({3, 1})},
      {P({2, 2}), P({2, 1}), P({4, 2, 1})},
      {P({3, 2, 1}), P({3, 2, 1}), P({4, 4, 2, 2})},
      {P({9, 4}), P({12, 6}), P({18, 13})},
      {P({10, 6, 1}), P({13, 7, 1}), P({17, 12, 9})},
  };
  for (const auto& [mu, nu, lambda] : triples) {
    CAPTURE(to_string(mu));
    CAPTURE(to_string(nu));
    CAPTURE(to_string(lambda));
    const Int expected = brute_count(mu, nu, lambda);
    CHECK(count_fillings(mu, nu, lambda) == expected);
    CHECK(static_cast<Int>(enumerate_fillings(mu, nu, lambda).size()) == expected);
  }
}

TEST_CASE("fixed small counts") {
  CHECK(count_fillings(P({2, 1}), P({2, 1}), P({3, 3})) == 1);
  CHECK(count_fillings(P({2, 1}), P({2, 1}), P({3, 2, 1})) == 2);
  CHECK(count_fillings(P({1}), P({1}), P({1, 1})) == 1);
  CHECK(count_fillings(P({1}), P({1}), P({2})) == 1);
  CHECK(count_fillings(P({3, 1}), P({}), P({3, 1})) == 1);
  CHECK(count_fillings(P({}), P({}), P({})) == 1);
  CHECK(count_fillings(P({2}), P({1}), P({2})) == 0);  // weights differ
}

TEST_CASE("enumeration is lexicographic in the row-major k sequence") {
  const auto list = enumerate_fillings(P({2, 1}), P({2, 1}), P({3, 2, 1}));
  REQUIRE(list.size() == 2);
  CHECK(list[0].k == std::vector<std::vector<Int>>{{1}, {0, 1}, {1, 0, 0}});
  CHECK(list[1].k == std::vector<std::vector<Int>>{{1}, {1, 0}, {0, 1, 0}});
  auto key = [](const LRFilling& f) {
    std::vector<Int> flat;
    for (const auto& row : f.k) flat.insert(flat.end(), row.begin(), row.end());
    return flat;
  };
  CHECK(key(list[0]) < key(list[1]));
}

TEST_CASE("the hive-example filling is among the enumerated fillings") {
  const auto target = hive_tableau();
  CHECK(validate_lr(target).ok);
  const auto list = enumerate_fillings(target.mu, target.nu, target.lambda);
  CHECK(std::any_of(list.begin(), list.end(),
                    [&](const LRFilling& f) { return f.k == target.k; }));
}

TEST_CASE("enumerated fillings all validate and satisfy derived corollaries") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 12; ++trial) {
    const auto seed = random_filling(rng, 1 + static_cast<int>(rng() % 4), 5);
    const auto list = enumerate_fillings(seed.mu, seed.nu, seed.lambda);
    REQUIRE(!list.empty());
    CHECK(std::any_of(list.begin(), list.end(),
                      [&](const LRFilling& f) { return f.k == seed.k; }));
    for (const auto& f : list) {
      CHECK(validate_lr(f).ok);
      // diagonal entries weakly decrease
      for (int j = 2; j <= f.rows(); ++j) CHECK(f.K(j, j) <= f.K(j - 1, j - 1));
      // equal adjacent content parts: the smaller label finishes strictly higher
      for (int i = 1; i + 1 <= f.rows(); ++i) {
        if (f.nu.part(i) != f.nu.part(i + 1) || f.nu.part(i) == 0) continue;
        auto last_row = [&](int label) {
          int last = 0;
          for (int j = label; j <= f.rows(); ++j)
            if (f.K(label, j) > 0) last = j;
          return last;
        };
        CHECK(last_row(i) < last_row(i + 1));
      }
      // prefix shapes lambda^(0) = mu up to lambda^(r) = lambda stay nested
      std::vector<Int> prev;
      for (int j = 1; j <= f.rows(); ++j) prev.push_back(f.mu.part(j));
      for (int i = 1; i <= f.rows(); ++i) {
        std::vector<Int> cur = prev;
        for (int j = i; j <= f.rows(); ++j) cur[j - 1] += f.K(i, j);
        for (int j = 0; j < f.rows(); ++j) CHECK(prev[j] <= cur[j]);
        prev = cur;
      }
      for (int j = 1; j <= f.rows(); ++j) CHECK(prev[j - 1] == f.lambda.part(j));
    }
  }
}

TEST_CASE("random fillings are valid and bounded") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 4);
    const auto f = random_filling(rng, r, 6);
    CHECK(f.rows() == r);
    CHECK(validate_lr(f).ok);
    CHECK(f.lambda.part(1) <= 6);
    CHECK(f.nu.part(1) <= 6);
  }
}

TEST_CASE("row labels expand the counts in order") {
  const auto f = paper_tableau();
  CHECK(row_labels(f, 1) == std::vector<Int>{1, 1, 1, 1});
  CHECK(row_labels(f, 2) == std::vector<Int>{1, 1, 2, 2, 2, 2});
  CHECK(row_labels(f, 4) == std::vector<Int>{1, 3, 4, 4});
}

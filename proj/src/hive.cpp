#include "lr/hive.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lr {

Hive::Hive(std::vector<std::vector<Int>> rows) : h(std::move(rows)) {
  if (h.empty()) throw std::invalid_argument("hive needs at least the apex row");
  for (size_t p = 0; p < h.size(); ++p)
    if (h[p].size() != p + 1)
      throw std::invalid_argument("hive row " + std::to_string(p) + " needs " +
                                  std::to_string(p + 1) + " entries");
}

Int Hive::H(int p, int q) const {
  if (p < 0 || p > side() || q < 0 || q > p)
    throw std::invalid_argument("hive index out of range");
  return h[p][q];
}

ValidationReport validate_hive(const Hive& hv) {
  ValidationReport rep;
  const int r = hv.side();
  if (hv.H(0, 0) != 0)
    rep.fail("apex h_{00} = " + std::to_string(hv.H(0, 0)) + ", expected 0");
  auto at = [](int i, int j) {
    return "(i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
  };
  for (int i = 2; i <= r; ++i)
    for (int j = 1; j <= i - 1; ++j) {
      const Int lhs = hv.H(i, j) + hv.H(i - 1, j - 1);
      const Int rhs = hv.H(i - 1, j) + hv.H(i, j - 1);
      if (lhs < rhs)
        rep.fail("right rhombus " + at(i, j) + ": " + std::to_string(lhs) + " < " +
                 std::to_string(rhs));
    }
  for (int i = 2; i <= r; ++i)
    for (int j = 1; j <= i - 1; ++j) {
      const Int lhs = hv.H(i - 1, j) + hv.H(i, j);
      const Int rhs = hv.H(i - 1, j - 1) + hv.H(i, j + 1);
      if (lhs < rhs)
        rep.fail("vertical rhombus " + at(i, j) + ": " + std::to_string(lhs) + " < " +
                 std::to_string(rhs));
    }
  for (int i = 1; i <= r - 1; ++i)
    for (int j = 0; j <= i - 1; ++j) {
      const Int lhs = hv.H(i, j) + hv.H(i, j + 1);
      const Int rhs = hv.H(i - 1, j) + hv.H(i + 1, j + 1);
      if (lhs < rhs)
        rep.fail("left rhombus " + at(i, j) + ": " + std::to_string(lhs) + " < " +
                 std::to_string(rhs));
    }
  return rep;
}

HiveType hive_type(const Hive& hv) {
  const int r = hv.side();
  std::vector<Int> mu(r), nu(r), lambda(r);
  for (int i = 1; i <= r; ++i) {
    mu[i - 1] = hv.H(i, 0) - hv.H(i - 1, 0);
    nu[i - 1] = hv.H(r, i) - hv.H(r, i - 1);
    lambda[i - 1] = hv.H(i, i) - hv.H(i - 1, i - 1);
  }
  return {Partition(mu), Partition(nu), Partition(lambda)};
}

Hive hive_from_filling(const LRFilling& f) {
  const int r = f.rows();
  std::vector<std::vector<Int>> h(r + 1);
  for (int p = 0; p <= r; ++p) {
    h[p].assign(p + 1, 0);
    Int mu_prefix = 0;
    for (int s = 1; s <= p; ++s) mu_prefix += f.mu.part(s);
    for (int q = 0; q <= p; ++q) {
      Int total = mu_prefix;
      for (int i = 1; i <= q; ++i)
        for (int j = i; j <= p; ++j) total += f.K(i, j);
      h[p][q] = total;
    }
  }
  return Hive(std::move(h));
}

LRFilling filling_from_hive(const Hive& hv) {
  const int r = hv.side();
  std::vector<std::vector<Int>> k(r);
  for (int j = 1; j <= r; ++j) {
    k[j - 1].assign(j, 0);
    for (int i = 1; i < j; ++i)
      k[j - 1][i - 1] =
          hv.H(j - 1, i - 1) + hv.H(j, i) - hv.H(j - 1, i) - hv.H(j, i - 1);
    k[j - 1][j - 1] = hv.H(j, j) - hv.H(j, j - 1);
  }
  const HiveType t = hive_type(hv);
  return LRFilling(t.mu, t.nu, t.lambda, std::move(k));
}

namespace {

template <class Emit>
void hive_search(int p, int q, int r, std::vector<std::vector<Int>>& h, const Emit& emit) {
  if (p > r - 1) {
    Hive hv{h};
    if (validate_hive(hv).ok) emit(hv);
    return;
  }
  if (q > p - 1) {
    hive_search(p + 1, 1, r, h, emit);
    return;
  }
  // Necessary window from the rhombi whose other three corners are already
  // placed; the leaf re-validates everything.
  const Int lo = h[p][q - 1] + h[p - 1][q] - h[p - 1][q - 1];
  Int hi = h[p - 1][q - 1] + h[p - 1][q] - h[p - 2][q - 1];
  if (q >= 2) hi = std::min(hi, h[p - 1][q - 1] + h[p][q - 1] - h[p - 1][q - 2]);
  for (Int v = lo; v <= hi; ++v) {
    h[p][q] = v;
    hive_search(p, q + 1, r, h, emit);
  }
  h[p][q] = 0;
}

template <class Emit>
void hive_search_all(const Partition& mu, const Partition& nu, const Partition& lambda,
                     const Emit& emit) {
  if (weight(mu) + weight(nu) != weight(lambda)) return;
  const int r = std::max({mu.length(), nu.length(), lambda.length()});
  std::vector<std::vector<Int>> h(r + 1);
  for (int p = 0; p <= r; ++p) h[p].assign(p + 1, 0);
  Int acc = 0;
  for (int p = 1; p <= r; ++p) {
    acc += mu.part(p);
    h[p][0] = acc;
  }
  acc = 0;
  for (int p = 1; p <= r; ++p) {
    acc += lambda.part(p);
    h[p][p] = acc;
  }
  acc = weight(mu);
  for (int q = 1; q <= r; ++q) {
    acc += nu.part(q);
    h[r][q] = acc;
  }
  if (h[r][r] != weight(lambda)) return;  // cannot happen after the weight check
  hive_search(2, 1, r, h, emit);
}

}  // namespace

std::vector<Hive> enumerate_hives(const Partition& mu, const Partition& nu,
                                  const Partition& lambda) {
  std::vector<Hive> out;
  hive_search_all(mu, nu, lambda, [&](const Hive& hv) { out.push_back(hv); });
  return out;
}

Int count_hives(const Partition& mu, const Partition& nu, const Partition& lambda) {
  Int n = 0;
  hive_search_all(mu, nu, lambda, [&](const Hive&) { ++n; });
  return n;
}

}  // namespace lr

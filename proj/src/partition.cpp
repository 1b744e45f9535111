#include "lr/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lr {

Partition::Partition(std::vector<Int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0)
      throw std::invalid_argument("partition part is negative");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("partition index is 1-based");
  return i <= length() ? parts[i - 1] : 0;
}

Partition direct_sum(const Partition& a, const Partition& b) {
  std::vector<Int> merged;
  merged.reserve(a.parts.size() + b.parts.size());
  std::merge(a.parts.begin(), a.parts.end(), b.parts.begin(), b.parts.end(),
             std::back_inserter(merged), std::greater<Int>());
  return Partition(std::move(merged));
}

bool contains(const Partition& outer, const Partition& inner) {
  int n = std::max(outer.length(), inner.length());
  for (int i = 1; i <= n; ++i)
    if (inner.part(i) > outer.part(i)) return false;
  return true;
}

Int weight(const Partition& a) {
  return std::accumulate(a.parts.begin(), a.parts.end(), Int{0});
}

Partition zero_padded(const Partition& a, int len) {
  if (len < a.length())
    throw std::invalid_argument("zero_padded: target length too short");
  std::vector<Int> p = a.parts;
  p.resize(len, 0);
  return Partition(std::move(p));
}

std::string to_string(const Partition& a) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < a.length(); ++i) {
    if (i) os << ',';
    os << a.parts[i];
  }
  os << ')';
  return os.str();
}

Partition parse_partition(const std::string& s) {
  std::string body = s;
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')')
      throw std::invalid_argument("unbalanced parenthesis in partition");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<Int> parts;
  if (!body.empty()) {
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      size_t pos = 0;
      Int v = std::stoll(tok, &pos);
      while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
      if (pos != tok.size())
        throw std::invalid_argument("bad partition entry: " + tok);
      parts.push_back(v);
    }
    if (!body.empty() && body.back() == ',')
      throw std::invalid_argument("trailing comma in partition");
  }
  return Partition(std::move(parts));
}

SkewShape::SkewShape(const Partition& out, const Partition& in) {
  if (!lr::contains(out, in))
    throw std::invalid_argument("skew shape: inner not contained in outer");
  int n = std::max(out.length(), in.length());
  outer = zero_padded(out, n);
  inner = zero_padded(in, n);
}

}  // namespace lr

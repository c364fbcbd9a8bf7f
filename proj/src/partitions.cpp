#include "bgw/partitions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bgw {

long weight(const IndexVector& d) {
  long s = 0;
  for (int v : d) {
    if (v < 0) throw std::domain_error("weight: negative index");
    s += v;
  }
  return s;
}

long x_of(const IndexVector& d) { return 2 * weight(d) + static_cast<long>(d.size()); }

long genus(const IndexVector& d) { return weight(d) + 1; }

IndexVector sorted_key(const IndexVector& d) {
  IndexVector s = d;
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<long> multiplicities(const IndexVector& d) {
  int mx = -1;
  for (int v : d) mx = std::max(mx, v);
  std::vector<long> p(static_cast<size_t>(mx + 1), 0);
  for (int v : d) ++p[static_cast<size_t>(v)];
  return p;
}

int order_cmp(const IndexVector& a, const IndexVector& b) {
  if (weight(a) != weight(b))
    throw std::invalid_argument("order_cmp: partitions of different weights");
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  IndexVector sa = sorted_key(a), sb = sorted_key(b);
  for (size_t i = 0; i < sa.size(); ++i)
    if (sa[i] != sb[i]) return sa[i] < sb[i] ? -1 : 1;
  return 0;
}

namespace {

void extend_partition(long remaining, int minpart, int slots, IndexVector& cur,
                      std::vector<IndexVector>& out) {
  if (slots == 0) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  if (remaining < static_cast<long>(minpart) * slots) return;
  for (int v = minpart; static_cast<long>(v) * slots <= remaining; ++v) {
    cur.push_back(v);
    extend_partition(remaining - v, v, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<IndexVector> enumerate_partitions(long w) {
  if (w < 0) throw std::domain_error("enumerate_partitions: negative weight");
  std::vector<IndexVector> out;
  if (w == 0) {
    out.push_back({});
    return out;
  }
  for (int len = 1; len <= w; ++len) {
    IndexVector cur;
    extend_partition(w, 1, len, cur, out);
  }
  return out;
}

std::vector<IndexVector> tuples_with_x(long X, int n) {
  std::vector<IndexVector> out;
  if (n < 0) throw std::domain_error("tuples_with_x: negative length");
  long twice = X - n;
  if (twice < 0 || twice % 2 != 0) return out;
  IndexVector cur;
  extend_partition(twice / 2, 0, n, cur, out);
  return out;
}

std::string render(const IndexVector& d) {
  std::ostringstream os;
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) os << ',';
    os << d[i];
  }
  return os.str();
}

IndexVector parse_partition(const std::string& s) {
  IndexVector d;
  if (s.empty()) return d;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size() || v < 0)
      throw std::invalid_argument("parse_partition: bad entry '" + tok + "'");
    d.push_back(v);
  }
  return d;
}

}  // namespace bgw

#include "bgw/dvv.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "bgw/intfun.hpp"

namespace bgw {
namespace {

const Rational kHalf(1, 2);
const Rational kEighth(1, 8);

struct GroupedRest {
  std::vector<int> values;   // distinct values of the remaining entries
  std::vector<long> counts;  // multiplicity of each value
};

GroupedRest group(const IndexVector& rest) {
  GroupedRest g;
  IndexVector s = sorted_key(rest);
  for (int v : s) {
    if (!g.values.empty() && g.values.back() == v)
      ++g.counts.back();
    else {
      g.values.push_back(v);
      g.counts.push_back(1);
    }
  }
  return g;
}

}  // namespace

Rational BgwTable::lookup(const IndexVector& key) const {
  std::shared_lock lk(mu_);
  auto it = tab_.find(key);
  if (it == tab_.end()) throw std::out_of_range("BgwTable: miss");
  return it->second;
}

Rational BgwTable::b(const IndexVector& d) {
  if (d.empty()) throw std::invalid_argument("BgwTable::b: empty tuple");
  for (int v : d)
    if (v < 0) throw std::domain_error("BgwTable::b: negative index");
  IndexVector key = sorted_key(d);
  {
    std::shared_lock lk(mu_);
    auto it = tab_.find(key);
    if (it != tab_.end()) return it->second;
  }
  Rational v = compute(key);
  std::unique_lock lk(mu_);
  tab_.emplace(std::move(key), v);
  return v;
}

// One step of the recursion in which the first entry dd of the tuple is
// distinguished.  Every B on the right-hand side has X smaller by exactly 1,
// which is what makes the recursion terminate.
Rational BgwTable::compute(const IndexVector& d) {
  int dd = d[0];
  IndexVector rest(d.begin() + 1, d.end());
  if (rest.empty() && dd == 0) return kEighth;
  Rational total(0);

  // tau_dd merges with one of the other insertions
  for (size_t i = 0; i < rest.size(); ++i) {
    IndexVector e = rest;
    e[i] = rest[i] + dd;
    total += Rational(2L * rest[i] + 1) * b(e);
  }

  // splits a + b = dd - 1, connected and disconnected parts
  GroupedRest g = group(rest);
  for (int a = 0; a <= dd - 1; ++a) {
    int bb = dd - 1 - a;
    IndexVector joined;
    joined.reserve(rest.size() + 2);
    joined.push_back(a);
    joined.push_back(bb);
    joined.insert(joined.end(), rest.begin(), rest.end());
    total += kHalf * b(joined);

    // sub-multisets of rest, grouped by multiplicity
    size_t R = g.values.size();
    std::vector<long> take(R, 0);
    while (true) {
      Int ways = 1;
      for (size_t r = 0; r < R; ++r) ways *= binomial(Int(g.counts[r]), take[r]);
      IndexVector left{a}, right{bb};
      for (size_t r = 0; r < R; ++r) {
        left.insert(left.end(), static_cast<size_t>(take[r]), g.values[r]);
        right.insert(right.end(), static_cast<size_t>(g.counts[r] - take[r]),
                     g.values[r]);
      }
      total += kHalf * Rational(ways) * b(left) * b(right);
      size_t r = 0;
      while (r < R && take[r] == g.counts[r]) take[r++] = 0;
      if (r == R) break;
      ++take[r];
    }
  }
  return total;
}

void BgwTable::warm(long x_max) {
  for (long X = 1; X <= x_max; ++X)
    for (int n = 1; n <= X; ++n)
      for (const IndexVector& d : tuples_with_x(X, n)) b(d);
}

size_t BgwTable::size() const {
  std::shared_lock lk(mu_);
  return tab_.size();
}

long BgwTable::x_max_seen() const {
  std::shared_lock lk(mu_);
  long m = 0;
  for (const auto& [k, v] : tab_) m = std::max(m, x_of(k));
  return m;
}

std::vector<std::pair<IndexVector, Rational>> BgwTable::snapshot() const {
  std::shared_lock lk(mu_);
  std::vector<std::pair<IndexVector, Rational>> out(tab_.begin(), tab_.end());
  lk.unlock();
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    long xa = x_of(a.first), xb = x_of(b.first);
    if (xa != xb) return xa < xb;
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return out;
}

void BgwTable::insert(const IndexVector& d, const Rational& v) {
  if (!std::is_sorted(d.begin(), d.end()))
    throw std::invalid_argument("BgwTable::insert: key must be ascending");
  std::unique_lock lk(mu_);
  tab_[d] = v;
}

Rational compute_B(const IndexVector& d, BgwTable& t) { return t.b(d); }

Rational compute_B_ordered(const IndexVector& d, BgwTable& t) {
  if (d.empty()) throw std::invalid_argument("compute_B_ordered: empty tuple");
  int dd = d[0];
  IndexVector rest(d.begin() + 1, d.end());
  if (rest.empty() && dd == 0) return kEighth;
  Rational total(0);
  for (size_t i = 0; i < rest.size(); ++i) {
    IndexVector e = rest;
    e[i] = rest[i] + dd;
    total += Rational(2L * rest[i] + 1) * t.b(e);
  }
  for (int a = 0; a <= dd - 1; ++a) {
    int bb = dd - 1 - a;
    IndexVector joined{a, bb};
    joined.insert(joined.end(), rest.begin(), rest.end());
    total += kHalf * t.b(joined);
    // plain subset enumeration here; this path is only exercised on small n
    size_t n = rest.size();
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
      IndexVector left{a}, right{bb};
      for (size_t i = 0; i < n; ++i)
        ((mask >> i) & 1 ? left : right).push_back(rest[i]);
      total += kHalf * t.b(left) * t.b(right);
    }
  }
  return total;
}

Rational c_from_b(const IndexVector& d, const Rational& b) {
  long g = genus(d);
  return b * two_pow(2 * g - 1) / Rational(factorial(x_of(d) - 1));
}

Rational compute_C(const IndexVector& d, BgwTable& t) {
  return c_from_b(d, t.b(d));
}

Rational string_reduce(const IndexVector& d, BgwTable& t) {
  if (d.empty() || d[0] != 0)
    throw std::invalid_argument("string_reduce: first entry must be 0");
  IndexVector rest(d.begin() + 1, d.end());
  if (x_of(rest) < 1)
    throw std::invalid_argument("string_reduce: nothing left to reduce to");
  if (2 * genus(d) - 2 + static_cast<long>(d.size()) <= 0)
    throw std::invalid_argument("string_reduce: unstable tuple");
  return Rational(x_of(rest)) * t.b(rest);
}

Rational theta(long X, int n, BgwTable& t) {
  std::vector<IndexVector> cand = tuples_with_x(X, n);
  if (cand.empty())
    throw std::invalid_argument("theta: no tuples with the given X and length");
  Rational best = compute_C(cand[0], t);
  for (size_t i = 1; i < cand.size(); ++i)
    best = std::max(best, compute_C(cand[i], t));
  return best;
}

BoundValue f_bound(long X, long n) {
  if (X < 1 || n < 1) throw std::domain_error("f_bound: arguments must be positive");
  thread_local std::map<std::pair<long, long>, Rational> memo;
  struct Rec {
    std::map<std::pair<long, long>, Rational>& m;
    Rational operator()(long x, long nn) {
      if (nn <= 2 || x <= 7) return Rational(0);
      auto it = m.find({x, nn});
      if (it != m.end()) return it->second;
      Rational v = Rational(2, 3) * (*this)(x - 1, nn - 1) +
                   Rational(1, 3) * (*this)(x - 1, nn + 1) +
                   Rational(4) / Rational((x - 1) * (x - 2));
      m.emplace(std::make_pair(x, nn), v);
      return v;
    }
  } rec{memo};
  return BoundValue{rec(X, n)};
}

}  // namespace bgw

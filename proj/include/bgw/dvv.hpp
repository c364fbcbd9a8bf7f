#pragma once

#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "bgw/partitions.hpp"
#include "bgw/rational.hpp"

namespace bgw {

// Memoized table of the numbers B(d), keyed by the ascending arrangement.
// Reads take a shared lock, so many threads can query a warmed table at once.
class BgwTable {
 public:
  // B(d) for a nonempty tuple of nonnegative indices, in any order.
  Rational b(const IndexVector& d);

  // Fills the table for every ascending tuple (zeros included) with
  // X(d) <= x_max, working upward in X so recursion depth stays flat.
  void warm(long x_max);

  size_t size() const;
  long x_max_seen() const;

  // Entries in canonical order: by X(d), then shorter first, then lex.
  std::vector<std::pair<IndexVector, Rational>> snapshot() const;

  // Direct insertion (cache loading); key must be ascending.
  void insert(const IndexVector& d, const Rational& v);

 private:
  Rational lookup(const IndexVector& key) const;
  Rational compute(const IndexVector& d);

  std::map<IndexVector, Rational> tab_;
  mutable std::shared_mutex mu_;
};

// B(d) via the recursion that distinguishes the first entry of the input.
Rational compute_B(const IndexVector& d, BgwTable& t);

// Same recursion applied verbatim to the given ordering, bypassing the memo
// for the outermost step; used to exhibit permutation invariance.
Rational compute_B_ordered(const IndexVector& d, BgwTable& t);

// C(d) = 2^(2g-1) B(d) / (X(d) - 1)!
Rational compute_C(const IndexVector& d, BgwTable& t);
Rational c_from_b(const IndexVector& d, const Rational& b);

// X(rest) * B(rest) for input (0, rest); errors unless the first entry is 0,
// rest is nonempty, and 2g - 2 + n > 0.
Rational string_reduce(const IndexVector& d, BgwTable& t);

// Brute-force maximum of C over all ascending tuples of length n (zeros
// allowed) with X(d) = X; errors when there are no candidates.
Rational theta(long X, int n, BgwTable& t);

// Affine-in-1/pi upper bound: value = 1/pi + rational_part.
struct BoundValue {
  Rational rational_part;
};
BoundValue f_bound(long X, long n);

}  // namespace bgw

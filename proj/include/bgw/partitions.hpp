#pragma once

#include <string>
#include <vector>

#include "bgw/rational.hpp"

namespace bgw {

// Tuple of tau indices; zeros are allowed, order matters only where stated.
using IndexVector = std::vector<int>;

long weight(const IndexVector& d);              // |d| = sum of entries
long x_of(const IndexVector& d);                // X(d) = sum of (2 d_j + 1)
long genus(const IndexVector& d);               // g = |d| + 1
IndexVector sorted_key(const IndexVector& d);   // ascending copy

// Multiplicity p_r of each value r = 0..max(d); empty input gives {}.
std::vector<long> multiplicities(const IndexVector& d);

// Order on partitions of equal weight: shorter first, then lexicographic on
// the ascending arrangement.  Throws if the weights differ.
int order_cmp(const IndexVector& a, const IndexVector& b);  // -1, 0, +1

// All partitions of `w` into positive parts (ascending within each), listed
// in order_cmp order.  w = 0 yields just the empty partition.
std::vector<IndexVector> enumerate_partitions(long w);

// All ascending tuples d in Z_{>=0}^n (zeros allowed) with X(d) = X.
std::vector<IndexVector> tuples_with_x(long X, int n);

std::string render(const IndexVector& d);       // "1,1,2"
IndexVector parse_partition(const std::string& s);

}  // namespace bgw

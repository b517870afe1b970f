#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "gammaft/rational.hpp"

namespace gammaft {

// One solution (i_1, ..., i_m) of
//   sum_nu nu * i_nu = m        and        sum_nu i_nu = M.
// For m = 0 the vector is empty and M = 0.
struct PartitionVector {
  std::vector<int> multiplicities;  // i_1 .. i_m
  int m = 0;
  int parts = 0;  // M

  bool operator==(const PartitionVector&) const = default;
};

// Enumeration is capped: p(64) is about 1.7M vectors, which bounds memory,
// and every formula downstream needs m <= 8.
inline constexpr int kMaxPartitionM = 64;

// All partitions of m, each exactly once, ordered by decreasing part count M
// and then lexicographically decreasing multiplicities (the table order).
std::vector<PartitionVector> enumerate_partitions(int m);

// p(m), computed by dynamic programming without enumerating.
std::uint64_t partition_count(int m);

// 1 / prod_nu ( i_nu! * (nu!)^{i_nu} ), exact.
Rational faa_weight(const PartitionVector& p);

// Flattened (M, weight) view of enumerate_partitions(m) with weights in long
// double, memoized behind a mutex; hot loops iterate this instead of
// re-enumerating. Snapshots are immutable.
struct PartitionTerm {
  int parts;
  long double weight;
};
std::shared_ptr<const std::vector<PartitionTerm>> partition_terms(int m);

}  // namespace gammaft

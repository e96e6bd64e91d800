#pragma once

#include <cstdint>
#include <vector>

#include "fdaclust/memberships.hpp"

namespace fdaclust {

// Unordered subject-pair agreement counts between a reference partition and a
// predicted one. tp: same cluster in both; tn: different in both; fp: together
// in pred only; fn: together in truth only. tp+fp+fn+tn = n(n-1)/2.
struct PairCounts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  std::int64_t tn = 0;
  std::int64_t total() const { return tp + fp + fn + tn; }
};

// Contingency-table pair counting; equals brute-force O(n^2) enumeration.
PairCounts pair_counts(const Memberships& truth, const Memberships& pred);

double rand_index(const PairCounts& pc);

// tp/(tp+fn+fp); 1 by convention when there are no co-clustered pairs at all
// (two identical all-singleton partitions).
double jaccard_index(const PairCounts& pc);

// Hubert-Arabie adjusted Rand index under the permutation model; 1 by
// convention when the chance-correction denominator vanishes (both partitions
// trivial).
double adjusted_rand(const Memberships& truth, const Memberships& pred);

// Arithmetic mean of per-replication cluster counts S_r.
double average_group_size(const std::vector<int>& counts);

}  // namespace fdaclust

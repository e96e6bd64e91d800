#pragma once

#include <vector>

namespace fdaclust {

// Hard partition of n subjects into clusters 1..C. Two Memberships describe
// the same clustering iff one is a label permutation of the other; all
// comparisons in this project go through partitions_equal, never raw labels.
struct Memberships {
  std::vector<int> labels;  // values in 1..C
  int C = 0;

  Memberships() = default;
  explicit Memberships(std::vector<int> lab);
  Memberships(std::vector<int> lab, int C_);

  int n() const { return static_cast<int>(labels.size()); }
  std::vector<int> cluster_sizes() const;

  // Relabels clusters by order of first subject occurrence. Display only;
  // never used for comparisons.
  Memberships canonical() const;

 private:
  void validate() const;
};

// Label-permutation-invariant partition equality.
bool partitions_equal(const Memberships& a, const Memberships& b);

// Number of subjects whose cluster changes from `prev` to `next`, after
// greedily aligning clusters by overlap. Zero iff the partitions are equal.
int membership_changes(const Memberships& prev, const Memberships& next);

}  // namespace fdaclust

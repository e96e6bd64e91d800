#include "fdaclust/memberships.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "fdaclust/errors.hpp"

namespace fdaclust {

Memberships::Memberships(std::vector<int> lab) : labels(std::move(lab)) {
  C = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
  validate();
}

Memberships::Memberships(std::vector<int> lab, int C_)
    : labels(std::move(lab)), C(C_) {
  validate();
}

void Memberships::validate() const {
  if (labels.empty()) throw DataError("Memberships: empty label list");
  if (C < 1) throw DataError("Memberships: C must be >= 1");
  std::vector<int> counts(C, 0);
  for (int lab : labels) {
    if (lab < 1 || lab > C)
      throw DataError("Memberships: label " + std::to_string(lab) +
                      " outside 1.." + std::to_string(C));
    ++counts[lab - 1];
  }
  for (int c = 0; c < C; ++c)
    if (counts[c] == 0)
      throw DataError("Memberships: cluster " + std::to_string(c + 1) +
                      " is empty");
}

std::vector<int> Memberships::cluster_sizes() const {
  std::vector<int> counts(C, 0);
  for (int lab : labels) ++counts[lab - 1];
  return counts;
}

Memberships Memberships::canonical() const {
  std::vector<int> remap(C, 0);
  std::vector<int> out(labels.size());
  int next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int& slot = remap[labels[i] - 1];
    if (slot == 0) slot = ++next;
    out[i] = slot;
  }
  return Memberships(std::move(out), next);
}

bool partitions_equal(const Memberships& a, const Memberships& b) {
  if (a.labels.size() != b.labels.size())
    throw DataError("partitions_equal: length mismatch");
  // A bijection a-label <-> b-label must be consistent across all subjects.
  std::vector<int> a_to_b(a.C, 0), b_to_a(b.C, 0);
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    const int la = a.labels[i], lb = b.labels[i];
    int& fwd = a_to_b[la - 1];
    int& bwd = b_to_a[lb - 1];
    if (fwd == 0 && bwd == 0) {
      fwd = lb;
      bwd = la;
    } else if (fwd != lb || bwd != la) {
      return false;
    }
  }
  return true;
}

int membership_changes(const Memberships& prev, const Memberships& next) {
  if (prev.labels.size() != next.labels.size())
    throw DataError("membership_changes: length mismatch");
  const int n = prev.n();
  // overlap matrix prev x next
  std::vector<std::vector<int>> overlap(prev.C, std::vector<int>(next.C, 0));
  for (int i = 0; i < n; ++i)
    ++overlap[prev.labels[i] - 1][next.labels[i] - 1];
  std::vector<std::tuple<int, int, int>> cells;  // (count, p, q)
  for (int p = 0; p < prev.C; ++p)
    for (int q = 0; q < next.C; ++q)
      if (overlap[p][q] > 0) cells.emplace_back(overlap[p][q], p, q);
  std::sort(cells.begin(), cells.end(), [](const auto& x, const auto& y) {
    return std::get<0>(x) != std::get<0>(y) ? std::get<0>(x) > std::get<0>(y)
                                            : std::tie(std::get<1>(x), std::get<2>(x)) <
                                                  std::tie(std::get<1>(y), std::get<2>(y));
  });
  std::vector<char> p_used(prev.C, 0), q_used(next.C, 0);
  int matched = 0;
  for (const auto& [cnt, p, q] : cells) {
    if (p_used[p] || q_used[q]) continue;
    p_used[p] = q_used[q] = 1;
    matched += cnt;
  }
  return n - matched;
}

}  // namespace fdaclust

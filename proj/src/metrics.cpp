#include "fdaclust/metrics.hpp"

#include <cmath>

#include "fdaclust/errors.hpp"

namespace fdaclust {

namespace {
inline std::int64_t choose2(std::int64_t m) { return m * (m - 1) / 2; }
}  // namespace

PairCounts pair_counts(const Memberships& truth, const Memberships& pred) {
  if (truth.labels.size() != pred.labels.size())
    throw DataError("pair_counts: length mismatch");
  const int n = truth.n();
  std::vector<std::int64_t> contingency(
      static_cast<std::size_t>(truth.C) * pred.C, 0);
  for (int i = 0; i < n; ++i)
    ++contingency[static_cast<std::size_t>(truth.labels[i] - 1) * pred.C +
                  (pred.labels[i] - 1)];

  std::int64_t sum_ij = 0;
  for (std::int64_t nij : contingency) sum_ij += choose2(nij);
  std::int64_t sum_a = 0;
  for (int a : truth.cluster_sizes()) sum_a += choose2(a);
  std::int64_t sum_b = 0;
  for (int b : pred.cluster_sizes()) sum_b += choose2(b);

  PairCounts pc;
  pc.tp = sum_ij;
  pc.fn = sum_a - sum_ij;
  pc.fp = sum_b - sum_ij;
  pc.tn = choose2(n) - pc.tp - pc.fn - pc.fp;
  return pc;
}

double rand_index(const PairCounts& pc) {
  if (pc.total() <= 0) throw DataError("rand_index: need at least 2 subjects");
  return static_cast<double>(pc.tp + pc.tn) / static_cast<double>(pc.total());
}

double jaccard_index(const PairCounts& pc) {
  const std::int64_t denom = pc.tp + pc.fn + pc.fp;
  if (denom == 0) return 1.0;
  return static_cast<double>(pc.tp) / static_cast<double>(denom);
}

double adjusted_rand(const Memberships& truth, const Memberships& pred) {
  if (truth.labels.size() != pred.labels.size())
    throw DataError("adjusted_rand: length mismatch");
  if (truth.n() < 2) throw DataError("adjusted_rand: need at least 2 subjects");
  const PairCounts pc = pair_counts(truth, pred);
  const double sum_a = static_cast<double>(pc.tp + pc.fn);
  const double sum_b = static_cast<double>(pc.tp + pc.fp);
  const double total = static_cast<double>(pc.total());
  const double expected = sum_a * sum_b / total;
  const double denom = 0.5 * (sum_a + sum_b) - expected;
  // denom vanishes only when both partitions are single-cluster or both are
  // all-singletons; either way the partitions are identical.
  if (std::abs(denom) < 1e-12) return 1.0;
  return (static_cast<double>(pc.tp) - expected) / denom;
}

double average_group_size(const std::vector<int>& counts) {
  if (counts.empty()) throw DataError("average_group_size: empty list");
  double sum = 0.0;
  for (int c : counts) sum += c;
  return sum / static_cast<double>(counts.size());
}

}  // namespace fdaclust

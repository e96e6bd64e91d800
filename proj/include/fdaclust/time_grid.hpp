#pragma once

#include <vector>

#include "fdaclust/errors.hpp"

namespace fdaclust {

// Common observation grid: strictly increasing time points in [0,1], T >= 2.
struct TimeGrid {
  std::vector<double> points;

  TimeGrid() = default;
  explicit TimeGrid(std::vector<double> pts) : points(std::move(pts)) {
    validate();
  }

  static TimeGrid uniform(int T) {
    if (T < 2) throw DataError("TimeGrid: need at least 2 points");
    std::vector<double> p(T);
    for (int i = 0; i < T; ++i) p[i] = static_cast<double>(i) / (T - 1);
    return TimeGrid(std::move(p));
  }

  int size() const { return static_cast<int>(points.size()); }
  double operator[](int i) const { return points[i]; }
  bool operator==(const TimeGrid& other) const = default;

  void validate() const {
    if (points.size() < 2) throw DataError("TimeGrid: need at least 2 points");
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!(points[i] >= 0.0 && points[i] <= 1.0))
        throw DataError("TimeGrid: point outside [0,1]");
      if (i > 0 && !(points[i] > points[i - 1]))
        throw DataError("TimeGrid: points not strictly increasing");
    }
  }
};

}  // namespace fdaclust

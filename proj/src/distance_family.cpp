#include "metric_realize/distance_family.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "metric_realize/errors.hpp"
#include "metric_realize/weighted_graph.hpp"

namespace metric_realize {
namespace {

template <class T>
void record(PairPredicateReport<T>& report, std::size_t cap, std::vector<int> indices,
            std::vector<T> values) {
  report.holds = false;
  ++report.total_violations;
  if (report.violations.size() < std::max<std::size_t>(cap, 1)) {
    report.violations.push_back({std::move(indices), std::move(values)});
  }
}

}  // namespace

template <class T>
DistanceFamily<T>::DistanceFamily(int n, std::span<const T> upper, double tolerance)
    : n_(n), tolerance_(tolerance) {
  if (n < 2) throw InvalidInput("a distance family needs at least 2 points");
  if (tolerance < 0.0) throw InvalidInput("tolerance must be nonnegative");
  const auto expected = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  if (upper.size() != expected) {
    throw InvalidInput("expected " + std::to_string(expected) + " pair values, got " +
                       std::to_string(upper.size()));
  }
  values_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), T(0));
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      const T& value = upper[k];
      if (!(value > T(0))) {
        throw InvalidInput("nonpositive 2-weight at (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ")");
      }
      values_[static_cast<std::size_t>(i * n + j)] = value;
      values_[static_cast<std::size_t>(j * n + i)] = value;
      if (value > max_value_) max_value_ = value;
    }
  }
  cmp_ = Comparator<T>(NumberTraits<T>::from_tolerance(tolerance, max_value_));
}

template <class T>
DistanceFamily<T> DistanceFamily<T>::from_function(int n, const std::function<T(int, int)>& f,
                                                   double tolerance) {
  std::vector<T> upper;
  if (n >= 2) upper.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) upper.push_back(f(i, j));
  }
  return DistanceFamily(n, upper, tolerance);
}

template <class T>
const T& DistanceFamily<T>::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("family index out of range");
  return (*this)(i, j);
}

template <class T>
PairPredicateReport<T> check_triangle(const DistanceFamily<T>& family, std::size_t cap) {
  PairPredicateReport<T> report;
  const int n = family.size();
  const auto& cmp = family.cmp();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (cmp.gt(family(i, j), family(i, k) + family(k, j))) {
          record(report, cap, {i, j, k}, {family(i, j), family(i, k), family(k, j)});
        }
      }
    }
  }
  return report;
}

template <class T>
PairPredicateReport<T> check_four_point(const DistanceFamily<T>& family, std::size_t cap) {
  PairPredicateReport<T> report;
  const int n = family.size();
  const auto& cmp = family.cmp();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        for (int h = k + 1; h < n; ++h) {
          std::array<T, 3> sums{family(i, j) + family(k, h), family(i, k) + family(j, h),
                                family(i, h) + family(j, k)};
          std::array<T, 3> sorted = sums;
          std::sort(sorted.begin(), sorted.end());
          if (!cmp.eq(sorted[2], sorted[1])) {
            record(report, cap, {i, j, k, h}, {sums[0], sums[1], sums[2]});
          }
        }
      }
    }
  }
  return report;
}

template <class T>
PairPredicateReport<T> check_median(const DistanceFamily<T>& family, std::size_t cap) {
  PairPredicateReport<T> report;
  const int n = family.size();
  const auto& cmp = family.cmp();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        int medians = 0;
        for (int m = 0; m < n; ++m) {
          if (cmp.eq(family(a, b), family(a, m) + family(m, b)) &&
              cmp.eq(family(a, c), family(a, m) + family(m, c)) &&
              cmp.eq(family(b, c), family(b, m) + family(m, c))) {
            ++medians;
          }
        }
        if (medians != 1) record(report, cap, {a, b, c}, {T(medians)});
      }
    }
  }
  return report;
}

template <class T>
bool is_indecomposable(const DistanceFamily<T>& family, int i, int j) {
  const int n = family.size();
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("family index out of range");
  if (i == j) throw std::invalid_argument("is_indecomposable needs two distinct indices");
  const auto& cmp = family.cmp();
  for (int z = 0; z < n; ++z) {
    if (z == i || z == j) continue;
    if (!cmp.lt(family(i, j), family(i, z) + family(z, j))) return false;
  }
  return true;
}

template <class T>
std::vector<std::vector<bool>> indecomposable_pairs(const DistanceFamily<T>& family) {
  const int n = family.size();
  std::vector<std::vector<bool>> table(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool value = is_indecomposable(family, i, j);
      table[i][j] = value;
      table[j][i] = value;
    }
  }
  return table;
}

template <class T>
WeightedGraph<T> support_graph(const DistanceFamily<T>& family) {
  const auto triangle = check_triangle(family, 1);
  if (!triangle.holds) {
    const auto& v = triangle.violations.front().indices;
    throw TriangleViolation("triangle inequality fails: D(" + std::to_string(v[0] + 1) + "," +
                            std::to_string(v[1] + 1) + ") exceeds the route through " +
                            std::to_string(v[2] + 1));
  }
  const int n = family.size();
  std::vector<Edge<T>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (is_indecomposable(family, i, j)) edges.push_back({i, j, family(i, j)});
    }
  }
  return WeightedGraph<T>::unverified(n, std::move(edges));
}

#define METRIC_REALIZE_INSTANTIATE(T)                                                         \
  template class DistanceFamily<T>;                                                           \
  template PairPredicateReport<T> check_triangle(const DistanceFamily<T>&, std::size_t);     \
  template PairPredicateReport<T> check_four_point(const DistanceFamily<T>&, std::size_t);   \
  template PairPredicateReport<T> check_median(const DistanceFamily<T>&, std::size_t);       \
  template bool is_indecomposable(const DistanceFamily<T>&, int, int);                        \
  template std::vector<std::vector<bool>> indecomposable_pairs(const DistanceFamily<T>&);    \
  template WeightedGraph<T> support_graph(const DistanceFamily<T>&);

METRIC_REALIZE_INSTANTIATE(Rational)
METRIC_REALIZE_INSTANTIATE(double)

#undef METRIC_REALIZE_INSTANTIATE

}  // namespace metric_realize

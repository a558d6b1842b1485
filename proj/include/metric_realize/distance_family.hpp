#ifndef METRIC_REALIZE_DISTANCE_FAMILY_HPP
#define METRIC_REALIZE_DISTANCE_FAMILY_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "metric_realize/numeric.hpp"

namespace metric_realize {

/// Positive values D(i,j) on the unordered pairs of {0, ..., n-1}.
///
/// Storage is a full symmetric matrix with a zero diagonal, so D(i,i) reads
/// as 0 wherever a formula needs it. Symmetry is structural: values are
/// supplied once per unordered pair. Exact families use T = Rational; the
/// tolerance mode uses T = double with comparison slack tau * max D.
template <class T>
class DistanceFamily {
 public:
  /// `upper` lists D(i,j) for i < j in lexicographic order:
  /// (0,1), (0,2), ..., (0,n-1), (1,2), ...
  /// Throws InvalidInput if n < 2, the count is wrong, or a value is not > 0.
  DistanceFamily(int n, std::span<const T> upper,
                 double tolerance = NumberTraits<T>::kDefaultTolerance);

  /// Builds the family from f(i, j), called once for each i < j.
  static DistanceFamily from_function(int n, const std::function<T(int, int)>& f,
                                      double tolerance = NumberTraits<T>::kDefaultTolerance);

  int size() const noexcept { return n_; }
  double tolerance() const noexcept { return tolerance_; }
  static constexpr CompareMode compare_mode() noexcept { return NumberTraits<T>::kMode; }
  const Comparator<T>& cmp() const noexcept { return cmp_; }

  /// Unchecked access; D(i,i) == 0.
  const T& operator()(int i, int j) const noexcept {
    return values_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
  }
  /// Bounds-checked access; throws std::out_of_range.
  const T& at(int i, int j) const;

  const T& max_value() const noexcept { return max_value_; }

  friend bool operator==(const DistanceFamily& lhs, const DistanceFamily& rhs) {
    return lhs.n_ == rhs.n_ && lhs.values_ == rhs.values_;
  }

 private:
  int n_ = 0;
  double tolerance_ = 0.0;
  std::vector<T> values_;
  T max_value_{};
  Comparator<T> cmp_;
};

/// One offending index tuple (pair, triple or quadruple) and the values
/// that make it fail, in the order documented by the producing check.
template <class T>
struct Violation {
  std::vector<int> indices;
  std::vector<T> values;
};

template <class T>
struct PairPredicateReport {
  bool holds = true;
  /// Number of violations found; may exceed violations.size() when capped.
  std::size_t total_violations = 0;
  std::vector<Violation<T>> violations;
};

inline constexpr std::size_t kDefaultViolationCap = 32;

/// D(i,j) <= D(i,k) + D(k,j) for all distinct i, j, k. Each violation is
/// (i, j, k) with i < j and values (D(i,j), D(i,k), D(k,j)).
template <class T>
PairPredicateReport<T> check_triangle(const DistanceFamily<T>& family,
                                      std::size_t cap = kDefaultViolationCap);

/// For every 4-set i < j < k < h the largest of D(i,j)+D(k,h),
/// D(i,k)+D(j,h), D(i,h)+D(j,k) is attained at least twice. Violations
/// carry the quadruple and the three sums in that order.
template <class T>
PairPredicateReport<T> check_four_point(const DistanceFamily<T>& family,
                                        std::size_t cap = kDefaultViolationCap);

/// Every triple a < b < c has exactly one m with D(i,j) = D(i,m) + D(m,j)
/// for all distinct i, j in the triple (m may be one of a, b, c). Vacuous
/// for n < 3. Violations carry the triple and the median count as a value.
template <class T>
PairPredicateReport<T> check_median(const DistanceFamily<T>& family,
                                    std::size_t cap = kDefaultViolationCap);

/// D(i,j) < D(i,z) + D(z,j) strictly for every third index z. Assumes the
/// triangle inequalities hold. Throws std::out_of_range for a bad index and
/// std::invalid_argument when i == j.
template <class T>
bool is_indecomposable(const DistanceFamily<T>& family, int i, int j);

/// n x n table of is_indecomposable, false on the diagonal.
template <class T>
std::vector<std::vector<bool>> indecomposable_pairs(const DistanceFamily<T>& family);

template <class T>
class WeightedGraph;

/// The graph whose edges are the indecomposable pairs, weighted by D.
/// Connectivity is not required. Throws TriangleViolation if the family
/// fails the triangle inequalities.
template <class T>
WeightedGraph<T> support_graph(const DistanceFamily<T>& family);

}  // namespace metric_realize

#endif  // METRIC_REALIZE_DISTANCE_FAMILY_HPP

#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace scv {

// Absolute tolerances shared across the library.
inline constexpr double kDistanceTol = 1e-9;   // nearest-candidate tie band
inline constexpr double kDistinctTol = 1e-12;  // candidate distinctness
inline constexpr double kZeroCostTol = 1e-12;  // zero-social-cost threshold

/// A location in d-dimensional Euclidean space. Voters and candidates are
/// both plain points; one-dimensional instances use dimension-1 points.
struct Point {
  std::vector<double> coords;

  Point() = default;
  explicit Point(std::vector<double> c);
  Point(std::initializer_list<double> c);

  int dimension() const { return static_cast<int>(coords.size()); }
  double operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
  bool operator==(const Point&) const = default;
};

/// Euclidean (L2) distance. Throws std::invalid_argument on dimension mismatch.
double distance(const Point& p, const Point& q);

/// Coordinate-wise mean. Throws std::invalid_argument on dimension mismatch.
Point midpoint(const Point& p, const Point& q);

std::string to_string(const Point& p);

/// The candidate locations y_1..y_m (0-based in code). Construction validates
/// m >= 2, equal dimensions, finite coordinates and pairwise distinctness,
/// and caches all pairwise distances. One-dimensional sets are canonically
/// sorted ascending so "leftmost/rightmost" is index order.
class CandidateSet {
 public:
  explicit CandidateSet(std::vector<Point> candidates);

  int size() const { return static_cast<int>(points_.size()); }
  int dimension() const { return dim_; }
  const Point& operator[](int k) const { return points_[static_cast<std::size_t>(k)]; }
  const std::vector<Point>& points() const { return points_; }

  double pair_distance(int k, int l) const;
  double dmax() const { return dmax_; }
  double dmin() const { return dmin_; }
  double sigma() const { return dmax_ / dmin_; }

  /// sort_permutation()[k] is the constructor-input position of candidate k.
  /// Identity except for 1-D sets that got sorted.
  const std::vector<int>& sort_permutation() const { return perm_; }

 private:
  std::vector<Point> points_;
  std::vector<double> pairdist_;  // upper-triangle, pair_index order
  std::vector<int> perm_;
  int dim_ = 0;
  double dmin_ = 0.0;
  double dmax_ = 0.0;
};

/// Max over min pairwise candidate distance; >= 1 for every valid set.
double sigma(const CandidateSet& cs);

// Flat indexing of unordered pairs (k, l), k < l, over m candidates.
int pair_count(int m);
int pair_index(int m, int k, int l);
std::pair<int, int> pair_at(int m, int idx);

}  // namespace scv

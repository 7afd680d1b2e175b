#include "scv/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace scv {

namespace {

void require_finite(const std::vector<double>& coords) {
  for (double c : coords) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("point coordinates must be finite");
    }
  }
}

}  // namespace

Point::Point(std::vector<double> c) : coords(std::move(c)) {
  if (coords.empty()) {
    throw std::invalid_argument("point must have dimension >= 1");
  }
  require_finite(coords);
}

Point::Point(std::initializer_list<double> c) : Point(std::vector<double>(c)) {}

double distance(const Point& p, const Point& q) {
  if (p.dimension() != q.dimension()) {
    throw std::invalid_argument("distance: dimension mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    const double d = p.coords[i] - q.coords[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Point midpoint(const Point& p, const Point& q) {
  if (p.dimension() != q.dimension()) {
    throw std::invalid_argument("midpoint: dimension mismatch");
  }
  std::vector<double> c(p.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = 0.5 * (p.coords[i] + q.coords[i]);
  }
  return Point(std::move(c));
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < p.dimension(); ++i) {
    if (i > 0) os << ", ";
    os << p[i];
  }
  os << ')';
  return os.str();
}

CandidateSet::CandidateSet(std::vector<Point> candidates)
    : points_(std::move(candidates)) {
  const int m = static_cast<int>(points_.size());
  if (m < 2) {
    throw std::invalid_argument("candidate set needs at least two candidates");
  }
  dim_ = points_[0].dimension();
  for (const Point& p : points_) {
    if (p.dimension() != dim_) {
      throw std::invalid_argument("candidates must share one dimension");
    }
  }

  perm_.resize(static_cast<std::size_t>(m));
  std::iota(perm_.begin(), perm_.end(), 0);
  if (dim_ == 1) {
    std::stable_sort(perm_.begin(), perm_.end(), [&](int a, int b) {
      return points_[static_cast<std::size_t>(a)][0] < points_[static_cast<std::size_t>(b)][0];
    });
    std::vector<Point> sorted;
    sorted.reserve(points_.size());
    for (int src : perm_) sorted.push_back(points_[static_cast<std::size_t>(src)]);
    points_ = std::move(sorted);
  }

  pairdist_.resize(static_cast<std::size_t>(pair_count(m)));
  dmin_ = 0.0;
  dmax_ = 0.0;
  for (int k = 0; k < m; ++k) {
    for (int l = k + 1; l < m; ++l) {
      const double d = distance(points_[static_cast<std::size_t>(k)],
                                points_[static_cast<std::size_t>(l)]);
      pairdist_[static_cast<std::size_t>(pair_index(m, k, l))] = d;
      if (k == 0 && l == 1) {
        dmin_ = dmax_ = d;
      } else {
        dmin_ = std::min(dmin_, d);
        dmax_ = std::max(dmax_, d);
      }
    }
  }
  if (dmin_ <= kDistinctTol) {
    throw std::invalid_argument("candidates must be pairwise distinct");
  }
}

double CandidateSet::pair_distance(int k, int l) const {
  if (k == l) {
    throw std::invalid_argument("pair_distance: indices must differ");
  }
  if (k > l) std::swap(k, l);
  return pairdist_[static_cast<std::size_t>(pair_index(size(), k, l))];
}

double sigma(const CandidateSet& cs) { return cs.sigma(); }

int pair_count(int m) { return m * (m - 1) / 2; }

int pair_index(int m, int k, int l) {
  return k * (2 * m - k - 1) / 2 + (l - k - 1);
}

std::pair<int, int> pair_at(int m, int idx) {
  for (int k = 0; k < m; ++k) {
    const int row = m - k - 1;
    if (idx < row) return {k, k + 1 + idx};
    idx -= row;
  }
  throw std::out_of_range("pair_at: index out of range");
}

}  // namespace scv

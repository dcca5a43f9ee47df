#pragma once

#include <cstddef>
#include <vector>

namespace waudit {

// Exact kd-tree over n points in d dimensions, split at the median of the
// widest-spread axis, with full backtracking (no approximation). Distances
// are squared L2 accumulated in f64.
class KdTree {
 public:
  KdTree(const double* pts, std::size_t n, std::size_t dim, std::size_t leaf_size = 16);

  // Squared distance to the nearest stored point.
  double nearest_sq(const double* query) const;

  // The k smallest squared distances from query to stored points, ascending,
  // optionally excluding one stored index (pass npos to keep all).
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  void knn_sq(const double* query, std::size_t k, std::size_t exclude,
              std::vector<double>& out) const;

  std::size_t size() const { return n_; }

 private:
  struct Node {
    std::size_t begin, end;   // index range into order_
    int axis = -1;            // -1 for leaf
    double split = 0.0;
    int left = -1, right = -1;
  };

  int build(std::size_t begin, std::size_t end);
  double point(std::size_t idx, std::size_t axis) const { return pts_[idx * dim_ + axis]; }

  std::vector<double> pts_;
  std::size_t n_, dim_, leaf_size_;
  std::vector<std::size_t> order_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace waudit

#include "waudit/kdtree.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <queue>

namespace waudit {

KdTree::KdTree(const double* pts, std::size_t n, std::size_t dim, std::size_t leaf_size)
    : pts_(pts, pts + n * dim), n_(n), dim_(dim), leaf_size_(leaf_size ? leaf_size : 1) {
  order_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) order_[i] = i;
  if (n_ > 0) root_ = build(0, n_);
}

int KdTree::build(std::size_t begin, std::size_t end) {
  Node node;
  node.begin = begin;
  node.end = end;
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(node);
  if (end - begin <= leaf_size_) return id;

  // widest-spread axis
  std::size_t axis = 0;
  double best_spread = -1.0;
  for (std::size_t a = 0; a < dim_; ++a) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = begin; i < end; ++i) {
      const double v = point(order_[i], a);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (hi - lo > best_spread) {
      best_spread = hi - lo;
      axis = a;
    }
  }
  if (best_spread <= 0.0) return id;  // all points identical: keep as leaf

  const std::size_t mid = begin + (end - begin) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                   [&](std::size_t x, std::size_t y) {
                     const double vx = point(x, axis), vy = point(y, axis);
                     return vx < vy || (vx == vy && x < y);
                   });
  nodes_[id].axis = static_cast<int>(axis);
  nodes_[id].split = point(order_[mid], axis);
  const int left = build(begin, mid);
  const int right = build(mid, end);
  nodes_[id].left = left;
  nodes_[id].right = right;
  return id;
}

namespace {

double dist_sq(const double* a, const double* b, std::size_t dim) {
  double s = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

}  // namespace

double KdTree::nearest_sq(const double* query) const {
  double best = std::numeric_limits<double>::infinity();
  if (root_ < 0) return best;
  // explicit stack of (node, lower bound on subtree distance)
  std::vector<std::pair<int, double>> stack;
  stack.emplace_back(root_, 0.0);
  while (!stack.empty()) {
    const auto [id, bound] = stack.back();
    stack.pop_back();
    if (bound >= best) continue;
    const Node& node = nodes_[id];
    if (node.axis < 0) {
      for (std::size_t i = node.begin; i < node.end; ++i) {
        const double d = dist_sq(query, pts_.data() + order_[i] * dim_, dim_);
        if (d < best) best = d;
      }
      continue;
    }
    const double diff = query[node.axis] - node.split;
    const int near = diff < 0.0 ? node.left : node.right;
    const int far = diff < 0.0 ? node.right : node.left;
    stack.emplace_back(far, std::max(bound, diff * diff));
    stack.emplace_back(near, bound);
  }
  return best;
}

void KdTree::knn_sq(const double* query, std::size_t k, std::size_t exclude,
                    std::vector<double>& out) const {
  out.clear();
  if (root_ < 0 || k == 0) return;
  // max-heap of the k best (squared distance, index); index breaks ties so
  // the retained set is schedule-independent.
  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry> heap;
  const auto worst = [&] {
    return heap.size() < k ? std::numeric_limits<double>::infinity() : heap.top().first;
  };
  std::vector<std::pair<int, double>> stack;
  stack.emplace_back(root_, 0.0);
  while (!stack.empty()) {
    const auto [id, bound] = stack.back();
    stack.pop_back();
    if (bound > worst()) continue;
    const Node& node = nodes_[id];
    if (node.axis < 0) {
      for (std::size_t i = node.begin; i < node.end; ++i) {
        const std::size_t idx = order_[i];
        if (idx == exclude) continue;
        const double d = dist_sq(query, pts_.data() + idx * dim_, dim_);
        const Entry e{d, idx};
        if (heap.size() < k) {
          heap.push(e);
        } else if (e < heap.top()) {
          heap.pop();
          heap.push(e);
        }
      }
      continue;
    }
    const double diff = query[node.axis] - node.split;
    const int near = diff < 0.0 ? node.left : node.right;
    const int far = diff < 0.0 ? node.right : node.left;
    stack.emplace_back(far, std::max(bound, diff * diff));
    stack.emplace_back(near, bound);
  }
  out.resize(heap.size());
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = heap.top().first;
    heap.pop();
  }
}

}  // namespace waudit

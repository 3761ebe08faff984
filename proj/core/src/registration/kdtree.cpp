#include "rfv/registration/kdtree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "rfv/errors.hpp"

namespace rfv::registration {

namespace {
constexpr int kLeafSize = 8;
}

KdTree3::KdTree3(const PointCloud& cloud) : points_(cloud.points) {
    if (points_.empty()) throw EmptyCloud();
    order_.resize(points_.size());
    std::iota(order_.begin(), order_.end(), 0);
    nodes_.reserve(2 * points_.size() / kLeafSize + 2);
    root_ = build(0, static_cast<int>(points_.size()));
}

int KdTree3::build(int begin, int end) {
    Node node;
    node.begin = begin;
    node.end = end;
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(node);
    if (end - begin <= kLeafSize) return id;

    Vec3 lo = points_[static_cast<std::size_t>(order_[static_cast<std::size_t>(begin)])];
    Vec3 hi = lo;
    for (int i = begin + 1; i < end; ++i) {
        const Vec3& p = points_[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])];
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    int axis = 0;
    (hi - lo).maxCoeff(&axis);
    if (hi(axis) == lo(axis)) return id;  // all points coincide on every axis: keep as leaf

    const int mid = begin + (end - begin) / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                     [&](int a, int b) {
                         return points_[static_cast<std::size_t>(a)](axis) <
                                points_[static_cast<std::size_t>(b)](axis);
                     });
    const double split = points_[static_cast<std::size_t>(order_[static_cast<std::size_t>(mid)])](axis);

    const int left = build(begin, mid);
    const int right = build(mid, end);
    nodes_[static_cast<std::size_t>(id)].axis = axis;
    nodes_[static_cast<std::size_t>(id)].split = split;
    nodes_[static_cast<std::size_t>(id)].left = left;
    nodes_[static_cast<std::size_t>(id)].right = right;
    return id;
}

KdTree3::Result KdTree3::nearest(const Vec3& query) const {
    Result best;
    best.sq_distance = std::numeric_limits<double>::infinity();
    nearest_rec(root_, query, &best);
    return best;
}

void KdTree3::nearest_rec(int node_id, const Vec3& q, Result* best) const {
    const Node& node = nodes_[static_cast<std::size_t>(node_id)];
    if (node.left < 0) {
        for (int i = node.begin; i < node.end; ++i) {
            const int idx = order_[static_cast<std::size_t>(i)];
            const double d = (points_[static_cast<std::size_t>(idx)] - q).squaredNorm();
            if (d < best->sq_distance || (d == best->sq_distance && idx < best->index)) {
                best->sq_distance = d;
                best->index = idx;
            }
        }
        return;
    }
    const double delta = q(node.axis) - node.split;
    const int near = delta < 0.0 ? node.left : node.right;
    const int far = delta < 0.0 ? node.right : node.left;
    nearest_rec(near, q, best);
    if (delta * delta <= best->sq_distance) nearest_rec(far, q, best);
}

std::vector<int> KdTree3::radius_indices(const Vec3& query, double radius) const {
    std::vector<int> out;
    radius_rec(root_, query, radius * radius, &out);
    std::sort(out.begin(), out.end());
    return out;
}

void KdTree3::radius_rec(int node_id, const Vec3& q, double r_sq, std::vector<int>* out) const {
    const Node& node = nodes_[static_cast<std::size_t>(node_id)];
    if (node.left < 0) {
        for (int i = node.begin; i < node.end; ++i) {
            const int idx = order_[static_cast<std::size_t>(i)];
            if ((points_[static_cast<std::size_t>(idx)] - q).squaredNorm() <= r_sq)
                out->push_back(idx);
        }
        return;
    }
    const double delta = q(node.axis) - node.split;
    const int near = delta < 0.0 ? node.left : node.right;
    const int far = delta < 0.0 ? node.right : node.left;
    radius_rec(near, q, r_sq, out);
    if (delta * delta <= r_sq) radius_rec(far, q, r_sq, out);
}

}  // namespace rfv::registration

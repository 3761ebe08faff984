#pragma once

#include <vector>

#include "rfv/geometry/point_cloud.hpp"

namespace rfv::registration {

using geometry::PointCloud;
using geometry::Vec3;

/**
 * Exact nearest-neighbor kd-tree over 3D points. Median split on the
 * widest axis, small leaves, branch-and-bound queries; results agree with
 * a linear scan. Read-only after construction, safe to share.
 */
class KdTree3 {
public:
    /// Throws EmptyCloud.
    explicit KdTree3(const PointCloud& cloud);

    struct Result {
        int index = -1;
        double sq_distance = 0.0;
    };

    Result nearest(const Vec3& query) const;

    /// Indices of all points within `radius` of the query, ascending.
    std::vector<int> radius_indices(const Vec3& query, double radius) const;

    std::size_t size() const { return points_.size(); }
    const Vec3& point(int index) const { return points_[static_cast<std::size_t>(index)]; }

private:
    struct Node {
        int left = -1, right = -1;  // children, -1 for leaf
        int begin = 0, end = 0;     // leaf range into order_
        int axis = 0;
        double split = 0.0;
    };

    int build(int begin, int end);
    void nearest_rec(int node, const Vec3& q, Result* best) const;
    void radius_rec(int node, const Vec3& q, double r_sq, std::vector<int>* out) const;

    std::vector<Vec3> points_;
    std::vector<int> order_;
    std::vector<Node> nodes_;
    int root_ = -1;
};

}  // namespace rfv::registration

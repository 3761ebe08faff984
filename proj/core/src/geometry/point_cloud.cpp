#include "rfv/geometry/point_cloud.hpp"

#include <cmath>
#include <cstdint>
#include <unordered_set>

#include "rfv/errors.hpp"

namespace rfv::geometry {

Vec3 centroid(const PointCloud& c) {
    if (c.empty()) throw EmptyCloud();
    Vec3 sum = Vec3::Zero();
    for (const auto& p : c.points) sum += p;
    return sum / static_cast<double>(c.size());
}

PointCloud apply(const RigidTransform& a, const PointCloud& c) {
    PointCloud out;
    out.points.reserve(c.size());
    for (const auto& p : c.points) out.points.push_back(apply(a, p));
    out.colors = c.colors;
    return out;
}

namespace {
inline std::uint64_t cell_key(const Vec3& p, double voxel) {
    // 21 bits per axis, offset to keep coordinates positive near the origin
    const auto q = [voxel](double v) {
        return static_cast<std::uint64_t>(static_cast<std::int64_t>(std::floor(v / voxel)) + (1 << 20));
    };
    return (q(p.x()) << 42) | (q(p.y()) << 21) | q(p.z());
}
}  // namespace

PointCloud voxel_downsample(const PointCloud& c, double voxel) {
    if (voxel <= 0.0) return c;
    PointCloud out;
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (seen.insert(cell_key(c.points[i], voxel)).second) {
            out.points.push_back(c.points[i]);
            if (c.has_colors()) out.colors.push_back(c.colors[i]);
        }
    }
    return out;
}

}  // namespace rfv::geometry

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rfv/geometry/transform.hpp"

namespace rfv::geometry {

using Rgb = std::array<std::uint8_t, 3>;

/// 3D points in meters with optional per-point color. When colors are
/// present the list has the same length as points.
struct PointCloud {
    std::vector<Vec3> points;
    std::vector<Rgb> colors;

    bool has_colors() const { return !colors.empty(); }
    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

/// Arithmetic mean of the points. Throws EmptyCloud.
Vec3 centroid(const PointCloud& c);

/// Transform every point; colors carried through.
PointCloud apply(const RigidTransform& a, const PointCloud& c);

/// Keep the first point falling in each cell of a cubic grid of the given
/// edge length. Deterministic; preserves exact surface samples.
PointCloud voxel_downsample(const PointCloud& c, double voxel);

}  // namespace rfv::geometry

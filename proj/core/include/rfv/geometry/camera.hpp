#pragma once

#include <utility>

#include "rfv/geometry/transform.hpp"

namespace rfv::geometry {

/**
 * Pinhole camera, right-handed frame: +x right, +y down, +z forward.
 * No lens distortion.
 */
struct CameraIntrinsics {
    double fx = 0.0, fy = 0.0;  // focal lengths, pixels
    double cx = 0.0, cy = 0.0;  // principal point, pixels
    int width = 0, height = 0;

    bool is_valid() const {
        return fx > 0.0 && fy > 0.0 && width > 0 && height > 0 &&
               cx >= 0.0 && cx < width && cy >= 0.0 && cy < height;
    }
};

/// Pixel (u,v) at depth z -> camera-frame point ((u-cx)*z/fx, (v-cy)*z/fy, z).
/// Throws NonPositiveDepth when z <= 0.
Vec3 back_project(double u, double v, double z, const CameraIntrinsics& k);

/// Camera-frame point -> pixel (fx*x/z + cx, fy*y/z + cy).
/// Throws BehindCamera when p.z <= 0.
std::pair<double, double> project(const Vec3& p, const CameraIntrinsics& k);

}  // namespace rfv::geometry

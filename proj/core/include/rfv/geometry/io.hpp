#pragma once

#include <filesystem>
#include <string>

#include "rfv/geometry/camera.hpp"
#include "rfv/geometry/image.hpp"
#include "rfv/geometry/point_cloud.hpp"

namespace rfv::geometry {

/**
 * ASCII PLY subset: header
 *   ply / format ascii 1.0 / element vertex N
 *   / property float x / property float y / property float z
 *   [/ property uchar red,green,blue] / end_header
 * then one vertex per line.
 */
PointCloud read_ply(const std::filesystem::path& path);
void write_ply(const PointCloud& cloud, const std::filesystem::path& path);

/// PGM (P2 ascii or P5 binary). 8-bit maps linearly to [0,1];
/// 16-bit values are stored big-endian per the netpbm convention.
GrayImage read_pgm_gray(const std::filesystem::path& path);
void write_pgm_gray(const GrayImage& img, const std::filesystem::path& path);

/// Depth images are 16-bit PGM plus a JSON sidecar carrying the depth
/// scale (meters per unit) and the camera intrinsics.
struct DepthMeta {
    double depth_scale = 1e-4;
    CameraIntrinsics intrinsics;
};

DepthImage read_pgm_depth(const std::filesystem::path& path, double depth_scale);
void write_pgm_depth(const DepthImage& img, const std::filesystem::path& path, double depth_scale);

DepthMeta read_depth_meta(const std::filesystem::path& json_path);
void write_depth_meta(const DepthMeta& meta, const std::filesystem::path& json_path);

}  // namespace rfv::geometry

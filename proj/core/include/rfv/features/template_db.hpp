#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rfv/features/descriptor.hpp"
#include "rfv/features/matcher.hpp"
#include "rfv/geometry/camera.hpp"
#include "rfv/geometry/image.hpp"
#include "rfv/geometry/point_cloud.hpp"
#include "rfv/geometry/transform.hpp"
#include "rfv/rfid/epc.hpp"

namespace rfv::features {

struct TemplateImageEntry {
    std::string name;
    geometry::GrayImage image;
    std::vector<Keypoint> keypoints;
    std::vector<Descriptor> descriptors;
};

/// Partial surface capture from a known viewpoint. The cloud lives in the
/// object frame; capture_pose maps object frame -> capture-camera frame.
struct ViewpointEntry {
    std::string name;
    geometry::PointCloud cloud;
    geometry::RigidTransform capture_pose;
};

/// role: level_a | level_b | level_c | temperature
struct EpcBinding {
    rfid::Epc96 epc;
    std::string role;
};

struct TemplateObject {
    std::string object_id;
    std::vector<TemplateImageEntry> images;
    std::vector<ViewpointEntry> viewpoints;
    std::vector<EpcBinding> epc_bindings;
    std::string model_ref;                         // relative path of the full model cloud
    std::optional<geometry::PointCloud> model_cloud;
    std::string symmetry = "none";                 // none | revolution-y
};

struct TemplateDb {
    geometry::CameraIntrinsics intrinsics;
    double depth_scale = 1e-4;
    std::vector<TemplateObject> objects;
};

struct IdentifyParams {
    int min_matches = 12;
    float ratio = 0.7f;
    DetectorParams detector;
};

struct IdentifyResult {
    std::string object_id;
    int object_index = 0;
    int image_index = 0;
    std::vector<Match> matches;
    double mean_distance = 0.0;
};

/**
 * Matches the scene descriptors against every template image of every
 * object; the winner is the (object, image) pair with the most matches.
 * Absent when the best count is below min_matches. Ties break on smaller
 * mean match distance, then lower object index. Throws EmptyDatabase.
 */
std::optional<IdentifyResult> identify(const std::vector<Descriptor>& scene_descriptors,
                                       const TemplateDb& db, const IdentifyParams& params = {});

/// Convenience overload that runs detection + description on the image first.
std::optional<IdentifyResult> identify(const geometry::GrayImage& scene_img,
                                       const TemplateDb& db, const IdentifyParams& params = {});

/**
 * On-disk layout: droot/db_manifest.json listing objects; one directory per
 * object with manifest.json, template images (PGM), viewpoint clouds (PLY)
 * and .desc descriptor caches (16-byte header: magic XVDS, version u32,
 * count u32, dim u32; then count*dim little-endian float32).
 */
TemplateDb load_template_db(const std::filesystem::path& root,
                            const DetectorParams& detector = {});
void save_template_db(const TemplateDb& db, const std::filesystem::path& root);

/// Descriptor cache file codec (exposed for tests).
void write_descriptor_cache(const std::vector<Descriptor>& descriptors,
                            const std::filesystem::path& path);
std::vector<Descriptor> read_descriptor_cache(const std::filesystem::path& path);

}  // namespace rfv::features

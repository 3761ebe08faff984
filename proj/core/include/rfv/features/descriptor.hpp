#pragma once

#include <array>
#include <optional>
#include <vector>

#include "rfv/features/detector.hpp"
#include "rfv/features/integral_image.hpp"

namespace rfv::features {

/// 64-d local descriptor, L2-normalized (or all-zero for flat patches).
struct Descriptor {
    std::array<float, 64> values{};

    float squared_distance(const Descriptor& o) const {
        float s = 0.0f;
        for (int i = 0; i < 64; ++i) {
            const float d = values[static_cast<std::size_t>(i)] - o.values[static_cast<std::size_t>(i)];
            s += d * d;
        }
        return s;
    }
};

/**
 * Upright 64-d descriptor: 4x4 subregions of a 20*scale window around the
 * keypoint, each accumulating gaussian-weighted Haar responses
 * (sum dx, sum dy, sum |dx|, sum |dy|). No orientation assignment.
 *
 * Returns nullopt when the keypoint is closer than 10*scale to an image
 * border; callers drop such keypoints.
 */
std::optional<Descriptor> describe(const IntegralImage& ii, const Keypoint& kp);

/// Describes every keypoint, dropping the out-of-margin ones; the two
/// output lists stay index-aligned.
void describe_all(const IntegralImage& ii, const std::vector<Keypoint>& kps,
                  std::vector<Keypoint>* kept, std::vector<Descriptor>* descriptors);

}  // namespace rfv::features

#pragma once

#include <vector>

#include "rfv/features/integral_image.hpp"
#include "rfv/geometry/image.hpp"

namespace rfv::features {

/// Scale-space blob keypoint with sub-pixel position.
struct Keypoint {
    double u = 0.0, v = 0.0;  // image coordinates, pixels
    double scale = 0.0;       // gaussian sigma equivalent, pixels
    double response = 0.0;    // determinant-of-hessian strength
};

struct DetectorParams {
    double threshold = 1e-4;  // det-of-hessian threshold for [0,1] intensities
    int octaves = 3;          // clamped to 1..4
    int max_keypoints = 500;  // keep this many strongest responses
};

/**
 * Box-filter determinant-of-Hessian detector over an integral image.
 * Filter sizes 9,15,21,27 in the first octave; the spacing doubles each
 * octave with sampling stride 2^octave. Candidates pass 3x3x3 non-maximum
 * suppression across space and scale, then quadratic sub-pixel/sub-scale
 * refinement. Returned keypoints are sorted by descending response.
 *
 * Throws ImageTooSmall for images under 32x32.
 */
std::vector<Keypoint> detect_keypoints(const geometry::GrayImage& img,
                                       const DetectorParams& params = {});

std::vector<Keypoint> detect_keypoints(const IntegralImage& ii,
                                       const DetectorParams& params = {});

}  // namespace rfv::features

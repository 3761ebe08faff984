#pragma once

#include <vector>

#include "rfv/features/descriptor.hpp"

namespace rfv::features {

/// Accepted descriptor correspondence (passed the ratio test).
struct Match {
    int scene_index = 0;
    int template_index = 0;
    float distance = 0.0f;  // L2 between descriptors
};

/**
 * Nearest/second-nearest ratio matching: for each scene descriptor the two
 * closest template descriptors are found by L2; a match is emitted iff
 * d1/d2 < ratio. At most one match per scene descriptor. Fewer than two
 * template descriptors make the ratio test impossible: empty result.
 */
std::vector<Match> match_descriptors(const std::vector<Descriptor>& scene,
                                     const std::vector<Descriptor>& templ,
                                     float ratio = 0.7f);

}  // namespace rfv::features

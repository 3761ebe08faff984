#include "rfv/features/matcher.hpp"

#include <cmath>
#include <limits>

namespace rfv::features {

std::vector<Match> match_descriptors(const std::vector<Descriptor>& scene,
                                     const std::vector<Descriptor>& templ,
                                     float ratio) {
    std::vector<Match> matches;
    if (templ.size() < 2) return matches;

    for (std::size_t i = 0; i < scene.size(); ++i) {
        float best = std::numeric_limits<float>::infinity();
        float second = std::numeric_limits<float>::infinity();
        int best_j = -1;
        for (std::size_t j = 0; j < templ.size(); ++j) {
            const float d = scene[i].squared_distance(templ[j]);
            if (d < best) {
                second = best;
                best = d;
                best_j = static_cast<int>(j);
            } else if (d < second) {
                second = d;
            }
        }
        // compare in squared space: d1/d2 < r  <=>  d1^2 < r^2 * d2^2
        if (best_j >= 0 && best < ratio * ratio * second)
            matches.push_back({static_cast<int>(i), best_j, std::sqrt(best)});
    }
    return matches;
}

}  // namespace rfv::features

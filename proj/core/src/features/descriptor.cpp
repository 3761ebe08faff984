#include "rfv/features/descriptor.hpp"

#include <cmath>

namespace rfv::features {

namespace {

// Haar responses with a 2s x 2s filter at integer center (x,y).
inline double haar_dx(const IntegralImage& ii, int x, int y, int s) {
    return ii.box_sum(x, y - s, x + s - 1, y + s - 1) -
           ii.box_sum(x - s, y - s, x - 1, y + s - 1);
}

inline double haar_dy(const IntegralImage& ii, int x, int y, int s) {
    return ii.box_sum(x - s, y, x + s - 1, y + s - 1) -
           ii.box_sum(x - s, y - s, x + s - 1, y - 1);
}

}  // namespace

std::optional<Descriptor> describe(const IntegralImage& ii, const Keypoint& kp) {
    const double s = kp.scale;
    const double margin = 10.0 * s;
    if (kp.u < margin || kp.v < margin || kp.u + margin >= ii.width() ||
        kp.v + margin >= ii.height())
        return std::nullopt;

    const int is = std::max(1, static_cast<int>(std::lround(s)));
    const double inv_two_sigma_sq = 1.0 / (2.0 * 3.3 * s * 3.3 * s);

    Descriptor d;
    std::array<double, 64> acc{};
    // 20 samples per axis at spacing s, grouped into 4x4 subregions of 5x5.
    for (int sj = 0; sj < 4; ++sj) {
        for (int si = 0; si < 4; ++si) {
            const std::size_t base = static_cast<std::size_t>(sj * 4 + si) * 4;
            for (int j = 0; j < 5; ++j) {
                for (int i = 0; i < 5; ++i) {
                    const double rel_x = (si * 5 + i - 9.5) * s;
                    const double rel_y = (sj * 5 + j - 9.5) * s;
                    const int px = static_cast<int>(std::lround(kp.u + rel_x));
                    const int py = static_cast<int>(std::lround(kp.v + rel_y));
                    const double w =
                        std::exp(-(rel_x * rel_x + rel_y * rel_y) * inv_two_sigma_sq);
                    const double dx = w * haar_dx(ii, px, py, is);
                    const double dy = w * haar_dy(ii, px, py, is);
                    acc[base + 0] += dx;
                    acc[base + 1] += dy;
                    acc[base + 2] += std::abs(dx);
                    acc[base + 3] += std::abs(dy);
                }
            }
        }
    }

    double norm_sq = 0.0;
    for (double v : acc) norm_sq += v * v;
    if (norm_sq > 0.0) {
        const double inv = 1.0 / std::sqrt(norm_sq);
        for (int i = 0; i < 64; ++i)
            d.values[static_cast<std::size_t>(i)] = static_cast<float>(acc[static_cast<std::size_t>(i)] * inv);
    }
    // flat patch: all-zero descriptor stays all-zero
    return d;
}

void describe_all(const IntegralImage& ii, const std::vector<Keypoint>& kps,
                  std::vector<Keypoint>* kept, std::vector<Descriptor>* descriptors) {
    kept->clear();
    descriptors->clear();
    for (const auto& kp : kps) {
        if (auto d = describe(ii, kp)) {
            kept->push_back(kp);
            descriptors->push_back(*d);
        }
    }
}

}  // namespace rfv::features

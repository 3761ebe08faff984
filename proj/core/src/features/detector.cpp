#include "rfv/features/detector.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <Eigen/Dense>

#include "rfv/errors.hpp"

namespace rfv::features {

namespace {

// Filter lobe sizes per octave; the filter side length is 3x the lobe.
// Octave 0: 9,15,21,27. Spacing doubles each octave.
constexpr int kLobes[4][4] = {
    {3, 5, 7, 9},
    {5, 9, 13, 17},
    {9, 17, 25, 33},
    {17, 33, 49, 65},
};
constexpr int kScalesPerOctave = 4;

struct ResponseMap {
    int grid_w = 0, grid_h = 0;
    int step = 1;
    int filter_size = 0;
    std::vector<float> r;

    float at(int i, int j) const { return r[static_cast<std::size_t>(j) * grid_w + i]; }
    float& at(int i, int j) { return r[static_cast<std::size_t>(j) * grid_w + i]; }
};

// det(H) with box-filter second derivatives, responses normalized by the
// filter area so the threshold is scale independent.
ResponseMap build_response(const IntegralImage& ii, int lobe, int step) {
    const int size = 3 * lobe;
    const int half = (size - 1) / 2;
    const int border = half + 1;

    ResponseMap map;
    map.grid_w = ii.width() / step;
    map.grid_h = ii.height() / step;
    map.step = step;
    map.filter_size = size;
    map.r.assign(static_cast<std::size_t>(map.grid_w) * map.grid_h, 0.0f);

    const double inv_area = 1.0 / (size * size);
    for (int j = 0; j < map.grid_h; ++j) {
        const int y = j * step;
        if (y < border || y + border >= ii.height()) continue;
        for (int i = 0; i < map.grid_w; ++i) {
            const int x = i * step;
            if (x < border || x + border >= ii.width()) continue;

            // Dyy: three stacked bands 2*lobe-1 wide, lobe tall, weights +1,-2,+1
            const int mid = (lobe - 1) / 2;
            const double dyy =
                (ii.box_sum(x - lobe + 1, y - half, x + lobe - 1, y + half) -
                 3.0 * ii.box_sum(x - lobe + 1, y - mid, x + lobe - 1, y + mid)) *
                inv_area;
            const double dxx =
                (ii.box_sum(x - half, y - lobe + 1, x + half, y + lobe - 1) -
                 3.0 * ii.box_sum(x - mid, y - lobe + 1, x + mid, y + lobe - 1)) *
                inv_area;
            const double dxy =
                (ii.box_sum(x - lobe, y - lobe, x - 1, y - 1) +
                 ii.box_sum(x + 1, y + 1, x + lobe, y + lobe) -
                 ii.box_sum(x + 1, y - lobe, x + lobe, y - 1) -
                 ii.box_sum(x - lobe, y + 1, x - 1, y + lobe)) *
                inv_area;

            map.at(i, j) = static_cast<float>(dxx * dyy - 0.81 * dxy * dxy);
        }
    }
    return map;
}

bool is_local_max(const std::array<const ResponseMap*, 3>& maps, int i, int j, float v) {
    for (int m = 0; m < 3; ++m) {
        for (int dj = -1; dj <= 1; ++dj) {
            for (int di = -1; di <= 1; ++di) {
                if (m == 1 && di == 0 && dj == 0) continue;
                if (maps[static_cast<std::size_t>(m)]->at(i + di, j + dj) >= v) return false;
            }
        }
    }
    return true;
}

// 3D quadratic fit over (x, y, scale); offsets in grid/scale-index units.
bool refine(const std::array<const ResponseMap*, 3>& maps, int i, int j,
            Eigen::Vector3d* offset, double* value) {
    const auto f = [&](int m, int di, int dj) {
        return static_cast<double>(maps[static_cast<std::size_t>(m)]->at(i + di, j + dj));
    };
    Eigen::Vector3d g;
    g << (f(1, 1, 0) - f(1, -1, 0)) * 0.5,
         (f(1, 0, 1) - f(1, 0, -1)) * 0.5,
         (f(2, 0, 0) - f(0, 0, 0)) * 0.5;

    Eigen::Matrix3d h;
    const double fc = f(1, 0, 0);
    h(0, 0) = f(1, 1, 0) - 2 * fc + f(1, -1, 0);
    h(1, 1) = f(1, 0, 1) - 2 * fc + f(1, 0, -1);
    h(2, 2) = f(2, 0, 0) - 2 * fc + f(0, 0, 0);
    h(0, 1) = h(1, 0) = (f(1, 1, 1) - f(1, -1, 1) - f(1, 1, -1) + f(1, -1, -1)) * 0.25;
    h(0, 2) = h(2, 0) = (f(2, 1, 0) - f(2, -1, 0) - f(0, 1, 0) + f(0, -1, 0)) * 0.25;
    h(1, 2) = h(2, 1) = (f(2, 0, 1) - f(2, 0, -1) - f(0, 0, 1) + f(0, 0, -1)) * 0.25;

    const Eigen::FullPivLU<Eigen::Matrix3d> lu(h);
    if (!lu.isInvertible()) return false;
    const Eigen::Vector3d x = lu.solve(-g);
    if (std::abs(x(0)) > 0.5 || std::abs(x(1)) > 0.5 || std::abs(x(2)) > 0.5) return false;
    *offset = x;
    *value = fc + 0.5 * g.dot(x);
    return true;
}

}  // namespace

std::vector<Keypoint> detect_keypoints(const IntegralImage& ii, const DetectorParams& params) {
    if (ii.width() < 32 || ii.height() < 32) throw ImageTooSmall();
    const int octaves = std::clamp(params.octaves, 1, 4);

    std::vector<Keypoint> keypoints;
    for (int o = 0; o < octaves; ++o) {
        const int step = 1 << o;
        if (ii.width() / step < 8 || ii.height() / step < 8) break;

        std::array<ResponseMap, kScalesPerOctave> maps;
        for (int k = 0; k < kScalesPerOctave; ++k)
            maps[static_cast<std::size_t>(k)] = build_response(ii, kLobes[o][k], step);

        const int spacing = 6 * step;  // filter-size gap between adjacent scales
        for (int k = 1; k <= 2; ++k) {
            const std::array<const ResponseMap*, 3> stack = {
                &maps[static_cast<std::size_t>(k - 1)],
                &maps[static_cast<std::size_t>(k)],
                &maps[static_cast<std::size_t>(k + 1)]};
            const ResponseMap& mid = *stack[1];
            for (int j = 1; j + 1 < mid.grid_h; ++j) {
                for (int i = 1; i + 1 < mid.grid_w; ++i) {
                    const float v = mid.at(i, j);
                    if (v < params.threshold) continue;
                    if (!is_local_max(stack, i, j, v)) continue;

                    Eigen::Vector3d off;
                    double refined = v;
                    if (!refine(stack, i, j, &off, &refined)) continue;

                    Keypoint kp;
                    kp.u = (i + off(0)) * step;
                    kp.v = (j + off(1)) * step;
                    const double size = mid.filter_size + off(2) * spacing;
                    kp.scale = 1.2 * size / 9.0;
                    kp.response = refined;
                    keypoints.push_back(kp);
                }
            }
        }
    }

    std::sort(keypoints.begin(), keypoints.end(), [](const Keypoint& a, const Keypoint& b) {
        if (a.response != b.response) return a.response > b.response;
        if (a.v != b.v) return a.v < b.v;
        return a.u < b.u;
    });
    if (static_cast<int>(keypoints.size()) > params.max_keypoints)
        keypoints.resize(static_cast<std::size_t>(params.max_keypoints));
    return keypoints;
}

std::vector<Keypoint> detect_keypoints(const geometry::GrayImage& img,
                                       const DetectorParams& params) {
    if (img.width < 32 || img.height < 32) throw ImageTooSmall();
    return detect_keypoints(IntegralImage(img), params);
}

}  // namespace rfv::features

#pragma once

#include <cstddef>
#include <vector>

namespace rfv::geometry {

/// Intensity image, values in [0,1], row-major.
struct GrayImage {
    int width = 0, height = 0;
    std::vector<float> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, float fill = 0.0f)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

    float at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
    float& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
    bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
};

/// Depth image in meters, row-major. 0 encodes an invalid pixel.
struct DepthImage {
    int width = 0, height = 0;
    std::vector<float> depth;

    DepthImage() = default;
    DepthImage(int w, int h)
        : width(w), height(h), depth(static_cast<std::size_t>(w) * h, 0.0f) {}

    float at(int x, int y) const { return depth[static_cast<std::size_t>(y) * width + x]; }
    float& at(int x, int y) { return depth[static_cast<std::size_t>(y) * width + x]; }
    bool valid(int x, int y) const {
        return x >= 0 && x < width && y >= 0 && y < height && at(x, y) > 0.0f;
    }
};

}  // namespace rfv::geometry

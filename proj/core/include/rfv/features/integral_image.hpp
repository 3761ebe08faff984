#pragma once

#include <vector>

#include "rfv/geometry/image.hpp"

namespace rfv::features {

/**
 * Summed-area table. Entry (x,y) holds the sum of intensities over the
 * inclusive rectangle [0..x] x [0..y]; any box sum costs 4 lookups.
 */
class IntegralImage {
public:
    explicit IntegralImage(const geometry::GrayImage& img);

    int width() const { return width_; }
    int height() const { return height_; }

    double at(int x, int y) const { return sum_[static_cast<std::size_t>(y) * width_ + x]; }

    /// Sum over the inclusive rectangle [x0..x1] x [y0..y1], clipped to the image.
    double box_sum(int x0, int y0, int x1, int y1) const;

private:
    int width_ = 0, height_ = 0;
    std::vector<double> sum_;
};

}  // namespace rfv::features

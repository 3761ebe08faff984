#include "rfv/features/integral_image.hpp"

#include <algorithm>

namespace rfv::features {

IntegralImage::IntegralImage(const geometry::GrayImage& img)
    : width_(img.width), height_(img.height), sum_(img.pixels.size(), 0.0) {
    double row = 0.0;
    for (int x = 0; x < width_; ++x) {
        row += img.at(x, 0);
        sum_[static_cast<std::size_t>(x)] = row;
    }
    for (int y = 1; y < height_; ++y) {
        row = 0.0;
        for (int x = 0; x < width_; ++x) {
            row += img.at(x, y);
            sum_[static_cast<std::size_t>(y) * width_ + x] =
                sum_[static_cast<std::size_t>(y - 1) * width_ + x] + row;
        }
    }
}

double IntegralImage::box_sum(int x0, int y0, int x1, int y1) const {
    x0 = std::max(x0, 0);
    y0 = std::max(y0, 0);
    x1 = std::min(x1, width_ - 1);
    y1 = std::min(y1, height_ - 1);
    if (x0 > x1 || y0 > y1) return 0.0;
    const double d = at(x1, y1);
    const double b = x0 > 0 ? at(x0 - 1, y1) : 0.0;
    const double c = y0 > 0 ? at(x1, y0 - 1) : 0.0;
    const double a = (x0 > 0 && y0 > 0) ? at(x0 - 1, y0 - 1) : 0.0;
    return d - b - c + a;
}

}  // namespace rfv::features

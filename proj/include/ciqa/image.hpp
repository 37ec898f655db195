#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace ciqa {

// Row-major grayscale raster. Luminance images are normalized to [0,1] at
// ingestion; the same container also carries derived per-pixel quantities
// (gradients, quality maps), which may leave that range.
class GrayImage {
public:
    GrayImage() = default;
    GrayImage(int width, int height, double fill = 0.0);
    GrayImage(int width, int height, std::vector<double> data);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t pixel_count() const noexcept { return data_.size(); }
    bool same_size(const GrayImage& other) const noexcept {
        return width_ == other.width_ && height_ == other.height_;
    }

    double operator()(int row, int col) const { return data_[index(row, col)]; }
    double& operator()(int row, int col) { return data_[index(row, col)]; }

    const double* data() const noexcept { return data_.data(); }
    double* data() noexcept { return data_.data(); }
    const double* row(int r) const { return data_.data() + index(r, 0); }
    double* row(int r) { return data_.data() + index(r, 0); }

    const std::vector<double>& pixels() const noexcept { return data_; }
    std::vector<double>& pixels() noexcept { return data_; }

    // Throws std::invalid_argument if any value is NaN or infinite.
    void ensure_finite() const;

private:
    std::size_t index(int row, int col) const noexcept {
        return static_cast<std::size_t>(row) * width_ + col;
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<double> data_;
};

// Per-pixel forward differences, same shape as the source image.
struct GradientField {
    GrayImage gx; // img(i, j+1) - img(i, j); last column is 0
    GrayImage gy; // img(i+1, j) - img(i, j); last row is 0
};

// Singular values and right singular vectors of an m x 2 gradient matrix.
// s1 >= s2 >= 0; v1 is the dominant gradient direction, v2 the edge
// direction; a zero matrix yields s1 = s2 = 0 with the canonical axes.
struct Svd2 {
    double s1 = 0.0;
    double s2 = 0.0;
    std::array<double, 2> v1{1.0, 0.0};
    std::array<double, 2> v2{0.0, 1.0};
};

// n x n window centered at (center_row, center_col) together with the
// gradients gathered from the image-level field at the same locations.
struct Patch {
    int side = 0;
    int center_row = 0;
    int center_col = 0;
    std::vector<double> values;
    std::vector<double> gx;
    std::vector<double> gy;
};

GradientField gradient_field(const GrayImage& img);

// side must be odd and the full window must fit inside the image.
Patch extract_patch(const GrayImage& img, const GradientField& field,
                    int center_row, int center_col, int side);

// Closed-form SVD of an m x 2 matrix G from the moments of GtG:
// gxx = sum gx^2, gxy = sum gx*gy, gyy = sum gy^2.
Svd2 svd2_from_moments(double gxx, double gxy, double gyy);
Svd2 svd2_of_gradients(const Patch& patch);

// Sample covariance with divisor (len - 1); lengths must match and be >= 2.
double patch_cov(std::span<const double> a, std::span<const double> b);

double patch_mean(const Patch& p);

// Sum of gradient magnitudes sqrt(gx^2 + gy^2) over the patch.
double patch_tv(const Patch& p);

// Mean squared error on the [0,1] scale; shapes must match.
double mse(const GrayImage& a, const GrayImage& b);

} // namespace ciqa

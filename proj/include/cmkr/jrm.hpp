#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cmkr/rng.hpp"

namespace cmkr {

// Toy-scale forward pass of the joint relation block wiring; no training.

struct FeatureMap {
    std::size_t b = 0, c = 0, h = 0, w = 0;
    std::vector<double> data;  // b*c*h*w

    FeatureMap() = default;
    FeatureMap(std::size_t b_, std::size_t c_, std::size_t h_, std::size_t w_, double fill = 0.0)
        : b(b_), c(c_), h(h_), w(w_), data(b_ * c_ * h_ * w_, fill) {}

    double& at(std::size_t bi, std::size_t ci, std::size_t y, std::size_t x) {
        return data[((bi * c + ci) * h + y) * w + x];
    }
    double at(std::size_t bi, std::size_t ci, std::size_t y, std::size_t x) const {
        return data[((bi * c + ci) * h + y) * w + x];
    }
};

struct ColorVector {
    std::size_t b = 0, c = 0;
    std::vector<double> data;  // b*c

    ColorVector() = default;
    ColorVector(std::size_t b_, std::size_t c_, double fill = 0.0) : b(b_), c(c_), data(b_ * c_, fill) {}

    double& at(std::size_t bi, std::size_t ci) { return data[bi * c + ci]; }
    double at(std::size_t bi, std::size_t ci) const { return data[bi * c + ci]; }
};

// One projection head per input stream (C x C, row-major: out_ch x in_ch),
// plus the 1x1 joint conv over 2C channels with bias.
struct JrmParams {
    std::size_t channels = 0;
    std::vector<double> proj_color;    // C*C
    std::vector<double> proj_texture;  // C*C
    std::vector<double> joint_weight;  // 2C*2C
    std::vector<double> joint_bias;    // 2C

    static JrmParams zeros(std::size_t c);
    static JrmParams identity(std::size_t c);
    static JrmParams random(std::size_t c, SeededRng& rng);
};

ColorVector project_vec(const ColorVector& v, std::span<const double> proj);
FeatureMap project_map(const FeatureMap& m, std::span<const double> proj);

// sigmoid(spatial average pool) per batch and channel; strictly inside (0,1).
ColorVector channel_weights(const FeatureMap& projected_texture);

// w * f + f, elementwise.
ColorVector channel_modulate(const ColorVector& color, const ColorVector& weights);

// Per-channel 1x1 depth-wise convolution: each channel scaled by its kernel
// scalar, plus the residual input.
FeatureMap dynamic_dwconv(const FeatureMap& texture, const ColorVector& kernel_source);

// Repeat the color vector over H x W, concatenate with the texture map along
// channels, 1x1 conv with residual, then spatial average pool to B x 2C.
ColorVector joint_fuse(const ColorVector& color, const FeatureMap& texture, const JrmParams& params);

// Projections -> channel-weight modulation (color path) and dynamic
// depth-wise conv (texture path) -> joint fuse. Output is always B x 2C.
ColorVector jrm_forward(const ColorVector& f_color, const FeatureMap& f_texture, const JrmParams& params);

struct JrmCheckReport {
    struct Check {
        std::string name;
        bool pass = false;
    };
    std::vector<Check> checks;
    bool all_pass = false;
};

// Invariant suite on seeded random tensors, used by the CLI.
JrmCheckReport jrm_check(std::uint64_t seed, std::size_t b, std::size_t c, std::size_t h, std::size_t w);

}  // namespace cmkr

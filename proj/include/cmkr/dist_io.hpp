#pragma once

#include <filesystem>

#include "json.hpp"

#include "cmkr/matrix.hpp"

namespace cmkr {

// Distance block persistence: dist.bin (little-endian f64, row-major) plus
// dist.meta.json carrying n_query (rows), n_gallery (cols) and any extra
// metadata the producer wants to echo (strategy, config, ...).
struct DistBlockFile {
    Mat block;
    nlohmann::json meta;
};

void save_dist_block(const Mat& block, const std::filesystem::path& dir,
                     const nlohmann::json& extra_meta = nlohmann::json::object());
DistBlockFile load_dist_block(const std::filesystem::path& dir);

}  // namespace cmkr

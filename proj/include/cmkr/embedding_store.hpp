#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cmkr {

enum class Modality : std::uint8_t { visible = 0, infrared = 1 };

const char* to_string(Modality m);
Modality modality_from_string(std::string_view s);
inline Modality other(Modality m) {
    return m == Modality::visible ? Modality::infrared : Modality::visible;
}

// N x D feature matrix (row-major float32) with per-row identity, modality,
// camera and optional key labels. Immutable by convention after construction;
// share freely across threads.
struct EmbeddingSet {
    std::size_t n = 0;
    std::size_t dim = 0;
    std::vector<float> features;  // n * dim
    std::vector<int> ids;
    std::vector<Modality> modality;
    std::vector<int> cameras;
    std::vector<std::string> keys;  // empty when absent, else size n

    const float* row(std::size_t i) const { return features.data() + i * dim; }
    bool has_keys() const { return !keys.empty(); }
};

// Throws validation_error on any invariant violation, naming the row.
void validate(const EmbeddingSet& set);

// Dataset directory format: meta.json + features.bin (little-endian f32,
// row-major, exactly n*dim values).
EmbeddingSet load_embeddings(const std::filesystem::path& dir);
void save_embeddings(const EmbeddingSet& set, const std::filesystem::path& dir);

// Row-wise L2 normalization; norms accumulate in double. Zero-norm rows are
// rejected with the row index.
EmbeddingSet l2_normalize(const EmbeddingSet& set);

EmbeddingSet subset(const EmbeddingSet& set, std::span<const int> rows);
EmbeddingSet concat(const EmbeddingSet& a, const EmbeddingSet& b);

// identity -> coarse description sentence
struct DescriptionSet {
    std::map<int, std::string> entries;
};

// UTF-8 TSV, two columns: id <TAB> description.
DescriptionSet load_descriptions(const std::filesystem::path& file);
void save_descriptions(const DescriptionSet& set, const std::filesystem::path& file);

}  // namespace cmkr

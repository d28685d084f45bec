#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "cmkr/distance_core.hpp"

namespace cmkr {

enum class Strategy { baseline, constrained, divided, extended };

const char* to_string(Strategy s);
Strategy strategy_from_string(std::string_view s);

struct RerankConfig {
    int k1 = 20;
    int k2 = 6;
    int k3 = 2;
    double lambda_jaccard = 0.7;
    Strategy strategy = Strategy::extended;
    bool use_neighbor_expansion = true;  // half-k1 reciprocal expansion
    bool use_ma_lqe = true;
    bool use_gaussian_weights = true;  // exp(-d) neighbor weights, else binary

    // Throws config_error unless k3 <= k2 <= k1, k1 >= 1, k3 >= 0 and
    // lambda_jaccard is in [0, 1].
    void validate() const;
};

// Per-sample neighbor index lists over the joint (query ++ gallery) index
// space. Lists are ascending, duplicate-free, and never contain the sample
// itself; feature encoding re-adds the self entry.
struct NeighborSet {
    std::vector<std::vector<int>> lists;
};

// Sparse non-negative vector over the joint index space, indices ascending.
struct SparseVec {
    std::vector<int> idx;
    std::vector<double> val;

    double sum() const;
};

struct NeighborFeatureMatrix {
    std::size_t dim = 0;  // joint index space size
    std::vector<SparseVec> rows;
};

// k smallest-distance members of `domain` by row i, excluding i itself, ties
// broken by ascending index. Returns fewer than k only when the domain is too
// small. k = 0 is allowed and yields an empty list.
std::vector<int> knn(const DistMatrix& d, int i, int k, std::span<const int> domain);

// Mutual k-nearest filter over the full joint domain.
NeighborSet k_reciprocal(const DistMatrix& d, int k1);

// Mutual filter with each side's search domain constrained to the other side
// (queries search the gallery block and vice versa).
NeighborSet k_reciprocal_constrained(const DistMatrix& d, int k1);

// k_reciprocal computed on divided_matrix(d).
NeighborSet k_reciprocal_divided(const DistMatrix& d, int k1);

// Per-sample union of the baseline and constrained sets.
NeighborSet k_reciprocal_extended(const DistMatrix& d, int k1);

NeighborSet union_neighbors(const NeighborSet& a, const NeighborSet& b);

// Adds half.lists[j] into sample i's set for each j in r.lists[i] whenever
// |r.lists[i] ∩ half.lists[j]| >= (2/3)|half.lists[j]| (exact integer test).
// `half` must hold ceil(k1/2)-reciprocal sets produced the same way as r.
NeighborSet expand_reciprocal(const NeighborSet& r, const NeighborSet& half);

// Convenience form for full-domain sets: recomputes the half sets from d.
NeighborSet expand_reciprocal(const NeighborSet& r, const DistMatrix& d, int k1);

enum class NeighborWeighting { gaussian, binary };

// V_i has weight exp(-d(i,j)) (or 1) at each j in r.lists[i] plus the self
// index.
NeighborFeatureMatrix encode_neighbor_features(const NeighborSet& r, const DistMatrix& d,
                                               NeighborWeighting weighting = NeighborWeighting::gaussian);

// Local query expansion: mean of the V rows of the k2 nearest samples, self
// included, divisor fixed at k2.
NeighborFeatureMatrix lqe(const NeighborFeatureMatrix& v, const DistMatrix& d, int k2);

// Modality-aware LQE: (k2-k3) nearest same-modality samples (self included)
// plus k3 nearest other-modality samples. Divisor is k2 when the neighborhood
// reaches k2 members, otherwise the actual member count.
NeighborFeatureMatrix ma_lqe(const NeighborFeatureMatrix& v, const DistMatrix& d, int k2, int k3);

// d(i,j) = 1 - sum_n min(V_i,n, V_j,n) / sum_n max(V_i,n, V_j,n).
// Full square matrix, zero diagonal, symmetric, in [0,1]. A 0/0 pair (two
// all-zero vectors) yields 1.
Mat jaccard_distance(const NeighborFeatureMatrix& v);

// lambda * d_jacc + (1 - lambda) * d_orig, elementwise.
Mat blend(const Mat& d_jacc, const Mat& d_orig, double lambda_jaccard);

struct PipelineParts {
    Mat jaccard_qg;   // n_query x n_gallery Jaccard block
    Mat original_qg;  // matching block of the input distances
};

// Re-ranking pipeline up to (but excluding) the final blend, for callers that
// sweep lambda without recomputing neighbor structure.
PipelineParts cmkr_pipeline_parts(const DistMatrix& d, const RerankConfig& cfg);
PipelineParts cmkr_pipeline_parts(const EmbeddingSet& query, const EmbeddingSet& gallery,
                                  const RerankConfig& cfg);

// Full pipeline: joint distances -> strategy-selected reciprocal neighbors ->
// optional expansion -> neighbor features -> (MA-)LQE -> Jaccard -> blend.
// Returns the n_query x n_gallery final distance block. Deterministic for
// fixed inputs and config, independent of thread count.
Mat cmkr_pipeline(const EmbeddingSet& query, const EmbeddingSet& gallery, const RerankConfig& cfg);

}  // namespace cmkr

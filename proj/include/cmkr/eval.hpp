#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cmkr/embedding_store.hpp"
#include "cmkr/matrix.hpp"
#include "cmkr/rerank.hpp"

namespace cmkr {

// Gallery validity per query. valid(i,j) == false removes gallery j from
// query i's ranking entirely.
struct ProtocolMask {
    std::size_t n_query = 0;
    std::size_t n_gallery = 0;
    std::vector<std::uint8_t> valid;

    bool at(std::size_t i, std::size_t j) const { return valid[i * n_gallery + j] != 0; }
};

// Standard ReID exclusion: same identity AND same camera is invalid.
ProtocolMask make_standard_mask(const EmbeddingSet& query, const EmbeddingSet& gallery);
ProtocolMask make_full_mask(std::size_t n_query, std::size_t n_gallery);

// Valid gallery indices per query, ascending distance, ties by index.
std::vector<std::vector<int>> rank(const Mat& dist_qg, const ProtocolMask& mask);

// cmc[r] = fraction of queries whose first correct match has rank <= r+1.
std::vector<double> cmc(const std::vector<std::vector<int>>& rankings, std::span<const int> query_ids,
                        std::span<const int> gallery_ids, int max_rank);

// Mean over queries of AP = mean over the positives' ranks r_k of k / r_k.
// Throws protocol_error for a query with no positive.
double map_score(const std::vector<std::vector<int>>& rankings, std::span<const int> query_ids,
                 std::span<const int> gallery_ids);

// One gallery index per (identity, camera) pair, picked uniformly by the
// seeded generator; ascending output, identical for identical seeds.
std::vector<int> sample_gallery_single_shot(const EmbeddingSet& gallery, std::uint64_t seed);

struct Histogram {
    double lo = 0.0;
    double hi = 0.0;
    double width = 0.0;
    std::vector<std::size_t> counts;
};

struct DistanceGapReport {
    double delta_mu = 0.0;  // mean inter-identity minus mean intra-identity distance
    Histogram intra;
    Histogram inter;
};

DistanceGapReport distance_gap_report(const Mat& dist_qg, std::span<const int> query_ids,
                                      std::span<const int> gallery_ids, int bins = 50);

struct MetricsReport {
    std::vector<double> cmc;
    double map = 0.0;
    double delta_mu = 0.0;
    std::size_t n_queries_evaluated = 0;
};

// Rank + CMC + mAP + distance gap for one distance block under the standard
// mask.
MetricsReport evaluate_block(const Mat& dist_qg, const EmbeddingSet& query,
                             const EmbeddingSet& gallery, int max_rank);

struct EvalOptions {
    int trials = 1;
    std::uint64_t seed = 0;
    int max_rank = 20;
    std::optional<RerankConfig> rerank;  // absent -> raw Euclidean distances
};

struct MultiTrialReport {
    MetricsReport mean;
    std::vector<MetricsReport> per_trial;
};

// Single-shot gallery sampling with seeds seed .. seed+trials-1, each trial
// evaluated through cmkr_pipeline or raw distance; arithmetic-mean metrics.
MultiTrialReport multi_trial_eval(const EmbeddingSet& query, const EmbeddingSet& gallery,
                                  const EvalOptions& opts);

struct GridSpec {
    std::vector<int> k1;
    std::vector<int> k2;
    std::vector<int> k3;  // only swept when the base config uses MA-LQE
    std::vector<double> lambda;
};

struct GridPoint {
    RerankConfig config;
    double map = 0.0;
};

struct GridResult {
    GridPoint best;
    std::vector<GridPoint> evaluated;
};

// Sweeps (k1, k2, k3, lambda); the Jaccard block is computed once per
// (k1,k2,k3) and reused across lambda values. Combinations violating
// k3 <= k2 <= k1 are skipped.
GridResult grid_search(const EmbeddingSet& query, const EmbeddingSet& gallery,
                       const RerankConfig& base, const GridSpec& spec);

}  // namespace cmkr

#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cmkr/matrix.hpp"

namespace cmkr {

// Ordered set of lower-case color tokens; compound modifiers ("light blue")
// are matched greedily longest-first.
struct ColorLexicon {
    std::vector<std::string> terms;
};

// 11 basic colors plus their light/dark compounds.
ColorLexicon default_color_lexicon();

// UTF-8 file, one term per line, '#' comments. Must end up non-empty and
// duplicate-free.
ColorLexicon load_lexicon(const std::filesystem::path& file);

struct ColorWordSet {
    std::set<std::string> words;
};

// Case-insensitive longest-match-first scan; compound terms consume their
// tokens.
ColorWordSet extract_colors(std::string_view text, const ColorLexicon& lexicon);

// |a ∩ b| / |a ∪ b|; two empty sets give 0.
double text_iou(const ColorWordSet& a, const ColorWordSet& b);

// Pairwise IoU over one batch, self terms included.
Mat iou_matrix(const std::vector<ColorWordSet>& batch);

// Row-stochastic regularization probabilities: each IoU row (self term
// included) divided by its sum; all-zero rows fall back to uniform.
struct TargetMatrix {
    Mat values;
};

TargetMatrix regularization_targets(const std::vector<ColorWordSet>& batch);

// Row-wise softmax of cosine similarity / temperature between rows of a and b.
Mat matching_prob(const Mat& a, const Mat& b, double temperature);

// (1/N) sum_n sum_m p(n,m) * log(p(n,m) / (q(n,m) + epsilon)), 0 log 0 := 0.
double kl_loss(const Mat& p, const TargetMatrix& q_hat, double epsilon = 1e-8);

// Sum of the four matching-pair losses {v,i}, {i,v}, {v,v}, {i,i}.
double kl_loss_four_pairs(const Mat& f_visible, const Mat& f_infrared, double temperature,
                          const TargetMatrix& q_hat, double epsilon = 1e-8);

}  // namespace cmkr

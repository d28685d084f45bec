#pragma once

#include <cstddef>
#include <vector>

#include "cmkr/embedding_store.hpp"
#include "cmkr/matrix.hpp"

namespace cmkr {

// Joint (n_query + n_gallery)^2 distance matrix. Rows 0..n_query are queries,
// the rest gallery. Block views:
//   qq = [0,nq) x [0,nq)    qg = [0,nq) x [nq,n)
//   gq = [nq,n) x [0,nq)    gg = [nq,n) x [nq,n)
// Neighbor definitions only ever consume rows, so the matrix may become
// asymmetric after per-block row normalization.
struct DistMatrix {
    std::size_t n_query = 0;
    std::size_t n_gallery = 0;
    Mat values;
    std::vector<Modality> modality_of_row;

    std::size_t joint_size() const { return n_query + n_gallery; }
    bool is_query_row(std::size_t i) const { return i < n_query; }
};

// Plain (non-squared) Euclidean distance, a.n x b.n. Per-pair accumulation is
// 64-bit in fixed left-to-right order; output is bit-identical for any thread
// count.
Mat pairwise_euclidean(const EmbeddingSet& a, const EmbeddingSet& b);

// Fills the four blocks from pairwise_euclidean. Requires non-empty sets with
// equal dimension.
DistMatrix assemble_joint(const EmbeddingSet& query, const EmbeddingSet& gallery);

// (x - min) / (max - min) per row; constant rows map to all zeros.
Mat row_minmax_normalize(const Mat& m);

// Row min-max normalization applied to the four blocks independently, then
// reassembled. Entries never mix across blocks.
DistMatrix divided_matrix(const DistMatrix& d);

}  // namespace cmkr

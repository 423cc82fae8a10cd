#pragma once

#include "corrseg/types.hpp"

namespace corrseg {

/// Smallest offset attaining the profile maximum. All built-in metrics are
/// higher-is-better, so argmax applies throughout.
std::size_t predicted_start(const SimilarityProfile& profile);

/// Per-point assignment: Z_k = argmax over classes of Q[k][i], ties resolved
/// to the lowest class index. Labels every point; requires a fully built Q
/// with no sentinel entries left.
Labeling assign_dense(const QMatrix& q);

/// Greedy gap-allowing assignment. Repeatedly takes the sub-task whose
/// column holds the global maximum of Q (ties: lowest class, then lowest
/// row), claims up to t_i consecutive still-unlabeled points from that row
/// downward, then retires the column and the claimed rows by resetting them
/// to the sentinel. Assumes each sub-task appears at most once; unclaimed
/// points stay at kGap. Works on a private copy of Q and is inherently
/// sequential.
Labeling assign_greedy_gaps(QMatrix q, const std::vector<std::size_t>& lengths);

}  // namespace corrseg

#pragma once

#include "corrseg/metrics.hpp"
#include "corrseg/types.hpp"

namespace corrseg {

struct ProfileOptions {
    bool mean_normalize = false;
};

/// Direct evaluation of the window similarity at every offset in
/// [0, T - t_i]; O(T * t_i * d). This is the reference path the fast path is
/// checked against.
SimilarityProfile similarity_profile_naive(MetricKind metric, const Trajectory& sub,
                                           const Trajectory& full, ProfileOptions opts = {});

/// Same profile, restructured for throughput and numerically equivalent to
/// the naive path within 1e-9 relative tolerance:
///   CCS  window sum = one flat dot product of the sub-task against the
///        shifted full task,
///   SSE  expands ||y - x||^2 = ||y||^2 - 2 y.x + ||x||^2; the sub-task term
///        is computed once, the full-task term comes from a prefix-sum table
///        of per-point squared norms, the cross term is the CCS kernel,
///   COS  unit-normalizes all forward-difference tangents once (stationary
///        tangents become zero rows), reducing each window to a flat dot
///        product of unit tangents.
/// Accumulation order inside each window is fixed, so results are
/// deterministic run to run.
SimilarityProfile similarity_profile_fast(MetricKind metric, const Trajectory& sub,
                                          const Trajectory& full, ProfileOptions opts = {});

/// Fast profiles for every library entry, computed as a parallel map over
/// sub-tasks. `threads` caps the worker count (0 = hardware concurrency);
/// the output does not depend on the worker count.
std::vector<SimilarityProfile> similarity_profiles(MetricKind metric, const SubTaskLibrary& library,
                                                   const Trajectory& full, std::size_t threads = 0,
                                                   ProfileOptions opts = {});

/// Builds the T x M matrix of the best window similarity covering each time
/// point: Q[k][i] = max over offsets j with j <= k < j + t_i of
/// profiles[i][j]. Uses a monotonic-deque sliding maximum, O(T) per column;
/// every entry ends up finite because the offset range covers all points.
QMatrix build_q(const std::vector<SimilarityProfile>& profiles,
                const std::vector<std::size_t>& lengths, std::size_t full_length);

}  // namespace corrseg

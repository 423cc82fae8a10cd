#pragma once

#include <span>
#include <string_view>

#include "corrseg/types.hpp"

namespace corrseg {

/// Point-wise similarity metrics usable in the correlation. All three are
/// higher-is-better.
enum class MetricKind {
    ccs,  // raw dot product
    sse,  // negative sum of squared errors, 0 at exact match
    cos,  // cosine of forward-difference tangents, shape comparison
};

MetricKind metric_from_name(std::string_view name);  // "ccs" | "sse" | "cos"
std::string_view metric_name(MetricKind kind);

/// Tangent norms below this threshold count as stationary; the cosine term
/// contributes a neutral 0 instead of dividing by a vanishing norm.
inline constexpr double kTangentNormEpsilon = 1e-12;

double sim_ccs(std::span<const double> y, std::span<const double> x);
double sim_sse(std::span<const double> y, std::span<const double> x);

/// Cosine similarity of two tangent vectors, in [-1, 1]. Returns 0 when
/// either norm is below kTangentNormEpsilon.
double sim_cos_tangent(std::span<const double> a, std::span<const double> b);

/// Similarity of the whole sub-task demonstration against the window of the
/// full task starting at `offset`. CCS and SSE sum point-wise terms over the
/// t_i window samples; COS sums tangent cosines over the t_i - 1 forward
/// differences. With `mean_normalize` the sum is divided by its term count.
double window_similarity(MetricKind metric, const Trajectory& sub, const Trajectory& full,
                         std::size_t offset, bool mean_normalize = false);

}  // namespace corrseg

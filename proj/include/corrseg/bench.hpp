#pragma once

#include <cstdint>

#include "corrseg/pipeline.hpp"

namespace corrseg {

/// One measured grid point: profile computation + Q build + assignment over
/// random data of the given size, median over `repeats` timed runs.
struct BenchPoint {
    std::size_t full_length = 0;  // T
    std::size_t num_subtasks = 0;  // M
    std::size_t subtask_length = 0;  // mean t_i
    std::size_t dim = 0;
    double seconds = 0.0;
};

struct BenchConfig {
    std::size_t num_subtasks = 5;
    std::size_t subtask_length = 400;
    std::size_t dim = 3;
    int repeats = 5;
    MetricKind metric = MetricKind::sse;
    AssignMode mode = AssignMode::dense;
    std::uint64_t seed = 1;
};

/// Times the pipeline across a grid of full-task lengths (everything else
/// fixed). Single-threaded so the scaling is not confounded by the worker
/// pool.
std::vector<BenchPoint> bench_t_scaling(const std::vector<std::size_t>& full_lengths,
                                        const BenchConfig& cfg);

/// Times the pipeline across a grid of library sizes M at fixed T.
std::vector<BenchPoint> bench_m_scaling(std::size_t full_length,
                                        const std::vector<std::size_t>& library_sizes,
                                        const BenchConfig& cfg);

/// Median of the consecutive time ratios; the grid is expected to double its
/// varying parameter, so linear scaling shows a ratio near 2.
double median_doubling_ratio(const std::vector<double>& seconds);

/// Least-squares slope of log(seconds) against log(size): the fitted growth
/// exponent.
double fitted_exponent(const std::vector<double>& sizes, const std::vector<double>& seconds);

}  // namespace corrseg

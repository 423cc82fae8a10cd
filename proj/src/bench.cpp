#include "corrseg/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

namespace corrseg {

namespace {

Trajectory random_trajectory(std::mt19937_64& engine, std::size_t length, std::size_t dim) {
    std::vector<double> values(length * dim);
    for (double& v : values) {
        v = static_cast<double>(engine() >> 11) * 0x1.0p-52 - 1.0;  // uniform [-1, 1)
    }
    return Trajectory(length, dim, std::move(values));
}

double time_pipeline(const Trajectory& full, const SubTaskLibrary& library,
                     const BenchConfig& cfg) {
    SegmentationOptions opts;
    opts.metric = cfg.metric;
    opts.mode = cfg.mode;
    opts.threads = 1;
    const auto begin = std::chrono::steady_clock::now();
    const SegmentationResult result = segment_demonstration(full, library, opts);
    const auto end = std::chrono::steady_clock::now();
    if (result.labeling.size() != full.size()) {
        throw internal_error("benchmark pipeline produced a malformed labeling");
    }
    return std::chrono::duration<double>(end - begin).count();
}

double median_time(const Trajectory& full, const SubTaskLibrary& library, const BenchConfig& cfg) {
    time_pipeline(full, library, cfg);  // warmup
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(cfg.repeats));
    for (int r = 0; r < cfg.repeats; ++r) {
        samples.push_back(time_pipeline(full, library, cfg));
    }
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

SubTaskLibrary random_library(std::mt19937_64& engine, std::size_t count, std::size_t length,
                              std::size_t dim) {
    std::vector<SubTaskLibrary::Entry> entries;
    entries.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        entries.push_back({"bench_" + std::to_string(i), random_trajectory(engine, length, dim)});
    }
    return SubTaskLibrary(std::move(entries));
}

}  // namespace

std::vector<BenchPoint> bench_t_scaling(const std::vector<std::size_t>& full_lengths,
                                        const BenchConfig& cfg) {
    std::mt19937_64 engine(cfg.seed);
    const SubTaskLibrary library =
        random_library(engine, cfg.num_subtasks, cfg.subtask_length, cfg.dim);
    std::vector<BenchPoint> points;
    points.reserve(full_lengths.size());
    for (std::size_t t : full_lengths) {
        const Trajectory full = random_trajectory(engine, t, cfg.dim);
        points.push_back({t, cfg.num_subtasks, cfg.subtask_length, cfg.dim,
                          median_time(full, library, cfg)});
    }
    return points;
}

std::vector<BenchPoint> bench_m_scaling(std::size_t full_length,
                                        const std::vector<std::size_t>& library_sizes,
                                        const BenchConfig& cfg) {
    std::mt19937_64 engine(cfg.seed);
    const Trajectory full = random_trajectory(engine, full_length, cfg.dim);
    std::vector<BenchPoint> points;
    points.reserve(library_sizes.size());
    for (std::size_t m : library_sizes) {
        const SubTaskLibrary library = random_library(engine, m, cfg.subtask_length, cfg.dim);
        points.push_back({full_length, m, cfg.subtask_length, cfg.dim,
                          median_time(full, library, cfg)});
    }
    return points;
}

double median_doubling_ratio(const std::vector<double>& seconds) {
    if (seconds.size() < 2) {
        throw std::invalid_argument("need at least two grid points for a ratio");
    }
    std::vector<double> ratios;
    ratios.reserve(seconds.size() - 1);
    for (std::size_t i = 1; i < seconds.size(); ++i) {
        ratios.push_back(seconds[i] / seconds[i - 1]);
    }
    std::sort(ratios.begin(), ratios.end());
    return ratios[ratios.size() / 2];
}

double fitted_exponent(const std::vector<double>& sizes, const std::vector<double>& seconds) {
    if (sizes.size() != seconds.size() || sizes.size() < 2) {
        throw std::invalid_argument("need matching size/time grids of at least two points");
    }
    const auto n = static_cast<double>(sizes.size());
    double sum_x = 0.0, sum_y = 0.0, sum_xx = 0.0, sum_xy = 0.0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const double x = std::log(sizes[i]);
        const double y = std::log(seconds[i]);
        sum_x += x;
        sum_y += y;
        sum_xx += x * x;
        sum_xy += x * y;
    }
    return (n * sum_xy - sum_x * sum_y) / (n * sum_xx - sum_x * sum_x);
}

}  // namespace corrseg

#include "corrseg/correlate.hpp"

#include <atomic>
#include <cmath>
#include <deque>
#include <string>
#include <thread>

#include "corrseg/kernels.hpp"

namespace corrseg {

namespace {

std::size_t checked_num_offsets(const Trajectory& sub, const Trajectory& full) {
    if (sub.dim() != full.dim()) {
        throw std::invalid_argument("sub-task and full-task dimensions differ");
    }
    if (sub.size() > full.size()) {
        throw std::invalid_argument("sub-task is longer than the full task (" +
                                    std::to_string(sub.size()) + " > " +
                                    std::to_string(full.size()) + ")");
    }
    return full.size() - sub.size() + 1;
}

// Forward-difference tangents, each row scaled to unit norm. Rows with norm
// below kTangentNormEpsilon become zero rows so they drop out of the dot
// products, matching the neutral-contribution rule.
std::vector<double> unit_tangents(const Trajectory& traj) {
    const std::size_t d = traj.dim();
    const std::size_t rows = traj.size() - 1;
    std::vector<double> out(rows * d);
    for (std::size_t k = 0; k < rows; ++k) {
        double norm_sq = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            const double v = traj(k + 1, j) - traj(k, j);
            out[k * d + j] = v;
            norm_sq += v * v;
        }
        const double norm = std::sqrt(norm_sq);
        if (norm < kTangentNormEpsilon) {
            for (std::size_t j = 0; j < d; ++j) {
                out[k * d + j] = 0.0;
            }
        } else {
            for (std::size_t j = 0; j < d; ++j) {
                out[k * d + j] /= norm;
            }
        }
    }
    return out;
}

void apply_mean_normalize(std::vector<double>& values, std::size_t terms) {
    for (double& v : values) {
        v /= static_cast<double>(terms);
    }
}

}  // namespace

SimilarityProfile similarity_profile_naive(MetricKind metric, const Trajectory& sub,
                                           const Trajectory& full, ProfileOptions opts) {
    const std::size_t num_offsets = checked_num_offsets(sub, full);
    std::vector<double> values(num_offsets);
    for (std::size_t n = 0; n < num_offsets; ++n) {
        values[n] = window_similarity(metric, sub, full, n, opts.mean_normalize);
    }
    return SimilarityProfile(0, std::move(values));
}

SimilarityProfile similarity_profile_fast(MetricKind metric, const Trajectory& sub,
                                          const Trajectory& full, ProfileOptions opts) {
    const std::size_t num_offsets = checked_num_offsets(sub, full);
    const std::size_t d = sub.dim();
    const std::size_t t = sub.size();
    const auto& k = kernels::active();

    std::vector<double> values(num_offsets);
    switch (metric) {
        case MetricKind::ccs: {
            const std::size_t window = t * d;
            for (std::size_t n = 0; n < num_offsets; ++n) {
                values[n] = k.dot(sub.data(), full.data() + n * d, window);
            }
            if (opts.mean_normalize) {
                apply_mean_normalize(values, t);
            }
            break;
        }
        case MetricKind::sse: {
            const std::size_t window = t * d;
            const double sub_sq = k.sum_squares(sub.data(), window);
            std::vector<double> prefix(full.size() + 1, 0.0);
            for (std::size_t r = 0; r < full.size(); ++r) {
                prefix[r + 1] = prefix[r] + k.sum_squares(full.data() + r * d, d);
            }
            for (std::size_t n = 0; n < num_offsets; ++n) {
                const double cross = k.dot(sub.data(), full.data() + n * d, window);
                values[n] = 2.0 * cross - sub_sq - (prefix[n + t] - prefix[n]);
            }
            if (opts.mean_normalize) {
                apply_mean_normalize(values, t);
            }
            break;
        }
        case MetricKind::cos: {
            const std::vector<double> sub_u = unit_tangents(sub);
            const std::vector<double> full_u = unit_tangents(full);
            const std::size_t window = (t - 1) * d;
            for (std::size_t n = 0; n < num_offsets; ++n) {
                values[n] = k.dot(sub_u.data(), full_u.data() + n * d, window);
            }
            if (opts.mean_normalize) {
                apply_mean_normalize(values, t - 1);
            }
            break;
        }
    }
    return SimilarityProfile(0, std::move(values));
}

std::vector<SimilarityProfile> similarity_profiles(MetricKind metric, const SubTaskLibrary& library,
                                                   const Trajectory& full, std::size_t threads,
                                                   ProfileOptions opts) {
    const std::size_t m = library.size();
    if (threads == 0) {
        threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, m);

    // One preconstructed slot per sub-task; workers claim indices off an
    // atomic counter, so the assembled result is scheduling-independent.
    std::vector<SimilarityProfile> out(
        m, SimilarityProfile(0, std::vector<double>{0.0}));
    auto compute = [&](std::size_t i) {
        SimilarityProfile p = similarity_profile_fast(metric, library.demo(i), full, opts);
        out[i] = SimilarityProfile(i, p.values());
    };

    if (threads <= 1) {
        for (std::size_t i = 0; i < m; ++i) {
            compute(i);
        }
        return out;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= m || failed.load()) {
                    return;
                }
                try {
                    compute(i);
                } catch (...) {
                    if (!failed.exchange(true)) {
                        failure = std::current_exception();
                    }
                    return;
                }
            }
        });
    }
    for (std::thread& th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

QMatrix build_q(const std::vector<SimilarityProfile>& profiles,
                const std::vector<std::size_t>& lengths, std::size_t full_length) {
    if (profiles.size() != lengths.size() || profiles.empty()) {
        throw std::invalid_argument("one profile per sub-task length required");
    }
    QMatrix q(full_length, profiles.size());
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        const std::vector<double>& prof = profiles[i].values();
        const std::size_t t = lengths[i];
        if (t < 1 || t > full_length || prof.size() != full_length - t + 1) {
            throw std::invalid_argument("profile " + std::to_string(i) +
                                        " length inconsistent with T and t_i");
        }
        // Sliding maximum over the offsets covering each point k, i.e.
        // j in [k - t + 1, k] clipped to [0, |prof| - 1]. The deque keeps
        // offsets with non-increasing profile values; ties keep the earliest
        // offset at the front, matching the nested-loop maximum exactly.
        std::deque<std::size_t> window;
        for (std::size_t point = 0; point < full_length; ++point) {
            if (point < prof.size()) {
                while (!window.empty() && prof[window.back()] < prof[point]) {
                    window.pop_back();
                }
                window.push_back(point);
            }
            while (point >= t && window.front() < point - t + 1) {
                window.pop_front();
            }
            q.at(point, i) = prof[window.front()];
        }
    }
    return q;
}

}  // namespace corrseg

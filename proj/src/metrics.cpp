#include "corrseg/metrics.hpp"

#include <cmath>
#include <string>

namespace corrseg {

namespace {

void require_same_dim(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
    }
}

}  // namespace

MetricKind metric_from_name(std::string_view name) {
    if (name == "ccs") return MetricKind::ccs;
    if (name == "sse") return MetricKind::sse;
    if (name == "cos") return MetricKind::cos;
    throw std::invalid_argument("unknown metric '" + std::string(name) +
                                "' (expected ccs, sse, or cos)");
}

std::string_view metric_name(MetricKind kind) {
    switch (kind) {
        case MetricKind::ccs: return "ccs";
        case MetricKind::sse: return "sse";
        case MetricKind::cos: return "cos";
    }
    throw internal_error("unhandled metric kind");
}

double sim_ccs(std::span<const double> y, std::span<const double> x) {
    require_same_dim(y, x);
    double acc = 0.0;
    for (std::size_t j = 0; j < y.size(); ++j) {
        acc += y[j] * x[j];
    }
    return acc;
}

double sim_sse(std::span<const double> y, std::span<const double> x) {
    require_same_dim(y, x);
    double acc = 0.0;
    for (std::size_t j = 0; j < y.size(); ++j) {
        const double diff = y[j] - x[j];
        acc += diff * diff;
    }
    return -acc;
}

double sim_cos_tangent(std::span<const double> a, std::span<const double> b) {
    require_same_dim(a, b);
    double dot = 0.0;
    double na = 0.0;
    double nb = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        dot += a[j] * b[j];
        na += a[j] * a[j];
        nb += b[j] * b[j];
    }
    na = std::sqrt(na);
    nb = std::sqrt(nb);
    if (na < kTangentNormEpsilon || nb < kTangentNormEpsilon) {
        return 0.0;
    }
    return dot / (na * nb);
}

double window_similarity(MetricKind metric, const Trajectory& sub, const Trajectory& full,
                         std::size_t offset, bool mean_normalize) {
    const std::size_t d = sub.dim();
    if (d != full.dim()) {
        throw std::invalid_argument("sub-task and full-task dimensions differ");
    }
    const std::size_t t = sub.size();
    const std::size_t total = full.size();
    if (t > total || offset > total - t) {
        throw std::invalid_argument("window offset out of range");
    }

    double acc = 0.0;
    std::size_t terms = 0;
    if (metric == MetricKind::cos) {
        std::vector<double> a(d);
        std::vector<double> b(d);
        for (std::size_t m = 0; m + 1 < t; ++m) {
            for (std::size_t j = 0; j < d; ++j) {
                a[j] = sub(m + 1, j) - sub(m, j);
                b[j] = full(offset + m + 1, j) - full(offset + m, j);
            }
            acc += sim_cos_tangent(a, b);
        }
        terms = t - 1;
    } else {
        for (std::size_t m = 0; m < t; ++m) {
            acc += metric == MetricKind::ccs ? sim_ccs(sub.point(m), full.point(offset + m))
                                             : sim_sse(sub.point(m), full.point(offset + m));
        }
        terms = t;
    }
    return mean_normalize ? acc / static_cast<double>(terms) : acc;
}

}  // namespace corrseg

#include "corrseg/synth.hpp"

#include <cmath>
#include <random>
#include <string>

#include "corrseg/preprocess.hpp"

namespace corrseg {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Standard-normal sampler with a pinned algorithm: 53-bit uniforms from
// mt19937_64 fed through Box-Muller. std::normal_distribution is
// implementation-defined, so it is avoided here.
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform01();
        } while (u1 == 0.0);
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * kPi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

double smoothstep(double u) { return u * u * (3.0 - 2.0 * u); }

// Triangle wave in [0, 1] with period 1, starting and ending at 0.
double triangle01(double w) {
    const double frac = w - std::floor(w);
    return 1.0 - std::fabs(2.0 * frac - 1.0);
}

// Renders one canonical stroke of `length` samples starting at `anchor`.
std::vector<double> render_shape(ShapeKind kind, std::size_t length, double amplitude,
                                 std::size_t dim, const std::vector<double>& anchor) {
    std::vector<double> pts(length * dim, 0.0);
    const double denom = static_cast<double>(length - 1);
    for (std::size_t s = 0; s < length; ++s) {
        const double u = static_cast<double>(s) / denom;
        double x = 0.0;
        double y = 0.0;
        double z = 0.0;
        switch (kind) {
            case ShapeKind::loop: {
                const double theta = 2.0 * kPi * u;
                x = amplitude * std::sin(theta);
                y = amplitude * (1.0 - std::cos(theta));
                z = 0.3 * amplitude * std::sin(2.0 * theta);
                break;
            }
            case ShapeKind::arc: {
                const double theta = kPi * u;
                x = amplitude * (1.0 - std::cos(theta));
                y = amplitude * std::sin(theta);
                z = 0.0;
                break;
            }
            case ShapeKind::line: {
                x = amplitude * u;
                y = 0.6 * amplitude * u;
                z = 0.3 * amplitude * u;
                break;
            }
            case ShapeKind::zigzag: {
                x = amplitude * u;
                y = 0.5 * amplitude * triangle01(3.0 * u);
                z = 0.2 * amplitude * u;
                break;
            }
            case ShapeKind::pick_place: {
                // Lift, carry, set down; the vertical axis dwells at both
                // ends, giving near-stationary tangents there.
                const double carry = u < 0.25 ? 0.0
                                   : u < 0.75 ? smoothstep((u - 0.25) / 0.5)
                                              : 1.0;
                const double lift = u < 0.25   ? smoothstep(u / 0.25)
                                    : u < 0.75 ? 1.0
                                               : 1.0 - smoothstep((u - 0.75) / 0.25);
                x = 1.5 * amplitude * carry;
                y = dim == 2 ? amplitude * lift : 0.2 * amplitude * carry;
                z = amplitude * lift;
                break;
            }
        }
        pts[s * dim + 0] = anchor[0] + x;
        pts[s * dim + 1] = anchor[1] + y;
        if (dim == 3) {
            pts[s * dim + 2] = anchor[2] + z;
        }
    }
    return pts;
}

void validate(const CorpusSpec& spec) {
    if (spec.dim != 2 && spec.dim != 3) {
        throw std::invalid_argument("corpus dimension must be 2 or 3");
    }
    if (spec.subtasks.empty()) {
        throw std::invalid_argument("corpus requires at least one sub-task");
    }
    if (!(spec.noise_sigma >= 0.0)) {
        throw std::invalid_argument("noise sigma must be >= 0");
    }
    if (!spec.gap_lengths.empty() && spec.gap_lengths.size() != spec.subtasks.size() - 1) {
        throw std::invalid_argument("expected " + std::to_string(spec.subtasks.size() - 1) +
                                    " inter-sub-task gap lengths");
    }
    for (const SubTaskSpec& st : spec.subtasks) {
        if (st.length < 2) {
            throw std::invalid_argument("sub-task length must be >= 2");
        }
        if (!(st.amplitude > 0.0)) {
            throw std::invalid_argument("sub-task amplitude must be > 0");
        }
        if (!(st.perturb.scale > 0.0)) {
            throw std::invalid_argument("perturbation scale must be > 0");
        }
        if (!(st.perturb.tempo > 0.0)) {
            throw std::invalid_argument("perturbation tempo must be > 0");
        }
        if (!st.perturb.translation.empty() && st.perturb.translation.size() != spec.dim) {
            throw std::invalid_argument("perturbation translation must have the corpus dimension");
        }
    }
}

}  // namespace

ShapeKind shape_from_name(std::string_view name) {
    if (name == "loop") return ShapeKind::loop;
    if (name == "arc") return ShapeKind::arc;
    if (name == "line") return ShapeKind::line;
    if (name == "zigzag") return ShapeKind::zigzag;
    if (name == "pick-place") return ShapeKind::pick_place;
    throw std::invalid_argument("unknown shape '" + std::string(name) +
                                "' (expected loop, arc, line, zigzag, or pick-place)");
}

std::string_view shape_name(ShapeKind kind) {
    switch (kind) {
        case ShapeKind::loop: return "loop";
        case ShapeKind::arc: return "arc";
        case ShapeKind::line: return "line";
        case ShapeKind::zigzag: return "zigzag";
        case ShapeKind::pick_place: return "pick-place";
    }
    throw internal_error("unhandled shape kind");
}

Corpus generate(const CorpusSpec& spec) {
    validate(spec);
    const std::size_t m = spec.subtasks.size();
    const std::size_t d = spec.dim;

    // Embedded instances at deterministic anchors marching along x.
    std::vector<std::vector<double>> embedded(m);
    double anchor_x = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const SubTaskSpec& st = spec.subtasks[i];
        std::vector<double> anchor(d, 0.0);
        anchor[0] = anchor_x;
        embedded[i] = render_shape(st.kind, st.length, st.amplitude, d, anchor);
        anchor_x += 2.5 * st.amplitude;
    }

    // Full task: embedded instances joined by smoothstep gap fillers whose
    // samples sit strictly between the neighboring endpoints.
    std::vector<double> full;
    std::vector<int> truth;
    for (std::size_t i = 0; i < m; ++i) {
        full.insert(full.end(), embedded[i].begin(), embedded[i].end());
        truth.insert(truth.end(), spec.subtasks[i].length, static_cast<int>(i));
        const std::size_t gap =
            (i + 1 < m && !spec.gap_lengths.empty()) ? spec.gap_lengths[i] : 0;
        if (i + 1 < m && gap > 0) {
            const double* from = embedded[i].data() + (spec.subtasks[i].length - 1) * d;
            const double* to = embedded[i + 1].data();
            for (std::size_t s = 1; s <= gap; ++s) {
                const double h = smoothstep(static_cast<double>(s) / static_cast<double>(gap + 1));
                for (std::size_t j = 0; j < d; ++j) {
                    full.push_back(from[j] + h * (to[j] - from[j]));
                }
            }
            truth.insert(truth.end(), gap, Labeling::kGap);
        }
    }

    GaussianSampler noise(spec.seed);
    if (spec.noise_sigma > 0.0) {
        for (double& v : full) {
            v += spec.noise_sigma * noise.next();
        }
    }

    // Library demos: tempo resample, scale about the first point, translate,
    // then noise. Identity settings leave the demo equal to the embedded
    // instance.
    std::vector<SubTaskLibrary::Entry> entries;
    entries.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const SubTaskSpec& st = spec.subtasks[i];
        Trajectory demo(st.length, d, embedded[i]);
        if (st.perturb.tempo != 1.0) {
            const auto n_out = static_cast<std::size_t>(std::llround(
                static_cast<double>(st.length) * st.perturb.tempo));
            demo = resample(demo, std::max<std::size_t>(2, n_out));
        }
        std::vector<double> pts = demo.values();
        if (st.perturb.scale != 1.0) {
            std::vector<double> first(pts.begin(), pts.begin() + d);
            for (std::size_t s = 0; s < demo.size(); ++s) {
                for (std::size_t j = 0; j < d; ++j) {
                    pts[s * d + j] = first[j] + st.perturb.scale * (pts[s * d + j] - first[j]);
                }
            }
        }
        if (!st.perturb.translation.empty()) {
            for (std::size_t s = 0; s < demo.size(); ++s) {
                for (std::size_t j = 0; j < d; ++j) {
                    pts[s * d + j] += st.perturb.translation[j];
                }
            }
        }
        if (spec.noise_sigma > 0.0) {
            for (double& v : pts) {
                v += spec.noise_sigma * noise.next();
            }
        }
        entries.push_back({std::string(shape_name(st.kind)) + "_" + std::to_string(i),
                           Trajectory(demo.size(), d, std::move(pts))});
    }

    const std::size_t total = truth.size();
    return Corpus{Trajectory(total, d, std::move(full)),
                  SubTaskLibrary(std::move(entries)),
                  Labeling(std::move(truth), m)};
}

}  // namespace corrseg

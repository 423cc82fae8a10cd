#pragma once

#include <cstdint>
#include <string_view>

#include "corrseg/types.hpp"

namespace corrseg {

/// Planar/spatial stroke families the generator can render.
enum class ShapeKind { loop, arc, line, zigzag, pick_place };

ShapeKind shape_from_name(std::string_view name);
std::string_view shape_name(ShapeKind kind);

/// How a library demonstration differs from the instance embedded in the
/// full task, mimicking re-demonstration variability. Applied as: resample
/// to round(t_i * tempo) samples, scale about the first point, translate,
/// then add noise. Identity values leave the demo bit-equal to the embedded
/// instance (before noise).
struct Perturbation {
    std::vector<double> translation;  // empty = zero vector
    double scale = 1.0;
    double tempo = 1.0;
};

struct SubTaskSpec {
    ShapeKind kind = ShapeKind::line;
    std::size_t length = 2;  // t_i
    double amplitude = 1.0;
    Perturbation perturb;
};

/// Deterministic synthetic corpus description. Shapes are laid out left to
/// right (anchor spacing 2.5x amplitude), so different sub-tasks occupy
/// different spatial regions. gap_lengths holds the M-1 inter-sub-task gap
/// sample counts (empty = all zero); gaps are filled with a cubic smoothstep
/// blend between neighboring shape endpoints.
struct CorpusSpec {
    std::uint64_t seed = 0;
    std::size_t dim = 2;  // 2 or 3
    std::vector<SubTaskSpec> subtasks;
    std::vector<std::size_t> gap_lengths;
    double noise_sigma = 0.0;
};

struct Corpus {
    Trajectory full;
    SubTaskLibrary library;
    Labeling truth;
};

/// Renders the corpus: the full task with exact ground-truth labels and the
/// perturbed library demonstrations. Noise is i.i.d. Gaussian per coordinate
/// from a Box-Muller transform over mt19937_64, consumed in a fixed order
/// (full task first, then each demo), so output is bit-reproducible across
/// platforms for a given spec.
Corpus generate(const CorpusSpec& spec);

}  // namespace corrseg

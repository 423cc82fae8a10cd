#include "corrseg/pipeline.hpp"

#include <string>

namespace corrseg {

AssignMode assign_mode_from_name(std::string_view name) {
    if (name == "dense") return AssignMode::dense;
    if (name == "gaps") return AssignMode::gaps;
    throw std::invalid_argument("unknown assignment mode '" + std::string(name) +
                                "' (expected dense or gaps)");
}

std::string_view assign_mode_name(AssignMode mode) {
    switch (mode) {
        case AssignMode::dense: return "dense";
        case AssignMode::gaps: return "gaps";
    }
    throw internal_error("unhandled assignment mode");
}

SegmentationResult segment_demonstration(const Trajectory& full, const SubTaskLibrary& library,
                                         const SegmentationOptions& opts) {
    if (library.dim() != full.dim()) {
        throw std::invalid_argument("library dimension " + std::to_string(library.dim()) +
                                    " does not match full-task dimension " +
                                    std::to_string(full.dim()));
    }
    for (std::size_t i = 0; i < library.size(); ++i) {
        if (library.demo(i).size() > full.size()) {
            throw std::invalid_argument("sub-task '" + library.name(i) +
                                        "' is longer than the full task");
        }
    }

    const ProfileOptions profile_opts{opts.mean_normalize};
    std::vector<SimilarityProfile> profiles =
        similarity_profiles(opts.metric, library, full, opts.threads, profile_opts);

    std::vector<std::optional<std::size_t>> starts;
    starts.reserve(profiles.size());
    for (const SimilarityProfile& p : profiles) {
        starts.emplace_back(predicted_start(p));
    }

    const std::vector<std::size_t> lengths = library.lengths();
    QMatrix q = build_q(profiles, lengths, full.size());
    Labeling labeling = opts.mode == AssignMode::dense ? assign_dense(q)
                                                       : assign_greedy_gaps(std::move(q), lengths);
    return make_segmentation_result(std::move(labeling), std::move(starts), lengths);
}

}  // namespace corrseg

#pragma once

#include "corrseg/assign.hpp"
#include "corrseg/correlate.hpp"

namespace corrseg {

enum class AssignMode {
    dense,  // per-point argmax over Q, labels everything
    gaps,   // greedy at-most-once assignment, unclaimed points stay -1
};

AssignMode assign_mode_from_name(std::string_view name);  // "dense" | "gaps"
std::string_view assign_mode_name(AssignMode mode);

struct SegmentationOptions {
    MetricKind metric = MetricKind::sse;
    AssignMode mode = AssignMode::dense;
    std::size_t threads = 0;  // 0 = hardware concurrency
    bool mean_normalize = false;
};

/// Full segmentation pass: profiles -> Q -> labeling, plus the per sub-task
/// predicted start indices.
SegmentationResult segment_demonstration(const Trajectory& full, const SubTaskLibrary& library,
                                         const SegmentationOptions& opts = {});

}  // namespace corrseg

#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace corrseg {

/// Reserved "minus infinity" sentinel. Distinct from every finite similarity
/// value and ordered below all of them.
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// Thrown when an internal invariant breaks. Maps to exit code 2 in the CLI.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A uniformly sampled multi-dimensional trajectory, stored row-major
/// (T rows of d coordinates). Immutable after construction; all entries
/// are validated finite, T >= 2 and d >= 1.
class Trajectory {
public:
    Trajectory(std::size_t length, std::size_t dim, std::vector<double> values);

    /// Builds from per-sample rows; rejects ragged input.
    static Trajectory from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const noexcept { return length_; }
    std::size_t dim() const noexcept { return dim_; }

    double operator()(std::size_t t, std::size_t j) const { return values_[t * dim_ + j]; }
    std::span<const double> point(std::size_t t) const { return {values_.data() + t * dim_, dim_}; }

    /// Flat row-major storage; layout is relied on by the sliding kernels.
    const double* data() const noexcept { return values_.data(); }
    const std::vector<double>& values() const noexcept { return values_; }

    bool operator==(const Trajectory&) const = default;

private:
    std::size_t length_ = 0;
    std::size_t dim_ = 0;
    std::vector<double> values_;
};

/// Ordered set of named sub-task demonstrations. Names are unique and
/// non-empty; every demonstration shares the same dimension.
class SubTaskLibrary {
public:
    struct Entry {
        std::string name;
        Trajectory demo;
    };

    explicit SubTaskLibrary(std::vector<Entry> entries);

    std::size_t size() const noexcept { return entries_.size(); }  // M
    std::size_t dim() const noexcept { return entries_.front().demo.dim(); }

    const Entry& entry(std::size_t i) const { return entries_.at(i); }
    const Trajectory& demo(std::size_t i) const { return entries_.at(i).demo; }
    const std::string& name(std::size_t i) const { return entries_.at(i).name; }

    /// Demonstration lengths t_i in library order.
    std::vector<std::size_t> lengths() const;
    std::vector<std::string> names() const;

private:
    std::vector<Entry> entries_;
};

/// Window similarities of one sub-task against the full task, one value per
/// admissible offset. For sub-task length t against a full task of length T
/// the profile has T - t + 1 entries (the final flush alignment included).
class SimilarityProfile {
public:
    SimilarityProfile(std::size_t subtask_index, std::vector<double> values);

    std::size_t subtask_index() const noexcept { return subtask_index_; }
    std::size_t size() const noexcept { return values_.size(); }
    double at(std::size_t n) const { return values_.at(n); }
    const std::vector<double>& values() const noexcept { return values_; }

private:
    std::size_t subtask_index_ = 0;
    std::vector<double> values_;
};

/// T x M matrix of the best window similarity covering each time point.
/// Entries start at the kNegInf sentinel and are finite once built.
class QMatrix {
public:
    QMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }  // T
    std::size_t cols() const noexcept { return cols_; }  // M

    double at(std::size_t k, std::size_t i) const { return values_[k * cols_ + i]; }
    double& at(std::size_t k, std::size_t i) { return values_[k * cols_ + i]; }
    std::span<const double> row(std::size_t k) const { return {values_.data() + k * cols_, cols_}; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> values_;
};

/// Per-point class assignment; kGap (-1) marks unlabeled points.
class Labeling {
public:
    static constexpr int kGap = -1;

    Labeling(std::vector<int> classes, std::size_t num_classes);

    std::size_t size() const noexcept { return classes_.size(); }  // T
    std::size_t num_classes() const noexcept { return num_classes_; }
    int at(std::size_t k) const { return classes_.at(k); }
    const std::vector<int>& classes() const noexcept { return classes_; }

    bool operator==(const Labeling&) const = default;

private:
    std::vector<int> classes_;
    std::size_t num_classes_ = 0;
};

/// Maximal contiguous constant-class extent [begin, end).
struct Run {
    int cls = Labeling::kGap;
    std::size_t begin = 0;
    std::size_t end = 0;

    bool operator==(const Run&) const = default;
};

/// Run-length encodes a labeling; gap points are excluded from the run list.
std::vector<Run> runs_from_labeling(const Labeling& labeling);

/// Full segmentation output: the labeling, per sub-task predicted start
/// indices, and the derived run list.
struct SegmentationResult {
    Labeling labeling;
    std::vector<std::optional<std::size_t>> starts;
    std::vector<Run> runs;
};

/// Assembles a result and validates each present start against [0, T - t_i].
SegmentationResult make_segmentation_result(Labeling labeling,
                                            std::vector<std::optional<std::size_t>> starts,
                                            const std::vector<std::size_t>& lengths);

}  // namespace corrseg

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>

#include "corrseg/types.hpp"

namespace corrseg {

/// File and parse failures. Maps to exit code 1 in the CLI.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Trajectory CSV: UTF-8, header "x0,x1,...", one row per time step. Values
// are written with 17 significant digits so a save/load round trip is exact.
Trajectory load_trajectory(const std::filesystem::path& path);
void save_trajectory(const std::filesystem::path& path, const Trajectory& traj);

// Label CSV: single "label" column, -1 for gaps, one row per time step.
Labeling load_labels(const std::filesystem::path& path);
void save_labels(const std::filesystem::path& path, const Labeling& labeling);

/// Key-value dataset manifest:
///   full: full.csv
///   subtask: <name> <path>   (repeated, in class order)
///   truth: truth.csv         (optional)
///   d: 3                     (optional dimension check)
///   notes: free text         (optional)
/// Relative paths are resolved against the manifest's directory.
struct Manifest {
    std::filesystem::path base_dir;
    std::string full;
    std::vector<std::pair<std::string, std::string>> subtasks;  // name, path
    std::optional<std::string> truth;
    std::optional<std::size_t> dim_hint;
    std::string notes;

    std::filesystem::path resolve(const std::string& relative) const;
};

Manifest load_manifest(const std::filesystem::path& path);
void save_manifest(const std::filesystem::path& path, const Manifest& manifest);

struct LoadedDataset {
    Trajectory full;
    SubTaskLibrary library;
    std::optional<Labeling> truth;
};

/// Loads every file the manifest references and cross-checks dimensions and
/// the truth length.
LoadedDataset load_dataset(const Manifest& manifest);

/// Static plot of the labeled trajectory: one colored polyline per run over
/// the full path in gray, plus a class legend. Plots the first two
/// dimensions, or value against time when d == 1.
void write_svg_plot(const std::filesystem::path& path, const Trajectory& traj,
                    const Labeling& labeling, const std::vector<std::string>& class_names);

}  // namespace corrseg

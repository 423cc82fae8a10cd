#include "corrseg/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace corrseg {

namespace fs = std::filesystem;

namespace {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::size_t begin = 0;
    for (;;) {
        const std::size_t pos = line.find(sep, begin);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(begin));
            return fields;
        }
        fields.push_back(line.substr(begin, pos - begin));
        begin = pos + 1;
    }
}

std::string trim(const std::string& s) {
    const auto from = s.find_first_not_of(" \t\r\n");
    if (from == std::string::npos) {
        return "";
    }
    const auto to = s.find_last_not_of(" \t\r\n");
    return s.substr(from, to - from + 1);
}

// Header lines are the ones that do not parse as a row of numbers
// (from_chars still accepts inf/nan tokens, which are then rejected as
// values with a row/column message rather than skipped).
bool looks_like_header(const std::string& line) {
    std::size_t begin = 0;
    for (;;) {
        std::size_t pos = line.find(',', begin);
        const std::string cell =
            line.substr(begin, pos == std::string::npos ? pos : pos - begin);
        const auto from = cell.find_first_not_of(" \t\r");
        if (from == std::string::npos) {
            return true;
        }
        const auto to = cell.find_last_not_of(" \t\r");
        double value = 0.0;
        const char* first = cell.data() + from;
        const char* last = cell.data() + to + 1;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last) {
            return true;
        }
        if (pos == std::string::npos) {
            return false;
        }
        begin = pos + 1;
    }
}

std::ifstream open_for_read(const fs::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open file: " + path.string());
    }
    return in;
}

std::ofstream open_for_write(const fs::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw io_error("cannot write file: " + path.string());
    }
    return out;
}

double parse_cell(const std::string& cell, const fs::path& path, std::size_t row,
                  std::size_t col) {
    const std::string token = trim(cell);
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || token.empty()) {
        throw io_error(path.string() + ": unparsable value '" + token + "' at row " +
                       std::to_string(row) + ", column " + std::to_string(col));
    }
    if (!std::isfinite(value)) {
        throw io_error(path.string() + ": non-finite value at row " + std::to_string(row) +
                       ", column " + std::to_string(col));
    }
    return value;
}

}  // namespace

Trajectory load_trajectory(const fs::path& path) {
    std::ifstream in = open_for_read(path);
    std::vector<double> flat;
    std::size_t dim = 0;
    std::size_t data_row = 0;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        const std::string stripped = trim(line);
        if (stripped.empty()) {
            continue;
        }
        if (first && looks_like_header(stripped)) {
            first = false;
            continue;
        }
        first = false;
        ++data_row;
        const std::vector<std::string> cells = split(stripped, ',');
        if (dim == 0) {
            dim = cells.size();
        } else if (cells.size() != dim) {
            throw io_error(path.string() + ": inconsistent column count at row " +
                           std::to_string(data_row) + " (expected " + std::to_string(dim) +
                           ", got " + std::to_string(cells.size()) + ")");
        }
        for (std::size_t c = 0; c < cells.size(); ++c) {
            flat.push_back(parse_cell(cells[c], path, data_row, c + 1));
        }
    }
    if (data_row < 2) {
        throw io_error(path.string() + ": trajectory requires T >= 2 (got " +
                       std::to_string(data_row) + " rows)");
    }
    return Trajectory(data_row, dim, std::move(flat));
}

void save_trajectory(const fs::path& path, const Trajectory& traj) {
    std::ofstream out = open_for_write(path);
    for (std::size_t j = 0; j < traj.dim(); ++j) {
        out << (j == 0 ? "" : ",") << "x" << j;
    }
    out << '\n';
    for (std::size_t t = 0; t < traj.size(); ++t) {
        for (std::size_t j = 0; j < traj.dim(); ++j) {
            out << (j == 0 ? "" : ",") << format_value(traj(t, j));
        }
        out << '\n';
    }
    if (!out) {
        throw io_error("failed writing trajectory to " + path.string());
    }
}

Labeling load_labels(const fs::path& path) {
    std::ifstream in = open_for_read(path);
    std::vector<int> classes;
    std::string line;
    bool first = true;
    std::size_t data_row = 0;
    int max_class = -1;
    while (std::getline(in, line)) {
        const std::string stripped = trim(line);
        if (stripped.empty()) {
            continue;
        }
        if (first && looks_like_header(stripped)) {
            first = false;
            continue;
        }
        first = false;
        ++data_row;
        int value = 0;
        const auto [ptr, ec] =
            std::from_chars(stripped.data(), stripped.data() + stripped.size(), value);
        if (ec != std::errc{} || ptr != stripped.data() + stripped.size() || value < -1) {
            throw io_error(path.string() + ": invalid label '" + stripped + "' at row " +
                           std::to_string(data_row));
        }
        max_class = std::max(max_class, value);
        classes.push_back(value);
    }
    if (classes.empty()) {
        throw io_error(path.string() + ": label file is empty");
    }
    return Labeling(std::move(classes), static_cast<std::size_t>(max_class + 1));
}

void save_labels(const fs::path& path, const Labeling& labeling) {
    std::ofstream out = open_for_write(path);
    out << "label\n";
    for (int c : labeling.classes()) {
        out << c << '\n';
    }
    if (!out) {
        throw io_error("failed writing labels to " + path.string());
    }
}

fs::path Manifest::resolve(const std::string& relative) const {
    const fs::path p(relative);
    return p.is_absolute() ? p : base_dir / p;
}

Manifest load_manifest(const fs::path& path) {
    std::ifstream in = open_for_read(path);
    Manifest m;
    m.base_dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') {
            continue;
        }
        const std::size_t colon = stripped.find(':');
        if (colon == std::string::npos) {
            throw io_error(path.string() + ": expected 'key: value' at line " +
                           std::to_string(line_no));
        }
        const std::string key = trim(stripped.substr(0, colon));
        const std::string value = trim(stripped.substr(colon + 1));
        if (key == "full") {
            m.full = value;
        } else if (key == "subtask") {
            const std::size_t space = value.find_first_of(" \t");
            if (space == std::string::npos) {
                throw io_error(path.string() + ": subtask entries need '<name> <path>' at line " +
                               std::to_string(line_no));
            }
            m.subtasks.emplace_back(trim(value.substr(0, space)), trim(value.substr(space + 1)));
        } else if (key == "truth") {
            m.truth = value;
        } else if (key == "d") {
            std::size_t dim = 0;
            const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), dim);
            if (ec != std::errc{} || ptr != value.data() + value.size() || dim == 0) {
                throw io_error(path.string() + ": invalid dimension '" + value + "' at line " +
                               std::to_string(line_no));
            }
            m.dim_hint = dim;
        } else if (key == "notes") {
            m.notes = value;
        } else {
            throw io_error(path.string() + ": unknown manifest key '" + key + "' at line " +
                           std::to_string(line_no));
        }
    }
    if (m.full.empty()) {
        throw io_error(path.string() + ": manifest is missing the 'full' entry");
    }
    if (m.subtasks.empty()) {
        throw io_error(path.string() + ": manifest needs at least one 'subtask' entry");
    }
    return m;
}

void save_manifest(const fs::path& path, const Manifest& manifest) {
    std::ofstream out = open_for_write(path);
    out << "# corrseg dataset manifest\n";
    out << "full: " << manifest.full << '\n';
    for (const auto& [name, file] : manifest.subtasks) {
        out << "subtask: " << name << ' ' << file << '\n';
    }
    if (manifest.truth) {
        out << "truth: " << *manifest.truth << '\n';
    }
    if (manifest.dim_hint) {
        out << "d: " << *manifest.dim_hint << '\n';
    }
    if (!manifest.notes.empty()) {
        out << "notes: " << manifest.notes << '\n';
    }
    if (!out) {
        throw io_error("failed writing manifest to " + path.string());
    }
}

LoadedDataset load_dataset(const Manifest& manifest) {
    Trajectory full = load_trajectory(manifest.resolve(manifest.full));
    std::vector<SubTaskLibrary::Entry> entries;
    entries.reserve(manifest.subtasks.size());
    for (const auto& [name, file] : manifest.subtasks) {
        Trajectory demo = load_trajectory(manifest.resolve(file));
        if (demo.dim() != full.dim()) {
            throw io_error("sub-task '" + name + "' has dimension " +
                           std::to_string(demo.dim()) + " but the full task has " +
                           std::to_string(full.dim()));
        }
        entries.push_back({name, std::move(demo)});
    }
    if (manifest.dim_hint && *manifest.dim_hint != full.dim()) {
        throw io_error("manifest declares d=" + std::to_string(*manifest.dim_hint) +
                       " but the full task has d=" + std::to_string(full.dim()));
    }
    std::optional<Labeling> truth;
    if (manifest.truth) {
        Labeling loaded = load_labels(manifest.resolve(*manifest.truth));
        if (loaded.size() != full.size()) {
            throw io_error("truth labels have " + std::to_string(loaded.size()) +
                           " rows but the full task has " + std::to_string(full.size()));
        }
        truth = std::move(loaded);
    }
    return LoadedDataset{std::move(full), SubTaskLibrary(std::move(entries)), std::move(truth)};
}

namespace {

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void write_svg_plot(const fs::path& path, const Trajectory& traj, const Labeling& labeling,
                    const std::vector<std::string>& class_names) {
    if (labeling.size() != traj.size()) {
        throw std::invalid_argument("labeling length does not match the trajectory");
    }
    const bool time_plot = traj.dim() == 1;
    const auto px = [&](std::size_t t) {
        return time_plot ? static_cast<double>(t) : traj(t, 0);
    };
    const auto py = [&](std::size_t t) { return time_plot ? traj(t, 0) : traj(t, 1); };

    double min_x = px(0), max_x = px(0), min_y = py(0), max_y = py(0);
    for (std::size_t t = 1; t < traj.size(); ++t) {
        min_x = std::min(min_x, px(t));
        max_x = std::max(max_x, px(t));
        min_y = std::min(min_y, py(t));
        max_y = std::max(max_y, py(t));
    }
    const double span_x = std::max(max_x - min_x, 1e-12);
    const double span_y = std::max(max_y - min_y, 1e-12);

    constexpr double kWidth = 900.0, kHeight = 600.0, kMargin = 50.0;
    const auto sx = [&](double x) {
        return kMargin + (x - min_x) / span_x * (kWidth - 2.0 * kMargin);
    };
    const auto sy = [&](double y) {
        // SVG y grows downward.
        return kHeight - kMargin - (y - min_y) / span_y * (kHeight - 2.0 * kMargin);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const auto polyline = [&](std::size_t begin, std::size_t end, const std::string& color,
                              double width) {
        svg << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << width
            << "\" points=\"";
        for (std::size_t t = begin; t < end; ++t) {
            svg << sx(px(t)) << ',' << sy(py(t)) << ' ';
        }
        svg << "\"/>\n";
    };

    polyline(0, traj.size(), "#c8c8c8", 1.0);
    for (const Run& run : runs_from_labeling(labeling)) {
        const std::string color = kPalette[static_cast<std::size_t>(run.cls) % 10];
        // Extend one point past the run so consecutive segments connect.
        polyline(run.begin, std::min(run.end + 1, traj.size()), color, 2.5);
    }

    double legend_y = kMargin;
    for (std::size_t c = 0; c < class_names.size(); ++c) {
        svg << "  <rect x=\"" << kWidth - 180 << "\" y=\"" << legend_y
            << "\" width=\"12\" height=\"12\" fill=\"" << kPalette[c % 10] << "\"/>\n";
        svg << "  <text x=\"" << kWidth - 162 << "\" y=\"" << legend_y + 11
            << "\" font-size=\"13\" font-family=\"sans-serif\">" << xml_escape(class_names[c])
            << "</text>\n";
        legend_y += 18.0;
    }
    svg << "  <rect x=\"" << kWidth - 180 << "\" y=\"" << legend_y
        << "\" width=\"12\" height=\"12\" fill=\"#c8c8c8\"/>\n";
    svg << "  <text x=\"" << kWidth - 162 << "\" y=\"" << legend_y + 11
        << "\" font-size=\"13\" font-family=\"sans-serif\">unlabeled</text>\n";
    svg << "</svg>\n";

    std::ofstream out = open_for_write(path);
    out << svg.str();
    if (!out) {
        throw io_error("failed writing plot to " + path.string());
    }
}

}  // namespace corrseg

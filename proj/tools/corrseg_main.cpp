// corrseg command line: dataset generation, segmentation, evaluation,
// smoothing, and the scaling benchmark.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "corrseg/bench.hpp"
#include "corrseg/eval.hpp"
#include "corrseg/io.hpp"
#include "corrseg/kernels.hpp"
#include "corrseg/pipeline.hpp"
#include "corrseg/preprocess.hpp"
#include "corrseg/synth.hpp"

namespace fs = std::filesystem;
using namespace corrseg;

namespace {

// CORRSEG_THREADS caps the profile worker count; 0 or unset means auto.
std::size_t threads_from_env() {
    const char* env = std::getenv("CORRSEG_THREADS");
    if (env == nullptr || *env == '\0') {
        return 0;
    }
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end == nullptr || *end != '\0') {
        throw std::invalid_argument("CORRSEG_THREADS must be a non-negative integer");
    }
    return static_cast<std::size_t>(value);
}

struct SmoothFlags {
    std::size_t window = 0;
    std::size_t polyorder = 0;
    std::size_t resample_to = 0;

    bool smoothing() const { return window != 0; }
};

SubTaskSpec parse_subtask_spec(const std::string& text) {
    // kind:length[:amplitude]
    std::vector<std::string> parts;
    std::size_t begin = 0;
    for (;;) {
        const std::size_t pos = text.find(':', begin);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(begin));
            break;
        }
        parts.push_back(text.substr(begin, pos - begin));
        begin = pos + 1;
    }
    if (parts.size() < 2 || parts.size() > 3) {
        throw std::invalid_argument("sub-task spec '" + text +
                                    "' must look like kind:length[:amplitude]");
    }
    try {
        SubTaskSpec spec;
        spec.kind = shape_from_name(parts[0]);
        spec.length = static_cast<std::size_t>(std::stoull(parts[1]));
        if (parts.size() == 3) {
            spec.amplitude = std::stod(parts[2]);
        }
        return spec;
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("sub-task spec '" + text + "' has an out-of-range number");
    } catch (const std::invalid_argument& e) {
        if (std::string_view(e.what()).find("unknown shape") != std::string_view::npos) {
            throw;
        }
        throw std::invalid_argument("sub-task spec '" + text +
                                    "' must look like kind:length[:amplitude]");
    }
}

int run_segment(const std::string& manifest_path, const std::string& metric_name,
                const std::string& mode_name, const SmoothFlags& smooth,
                const std::string& out_dir) {
    const Manifest manifest = load_manifest(manifest_path);
    LoadedDataset data = load_dataset(manifest);

    // The same preprocessing is applied to the full task and to every demo.
    if (smooth.smoothing()) {
        const SavGolConfig cfg(smooth.window, smooth.polyorder);
        data.full = savgol_smooth(data.full, cfg);
        std::vector<SubTaskLibrary::Entry> entries;
        for (std::size_t i = 0; i < data.library.size(); ++i) {
            entries.push_back({data.library.name(i), savgol_smooth(data.library.demo(i), cfg)});
        }
        data.library = SubTaskLibrary(std::move(entries));
    }
    if (smooth.resample_to != 0) {
        // The full task goes to N samples; each demo keeps its relative
        // duration, landing at round(t_i * N / T).
        const double factor = static_cast<double>(smooth.resample_to) /
                              static_cast<double>(data.full.size());
        std::vector<SubTaskLibrary::Entry> entries;
        for (std::size_t i = 0; i < data.library.size(); ++i) {
            const auto n = static_cast<std::size_t>(std::llround(
                static_cast<double>(data.library.demo(i).size()) * factor));
            entries.push_back({data.library.name(i),
                               resample(data.library.demo(i), std::max<std::size_t>(2, n))});
        }
        data.full = resample(data.full, smooth.resample_to);
        data.library = SubTaskLibrary(std::move(entries));
        data.truth.reset();  // row correspondence is gone
    }

    SegmentationOptions opts;
    opts.metric = metric_from_name(metric_name);
    opts.mode = assign_mode_from_name(mode_name);
    opts.threads = threads_from_env();
    const SegmentationResult result = segment_demonstration(data.full, data.library, opts);

    fs::create_directories(out_dir);
    save_labels(fs::path(out_dir) / "labels.csv", result.labeling);
    write_svg_plot(fs::path(out_dir) / "plot.svg", data.full, result.labeling,
                   data.library.names());
    {
        std::FILE* f = std::fopen((fs::path(out_dir) / "segments.csv").c_str(), "w");
        if (f == nullptr) {
            throw io_error("cannot write segments.csv in " + out_dir);
        }
        std::fprintf(f, "class,name,start,end\n");
        for (const Run& run : result.runs) {
            std::fprintf(f, "%d,%s,%zu,%zu\n", run.cls,
                         data.library.name(static_cast<std::size_t>(run.cls)).c_str(), run.begin,
                         run.end);
        }
        std::fclose(f);
    }
    {
        std::FILE* f = std::fopen((fs::path(out_dir) / "starts.csv").c_str(), "w");
        if (f == nullptr) {
            throw io_error("cannot write starts.csv in " + out_dir);
        }
        std::fprintf(f, "class,name,predicted_start\n");
        for (std::size_t i = 0; i < result.starts.size(); ++i) {
            if (result.starts[i]) {
                std::fprintf(f, "%zu,%s,%zu\n", i, data.library.name(i).c_str(),
                             *result.starts[i]);
            }
        }
        std::fclose(f);
    }

    std::printf("segmented T=%zu points, d=%zu, M=%zu sub-tasks (metric=%s, mode=%s)\n",
                data.full.size(), data.full.dim(), data.library.size(), metric_name.c_str(),
                mode_name.c_str());
    for (const Run& run : result.runs) {
        std::printf("  [%zu, %zu)  class %d (%s)\n", run.begin, run.end, run.cls,
                    data.library.name(static_cast<std::size_t>(run.cls)).c_str());
    }
    if (data.truth) {
        const AccuracyReport report = accuracy(result.labeling, *data.truth);
        std::printf("overall accuracy vs truth: %.2f%%\n", 100.0 * report.overall);
    }
    std::printf("wrote labels.csv, segments.csv, starts.csv, plot.svg to %s\n", out_dir.c_str());
    return 0;
}

int run_eval(const std::string& truth_path, const std::vector<std::string>& pred_specs,
             const std::vector<std::string>& class_names) {
    const Labeling truth = load_labels(truth_path);

    struct Row {
        std::string name;
        AccuracyReport report;
    };
    std::vector<Row> rows;
    std::size_t num_classes = truth.num_classes();
    for (const std::string& spec : pred_specs) {
        const std::size_t eq = spec.find('=');
        const std::string name = eq == std::string::npos
                                     ? fs::path(spec).stem().string()
                                     : spec.substr(0, eq);
        const std::string path = eq == std::string::npos ? spec : spec.substr(eq + 1);
        const Labeling pred = load_labels(path);
        rows.push_back({name, accuracy(pred, truth)});
        num_classes = std::max(num_classes, rows.back().report.per_class.size());
    }

    std::printf("%-12s", "Prediction");
    for (std::size_t c = 0; c < num_classes; ++c) {
        std::string header = "Class " + std::to_string(c + 1);
        if (c < class_names.size()) {
            header += " (" + class_names[c] + ")";
        }
        std::printf("  %-16s", header.c_str());
    }
    std::printf("  %-10s\n", "Overall");
    for (const Row& row : rows) {
        std::printf("%-12s", row.name.c_str());
        for (std::size_t c = 0; c < num_classes; ++c) {
            const double v = c < row.report.per_class.size() ? row.report.per_class[c] : 0.0;
            std::printf("  %-16.2f", 100.0 * v);
        }
        std::printf("  %-10.2f\n", 100.0 * row.report.overall);
    }
    return 0;
}

int run_gen(const std::string& out_dir, std::uint64_t seed, std::size_t dim,
            const std::vector<std::string>& subtask_specs, const std::vector<std::size_t>& gaps,
            double noise, const std::vector<double>& translate, double scale, double tempo) {
    CorpusSpec spec;
    spec.seed = seed;
    spec.dim = dim;
    spec.gap_lengths = gaps;
    spec.noise_sigma = noise;
    std::vector<std::string> specs = subtask_specs;
    if (specs.empty()) {
        specs = {"loop:150:2", "arc:130:2", "zigzag:170:2"};
    }
    for (const std::string& s : specs) {
        SubTaskSpec st = parse_subtask_spec(s);
        st.perturb.translation = translate;
        st.perturb.scale = scale;
        st.perturb.tempo = tempo;
        spec.subtasks.push_back(std::move(st));
    }
    const Corpus corpus = generate(spec);

    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    save_trajectory(dir / "full.csv", corpus.full);
    save_labels(dir / "truth.csv", corpus.truth);
    Manifest manifest;
    manifest.base_dir = dir;
    manifest.full = "full.csv";
    manifest.truth = "truth.csv";
    manifest.dim_hint = dim;
    manifest.notes = "synthetic corpus, seed " + std::to_string(seed);
    for (std::size_t i = 0; i < corpus.library.size(); ++i) {
        const std::string file = corpus.library.name(i) + ".csv";
        save_trajectory(dir / file, corpus.library.demo(i));
        manifest.subtasks.emplace_back(corpus.library.name(i), file);
    }
    save_manifest(dir / "manifest.txt", manifest);
    std::printf("wrote corpus (T=%zu, M=%zu, d=%zu) to %s\n", corpus.full.size(),
                corpus.library.size(), dim, out_dir.c_str());
    return 0;
}

int run_smooth(const std::string& in_path, const std::string& out_path, const SmoothFlags& flags) {
    if (!flags.smoothing() && flags.resample_to == 0) {
        throw std::invalid_argument(
            "nothing to do: give --smooth-window/--smooth-polyorder and/or --resample");
    }
    Trajectory traj = load_trajectory(in_path);
    if (flags.smoothing()) {
        traj = savgol_smooth(traj, SavGolConfig(flags.window, flags.polyorder));
    }
    if (flags.resample_to != 0) {
        traj = resample(traj, flags.resample_to);
    }
    save_trajectory(out_path, traj);
    std::printf("wrote %s (T=%zu, d=%zu)\n", out_path.c_str(), traj.size(), traj.dim());
    return 0;
}

void print_bench_table(const char* varying, const std::vector<BenchPoint>& points,
                       bool vary_m) {
    std::printf("%8s  %12s  %8s\n", varying, "seconds", "ratio");
    std::vector<double> sizes;
    std::vector<double> seconds;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const std::size_t size = vary_m ? points[i].num_subtasks : points[i].full_length;
        sizes.push_back(static_cast<double>(size));
        seconds.push_back(points[i].seconds);
        if (i == 0) {
            std::printf("%8zu  %12.6f  %8s\n", size, points[i].seconds, "-");
        } else {
            std::printf("%8zu  %12.6f  %8.3f\n", size, points[i].seconds,
                        points[i].seconds / points[i - 1].seconds);
        }
    }
    std::printf("fitted growth exponent: %.3f, median doubling ratio: %.3f\n",
                fitted_exponent(sizes, seconds), median_doubling_ratio(seconds));
}

int run_bench(const std::vector<std::size_t>& t_grid, const std::vector<std::size_t>& m_grid,
              std::size_t t_fixed, BenchConfig cfg) {
    std::printf("kernel: %s\n", kernels::active().name);
    std::printf("scaling in T (M=%zu, t=%zu, d=%zu, metric=%s):\n", cfg.num_subtasks,
                cfg.subtask_length, cfg.dim, std::string(metric_name(cfg.metric)).c_str());
    print_bench_table("T", bench_t_scaling(t_grid, cfg), false);
    std::printf("\nscaling in M (T=%zu, t=%zu, d=%zu):\n", t_fixed, cfg.subtask_length, cfg.dim);
    print_bench_table("M", bench_m_scaling(t_fixed, m_grid, cfg), true);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"correlation-based segmentation of demonstration trajectories"};
    app.require_subcommand(1);

    // segment
    auto* segment_cmd = app.add_subcommand("segment", "segment a dataset described by a manifest");
    std::string manifest_path;
    std::string metric = "sse";
    std::string mode = "dense";
    std::string out_dir = ".";
    SmoothFlags seg_smooth;
    segment_cmd->add_option("--manifest", manifest_path, "dataset manifest file")->required();
    segment_cmd->add_option("--metric", metric, "similarity metric")
        ->check(CLI::IsMember({"ccs", "sse", "cos"}));
    segment_cmd->add_option("--mode", mode, "assignment mode")
        ->check(CLI::IsMember({"dense", "gaps"}));
    auto* sw = segment_cmd->add_option("--smooth-window", seg_smooth.window,
                                       "Savitzky-Golay window (odd, >= 3)");
    auto* sp = segment_cmd->add_option("--smooth-polyorder", seg_smooth.polyorder,
                                       "Savitzky-Golay polynomial order");
    sw->needs(sp);
    sp->needs(sw);
    segment_cmd->add_option("--resample", seg_smooth.resample_to,
                            "resample the full task to N samples (demos keep relative length)");
    segment_cmd->add_option("--out", out_dir, "output directory");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "compare predicted labels against ground truth");
    std::string truth_path;
    std::vector<std::string> pred_specs;
    std::vector<std::string> class_names;
    eval_cmd->add_option("--truth", truth_path, "ground-truth label file")->required();
    eval_cmd->add_option("--pred", pred_specs, "predicted label file, optionally name=path")
        ->required()
        ->take_all();
    eval_cmd->add_option("--names", class_names, "class names for the table header")
        ->delimiter(',');

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate a synthetic labeled corpus");
    std::string gen_out;
    std::uint64_t seed = 42;
    std::size_t gen_dim = 2;
    std::vector<std::string> gen_subtasks;
    std::vector<std::size_t> gen_gaps;
    double gen_noise = 0.0;
    std::vector<double> gen_translate;
    double gen_scale = 1.0;
    double gen_tempo = 1.0;
    gen_cmd->add_option("--out", gen_out, "output directory")->required();
    gen_cmd->add_option("--seed", seed, "corpus seed");
    gen_cmd->add_option("--d", gen_dim, "dimension (2 or 3)");
    gen_cmd->add_option("--subtask", gen_subtasks,
                        "sub-task spec kind:length[:amplitude]; repeatable");
    gen_cmd->add_option("--gaps", gen_gaps, "inter-sub-task gap lengths")->delimiter(',');
    gen_cmd->add_option("--noise", gen_noise, "additive Gaussian noise sigma");
    gen_cmd->add_option("--translate", gen_translate, "demo translation perturbation")
        ->delimiter(',');
    gen_cmd->add_option("--scale", gen_scale, "demo scale perturbation");
    gen_cmd->add_option("--tempo", gen_tempo, "demo tempo perturbation");

    // smooth
    auto* smooth_cmd = app.add_subcommand("smooth", "smooth and/or resample a trajectory file");
    std::string smooth_in;
    std::string smooth_out;
    SmoothFlags smooth_flags;
    smooth_cmd->add_option("--in", smooth_in, "input trajectory CSV")->required();
    smooth_cmd->add_option("--out", smooth_out, "output trajectory CSV")->required();
    auto* sw2 = smooth_cmd->add_option("--smooth-window", smooth_flags.window,
                                       "Savitzky-Golay window (odd, >= 3)");
    auto* sp2 = smooth_cmd->add_option("--smooth-polyorder", smooth_flags.polyorder,
                                       "Savitzky-Golay polynomial order");
    sw2->needs(sp2);
    sp2->needs(sw2);
    smooth_cmd->add_option("--resample", smooth_flags.resample_to, "resample to N samples");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "time the pipeline across a size grid");
    std::vector<std::size_t> t_grid = {2000, 4000, 8000, 16000};
    std::vector<std::size_t> m_grid = {5, 10, 20};
    std::size_t t_fixed = 8000;
    BenchConfig bench_cfg;
    std::string bench_metric = "sse";
    std::string bench_mode = "dense";
    bench_cmd->add_option("--t-grid", t_grid, "full-task lengths")->delimiter(',');
    bench_cmd->add_option("--m-grid", m_grid, "library sizes")->delimiter(',');
    bench_cmd->add_option("--t-fixed", t_fixed, "full-task length for the M grid");
    bench_cmd->add_option("--m", bench_cfg.num_subtasks, "library size for the T grid");
    bench_cmd->add_option("--tbar", bench_cfg.subtask_length, "sub-task length");
    bench_cmd->add_option("--d", bench_cfg.dim, "dimension");
    bench_cmd->add_option("--repeats", bench_cfg.repeats, "timed repetitions per grid point");
    bench_cmd->add_option("--metric", bench_metric, "similarity metric")
        ->check(CLI::IsMember({"ccs", "sse", "cos"}));
    bench_cmd->add_option("--mode", bench_mode, "assignment mode")
        ->check(CLI::IsMember({"dense", "gaps"}));
    bench_cmd->add_option("--seed", bench_cfg.seed, "data seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (segment_cmd->parsed()) {
            return run_segment(manifest_path, metric, mode, seg_smooth, out_dir);
        }
        if (eval_cmd->parsed()) {
            return run_eval(truth_path, pred_specs, class_names);
        }
        if (gen_cmd->parsed()) {
            return run_gen(gen_out, seed, gen_dim, gen_subtasks, gen_gaps, gen_noise,
                           gen_translate, gen_scale, gen_tempo);
        }
        if (smooth_cmd->parsed()) {
            return run_smooth(smooth_in, smooth_out, smooth_flags);
        }
        if (bench_cmd->parsed()) {
            bench_cfg.metric = metric_from_name(bench_metric);
            bench_cfg.mode = assign_mode_from_name(bench_mode);
            return run_bench(t_grid, m_grid, t_fixed, bench_cfg);
        }
    } catch (const io_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const internal_error& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 2;
    }
    return 0;
}

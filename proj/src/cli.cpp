#include "liftform/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>

#include "liftform/analysis.hpp"
#include "liftform/csv.hpp"
#include "liftform/kernels.hpp"
#include "liftform/report.hpp"
#include "liftform/stream_io.hpp"
#include "liftform/svg_plot.hpp"
#include "liftform/synthgen.hpp"

namespace liftform::cli {

namespace {

std::vector<std::string> joint_name_choices() {
    std::vector<std::string> names;
    names.reserve(kJointCount);
    for (JointId j : all_joints()) names.emplace_back(joint_name(j));
    return names;
}

JointId parse_joint(const std::string& name) {
    auto id = joint_from_name(name);
    if (!id) throw CLI::ValidationError("--joint", "unknown joint name: " + name);
    return *id;
}

std::vector<JointId> parse_joints(const std::vector<std::string>& names) {
    std::vector<JointId> out;
    out.reserve(names.size());
    for (const auto& n : names) out.push_back(parse_joint(n));
    return out;
}

MotionStream read_checked(const std::string& path, bool lenient) {
    LoadedStream loaded = load_stream(path);
    for (const auto& w : loaded.warnings) std::fprintf(stderr, "warning: %s: %s\n",
                                                       path.c_str(), w.c_str());
    if (!loaded.report.ok() && !lenient) {
        for (const auto& issue : loaded.report.issues)
            std::fprintf(stderr, "%s: %s\n", path.c_str(), format_issue(issue).c_str());
        throw ValidationFailedError(std::move(loaded.report));
    }
    return std::move(loaded.stream);
}

ScoreWeights parse_weights(const std::vector<double>& w) {
    if (w.size() != 3) throw CLI::ValidationError("--weights", "expected wp,ws,wb");
    return {w[0], w[1], w[2]};
}

// Shared flags several subcommands take.
struct CommonOptions {
    bool lenient = false;
    std::size_t filter_half_width = 2;
    int filter_passes = 2;
    std::string origin_joint = "SpineBase";

    FilterConfig filter() const { return {filter_half_width, filter_passes}; }

    void add_filter_flags(CLI::App* cmd) {
        cmd->add_option("--filter-halfwidth", filter_half_width,
                        "Smoothing half-width n (window 2n+1)")
            ->capture_default_str();
        cmd->add_option("--filter-passes", filter_passes, "Smoothing passes")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    }
    void add_lenient_flag(CLI::App* cmd) {
        cmd->add_flag("--lenient", lenient, "Accept streams that fail validation");
    }
    void add_origin_flag(CLI::App* cmd) {
        cmd->add_option("--origin-joint", origin_joint, "Recentering origin joint")
            ->check(CLI::IsMember(joint_name_choices()))
            ->capture_default_str();
    }
};

void print_score(const PerformanceScore& s) {
    std::printf("e_p_m      %.9g\n", s.e_p_m);
    std::printf("e_s_mps    %.9g\n", s.e_s_mps);
    std::printf("e_b        %.9g\n", s.e_b);
    std::printf("ps         %.9g\n", s.ps);
}

int run_impl(int argc, const char* const* argv) {
    CLI::App app{"liftform - weight-training motion analysis for recorded skeleton streams"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Config file with default flag values")
        ->envname("LIFTFORM_CONFIG");
    app.set_version_flag("--version", "liftform 0.1.0");

    // ------------------------------------------------------------------ gen
    auto* gen = app.add_subcommand("gen", "Generate a synthetic exercise stream");
    struct {
        std::string kind = "bicep_curl";
        ExerciseTemplate tmpl;
        DefectSpec defects;
        std::string arm = "left";
        std::uint64_t seed = 42;
        std::string out;
    } g;
    gen->add_option("--kind", g.kind, "Exercise template")
        ->check(CLI::IsMember({"bicep_curl", "push_press", "bench_press"}))
        ->capture_default_str();
    gen->add_option("--duration", g.tmpl.duration_s, "Duration in seconds")->capture_default_str();
    gen->add_option("--rate", g.tmpl.frame_rate_hz, "Frame rate in Hz")->capture_default_str();
    gen->add_option("--height", g.tmpl.subject_height_m, "Subject height in meters")
        ->capture_default_str();
    gen->add_option("--reps", g.tmpl.reps, "Repetitions")->capture_default_str();
    gen->add_option("--up-fraction", g.tmpl.up_fraction, "Fraction of each rep spent lifting")
        ->capture_default_str();
    gen->add_option("--arm", g.arm, "Working arm for the curl")
        ->check(CLI::IsMember({"left", "right"}))
        ->capture_default_str();
    gen->add_option("--min-angle", g.tmpl.min_angle_deg, "Curl minimum elbow angle, degrees")
        ->capture_default_str();
    gen->add_option("--max-angle", g.tmpl.max_angle_deg, "Curl maximum elbow angle, degrees")
        ->capture_default_str();
    gen->add_option("--drive", g.tmpl.drive_m, "Press hand travel, meters")->capture_default_str();
    gen->add_option("--subject", g.tmpl.subject_id, "Subject id")->capture_default_str();
    gen->add_option("--amplitude-error", g.defects.amplitude_error,
                    "Fractional over-reach of the motion extreme");
    gen->add_option("--lateral-drift", g.defects.lateral_drift_m, "Hand drift in meters");
    gen->add_option("--tempo-error", g.defects.tempo_error, "Asymmetric phase-speed fraction");
    gen->add_option("--asymmetry", g.defects.asymmetry_m, "Left/right offset in meters");
    gen->add_option("--noise-sigma", g.defects.noise_sigma_m, "Position jitter sigma in meters");
    gen->add_option("--seed", g.seed, "Random seed")->capture_default_str();
    gen->add_option("--out", g.out, "Output stream file")->required();
    gen->callback([&] {
        if (g.kind == "push_press") g.tmpl.kind = ExerciseKind::PushPress;
        else if (g.kind == "bench_press") g.tmpl.kind = ExerciseKind::BenchPress;
        else g.tmpl.kind = ExerciseKind::BicepCurl;
        g.tmpl.working_arm = g.arm == "right" ? Arm::Right : Arm::Left;
        MotionStream stream = generate(g.tmpl, g.defects, g.seed);
        write_stream(stream, g.out);
        std::printf("wrote %zu frames to %s\n", stream.size(), g.out.c_str());
    });

    // -------------------------------------------------------------- validate
    auto* validate = app.add_subcommand("validate", "Validate a stream file");
    struct {
        std::string file;
        std::string out;
    } v;
    validate->add_option("file", v.file, "Stream file")->required();
    validate->add_option("--out", v.out, "Write a JSON report");
    validate->callback([&] {
        LoadedStream loaded = load_stream(v.file);
        for (const auto& w : loaded.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
        if (!v.out.empty()) {
            Report inputs;
            inputs["file"] = v.file;
            write_report(make_report("validate", std::move(inputs),
                                     validation_results(loaded.report)),
                         v.out);
        }
        if (loaded.report.ok()) {
            std::printf("ok: %zu frames\n", loaded.stream.size());
        } else {
            for (const auto& issue : loaded.report.issues)
                std::printf("%s\n", format_issue(issue).c_str());
            throw ValidationFailedError(std::move(loaded.report));
        }
    });

    // ------------------------------------------------------------ pose-match
    auto* pose = app.add_subcommand("pose-match", "Compare one pose against a reference frame");
    struct {
        CommonOptions common;
        std::string ref, test;
        std::size_t ref_frame = 0, test_frame = 0;
        double tolerance = 10.0;
        std::vector<std::string> joints;
        std::string out;
    } pm;
    pose->add_option("--ref", pm.ref, "Reference stream file")->required();
    pose->add_option("--test", pm.test, "Test stream file")->required();
    pose->add_option("--ref-frame", pm.ref_frame, "Reference frame index")->capture_default_str();
    pose->add_option("--test-frame", pm.test_frame, "Test frame index")->capture_default_str();
    pose->add_option("--tolerance", pm.tolerance, "Per-joint tolerance in degrees")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    pose->add_option("--joints", pm.joints, "Joints to compare (default: all angle-bearing)")
        ->delimiter(',')
        ->check(CLI::IsMember(joint_name_choices()));
    pose->add_option("--out", pm.out, "Write a JSON report");
    pm.common.add_lenient_flag(pose);
    pose->callback([&] {
        MotionStream ref = read_checked(pm.ref, pm.common.lenient);
        MotionStream test = read_checked(pm.test, pm.common.lenient);
        if (pm.ref_frame >= ref.size())
            throw AnalysisError("ref frame index " + std::to_string(pm.ref_frame) +
                                " out of range (stream has " + std::to_string(ref.size()) +
                                " frames)");
        if (pm.test_frame >= test.size())
            throw AnalysisError("test frame index " + std::to_string(pm.test_frame) +
                                " out of range (stream has " + std::to_string(test.size()) +
                                " frames)");

        PoseMatchConfig config;
        config.tolerance_deg = pm.tolerance;
        config.joints = pm.joints.empty() ? AdjacencyMap::defaults().targets()
                                          : parse_joints(pm.joints);

        PoseMatchResult result = match_pose(test.frames[pm.test_frame], ref.frames[pm.ref_frame],
                                            AdjacencyMap::defaults(), config);
        for (const auto& [joint, err] : result.per_joint_error_deg)
            std::printf("%-14s %8.3f deg\n", std::string(joint_name(joint)).c_str(), err);
        std::printf("matched: %s (tolerance %.3g deg)\n", result.matched ? "yes" : "no",
                    result.tolerance_deg);

        if (!pm.out.empty()) {
            Report inputs;
            inputs["ref"] = pm.ref;
            inputs["test"] = pm.test;
            inputs["ref_frame"] = pm.ref_frame;
            inputs["test_frame"] = pm.test_frame;
            write_report(make_report("pose-match", std::move(inputs), pose_match_results(result)),
                         pm.out);
        }
    });

    // ------------------------------------------------------------------- rom
    auto* rom = app.add_subcommand("rom", "Range-of-motion analysis against the standards table");
    struct {
        CommonOptions common;
        std::string file;
        std::string joint;
        std::string motion;
        std::string out;
    } r;
    rom->add_option("file", r.file, "Stream file")->required();
    rom->add_option("--joint", r.joint, "Target joint")
        ->required()
        ->check(CLI::IsMember(joint_name_choices()));
    rom->add_option("--motion", r.motion, "Motion type from the standards table")->required();
    rom->add_option("--out", r.out, "Write a JSON report");
    r.common.add_filter_flags(rom);
    r.common.add_lenient_flag(rom);
    rom->callback([&] {
        JointId joint = parse_joint(r.joint);
        auto region = region_for_joint(joint);
        if (!region)
            throw CLI::ValidationError(
                "--joint", r.joint + " has no range-of-motion standard (use an elbow, shoulder, "
                                     "ankle, or SpineMid)");
        auto motion = motion_from_name(r.motion);
        if (!motion) throw CLI::ValidationError("--motion", "unknown motion type: " + r.motion);
        auto standard = find_rom_standard(*region, *motion);
        if (!standard)
            throw CLI::ValidationError("--motion",
                                       "no standard for " + std::string(region_name(*region)) +
                                           " " + r.motion);

        MotionStream stream = read_checked(r.file, r.common.lenient);
        RomReport report = rom_analyze(stream, joint, *standard, AdjacencyMap::defaults(),
                                       r.common.filter());
        std::printf("standard   %s %s: %.1f deg\n",
                    std::string(region_name(standard->region)).c_str(),
                    std::string(motion_name(standard->motion)).c_str(), standard->standard_deg);
        std::printf("observed   %.3f deg\n", report.observed_range_deg);
        std::printf("deviation  %.3f deg\n", report.deviation_deg);

        if (!r.out.empty()) {
            Report inputs;
            inputs["file"] = r.file;
            inputs["joint"] = r.joint;
            inputs["filter_halfwidth"] = r.common.filter_half_width;
            inputs["filter_passes"] = r.common.filter_passes;
            write_report(make_report("rom", std::move(inputs), rom_results(report)), r.out);
        }
    });

    // --------------------------------------------------------------- balance
    auto* balance = app.add_subcommand("balance", "Paired-joint balance analysis");
    struct {
        CommonOptions common;
        std::string file;
        std::string out;
    } b;
    balance->add_option("file", b.file, "Stream file")->required();
    balance->add_option("--out", b.out, "Write a JSON report");
    b.common.add_lenient_flag(balance);
    balance->callback([&] {
        MotionStream stream = read_checked(b.file, b.common.lenient);
        BalanceReport report = balance_analyze(stream, resolve_height(stream));
        for (std::size_t p = 0; p < kJointPairCount; ++p)
            std::printf("%-10s vertical %.6f m  depth %.6f m\n",
                        std::string(pair_name(static_cast<JointPair>(p))).c_str(),
                        report.pairs[p].vertical_m, report.pairs[p].depth_m);
        std::printf("e_b        %.9g\n", report.aggregate);

        if (!b.out.empty()) {
            Report inputs;
            inputs["file"] = b.file;
            write_report(make_report("balance", std::move(inputs), balance_results(report)),
                         b.out);
        }
    });

    // --------------------------------------------------------------- compare
    auto* compare = app.add_subcommand("compare", "Compare a test stream against a reference");
    struct {
        CommonOptions common;
        std::string ref, test;
        std::vector<std::string> joints;
        bool no_scale = false, no_recenter = false, no_resample = false;
        std::vector<double> weights = {1.0, 1.0, 1.0};
        std::string out, out_csv, out_svg;
        std::string svg_field = "pos";
    } c;
    compare->add_option("--ref", c.ref, "Reference stream file")->required();
    compare->add_option("--test", c.test, "Test stream file")->required();
    compare->add_option("--joints", c.joints, "Relevant joints (default from exercise tag)")
        ->delimiter(',')
        ->check(CLI::IsMember(joint_name_choices()));
    compare->add_flag("--no-scale", c.no_scale, "Skip height scaling");
    compare->add_flag("--no-recenter", c.no_recenter, "Skip body-centered recoordinatization");
    compare->add_flag("--no-resample", c.no_resample, "Skip frame-count equalization");
    compare->add_option("--weights", c.weights, "Score weights wp,ws,wb")
        ->delimiter(',')
        ->expected(3);
    compare->add_option("--out", c.out, "Write a JSON report");
    compare->add_option("--out-csv", c.out_csv, "Write per-frame error series as CSV");
    compare->add_option("--out-svg", c.out_svg, "Write an error chart as SVG");
    compare->add_option("--svg-field", c.svg_field, "Chart content")
        ->check(CLI::IsMember({"pos", "speed", "axes"}))
        ->capture_default_str();
    c.common.add_filter_flags(compare);
    c.common.add_lenient_flag(compare);
    c.common.add_origin_flag(compare);
    compare->callback([&] {
        MotionStream ref = read_checked(c.ref, c.common.lenient);
        MotionStream test = read_checked(c.test, c.common.lenient);

        NormalizationConfig norm;
        norm.origin_joint = parse_joint(c.common.origin_joint);
        norm.scale_enabled = !c.no_scale;
        norm.recenter_enabled = !c.no_recenter;
        norm.resample_enabled = !c.no_resample;

        const std::string tag = !test.meta.exercise_tag.empty() ? test.meta.exercise_tag
                                                                : ref.meta.exercise_tag;
        std::vector<JointId> joints =
            c.joints.empty() ? default_relevant_joints(tag) : parse_joints(c.joints);

        CompareOutcome outcome = compare_and_score(ref, test, joints, norm, c.common.filter(),
                                                   parse_weights(c.weights));
        std::printf("frames     %zu\n", outcome.errors.t_s.size());
        print_score(outcome.score);

        if (!c.out_csv.empty()) export_errors_csv(outcome.errors, c.out_csv);
        if (!c.out_svg.empty()) {
            PlotSpec plot;
            plot.x_label = "time (s)";
            if (c.svg_field == "speed") {
                plot.title = "Speed error vs reference";
                plot.y_label = "speed error (m/s)";
                for (const auto& [joint, trace] : outcome.errors.joints)
                    plot.traces.push_back(
                        {std::string(joint_name(joint)), outcome.errors.t_s, trace.err_speed_mps});
            } else if (c.svg_field == "axes") {
                plot.title = "Per-axis position error vs reference";
                plot.y_label = "position error (m)";
                for (const auto& [joint, trace] : outcome.errors.joints) {
                    const std::string base(joint_name(joint));
                    plot.traces.push_back({base + " x", outcome.errors.t_s, trace.err_x_m});
                    plot.traces.push_back({base + " y", outcome.errors.t_s, trace.err_y_m});
                    plot.traces.push_back({base + " z", outcome.errors.t_s, trace.err_z_m});
                }
            } else {
                plot.title = "Position error vs reference";
                plot.y_label = "position error (m)";
                for (const auto& [joint, trace] : outcome.errors.joints)
                    plot.traces.push_back(
                        {std::string(joint_name(joint)), outcome.errors.t_s, trace.err_pos_m});
            }
            render_line_chart(plot, c.out_svg);
        }
        if (!c.out.empty()) {
            Report inputs;
            inputs["ref"] = c.ref;
            inputs["test"] = c.test;
            Report jlist = Report::array();
            for (JointId j : joints) jlist.push_back(std::string(joint_name(j)));
            inputs["joints"] = std::move(jlist);
            inputs["scale"] = norm.scale_enabled;
            inputs["recenter"] = norm.recenter_enabled;
            inputs["resample"] = norm.resample_enabled;
            inputs["origin_joint"] = c.common.origin_joint;
            inputs["filter_halfwidth"] = c.common.filter_half_width;
            inputs["filter_passes"] = c.common.filter_passes;
            write_report(make_report("compare", std::move(inputs), compare_results(outcome)),
                         c.out);
        }
    });

    // ----------------------------------------------------------------- score
    auto* score = app.add_subcommand("score", "Performance score from streams or a saved report");
    struct {
        CommonOptions common;
        std::string ref, test, from_report;
        std::vector<double> weights = {1.0, 1.0, 1.0};
        std::string out;
    } s;
    score->add_option("--ref", s.ref, "Reference stream file");
    score->add_option("--test", s.test, "Test stream file");
    score->add_option("--from-report", s.from_report, "Re-weight a saved compare/score report");
    score->add_option("--weights", s.weights, "Score weights wp,ws,wb")
        ->delimiter(',')
        ->expected(3);
    score->add_option("--out", s.out, "Write a JSON report");
    s.common.add_filter_flags(score);
    s.common.add_lenient_flag(score);
    s.common.add_origin_flag(score);
    score->callback([&] {
        const ScoreWeights weights = parse_weights(s.weights);
        PerformanceScore result;
        Report inputs;

        if (!s.from_report.empty()) {
            std::ifstream in(s.from_report);
            if (!in) throw IoError("cannot open " + s.from_report + " for reading");
            Report saved;
            try {
                saved = Report::parse(in);
            } catch (const nlohmann::json::parse_error& e) {
                throw ParseError(1, e.what());
            }
            const Report* fields = nullptr;
            if (saved.contains("results")) {
                const auto& res = saved["results"];
                if (res.contains("score")) fields = &res["score"];
                else if (res.contains("e_p_m")) fields = &res;
            }
            if (!fields)
                throw AnalysisError(s.from_report + " does not contain score fields");
            result.e_p_m = (*fields)["e_p_m"].get<double>();
            result.e_s_mps = (*fields)["e_s_mps"].get<double>();
            result.e_b = (*fields)["e_b"].get<double>();
            result.weights = weights;
            result.ps = (weights.w_p * result.e_p_m + weights.w_s * result.e_s_mps +
                         weights.w_b * result.e_b) /
                        3.0;
            inputs["from_report"] = s.from_report;
        } else {
            if (s.ref.empty() || s.test.empty())
                throw CLI::ValidationError("score",
                                           "either --from-report or both --ref and --test");
            MotionStream ref = read_checked(s.ref, s.common.lenient);
            MotionStream test = read_checked(s.test, s.common.lenient);
            NormalizationConfig norm;
            norm.origin_joint = parse_joint(s.common.origin_joint);
            const std::string tag = !test.meta.exercise_tag.empty() ? test.meta.exercise_tag
                                                                    : ref.meta.exercise_tag;
            CompareOutcome outcome =
                compare_and_score(ref, test, default_relevant_joints(tag), norm,
                                  s.common.filter(), weights);
            result = outcome.score;
            inputs["ref"] = s.ref;
            inputs["test"] = s.test;
        }

        print_score(result);
        if (!s.out.empty())
            write_report(make_report("score", std::move(inputs), score_results(result)), s.out);
    });

    // --------------------------------------------------------------- kernels
    auto* kernels_cmd = app.add_subcommand("kernels", "Show which math kernels are in use");
    kernels_cmd->callback([&] {
        std::printf("active: %s\n", std::string(kernels::active().name).c_str());
        std::printf("avx2:   %s\n", kernels::avx2() ? "available" : "unavailable");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    try {
        return run_impl(argc, argv);
    } catch (const AnalysisError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("liftform");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace liftform::cli

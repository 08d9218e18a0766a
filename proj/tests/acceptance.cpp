// Acceptance suite: one test case per criterion, each prints its verdict.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "liftform/analysis.hpp"
#include "liftform/cli.hpp"
#include "liftform/stream_io.hpp"
#include "liftform/synthgen.hpp"

using namespace liftform;
namespace fs = std::filesystem;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Brute-force direct-summation oracle, independent of the library path.
std::vector<double> smooth_oracle(const std::vector<double>& in, std::size_t half_width,
                                  int passes) {
    std::vector<double> cur = in;
    for (int p = 0; p < passes; ++p) {
        std::vector<double> next(cur.size());
        for (std::size_t i = 0; i < cur.size(); ++i) {
            const std::size_t lo = i >= half_width ? i - half_width : 0;
            const std::size_t hi = std::min(cur.size() - 1, i + half_width);
            double sum = 0.0;
            for (std::size_t k = lo; k <= hi; ++k) sum += cur[k];
            next[i] = sum / static_cast<double>(hi - lo + 1);
        }
        cur = std::move(next);
    }
    return cur;
}

Position3 rotate(const Position3& p, const Position3& axis, double angle_rad) {
    const double c = std::cos(angle_rad);
    const double s = std::sin(angle_rad);
    const Position3 cross{axis.y * p.z - axis.z * p.y, axis.z * p.x - axis.x * p.z,
                          axis.x * p.y - axis.y * p.x};
    const double dot = axis.dot(p);
    return {p.x * c + cross.x * s + axis.x * dot * (1.0 - c),
            p.y * c + cross.y * s + axis.y * dot * (1.0 - c),
            p.z * c + cross.z * s + axis.z * dot * (1.0 - c)};
}

Frame elbow_frame(Position3 shoulder, Position3 elbow, Position3 wrist) {
    Frame f(0.0);
    f.set(JointId::ShoulderLeft, shoulder);
    f.set(JointId::ElbowLeft, elbow);
    f.set(JointId::WristLeft, wrist);
    return f;
}

bool streams_equal(const MotionStream& a, const MotionStream& b) {
    if (!(a.meta == b.meta) || a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.frames[i].t != b.frames[i].t) return false;
        if (a.frames[i].present != b.frames[i].present) return false;
        for (JointId j : all_joints())
            if (a.frames[i].has(j) && !(a.frames[i].at(j) == b.frames[i].at(j))) return false;
    }
    return true;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path accept_dir() {
    static const fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / "liftform_acceptance";
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::vector<MotionStream> varied_streams(std::size_t count, double duration_s) {
    const ExerciseKind kinds[] = {ExerciseKind::BicepCurl, ExerciseKind::PushPress,
                                  ExerciseKind::BenchPress};
    std::vector<DefectSpec> defects(6);
    defects[1].amplitude_error = 0.1;
    defects[2].lateral_drift_m = 0.05;
    defects[3].tempo_error = 0.1;
    defects[4].asymmetry_m = 0.05;
    defects[5].noise_sigma_m = 0.003;

    std::vector<MotionStream> streams;
    for (std::size_t i = 0; i < count; ++i) {
        ExerciseTemplate tmpl;
        tmpl.kind = kinds[i % 3];
        tmpl.duration_s = duration_s;
        tmpl.subject_height_m = 1.60 + 0.02 * static_cast<double>(i % 10);
        tmpl.reps = 1 + static_cast<int>(i % 3);
        streams.push_back(generate(tmpl, defects[i % defects.size()], 1000 + i));
    }
    return streams;
}

}  // namespace

TEST_CASE("criterion 1: self-comparison scores zero") {
    const auto start = std::chrono::steady_clock::now();
    const auto streams = varied_streams(20, 5.0);
    for (const auto& s : streams) {
        const auto outcome = compare_and_score(s, s, default_relevant_joints(s.meta.exercise_tag),
                                               {}, {}, {});
        CHECK(outcome.score.ps <= 1e-9);
    }
    const double elapsed = seconds_since(start);
    CHECK(elapsed < 5.0);
    std::printf("[PASS] criterion 1: self-comparison ps <= 1e-9 on 20 streams (%.2f s)\n",
                elapsed);
}

TEST_CASE("criterion 2: height scaling and recentering cancel subject differences") {
    ExerciseTemplate tmpl;
    tmpl.subject_height_m = 1.8;
    const MotionStream ref = generate(tmpl, {}, 42);

    MotionStream test = ref;
    test.meta.height_m = 1.5;
    for (Frame& f : test.frames)
        for (JointId j : all_joints()) {
            Position3 p = f.at(j);
            f.set(j, {p.x / 1.2 + 0.5, p.y / 1.2, p.z / 1.2 + 0.3});
        }

    const auto outcome =
        compare_and_score(ref, test, default_relevant_joints("bicep_curl"), {}, {}, {});
    CHECK(outcome.score.ps <= 1e-6);
    std::printf("[PASS] criterion 2: scaled+translated test scores ps = %.3g (<= 1e-6)\n",
                outcome.score.ps);
}

TEST_CASE("criterion 3: interpolation-doubled streams resample back exactly") {
    ExerciseTemplate tmpl;
    const MotionStream ref = generate(tmpl, {}, 43);

    MotionStream test;
    test.meta = ref.meta;
    for (std::size_t i = 0; i + 1 < ref.size(); ++i) {
        const Frame& a = ref.frames[i];
        const Frame& b = ref.frames[i + 1];
        test.frames.push_back(a);
        Frame mid(0.5 * (a.t + b.t));
        for (JointId j : all_joints()) {
            const Position3 pa = a.at(j);
            const Position3 pb = b.at(j);
            mid.set(j, {0.5 * (pa.x + pb.x), 0.5 * (pa.y + pb.y), 0.5 * (pa.z + pb.z)});
        }
        test.frames.push_back(mid);
    }
    test.frames.push_back(ref.frames.back());

    std::vector<JointId> all(all_joints().begin(), all_joints().end());
    const auto errors = compare_motion(ref, test, all, {}, {});
    double worst_mean = 0.0;
    for (const auto& [joint, trace] : errors.joints) {
        double sum = 0.0;
        for (double e : trace.err_pos_m) sum += e;
        worst_mean = std::max(worst_mean, sum / static_cast<double>(trace.err_pos_m.size()));
    }
    CHECK(worst_mean <= 1e-9);
    std::printf("[PASS] criterion 3: worst per-joint mean position error %.3g m (<= 1e-9)\n",
                worst_mean);
}

TEST_CASE("criterion 4: smoothing matches the direct-summation oracle") {
    std::mt19937 rng(20260810);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    std::uniform_int_distribution<std::size_t> len_dist(1, 200);
    std::uniform_int_distribution<std::size_t> hw_dist(0, 5);
    std::uniform_int_distribution<int> pass_dist(1, 3);

    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<double> v(len_dist(rng));
        for (double& x : v) x = dist(rng);
        const std::size_t hw = hw_dist(rng);
        const int passes = pass_dist(rng);

        const auto got = smooth_series(v, {hw, passes});
        const auto want = smooth_oracle(v, hw, passes);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i)
            worst = std::max(worst, std::fabs(got[i] - want[i]));
    }
    CHECK(worst <= 1e-12);
    std::printf("[PASS] criterion 4: filter oracle max deviation %.3g over 1000 series\n", worst);
}

TEST_CASE("criterion 5: joint angles hit the geometric cases and their invariances") {
    const auto& adj = AdjacencyMap::defaults();
    CHECK(std::fabs(joint_angle(elbow_frame({0, 1, 0}, {0, 0, 0}, {1, 0, 0}), JointId::ElbowLeft,
                                adj) -
                    90.0) < 1e-6);
    CHECK(std::fabs(joint_angle(elbow_frame({0, 1, 0}, {0, 0, 0}, {0, -1, 0}), JointId::ElbowLeft,
                                adj) -
                    180.0) < 1e-6);
    CHECK(std::fabs(joint_angle(elbow_frame({0, 1, 0}, {0, 0, 0}, {std::sqrt(3.0) / 2.0, -0.5, 0}),
                                JointId::ElbowLeft, adj) -
                    120.0) < 1e-6);

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    std::uniform_real_distribution<double> scale_dist(0.1, 5.0);
    std::uniform_real_distribution<double> angle_dist(0.0, 2.0 * 3.14159265358979323846);

    int done = 0;
    double worst = 0.0;
    while (done < 1000) {
        const Position3 shoulder{coord(rng), coord(rng), coord(rng)};
        const Position3 elbow{coord(rng), coord(rng), coord(rng)};
        const Position3 wrist{coord(rng), coord(rng), coord(rng)};
        if ((shoulder - elbow).norm() < 1e-3 || (wrist - elbow).norm() < 1e-3) continue;

        const double base =
            joint_angle(elbow_frame(shoulder, elbow, wrist), JointId::ElbowLeft, adj);

        Position3 axis{coord(rng), coord(rng), coord(rng)};
        if (axis.norm() < 1e-3) axis = {0.0, 1.0, 0.0};
        axis = (1.0 / axis.norm()) * axis;
        const double rot = angle_dist(rng);
        const Position3 shift{coord(rng), coord(rng), coord(rng)};
        const double s = scale_dist(rng);
        auto transform = [&](const Position3& p) {
            return rotate(elbow + s * (p - elbow), axis, rot) + shift;
        };
        const double moved =
            joint_angle(elbow_frame(transform(shoulder), transform(elbow), transform(wrist)),
                        JointId::ElbowLeft, adj);
        worst = std::max(worst, std::fabs(moved - base));
        ++done;
    }
    CHECK(worst < 1e-6);
    std::printf("[PASS] criterion 5: angle oracle, worst invariance deviation %.3g deg\n", worst);
}

TEST_CASE("criterion 6: range of motion against the elbow flexion standard") {
    const auto standard = *find_rom_standard(JointRegion::Elbow, MotionType::Flexion);

    ExerciseTemplate full;  // 10 -> 150 degrees
    auto report = rom_analyze(generate(full, {}, 50), JointId::ElbowLeft, standard,
                              AdjacencyMap::defaults(), {});
    CHECK(report.deviation_deg < 1.0);
    const double full_dev = report.deviation_deg;

    ExerciseTemplate truncated;
    truncated.max_angle_deg = 100.0;  // sweep 10 -> 100
    report = rom_analyze(generate(truncated, {}, 50), JointId::ElbowLeft, standard,
                         AdjacencyMap::defaults(), {});
    CHECK(report.deviation_deg == doctest::Approx(50.0).epsilon(0.02));
    CHECK(std::fabs(report.deviation_deg - 50.0) <= 1.0);
    std::printf(
        "[PASS] criterion 6: ROM deviations %.3f deg (full sweep) and %.3f deg (truncated)\n",
        full_dev, report.deviation_deg);
}

TEST_CASE("criterion 7: score increases strictly with defect magnitude") {
    const std::vector<double> magnitudes = {0.0, 0.05, 0.1, 0.2};
    for (DefectKind kind : {DefectKind::Amplitude, DefectKind::LateralDrift, DefectKind::Tempo,
                            DefectKind::Asymmetry}) {
        ExerciseTemplate tmpl;
        const auto ladder = defect_ladder(tmpl, kind, magnitudes, 7);
        const auto& reference = ladder.front();

        double prev = -1.0;
        for (const auto& rung : ladder) {
            const auto outcome = compare_and_score(
                reference, rung, default_relevant_joints("bicep_curl"), {}, {}, {});
            CAPTURE(defect_kind_name(kind));
            CHECK(outcome.score.ps > prev);
            prev = outcome.score.ps;
        }
        std::printf("[PASS] criterion 7: %s ladder ps strictly increasing (top %.4g)\n",
                    std::string(defect_kind_name(kind)).c_str(), prev);
    }
}

TEST_CASE("criterion 8: injected shoulder asymmetry is measured exactly") {
    ExerciseTemplate tmpl;
    DefectSpec defects;
    defects.asymmetry_m = 0.05;
    const auto asymmetric = generate(tmpl, defects, 21);
    const auto report = balance_analyze(asymmetric, tmpl.subject_height_m);
    CHECK(std::fabs(report.pairs[static_cast<std::size_t>(JointPair::Shoulders)].vertical_m -
                    0.05) <= 1e-9);

    const auto symmetric = generate(tmpl, {}, 21);
    const auto clean = balance_analyze(symmetric, tmpl.subject_height_m);
    for (const auto& pair : clean.pairs) {
        CHECK(pair.vertical_m == 0.0);
        CHECK(pair.depth_m == 0.0);
    }
    std::printf("[PASS] criterion 8: shoulder imbalance 0.05 m recovered, symmetric reports 0\n");
}

TEST_CASE("criterion 9: file round-trips and deterministic CLI outputs") {
    const auto streams = varied_streams(50, 2.0);
    const fs::path dir = accept_dir();
    for (std::size_t i = 0; i < streams.size(); ++i) {
        const fs::path path = dir / ("roundtrip_" + std::to_string(i) + ".ndjson");
        write_stream(streams[i], path);
        CHECK(streams_equal(streams[i], read_stream(path)));
    }

    const std::string ref = (dir / "det_ref.ndjson").string();
    const std::string test = (dir / "det_test.ndjson").string();
    REQUIRE(cli::run({"gen", "--seed", "11", "--out", ref}) == 0);
    REQUIRE(cli::run({"gen", "--seed", "11", "--lateral-drift", "0.04", "--noise-sigma", "0.002",
                      "--out", test}) == 0);

    const std::string csv1 = (dir / "det1.csv").string(), csv2 = (dir / "det2.csv").string();
    const std::string svg1 = (dir / "det1.svg").string(), svg2 = (dir / "det2.svg").string();
    REQUIRE(cli::run({"compare", "--ref", ref, "--test", test, "--out-csv", csv1, "--out-svg",
                      svg1}) == 0);
    REQUIRE(cli::run({"compare", "--ref", ref, "--test", test, "--out-csv", csv2, "--out-svg",
                      svg2}) == 0);
    CHECK(slurp(csv1) == slurp(csv2));
    CHECK(slurp(svg1) == slurp(svg2));
    std::printf("[PASS] criterion 9: 50 round-trips exact, CLI outputs byte-identical\n");
}

TEST_CASE("criterion 10: 10k-frame comparison completes within a second") {
    ExerciseTemplate tmpl;
    tmpl.duration_s = 100.0;
    tmpl.frame_rate_hz = 100.0;  // 10,000 frames
    tmpl.reps = 20;
    const MotionStream ref = generate(tmpl, {}, 60);
    DefectSpec defects;
    defects.lateral_drift_m = 0.03;
    defects.noise_sigma_m = 0.002;
    const MotionStream test = generate(tmpl, defects, 61);
    REQUIRE(ref.size() == 10000);

    std::vector<JointId> all(all_joints().begin(), all_joints().end());
    const auto start = std::chrono::steady_clock::now();
    const auto outcome = compare_and_score(ref, test, all, {}, {}, {});
    const double elapsed = seconds_since(start);

    CHECK(outcome.score.ps > 0.0);
    CHECK(elapsed < 1.0);
    std::printf("[PASS] criterion 10: 10k frames x 25 joints compared in %.3f s (< 1 s)\n",
                elapsed);
}

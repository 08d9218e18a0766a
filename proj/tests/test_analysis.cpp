#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "liftform/analysis.hpp"
#include "liftform/synthgen.hpp"

using namespace liftform;

namespace {

constexpr double kPi = 3.14159265358979323846;

Frame curl_pose(double elbow_deg, double t = 0.0) {
    Frame f(t);
    const double theta = elbow_deg * kPi / 180.0;
    f.set(JointId::ShoulderLeft, {0.0, 0.3, 0.0});
    f.set(JointId::ElbowLeft, {0.0, 0.0, 0.0});
    f.set(JointId::WristLeft, {0.0, 0.25 * std::cos(theta), -0.25 * std::sin(theta)});
    return f;
}

// Symmetric standing skeleton with integer timestamps; dt = 1 and a frame
// count of 2^k + 1 keep the resampling grid exact.
MotionStream symmetric_stream(std::size_t frames) {
    MotionStream s;
    s.meta.subject_id = "sym";
    s.meta.frame_rate_hz = 1.0;
    s.meta.height_m = 1.75;
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> wiggle(-0.02, 0.02);
    for (std::size_t i = 0; i < frames; ++i) {
        Frame f(static_cast<double>(i));
        const double w = wiggle(rng);
        f.set(JointId::SpineBase, {0.0, 0.9, 2.5});
        f.set(JointId::SpineMid, {0.0, 1.15, 2.5});
        f.set(JointId::SpineShoulder, {0.0, 1.4, 2.5});
        f.set(JointId::Neck, {0.0, 1.5, 2.5});
        f.set(JointId::Head, {0.0, 1.72, 2.5});
        for (double side : {-1.0, 1.0}) {
            const bool left = side < 0.0;
            f.set(left ? JointId::ShoulderLeft : JointId::ShoulderRight, {side * 0.2, 1.42, 2.5});
            f.set(left ? JointId::ElbowLeft : JointId::ElbowRight, {side * 0.25, 1.1 + w, 2.5});
            f.set(left ? JointId::WristLeft : JointId::WristRight, {side * 0.25, 0.85 + w, 2.5});
            f.set(left ? JointId::HandLeft : JointId::HandRight, {side * 0.25, 0.78 + w, 2.5});
            f.set(left ? JointId::HandTipLeft : JointId::HandTipRight,
                  {side * 0.25, 0.72 + w, 2.5});
            f.set(left ? JointId::ThumbLeft : JointId::ThumbRight, {side * 0.22, 0.84 + w, 2.45});
            f.set(left ? JointId::HipLeft : JointId::HipRight, {side * 0.1, 0.9, 2.5});
            f.set(left ? JointId::KneeLeft : JointId::KneeRight, {side * 0.11, 0.5, 2.5});
            f.set(left ? JointId::AnkleLeft : JointId::AnkleRight, {side * 0.12, 0.07, 2.5});
            f.set(left ? JointId::FootLeft : JointId::FootRight, {side * 0.12, 0.01, 2.36});
        }
        s.frames.push_back(std::move(f));
    }
    return s;
}

}  // namespace

TEST_CASE("match_pose: reference against itself matches with zero errors") {
    const Frame f = curl_pose(73.0);
    PoseMatchConfig config;
    config.joints = {JointId::ElbowLeft};
    const auto result = match_pose(f, f, AdjacencyMap::defaults(), config);
    CHECK(result.matched);
    CHECK(result.per_joint_error_deg.at(JointId::ElbowLeft) == 0.0);
}

TEST_CASE("match_pose: 25 degree offset fails a 10 degree tolerance") {
    PoseMatchConfig config;
    config.joints = {JointId::ElbowLeft};
    config.tolerance_deg = 10.0;
    const auto result =
        match_pose(curl_pose(115.0), curl_pose(90.0), AdjacencyMap::defaults(), config);
    CHECK(!result.matched);
    CHECK(result.per_joint_error_deg.at(JointId::ElbowLeft) ==
          doctest::Approx(25.0).epsilon(1e-9));
}

TEST_CASE("match_pose: within tolerance matches") {
    PoseMatchConfig config;
    config.joints = {JointId::ElbowLeft};
    const auto result =
        match_pose(curl_pose(94.0), curl_pose(90.0), AdjacencyMap::defaults(), config);
    CHECK(result.matched);
    CHECK(result.per_joint_error_deg.at(JointId::ElbowLeft) == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("match_pose errors are symmetric and reflexivity holds broadly") {
    PoseMatchConfig config;
    config.joints = {JointId::ElbowLeft};
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> deg(5.0, 175.0);
    for (int trial = 0; trial < 100; ++trial) {
        const Frame a = curl_pose(deg(rng));
        const Frame b = curl_pose(deg(rng));
        const auto ab = match_pose(a, b, AdjacencyMap::defaults(), config);
        const auto ba = match_pose(b, a, AdjacencyMap::defaults(), config);
        CHECK(ab.per_joint_error_deg.at(JointId::ElbowLeft) ==
              doctest::Approx(ba.per_joint_error_deg.at(JointId::ElbowLeft)).epsilon(1e-12));
        const auto aa = match_pose(a, a, AdjacencyMap::defaults(), config);
        CHECK(aa.matched);
    }
}

TEST_CASE("rom standards table holds the ten published entries") {
    CHECK(rom_standards().size() == 10);
    auto check = [](JointRegion r, MotionType m, double deg) {
        auto s = find_rom_standard(r, m);
        REQUIRE(s.has_value());
        CHECK(s->standard_deg == deg);
    };
    check(JointRegion::LumbarSpine, MotionType::LateralFlexion, 35.0);
    check(JointRegion::LumbarSpine, MotionType::HyperExtension, 20.0);
    check(JointRegion::Elbow, MotionType::Flexion, 140.0);
    check(JointRegion::Elbow, MotionType::HyperExtension, 10.0);
    check(JointRegion::Shoulder, MotionType::Abduction, 180.0);
    check(JointRegion::Shoulder, MotionType::Adduction, 50.0);
    check(JointRegion::Shoulder, MotionType::Flexion, 180.0);
    check(JointRegion::Shoulder, MotionType::Extension, 50.0);
    check(JointRegion::Ankle, MotionType::Dorsiflexion, 20.0);
    check(JointRegion::Ankle, MotionType::PlantarFlexion, 50.0);
    CHECK(!find_rom_standard(JointRegion::Elbow, MotionType::Abduction).has_value());
}

TEST_CASE("rom_analyze: synthetic curl against the elbow flexion standard") {
    ExerciseTemplate tmpl;  // sweeps 10 -> 150
    const MotionStream stream = generate(tmpl, {}, 11);
    const auto standard = *find_rom_standard(JointRegion::Elbow, MotionType::Flexion);
    const auto report =
        rom_analyze(stream, JointId::ElbowLeft, standard, AdjacencyMap::defaults(), {2, 2});
    CHECK(report.observed_range_deg == doctest::Approx(140.0).epsilon(0.01));
    CHECK(report.deviation_deg < 1.0);
}

TEST_CASE("rom_analyze: constant pose and over-range sweeps") {
    const auto standard = *find_rom_standard(JointRegion::Elbow, MotionType::Flexion);

    MotionStream constant;
    constant.meta.frame_rate_hz = 30.0;
    for (int i = 0; i < 40; ++i) constant.frames.push_back(curl_pose(90.0, i / 30.0));
    auto report = rom_analyze(constant, JointId::ElbowLeft, standard, AdjacencyMap::defaults(),
                              {2, 2});
    CHECK(report.observed_range_deg == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
    CHECK(report.deviation_deg == doctest::Approx(140.0).epsilon(1e-9));

    // Sweep beyond the standard: deviation clamps at zero.
    ExerciseTemplate wide;
    wide.min_angle_deg = 5.0;
    wide.max_angle_deg = 160.0;
    report = rom_analyze(generate(wide, {}, 3), JointId::ElbowLeft, standard,
                         AdjacencyMap::defaults(), {2, 2});
    CHECK(report.observed_range_deg > 140.0);
    CHECK(report.deviation_deg == 0.0);
}

TEST_CASE("balance_analyze: symmetric stream reports zero everywhere") {
    const auto s = symmetric_stream(33);
    const auto report = balance_analyze(s, 1.75);
    for (const auto& pair : report.pairs) {
        CHECK(pair.vertical_m == 0.0);
        CHECK(pair.depth_m == 0.0);
    }
    CHECK(report.aggregate == 0.0);
}

TEST_CASE("balance_analyze: raised left shoulder shows up in the shoulder pair") {
    auto s = symmetric_stream(17);
    for (Frame& f : s.frames) {
        Position3 p = f.at(JointId::ShoulderLeft);
        p.y += 0.05;
        f.set(JointId::ShoulderLeft, p);
    }
    const auto report = balance_analyze(s, 1.75);
    CHECK(report.pairs[static_cast<std::size_t>(JointPair::Shoulders)].vertical_m ==
          doctest::Approx(0.05).epsilon(1e-12));
    CHECK(report.pairs[static_cast<std::size_t>(JointPair::Shoulders)].depth_m == 0.0);
    CHECK(report.pairs[static_cast<std::size_t>(JointPair::Elbows)].vertical_m == 0.0);
    CHECK(report.aggregate == doctest::Approx(0.05 / 10.0 / 1.75).epsilon(1e-12));
}

TEST_CASE("balance_analyze is invariant under whole-body translation") {
    auto s = symmetric_stream(9);
    for (Frame& f : s.frames) {
        Position3 p = f.at(JointId::ElbowLeft);
        p.y += 0.03;
        f.set(JointId::ElbowLeft, p);
    }
    const auto base = balance_analyze(s, 1.75);

    auto moved = s;
    for (Frame& f : moved.frames)
        for (JointId j : all_joints()) {
            Position3 p = f.at(j);
            f.set(j, {p.x + 1.3, p.y, p.z});
        }
    const auto shifted = balance_analyze(moved, 1.75);
    for (std::size_t p = 0; p < kJointPairCount; ++p) {
        CHECK(shifted.pairs[p].vertical_m == base.pairs[p].vertical_m);
        CHECK(shifted.pairs[p].depth_m == base.pairs[p].depth_m);
    }
    CHECK(shifted.aggregate == base.aggregate);
}

TEST_CASE("balance_analyze is invariant under mirroring left and right") {
    auto s = symmetric_stream(9);
    for (Frame& f : s.frames) {
        Position3 p = f.at(JointId::KneeLeft);
        p.y += 0.04;
        p.z += 0.02;
        f.set(JointId::KneeLeft, p);
    }
    const auto base = balance_analyze(s, 1.75);

    auto mirrored = s;
    for (std::size_t p = 0; p < kJointPairCount; ++p) {
        auto [left, right] = pair_joints(static_cast<JointPair>(p));
        for (Frame& f : mirrored.frames) {
            const Position3 l = f.at(left);
            const Position3 r = f.at(right);
            f.set(left, r);
            f.set(right, l);
        }
    }
    const auto swapped = balance_analyze(mirrored, 1.75);
    for (std::size_t p = 0; p < kJointPairCount; ++p) {
        CHECK(swapped.pairs[p].vertical_m == base.pairs[p].vertical_m);
        CHECK(swapped.pairs[p].depth_m == base.pairs[p].depth_m);
    }
    CHECK(swapped.aggregate == base.aggregate);
}

TEST_CASE("balance_delta of a report against itself is zero") {
    const auto report = balance_analyze(symmetric_stream(9), 1.75);
    const auto delta = balance_delta(report, report);
    CHECK(delta.aggregate == 0.0);
    for (const auto& pair : delta.pairs) {
        CHECK(pair.vertical_m == 0.0);
        CHECK(pair.depth_m == 0.0);
    }
}

TEST_CASE("compare_motion: self-comparison on an exact grid is identically zero") {
    const auto s = symmetric_stream(33);
    const auto errors = compare_motion(s, s, {JointId::HandLeft, JointId::ElbowLeft}, {}, {2, 2});
    REQUIRE(errors.t_s.size() == 33);
    for (const auto& [joint, trace] : errors.joints)
        for (std::size_t i = 0; i < errors.t_s.size(); ++i) {
            CHECK(trace.err_pos_m[i] == 0.0);
            CHECK(trace.err_speed_mps[i] == 0.0);
        }

    const auto score = performance_score(errors, balance_delta(balance_analyze(s, 1.75),
                                                               balance_analyze(s, 1.75)),
                                         {});
    CHECK(score.ps == 0.0);
}

TEST_CASE("compare_motion: constant hand offset lands in the y component") {
    const auto ref = symmetric_stream(33);
    auto test = ref;
    for (Frame& f : test.frames) {
        Position3 p = f.at(JointId::HandLeft);
        p.y += 0.1;
        f.set(JointId::HandLeft, p);
    }
    const auto errors = compare_motion(ref, test, {JointId::HandLeft}, {}, {2, 2});
    const auto& trace = errors.joints.at(JointId::HandLeft);
    for (std::size_t i = 0; i < errors.t_s.size(); ++i) {
        CHECK(trace.err_pos_m[i] == doctest::Approx(0.1).epsilon(1e-9));
        CHECK(trace.err_y_m[i] == doctest::Approx(0.1).epsilon(1e-9));
        CHECK(trace.err_x_m[i] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
        CHECK(trace.err_z_m[i] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
        CHECK(trace.err_speed_mps[i] == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
    }
}

TEST_CASE("compare_motion: normalization removes translation and scale") {
    ExerciseTemplate tmpl;
    tmpl.subject_height_m = 1.8;
    const MotionStream ref = generate(tmpl, {}, 5);

    MotionStream test = ref;
    test.meta.height_m = 1.5;
    for (Frame& f : test.frames)
        for (JointId j : all_joints()) {
            Position3 p = f.at(j);
            f.set(j, {p.x / 1.2 + 0.5, p.y / 1.2, p.z / 1.2 + 0.3});
        }
    const auto errors =
        compare_motion(ref, test, default_relevant_joints("bicep_curl"), {}, {2, 2});
    for (const auto& [joint, trace] : errors.joints)
        for (std::size_t i = 0; i < errors.t_s.size(); ++i) {
            CHECK(trace.err_pos_m[i] < 1e-6);
            CHECK(trace.err_speed_mps[i] < 1e-6);
        }
}

TEST_CASE("compare_motion error paths") {
    auto ref = symmetric_stream(9);
    auto test = symmetric_stream(9);
    CHECK_THROWS_AS(compare_motion(ref, test, {}, {}, {2, 2}), AnalysisError);

    auto shorter = symmetric_stream(5);
    NormalizationConfig no_resample;
    no_resample.resample_enabled = false;
    CHECK_THROWS_AS(compare_motion(ref, shorter, {JointId::HandLeft}, no_resample, {2, 2}),
                    AnalysisError);

    test.frames[4].present.reset(static_cast<std::size_t>(JointId::HandLeft));
    CHECK_THROWS_AS(compare_motion(ref, test, {JointId::HandLeft}, {}, {2, 2}),
                    MissingJointError);
}

TEST_CASE("performance_score: direct arithmetic") {
    ErrorSeries errors;
    errors.t_s = {0.0, 1.0};
    JointErrorTrace trace;
    trace.err_x_m = {1.0, 1.0};
    trace.err_y_m = {1.0, 1.0};
    trace.err_z_m = {1.0, 1.0};
    trace.err_pos_m = {3.0, 3.0};
    trace.err_speed_mps = {6.0, 6.0};
    errors.joints.emplace(JointId::HandLeft, trace);

    BalanceReport zero_balance;
    auto score = performance_score(errors, zero_balance, {1.0, 1.0, 1.0});
    CHECK(score.e_p_m == 3.0);
    CHECK(score.e_s_mps == 6.0);
    CHECK(score.ps == doctest::Approx(3.0).epsilon(1e-15));

    // w = (2,1,1), E = (1.5, 3, 3) -> (3 + 3 + 3) / 3 = 3.
    trace.err_pos_m = {1.5, 1.5};
    trace.err_speed_mps = {3.0, 3.0};
    errors.joints.clear();
    errors.joints.emplace(JointId::HandLeft, trace);
    BalanceReport three;
    three.aggregate = 3.0;
    score = performance_score(errors, three, {2.0, 1.0, 1.0});
    CHECK(score.ps == doctest::Approx(3.0).epsilon(1e-15));

    // All-zero errors and balance: ps = 0 for any valid weights.
    trace.err_pos_m = {0.0, 0.0};
    trace.err_speed_mps = {0.0, 0.0};
    errors.joints.clear();
    errors.joints.emplace(JointId::HandLeft, trace);
    score = performance_score(errors, zero_balance, {0.3, 7.0, 2.0});
    CHECK(score.ps == 0.0);
}

TEST_CASE("performance_score: monotone in each error and linear in each weight") {
    auto make_series = [](double pos, double speed) {
        ErrorSeries errors;
        errors.t_s = {0.0, 1.0, 2.0};
        JointErrorTrace trace;
        trace.err_x_m = trace.err_y_m = trace.err_z_m = {0.0, 0.0, 0.0};
        trace.err_pos_m = {pos, pos, pos};
        trace.err_speed_mps = {speed, speed, speed};
        errors.joints.emplace(JointId::HandLeft, trace);
        return errors;
    };
    BalanceReport balance;
    balance.aggregate = 0.25;

    const double base = performance_score(make_series(1.0, 2.0), balance, {1, 1, 1}).ps;
    CHECK(performance_score(make_series(1.5, 2.0), balance, {1, 1, 1}).ps > base);
    CHECK(performance_score(make_series(1.0, 2.5), balance, {1, 1, 1}).ps > base);
    BalanceReport more = balance;
    more.aggregate = 0.5;
    CHECK(performance_score(make_series(1.0, 2.0), more, {1, 1, 1}).ps > base);

    const double w2 = performance_score(make_series(1.0, 2.0), balance, {2, 1, 1}).ps;
    const double w1 = performance_score(make_series(1.0, 2.0), balance, {1, 1, 1}).ps;
    const double w0 = performance_score(make_series(1.0, 2.0), balance, {0, 1, 1}).ps;
    CHECK(w2 - w1 == doctest::Approx(w1 - w0).epsilon(1e-12));
}

TEST_CASE("performance_score rejects empty series and bad weights") {
    ErrorSeries empty;
    BalanceReport balance;
    CHECK_THROWS_AS(performance_score(empty, balance, {1, 1, 1}), EmptySeriesError);

    ErrorSeries errors;
    errors.t_s = {0.0};
    JointErrorTrace trace;
    trace.err_x_m = trace.err_y_m = trace.err_z_m = {0.0};
    trace.err_pos_m = {1.0};
    trace.err_speed_mps = {1.0};
    errors.joints.emplace(JointId::HandLeft, trace);
    CHECK_THROWS_AS(performance_score(errors, balance, {0.0, 0.0, 0.0}), AnalysisError);
    CHECK_THROWS_AS(performance_score(errors, balance, {-1.0, 1.0, 1.0}), AnalysisError);
}

TEST_CASE("default relevant joints per exercise tag") {
    CHECK(default_relevant_joints("bicep_curl") ==
          std::vector<JointId>{JointId::ElbowLeft, JointId::WristLeft, JointId::HandLeft});
    CHECK(default_relevant_joints("push_press").size() == 6);
    CHECK(default_relevant_joints("").size() == 6);
}

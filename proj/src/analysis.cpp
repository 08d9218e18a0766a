#include "liftform/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "liftform/kernels.hpp"

namespace liftform {

// ---------------------------------------------------------------- pose match

PoseMatchResult match_pose(const Frame& frame, const Frame& reference,
                           const AdjacencyMap& adjacency, const PoseMatchConfig& config) {
    if (config.joints.empty()) throw AnalysisError("match_pose: no joints configured");
    if (!(config.tolerance_deg > 0.0)) throw AnalysisError("match_pose: tolerance must be > 0");

    PoseMatchResult result;
    result.tolerance_deg = config.tolerance_deg;
    result.matched = true;
    for (JointId j : config.joints) {
        const double a = joint_angle(frame, j, adjacency);
        const double b = joint_angle(reference, j, adjacency);
        const double err = std::fabs(a - b);
        result.per_joint_error_deg[j] = err;
        if (err > config.tolerance_deg) result.matched = false;
    }
    return result;
}

// ------------------------------------------------------------ range of motion

std::string_view region_name(JointRegion region) {
    switch (region) {
        case JointRegion::LumbarSpine: return "LumbarSpine";
        case JointRegion::Elbow: return "Elbow";
        case JointRegion::Shoulder: return "Shoulder";
        case JointRegion::Ankle: return "Ankle";
    }
    return "Unknown";
}

std::string_view motion_name(MotionType motion) {
    switch (motion) {
        case MotionType::LateralFlexion: return "LateralFlexion";
        case MotionType::HyperExtension: return "HyperExtension";
        case MotionType::Flexion: return "Flexion";
        case MotionType::Extension: return "Extension";
        case MotionType::Abduction: return "Abduction";
        case MotionType::Adduction: return "Adduction";
        case MotionType::Dorsiflexion: return "Dorsiflexion";
        case MotionType::PlantarFlexion: return "PlantarFlexion";
    }
    return "Unknown";
}

std::optional<JointRegion> region_from_name(std::string_view name) {
    for (JointRegion r : {JointRegion::LumbarSpine, JointRegion::Elbow, JointRegion::Shoulder,
                          JointRegion::Ankle})
        if (region_name(r) == name) return r;
    return std::nullopt;
}

std::optional<MotionType> motion_from_name(std::string_view name) {
    for (MotionType m :
         {MotionType::LateralFlexion, MotionType::HyperExtension, MotionType::Flexion,
          MotionType::Extension, MotionType::Abduction, MotionType::Adduction,
          MotionType::Dorsiflexion, MotionType::PlantarFlexion})
        if (motion_name(m) == name) return m;
    return std::nullopt;
}

std::span<const RomStandard> rom_standards() {
    static constexpr std::array<RomStandard, 10> table = {{
        {JointRegion::LumbarSpine, MotionType::LateralFlexion, 35.0},
        {JointRegion::LumbarSpine, MotionType::HyperExtension, 20.0},
        {JointRegion::Elbow, MotionType::Flexion, 140.0},
        {JointRegion::Elbow, MotionType::HyperExtension, 10.0},
        {JointRegion::Shoulder, MotionType::Abduction, 180.0},
        {JointRegion::Shoulder, MotionType::Adduction, 50.0},
        {JointRegion::Shoulder, MotionType::Flexion, 180.0},
        {JointRegion::Shoulder, MotionType::Extension, 50.0},
        {JointRegion::Ankle, MotionType::Dorsiflexion, 20.0},
        {JointRegion::Ankle, MotionType::PlantarFlexion, 50.0},
    }};
    return table;
}

std::optional<RomStandard> find_rom_standard(JointRegion region, MotionType motion) {
    for (const RomStandard& s : rom_standards())
        if (s.region == region && s.motion == motion) return s;
    return std::nullopt;
}

std::optional<JointRegion> region_for_joint(JointId joint) {
    switch (joint) {
        case JointId::ElbowLeft:
        case JointId::ElbowRight: return JointRegion::Elbow;
        case JointId::ShoulderLeft:
        case JointId::ShoulderRight: return JointRegion::Shoulder;
        case JointId::AnkleLeft:
        case JointId::AnkleRight: return JointRegion::Ankle;
        case JointId::SpineMid: return JointRegion::LumbarSpine;
        default: return std::nullopt;
    }
}

RomReport rom_analyze(const MotionStream& stream, JointId target, const RomStandard& standard,
                      const AdjacencyMap& adjacency, const FilterConfig& filter) {
    const auto series = angle_series(stream, target, adjacency, filter);
    std::vector<double> values(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) values[i] = series[i].degrees;

    double mn = 0.0, mx = 0.0;
    kernels::active().minmax(values.data(), values.size(), &mn, &mx);

    RomReport report;
    report.standard = standard;
    report.observed_range_deg = mx - mn;
    report.deviation_deg = std::max(0.0, standard.standard_deg - report.observed_range_deg);
    return report;
}

// --------------------------------------------------------------------- balance

std::string_view pair_name(JointPair pair) {
    switch (pair) {
        case JointPair::Shoulders: return "Shoulders";
        case JointPair::Elbows: return "Elbows";
        case JointPair::Knees: return "Knees";
        case JointPair::Hips: return "Hips";
        case JointPair::Ankles: return "Ankles";
    }
    return "Unknown";
}

std::pair<JointId, JointId> pair_joints(JointPair pair) {
    switch (pair) {
        case JointPair::Shoulders: return {JointId::ShoulderLeft, JointId::ShoulderRight};
        case JointPair::Elbows: return {JointId::ElbowLeft, JointId::ElbowRight};
        case JointPair::Knees: return {JointId::KneeLeft, JointId::KneeRight};
        case JointPair::Hips: return {JointId::HipLeft, JointId::HipRight};
        case JointPair::Ankles: return {JointId::AnkleLeft, JointId::AnkleRight};
    }
    return {JointId::SpineBase, JointId::SpineBase};
}

BalanceReport balance_analyze(const MotionStream& stream, double height_m) {
    if (stream.empty()) throw EmptySeriesError("balance_analyze: empty stream");
    if (!(height_m > 0.0)) throw NonPositiveHeightError(height_m);

    const auto& k = kernels::active();
    BalanceReport report;
    report.height_m = height_m;

    std::vector<double> diff(stream.size());
    double total = 0.0;
    for (std::size_t p = 0; p < kJointPairCount; ++p) {
        auto [left, right] = pair_joints(static_cast<JointPair>(p));
        JointTrack lt = joint_track(stream, left);
        JointTrack rt = joint_track(stream, right);

        k.abs_diff(lt.y.data(), rt.y.data(), diff.data(), diff.size());
        report.pairs[p].vertical_m = k.mean(diff.data(), diff.size());
        k.abs_diff(lt.z.data(), rt.z.data(), diff.data(), diff.size());
        report.pairs[p].depth_m = k.mean(diff.data(), diff.size());

        total += report.pairs[p].vertical_m + report.pairs[p].depth_m;
    }
    report.aggregate = total / static_cast<double>(2 * kJointPairCount) / height_m;
    return report;
}

BalanceReport balance_delta(const BalanceReport& test, const BalanceReport& ref) {
    BalanceReport delta;
    delta.height_m = test.height_m;
    for (std::size_t p = 0; p < kJointPairCount; ++p) {
        delta.pairs[p].vertical_m = std::fabs(test.pairs[p].vertical_m - ref.pairs[p].vertical_m);
        delta.pairs[p].depth_m = std::fabs(test.pairs[p].depth_m - ref.pairs[p].depth_m);
    }
    delta.aggregate = std::fabs(test.aggregate - ref.aggregate);
    return delta;
}

// ----------------------------------------------------------- motion comparison

ErrorSeries compare_motion(const MotionStream& ref, const MotionStream& test,
                           const std::vector<JointId>& relevant_joints,
                           const NormalizationConfig& norm_config, const FilterConfig& filter) {
    if (relevant_joints.empty()) throw AnalysisError("compare_motion: no relevant joints");

    auto [ref_n, test_n] = normalize_pair(ref, test, norm_config);
    if (ref_n.size() != test_n.size())
        throw AnalysisError("compare_motion: frame counts differ (" + std::to_string(ref_n.size()) +
                            " vs " + std::to_string(test_n.size()) +
                            ") and resampling is disabled");

    const std::size_t n = ref_n.size();
    const auto& k = kernels::active();

    ErrorSeries series;
    series.t_s.resize(n);
    for (std::size_t i = 0; i < n; ++i) series.t_s[i] = ref_n.frames[i].t;

    for (JointId joint : relevant_joints) {
        JointTrack rt = joint_track(ref_n, joint);
        JointTrack tt = joint_track(test_n, joint);

        JointErrorTrace trace;
        trace.err_x_m.resize(n);
        trace.err_y_m.resize(n);
        trace.err_z_m.resize(n);
        trace.err_pos_m.resize(n);
        trace.err_speed_mps.resize(n);

        k.abs_diff(tt.x.data(), rt.x.data(), trace.err_x_m.data(), n);
        k.abs_diff(tt.y.data(), rt.y.data(), trace.err_y_m.data(), n);
        k.abs_diff(tt.z.data(), rt.z.data(), trace.err_z_m.data(), n);
        k.add3(trace.err_x_m.data(), trace.err_y_m.data(), trace.err_z_m.data(),
               trace.err_pos_m.data(), n);

        const auto ref_speed = speed_series(rt, filter);
        const auto test_speed = speed_series(tt, filter);
        for (std::size_t i = 0; i < n; ++i)
            trace.err_speed_mps[i] = std::fabs(test_speed[i].mps - ref_speed[i].mps);

        series.joints.emplace(joint, std::move(trace));
    }
    return series;
}

// ------------------------------------------------------------------- scoring

PerformanceScore performance_score(const ErrorSeries& errors, const BalanceReport& balance,
                                   const ScoreWeights& weights) {
    if (errors.empty()) throw EmptySeriesError("performance_score: empty error series");
    if (weights.w_p < 0.0 || weights.w_s < 0.0 || weights.w_b < 0.0)
        throw AnalysisError("performance_score: weights must be non-negative");
    if (weights.w_p == 0.0 && weights.w_s == 0.0 && weights.w_b == 0.0)
        throw AnalysisError("performance_score: weights must not all be zero");

    const auto& k = kernels::active();
    double pos_sum = 0.0;
    double speed_sum = 0.0;
    for (const auto& [joint, trace] : errors.joints) {
        pos_sum += k.mean(trace.err_pos_m.data(), trace.err_pos_m.size());
        speed_sum += k.mean(trace.err_speed_mps.data(), trace.err_speed_mps.size());
    }
    const double joint_count = static_cast<double>(errors.joints.size());

    PerformanceScore score;
    score.e_p_m = pos_sum / joint_count;
    score.e_s_mps = speed_sum / joint_count;
    score.e_b = balance.aggregate;
    score.weights = weights;
    score.ps =
        (weights.w_p * score.e_p_m + weights.w_s * score.e_s_mps + weights.w_b * score.e_b) / 3.0;
    return score;
}

// --------------------------------------------------------------- full pipeline

CompareOutcome compare_and_score(const MotionStream& ref, const MotionStream& test,
                                 const std::vector<JointId>& relevant_joints,
                                 const NormalizationConfig& norm_config,
                                 const FilterConfig& filter, const ScoreWeights& weights) {
    CompareOutcome outcome;
    outcome.errors = compare_motion(ref, test, relevant_joints, norm_config, filter);
    outcome.balance_ref = balance_analyze(ref, resolve_height(ref));
    outcome.balance_test = balance_analyze(test, resolve_height(test));
    outcome.balance_diff = balance_delta(outcome.balance_test, outcome.balance_ref);
    outcome.score = performance_score(outcome.errors, outcome.balance_diff, weights);
    return outcome;
}

std::vector<JointId> default_relevant_joints(std::string_view exercise_tag) {
    if (exercise_tag == "bicep_curl")
        return {JointId::ElbowLeft, JointId::WristLeft, JointId::HandLeft};
    return {JointId::ElbowLeft,  JointId::WristLeft,  JointId::HandLeft,
            JointId::ElbowRight, JointId::WristRight, JointId::HandRight};
}

}  // namespace liftform

#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "liftform/kinematics.hpp"
#include "liftform/normalize.hpp"
#include "liftform/skeleton.hpp"

namespace liftform {

// ---------------------------------------------------------------- pose match

struct PoseMatchConfig {
    std::vector<JointId> joints;  // angle-bearing joints to compare
    double tolerance_deg = 10.0;
};

struct PoseMatchResult {
    std::map<JointId, double> per_joint_error_deg;
    double tolerance_deg = 10.0;
    bool matched = false;  // true iff every error <= tolerance
};

PoseMatchResult match_pose(const Frame& frame, const Frame& reference,
                           const AdjacencyMap& adjacency, const PoseMatchConfig& config);

// ------------------------------------------------------------ range of motion

enum class JointRegion { LumbarSpine, Elbow, Shoulder, Ankle };

enum class MotionType {
    LateralFlexion,
    HyperExtension,
    Flexion,
    Extension,
    Abduction,
    Adduction,
    Dorsiflexion,
    PlantarFlexion,
};

std::string_view region_name(JointRegion region);
std::string_view motion_name(MotionType motion);
std::optional<JointRegion> region_from_name(std::string_view name);
std::optional<MotionType> motion_from_name(std::string_view name);

// Range-of-motion standard for an average adult.
struct RomStandard {
    JointRegion region;
    MotionType motion;
    double standard_deg;
};

// The embedded standards table (10 entries).
std::span<const RomStandard> rom_standards();
std::optional<RomStandard> find_rom_standard(JointRegion region, MotionType motion);

// Region a joint's angle is compared against, when one applies.
std::optional<JointRegion> region_for_joint(JointId joint);

struct RomReport {
    RomStandard standard;
    double observed_range_deg = 0.0;  // max - min of the smoothed angle series
    double deviation_deg = 0.0;       // max(0, standard - observed)
};

RomReport rom_analyze(const MotionStream& stream, JointId target, const RomStandard& standard,
                      const AdjacencyMap& adjacency, const FilterConfig& filter);

// --------------------------------------------------------------------- balance

enum class JointPair { Shoulders, Elbows, Knees, Hips, Ankles };

inline constexpr std::size_t kJointPairCount = 5;

std::string_view pair_name(JointPair pair);
std::pair<JointId, JointId> pair_joints(JointPair pair);  // (left, right)

struct PairImbalance {
    double vertical_m = 0.0;  // mean |y_left - y_right| (transverse plane)
    double depth_m = 0.0;     // mean |z_left - z_right| (sagittal plane)
};

struct BalanceReport {
    std::array<PairImbalance, kJointPairCount> pairs{};
    double height_m = 0.0;
    double aggregate = 0.0;  // mean of all pair imbalances / height, dimensionless
};

BalanceReport balance_analyze(const MotionStream& stream, double height_m);

// Pairwise |test - ref|; the aggregate is |delta of aggregates|. This is the
// balance term the scoring pipeline uses, so a stream compared against itself
// contributes zero regardless of its own asymmetry.
BalanceReport balance_delta(const BalanceReport& test, const BalanceReport& ref);

// ----------------------------------------------------------- motion comparison

struct JointErrorTrace {
    std::vector<double> err_x_m;
    std::vector<double> err_y_m;
    std::vector<double> err_z_m;
    std::vector<double> err_pos_m;      // |dx| + |dy| + |dz| per frame
    std::vector<double> err_speed_mps;  // |v_test - v_ref|, smoothed speeds
};

struct ErrorSeries {
    std::vector<double> t_s;  // normalized (reference) grid
    std::map<JointId, JointErrorTrace> joints;

    bool empty() const { return t_s.empty() || joints.empty(); }
};

ErrorSeries compare_motion(const MotionStream& ref, const MotionStream& test,
                           const std::vector<JointId>& relevant_joints,
                           const NormalizationConfig& norm_config, const FilterConfig& filter);

// ------------------------------------------------------------------- scoring

struct ScoreWeights {
    double w_p = 1.0;
    double w_s = 1.0;
    double w_b = 1.0;
};

struct PerformanceScore {
    double e_p_m = 0.0;    // mean position error over frames and joints
    double e_s_mps = 0.0;  // mean speed error
    double e_b = 0.0;      // balance term, dimensionless
    ScoreWeights weights;
    double ps = 0.0;  // (w_p*E_p + w_s*E_s + w_b*E_b) / 3
};

PerformanceScore performance_score(const ErrorSeries& errors, const BalanceReport& balance,
                                   const ScoreWeights& weights);

// --------------------------------------------------------------- full pipeline

// compare_motion + balance of both raw streams + score with a differential
// balance term. This is what the CLI's compare/score commands run.
struct CompareOutcome {
    ErrorSeries errors;
    BalanceReport balance_ref;
    BalanceReport balance_test;
    BalanceReport balance_diff;
    PerformanceScore score;
};

CompareOutcome compare_and_score(const MotionStream& ref, const MotionStream& test,
                                 const std::vector<JointId>& relevant_joints,
                                 const NormalizationConfig& norm_config,
                                 const FilterConfig& filter, const ScoreWeights& weights);

// Working-arm Hand/Wrist/Elbow for a bicep curl (left arm by default), both
// arms for presses, both arms when the tag is unknown.
std::vector<JointId> default_relevant_joints(std::string_view exercise_tag);

}  // namespace liftform

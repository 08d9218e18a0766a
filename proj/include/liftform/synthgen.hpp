#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liftform/skeleton.hpp"

namespace liftform {

enum class ExerciseKind { BicepCurl, PushPress, BenchPress };
enum class Arm { Left, Right };

std::string_view exercise_tag(ExerciseKind kind);

// Parametric exercise trajectory. Only the joints the exercise drives follow
// rich paths; the rest of the skeleton holds a plausible static stance so the
// closed-form oracles stay simple. BenchPress is modeled as the horizontal
// press pattern of the hands from an upright stance; bench/supine geometry is
// not simulated.
struct ExerciseTemplate {
    ExerciseKind kind = ExerciseKind::BicepCurl;
    double duration_s = 10.0;
    double frame_rate_hz = 30.0;
    double subject_height_m = 1.75;
    int reps = 2;
    double up_fraction = 0.5;  // fraction of each rep spent on the way up

    // BicepCurl: elbow angle sweeps min -> max -> min each rep.
    Arm working_arm = Arm::Left;
    double min_angle_deg = 10.0;
    double max_angle_deg = 150.0;

    // PushPress / BenchPress: hand travel per rep.
    double drive_m = 0.45;

    std::string subject_id = "synthetic";
};

// Injected form faults, all zero by default. Affected joints per defect:
//   amplitude_error, lateral_drift_m, tempo_error -> the moving hand chain
//   (wrist/hand/hand-tip/thumb, plus elbows for the presses);
//   asymmetry_m -> the whole left arm chain, raised in y;
//   noise_sigma_m -> every joint, every frame.
struct DefectSpec {
    double amplitude_error = 0.0;  // fractional over-reach of the motion extreme
    double lateral_drift_m = 0.0;  // off-plane hand drift, meters
    double tempo_error = 0.0;      // asymmetric up/down phase speed
    double asymmetry_m = 0.0;      // left/right paired-joint vertical offset
    double noise_sigma_m = 0.0;    // per-frame Gaussian jitter
};

using Seed = std::uint64_t;

enum class DefectKind { Amplitude, LateralDrift, Tempo, Asymmetry, Noise };

std::string_view defect_kind_name(DefectKind kind);

// Pure function of (template, defects, seed): same inputs, bit-identical
// stream. Noise uses a self-contained Box-Muller sampler over mt19937_64 so
// the realization does not depend on the standard library's distributions.
MotionStream generate(const ExerciseTemplate& tmpl, const DefectSpec& defects, Seed seed);

// One stream per magnitude, identical in everything but the chosen defect
// (shared seed, so a nonzero base noise realization would also be shared).
std::vector<MotionStream> defect_ladder(const ExerciseTemplate& tmpl, DefectKind kind,
                                        const std::vector<double>& magnitudes, Seed seed);

// Closed-form trajectory oracles for verification.
double curl_elbow_angle_deg(const ExerciseTemplate& tmpl, const DefectSpec& defects, double t);
double press_lift_m(const ExerciseTemplate& tmpl, const DefectSpec& defects, double t);

}  // namespace liftform

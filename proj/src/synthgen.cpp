#include "liftform/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace liftform {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDegToRad = kPi / 180.0;

// Deterministic standard normal: Box-Muller over raw mt19937_64 output.
// std::normal_distribution's sequence is implementation-defined; this is not.
class GaussianSampler {
public:
    explicit GaussianSampler(Seed seed) : rng_(seed) {}

    double operator()() {
        const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

private:
    double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

    std::mt19937_64 rng_;
};

// Static stance proportions as fractions of subject height. Head and foot
// joints are placed so the head-to-foot extent is 0.99 * height.
struct Stance {
    double h;              // subject height
    double torso_z = 2.5;  // distance from the sensor

    Position3 spine_base() const { return {0.0, 0.530 * h, torso_z}; }
    Position3 spine_mid() const { return {0.0, 0.660 * h, torso_z}; }
    Position3 spine_shoulder() const { return {0.0, 0.800 * h, torso_z}; }
    Position3 neck() const { return {0.0, 0.860 * h, torso_z}; }
    Position3 head() const { return {0.0, 0.995 * h, torso_z}; }
    Position3 shoulder(Arm arm) const { return {side(arm) * 0.120 * h, 0.820 * h, torso_z}; }
    Position3 hip(Arm arm) const { return {side(arm) * 0.060 * h, 0.520 * h, torso_z}; }
    Position3 knee(Arm arm) const { return {side(arm) * 0.065 * h, 0.285 * h, torso_z}; }
    Position3 ankle(Arm arm) const { return {side(arm) * 0.070 * h, 0.040 * h, torso_z}; }
    Position3 foot(Arm arm) const {
        return {side(arm) * 0.070 * h, 0.005 * h, torso_z - 0.080 * h};
    }

    double upper_arm() const { return 0.170 * h; }
    double forearm() const { return 0.150 * h; }
    double hand_reach() const { return 0.040 * h; }      // wrist to hand center
    double hand_tip_reach() const { return 0.075 * h; }  // wrist to finger tip
    double thumb_offset() const { return 0.025 * h; }

    static double side(Arm arm) { return arm == Arm::Left ? -1.0 : 1.0; }
};

struct ArmJoints {
    JointId shoulder, elbow, wrist, hand, hand_tip, thumb;
};

ArmJoints arm_joints(Arm arm) {
    if (arm == Arm::Left)
        return {JointId::ShoulderLeft, JointId::ElbowLeft,   JointId::WristLeft,
                JointId::HandLeft,     JointId::HandTipLeft, JointId::ThumbLeft};
    return {JointId::ShoulderRight, JointId::ElbowRight,   JointId::WristRight,
            JointId::HandRight,     JointId::HandTipRight, JointId::ThumbRight};
}

// Rep-local progress in [0, 1]: raised-cosine up over the first `up` fraction
// of the rep, down over the rest. up = 0.5 makes the whole rep one sinusoid.
double rep_phase(double t, const ExerciseTemplate& tmpl, const DefectSpec& defects) {
    const double period = tmpl.duration_s / tmpl.reps;
    double s = std::fmod(t, period) / period;
    if (s < 0.0) s = 0.0;
    const double up = std::clamp(tmpl.up_fraction * (1.0 + defects.tempo_error), 0.05, 0.95);
    if (s <= up) return 0.5 * (1.0 - std::cos(kPi * s / up));
    return 0.5 * (1.0 + std::cos(kPi * (s - up) / (1.0 - up)));
}

void place_hanging_arm(Frame& frame, const Stance& st, Arm arm) {
    const ArmJoints j = arm_joints(arm);
    const Position3 sh = st.shoulder(arm);
    const Position3 elbow = sh + Position3{0.0, -st.upper_arm(), 0.0};
    frame.set(j.shoulder, sh);
    frame.set(j.elbow, elbow);
    frame.set(j.wrist, elbow + Position3{0.0, -st.forearm(), 0.0});
    frame.set(j.hand, elbow + Position3{0.0, -(st.forearm() + st.hand_reach()), 0.0});
    frame.set(j.hand_tip, elbow + Position3{0.0, -(st.forearm() + st.hand_tip_reach()), 0.0});
    frame.set(j.thumb, elbow + Position3{0.0, -st.forearm(), -st.thumb_offset()});
}

// Forearm rotates in the y/z plane about a fixed elbow; the elbow angle
// between upper arm and forearm equals theta exactly.
void place_curl_arm(Frame& frame, const Stance& st, Arm arm, double theta_deg,
                    double lateral_offset) {
    const ArmJoints j = arm_joints(arm);
    const double theta = theta_deg * kDegToRad;
    const Position3 sh = st.shoulder(arm);
    const Position3 elbow = sh + Position3{0.0, -st.upper_arm(), 0.0};
    const Position3 w{0.0, std::cos(theta), -std::sin(theta)};   // forearm direction
    const Position3 q{0.0, std::sin(theta), std::cos(theta)};    // in-plane normal
    const Position3 drift{lateral_offset, 0.0, 0.0};

    frame.set(j.shoulder, sh);
    frame.set(j.elbow, elbow);
    frame.set(j.wrist, elbow + st.forearm() * w + drift);
    frame.set(j.hand, elbow + (st.forearm() + st.hand_reach()) * w + drift);
    frame.set(j.hand_tip, elbow + (st.forearm() + st.hand_tip_reach()) * w + drift);
    frame.set(j.thumb, elbow + st.forearm() * w + st.thumb_offset() * q + drift);
}

// Press grip: hands racked just above and in front of the shoulders, moving
// through `lift`. PushPress drives vertically (y), BenchPress horizontally
// toward the sensor (-z).
void place_press_arm(Frame& frame, const Stance& st, Arm arm, double lift, bool vertical,
                     double lateral_offset) {
    const ArmJoints j = arm_joints(arm);
    const Position3 sh = st.shoulder(arm);
    const Position3 rack_wrist = sh + Position3{0.0, 0.030 * st.h, -0.060 * st.h};
    const Position3 rack_elbow = sh + Position3{0.0, -0.050 * st.h, -0.050 * st.h};
    const Position3 dir = vertical ? Position3{0.0, 1.0, 0.0} : Position3{0.0, 0.0, -1.0};
    const Position3 drift{lateral_offset, 0.0, 0.0};

    const Position3 wrist = rack_wrist + lift * dir + drift;
    frame.set(j.shoulder, sh);
    frame.set(j.elbow, rack_elbow + (0.6 * lift) * dir + drift);
    frame.set(j.wrist, wrist);
    frame.set(j.hand, wrist + (st.hand_reach()) * dir);
    frame.set(j.hand_tip, wrist + (st.hand_tip_reach()) * dir);
    frame.set(j.thumb, wrist + Position3{Stance::side(arm) * -st.thumb_offset(), 0.0, 0.0});
}

void validate_template(const ExerciseTemplate& tmpl) {
    if (!(tmpl.duration_s > 0.0)) throw InvalidTemplateError("duration_s must be positive");
    if (!(tmpl.frame_rate_hz > 0.0)) throw InvalidTemplateError("frame_rate_hz must be positive");
    if (!(tmpl.subject_height_m > 0.5 && tmpl.subject_height_m < 3.0))
        throw InvalidTemplateError("subject_height_m must be in (0.5, 3.0)");
    if (tmpl.reps < 1) throw InvalidTemplateError("reps must be at least 1");
    if (!(tmpl.up_fraction > 0.0 && tmpl.up_fraction < 1.0))
        throw InvalidTemplateError("up_fraction must be in (0, 1)");
    if (tmpl.kind == ExerciseKind::BicepCurl) {
        if (!(tmpl.min_angle_deg >= 0.0 && tmpl.max_angle_deg <= 180.0 &&
              tmpl.min_angle_deg < tmpl.max_angle_deg))
            throw InvalidTemplateError("curl angles must satisfy 0 <= min < max <= 180");
    } else {
        if (!(tmpl.drive_m > 0.0)) throw InvalidTemplateError("drive_m must be positive");
    }
    if (std::llround(tmpl.duration_s * tmpl.frame_rate_hz) < 2)
        throw InvalidTemplateError("template yields fewer than 2 frames");
}

void validate_defects(const DefectSpec& d) {
    if (d.amplitude_error < 0.0 || d.lateral_drift_m < 0.0 || d.tempo_error < 0.0 ||
        d.asymmetry_m < 0.0 || d.noise_sigma_m < 0.0)
        throw InvalidTemplateError("defect magnitudes must be non-negative");
}

}  // namespace

std::string_view exercise_tag(ExerciseKind kind) {
    switch (kind) {
        case ExerciseKind::BicepCurl: return "bicep_curl";
        case ExerciseKind::PushPress: return "push_press";
        case ExerciseKind::BenchPress: return "bench_press";
    }
    return "unknown";
}

std::string_view defect_kind_name(DefectKind kind) {
    switch (kind) {
        case DefectKind::Amplitude: return "amplitude";
        case DefectKind::LateralDrift: return "lateral_drift";
        case DefectKind::Tempo: return "tempo";
        case DefectKind::Asymmetry: return "asymmetry";
        case DefectKind::Noise: return "noise";
    }
    return "unknown";
}

double curl_elbow_angle_deg(const ExerciseTemplate& tmpl, const DefectSpec& defects, double t) {
    const double sweep =
        (tmpl.max_angle_deg - tmpl.min_angle_deg) * (1.0 + defects.amplitude_error);
    const double theta = tmpl.min_angle_deg + sweep * rep_phase(t, tmpl, defects);
    return std::clamp(theta, 0.0, 180.0);
}

double press_lift_m(const ExerciseTemplate& tmpl, const DefectSpec& defects, double t) {
    return tmpl.drive_m * (1.0 + defects.amplitude_error) * rep_phase(t, tmpl, defects);
}

MotionStream generate(const ExerciseTemplate& tmpl, const DefectSpec& defects, Seed seed) {
    validate_template(tmpl);
    validate_defects(defects);

    const std::size_t frame_count =
        static_cast<std::size_t>(std::llround(tmpl.duration_s * tmpl.frame_rate_hz));
    const Stance st{tmpl.subject_height_m};

    MotionStream stream;
    stream.meta.subject_id = tmpl.subject_id;
    stream.meta.height_m = tmpl.subject_height_m;
    stream.meta.frame_rate_hz = tmpl.frame_rate_hz;
    stream.meta.exercise_tag = std::string(exercise_tag(tmpl.kind));
    stream.frames.reserve(frame_count);

    GaussianSampler noise(seed);

    for (std::size_t i = 0; i < frame_count; ++i) {
        const double t = static_cast<double>(i) / tmpl.frame_rate_hz;
        Frame frame(t);

        frame.set(JointId::SpineBase, st.spine_base());
        frame.set(JointId::SpineMid, st.spine_mid());
        frame.set(JointId::SpineShoulder, st.spine_shoulder());
        frame.set(JointId::Neck, st.neck());
        frame.set(JointId::Head, st.head());
        for (Arm a : {Arm::Left, Arm::Right}) {
            frame.set(a == Arm::Left ? JointId::HipLeft : JointId::HipRight, st.hip(a));
            frame.set(a == Arm::Left ? JointId::KneeLeft : JointId::KneeRight, st.knee(a));
            frame.set(a == Arm::Left ? JointId::AnkleLeft : JointId::AnkleRight, st.ankle(a));
            frame.set(a == Arm::Left ? JointId::FootLeft : JointId::FootRight, st.foot(a));
        }

        const double drift = defects.lateral_drift_m * rep_phase(t, tmpl, defects);
        switch (tmpl.kind) {
            case ExerciseKind::BicepCurl: {
                const double theta = curl_elbow_angle_deg(tmpl, defects, t);
                place_curl_arm(frame, st, tmpl.working_arm, theta, drift);
                place_hanging_arm(frame, st,
                                  tmpl.working_arm == Arm::Left ? Arm::Right : Arm::Left);
                break;
            }
            case ExerciseKind::PushPress:
            case ExerciseKind::BenchPress: {
                const double lift = press_lift_m(tmpl, defects, t);
                const bool vertical = tmpl.kind == ExerciseKind::PushPress;
                place_press_arm(frame, st, Arm::Left, lift, vertical, drift);
                place_press_arm(frame, st, Arm::Right, lift, vertical, drift);
                break;
            }
        }

        if (defects.asymmetry_m > 0.0) {
            for (JointId j : {JointId::ShoulderLeft, JointId::ElbowLeft, JointId::WristLeft,
                              JointId::HandLeft, JointId::HandTipLeft, JointId::ThumbLeft}) {
                Position3 p = frame.at(j);
                p.y += defects.asymmetry_m;
                frame.set(j, p);
            }
        }

        if (defects.noise_sigma_m > 0.0) {
            for (JointId j : all_joints()) {
                Position3 p = frame.at(j);
                p.x += defects.noise_sigma_m * noise();
                p.y += defects.noise_sigma_m * noise();
                p.z += defects.noise_sigma_m * noise();
                frame.set(j, p);
            }
        }

        stream.frames.push_back(std::move(frame));
    }
    return stream;
}

std::vector<MotionStream> defect_ladder(const ExerciseTemplate& tmpl, DefectKind kind,
                                        const std::vector<double>& magnitudes, Seed seed) {
    if (magnitudes.empty()) throw InvalidTemplateError("defect_ladder: no magnitudes");
    for (std::size_t i = 1; i < magnitudes.size(); ++i)
        if (!(magnitudes[i] > magnitudes[i - 1]))
            throw InvalidTemplateError("defect_ladder: magnitudes must be strictly increasing");

    std::vector<MotionStream> streams;
    streams.reserve(magnitudes.size());
    for (double m : magnitudes) {
        DefectSpec spec;
        switch (kind) {
            case DefectKind::Amplitude: spec.amplitude_error = m; break;
            case DefectKind::LateralDrift: spec.lateral_drift_m = m; break;
            case DefectKind::Tempo: spec.tempo_error = m; break;
            case DefectKind::Asymmetry: spec.asymmetry_m = m; break;
            case DefectKind::Noise: spec.noise_sigma_m = m; break;
        }
        streams.push_back(generate(tmpl, spec, seed));
    }
    return streams;
}

}  // namespace liftform

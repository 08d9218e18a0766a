#pragma once

#include <array>
#include <bitset>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "liftform/errors.hpp"

namespace liftform {

// The 25-joint Kinect v2 skeleton. Canonical names (used verbatim in file
// formats) are the enumerator names.
enum class JointId : std::uint8_t {
    SpineBase,
    SpineMid,
    SpineShoulder,
    Neck,
    Head,
    ShoulderLeft,
    ElbowLeft,
    WristLeft,
    HandLeft,
    HandTipLeft,
    ThumbLeft,
    ShoulderRight,
    ElbowRight,
    WristRight,
    HandRight,
    HandTipRight,
    ThumbRight,
    HipLeft,
    KneeLeft,
    AnkleLeft,
    FootLeft,
    HipRight,
    KneeRight,
    AnkleRight,
    FootRight,
};

inline constexpr std::size_t kJointCount = 25;

std::string_view joint_name(JointId id);
std::optional<JointId> joint_from_name(std::string_view name);
const std::array<JointId, kJointCount>& all_joints();

// Sensor/world coordinates in meters: y up, z depth (away from sensor),
// x lateral.
struct Position3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Position3 operator+(Position3 a, const Position3& b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Position3 operator-(Position3 a, const Position3& b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend Position3 operator*(double s, const Position3& p) {
        return {s * p.x, s * p.y, s * p.z};
    }
    friend bool operator==(const Position3& a, const Position3& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }

    double dot(const Position3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

static_assert(sizeof(Position3) == 3 * sizeof(double));

// One time sample. Joint slots are dense; `present` tracks which slots hold
// real data. Missing joints are a validation issue, not a crash.
struct Frame {
    double t = 0.0;
    std::array<Position3, kJointCount> positions{};
    std::bitset<kJointCount> present{};

    Frame() = default;
    explicit Frame(double time) : t(time) {}

    bool has(JointId id) const { return present.test(static_cast<std::size_t>(id)); }

    const Position3& at(JointId id) const {
        if (!has(id)) throw MissingJointError(std::string(joint_name(id)));
        return positions[static_cast<std::size_t>(id)];
    }

    void set(JointId id, const Position3& p) {
        positions[static_cast<std::size_t>(id)] = p;
        present.set(static_cast<std::size_t>(id));
    }

    bool all_present() const { return present.all(); }

    // Contiguous view over the 75 coordinate doubles (x,y,z per joint in
    // JointId order). Slots for absent joints stay zero.
    std::span<double, kJointCount * 3> coords() {
        return std::span<double, kJointCount * 3>(reinterpret_cast<double*>(positions.data()),
                                                  kJointCount * 3);
    }
    std::span<const double, kJointCount * 3> coords() const {
        return std::span<const double, kJointCount * 3>(
            reinterpret_cast<const double*>(positions.data()), kJointCount * 3);
    }
};

struct StreamMeta {
    std::string subject_id;
    std::optional<double> height_m;  // (0.5, 3.0) when present
    double frame_rate_hz = 30.0;     // advisory; timestamps are authoritative
    std::string exercise_tag;
    std::vector<std::string> provenance;  // normalization notes, not serialized

    friend bool operator==(const StreamMeta& a, const StreamMeta& b) {
        return a.subject_id == b.subject_id && a.height_m == b.height_m &&
               a.frame_rate_hz == b.frame_rate_hz && a.exercise_tag == b.exercise_tag;
    }
};

// Immutable after construction by convention: every transformation returns a
// new stream, so concurrent read-only sharing is safe.
struct MotionStream {
    StreamMeta meta;
    std::vector<Frame> frames;

    bool empty() const { return frames.empty(); }
    std::size_t size() const { return frames.size(); }
};

enum class IssueCode {
    EmptyStream,
    NonMonotoneTime,
    NonFiniteTime,
    NegativeTime,
    MissingJoint,
    UnknownJoint,
    NonFiniteCoordinate,
    InvalidMeta,
};

std::string_view issue_code_name(IssueCode code);

struct ValidationIssue {
    std::optional<std::size_t> frame_index;  // empty for stream-level issues
    IssueCode code;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty(); }
};

// Reports empty streams, non-monotone or non-finite timestamps, missing
// joints, non-finite coordinates, and out-of-range metadata. Never throws.
ValidationReport validate_stream(const MotionStream& stream);

// Head-to-lowest-foot vertical extent times a fixed crown-offset correction
// (the Head joint sits below the crown). Feeds the height-ratio scaling when
// the stream metadata carries no measured height.
inline constexpr double kCrownOffsetFactor = 1.06;

double estimate_height(const Frame& frame);

// meta.height_m when present, otherwise estimate_height on the first frame.
double resolve_height(const MotionStream& stream);

struct TimedPosition {
    double t;
    Position3 p;
};

std::vector<TimedPosition> joint_series(const MotionStream& stream, JointId joint);

// Structure-of-arrays view of one joint's trajectory, the layout the series
// kernels operate on.
struct JointTrack {
    std::vector<double> t;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> z;

    std::size_t size() const { return t.size(); }
};

JointTrack joint_track(const MotionStream& stream, JointId joint);

}  // namespace liftform

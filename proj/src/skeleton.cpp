#include "liftform/skeleton.hpp"

#include <algorithm>
#include <unordered_map>

namespace liftform {

namespace {

constexpr std::array<std::string_view, kJointCount> kJointNames = {
    "SpineBase",  "SpineMid",     "SpineShoulder", "Neck",         "Head",
    "ShoulderLeft", "ElbowLeft",  "WristLeft",     "HandLeft",     "HandTipLeft",
    "ThumbLeft",  "ShoulderRight", "ElbowRight",   "WristRight",   "HandRight",
    "HandTipRight", "ThumbRight", "HipLeft",       "KneeLeft",     "AnkleLeft",
    "FootLeft",   "HipRight",     "KneeRight",     "AnkleRight",   "FootRight",
};

}  // namespace

std::string_view joint_name(JointId id) {
    return kJointNames[static_cast<std::size_t>(id)];
}

std::optional<JointId> joint_from_name(std::string_view name) {
    static const std::unordered_map<std::string_view, JointId> lookup = [] {
        std::unordered_map<std::string_view, JointId> m;
        for (std::size_t i = 0; i < kJointCount; ++i)
            m.emplace(kJointNames[i], static_cast<JointId>(i));
        return m;
    }();
    auto it = lookup.find(name);
    if (it == lookup.end()) return std::nullopt;
    return it->second;
}

const std::array<JointId, kJointCount>& all_joints() {
    static const std::array<JointId, kJointCount> joints = [] {
        std::array<JointId, kJointCount> a{};
        for (std::size_t i = 0; i < kJointCount; ++i) a[i] = static_cast<JointId>(i);
        return a;
    }();
    return joints;
}

std::string_view issue_code_name(IssueCode code) {
    switch (code) {
        case IssueCode::EmptyStream: return "EmptyStream";
        case IssueCode::NonMonotoneTime: return "NonMonotoneTime";
        case IssueCode::NonFiniteTime: return "NonFiniteTime";
        case IssueCode::NegativeTime: return "NegativeTime";
        case IssueCode::MissingJoint: return "MissingJoint";
        case IssueCode::UnknownJoint: return "UnknownJoint";
        case IssueCode::NonFiniteCoordinate: return "NonFiniteCoordinate";
        case IssueCode::InvalidMeta: return "InvalidMeta";
    }
    return "Unknown";
}

ValidationReport validate_stream(const MotionStream& stream) {
    ValidationReport report;
    auto add = [&](std::optional<std::size_t> frame, IssueCode code, std::string detail) {
        report.issues.push_back({frame, code, std::move(detail)});
    };

    if (stream.meta.height_m) {
        double h = *stream.meta.height_m;
        if (!(h > 0.5 && h < 3.0))
            add(std::nullopt, IssueCode::InvalidMeta,
                "height_m " + std::to_string(h) + " outside (0.5, 3.0)");
    }
    if (!(stream.meta.frame_rate_hz > 0.0))
        add(std::nullopt, IssueCode::InvalidMeta,
            "frame_rate_hz must be positive, got " + std::to_string(stream.meta.frame_rate_hz));

    if (stream.empty()) {
        add(std::nullopt, IssueCode::EmptyStream, "stream has no frames");
        return report;
    }

    double prev_t = 0.0;
    for (std::size_t i = 0; i < stream.frames.size(); ++i) {
        const Frame& f = stream.frames[i];
        if (!std::isfinite(f.t)) {
            add(i, IssueCode::NonFiniteTime, "t is not finite");
        } else {
            if (f.t < 0.0) add(i, IssueCode::NegativeTime, "t = " + std::to_string(f.t));
            if (i > 0 && !(f.t > prev_t))
                add(i, IssueCode::NonMonotoneTime,
                    "t = " + std::to_string(f.t) + " after " + std::to_string(prev_t));
        }
        prev_t = f.t;

        for (JointId j : all_joints()) {
            if (!f.has(j)) {
                add(i, IssueCode::MissingJoint, std::string(joint_name(j)));
            } else if (!f.positions[static_cast<std::size_t>(j)].finite()) {
                add(i, IssueCode::NonFiniteCoordinate, std::string(joint_name(j)));
            }
        }
    }
    return report;
}

double estimate_height(const Frame& frame) {
    const Position3& head = frame.at(JointId::Head);
    const Position3& foot_l = frame.at(JointId::FootLeft);
    const Position3& foot_r = frame.at(JointId::FootRight);
    return (head.y - std::min(foot_l.y, foot_r.y)) * kCrownOffsetFactor;
}

double resolve_height(const MotionStream& stream) {
    if (stream.meta.height_m) return *stream.meta.height_m;
    if (stream.empty()) throw EmptySeriesError("cannot estimate height of an empty stream");
    double h = estimate_height(stream.frames.front());
    if (!(h > 0.0)) throw NonPositiveHeightError(h);
    return h;
}

std::vector<TimedPosition> joint_series(const MotionStream& stream, JointId joint) {
    std::vector<TimedPosition> out;
    out.reserve(stream.size());
    for (std::size_t i = 0; i < stream.frames.size(); ++i) {
        const Frame& f = stream.frames[i];
        if (!f.has(joint)) throw MissingJointError(std::string(joint_name(joint)), i);
        out.push_back({f.t, f.positions[static_cast<std::size_t>(joint)]});
    }
    return out;
}

JointTrack joint_track(const MotionStream& stream, JointId joint) {
    JointTrack track;
    track.t.reserve(stream.size());
    track.x.reserve(stream.size());
    track.y.reserve(stream.size());
    track.z.reserve(stream.size());
    for (std::size_t i = 0; i < stream.frames.size(); ++i) {
        const Frame& f = stream.frames[i];
        if (!f.has(joint)) throw MissingJointError(std::string(joint_name(joint)), i);
        const Position3& p = f.positions[static_cast<std::size_t>(joint)];
        track.t.push_back(f.t);
        track.x.push_back(p.x);
        track.y.push_back(p.y);
        track.z.push_back(p.z);
    }
    return track;
}

}  // namespace liftform

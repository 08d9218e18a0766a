#include "liftform/kinematics.hpp"

#include <algorithm>
#include <cmath>

#include "liftform/kernels.hpp"

namespace liftform {

namespace {

constexpr double kDegenerateNorm = 1e-9;
constexpr double kRadToDeg = 180.0 / 3.14159265358979323846;

}  // namespace

std::vector<JointId> AdjacencyMap::targets() const {
    std::vector<JointId> out;
    for (std::size_t i = 0; i < kJointCount; ++i)
        if (entries_[i]) out.push_back(static_cast<JointId>(i));
    return out;
}

const AdjacencyMap& AdjacencyMap::defaults() {
    static const AdjacencyMap map = [] {
        AdjacencyMap m;
        m.set(JointId::ElbowLeft, {JointId::ShoulderLeft, JointId::WristLeft});
        m.set(JointId::ElbowRight, {JointId::ShoulderRight, JointId::WristRight});
        m.set(JointId::KneeLeft, {JointId::HipLeft, JointId::AnkleLeft});
        m.set(JointId::KneeRight, {JointId::HipRight, JointId::AnkleRight});
        m.set(JointId::ShoulderLeft, {JointId::SpineShoulder, JointId::ElbowLeft});
        m.set(JointId::ShoulderRight, {JointId::SpineShoulder, JointId::ElbowRight});
        m.set(JointId::HipLeft, {JointId::SpineBase, JointId::KneeLeft});
        m.set(JointId::HipRight, {JointId::SpineBase, JointId::KneeRight});
        m.set(JointId::AnkleLeft, {JointId::KneeLeft, JointId::FootLeft});
        m.set(JointId::AnkleRight, {JointId::KneeRight, JointId::FootRight});
        m.set(JointId::SpineMid, {JointId::SpineShoulder, JointId::SpineBase});
        return m;
    }();
    return map;
}

double joint_angle(const Frame& frame, JointId target, const AdjacencyMap& adjacency) {
    auto adj = adjacency.find(target);
    if (!adj) throw NoAdjacencyError(std::string(joint_name(target)));

    const Position3& p_target = frame.at(target);
    const Position3 u = frame.at(adj->upper) - p_target;
    const Position3 v = frame.at(adj->lower) - p_target;

    const double nu = u.norm();
    const double nv = v.norm();
    if (nu <= kDegenerateNorm || nv <= kDegenerateNorm)
        throw DegenerateGeometryError("zero-length adjacency vector at " +
                                      std::string(joint_name(target)));

    const double c = std::clamp(u.dot(v) / (nu * nv), -1.0, 1.0);
    return std::acos(c) * kRadToDeg;
}

std::vector<double> smooth_series(const std::vector<double>& values, const FilterConfig& config) {
    if (values.empty()) throw EmptySeriesError("smooth_series: empty input");

    std::vector<double> cur = values;
    if (config.half_width == 0) return cur;

    std::vector<double> next(values.size());
    const auto& k = kernels::active();
    for (int pass = 0; pass < std::max(config.passes, 1); ++pass) {
        k.moving_average(cur.data(), next.data(), cur.size(), config.half_width);
        cur.swap(next);
    }
    return cur;
}

namespace {

std::vector<SpeedSample> speed_from_track(const JointTrack& track, const FilterConfig& filter) {
    const std::size_t n = track.size();
    if (n < 2) throw TooFewSamplesError("speed_series needs at least 2 samples");

    const auto& k = kernels::active();
    std::vector<double> vx(n), vy(n), vz(n);

    if (n > 2) {
        // Interior: (p[i+1] - p[i-1]) / (t[i+1] - t[i-1]) via shifted views.
        std::vector<double> w(n - 2);
        for (std::size_t i = 0; i < n - 2; ++i) w[i] = 1.0 / (track.t[i + 2] - track.t[i]);
        k.scaled_diff(track.x.data() + 2, track.x.data(), w.data(), vx.data() + 1, n - 2);
        k.scaled_diff(track.y.data() + 2, track.y.data(), w.data(), vy.data() + 1, n - 2);
        k.scaled_diff(track.z.data() + 2, track.z.data(), w.data(), vz.data() + 1, n - 2);
    }

    const double w0 = 1.0 / (track.t[1] - track.t[0]);
    vx[0] = (track.x[1] - track.x[0]) * w0;
    vy[0] = (track.y[1] - track.y[0]) * w0;
    vz[0] = (track.z[1] - track.z[0]) * w0;
    const double wn = 1.0 / (track.t[n - 1] - track.t[n - 2]);
    vx[n - 1] = (track.x[n - 1] - track.x[n - 2]) * wn;
    vy[n - 1] = (track.y[n - 1] - track.y[n - 2]) * wn;
    vz[n - 1] = (track.z[n - 1] - track.z[n - 2]) * wn;

    std::vector<double> mag(n);
    k.magnitude3(vx.data(), vy.data(), vz.data(), mag.data(), n);
    mag = smooth_series(mag, filter);

    std::vector<SpeedSample> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = {track.t[i], mag[i]};
    return out;
}

}  // namespace

std::vector<SpeedSample> speed_series(const JointTrack& track, const FilterConfig& filter) {
    return speed_from_track(track, filter);
}

std::vector<SpeedSample> speed_series(const std::vector<TimedPosition>& samples,
                                      const FilterConfig& filter) {
    JointTrack track;
    track.t.reserve(samples.size());
    track.x.reserve(samples.size());
    track.y.reserve(samples.size());
    track.z.reserve(samples.size());
    for (const auto& s : samples) {
        track.t.push_back(s.t);
        track.x.push_back(s.p.x);
        track.y.push_back(s.p.y);
        track.z.push_back(s.p.z);
    }
    return speed_from_track(track, filter);
}

std::vector<AngleSample> angle_series(const MotionStream& stream, JointId target,
                                      const AdjacencyMap& adjacency, const FilterConfig& filter) {
    if (stream.empty()) throw EmptySeriesError("angle_series: empty stream");

    std::vector<double> angles;
    angles.reserve(stream.size());
    for (std::size_t i = 0; i < stream.frames.size(); ++i) {
        try {
            angles.push_back(joint_angle(stream.frames[i], target, adjacency));
        } catch (const MissingJointError& e) {
            throw MissingJointError(e.joint_name, i);
        } catch (const DegenerateGeometryError& e) {
            throw DegenerateGeometryError(e.what(), i);
        }
    }
    angles = smooth_series(angles, filter);

    std::vector<AngleSample> out(angles.size());
    for (std::size_t i = 0; i < angles.size(); ++i) out[i] = {stream.frames[i].t, angles[i]};
    return out;
}

}  // namespace liftform

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "liftform/skeleton.hpp"

namespace liftform {

// Upper/lower neighbours of an angle-bearing joint. The angle at the target
// is measured between the vectors target->upper and target->lower.
struct JointAdjacency {
    JointId upper;
    JointId lower;
};

class AdjacencyMap {
public:
    void set(JointId target, JointAdjacency adjacency) {
        entries_[static_cast<std::size_t>(target)] = adjacency;
    }

    std::optional<JointAdjacency> find(JointId target) const {
        return entries_[static_cast<std::size_t>(target)];
    }

    std::vector<JointId> targets() const;

    // Elbows (Shoulder, Wrist), knees (Hip, Ankle), shoulders (SpineShoulder,
    // Elbow), hips (SpineBase, Knee), ankles (Knee, Foot), and SpineMid
    // (SpineShoulder, SpineBase).
    static const AdjacencyMap& defaults();

private:
    std::array<std::optional<JointAdjacency>, kJointCount> entries_{};
};

// Centered moving-average filter: window of 2*half_width+1 samples, shrunk to
// the series bounds at the edges, applied `passes` times in cascade.
struct FilterConfig {
    std::size_t half_width = 2;
    int passes = 2;
};

struct AngleSample {
    double t;
    double degrees;  // [0, 180]
};

struct SpeedSample {
    double t;
    double mps;  // unsigned magnitude
};

// Angle at `target` in degrees, arccos of the normalized dot product of the
// two adjacency vectors. Vectors shorter than 1e-9 m are degenerate.
double joint_angle(const Frame& frame, JointId target, const AdjacencyMap& adjacency);

std::vector<double> smooth_series(const std::vector<double>& values, const FilterConfig& config);

// Central differences on the interior, one-sided at the endpoints, then the
// magnitudes are smoothed. Length equals the input length.
std::vector<SpeedSample> speed_series(const JointTrack& track, const FilterConfig& filter);
std::vector<SpeedSample> speed_series(const std::vector<TimedPosition>& samples,
                                      const FilterConfig& filter);

std::vector<AngleSample> angle_series(const MotionStream& stream, JointId target,
                                      const AdjacencyMap& adjacency, const FilterConfig& filter);

}  // namespace liftform

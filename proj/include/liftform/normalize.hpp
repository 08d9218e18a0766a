#pragma once

#include <utility>

#include "liftform/skeleton.hpp"

namespace liftform {

struct NormalizationConfig {
    JointId origin_joint = JointId::SpineBase;
    bool scale_enabled = true;
    bool recenter_enabled = true;
    bool resample_enabled = true;
};

// Reference-to-test height ratio used to scale the test subject's positions.
struct ScaleFactor {
    double sf = 1.0;
};

ScaleFactor height_scale_factor(double h_ref_m, double h_test_m);

// Multiplies every coordinate of every joint; timestamps and meta unchanged
// apart from a provenance note.
MotionStream apply_scale(const MotionStream& stream, ScaleFactor sf);

// Rebases each frame on the origin joint's position; the origin joint maps to
// (0,0,0) in every output frame.
MotionStream recenter(const MotionStream& stream, JointId origin_joint);

// Linear-interpolation resampling onto target_count uniformly spaced
// timestamps over [t_first, t_last]; endpoint frames are preserved exactly.
MotionStream resample(const MotionStream& stream, std::size_t target_count);

// scale (height ratio) -> recenter -> resample on the test stream, recenter
// alone on the reference; stages toggled by the config flags.
std::pair<MotionStream, MotionStream> normalize_pair(const MotionStream& ref,
                                                     const MotionStream& test,
                                                     const NormalizationConfig& config);

}  // namespace liftform

#include "liftform/normalize.hpp"

#include <cmath>
#include <string>

#include "liftform/kernels.hpp"

namespace liftform {

ScaleFactor height_scale_factor(double h_ref_m, double h_test_m) {
    if (!(h_ref_m > 0.0) || !std::isfinite(h_ref_m)) throw NonPositiveHeightError(h_ref_m);
    if (!(h_test_m > 0.0) || !std::isfinite(h_test_m)) throw NonPositiveHeightError(h_test_m);
    return {h_ref_m / h_test_m};
}

MotionStream apply_scale(const MotionStream& stream, ScaleFactor sf) {
    MotionStream out = stream;
    const auto& k = kernels::active();
    for (Frame& f : out.frames) {
        auto c = f.coords();
        k.scale_inplace(c.data(), c.size(), sf.sf);
    }
    out.meta.provenance.push_back("scaled x" + std::to_string(sf.sf));
    return out;
}

MotionStream recenter(const MotionStream& stream, JointId origin_joint) {
    MotionStream out = stream;
    const auto& k = kernels::active();
    for (std::size_t i = 0; i < out.frames.size(); ++i) {
        Frame& f = out.frames[i];
        if (!f.has(origin_joint))
            throw MissingJointError(std::string(joint_name(origin_joint)), i);
        const double origin[3] = {f.positions[static_cast<std::size_t>(origin_joint)].x,
                                  f.positions[static_cast<std::size_t>(origin_joint)].y,
                                  f.positions[static_cast<std::size_t>(origin_joint)].z};
        auto c = f.coords();
        k.sub_cycle3(c.data(), c.size(), origin);
    }
    out.meta.provenance.push_back("recentered@" + std::string(joint_name(origin_joint)));
    return out;
}

MotionStream resample(const MotionStream& stream, std::size_t target_count) {
    if (stream.size() < 2) throw TooFewSamplesError("resample needs at least 2 frames");
    if (target_count < 2) throw TooFewSamplesError("resample target must be at least 2");

    const auto& frames = stream.frames;
    const std::size_t n = frames.size();
    const double t0 = frames.front().t;
    const double t1 = frames.back().t;

    MotionStream out;
    out.meta = stream.meta;
    out.frames.reserve(target_count);

    const auto& k = kernels::active();
    std::size_t seg = 0;  // monotone sweep over input segments
    for (std::size_t i = 0; i < target_count; ++i) {
        if (i == 0) {
            out.frames.push_back(frames.front());
            continue;
        }
        if (i == target_count - 1) {
            out.frames.push_back(frames.back());
            continue;
        }
        const double u = static_cast<double>(i) / static_cast<double>(target_count - 1);
        const double t = t0 + u * (t1 - t0);
        while (seg + 2 < n && frames[seg + 1].t < t) ++seg;

        const Frame& a = frames[seg];
        const Frame& b = frames[seg + 1];
        const double w = (t - a.t) / (b.t - a.t);

        Frame f(t);
        f.present = a.present & b.present;
        if (w == 0.0)
            f.positions = a.positions;  // exact grid hit, keep the sample bit-exact
        else if (w == 1.0)
            f.positions = b.positions;
        else
            k.lerp(a.coords().data(), b.coords().data(), w, f.coords().data(),
                   f.coords().size());
        out.frames.push_back(std::move(f));
    }
    out.meta.provenance.push_back("resampled " + std::to_string(n) + "->" +
                                  std::to_string(target_count));
    return out;
}

std::pair<MotionStream, MotionStream> normalize_pair(const MotionStream& ref,
                                                     const MotionStream& test,
                                                     const NormalizationConfig& config) {
    auto staged = [](const char* stage, auto&& fn) -> MotionStream {
        try {
            return fn();
        } catch (const AnalysisError& e) {
            throw AnalysisError(std::string(stage) + ": " + e.what());
        }
    };

    MotionStream test_out = test;
    if (config.scale_enabled) {
        test_out = staged("scale", [&] {
            ScaleFactor sf = height_scale_factor(resolve_height(ref), resolve_height(test));
            return apply_scale(test_out, sf);
        });
    }

    MotionStream ref_out = ref;
    if (config.recenter_enabled) {
        ref_out = staged("recenter", [&] { return recenter(ref_out, config.origin_joint); });
        test_out = staged("recenter", [&] { return recenter(test_out, config.origin_joint); });
    }

    if (config.resample_enabled) {
        test_out = staged("resample", [&] { return resample(test_out, ref_out.size()); });
    }
    return {std::move(ref_out), std::move(test_out)};
}

}  // namespace liftform

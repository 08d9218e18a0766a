#include "liftform/report.hpp"

#include <fstream>

#include "liftform/stream_io.hpp"

namespace liftform {

Report make_report(const std::string& mode, Report inputs, Report results) {
    Report report;
    report["schema_version"] = "1";
    report["mode"] = mode;
    report["inputs"] = std::move(inputs);
    report["results"] = std::move(results);
    return report;
}

Report pose_match_results(const PoseMatchResult& result) {
    Report r;
    r["matched"] = result.matched;
    r["tolerance_deg"] = result.tolerance_deg;
    Report errors = Report::object();
    for (const auto& [joint, err] : result.per_joint_error_deg)
        errors[std::string(joint_name(joint))] = err;
    r["per_joint_error_deg"] = std::move(errors);
    return r;
}

Report rom_results(const RomReport& report) {
    Report r;
    r["joint_region"] = std::string(region_name(report.standard.region));
    r["motion_type"] = std::string(motion_name(report.standard.motion));
    r["standard_deg"] = report.standard.standard_deg;
    r["observed_range_deg"] = report.observed_range_deg;
    r["deviation_deg"] = report.deviation_deg;
    return r;
}

Report balance_results(const BalanceReport& report) {
    Report r;
    r["height_m"] = report.height_m;
    Report pairs = Report::object();
    for (std::size_t p = 0; p < kJointPairCount; ++p) {
        Report entry;
        entry["vertical_imbalance_m"] = report.pairs[p].vertical_m;
        entry["depth_imbalance_m"] = report.pairs[p].depth_m;
        pairs[std::string(pair_name(static_cast<JointPair>(p)))] = std::move(entry);
    }
    r["pairs"] = std::move(pairs);
    r["e_b"] = report.aggregate;
    return r;
}

Report score_results(const PerformanceScore& score) {
    Report r;
    r["e_p_m"] = score.e_p_m;
    r["e_s_mps"] = score.e_s_mps;
    r["e_b"] = score.e_b;
    Report w;
    w["w_p"] = score.weights.w_p;
    w["w_s"] = score.weights.w_s;
    w["w_b"] = score.weights.w_b;
    r["weights"] = std::move(w);
    r["ps"] = score.ps;
    return r;
}

Report compare_results(const CompareOutcome& outcome) {
    Report r;
    r["frames"] = outcome.errors.t_s.size();

    Report per_joint = Report::object();
    for (const auto& [joint, trace] : outcome.errors.joints) {
        double pos_sum = 0.0, speed_sum = 0.0;
        for (double v : trace.err_pos_m) pos_sum += v;
        for (double v : trace.err_speed_mps) speed_sum += v;
        const double n = static_cast<double>(trace.err_pos_m.size());
        Report entry;
        entry["mean_pos_error_m"] = pos_sum / n;
        entry["mean_speed_error_mps"] = speed_sum / n;
        per_joint[std::string(joint_name(joint))] = std::move(entry);
    }
    r["per_joint"] = std::move(per_joint);

    r["balance_ref"] = balance_results(outcome.balance_ref);
    r["balance_test"] = balance_results(outcome.balance_test);
    r["balance_diff"] = balance_results(outcome.balance_diff);
    r["score"] = score_results(outcome.score);
    return r;
}

Report validation_results(const ValidationReport& report) {
    Report r;
    r["ok"] = report.ok();
    Report issues = Report::array();
    for (const auto& issue : report.issues) {
        Report entry;
        if (issue.frame_index)
            entry["frame_index"] = *issue.frame_index;
        else
            entry["frame_index"] = nullptr;
        entry["code"] = std::string(issue_code_name(issue.code));
        entry["detail"] = issue.detail;
        issues.push_back(std::move(entry));
    }
    r["issues"] = std::move(issues);
    return r;
}

void write_report(const Report& report, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << report.dump(2) << '\n';
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace liftform

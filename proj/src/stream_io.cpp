#include "liftform/stream_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace liftform {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr const char* kFormatVersion = "1";

void warn_unknown_fields(const json& obj, std::initializer_list<const char*> known,
                         std::size_t line, std::vector<std::string>& warnings) {
    for (const auto& [key, value] : obj.items()) {
        bool found = false;
        for (const char* k : known)
            if (key == k) { found = true; break; }
        if (!found)
            warnings.push_back("line " + std::to_string(line) + ": ignoring unknown field \"" +
                               key + "\"");
    }
}

StreamMeta parse_meta(const json& obj, std::size_t line, std::vector<std::string>& warnings) {
    if (!obj.is_object()) throw ParseError(line, "metadata record must be an object");
    warn_unknown_fields(obj, {"format_version", "subject_id", "height_m", "frame_rate_hz",
                              "exercise_tag"},
                        line, warnings);

    auto version = obj.find("format_version");
    if (version == obj.end()) throw ParseError(line, "missing format_version");
    if (!version->is_string() || version->get<std::string>() != kFormatVersion)
        throw ParseError(line, "unsupported format_version (expected \"1\")");

    StreamMeta meta;
    if (auto it = obj.find("subject_id"); it != obj.end()) {
        if (!it->is_string()) throw ParseError(line, "subject_id must be a string");
        meta.subject_id = it->get<std::string>();
    }
    if (auto it = obj.find("height_m"); it != obj.end()) {
        if (!it->is_number()) throw ParseError(line, "height_m must be a number");
        meta.height_m = it->get<double>();
    }
    if (auto it = obj.find("frame_rate_hz"); it != obj.end()) {
        if (!it->is_number()) throw ParseError(line, "frame_rate_hz must be a number");
        meta.frame_rate_hz = it->get<double>();
    } else {
        throw ParseError(line, "missing frame_rate_hz");
    }
    if (auto it = obj.find("exercise_tag"); it != obj.end()) {
        if (!it->is_string()) throw ParseError(line, "exercise_tag must be a string");
        meta.exercise_tag = it->get<std::string>();
    }
    return meta;
}

Frame parse_frame(const json& obj, std::size_t line, std::size_t frame_index,
                  std::vector<std::string>& warnings, std::vector<ValidationIssue>& issues) {
    if (!obj.is_object()) throw ParseError(line, "frame record must be an object");
    warn_unknown_fields(obj, {"t", "joints"}, line, warnings);

    auto t_it = obj.find("t");
    if (t_it == obj.end() || !t_it->is_number()) throw ParseError(line, "missing numeric t");
    Frame frame(t_it->get<double>());

    auto joints_it = obj.find("joints");
    if (joints_it == obj.end() || !joints_it->is_object())
        throw ParseError(line, "missing joints object");

    for (const auto& [name, value] : joints_it->items()) {
        auto id = joint_from_name(name);
        if (!id) {
            issues.push_back({frame_index, IssueCode::UnknownJoint, name});
            continue;
        }
        if (!value.is_array() || value.size() != 3 || !value[0].is_number() ||
            !value[1].is_number() || !value[2].is_number())
            throw ParseError(line, "joint \"" + name + "\" must be an array of 3 numbers");
        frame.set(*id, {value[0].get<double>(), value[1].get<double>(), value[2].get<double>()});
    }
    return frame;
}

}  // namespace

LoadedStream load_stream(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string() + " for reading");

    LoadedStream loaded;
    std::vector<ValidationIssue> parse_issues;
    std::string line;
    std::size_t line_number = 0;
    bool meta_seen = false;

    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;

        json record;
        try {
            record = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError(line_number, e.what());
        }

        if (!meta_seen) {
            loaded.stream.meta = parse_meta(record, line_number, loaded.warnings);
            meta_seen = true;
        } else {
            loaded.stream.frames.push_back(parse_frame(record, line_number,
                                                       loaded.stream.frames.size(),
                                                       loaded.warnings, parse_issues));
        }
    }
    if (!meta_seen) throw ParseError(line_number == 0 ? 1 : line_number, "file has no records");

    loaded.report = validate_stream(loaded.stream);
    loaded.report.issues.insert(loaded.report.issues.end(), parse_issues.begin(),
                                parse_issues.end());
    return loaded;
}

MotionStream read_stream(const std::filesystem::path& path, bool lenient) {
    LoadedStream loaded = load_stream(path);
    if (!loaded.report.ok() && !lenient) throw ValidationFailedError(std::move(loaded.report));
    return std::move(loaded.stream);
}

void write_stream(const MotionStream& stream, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");

    ordered_json meta;
    meta["format_version"] = kFormatVersion;
    meta["subject_id"] = stream.meta.subject_id;
    if (stream.meta.height_m) meta["height_m"] = *stream.meta.height_m;
    meta["frame_rate_hz"] = stream.meta.frame_rate_hz;
    if (!stream.meta.exercise_tag.empty()) meta["exercise_tag"] = stream.meta.exercise_tag;
    out << meta.dump() << '\n';

    for (const Frame& f : stream.frames) {
        ordered_json record;
        record["t"] = f.t;
        ordered_json joints = ordered_json::object();
        for (JointId j : all_joints()) {
            if (!f.has(j)) continue;
            const Position3& p = f.positions[static_cast<std::size_t>(j)];
            joints[std::string(joint_name(j))] = {p.x, p.y, p.z};
        }
        record["joints"] = std::move(joints);
        out << record.dump() << '\n';
    }
    if (!out) throw IoError("failed writing " + path.string());
}

std::string format_issue(const ValidationIssue& issue) {
    std::string where = issue.frame_index ? "frame " + std::to_string(*issue.frame_index)
                                          : std::string("stream");
    return where + ": " + std::string(issue_code_name(issue.code)) + " (" + issue.detail + ")";
}

}  // namespace liftform

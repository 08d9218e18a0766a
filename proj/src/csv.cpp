#include "liftform/csv.hpp"

#include <charconv>
#include <fstream>

namespace liftform {

namespace {

// Shortest round-trip representation; locale-free and deterministic.
void append_double(std::string& out, double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    out.append(buf, ptr);
    (void)ec;
}

}  // namespace

void export_errors_csv(const ErrorSeries& errors, const std::filesystem::path& path) {
    if (errors.empty()) throw EmptySeriesError("export_errors_csv: empty error series");

    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");

    std::string buf;
    buf.reserve(1 << 16);
    buf += "frame_index,t_s,joint,err_x_m,err_y_m,err_z_m,err_pos_m,err_speed_mps\n";

    for (std::size_t i = 0; i < errors.t_s.size(); ++i) {
        for (const auto& [joint, trace] : errors.joints) {
            buf += std::to_string(i);
            buf += ',';
            append_double(buf, errors.t_s[i]);
            buf += ',';
            buf += joint_name(joint);
            buf += ',';
            append_double(buf, trace.err_x_m[i]);
            buf += ',';
            append_double(buf, trace.err_y_m[i]);
            buf += ',';
            append_double(buf, trace.err_z_m[i]);
            buf += ',';
            append_double(buf, trace.err_pos_m[i]);
            buf += ',';
            append_double(buf, trace.err_speed_mps[i]);
            buf += '\n';
            if (buf.size() > (1 << 15)) {
                out << buf;
                buf.clear();
            }
        }
    }
    out << buf;
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace liftform

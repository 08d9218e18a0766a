#pragma once

#include <filesystem>

#include "liftform/analysis.hpp"

namespace liftform {

// One row per (frame, joint):
// frame_index,t_s,joint,err_x_m,err_y_m,err_z_m,err_pos_m,err_speed_mps
void export_errors_csv(const ErrorSeries& errors, const std::filesystem::path& path);

}  // namespace liftform

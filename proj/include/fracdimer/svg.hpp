// Standalone SVG 1.1 line charts from sweep records: x-axis is t, one
// polyline per group value, deterministic byte-for-byte output.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracdimer/sweep.hpp"

namespace fracdimer {

// Column access by name (all 12 CSV columns); unknown_field_error otherwise.
double record_field(const ResourceRecord& r, const std::string& name);

// y_field must be a measure column (norm_sq, coherence, negativity,
// log_negativity, concurrence, chsh); group_by, when present, a parameter
// column (tau, nu1, nu2, v12, p).  records must be nonempty.
std::string render_svg(const std::vector<ResourceRecord>& records,
                       const std::string& y_field,
                       const std::optional<std::string>& group_by);
void render_svg(const std::vector<ResourceRecord>& records,
                const std::string& y_field,
                const std::optional<std::string>& group_by,
                const std::string& path);

}  // namespace fracdimer

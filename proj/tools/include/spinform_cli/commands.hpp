#pragma once

#include <string>

#include "spinform/field.hpp"
#include "spinform/hypersurface4.hpp"
#include "spinform_cli/config.hpp"
#include "spinform_cli/report.hpp"

namespace spinform::cli {

/// Seed spinor at the first grid node. Both half spinors are non-zero so that
/// ratio-form identities are defined everywhere.
Spinor default_seed();

/// Validates `cfg`, runs the command and records wall time. Files requested by
/// restrict are written here; the JSON report is left to the caller.
Report run(const RunConfig& cfg);

Report run_verify(const RunConfig& cfg);
Report run_restrict(const RunConfig& cfg);
Report run_convergence(const RunConfig& cfg);

/// Header u,v,re_z1,im_z1,re_z2,im_z2 (u,v,w,... for hypersurfaces), one row per node.
std::string field_csv(const SpinorField& field);
std::string field_csv(const SpinorField3& field);

/// Path of the field CSV for restrict: --csv, else the report path with a .csv
/// extension, else SURFACE_field.csv.
std::string csv_path(const RunConfig& cfg);

/// Writes `text` to `path`; throws ConfigError when the file cannot be written.
void write_text(const std::string& path, const std::string& text);

}  // namespace spinform::cli

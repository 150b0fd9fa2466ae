#pragma once

#include <string>

#include "mvt/coeff_table.hpp"

namespace mvt {

/// Text cache format, one record per line:
///
///   mvtr-cache 1 MASUR_VEECH
///   level <g> <n>
///   <g> <n> d1,...,dn grade:p/q[;grade:p/q...]
///
/// Only complete (g,n) levels are written, so every entry in a loaded file is
/// a finished value.
void save_cache(const CoeffTable& table, const std::string& path);

/// Parses a cache file; the theory tag must match the target table's.
void load_cache(CoeffTable& table, const std::string& path);

std::string theory_name(Theory t);

}  // namespace mvt

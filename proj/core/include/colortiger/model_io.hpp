// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#pragma once

#include "colortiger/tiger.hpp"

#include <filesystem>
#include <iosfwd>
#include <variant>

namespace colortiger {

/// Model files are flat `key=value` text:
///
///     format_version=1
///     method=ct            (or cbt)
///     n=8
///     t=0.29999999999999999
///     seed=7
///     provenance=...
///     center0=<r> <g> <b>
///     center1=<r> <g> <b>
///     gains_source=<r> <g> <b>   (cbt only)
///     gains_target=<r> <g> <b>   (cbt only)
///
/// Reals are written with 17 significant digits so a save/load round trip
/// is exact. Lines starting with '#' and blank lines are ignored.
inline constexpr int kModelFormatVersion = 1;

using AnyModel = std::variant<TigerModel, BengalModel>;

void write_model(std::ostream& out, const TigerModel& model);
void write_model(std::ostream& out, const BengalModel& model);

/// Throws InvalidModel on a missing key, unknown method, unsupported
/// format_version or invalid centers/gains.
AnyModel read_model(std::istream& in);

void save_model(const std::filesystem::path& path, const AnyModel& model);
AnyModel load_model(const std::filesystem::path& path);

} // namespace colortiger

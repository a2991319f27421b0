#pragma once

#include "jcas/experiments/sweep.hpp"

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace jcas::experiments
{

/// Column names in output order.
const std::vector<std::string>& csv_columns();

/// Header plus one line per row; numbers with 12 significant digits, missing
/// values empty, text fields quoted when needed.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Throws std::runtime_error for an empty row set or an unwritable path.
void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path);

} // namespace jcas::experiments

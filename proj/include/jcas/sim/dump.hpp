#pragma once

#include "jcas/sim/metrics.hpp"
#include "jcas/sim/snapshot.hpp"

#include <filesystem>
#include <ostream>

namespace jcas::sim
{

/// Header: id,x,y,mode,mark,duty_active,cycle_offset,rx_x,rx_y,e,sinr_db.
/// sinr_db is empty for nodes that do not transmit.
void write_snapshot_csv(std::ostream& out, const Snapshot& s, const NetworkEvaluation& ev);

/// Throws std::runtime_error when the file cannot be written.
void write_snapshot_csv(const std::filesystem::path& path, const Snapshot& s, const NetworkEvaluation& ev);

} // namespace jcas::sim

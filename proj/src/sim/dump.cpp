#include "jcas/sim/dump.hpp"

#include "jcas/units.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace jcas::sim
{

namespace
{

std::string num(double x)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

} // namespace

void write_snapshot_csv(std::ostream& out, const Snapshot& s, const NetworkEvaluation& ev)
{
  out << "id,x,y,mode,mark,duty_active,cycle_offset,rx_x,rx_y,e,sinr_db\n";
  for (std::size_t i = 0; i < s.nodes.size(); ++i)
  {
    const auto& n = s.nodes[i];
    out << n.id << ',' << num(n.position.x) << ',' << num(n.position.y) << ','
        << (n.mode == Mode::radar ? "radar" : "comm") << ',' << num(n.mark) << ',' << (n.duty_active ? 1 : 0) << ','
        << n.cycle_offset << ',' << num(n.rx_position.x) << ',' << num(n.rx_position.y) << ','
        << static_cast<int>(ev.e[i]) << ',';
    if (std::isfinite(ev.sinr[i]) && ev.sinr[i] > 0.0)
      out << num(linear_to_db(ev.sinr[i]));
    out << '\n';
  }
}

void write_snapshot_csv(const std::filesystem::path& path, const Snapshot& s, const NetworkEvaluation& ev)
{
  std::ofstream f(path);
  if (!f)
    throw std::runtime_error("cannot write " + path.string());
  write_snapshot_csv(f, s, ev);
  if (!f)
    throw std::runtime_error("write failed: " + path.string());
}

} // namespace jcas::sim

#include "jcas/experiments/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace jcas::experiments
{

const std::vector<std::string>& csv_columns()
{
  static const std::vector<std::string> cols{
      "lambda",       "tau",           "epsilon",     "eta",           "window",
      "q_w_analytic", "q_w_sim",       "q_w_sim_stderr", "P_s_analytic", "P_s_sim",
      "P_s_sim_stderr", "tput_analytic", "tput_sim",  "tput_sim_stderr", "d_rm_analytic",
      "d_rm_sim",     "d_rm_sim_stderr", "n_reps",    "seed",          "error"};
  return cols;
}

namespace
{

std::string num(double x)
{
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string opt(const std::optional<double>& x)
{
  return x ? num(*x) : std::string();
}

std::string quoted(const std::string& s)
{
  if (s.find_first_of(",\"\r\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s)
  {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

} // namespace

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows)
{
  const auto& cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i)
    out << (i ? "," : "") << cols[i];
  out << "\r\n";
  for (const auto& r : rows)
  {
    out << num(r.lambda) << ',' << num(r.tau) << ',' << num(r.epsilon) << ',' << num(r.eta) << ','
        << quoted(r.window) << ',' << opt(r.q_w_analytic) << ',' << opt(r.q_w_sim) << ',' << opt(r.q_w_sim_stderr)
        << ',' << opt(r.P_s_analytic) << ',' << opt(r.P_s_sim) << ',' << opt(r.P_s_sim_stderr) << ','
        << opt(r.tput_analytic) << ',' << opt(r.tput_sim) << ',' << opt(r.tput_sim_stderr) << ','
        << opt(r.d_rm_analytic) << ',' << opt(r.d_rm_sim) << ',' << opt(r.d_rm_sim_stderr) << ',' << r.n_reps << ','
        << r.seed << ',' << quoted(r.error) << "\r\n";
  }
}

void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path)
{
  if (rows.empty())
    throw std::runtime_error("no rows to write");
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw std::runtime_error("cannot write " + path.string());
  write_csv(f, rows);
  if (!f)
    throw std::runtime_error("write failed: " + path.string());
}

} // namespace jcas::experiments

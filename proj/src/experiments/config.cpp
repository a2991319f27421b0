#include "jcas/experiments/config.hpp"

#include "jcas/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace jcas::experiments
{

ConfigError::ConfigError(int line, std::string key, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", key '" + key + "': " + message
                                  : "key '" + key + "': " + message),
      line_(line), key_(std::move(key))
{
}

std::vector<double> SweepConfig::default_density_grid()
{
  std::vector<double> g;
  for (int i = 0; i < 25; ++i)
    g.push_back(std::pow(10.0, -6.0 + 6.0 * i / 24.0));
  g.back() = 1.0;
  return g;
}

int radar_slots(int M, double epsilon)
{
  const double x = epsilon * M;
  const double r = std::round(x);
  if (std::abs(x - r) > 1e-9)
    throw DomainError("epsilon * M must be an integer");
  if (r <= 0.0 || r >= M)
    throw DomainError("epsilon must give 0 < M_r < M");
  return static_cast<int>(r);
}

namespace
{

std::string trim(std::string_view s)
{
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep)
{
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true)
  {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return out;
}

template <class T>
T parse_number(const std::string& s)
{
  T v{};
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty())
    throw std::invalid_argument("expected a number, got '" + s + "'");
  if constexpr (std::is_floating_point_v<T>)
    if (!std::isfinite(v))
      throw std::invalid_argument("value must be finite");
  return v;
}

std::vector<double> parse_list(const std::string& s)
{
  std::vector<double> out;
  for (const auto& item : split(s, ','))
    out.push_back(parse_number<double>(item));
  return out;
}

Window parse_window(const std::string& s)
{
  const auto parts = split(s, 'x');
  if (parts.size() != 2)
    throw std::invalid_argument("window must look like 150x150");
  return {parse_number<double>(parts[0]), parse_number<double>(parts[1])};
}

std::string fmt(double x)
{
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_list(const std::vector<double>& v)
{
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + fmt(v[i]);
  return out;
}

using Setter = std::function<void(SweepConfig&, const std::string&)>;
using Getter = std::function<std::string(const SweepConfig&)>;

struct Field
{
  Setter set;
  Getter get;
};

template <class M>
Field number_field(M SystemParams::*member)
{
  return {[member](SweepConfig& c, const std::string& v) { c.base.*member = parse_number<M>(v); },
          [member](const SweepConfig& c) {
            if constexpr (std::is_floating_point_v<M>)
              return fmt(c.base.*member);
            else
              return std::to_string(c.base.*member);
          }};
}

Field list_field(std::vector<double> SweepConfig::*member)
{
  return {[member](SweepConfig& c, const std::string& v) { c.*member = parse_list(v); },
          [member](const SweepConfig& c) { return fmt_list(c.*member); }};
}

template <class M>
Field scalar_field(M SweepConfig::*member)
{
  return {[member](SweepConfig& c, const std::string& v) { c.*member = parse_number<M>(v); },
          [member](const SweepConfig& c) {
            if constexpr (std::is_floating_point_v<M>)
              return fmt(c.*member);
            else
              return std::to_string(c.*member);
          }};
}

const std::map<std::string, Field>& fields()
{
  static const std::map<std::string, Field> table = [] {
    std::map<std::string, Field> t;
    t["lambda"] = number_field(&SystemParams::lambda);
    t["tau"] = number_field(&SystemParams::tau);
    t["M"] = number_field(&SystemParams::M);
    t["M_r"] = number_field(&SystemParams::M_r);
    t["eta"] = number_field(&SystemParams::eta);
    t["phi"] = number_field(&SystemParams::phi);
    t["P_tx_dbm"] = number_field(&SystemParams::P_tx_dbm);
    t["f_c"] = number_field(&SystemParams::f_c);
    t["sigma_rcs"] = number_field(&SystemParams::sigma_rcs);
    t["P_fa"] = number_field(&SystemParams::P_fa);
    t["T_db"] = number_field(&SystemParams::T_db);
    t["P_th_dbm"] = number_field(&SystemParams::P_th_dbm);
    t["alpha"] = number_field(&SystemParams::alpha);
    t["r_c"] = number_field(&SystemParams::r_c);
    t["noise_dbm"] = number_field(&SystemParams::noise_dbm);
    t["mu"] = number_field(&SystemParams::mu);
    t["density_grid"] = list_field(&SweepConfig::density_grid);
    t["tau_list"] = list_field(&SweepConfig::tau_list);
    t["epsilon_list"] = list_field(&SweepConfig::epsilon_list);
    t["eta_list"] = list_field(&SweepConfig::eta_list);
    t["n_reps"] = scalar_field(&SweepConfig::n_reps);
    t["seed"] = scalar_field(&SweepConfig::seed);
    t["guard_margin"] = scalar_field(&SweepConfig::guard_margin);
    t["range_ceiling"] = scalar_field(&SweepConfig::range_ceiling);
    t["victims_per_rep"] = scalar_field(&SweepConfig::victims_per_rep);
    t["workers"] = scalar_field(&SweepConfig::workers);
    t["windows"] = {[](SweepConfig& c, const std::string& v) {
                      c.windows.clear();
                      for (const auto& w : split(v, ','))
                        c.windows.push_back(parse_window(w));
                    },
                    [](const SweepConfig& c) {
                      std::string out;
                      for (std::size_t i = 0; i < c.windows.size(); ++i)
                        out += (i ? "," : "") + fmt(c.windows[i].width) + "x" + fmt(c.windows[i].height);
                      return out;
                    }};
    t["engines"] = {[](SweepConfig& c, const std::string& v) {
                      if (v == "analytic")
                        c.engines = Engines::analytic;
                      else if (v == "sim" || v == "simulation")
                        c.engines = Engines::sim;
                      else if (v == "both")
                        c.engines = Engines::both;
                      else
                        throw std::invalid_argument("expected analytic, sim or both");
                    },
                    [](const SweepConfig& c) {
                      return std::string(c.engines == Engines::analytic ? "analytic"
                                         : c.engines == Engines::sim    ? "sim"
                                                                        : "both");
                    }};
    t["h1_strategy"] = {[](SweepConfig& c, const std::string& v) {
                          if (v == "independent")
                            c.h1_strategy = H1Choice::independent;
                          else if (v == "mc-table")
                            c.h1_strategy = H1Choice::mc_table;
                          else
                            throw std::invalid_argument("expected independent or mc-table");
                        },
                        [](const SweepConfig& c) {
                          return std::string(c.h1_strategy == H1Choice::independent ? "independent" : "mc-table");
                        }};
    t["interference"] = {[](SweepConfig& c, const std::string& v) {
                           if (v == "full-sum")
                             c.interference = sim::InterferenceModel::full_sum;
                           else if (v == "nearest-only")
                             c.interference = sim::InterferenceModel::nearest_only;
                           else
                             throw std::invalid_argument("expected full-sum or nearest-only");
                         },
                         [](const SweepConfig& c) {
                           return std::string(c.interference == sim::InterferenceModel::full_sum ? "full-sum"
                                                                                                 : "nearest-only");
                         }};
    return t;
  }();
  return table;
}

void check_list(const std::vector<double>& v, const char* key, const char* name, double lo, double hi)
{
  if (v.empty())
    throw ConfigError(0, key, "list must not be empty");
  for (double x : v)
    if (!(x >= lo && x <= hi))
      throw ConfigError(0, key, std::string(name) + " " + fmt(x) + " outside [" + fmt(lo) + ", " + fmt(hi) + "]");
}

} // namespace

void SweepConfig::validate() const
{
  try
  {
    base.validate();
  }
  catch (const DomainError& e)
  {
    throw ConfigError(0, "base", e.what());
  }
  check_list(density_grid, "density_grid", "lambda", 0.0, 1e6);
  check_list(tau_list, "tau_list", "tau", 0.0, 1.0);
  check_list(eta_list, "eta_list", "eta", 0.0, 1.0);
  check_list(epsilon_list, "epsilon_list", "epsilon", 0.0, 1.0);
  for (double e : epsilon_list)
  {
    try
    {
      radar_slots(base.M, e);
    }
    catch (const DomainError& err)
    {
      throw ConfigError(0, "epsilon_list", err.what());
    }
  }
  if (windows.empty())
    throw ConfigError(0, "windows", "list must not be empty");
  for (const auto& w : windows)
  {
    if (!(w.width > 0.0 && w.height > 0.0))
      throw ConfigError(0, "windows", "window sides must be positive");
    if (!(2.0 * guard_margin < std::min(w.width, w.height)))
      throw ConfigError(0, "guard_margin", "guard margin leaves an empty interior");
  }
  if (!(guard_margin >= 0.0))
    throw ConfigError(0, "guard_margin", "must be >= 0");
  if (n_reps < 1)
    throw ConfigError(0, "n_reps", "must be >= 1");
  if (workers < 1)
    throw ConfigError(0, "workers", "must be >= 1");
  if (victims_per_rep < 1)
    throw ConfigError(0, "victims_per_rep", "must be >= 1");
  if (!(range_ceiling > 0.0))
    throw ConfigError(0, "range_ceiling", "must be positive");
}

void apply_config(SweepConfig& cfg, std::string_view text)
{
  std::map<std::string, int> line_of;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw))
  {
    ++line;
    const auto hash = raw.find('#');
    const std::string body = trim(std::string_view(raw).substr(0, hash));
    if (body.empty())
      continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ConfigError(line, body, "expected 'key = value'");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    const auto it = fields().find(key);
    if (it == fields().end())
      throw ConfigError(line, key, "unknown key");
    try
    {
      it->second.set(cfg, value);
    }
    catch (const std::exception& e)
    {
      throw ConfigError(line, key, e.what());
    }
    line_of[key] = line;
  }
  try
  {
    cfg.validate();
  }
  catch (const ConfigError& e)
  {
    const auto it = line_of.find(e.key());
    const std::string msg = e.what();
    const auto colon = msg.find("': ");
    throw ConfigError(it == line_of.end() ? 0 : it->second, e.key(), msg.substr(colon + 3));
  }
}

SweepConfig parse_config(std::string_view text)
{
  SweepConfig cfg;
  apply_config(cfg, text);
  return cfg;
}

std::string serialize_config(const SweepConfig& cfg)
{
  std::string out;
  for (const auto& [key, field] : fields())
    out += key + " = " + field.get(cfg) + "\n";
  return out;
}

SweepConfig load_config(const std::string& path)
{
  std::ifstream f(path);
  if (!f)
    throw std::runtime_error("cannot read config " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

} // namespace jcas::experiments

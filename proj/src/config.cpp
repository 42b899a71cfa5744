#include "qha/config.hpp"

#include <fstream>
#include <sstream>

namespace qha {

namespace {

std::string trim(const std::string& s) {
  const size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
T parse_number(const std::string& value, const std::string& field) {
  std::stringstream ss(value);
  T v{};
  if (!(ss >> v))
    throw ConfigError("config: cannot parse value '" + value + "' for " + field);
  std::string rest;
  if (ss >> rest)
    throw ConfigError("config: trailing characters in value '" + value + "' for " + field);
  return v;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  std::string section;
  std::stringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("config: malformed section header '" + line + "'");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config: expected key = value, got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string field = section + "." + key;

    if (section == "space") {
      if (key == "n") c.n = parse_number<int>(value, field);
      else if (key == "max_degree") c.max_degree = parse_number<int>(value, field);
      else if (key == "quad_order") c.quad_order = parse_number<int>(value, field);
      else if (key == "kind") c.space_kind = value;
      else throw ConfigError("config: unknown field " + field);
    } else if (section == "grid") {
      if (key == "box_radius") c.box_radius = parse_number<double>(value, field);
      else if (key == "points") c.grid_points = parse_number<int>(value, field);
      else throw ConfigError("config: unknown field " + field);
    } else if (section == "subgroup") {
      if (key == "kind") c.subgroup_kind = value;
      else if (key == "partition") {
        c.partition.clear();
        for (const std::string& p : split_list(value))
          c.partition.push_back(parse_number<int>(p, field));
      } else if (key == "angle_grid") c.angle_grid = parse_number<int>(value, field);
      else if (key == "mc_samples") c.mc_samples = parse_number<int>(value, field);
      else throw ConfigError("config: unknown field " + field);
    } else if (section == "symbols") {
      if (key == "names") c.symbols = split_list(value);
      else throw ConfigError("config: unknown field " + field);
    } else if (section == "schedule") {
      if (key == "t") {
        c.t_schedule.clear();
        for (const std::string& t : split_list(value))
          c.t_schedule.push_back(parse_number<double>(t, field));
      } else throw ConfigError("config: unknown field " + field);
    } else if (section == "tolerances") {
      if (key == "scale") c.tol_scale = parse_number<double>(value, field);
      else throw ConfigError("config: unknown field " + field);
    } else if (section == "run") {
      if (key == "seed") c.seed = parse_number<unsigned long>(value, field);
      else if (key == "out_dir") c.out_dir = value;
      else throw ConfigError("config: unknown field " + field);
    } else {
      throw ConfigError("config: unknown section [" + section + "]");
    }
  }

  if (c.n < 1 || c.n > 2) throw ConfigError("config: space.n must be 1 or 2");
  if (c.max_degree < 0 || c.max_degree > 64)
    throw ConfigError("config: space.max_degree out of range [0, 64]");
  if (c.space_kind != "fock" && c.space_kind != "bergman")
    throw ConfigError("config: space.kind must be fock or bergman");
  if (c.box_radius <= 0.0) throw ConfigError("config: grid.box_radius must be positive");
  if (c.grid_points < 8 || (c.grid_points & (c.grid_points - 1)) != 0)
    throw ConfigError("config: grid.points must be a power of two >= 8");
  if (c.t_schedule.empty()) throw ConfigError("config: schedule.t must be nonempty");
  if (c.tol_scale <= 0.0) throw ConfigError("config: tolerances.scale must be positive");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream out;
  out.precision(17);
  out << "[space]\n"
      << "n = " << c.n << "\n"
      << "max_degree = " << c.max_degree << "\n"
      << "quad_order = " << c.quad_order << "\n"
      << "kind = " << c.space_kind << "\n\n";
  out << "[grid]\n"
      << "box_radius = " << c.box_radius << "\n"
      << "points = " << c.grid_points << "\n\n";
  out << "[subgroup]\n"
      << "kind = " << c.subgroup_kind << "\n"
      << "partition = ";
  for (size_t i = 0; i < c.partition.size(); ++i)
    out << (i ? ", " : "") << c.partition[i];
  out << "\n"
      << "angle_grid = " << c.angle_grid << "\n"
      << "mc_samples = " << c.mc_samples << "\n\n";
  out << "[symbols]\nnames = ";
  for (size_t i = 0; i < c.symbols.size(); ++i) out << (i ? ", " : "") << c.symbols[i];
  out << "\n\n[schedule]\nt = ";
  for (size_t i = 0; i < c.t_schedule.size(); ++i) out << (i ? ", " : "") << c.t_schedule[i];
  out << "\n\n[tolerances]\nscale = " << c.tol_scale << "\n\n";
  out << "[run]\n"
      << "seed = " << c.seed << "\n"
      << "out_dir = " << c.out_dir << "\n";
  return out.str();
}

}  // namespace qha

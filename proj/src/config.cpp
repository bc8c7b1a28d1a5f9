#include "platemps/config.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace platemps {

namespace {

struct RawEntry {
  std::string value;
  int line = 0;
  bool used = false;
};

struct Parser {
  std::string name;
  std::map<std::string, RawEntry> entries;
  std::vector<std::pair<std::string, RawEntry>> arcs;  // bc.arc.N in file order

  [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
    const auto it = entries.find(key);
    throw ConfigError(name, it != entries.end() ? it->second.line : 0, msg);
  }

  bool has(const std::string& key) const { return entries.count(key) > 0; }

  std::string get_string(const std::string& key, const std::string& dflt) {
    auto it = entries.find(key);
    if (it == entries.end()) return dflt;
    it->second.used = true;
    return it->second.value;
  }

  double get_double(const std::string& key, double dflt) {
    auto it = entries.find(key);
    if (it == entries.end()) return dflt;
    it->second.used = true;
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(it->second.value, &pos);
    } catch (const std::exception&) {
      fail(key, key + " must be a number, got '" + it->second.value + "'");
    }
    if (pos != it->second.value.size())
      fail(key, key + " must be a number, got '" + it->second.value + "'");
    return v;
  }

  long long get_int(const std::string& key, long long dflt) {
    auto it = entries.find(key);
    if (it == entries.end()) return dflt;
    it->second.used = true;
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(it->second.value, &pos);
    } catch (const std::exception&) {
      fail(key, key + " must be an integer, got '" + it->second.value + "'");
    }
    if (pos != it->second.value.size())
      fail(key, key + " must be an integer, got '" + it->second.value + "'");
    return v;
  }

  bool get_bool(const std::string& key, bool dflt) {
    auto it = entries.find(key);
    if (it == entries.end()) return dflt;
    it->second.used = true;
    const std::string& v = it->second.value;
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    fail(key, key + " must be a boolean, got '" + v + "'");
  }

  std::vector<double> get_doubles(const std::string& key) {
    auto it = entries.find(key);
    if (it == entries.end()) return {};
    it->second.used = true;
    std::vector<double> out;
    std::istringstream ss(it->second.value);
    std::string tok;
    while (ss >> tok) {
      try {
        std::size_t pos = 0;
        out.push_back(std::stod(tok, &pos));
        if (pos != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        fail(key, key + " must be a list of numbers, got '" + tok + "'");
      }
    }
    return out;
  }
};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  const auto b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

Parser tokenize(std::istream& in, const std::string& name) {
  Parser p;
  p.name = name;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError(name, line, "expected 'key = value', got '" + s + "'");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty()) throw ConfigError(name, line, "empty key");
    RawEntry entry{value, line, false};
    if (key.rfind("bc.arc.", 0) == 0) {
      p.arcs.emplace_back(key, entry);
      continue;
    }
    if (p.entries.count(key))
      throw ConfigError(name, line, "duplicate key '" + key + "'");
    p.entries.emplace(key, entry);
  }
  return p;
}

BcMap::Arc parse_arc(const Parser& p, const std::string& key, const RawEntry& e) {
  // t0 : t1 : tag
  std::vector<std::string> parts;
  std::string cur;
  for (const char c : e.value) {
    if (c == ':') {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(trim(cur));
  if (parts.size() != 3)
    throw ConfigError(p.name, e.line, key + " must be 't0 : t1 : tag'");
  BcMap::Arc arc;
  try {
    arc.t0 = std::stod(parts[0]);
    arc.t1 = std::stod(parts[1]);
    arc.tag = bc_tag_from_string(parts[2]);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& ex) {
    throw ConfigError(p.name, e.line, key + ": " + ex.what());
  }
  if (!(arc.t0 < arc.t1)) throw ConfigError(p.name, e.line, key + ": need t0 < t1");
  return arc;
}

RunConfig build(Parser& p) {
  RunConfig c;
  c.domain_kind = p.get_string("domain.kind", c.domain_kind);
  if (c.domain_kind != "circle" && c.domain_kind != "paper-shape2" && c.domain_kind != "trig")
    p.fail("domain.kind", "domain.kind must be circle, paper-shape2 or trig");
  c.radius = p.get_double("domain.radius", c.radius);
  if (!(c.radius > 0.0)) p.fail("domain.radius", "domain.radius must be positive");
  c.x_cos = p.get_doubles("domain.x_cos");
  c.x_sin = p.get_doubles("domain.x_sin");
  c.y_cos = p.get_doubles("domain.y_cos");
  c.y_sin = p.get_doubles("domain.y_sin");
  if (c.domain_kind == "trig" && c.x_cos.empty() && c.x_sin.empty())
    p.fail("domain.kind", "trig domain needs domain.x_cos/x_sin/y_cos/y_sin coefficients");

  c.material.D = p.get_double("material.D", c.material.D);
  c.material.rho = p.get_double("material.rho", c.material.rho);
  c.material.h = p.get_double("material.h", c.material.h);
  c.material.T = p.get_double("material.T", c.material.T);
  c.material.nu = p.get_double("material.nu", c.material.nu);
  if (!(c.material.D > 0.0)) p.fail("material.D", "material.D must be positive");
  if (!(c.material.rho > 0.0)) p.fail("material.rho", "material.rho must be positive");
  if (!(c.material.h > 0.0)) p.fail("material.h", "material.h must be positive");
  if (!(c.material.T >= 0.0)) p.fail("material.T", "material.T must be non-negative");
  if (!(c.material.nu >= 0.0 && c.material.nu < 0.5))
    p.fail("material.nu", "material.nu must be in [0, 0.5)");

  const std::string all = p.get_string("bc.all", "clamped");
  try {
    c.bc.default_tag = bc_tag_from_string(all);
  } catch (const std::exception& ex) {
    p.fail("bc.all", ex.what());
  }
  for (const auto& [key, entry] : p.arcs) c.bc.arcs.push_back(parse_arc(p, key, entry));

  const std::string kind = p.get_string("basis.kind", "pw");
  if (kind == "pw") {
    c.basis_kind = BasisKind::PlaneWave;
  } else if (kind == "fb") {
    c.basis_kind = BasisKind::FourierBessel;
  } else {
    p.fail("basis.kind", "basis.kind must be pw or fb");
  }
  c.count_per_k = p.get_double("basis.count_per_k", c.count_per_k);
  if (c.count_per_k < 0.0) p.fail("basis.count_per_k", "basis.count_per_k must be non-negative");
  c.count = static_cast<int>(p.get_int("basis.count", c.count));
  c.count_osc = static_cast<int>(p.get_int("basis.count_osc", c.count_osc));
  c.count_eva = static_cast<int>(p.get_int("basis.count_eva", c.count_eva));
  if (c.count < 0 || c.count_osc < 0 || c.count_eva < 0)
    p.fail("basis.count", "basis counts must be non-negative");
  c.precondition = p.get_bool("basis.precondition", c.precondition);

  c.boundary_n = static_cast<int>(p.get_int("sampling.boundary", c.boundary_n));
  if (c.boundary_n < 16) p.fail("sampling.boundary", "sampling.boundary must be at least 16");
  c.interior_n = static_cast<int>(p.get_int("sampling.interior", c.interior_n));
  if (c.interior_n < 1) p.fail("sampling.interior", "sampling.interior must be positive");
  const long long seed = p.get_int("sampling.seed", static_cast<long long>(c.seed));
  if (seed < 0) p.fail("sampling.seed", "sampling.seed must be non-negative");
  c.seed = static_cast<std::uint64_t>(seed);
  c.interior_density = p.get_string("sampling.interior_density", c.interior_density);
  if (c.interior_density != "uniform")
    p.fail("sampling.interior_density",
           "sampling.interior_density: only 'uniform' is implemented");

  c.k_min = p.get_double("scan.k_min", c.k_min);
  c.k_max = p.get_double("scan.k_max", c.k_max);
  c.step = p.get_double("scan.step", c.step);
  if (!p.has("scan.k_min") || !p.has("scan.k_max"))
    throw ConfigError(p.name, 0, "scan.k_min and scan.k_max are required");
  if (!(c.k_min > 0.0)) p.fail("scan.k_min", "scan.k_min must be positive");
  if (!(c.k_min < c.k_max)) p.fail("scan.k_max", "scan.k_max must exceed scan.k_min");
  if (!(c.step > 0.0)) p.fail("scan.step", "scan.step must be positive");
  c.branches = static_cast<int>(p.get_int("scan.branches", c.branches));
  if (c.branches < 1) p.fail("scan.branches", "scan.branches must be at least 1");
  c.dip_ratio = p.get_double("scan.dip_ratio", c.dip_ratio);
  if (!(c.dip_ratio > 0.0)) p.fail("scan.dip_ratio", "scan.dip_ratio must be positive");
  c.reg_eps = p.get_double("scan.reg_eps", c.reg_eps);
  if (!(c.reg_eps > 0.0 && c.reg_eps < 1.0))
    p.fail("scan.reg_eps", "scan.reg_eps must be in (0, 1)");

  c.out_dir = p.get_string("output.dir", c.out_dir);
  c.raster = static_cast<int>(p.get_int("output.raster", c.raster));
  if (c.raster < 0) p.fail("output.raster", "output.raster must be non-negative");

  for (const auto& [key, entry] : p.entries)
    if (!entry.used) throw ConfigError(p.name, entry.line, "unknown key '" + key + "'");
  return c;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_list(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += fmt(v[i]);
  }
  return out;
}

}  // namespace

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, 0, "cannot open config file");
  Parser p = tokenize(in, path);
  return build(p);
}

RunConfig parse_config_text(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  Parser p = tokenize(in, name);
  return build(p);
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream out;
  out << "domain.kind = " << c.domain_kind << "\n";
  if (c.domain_kind == "circle") out << "domain.radius = " << fmt(c.radius) << "\n";
  if (c.domain_kind == "trig") {
    if (!c.x_cos.empty()) out << "domain.x_cos = " << fmt_list(c.x_cos) << "\n";
    if (!c.x_sin.empty()) out << "domain.x_sin = " << fmt_list(c.x_sin) << "\n";
    if (!c.y_cos.empty()) out << "domain.y_cos = " << fmt_list(c.y_cos) << "\n";
    if (!c.y_sin.empty()) out << "domain.y_sin = " << fmt_list(c.y_sin) << "\n";
  }
  out << "material.D = " << fmt(c.material.D) << "\n";
  out << "material.rho = " << fmt(c.material.rho) << "\n";
  out << "material.h = " << fmt(c.material.h) << "\n";
  out << "material.T = " << fmt(c.material.T) << "\n";
  out << "material.nu = " << fmt(c.material.nu) << "\n";
  out << "bc.all = " << to_string(c.bc.default_tag) << "\n";
  for (std::size_t i = 0; i < c.bc.arcs.size(); ++i)
    out << "bc.arc." << i << " = " << fmt(c.bc.arcs[i].t0) << " : " << fmt(c.bc.arcs[i].t1)
        << " : " << to_string(c.bc.arcs[i].tag) << "\n";
  out << "basis.kind = " << (c.basis_kind == BasisKind::PlaneWave ? "pw" : "fb") << "\n";
  out << "basis.count_per_k = " << fmt(c.count_per_k) << "\n";
  out << "basis.count = " << c.count << "\n";
  out << "basis.count_osc = " << c.count_osc << "\n";
  out << "basis.count_eva = " << c.count_eva << "\n";
  out << "basis.precondition = " << (c.precondition ? "true" : "false") << "\n";
  out << "sampling.boundary = " << c.boundary_n << "\n";
  out << "sampling.interior = " << c.interior_n << "\n";
  out << "sampling.seed = " << c.seed << "\n";
  out << "sampling.interior_density = " << c.interior_density << "\n";
  out << "scan.k_min = " << fmt(c.k_min) << "\n";
  out << "scan.k_max = " << fmt(c.k_max) << "\n";
  out << "scan.step = " << fmt(c.step) << "\n";
  out << "scan.branches = " << c.branches << "\n";
  out << "scan.dip_ratio = " << fmt(c.dip_ratio) << "\n";
  out << "scan.reg_eps = " << fmt(c.reg_eps) << "\n";
  out << "output.dir = " << c.out_dir << "\n";
  out << "output.raster = " << c.raster << "\n";
  return out.str();
}

}  // namespace platemps

#include "gabor/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "gabor/error.hpp"
#include "gabor/io.hpp"
#include "gabor/toml_lite.hpp"

namespace gabor {
namespace {

[[noreturn]] void config_error(const std::string& key, const std::string& what) {
  throw Error(ErrorCode::ConfigError, key + ": " + what, key);
}

std::string qualified(const std::string& table, const std::string& key) {
  return table.empty() ? key : table + "." + key;
}

class Reader {
 public:
  explicit Reader(toml::Document doc) : doc_(std::move(doc)) {
    static const std::map<std::string, std::set<std::string>> known = {
        {"", {}},
        {"window", {"kind", "dimension", "normalized", "file"}},
        {"lattice", {"generator"}},
        {"pointset", {"file"}},
        {"weight", {"kind", "s", "a", "b"}},
        {"sweep", {"radii", "start", "stop", "step", "bound_radius"}},
        {"gap", {"threshold", "ratio"}},
        {"contour", {"radius", "nodes"}},
        {"kernel", {"radius", "lemma_radii"}},
        {"caps", {"max_points"}},
        {"output", {"dir", "plot", "csv_dir"}},
        {"run", {"seed", "threads"}},
    };
    for (const auto& [table, keys] : doc_) {
      const auto it = known.find(table);
      if (it == known.end()) config_error(table, "unknown table");
      for (const auto& [key, value] : keys) {
        if (!it->second.count(key)) config_error(qualified(table, key), "unknown key");
      }
    }
  }

  const toml::Value* find(const std::string& table, const std::string& key) const {
    const auto t = doc_.find(table);
    if (t == doc_.end()) return nullptr;
    const auto k = t->second.find(key);
    return k == t->second.end() ? nullptr : &k->second;
  }

  bool has_table(const std::string& table) const { return doc_.count(table) > 0; }

  void number(const std::string& table, const std::string& key, double& out) const {
    if (const auto* v = find(table, key)) {
      if (!v->is_number()) config_error(qualified(table, key), "expected a number");
      out = std::get<double>(v->data);
    }
  }

  template <typename Int>
  void integer(const std::string& table, const std::string& key, Int& out) const {
    if (const auto* v = find(table, key)) {
      if (!v->is_number() || !v->integer) config_error(qualified(table, key), "expected an integer");
      const double d = std::get<double>(v->data);
      if (d < 0) config_error(qualified(table, key), "must be nonnegative");
      out = static_cast<Int>(d);
    }
  }

  void boolean(const std::string& table, const std::string& key, bool& out) const {
    if (const auto* v = find(table, key)) {
      if (!v->is_bool()) config_error(qualified(table, key), "expected true or false");
      out = std::get<bool>(v->data);
    }
  }

  void string(const std::string& table, const std::string& key, std::string& out) const {
    if (const auto* v = find(table, key)) {
      if (!v->is_string()) config_error(qualified(table, key), "expected a string");
      out = std::get<std::string>(v->data);
    }
  }

  // Flat numeric array; nested rows (a matrix) are concatenated row by row.
  void numbers(const std::string& table, const std::string& key, std::vector<double>& out) const {
    const auto* v = find(table, key);
    if (!v) return;
    out.clear();
    if (!v->is_array()) config_error(qualified(table, key), "expected an array");
    for (const auto& item : std::get<std::vector<toml::Value>>(v->data)) {
      if (item.is_number()) {
        out.push_back(std::get<double>(item.data));
      } else if (item.is_array()) {
        for (const auto& inner : std::get<std::vector<toml::Value>>(item.data)) {
          if (!inner.is_number()) config_error(qualified(table, key), "expected numbers");
          out.push_back(std::get<double>(inner.data));
        }
      } else {
        config_error(qualified(table, key), "expected numbers");
      }
    }
  }

 private:
  toml::Document doc_;
};

std::string render_list(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_double(v[i]);
  }
  return s + "]";
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void check(bool ok, const std::string& key, const std::string& what) {
  if (!ok) config_error(key, what);
}

}  // namespace

void RunConfig::validate() {
  check(window_kind == "gaussian" || window_kind == "sampled", "window.kind", "must be \"gaussian\" or \"sampled\"");
  check(dimension >= 1 && dimension <= 3, "window.dimension", "must be 1, 2 or 3");
  if (window_kind == "sampled") {
    check(dimension == 1, "window.dimension", "sampled windows are 1-d");
    check(!window_file.empty(), "window.file", "sampled windows need a CSV file");
  }
  const std::size_t n = static_cast<std::size_t>(2 * dimension);
  if (generator.empty()) {
    generator.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) generator[i * n + i] = std::sqrt(0.5);
  }
  check(generator.size() == n * n, "lattice.generator", "needs (2d)^2 = " + std::to_string(n * n) + " entries");
  for (double g : generator) check(std::isfinite(g), "lattice.generator", "entries must be finite");

  check(weight_kind == "constant" || weight_kind == "polynomial" || weight_kind == "subexponential" ||
            weight_kind == "exponential",
        "weight.kind", "must be constant, polynomial, subexponential or exponential");
  check(std::isfinite(weight_s) && weight_s >= 0, "weight.s", "must be >= 0");
  if (weight_kind == "subexponential" || weight_kind == "exponential") {
    check(std::isfinite(weight_a) && weight_a > 0, "weight.a", "must be > 0");
  }
  if (weight_kind == "subexponential") {
    check(std::isfinite(weight_b) && weight_b > 0 && weight_b < 1, "weight.b", "must lie in (0, 1)");
  }

  if (radii.empty()) {
    for (int k = 1; k <= 8; ++k) radii.push_back(0.5 * k);
  }
  for (std::size_t i = 0; i < radii.size(); ++i) {
    check(std::isfinite(radii[i]) && radii[i] >= 0, "sweep.radii", "radii must be finite and nonnegative");
    if (i > 0 && !(radii[i] >= radii[i - 1])) {
      throw Error(ErrorCode::RadiiNotAscending, "sweep.radii: radii must be ascending", "sweep.radii");
    }
  }
  check(std::isfinite(bound_radius) && bound_radius > radii.back(), "sweep.bound_radius",
        "must exceed the largest sweep radius");

  check(std::isfinite(gap_threshold) && gap_threshold > 0 && gap_threshold < 1, "gap.threshold", "must lie in (0, 1)");
  check(std::isfinite(gap_ratio) && gap_ratio >= 1, "gap.ratio", "must be >= 1");
  check(std::isfinite(contour_radius) && contour_radius >= 0, "contour.radius", "must be >= 0 (0 selects automatically)");
  check(contour_nodes >= 16, "contour.nodes", "must be >= 16");
  check(std::isfinite(kernel_radius) && kernel_radius > 0, "kernel.radius", "must be > 0");
  for (double r : lemma_radii) {
    check(std::isfinite(r) && r >= 0 && r < kernel_radius, "kernel.lemma_radii", "must lie in [0, kernel.radius)");
  }
  check(max_points >= 1, "caps.max_points", "must be positive");
  check(!out_dir.empty(), "output.dir", "must not be empty");
}

std::filesystem::path RunConfig::resolve(const std::string& file) const {
  const std::filesystem::path p(file);
  return p.is_absolute() ? p : base_dir / p;
}

RunConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
  const Reader r(toml::parse(text));
  RunConfig cfg;
  cfg.base_dir = base_dir;
  r.string("window", "kind", cfg.window_kind);
  r.integer("window", "dimension", cfg.dimension);
  r.boolean("window", "normalized", cfg.normalized);
  r.string("window", "file", cfg.window_file);
  r.numbers("lattice", "generator", cfg.generator);
  r.string("pointset", "file", cfg.pointset_file);
  if (r.has_table("lattice") && r.has_table("pointset")) config_error("pointset", "give either [lattice] or [pointset]");
  r.string("weight", "kind", cfg.weight_kind);
  r.number("weight", "s", cfg.weight_s);
  r.number("weight", "a", cfg.weight_a);
  r.number("weight", "b", cfg.weight_b);

  r.numbers("sweep", "radii", cfg.radii);
  if (r.find("sweep", "start") || r.find("sweep", "stop") || r.find("sweep", "step")) {
    if (r.find("sweep", "radii")) config_error("sweep.radii", "give either radii or start/stop/step");
    double start = 0.5, stop = 4.0, step = 0.5;
    r.number("sweep", "start", start);
    r.number("sweep", "stop", stop);
    r.number("sweep", "step", step);
    check(std::isfinite(start) && start >= 0, "sweep.start", "must be finite and nonnegative");
    check(std::isfinite(step) && step > 0, "sweep.step", "must be > 0");
    check(std::isfinite(stop) && stop >= start, "sweep.stop", "must be >= sweep.start");
    const long count = std::lround(std::floor((stop - start) / step + 1e-9));
    check(count < 10000, "sweep.step", "too many radii");
    cfg.radii.clear();
    for (long k = 0; k <= count; ++k) cfg.radii.push_back(start + static_cast<double>(k) * step);
  }
  r.number("sweep", "bound_radius", cfg.bound_radius);
  r.number("gap", "threshold", cfg.gap_threshold);
  r.number("gap", "ratio", cfg.gap_ratio);
  r.number("contour", "radius", cfg.contour_radius);
  r.integer("contour", "nodes", cfg.contour_nodes);
  r.number("kernel", "radius", cfg.kernel_radius);
  r.numbers("kernel", "lemma_radii", cfg.lemma_radii);
  r.integer("caps", "max_points", cfg.max_points);
  r.string("output", "dir", cfg.out_dir);
  r.boolean("output", "plot", cfg.plot);
  r.string("output", "csv_dir", cfg.csv_dir);
  r.integer("run", "seed", cfg.seed);
  r.integer("run", "threads", cfg.threads);
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot read config " + path.string(), "config");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.parent_path().empty() ? std::filesystem::path(".") : path.parent_path());
}

std::string print_config(const RunConfig& cfg) {
  std::ostringstream o;
  o << "[window]\n"
    << "kind = " << quoted(cfg.window_kind) << "\n"
    << "dimension = " << cfg.dimension << "\n"
    << "normalized = " << (cfg.normalized ? "true" : "false") << "\n"
    << "file = " << quoted(cfg.window_file) << "\n\n";
  if (cfg.pointset_file.empty()) {
    o << "[lattice]\ngenerator = " << render_list(cfg.generator) << "\n\n";
  } else {
    o << "[pointset]\nfile = " << quoted(cfg.pointset_file) << "\n\n";
  }
  o << "[weight]\n"
    << "kind = " << quoted(cfg.weight_kind) << "\n"
    << "s = " << format_double(cfg.weight_s) << "\n"
    << "a = " << format_double(cfg.weight_a) << "\n"
    << "b = " << format_double(cfg.weight_b) << "\n\n"
    << "[sweep]\n"
    << "radii = " << render_list(cfg.radii) << "\n"
    << "bound_radius = " << format_double(cfg.bound_radius) << "\n\n"
    << "[gap]\n"
    << "threshold = " << format_double(cfg.gap_threshold) << "\n"
    << "ratio = " << format_double(cfg.gap_ratio) << "\n\n"
    << "[contour]\n"
    << "radius = " << format_double(cfg.contour_radius) << "\n"
    << "nodes = " << cfg.contour_nodes << "\n\n"
    << "[kernel]\n"
    << "radius = " << format_double(cfg.kernel_radius) << "\n"
    << "lemma_radii = " << render_list(cfg.lemma_radii) << "\n\n"
    << "[caps]\nmax_points = " << cfg.max_points << "\n\n"
    << "[output]\n"
    << "dir = " << quoted(cfg.out_dir) << "\n"
    << "plot = " << (cfg.plot ? "true" : "false") << "\n"
    << "csv_dir = " << quoted(cfg.csv_dir) << "\n\n"
    << "[run]\n"
    << "seed = " << cfg.seed << "\n"
    << "threads = " << cfg.threads << "\n";
  return o.str();
}

WindowSpec make_window(const RunConfig& cfg) {
  if (cfg.window_kind == "gaussian") return WindowSpec::gaussian(cfg.dimension, cfg.normalized);
  return WindowSpec::from_csv(cfg.resolve(cfg.window_file), cfg.normalized);
}

WeightSpec make_weight(const RunConfig& cfg) {
  if (cfg.weight_kind == "constant") return WeightSpec::constant();
  if (cfg.weight_kind == "polynomial") return WeightSpec::polynomial(cfg.weight_s);
  if (cfg.weight_kind == "exponential") return WeightSpec::exponential(cfg.weight_a);
  return WeightSpec::subexponential(cfg.weight_a, cfg.weight_b);
}

LatticeSpec make_lattice(const RunConfig& cfg) {
  try {
    return LatticeSpec::make(cfg.dimension, cfg.generator);
  } catch (const Error& e) {
    throw Error(ErrorCode::ConfigError, std::string("lattice.generator: ") + e.what(), "lattice.generator");
  }
}

PointSet make_pointset(const RunConfig& cfg, double n) {
  if (!cfg.pointset_file.empty()) return read_pointset_csv(cfg.resolve(cfg.pointset_file), cfg.dimension, n);
  return enumerate_lattice_in_ball(make_lattice(cfg), n, cfg.max_points);
}

}  // namespace gabor

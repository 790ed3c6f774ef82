#include <ellbench/bench.hpp>

#include <json.hpp>

namespace ellbench {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const char* where) {
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const char* key : allowed)
      if (item.key() == key) { ok = true; break; }
    if (!ok)
      throw Error(Errc::invalid_argument,
                  std::string("unknown key \"") + item.key() + "\" in " + where);
  }
}

double number_at(const json& obj, const char* key, const char* where) {
  if (!obj.contains(key))
    throw Error(Errc::invalid_argument,
                std::string("missing key \"") + key + "\" in " + where);
  const json& v = obj.at(key);
  if (!v.is_number())
    throw Error(Errc::invalid_argument,
                std::string("key \"") + key + "\" in " + where + " must be a number");
  return v.get<double>();
}

Geometry parse_domain(const json& dom) {
  if (!dom.is_object())
    throw Error(Errc::invalid_argument, "\"domain\" must be an object");
  if (!dom.contains("type") || !dom.at("type").is_string())
    throw Error(Errc::invalid_argument, "\"domain.type\" must be a string");
  const std::string type = dom.at("type").get<std::string>();
  if (type == "rectangle") {
    reject_unknown(dom, {"type", "x0", "y0"}, "domain");
    return Geometry::rectangle(number_at(dom, "x0", "domain"),
                               number_at(dom, "y0", "domain"));
  }
  if (type == "annulus") {
    reject_unknown(dom, {"type", "r1", "r2"}, "domain");
    return Geometry::annulus(number_at(dom, "r1", "domain"),
                             number_at(dom, "r2", "domain"));
  }
  if (type == "shell") {
    reject_unknown(dom, {"type", "r1", "r2"}, "domain");
    return Geometry::shell(number_at(dom, "r1", "domain"),
                           number_at(dom, "r2", "domain"));
  }
  throw Error(Errc::invalid_argument,
              "domain.type must be rectangle, annulus or shell (got \"" + type + "\")");
}

} // namespace

BenchConfig default_config() {
  BenchConfig cfg;
  cfg.geometry = Geometry::rectangle(1.0, 1.0);
  cfg.data.g = 1.0;
  cfg.data.q = 0.0;
  cfg.data.b = 0.0;
  cfg.data.z_d = 0.0;
  return cfg;
}

BenchConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::invalid_argument, std::string("config ") + e.what());
  }
  if (!root.is_object())
    throw Error(Errc::invalid_argument, "config root must be a JSON object");
  reject_unknown(root, {"domain", "data", "regularization", "alpha_grid", "n", "tolerances"},
                 "config");
  for (const char* key : {"domain", "data", "regularization"})
    if (!root.contains(key))
      throw Error(Errc::invalid_argument, std::string("missing key \"") + key + "\" in config");

  BenchConfig cfg;
  cfg.geometry = parse_domain(root.at("domain"));

  const json& data = root.at("data");
  reject_unknown(data, {"g", "q", "b", "z_d"}, "data");
  cfg.data.g = number_at(data, "g", "data");
  cfg.data.q = number_at(data, "q", "data");
  cfg.data.b = number_at(data, "b", "data");
  cfg.data.z_d = number_at(data, "z_d", "data");

  const json& reg = root.at("regularization");
  reject_unknown(reg, {"M1", "M2", "M3", "M4", "M5"}, "regularization");
  cfg.data.m1 = number_at(reg, "M1", "regularization");
  cfg.data.m2 = number_at(reg, "M2", "regularization");
  cfg.data.m3 = number_at(reg, "M3", "regularization");
  cfg.data.m4 = number_at(reg, "M4", "regularization");
  cfg.data.m5 = number_at(reg, "M5", "regularization");
  validate(cfg.data);

  if (root.contains("alpha_grid")) {
    const json& grid = root.at("alpha_grid");
    reject_unknown(grid, {"start", "stop", "points", "spacing"}, "alpha_grid");
    cfg.alphas.start = number_at(grid, "start", "alpha_grid");
    cfg.alphas.stop = number_at(grid, "stop", "alpha_grid");
    cfg.alphas.points = static_cast<int>(number_at(grid, "points", "alpha_grid"));
    if (grid.contains("spacing")) {
      if (!grid.at("spacing").is_string() ||
          grid.at("spacing").get<std::string>() != "geometric")
        throw Error(Errc::invalid_argument, "alpha_grid.spacing must be \"geometric\"");
    }
    if (!(cfg.alphas.start < cfg.alphas.stop))
      throw Error(Errc::invalid_argument, "alpha_grid requires start < stop");
    if (cfg.alphas.points < 4)
      throw Error(Errc::invalid_argument, "alpha_grid requires points >= 4");
  }
  if (root.contains("n")) {
    cfg.grid_n = static_cast<int>(number_at(root, "n", "config"));
    if (cfg.grid_n < 8 || cfg.grid_n % 2 != 0)
      throw Error(Errc::invalid_argument, "n must be even and >= 8");
  }
  if (root.contains("tolerances")) {
    const json& tol = root.at("tolerances");
    reject_unknown(tol, {"self", "oracle", "limit"}, "tolerances");
    if (tol.contains("self")) cfg.tol.self = number_at(tol, "self", "tolerances");
    if (tol.contains("oracle")) cfg.tol.oracle = number_at(tol, "oracle", "tolerances");
    if (tol.contains("limit")) cfg.tol.limit = number_at(tol, "limit", "tolerances");
    for (double t : {cfg.tol.self, cfg.tol.oracle, cfg.tol.limit})
      if (!(t > 0.0))
        throw Error(Errc::invalid_argument, "tolerances must be positive");
  }
  return cfg;
}

ControlKind parse_problem(const std::string& name) {
  if (name == "g") return ControlKind::distributed;
  if (name == "q") return ControlKind::flux;
  if (name == "b") return ControlKind::temperature;
  if (name == "gq") return ControlKind::simultaneous;
  throw Error(Errc::invalid_argument, "unknown problem \"" + name + "\" (expected g|q|b|gq)");
}

} // namespace ellbench

#include "fucik/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fucik/errors.hpp"

namespace fucik {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw ConfigError(path + ": " + why);
}

const json& require(const json& obj, const char* key,
                    const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing");
  return *it;
}

double number_at(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

int int_at(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<int>();
}

FunctionSpec parse_function(const json& v, const std::string& path) {
  FunctionSpec fs;
  const json& kind = require(v, "kind", path);
  if (!kind.is_string()) fail(path + ".kind", "expected a string");
  std::string k = kind.get<std::string>();
  if (k == "constant") {
    fs.kind = CoefficientFn::Kind::constant;
    fs.value = number_at(require(v, "value", path), path + ".value");
  } else if (k == "pwlinear") {
    fs.kind = CoefficientFn::Kind::pwlinear;
    const json& pts = require(v, "points", path);
    if (!pts.is_array() || pts.size() < 2)
      fail(path + ".points", "expected an array of at least 2 [t, y] pairs");
    for (size_t i = 0; i < pts.size(); ++i) {
      std::string pp = path + ".points[" + std::to_string(i) + "]";
      const json& pt = pts[i];
      if (!pt.is_array() || pt.size() != 2) fail(pp, "expected [t, y]");
      fs.points.push_back({number_at(pt[0], pp + "[0]"),
                           number_at(pt[1], pp + "[1]")});
    }
  } else if (k == "sine") {
    fs.kind = CoefficientFn::Kind::sine;
    fs.amplitude =
        number_at(require(v, "amplitude", path), path + ".amplitude");
    fs.omega = number_at(require(v, "omega", path), path + ".omega");
    fs.phase = v.contains("phase")
                   ? number_at(v["phase"], path + ".phase")
                   : 0.0;
    fs.offset = v.contains("offset")
                    ? number_at(v["offset"], path + ".offset")
                    : 0.0;
  } else {
    fail(path + ".kind", "unknown kind '" + k + "'");
  }
  return fs;
}

void emit_function(std::string& s, const FunctionSpec& fs) {
  switch (fs.kind) {
    case CoefficientFn::Kind::constant:
      s += "{\"kind\":\"constant\",\"value\":" + format_number(fs.value) + "}";
      break;
    case CoefficientFn::Kind::pwlinear: {
      s += "{\"kind\":\"pwlinear\",\"points\":[";
      for (size_t i = 0; i < fs.points.size(); ++i) {
        if (i) s += ",";
        s += "[" + format_number(fs.points[i].t) + "," +
             format_number(fs.points[i].y) + "]";
      }
      s += "]}";
      break;
    }
    case CoefficientFn::Kind::sine:
      s += "{\"kind\":\"sine\",\"amplitude\":" + format_number(fs.amplitude) +
           ",\"omega\":" + format_number(fs.omega) +
           ",\"phase\":" + format_number(fs.phase) +
           ",\"offset\":" + format_number(fs.offset) + "}";
      break;
  }
}

}  // namespace

CoefficientFn FunctionSpec::build() const {
  switch (kind) {
    case CoefficientFn::Kind::constant:
      return CoefficientFn::constant(value);
    case CoefficientFn::Kind::pwlinear:
      return CoefficientFn::pwlinear(points);
    case CoefficientFn::Kind::sine:
      return CoefficientFn::sine(amplitude, omega, phase, offset);
  }
  throw ConfigError("function kind: out of range");
}

FunctionSpec FunctionSpec::of(const CoefficientFn& fn) {
  FunctionSpec fs;
  fs.kind = fn.kind();
  switch (fn.kind()) {
    case CoefficientFn::Kind::constant:
      fs.value = fn.const_value();
      break;
    case CoefficientFn::Kind::pwlinear:
      fs.points = fn.knots();
      break;
    case CoefficientFn::Kind::sine:
      fs.amplitude = fn.amplitude();
      fs.omega = fn.omega();
      fs.phase = fn.phase();
      fs.offset = fn.offset();
      break;
  }
  return fs;
}

std::vector<double> GridSpec::build() const {
  if (scale != "log" && scale != "linear")
    fail("a_grid.scale", "expected \"log\" or \"linear\"");
  if (count < 2) fail("a_grid.count", "expected at least 2");
  if (!(min > 0.0)) fail("a_grid.min", "expected a positive magnitude");
  if (!(max > min)) fail("a_grid.max", "expected max > min");
  std::vector<double> out(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    double f = static_cast<double>(i) / (count - 1);
    out[static_cast<size_t>(i)] =
        scale == "log" ? min * std::pow(max / min, f)
                       : min + f * (max - min);
  }
  return out;
}

SLProblem ProblemConfig::build() const {
  try {
    return SLProblem(t1, t2, p.build(), q.build(), m.build(), n.build(),
                     tolerances.value_or(Tolerances{}));
  } catch (const InvalidProblem& e) {
    // Problem-level invariants re-surface as configuration diagnostics;
    // the InvalidProblem message already names the offending field.
    throw ConfigError(e.what());
  }
}

ProblemConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: not valid JSON: ") + e.what());
  }
  ProblemConfig c;
  const json& iv = require(root, "interval", "config");
  if (!iv.is_array() || iv.size() != 2)
    fail("interval", "expected [t1, t2]");
  c.t1 = number_at(iv[0], "interval[0]");
  c.t2 = number_at(iv[1], "interval[1]");
  c.p = parse_function(require(root, "p", "config"), "p");
  c.q = parse_function(require(root, "q", "config"), "q");
  c.m = parse_function(require(root, "m", "config"), "m");
  c.n = parse_function(require(root, "n", "config"), "n");
  if (root.contains("tolerances")) {
    const json& t = root["tolerances"];
    if (!t.is_object()) fail("tolerances", "expected an object");
    Tolerances tol;
    auto opt = [&](const char* key, double& into) {
      if (t.contains(key))
        into = number_at(t[key], std::string("tolerances.") + key);
    };
    opt("rtol", tol.rtol);
    opt("atol", tol.atol);
    opt("zero_time_rel", tol.zero_time_rel);
    opt("zero_residual_rel", tol.zero_residual_rel);
    opt("param_abs", tol.param_abs);
    opt("curve_rel", tol.curve_rel);
    c.tolerances = tol;
  }
  if (root.contains("k_max")) c.k_max = int_at(root["k_max"], "k_max");
  if (c.k_max < 1) fail("k_max", "expected at least 1");
  if (root.contains("a_grid")) {
    const json& g = root["a_grid"];
    GridSpec gs;
    const json& sc = require(g, "scale", "a_grid");
    if (!sc.is_string()) fail("a_grid.scale", "expected a string");
    gs.scale = sc.get<std::string>();
    gs.min = number_at(require(g, "min", "a_grid"), "a_grid.min");
    gs.max = number_at(require(g, "max", "a_grid"), "a_grid.max");
    gs.count = int_at(require(g, "count", "a_grid"), "a_grid.count");
    gs.build();  // validate eagerly so errors carry field paths
    c.a_grid = gs;
  }
  return c;
}

ProblemConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const ProblemConfig& config) {
  std::string s = "{\"interval\":[" + format_number(config.t1) + "," +
                  format_number(config.t2) + "]";
  const char* names[4] = {"p", "q", "m", "n"};
  const FunctionSpec* fns[4] = {&config.p, &config.q, &config.m, &config.n};
  for (int i = 0; i < 4; ++i) {
    s += std::string(",\"") + names[i] + "\":";
    emit_function(s, *fns[i]);
  }
  if (config.tolerances) {
    const Tolerances& t = *config.tolerances;
    s += ",\"tolerances\":{\"rtol\":" + format_number(t.rtol) +
         ",\"atol\":" + format_number(t.atol) +
         ",\"zero_time_rel\":" + format_number(t.zero_time_rel) +
         ",\"zero_residual_rel\":" + format_number(t.zero_residual_rel) +
         ",\"param_abs\":" + format_number(t.param_abs) +
         ",\"curve_rel\":" + format_number(t.curve_rel) + "}";
  }
  s += ",\"k_max\":" + std::to_string(config.k_max);
  if (config.a_grid) {
    const GridSpec& g = *config.a_grid;
    s += ",\"a_grid\":{\"scale\":\"" + g.scale +
         "\",\"min\":" + format_number(g.min) +
         ",\"max\":" + format_number(g.max) +
         ",\"count\":" + std::to_string(g.count) + "}";
  }
  s += "}";
  return s;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace fucik

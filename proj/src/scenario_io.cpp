#include "goodwill/scenario_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace goodwill {

namespace {

struct RawValue {
  std::string text;
  int line = 0;
  int column = 0;
};

using Section = std::map<std::string, RawValue>;

std::string trim(const std::string& s, int* first_col = nullptr) {
  std::size_t b = s.find_first_not_of(" \t\r");
  std::size_t e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return {};
  if (first_col) *first_col = static_cast<int>(b) + 1;
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& tok, int line, int col) {
  double v = 0.0;
  const char* begin = tok.data();
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(line, col, "expected a number, got '" + tok + "'");
  return v;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

CoefficientSpec parse_coefficient(const RawValue& raw, bool point_allowed,
                                  const std::string& key) {
  const std::vector<std::string> toks = split_ws(raw.text);
  if (toks.empty()) throw ParseError(raw.line, raw.column, key + ": empty value");
  CoefficientSpec spec;
  if (toks[0] == "constant") {
    if (toks.size() != 2)
      throw ParseError(raw.line, raw.column, key + ": expected 'constant <value>'");
    spec.kind = CoefficientSpec::Kind::Constant;
    spec.value = parse_double(toks[1], raw.line, raw.column);
    return spec;
  }
  if (toks[0] == "point") {
    if (!point_allowed)
      throw ParseError(raw.line, raw.column,
                       key + ": point delay is only supported for the forgetting term a1");
    if (toks.size() != 2)
      throw ParseError(raw.line, raw.column, key + ": expected 'point <coefficient>'");
    spec.kind = CoefficientSpec::Kind::PointDelay;
    spec.value = parse_double(toks[1], raw.line, raw.column);
    return spec;
  }
  if (toks[0] == "table") {
    if (toks.size() < 3)
      throw ParseError(raw.line, raw.column, key + ": a table needs at least two xi:value pairs");
    spec.kind = CoefficientSpec::Kind::Table;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      const std::size_t colon = toks[i].find(':');
      if (colon == std::string::npos)
        throw ParseError(raw.line, raw.column,
                         key + ": table entry '" + toks[i] + "' is not of the form xi:value");
      const double xi = parse_double(toks[i].substr(0, colon), raw.line, raw.column);
      const double v = parse_double(toks[i].substr(colon + 1), raw.line, raw.column);
      if (!spec.table.empty() && xi <= spec.table.back().first)
        throw ParseError(raw.line, raw.column, key + ": table abscissae must be increasing");
      spec.table.emplace_back(xi, v);
    }
    return spec;
  }
  throw ParseError(raw.line, raw.column,
                   key + ": expected 'constant', 'table' or 'point', got '" + toks[0] + "'");
}

const std::map<std::string, std::set<std::string>> kSchema = {
    {"model", {"a0", "a1", "b0", "b1", "sigma", "r", "T"}},
    {"history", {"eta0", "eta", "delta"}},
    {"objective", {"beta", "gamma"}},
    {"numerics", {"n_points", "n_paths", "seed"}},
};

}  // namespace

ScenarioFile parse_scenario_text(const std::string& text) {
  std::map<std::string, Section> doc;
  std::string section;
  int section_line = 0;

  std::istringstream stream(text);
  std::string raw_line;
  int line_no = 0;
  while (std::getline(stream, raw_line)) {
    ++line_no;
    const std::size_t hash = raw_line.find('#');
    if (hash != std::string::npos) raw_line.erase(hash);
    int col = 1;
    const std::string line = trim(raw_line, &col);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        throw ParseError(line_no, col, "unterminated section header");
      section = line.substr(1, line.size() - 2);
      section_line = line_no;
      if (kSchema.find(section) == kSchema.end())
        throw ParseError(line_no, col, "unknown section '" + section + "'");
      if (doc.count(section)) throw ParseError(line_no, col, "duplicate section '" + section + "'");
      doc[section] = {};
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(line_no, col, "expected 'key = value' or '[section]'");
    if (section.empty()) throw ParseError(line_no, col, "key outside any section");
    const std::string key = trim(line.substr(0, eq));
    int vcol = 0;
    const std::string value = trim(line.substr(eq + 1), &vcol);
    const int value_col = col + static_cast<int>(eq) + vcol;
    if (key.empty()) throw ParseError(line_no, col, "empty key");
    if (!kSchema.at(section).count(key))
      throw ParseError(line_no, col, "unknown key '" + section + "." + key + "'");
    if (doc[section].count(key))
      throw ParseError(line_no, col, "duplicate key '" + section + "." + key + "'");
    if (value.empty()) throw ParseError(line_no, value_col, "empty value for '" + key + "'");
    doc[section][key] = RawValue{value, line_no, value_col};
  }
  (void)section_line;

  auto need = [&](const std::string& sec, const std::string& key) -> const RawValue& {
    auto sit = doc.find(sec);
    if (sit == doc.end()) throw ParseError(1, 1, "missing required section '" + sec + "'");
    auto kit = sit->second.find(key);
    if (kit == sit->second.end())
      throw ParseError(1, 1, "missing required key '" + sec + "." + key + "'");
    return kit->second;
  };
  auto need_double = [&](const std::string& sec, const std::string& key) {
    const RawValue& raw = need(sec, key);
    return parse_double(raw.text, raw.line, raw.column);
  };
  auto need_uint = [&](const std::string& sec, const std::string& key) {
    const RawValue& raw = need(sec, key);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(raw.text.data(), raw.text.data() + raw.text.size(), v);
    if (ec != std::errc{} || ptr != raw.text.data() + raw.text.size())
      throw ParseError(raw.line, raw.column,
                       key + ": expected a non-negative integer, got '" + raw.text + "'");
    return v;
  };

  ScenarioFile f;
  f.a0 = need_double("model", "a0");
  f.a1 = parse_coefficient(need("model", "a1"), /*point_allowed=*/true, "a1");
  f.b0 = need_double("model", "b0");
  f.b1 = parse_coefficient(need("model", "b1"), /*point_allowed=*/false, "b1");
  f.sigma = need_double("model", "sigma");
  f.r = need_double("model", "r");
  f.T = need_double("model", "T");
  f.eta0 = need_double("history", "eta0");
  f.eta = parse_coefficient(need("history", "eta"), /*point_allowed=*/false, "eta");
  f.delta = parse_coefficient(need("history", "delta"), /*point_allowed=*/false, "delta");
  f.beta = need_double("objective", "beta");
  f.gamma = need_double("objective", "gamma");
  f.n_points = static_cast<int>(need_uint("numerics", "n_points"));
  f.n_paths = static_cast<int>(need_uint("numerics", "n_paths"));
  f.seed = need_uint("numerics", "seed");
  return f;
}

ScenarioFile load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string emit_coefficient(const CoefficientSpec& spec) {
  switch (spec.kind) {
    case CoefficientSpec::Kind::Constant:
      return "constant " + format_full(spec.value);
    case CoefficientSpec::Kind::PointDelay:
      return "point " + format_full(spec.value);
    case CoefficientSpec::Kind::Table: {
      std::string out = "table";
      for (const auto& [xi, v] : spec.table)
        out += " " + format_full(xi) + ":" + format_full(v);
      return out;
    }
  }
  return {};
}

SegmentPath grid_coefficient(const CoefficientSpec& spec, double r, int n_points,
                             const std::string& key) {
  if (spec.kind == CoefficientSpec::Kind::Constant)
    return SegmentPath::constant(spec.value, r, n_points);
  if (spec.kind == CoefficientSpec::Kind::PointDelay)
    throw std::invalid_argument(key + ": point delay cannot be gridded");
  const auto& tab = spec.table;
  const double tol = 1e-9 * std::max(1.0, r);
  if (std::abs(tab.front().first + r) > tol || std::abs(tab.back().first) > tol)
    throw std::invalid_argument(key + ": table must span [-r, 0] exactly (first xi = -r, last xi = 0)");
  SegmentPath out = SegmentPath::zero(r, n_points);
  std::size_t seg = 0;
  for (int i = 0; i < n_points; ++i) {
    const double xi = out.xi(i);
    while (seg + 2 < tab.size() && tab[seg + 1].first < xi) ++seg;
    const auto& [x0, y0] = tab[seg];
    const auto& [x1, y1] = tab[seg + 1];
    const double frac = std::clamp((xi - x0) / (x1 - x0), 0.0, 1.0);
    out[i] = (1.0 - frac) * y0 + frac * y1;
  }
  out.values.back() = tab.back().second;
  return out;
}

}  // namespace

std::string emit_scenario_text(const ScenarioFile& f) {
  std::ostringstream out;
  out << "[model]\n";
  out << "a0 = " << format_full(f.a0) << "\n";
  out << "a1 = " << emit_coefficient(f.a1) << "\n";
  out << "b0 = " << format_full(f.b0) << "\n";
  out << "b1 = " << emit_coefficient(f.b1) << "\n";
  out << "sigma = " << format_full(f.sigma) << "\n";
  out << "r = " << format_full(f.r) << "\n";
  out << "T = " << format_full(f.T) << "\n";
  out << "\n[history]\n";
  out << "eta0 = " << format_full(f.eta0) << "\n";
  out << "eta = " << emit_coefficient(f.eta) << "\n";
  out << "delta = " << emit_coefficient(f.delta) << "\n";
  out << "\n[objective]\n";
  out << "beta = " << format_full(f.beta) << "\n";
  out << "gamma = " << format_full(f.gamma) << "\n";
  out << "\n[numerics]\n";
  out << "n_points = " << f.n_points << "\n";
  out << "n_paths = " << f.n_paths << "\n";
  out << "seed = " << f.seed << "\n";
  return out.str();
}

ScenarioParams materialize(const ScenarioFile& f, int n_points_override) {
  const int n = n_points_override > 0 ? n_points_override : f.n_points;
  ScenarioParams p;
  p.a0 = f.a0;
  p.b0 = f.b0;
  p.sigma = f.sigma;
  p.r = f.r;
  p.T = f.T;
  p.eta0 = f.eta0;
  p.beta = f.beta;
  p.gamma = f.gamma;
  if (f.a1.kind == CoefficientSpec::Kind::PointDelay)
    p.a1 = PointDelayKernel{f.a1.value};
  else
    p.a1 = grid_coefficient(f.a1, f.r, n, "a1");
  p.b1 = grid_coefficient(f.b1, f.r, n, "b1");
  p.eta = grid_coefficient(f.eta, f.r, n, "eta");
  p.delta = grid_coefficient(f.delta, f.r, n, "delta");
  p.validate();
  return p;
}

}  // namespace goodwill

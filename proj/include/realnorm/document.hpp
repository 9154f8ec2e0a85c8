#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "realnorm/extension.hpp"
#include "realnorm/parse.hpp"

namespace realnorm {

/// Declarative input document. Sections start with a header line
/// (VARS, KIND, GENERATORS, ASSERT, CANDIDATES, POINTS, RESTRICT, PARAMETER);
/// `#` starts a comment; blank lines are ignored.
struct VarietySpec {
  std::vector<std::string> vars;
  PresentationKind kind = PresentationKind::plane_curve;
  std::vector<MPoly> generators;
  bool irreducible = false;
  bool smooth_real_point = false;
  std::vector<Point> central_points;
  std::vector<Point> central_fiber_points;
  std::vector<IntegralElement> candidates;
  std::vector<Point> points;
  std::vector<MPoly> restrict_to;
  std::optional<std::pair<std::string, BigRat>> parameter;

  std::vector<std::string> all_names() const {
    auto names = vars;
    for (const auto& c : candidates) names.push_back(c.name);
    return names;
  }

  Assertions assertions() const { return {irreducible, false, smooth_real_point}; }

  AffinePresentation presentation(const GbOptions& opts = {}) const {
    switch (kind) {
      case PresentationKind::plane_curve:
        if (generators.size() != 1) throw Error(ErrorKind::precondition, "a plane curve has exactly one generator");
        return AffinePresentation::plane(generators[0], vars, assertions(), opts);
      case PresentationKind::space_curve: return AffinePresentation::space_curve(generators, vars, assertions());
      case PresentationKind::surface: return AffinePresentation::surface(generators, vars, assertions());
    }
    throw Error(ErrorKind::precondition, "unknown kind");
  }

  friend bool operator==(const VarietySpec& a, const VarietySpec& b) {
    auto same_candidates = [&] {
      if (a.candidates.size() != b.candidates.size()) return false;
      for (std::size_t i = 0; i < a.candidates.size(); ++i) {
        const auto &x = a.candidates[i], &y = b.candidates[i];
        if (x.name != y.name || x.f.p != y.f.p || x.f.q != y.f.q || x.relation != y.relation) return false;
      }
      return true;
    };
    return a.vars == b.vars && a.kind == b.kind && a.generators == b.generators && a.irreducible == b.irreducible &&
           a.smooth_real_point == b.smooth_real_point && a.central_points == b.central_points &&
           a.central_fiber_points == b.central_fiber_points && same_candidates() && a.points == b.points &&
           a.restrict_to == b.restrict_to && a.parameter == b.parameter;
  }
};

namespace detail {

inline std::string strip(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(strip(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

/// Wraps a parse failure with the document line it came from.
class LineError : public Error {
 public:
  LineError(std::size_t line, const std::string& what) : Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + what) {}
};

inline Point parse_point(const std::vector<std::string>& items, std::size_t line) {
  Point p;
  for (const auto& w : items) {
    try {
      p.push_back(parse_rational(w));
    } catch (const std::exception&) {
      throw LineError(line, "bad coordinate '" + w + "'");
    }
  }
  return p;
}

}  // namespace detail

inline VarietySpec parse_document(std::string_view text) {
  VarietySpec spec;
  std::string section;
  bool have_vars = false, have_kind = false;
  struct Pending {
    std::size_t line;
    std::string section;
    std::string body;
  };
  std::vector<Pending> pending;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t lineno = 1; std::getline(in, raw); ++lineno) {
    auto hash = raw.find('#');
    std::string line = detail::strip(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    static const char* const kSections[] = {"VARS", "KIND", "GENERATORS", "ASSERT", "CANDIDATES", "POINTS", "RESTRICT", "PARAMETER"};
    if (std::find(std::begin(kSections), std::end(kSections), line) != std::end(kSections)) {
      section = line;
      continue;
    }
    if (section.empty()) throw detail::LineError(lineno, "content before the first section header");
    if (section == "VARS") {
      for (const auto& w : detail::words(line)) {
        if (!detail::valid_name(w)) throw detail::LineError(lineno, "bad variable name '" + w + "'");
        if (std::find(spec.vars.begin(), spec.vars.end(), w) != spec.vars.end()) {
          throw detail::LineError(lineno, "variable '" + w + "' declared twice");
        }
        spec.vars.push_back(w);
      }
      have_vars = true;
    } else if (section == "KIND") {
      if (line == "plane-curve") spec.kind = PresentationKind::plane_curve;
      else if (line == "space-curve") spec.kind = PresentationKind::space_curve;
      else if (line == "surface") spec.kind = PresentationKind::surface;
      else throw detail::LineError(lineno, "unknown kind '" + line + "'");
      have_kind = true;
    } else if (section == "ASSERT") {
      auto w = detail::words(line);
      if (w[0] == "irreducible" && w.size() == 1) spec.irreducible = true;
      else if (w[0] == "smooth-real-point" && w.size() == 1) spec.smooth_real_point = true;
      else if (w[0] == "central-point") spec.central_points.push_back(detail::parse_point({w.begin() + 1, w.end()}, lineno));
      else if (w[0] == "central-fiber-point")
        spec.central_fiber_points.push_back(detail::parse_point({w.begin() + 1, w.end()}, lineno));
      else throw detail::LineError(lineno, "unknown assertion '" + line + "'");
    } else if (section == "CANDIDATES") {
      auto parts = detail::split(line, ';');
      if (parts.size() != 4) throw detail::LineError(lineno, "candidate needs 'name ; numerator ; denominator ; relation'");
      if (!detail::valid_name(parts[0])) throw detail::LineError(lineno, "bad candidate name '" + parts[0] + "'");
      spec.candidates.push_back({parts[0], {}, {}});
      pending.push_back({lineno, section, line});
    } else if (section == "POINTS") {
      spec.points.push_back(detail::parse_point(detail::words(line), lineno));
    } else if (section == "PARAMETER") {
      auto parts = detail::split(line, '=');
      if (parts.size() != 2 || !detail::valid_name(parts[0])) throw detail::LineError(lineno, "parameter needs 'name = value'");
      spec.parameter = {parts[0], detail::parse_point({parts[1]}, lineno)[0]};
    } else {
      pending.push_back({lineno, section, line});
    }
  }
  if (!have_vars || spec.vars.empty()) throw Error(ErrorKind::parse, "missing VARS section");
  if (!have_kind) throw Error(ErrorKind::parse, "missing KIND section");

  // Polynomials are parsed once every declared name is known.
  const auto names = spec.all_names();
  auto base = spec.vars;
  std::sort(base.begin(), base.end());
  auto poly = [&](const std::string& s, std::size_t line) {
    try {
      MPoly p = parse_poly(s, names).trimmed();
      return p.with_vars(union_vars(base, p.vars()));
    } catch (const ParseError& e) {
      throw detail::LineError(line, e.detail());
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::unknown_variable) throw detail::LineError(line, e.detail());
      throw;
    }
  };
  std::size_t cand = 0;
  for (const auto& p : pending) {
    if (p.section == "GENERATORS") {
      spec.generators.push_back(poly(p.body, p.line));
    } else if (p.section == "RESTRICT") {
      spec.restrict_to.push_back(poly(p.body, p.line));
    } else if (p.section == "CANDIDATES") {
      auto parts = detail::split(p.body, ';');
      auto& c = spec.candidates[cand++];
      c.f.p = poly(parts[1], p.line);
      c.f.q = poly(parts[2], p.line);
      c.relation = poly(parts[3], p.line);
    }
  }
  if (spec.generators.empty()) throw Error(ErrorKind::parse, "missing GENERATORS section");
  for (const auto& c : spec.candidates)
    if (std::find(spec.vars.begin(), spec.vars.end(), c.name) != spec.vars.end()) {
      throw Error(ErrorKind::parse, "candidate name '" + c.name + "' clashes with a variable");
    }
  auto dim_check = [&](const std::vector<Point>& pts, std::size_t n, const char* what) {
    for (const auto& p : pts)
      if (p.size() != n) throw Error(ErrorKind::parse, std::string(what) + " has the wrong number of coordinates");
  };
  dim_check(spec.central_points, spec.vars.size(), "central-point");
  dim_check(spec.points, spec.vars.size(), "point");
  if (spec.parameter && std::find(spec.vars.begin(), spec.vars.end(), spec.parameter->first) == spec.vars.end()) {
    throw Error(ErrorKind::parse, "parameter '" + spec.parameter->first + "' is not a declared variable");
  }
  return spec;
}

namespace detail {

inline std::string point_text(const Point& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + to_string(p[i]);
  return s;
}

}  // namespace detail

/// Canonical text: fixed section order, polynomials in grevlex over the
/// declared names.
inline std::string print_document(const VarietySpec& spec) {
  const auto names = spec.all_names();
  std::ostringstream out;
  out << "VARS\n";
  for (std::size_t i = 0; i < spec.vars.size(); ++i) out << (i ? " " : "") << spec.vars[i];
  out << "\nKIND\n" << to_string(spec.kind) << "\nGENERATORS\n";
  for (const auto& g : spec.generators) out << to_string(g, names) << "\n";
  if (spec.irreducible || spec.smooth_real_point || !spec.central_points.empty() || !spec.central_fiber_points.empty()) {
    out << "ASSERT\n";
    if (spec.irreducible) out << "irreducible\n";
    if (spec.smooth_real_point) out << "smooth-real-point\n";
    for (const auto& p : spec.central_points) out << "central-point " << detail::point_text(p) << "\n";
    for (const auto& p : spec.central_fiber_points) out << "central-fiber-point " << detail::point_text(p) << "\n";
  }
  if (!spec.candidates.empty()) {
    out << "CANDIDATES\n";
    for (const auto& c : spec.candidates)
      out << c.name << " ; " << to_string(c.f.p, names) << " ; " << to_string(c.f.q, names) << " ; "
          << to_string(c.relation, names) << "\n";
  }
  if (!spec.points.empty()) {
    out << "POINTS\n";
    for (const auto& p : spec.points) out << detail::point_text(p) << "\n";
  }
  if (!spec.restrict_to.empty()) {
    out << "RESTRICT\n";
    for (const auto& g : spec.restrict_to) out << to_string(g, names) << "\n";
  }
  if (spec.parameter) out << "PARAMETER\n" << spec.parameter->first << " = " << to_string(spec.parameter->second) << "\n";
  return out.str();
}

}  // namespace realnorm

#include "toricfold/report.hpp"

#include <sstream>

namespace toricfold {

using nlohmann::json;

namespace {

json big(const Integer& x) {
  if (!x.fits_slong_p()) throw OverflowError("integer " + x.get_str() + " does not fit in the report");
  return static_cast<std::int64_t>(x.get_si());
}

json vec(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(big(x));
  return out;
}

json vec_list(const std::vector<IntVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vec(v));
  return out;
}

json matrix(const IntMatrix& m) {
  json out = json::array();
  for (const auto& row : m.to_rows()) out.push_back(vec(row));
  return out;
}

json mat2(const Mat2& g) { return json::array({json::array({g.a, g.b}), json::array({g.c, g.d})}); }

json vec2(const Vec2& v) { return json::array({v[0], v[1]}); }

json optional_mat2(const std::optional<Mat2>& g) { return g ? mat2(*g) : json(nullptr); }

// Rationals as [numerator, denominator] so that no floats appear.
json rational_list(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(json::array({big(x.get_num()), big(x.get_den())}));
  return out;
}

json fan_section(const FullReport& r) {
  json f = fan_to_json(r.fan);
  f["ray_count"] = r.fan.size();
  f["self_intersections"] = r.self_intersections;
  return f;
}

json group_section(const FullReport& r) {
  json elements = json::array();
  for (const auto& g : r.group.elements) elements.push_back(mat2(g));
  return {{"type", to_string(r.group.type)},
          {"order", r.group.elements.size()},
          {"elements", elements},
          {"ray_permutations", r.group.ray_permutations}};
}

json weights_section(const FullReport& r) {
  json entries = json::array();
  for (const auto& e : r.weights.entries())
    entries.push_back({{"weight", vec2(e.weight)}, {"multiplicity", e.multiplicity}});
  return {{"entries", entries},
          {"total_dim", r.weights.total_dim()},
          {"oracle_dim", r.oracle_dimension},
          {"weight_sum", vec2(r.weights.weight_sum())}};
}

json singularity_fields(const SingularityReport& s) {
  auto opt_vec = [](const std::optional<IntVector>& v) { return v ? vec(*v) : json(nullptr); };
  return {{"q_gorenstein", s.q_gorenstein},
          {"rational_certificate", s.rational_certificate ? rational_list(*s.rational_certificate) : json(nullptr)},
          {"gorenstein", s.gorenstein},
          {"certificate", opt_vec(s.certificate)},
          {"generators_extreme", s.generators_extreme},
          {"cone_q_gorenstein", s.cone_q_gorenstein},
          {"cone_gorenstein", s.cone_gorenstein},
          {"cone_certificate", opt_vec(s.cone_certificate)},
          {"simplicial", s.simplicial},
          {"smooth", s.smooth},
          {"vertices", vec_list(s.vertices)},
          {"offenders", vec_list(s.offenders)},
          {"only_vertices", s.only_vertices ? json(*s.only_vertices) : json(nullptr)},
          {"terminal", s.terminal},
          {"terminal_method", to_string(s.method)}};
}

json quotient_section(const FullReport& r) {
  if (r.quotient_failure) return {{"status", to_string(*r.quotient_failure)}, {"error", r.quotient_error}};
  if (!r.quotient) return nullptr;
  const auto& q = *r.quotient;
  json preimages = json::array();
  for (const auto& p : q.preimages)
    preimages.push_back({{"weight", vec2(p.weight)},
                         {"copy", p.copy},
                         {"generator", p.ray},
                         {"image_primitive", p.image_primitive}});
  json out = {{"status", "ok"},
              {"rank", q.nprime_rank},
              {"B", matrix(q.B)},
              {"A", matrix(q.A)},
              {"section", matrix(q.section)},
              {"generators", vec_list(q.rays)},
              {"generator_extreme", q.ray_extreme},
              {"generator_multiplicity", q.ray_multiplicity},
              {"extreme_ray_count", q.extreme_generators().size()},
              {"preimages", preimages},
              {"facets", q.facets_computed ? vec_list(q.facets) : json(nullptr)},
              {"primitive_images", r.primitive_images}};
  if (r.singularity) {
    out.update(singularity_fields(*r.singularity));
  } else {
    out["singularity_error"] = r.singularity_error;
  }
  json descended = json::array();
  for (const auto& d : r.descended_group) descended.push_back(matrix(d));
  out["descended_group"] = descended;
  if (!r.descent_error.empty()) out["descent_error"] = r.descent_error;
  return out;
}

json classification_section(const FullReport& r) {
  if (!r.classification) return {{"error", r.classification_error}};
  const auto& c = *r.classification;
  json steps = json::array();
  for (const auto& s : c.blowdown_sequence) {
    json orbit = json::array();
    for (const auto& u : s.orbit) orbit.push_back(vec2(u));
    steps.push_back(orbit);
  }
  json minimal = json::array();
  for (const auto& u : c.minimal.rays()) minimal.push_back(vec2(u));
  return {{"minimal_model", c.minimal_model},
          {"minimal_rays", minimal},
          {"model_isomorphism", optional_mat2(c.model_isomorphism)},
          {"rotation", optional_mat2(c.rotation)},
          {"blowdown_sequence", steps}};
}

}  // namespace

FanDocument parse_fan_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("not a JSON document: ") + e.what());
  }
  if (!doc.is_object()) throw DocumentError("fan document must be an object");
  FanDocument out;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw DocumentError("\"name\" must be a string");
    out.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("rays") || !doc["rays"].is_array()) throw DocumentError("\"rays\" must be a list");
  for (const auto& r : doc["rays"]) {
    if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer())
      throw DocumentError("each ray must be a list of two integers");
    out.rays.push_back({r[0].get<std::int64_t>(), r[1].get<std::int64_t>()});
  }
  return out;
}

json fan_to_json(const Fan2D& f) {
  json rays = json::array();
  for (const auto& u : f.rays()) rays.push_back(vec2(u));
  json out = {{"rays", rays}};
  if (!f.name().empty()) out["name"] = f.name();
  return out;
}

json report_to_json(const FullReport& r, const Provenance& prov) {
  json provenance = {{"source", prov.source}, {"tool", kToolName}, {"version", kToolVersion}};
  if (prov.seed) provenance["seed"] = *prov.seed;
  json roots = json::array();
  for (const auto& m : r.roots.roots) roots.push_back(vec2(m));
  const bool rigid = r.weights.empty();
  json doc = {{"schema_version", kSchemaVersion},
              {"provenance", provenance},
              {"fan", fan_section(r)},
              {"group_type", to_string(r.group.type)},
              {"group", group_section(r)},
              {"foldable", r.foldability.foldable},
              {"p", r.foldability.p},
              {"witness", optional_mat2(r.foldability.rotation)},
              {"demazure_roots", roots},
              {"demazure_root_count", r.roots.roots.size()},
              {"aut0_dim", r.roots.aut0_dim},
              {"aut0_is_torus", r.aut0_torus},
              {"rigid", rigid},
              {"weights", weights_section(r)},
              {"quotient", quotient_section(r)},
              {"classification", classification_section(r)},
              {"csck", r.classification ? to_string(r.classification->csck) : "unknown"}};
  return doc;
}

namespace {

bool scalar_array(const json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& x : j)
    if (x.is_structured() && !scalar_array(x)) return false;
  return true;
}

std::string escape_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

void flatten(const json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, path + "/" + escape_token(k), os);
  } else if (j.is_array() && !j.empty() && !scalar_array(j)) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "/" + std::to_string(i), os);
  } else {
    os << path << " = " << j.dump() << "\n";
  }
}

}  // namespace

std::string json_to_text(const json& doc) {
  std::ostringstream os;
  flatten(doc, "", os);
  return os.str();
}

json json_from_text(const std::string& text) {
  json doc;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto eq = line.find(" = ");
    if (eq == std::string::npos) throw DocumentError("line " + std::to_string(lineno) + " has no ' = '");
    const std::string path = line.substr(0, eq);
    try {
      json value = json::parse(line.substr(eq + 3));
      if (path.empty()) return value;
      doc[json::json_pointer(path)] = std::move(value);
    } catch (const json::exception& e) {
      throw DocumentError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return doc;
}

}  // namespace toricfold

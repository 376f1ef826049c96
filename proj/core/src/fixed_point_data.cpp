#include "spinq/fixed_point_data.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

using nlohmann::json;

namespace spinq {

const FixedCircle* OddManifoldData::find_circle(const std::string& id) const {
  for (const auto& c : circles)
    if (c.id == id)
      return &c;
  return nullptr;
}

//
// Validation
//

namespace {

void check_distinct_ids(const std::vector<std::string>& ids) {
  std::set<std::string> seen;
  for (const auto& id : ids)
    if (!seen.insert(id).second)
      throw ValidationError("duplicate component id '" + id + "'");
}

void check_sigma(int sigma, const std::string& id) {
  if (sigma != 1 && sigma != -1)
    throw ValidationError("sigma of '" + id + "' must be +1 or -1");
}

} // namespace

void validate(const OddManifoldData& m) {
  std::vector<std::string> ids;
  for (const auto& c : m.circles) {
    ids.push_back(c.id);
    if (c.n == 0)
      throw ValidationError("circle '" + c.id + "' has zero normal weight");
    check_sigma(c.sigma, c.id);
  }
  check_distinct_ids(ids);
  for (const auto& [id, a] : m.alpha.integrals)
    if (m.find_circle(id) == nullptr)
      throw ValidationError("alpha integral for unknown circle '" + id + "'");
}

void validate(const EvenManifoldData& m) {
  if (m.half_dim < 1)
    throw ValidationError("half_dim must be positive");
  std::vector<std::string> ids;
  for (const auto& p : m.points) {
    ids.push_back(p.id);
    if (static_cast<std::int64_t>(p.weights.size()) != m.half_dim)
      throw ValidationError("point '" + p.id + "' needs exactly " +
                            std::to_string(m.half_dim) + " weights");
    std::int64_t weight_sum = 0;
    for (std::int64_t w : p.weights) {
      if (w == 0)
        throw ValidationError("point '" + p.id + "' has a zero rotation weight");
      weight_sum += w;
    }
    check_sigma(p.sigma, p.id);
    if ((p.mu + weight_sum) % 2 != 0)
      throw ValidationError("point '" + p.id + "' violates Spin^c parity: mu + sum(weights) must be even");
  }
  check_distinct_ids(ids);
}

void validate(const ManifoldData& m) {
  std::visit([](const auto& data) { validate(data); }, m);
}

//
// Manifest I/O
//

namespace {

void reject_unknown_fields(const json& obj, const std::set<std::string>& allowed,
                           const std::string& context) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.contains(key))
      throw SchemaError("unknown field '" + key + "' in " + context);
}

const json& require_field(const json& obj, const std::string& key, const std::string& context) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw SchemaError("missing field '" + key + "' in " + context);
  return *it;
}

std::string get_string(const json& obj, const std::string& key, const std::string& context) {
  const json& v = require_field(obj, key, context);
  if (!v.is_string())
    throw SchemaError("field '" + key + "' in " + context + " must be a string");
  return v.get<std::string>();
}

std::int64_t as_int(const json& v, const std::string& what) {
  if (!v.is_number_integer())
    throw SchemaError(what + " must be an integer");
  return v.get<std::int64_t>();
}

std::int64_t get_int(const json& obj, const std::string& key, const std::string& context) {
  return as_int(require_field(obj, key, context), "field '" + key + "' in " + context);
}

OddManifoldData decode_odd(const json& doc) {
  reject_unknown_fields(doc, {"name", "kind", "circles", "alpha"}, "odd3 manifest");
  OddManifoldData m;
  m.name = get_string(doc, "name", "manifest");

  const json& circles = require_field(doc, "circles", "odd3 manifest");
  if (!circles.is_array())
    throw SchemaError("'circles' must be an array");
  for (const json& c : circles) {
    if (!c.is_object())
      throw SchemaError("each circle must be an object");
    reject_unknown_fields(c, {"id", "mu", "n", "sigma"}, "circle");
    FixedCircle circle;
    circle.id = get_string(c, "id", "circle");
    circle.mu = get_int(c, "mu", "circle");
    circle.n = get_int(c, "n", "circle");
    circle.sigma = static_cast<int>(get_int(c, "sigma", "circle"));
    m.circles.push_back(std::move(circle));
  }

  if (auto it = doc.find("alpha"); it != doc.end()) {
    if (!it->is_object())
      throw SchemaError("'alpha' must be an object mapping circle ids to integers");
    for (const auto& [id, value] : it->items())
      m.alpha.integrals[id] = as_int(value, "alpha integral for '" + id + "'");
  }
  return m;
}

EvenManifoldData decode_even(const json& doc) {
  reject_unknown_fields(doc, {"name", "kind", "half_dim", "points"}, "even manifest");
  EvenManifoldData m;
  m.name = get_string(doc, "name", "manifest");
  m.half_dim = get_int(doc, "half_dim", "even manifest");

  const json& points = require_field(doc, "points", "even manifest");
  if (!points.is_array())
    throw SchemaError("'points' must be an array");
  for (const json& p : points) {
    if (!p.is_object())
      throw SchemaError("each point must be an object");
    reject_unknown_fields(p, {"id", "mu", "weights", "sigma"}, "point");
    IsolatedFixedPoint point;
    point.id = get_string(p, "id", "point");
    point.mu = get_int(p, "mu", "point");
    const json& weights = require_field(p, "weights", "point");
    if (!weights.is_array() || weights.empty())
      throw SchemaError("'weights' must be a nonempty array of integers");
    for (const json& w : weights)
      point.weights.push_back(as_int(w, "weight"));
    point.sigma = static_cast<int>(get_int(p, "sigma", "point"));
    m.points.push_back(std::move(point));
  }
  return m;
}

} // namespace

ManifoldData parse_manifest(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw SchemaError("manifest must be a JSON object");

  const std::string kind = get_string(doc, "kind", "manifest");
  ManifoldData m;
  if (kind == "odd3")
    m = decode_odd(doc);
  else if (kind == "even")
    m = decode_even(doc);
  else
    throw SchemaError("unknown kind '" + kind + "' (expected \"odd3\" or \"even\")");
  validate(m);
  return m;
}

std::string emit_manifest(const ManifoldData& m) {
  // nlohmann::json objects keep keys sorted, so the rendering is canonical.
  json doc;
  if (const auto* odd = std::get_if<OddManifoldData>(&m)) {
    doc["name"] = odd->name;
    doc["kind"] = "odd3";
    doc["circles"] = json::array();
    for (const auto& c : odd->circles)
      doc["circles"].push_back({{"id", c.id}, {"mu", c.mu}, {"n", c.n}, {"sigma", c.sigma}});
    doc["alpha"] = json::object();
    for (const auto& [id, a] : odd->alpha.integrals)
      doc["alpha"][id] = a;
  } else {
    const auto& even = std::get<EvenManifoldData>(m);
    doc["name"] = even.name;
    doc["kind"] = "even";
    doc["half_dim"] = even.half_dim;
    doc["points"] = json::array();
    for (const auto& p : even.points)
      doc["points"].push_back(
          {{"id", p.id}, {"mu", p.mu}, {"weights", p.weights}, {"sigma", p.sigma}});
  }
  return doc.dump(2) + "\n";
}

ManifoldData load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw SchemaError("cannot open manifest file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_manifest(ss.str());
}

} // namespace spinq

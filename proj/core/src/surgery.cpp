#include "spinq/surgery.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

using nlohmann::json;

namespace spinq {

namespace {

void keep_alpha_entry(const OddManifoldData& src, const std::string& id, OddManifoldData& dst) {
  auto it = src.alpha.integrals.find(id);
  if (it != src.alpha.integrals.end())
    dst.alpha.integrals[id] = it->second;
}

} // namespace

OddManifoldData connected_sum(const OddManifoldData& m1, const OddManifoldData& m2,
                              const ConSumSpec& spec, std::string* warning) {
  const FixedCircle* left = m1.find_circle(spec.left_circle);
  if (left == nullptr)
    throw SpecError("no circle '" + spec.left_circle + "' in '" + m1.name + "'");
  const FixedCircle* right = m2.find_circle(spec.right_circle);
  if (right == nullptr)
    throw SpecError("no circle '" + spec.right_circle + "' in '" + m2.name + "'");
  if (spec.l == 0)
    throw SpecError("spinning speed l must be nonzero");
  if (left->n != spec.l || right->n != spec.l)
    throw SpecError("designated circles must have normal weight l = " + std::to_string(spec.l));

  OddManifoldData out;
  out.name = m1.name + "#" + m2.name;

  FixedCircle merged;
  merged.id = left->id + "#" + right->id;
  merged.mu = left->mu + right->mu;
  merged.n = spec.l;
  merged.sigma = left->sigma;
  if (left->sigma != right->sigma && warning != nullptr)
    *warning = "designated circles disagree on sigma; keeping sigma = " +
               std::to_string(left->sigma) + " from '" + left->id + "'";

  for (const auto& c : m1.circles) {
    if (c.id == left->id) {
      out.circles.push_back(merged);
    } else {
      out.circles.push_back(c);
      keep_alpha_entry(m1, c.id, out);
    }
  }
  for (const auto& c : m2.circles) {
    if (c.id == right->id)
      continue;
    out.circles.push_back(c);
    keep_alpha_entry(m2, c.id, out);
  }
  out.alpha.integrals[merged.id] = m1.alpha.at(left->id) + m2.alpha.at(right->id);

  try {
    validate(out);
  } catch (const ValidationError& e) {
    throw SpecError(std::string("connected sum produced invalid data: ") + e.what());
  }
  return out;
}

VirtualCharacter correction_D(std::int64_t mu1, std::int64_t mu2, std::int64_t a1,
                              std::int64_t a2, std::int64_t l) {
  const VirtualCharacter joint = VirtualCharacter::monomial(l + mu1 + mu2);
  VirtualCharacter d = (joint - VirtualCharacter::monomial(l + mu1)) * Coeff(a1);
  d += (joint - VirtualCharacter::monomial(l + mu2)) * Coeff(a2);
  return d;
}

namespace {

std::set<std::string> id_set(const std::vector<std::string>& ids, const char* side) {
  std::set<std::string> out;
  for (const auto& id : ids)
    if (!out.insert(id).second)
      throw SpecError("duplicate id '" + id + "' on the " + side + " side");
  return out;
}

} // namespace

std::pair<OddManifoldData, OddManifoldData> cut_split(const OddManifoldData& m,
                                                      const CutSpec& spec) {
  const std::set<std::string> plus = id_set(spec.plus_side, "plus");
  const std::set<std::string> minus = id_set(spec.minus_side, "minus");

  for (const auto& id : plus)
    if (minus.contains(id))
      throw SpecError("circle '" + id + "' assigned to both sides");
  for (const auto& id : plus)
    if (m.find_circle(id) == nullptr)
      throw SpecError("plus side names unknown circle '" + id + "'");
  for (const auto& id : minus)
    if (m.find_circle(id) == nullptr)
      throw SpecError("minus side names unknown circle '" + id + "'");
  for (const auto& c : m.circles)
    if (!plus.contains(c.id) && !minus.contains(c.id))
      throw SpecError("circle '" + c.id + "' assigned to neither side");

  auto build_piece = [&](const std::set<std::string>& side, int seam_sigma,
                         const char* suffix) {
    OddManifoldData piece;
    piece.name = m.name + suffix;
    for (const auto& c : m.circles) {
      if (!side.contains(c.id))
        continue;
      piece.circles.push_back(c);
      keep_alpha_entry(m, c.id, piece);
    }
    for (std::size_t i = 0; i < spec.seam.size(); ++i) {
      const std::string seam_id = "Z" + std::to_string(i + 1);
      if (m.find_circle(seam_id) != nullptr)
        throw SpecError("seam id '" + seam_id + "' collides with an interior circle");
      piece.circles.push_back({seam_id, spec.seam[i].mu, +1, seam_sigma});
      piece.alpha.integrals[seam_id] = spec.seam[i].a;
    }
    validate(piece);
    return piece;
  };

  return {build_piece(plus, +1, "+"), build_piece(minus, -1, "-")};
}

std::int64_t reduce_circles(const CutSpec& spec) {
  std::int64_t degree = 0;
  for (const auto& record : spec.seam)
    degree += record.a;
  return degree;
}

QrReport qr_report(const OddManifoldData& m, const CutSpec& spec, Convention conv) {
  cut_split(m, spec); // reject specs that do not fit m
  QrReport report;
  report.q_invariant = quantize_odd3(m, conv).invariant_part();
  report.q_reduced = reduce_circles(spec);
  report.equal = report.q_invariant == report.q_reduced;
  return report;
}

//
// Cut spec I/O
//

namespace {

std::vector<std::string> decode_id_array(const json& v, const char* key) {
  if (!v.is_array())
    throw SchemaError(std::string("'") + key + "' must be an array of circle ids");
  std::vector<std::string> out;
  for (const json& id : v) {
    if (!id.is_string())
      throw SchemaError(std::string("entries of '") + key + "' must be strings");
    out.push_back(id.get<std::string>());
  }
  return out;
}

} // namespace

CutSpec parse_cut_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw SchemaError("cut spec must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (key != "plus" && key != "minus" && key != "seam")
      throw SchemaError("unknown field '" + key + "' in cut spec");

  CutSpec spec;
  if (auto it = doc.find("plus"); it != doc.end())
    spec.plus_side = decode_id_array(*it, "plus");
  if (auto it = doc.find("minus"); it != doc.end())
    spec.minus_side = decode_id_array(*it, "minus");
  if (auto it = doc.find("seam"); it != doc.end()) {
    if (!it->is_array())
      throw SchemaError("'seam' must be an array");
    for (const json& record : *it) {
      if (!record.is_object())
        throw SchemaError("each seam record must be an object");
      for (const auto& [key, value] : record.items())
        if (key != "mu" && key != "a")
          throw SchemaError("unknown field '" + key + "' in seam record");
      SeamRecord r;
      auto mu = record.find("mu");
      auto a = record.find("a");
      if (mu == record.end() || !mu->is_number_integer())
        throw SchemaError("seam record needs integer 'mu'");
      if (a == record.end() || !a->is_number_integer())
        throw SchemaError("seam record needs integer 'a'");
      r.mu = mu->get<std::int64_t>();
      r.a = a->get<std::int64_t>();
      spec.seam.push_back(r);
    }
  }
  return spec;
}

CutSpec load_cut_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw SchemaError("cannot open cut spec file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_cut_spec(ss.str());
}

} // namespace spinq

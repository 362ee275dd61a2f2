#include "pairstab/json_io.hpp"

#include "pairstab/errors.hpp"
#include "pairstab/graph6.hpp"

namespace pairstab {

namespace {

H bits_from_json(const Json& j, int dim, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw InvalidInput(where + ": expected a bit array of length " + std::to_string(dim));
  }
  std::vector<int> bits;
  for (const auto& b : j) {
    if (!b.is_number_integer()) throw InvalidInput(where + ": bits must be integers");
    bits.push_back(b.get<int>());
  }
  return tuple_to_mask(bits);
}

Json bits_to_json(H x, int dim) { return Json(mask_to_tuple(x, dim)); }

const Json& field(const Json& j, const char* key) {
  if (!j.contains(key)) throw InvalidInput(std::string("twist spec: missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const Permutation& p) { return Json(p.image()); }

Json to_json(const SigmaAutomorphism& s) {
  Json tuple = Json::array();
  for (const auto& p : s.tuple) tuple.push_back(to_json(p));
  return Json{{"sigma", emit_graph6(s.sigma)}, {"tuple", tuple}};
}

Json to_json(const StabilityVerdict& v) {
  Json reasons = Json::array();
  for (const auto& r : v.reasons) reasons.push_back({{"tag", r.tag}, {"detail", r.detail}});
  Json j{{"kind", to_string(v.kind)},
         {"aut_g", v.aut_g},
         {"aut_s", v.aut_s},
         {"aut_product", v.aut_product},
         {"reasons", reasons}};
  if (v.witness) {
    Json w{{"type", to_string(v.witness->kind)}, {"automorphism", to_json(v.witness->automorphism)}};
    if (v.witness->tuple) w["nondiagonal_tuple"] = to_json(*v.witness->tuple);
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const TwistSpec& spec) {
  Json gamma = Json::array();
  for (H r : spec.gamma.rows) gamma.push_back(bits_to_json(r, spec.dim));
  Json L = Json::array();
  for (const auto& gens : spec.L) {
    Json v = Json::array();
    for (H x : gens) v.push_back(bits_to_json(x, spec.dim));
    L.push_back(v);
  }
  Json omega = Json::object();
  for (const auto& [arc, xs] : spec.omega) {
    Json v = Json::array();
    for (H x : xs) v.push_back(bits_to_json(x, spec.dim));
    omega[std::to_string(arc.first) + "," + std::to_string(arc.second)] = v;
  }
  return Json{{"base", emit_graph6(spec.base)},     {"alpha", to_json(spec.alpha)},
              {"dim", spec.dim},                    {"gamma", gamma},
              {"L", L},                             {"omega", omega},
              {"h0", bits_to_json(spec.h0, spec.dim)}};
}

TwistSpec twist_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("twist spec must be a JSON object");
  TwistSpec spec;
  const Json& base = field(j, "base");
  if (!base.is_string()) throw InvalidInput("twist spec: 'base' must be a graph6 string");
  spec.base = parse_graph6(base.get<std::string>());
  const Json& dim = field(j, "dim");
  if (!dim.is_number_integer() || dim.get<int>() < 1 || dim.get<int>() > 20) {
    throw InvalidInput("twist spec: 'dim' must be an integer in 1..20");
  }
  spec.dim = dim.get<int>();
  const Json& alpha = field(j, "alpha");
  if (!alpha.is_array()) throw InvalidInput("twist spec: 'alpha' must be an array");
  std::vector<Vertex> image;
  for (const auto& x : alpha) {
    if (!x.is_number_integer()) throw InvalidInput("twist spec: 'alpha' entries must be integers");
    image.push_back(x.get<int>());
  }
  spec.alpha = Permutation(std::move(image));
  const Json& gamma = field(j, "gamma");
  if (!gamma.is_array() || static_cast<int>(gamma.size()) != spec.dim) {
    throw InvalidInput("twist spec: 'gamma' must list " + std::to_string(spec.dim) + " rows");
  }
  spec.gamma.dim = spec.dim;
  for (const auto& row : gamma) spec.gamma.rows.push_back(bits_from_json(row, spec.dim, "gamma"));
  const Json& L = field(j, "L");
  if (!L.is_array() || static_cast<int>(L.size()) != spec.base.order()) {
    throw InvalidInput("twist spec: 'L' must list one generator set per base vertex");
  }
  for (std::size_t v = 0; v < L.size(); ++v) {
    if (!L[v].is_array()) throw InvalidInput("twist spec: L entries must be arrays");
    std::vector<H> gens;
    for (const auto& x : L[v]) gens.push_back(bits_from_json(x, spec.dim, "L(" + std::to_string(v) + ")"));
    spec.L.push_back(std::move(gens));
  }
  const Json& omega = field(j, "omega");
  if (!omega.is_object()) throw InvalidInput("twist spec: 'omega' must map \"u,v\" to bit arrays");
  for (const auto& [key, xs] : omega.items()) {
    const auto comma = key.find(',');
    Vertex u = 0;
    Vertex v = 0;
    try {
      if (comma == std::string::npos) throw std::invalid_argument(key);
      std::size_t used = 0;
      u = std::stoi(key.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument(key);
      v = std::stoi(key.substr(comma + 1), &used);
      if (used != key.size() - comma - 1) throw std::invalid_argument(key);
    } catch (const std::logic_error&) {
      throw InvalidInput("twist spec: bad arc key '" + key + "'");
    }
    if (!xs.is_array()) throw InvalidInput("twist spec: omega values must be arrays");
    std::vector<H> set;
    for (const auto& x : xs) set.push_back(bits_from_json(x, spec.dim, "omega(" + key + ")"));
    spec.omega[{u, v}] = std::move(set);
  }
  spec.h0 = bits_from_json(field(j, "h0"), spec.dim, "h0");
  return spec;
}

}  // namespace pairstab

#include "icosapod/io.hpp"

#include <fstream>

#include "icosapod/error.hpp"

namespace icosapod {

namespace {

json vec3_json(const Vec3& v) { return json::array({v(0), v(1), v(2)}); }

double number(const json& j, const std::string& what) {
  if (!j.is_number()) throw Error(ErrorCode::Schema, what + " must be a number");
  return j.get<double>();
}

Vec3 vec3_from(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::Schema, what + " must be a 3-vector");
  return Vec3(number(j[0], what), number(j[1], what), number(j[2], what));
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::Schema, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

json matrix_json(const Mat4& m) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) rows.push_back(json::array({m(i, 0), m(i, 1), m(i, 2), m(i, 3)}));
  return rows;
}

Mat4 matrix_from(const json& j) {
  if (!j.is_array() || j.size() != 4) throw Error(ErrorCode::Schema, "a basis matrix needs 4 rows");
  Mat4 m;
  for (int i = 0; i < 4; ++i) {
    if (!j[i].is_array() || j[i].size() != 4) {
      throw Error(ErrorCode::Schema, "a basis matrix row needs 4 entries");
    }
    for (int k = 0; k < 4; ++k) m(i, k) = number(j[i][k], "matrix entry");
  }
  if (!m.allFinite()) throw Error(ErrorCode::Schema, "non-finite matrix entry");
  return m;
}

json hist_json(const std::map<int, int>& h) {
  json out = json::object();
  for (const auto& [k, v] : h) out[std::to_string(k)] = v;
  return out;
}

}  // namespace

std::string tool_version() { return ICOSAPOD_VERSION; }

json space_to_json(const Sym4Space& space) {
  json basis = json::array();
  for (const auto& b : space.basis) basis.push_back(matrix_json(b));
  return json{{"basis", basis}};
}

Sym4Space space_from_json(const json& j) {
  const json& basis = field(j, "basis");
  if (!basis.is_array() || basis.size() != 4) {
    throw Error(ErrorCode::Schema, "'basis' must hold exactly 4 matrices");
  }
  std::array<Mat4, 4> mats;
  for (int i = 0; i < 4; ++i) mats[i] = matrix_from(basis[i]);
  return Sym4Space::from_basis(mats);
}

json pod_to_json(const Pod& pod, const json& extra) {
  json legs = json::array();
  for (const auto& leg : pod.legs) {
    legs.push_back(json{{"a", vec3_json(leg.a)}, {"b", vec3_json(leg.b)}, {"d2", leg.d2}});
  }
  json prov = json::object();
  prov["source"] = pod.provenance.source;
  prov["version"] = tool_version();
  if (pod.provenance.seed) prov["seed"] = *pod.provenance.seed;
  if (pod.provenance.seed_line) {
    prov["seed_line"] = json{{"c", vec3_json(pod.provenance.seed_line->c)},
                             {"u", vec3_json(pod.provenance.seed_line->u)}};
  }
  if (pod.provenance.space) prov["space"] = space_to_json(*pod.provenance.space);
  if (!pod.provenance.node_multiplicities.empty()) {
    prov["node_multiplicities"] = pod.provenance.node_multiplicities;
  }
  prov["counts"] = json{{"real_finite", pod.real_finite},
                        {"at_infinity", pod.at_infinity},
                        {"complex", pod.complex_legs}};
  for (const auto& [k, v] : extra.items()) prov[k] = v;
  return json{{"legs", legs}, {"provenance", prov}};
}

Pod pod_from_json(const json& j) {
  const json& legs = field(j, "legs");
  if (!legs.is_array()) throw Error(ErrorCode::Schema, "'legs' must be an array");
  Pod pod;
  for (const auto& l : legs) {
    Leg leg{vec3_from(field(l, "a"), "a"), vec3_from(field(l, "b"), "b"), number(field(l, "d2"), "d2")};
    pod.legs.push_back(leg);
  }
  pod.real_finite = static_cast<int>(pod.legs.size());
  if (j.contains("provenance")) {
    const json& p = j.at("provenance");
    if (!p.is_object()) throw Error(ErrorCode::Schema, "'provenance' must be an object");
    if (p.contains("source") && p.at("source").is_string()) pod.provenance.source = p.at("source");
    if (p.contains("seed")) {
      if (!p.at("seed").is_number_unsigned()) throw Error(ErrorCode::Schema, "seed must be unsigned");
      pod.provenance.seed = p.at("seed").get<std::uint64_t>();
    }
    if (p.contains("seed_line")) {
      const json& sl = p.at("seed_line");
      pod.provenance.seed_line = LineR3{vec3_from(field(sl, "c"), "c"), vec3_from(field(sl, "u"), "u")};
    }
    if (p.contains("space")) pod.provenance.space = space_from_json(p.at("space"));
    if (p.contains("node_multiplicities")) {
      pod.provenance.node_multiplicities = p.at("node_multiplicities").get<std::vector<int>>();
    }
    if (p.contains("counts")) {
      const json& c = p.at("counts");
      pod.at_infinity = c.value("at_infinity", 0);
      pod.complex_legs = c.value("complex", 0);
    }
  }
  return pod;
}

json stats_to_json(const SurveyResult& stats, const json& extra) {
  json j{{"samples", stats.samples},
         {"seed", stats.seed},
         {"real_points_hist", hist_json(stats.real_points_hist)},
         {"real_preimage_hist", hist_json(stats.real_preimage_hist)},
         {"degenerate", stats.degenerate},
         {"version", tool_version()}};
  for (const auto& [k, v] : extra.items()) j[k] = v;
  return j;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::IO, "cannot read " + path.string());
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Schema, path.string() + ": " + e.what());
  }
}

void write_json(const json& j, const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::IO, "cannot write " + path.string());
  f << j.dump(2) << '\n';
  if (!f) throw Error(ErrorCode::IO, "write failed for " + path.string());
}

}  // namespace icosapod

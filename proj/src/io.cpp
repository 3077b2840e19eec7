#include "toric/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>

namespace toric {

namespace {

const Int kInt64Max = Int(std::numeric_limits<std::int64_t>::max());
const Int kInt64Min = Int(std::numeric_limits<std::int64_t>::min());

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace

json int_to_json(const Int& v) {
  if (v <= kInt64Max && v >= kInt64Min) return static_cast<std::int64_t>(v);
  return v.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw ParseError("expected an integer (number or decimal string)");
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(int_to_json(c));
  return a;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected a coordinate array");
  Vec v;
  for (const auto& c : j) v.push_back(int_from_json(c));
  return v;
}

json cone_to_json(const Cone& c) {
  json j;
  j["rank"] = c.ambient_rank();
  json rays = json::array();
  for (const auto& r : c.rays()) rays.push_back(vec_to_json(r));
  j["rays"] = rays;
  return j;
}

Cone cone_from_json(const json& j) {
  if (!j.contains("rank") || !j.contains("rays")) throw ParseError("cone file needs 'rank' and 'rays'");
  const std::size_t rank = j.at("rank").get<std::size_t>();
  std::vector<Vec> rays;
  for (const auto& r : j.at("rays")) {
    Vec v = vec_from_json(r);
    if (v.size() != rank) throw ParseError("cone ray length differs from rank");
    rays.push_back(std::move(v));
  }
  return Cone::from_generators(rank, rays);
}

json pairs_to_json(const Face& tau, const DemazureRootPairSet& pairs) {
  json j;
  j["tau_rays"] = tau.ray_indices;
  json arr = json::array();
  for (const auto& p : pairs.pairs) {
    json e;
    e["e1"] = vec_to_json(p.e1.vector);
    e["e2"] = vec_to_json(p.e2.vector);
    arr.push_back(e);
  }
  j["pairs"] = arr;
  return j;
}

std::vector<std::size_t> tau_rays_from_json(const json& j) {
  if (!j.contains("tau_rays")) throw ParseError("pair set needs 'tau_rays'");
  std::vector<std::size_t> idx = j.at("tau_rays").get<std::vector<std::size_t>>();
  std::sort(idx.begin(), idx.end());
  return idx;
}

DemazureRootPairSet pairs_from_json(const Cone& sigma, const json& j) {
  if (!j.contains("pairs")) throw ParseError("pair set needs 'pairs'");
  DemazureRootPairSet out;
  for (const auto& p : j.at("pairs")) {
    const Vec e1 = vec_from_json(p.at("e1"));
    const Vec e2 = vec_from_json(p.at("e2"));
    const auto r1 = is_demazure_root(sigma, e1);
    const auto r2 = is_demazure_root(sigma, e2);
    if (!r1 || !r2) throw ParseError("pair member is not a Demazure root of the cone");
    out.pairs.push_back(RootPair{DemazureRoot{e1, *r1}, DemazureRoot{e2, *r2}});
  }
  return out;
}

json monoid_to_json(const RootMonoid& X) {
  json j;
  j["cone"] = cone_to_json(X.sigma());
  j["tau_rays"] = X.tau().ray_indices;
  json arr = json::array();
  for (const auto& p : X.roots().pairs) {
    json e;
    e["e1"] = vec_to_json(p.e1.vector);
    e["e2"] = vec_to_json(p.e2.vector);
    arr.push_back(e);
  }
  j["pairs"] = arr;
  return j;
}

RootMonoid monoid_from_json(const json& j) {
  if (!j.contains("cone")) throw ParseError("monoid file needs 'cone'");
  const Cone sigma = cone_from_json(j.at("cone"));
  const auto tau_idx = tau_rays_from_json(j);
  const auto tau = face_from_rays(sigma, tau_idx);
  if (!tau) throw ParseError("tau_rays do not span a face of the cone");
  return RootMonoid::build(sigma, *tau, pairs_from_json(sigma, j));
}

json point_to_json(const RootMonoid& X, const Point& p) {
  json j;
  j["face_rays"] = p.face_rays;
  json basis = json::array();
  for (const auto& b : X.face_basis(X.face_of(p))) basis.push_back(vec_to_json(b));
  j["basis"] = basis;
  json values = json::array();
  for (const auto& v : p.values) values.push_back(to_string(v));
  j["values"] = values;
  return j;
}

Point point_from_json(const RootMonoid& X, const json& j) {
  if (!j.contains("face_rays") || !j.contains("basis") || !j.contains("values"))
    throw ParseError("point file needs 'face_rays', 'basis' and 'values'");
  std::vector<std::size_t> face_rays = j.at("face_rays").get<std::vector<std::size_t>>();
  std::sort(face_rays.begin(), face_rays.end());
  const auto face = face_from_rays(X.sigma(), face_rays);
  if (!face) throw ParseError("face_rays do not span a face of the cone");

  std::vector<Vec> file_basis;
  for (const auto& b : j.at("basis")) file_basis.push_back(vec_from_json(b));
  std::vector<Rat> file_values;
  for (const auto& v : j.at("values")) {
    const auto r = v.is_string() ? parse_rat(v.get<std::string>()) : parse_rat(v.dump());
    if (!r || *r == 0) throw ParseError("point values must be nonzero rationals 'p/q'");
    file_values.push_back(*r);
  }
  if (file_basis.size() != file_values.size()) throw ParseError("point basis and values differ in length");

  const auto& canonical = X.face_basis(*face);
  if (file_basis.size() != canonical.size()) throw ParseError("point basis has the wrong rank for its face");

  // Re-express on the canonical basis; both decompositions must be integral,
  // which certifies the file basis generates the same lattice.
  std::vector<Rat> values;
  for (const auto& b : canonical) {
    const auto coeffs = decompose_in_sublattice(b, file_basis);
    if (!coeffs) throw ParseError("point basis does not generate the face lattice");
    Rat v = 1;
    for (std::size_t l = 0; l < coeffs->size(); ++l) v *= pow_rat(file_values[l], (*coeffs)[l]);
    values.push_back(v);
  }
  for (const auto& b : file_basis)
    if (!decompose_in_sublattice(b, canonical)) throw ParseError("point basis escapes the face lattice");
  return X.make_point(*face, std::move(values));
}

json locus_to_json(const RootMonoid& X, const IdempotentLocus& locus) {
  json j;
  j["face_rays"] = locus.gamma.ray_indices;
  switch (locus.tag) {
    case IdempotentCase::singleton: j["case"] = "singleton"; break;
    case IdempotentCase::empty: j["case"] = "empty"; break;
    case IdempotentCase::positive: j["case"] = "positive"; break;
  }
  j["certificate"] = locus.certificate;
  json eqs = json::array();
  for (const auto& u : locus.equations) eqs.push_back(vec_to_json(u));
  j["equations"] = eqs;
  if (locus.witness) j["witness"] = point_to_json(X, *locus.witness);
  return j;
}

json center_to_json(const CenterLocus& locus) {
  json j;
  j["branch"] = locus.active_branch ? "active" : "non-active";
  j["index_bound"] = int_to_json(locus.index_bound);
  json vanish = json::array();
  for (const auto& u : locus.vanishing) vanish.push_back(vec_to_json(u));
  j["vanishing"] = vanish;
  json eqs = json::array();
  for (const auto& e : locus.equalities) {
    json q;
    q["pair"] = e.r;
    q["u"] = vec_to_json(e.u);
    q["lhs"] = vec_to_json(e.lhs);
    q["rhs"] = vec_to_json(e.rhs);
    eqs.push_back(q);
  }
  j["equalities"] = eqs;
  return j;
}

json parse_json(const std::string& text) { return json::parse(text); }

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace toric

// Python bindings for the core operations: presets, monoid arithmetic,
// one-parameter actions, idempotent classification and center equations.
// Exact rationals cross the boundary as strings "p/q"; structured results as
// JSON strings (unpacked to dicts in the package __init__).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toric/actions.hpp"
#include "toric/center.hpp"
#include "toric/idempotents.hpp"
#include "toric/io.hpp"
#include "toric/presets.hpp"

namespace py = pybind11;
using namespace toric;

namespace {

Vec to_vec(const std::vector<long long>& v) {
  Vec out;
  for (auto c : v) out.push_back(Int(c));
  return out;
}

std::vector<long long> from_vec(const Vec& v) {
  std::vector<long long> out;
  for (const auto& c : v) out.push_back(static_cast<long long>(c));
  return out;
}

Rat to_rat(const std::string& s) {
  const auto r = parse_rat(s);
  if (!r) throw py::value_error("expected a rational 'p/q': " + s);
  return *r;
}

struct PyMonoid {
  RootMonoid X;

  Face face(const std::vector<std::size_t>& rays) const {
    auto sorted = rays;
    std::sort(sorted.begin(), sorted.end());
    const auto f = face_from_rays(X.sigma(), sorted);
    if (!f) throw py::value_error("ray indices do not span a face");
    return *f;
  }

  DemazureRoot root(const std::vector<long long>& e) const {
    const Vec v = to_vec(e);
    const auto idx = is_demazure_root(X.sigma(), v);
    if (!idx) throw py::value_error("not a Demazure root of the cone");
    return DemazureRoot{v, *idx};
  }
};

std::vector<std::string> values_out(const Point& p) {
  std::vector<std::string> out;
  for (const auto& v : p.values) out.push_back(to_string(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact root-monoid arithmetic on affine toric varieties";

  py::class_<Point>(m, "Point")
      .def_readonly("face_rays", &Point::face_rays)
      .def_property_readonly("values", &values_out)
      .def("__eq__", [](const Point& a, const Point& b) { return a == b; })
      .def("__repr__", [](const Point& p) {
        std::string s = "Point(face_rays=[";
        for (std::size_t i = 0; i < p.face_rays.size(); ++i)
          s += (i ? "," : "") + std::to_string(p.face_rays[i]);
        s += "], values=[";
        for (std::size_t i = 0; i < p.values.size(); ++i) s += (i ? "," : "") + to_string(p.values[i]);
        return s + "])";
      });

  py::class_<PyMonoid>(m, "RootMonoid")
      .def_property_readonly("is_active", [](const PyMonoid& self) { return self.X.is_active(); })
      .def_property_readonly("is_commutative", [](const PyMonoid& self) { return self.X.is_commutative(); })
      .def_property_readonly("neutral", [](const PyMonoid& self) { return self.X.neutral(); })
      .def_property_readonly("rank", [](const PyMonoid& self) { return self.X.sigma().ambient_rank(); })
      .def_property_readonly("unipotent_rank", [](const PyMonoid& self) { return self.X.unipotent_rank(); })
      .def_property_readonly("rays",
                             [](const PyMonoid& self) {
                               std::vector<std::vector<long long>> out;
                               for (const auto& r : self.X.sigma().rays()) out.push_back(from_vec(r));
                               return out;
                             })
      .def_property_readonly("semigroup_generators",
                             [](const PyMonoid& self) {
                               std::vector<std::vector<long long>> out;
                               for (const auto& g : self.X.semigroup().generators) out.push_back(from_vec(g));
                               return out;
                             })
      .def("faces",
           [](const PyMonoid& self) {
             std::vector<std::vector<std::size_t>> out;
             for (const auto& f : self.X.all_faces()) out.push_back(f.ray_indices);
             return out;
           })
      .def("point",
           [](const PyMonoid& self, const std::vector<std::size_t>& face_rays,
              const std::vector<std::string>& values) {
             std::vector<Rat> vals;
             for (const auto& v : values) vals.push_back(to_rat(v));
             return self.X.make_point(self.face(face_rays), std::move(vals));
           },
           py::arg("face_rays"), py::arg("values"))
      .def("multiply",
           [](const PyMonoid& self, const Point& x, const Point& y) { return self.X.multiply(x, y); })
      .def("inverse", [](const PyMonoid& self, const Point& x) { return self.X.inverse(x); })
      .def("is_invertible", [](const PyMonoid& self, const Point& x) { return self.X.is_invertible(x); })
      .def("is_idempotent", [](const PyMonoid& self, const Point& x) { return is_idempotent(self.X, x); })
      .def("evaluate",
           [](const PyMonoid& self, const Point& x, const std::vector<long long>& u) {
             return to_string(self.X.evaluate(x, to_vec(u)));
           })
      .def("act_torus",
           [](const PyMonoid& self, const std::vector<std::string>& t, const Point& x) {
             std::vector<Rat> vals;
             for (const auto& v : t) vals.push_back(to_rat(v));
             return ambient_torus_action(self.X, vals, x);
           })
      .def("act_ray",
           [](const PyMonoid& self, const std::vector<long long>& p, const std::string& t, const Point& x) {
             return ray_subtorus_action(self.X, to_vec(p), to_rat(t), x);
           })
      .def("act_root",
           [](const PyMonoid& self, const std::vector<long long>& e, const std::string& a, const Point& x) {
             return root_subgroup_action(self.X, self.root(e), to_rat(a), x);
           })
      .def("he_pairs",
           [](const PyMonoid& self, const std::vector<long long>& e) {
             std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> out;
             for (const auto& pr : he_connected_pairs(self.X.sigma(), self.root(e)))
               out.emplace_back(pr.gamma1.ray_indices, pr.gamma2.ray_indices);
             return out;
           })
      .def("classify_idempotents_json",
           [](const PyMonoid& self, const std::vector<std::size_t>& face_rays) {
             return locus_to_json(self.X, classify(self.X, self.face(face_rays))).dump();
           })
      .def("center_equations_json",
           [](const PyMonoid& self, long long bound) {
             return center_to_json(center_equations(self.X, Int(bound))).dump();
           },
           py::arg("bound") = 6)
      .def("is_central",
           [](const PyMonoid& self, const Point& x, std::size_t samples, std::uint64_t seed) {
             return is_central(self.X, x, samples, seed);
           },
           py::arg("x"), py::arg("samples") = 20, py::arg("seed") = 0)
      .def("to_json", [](const PyMonoid& self) { return monoid_to_json(self.X).dump(); });

  m.def("affine_monoid",
        [](std::size_t n, std::size_t k, const std::vector<std::vector<long long>>& a,
           const std::vector<std::vector<long long>>& b) {
          std::vector<Vec> av, bv;
          for (const auto& row : a) av.push_back(to_vec(row));
          for (const auto& row : b) bv.push_back(to_vec(row));
          return PyMonoid{affine_space_monoid(n, k, av, bv)};
        },
        py::arg("n"), py::arg("k"), py::arg("a"), py::arg("b"));

  m.def("cylinder_monoid",
        [](long long a1, long long b1, long long a2, long long b2, long long c1, long long d1, long long c2,
           long long d2) {
          return PyMonoid{quadric_cylinder_monoid(
              CylinderParams{Int(a1), Int(b1), Int(a2), Int(b2), Int(c1), Int(d1), Int(c2), Int(d2)})};
        });

  m.def("monoid_from_json", [](const std::string& text) { return PyMonoid{monoid_from_json(parse_json(text))}; });

  m.def("dual_cone_json", [](const std::string& text) {
    return cone_to_json(dual_cone(cone_from_json(parse_json(text)))).dump();
  });

  m.def("hilbert_basis_json", [](const std::string& text) {
    const auto hb = hilbert_basis(cone_from_json(parse_json(text)));
    json j;
    j["certified"] = hb.certified;
    json arr = json::array();
    for (const auto& g : hb.generators) arr.push_back(vec_to_json(g));
    j["generators"] = arr;
    return j.dump();
  });
}

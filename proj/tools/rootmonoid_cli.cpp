// Command-line front end: cone / roots / monoid / act / idem / center /
// preset subcommands over the JSON file formats, with seed-deterministic
// verification reports.
//
// Exit codes: 0 success, 1 failed checks, 2 parse or usage errors.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "toric/actions.hpp"
#include "toric/center.hpp"
#include "toric/idempotents.hpp"
#include "toric/io.hpp"
#include "toric/presets.hpp"
#include "toric/rng.hpp"

namespace {

using namespace toric;

struct CheckOutcome {
  std::size_t passed = 0;
  std::size_t failed = 0;
  json counterexamples = json::array();

  void record(bool ok, const std::string& what, const json& detail = {}) {
    if (ok) {
      ++passed;
    } else {
      ++failed;
      json c;
      c["check"] = what;
      if (!detail.is_null()) c["detail"] = detail;
      counterexamples.push_back(c);
    }
  }
};

json make_report(const std::string& command, std::uint64_t seed, const CheckOutcome& out) {
  json r;
  r["command"] = command;
  r["seed"] = seed;
  r["passed"] = out.passed;
  r["failed"] = out.failed;
  r["counterexamples"] = out.counterexamples;
  return r;
}

json read_input(const std::string& path) {
  if (path == "-") {
    json j;
    std::cin >> j;
    return j;
  }
  return load_json_file(path);
}

// Accepts either a cone file or a monoid file (whose cone is used).
Cone cone_input(const std::string& path) {
  json j = read_input(path);
  if (j.contains("cone")) j = j.at("cone");
  return cone_from_json(j);
}

Vec parse_vec_arg(const std::string& s) {
  Vec v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(Int(tok));
  return v;
}

std::vector<Vec> parse_vec_rows(const std::string& s) {
  std::vector<Vec> rows;
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(parse_vec_arg(row));
  return rows;
}

std::vector<std::size_t> parse_index_list(const std::string& s) {
  std::vector<std::size_t> idx;
  if (s.empty()) return idx;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) idx.push_back(std::stoul(tok));
  std::sort(idx.begin(), idx.end());
  return idx;
}

Rat parse_rat_arg(const std::string& s) {
  const auto r = parse_rat(s);
  if (!r) throw std::runtime_error("expected a rational 'p/q': " + s);
  return *r;
}

Face face_arg(const Cone& sigma, const std::string& rays) {
  const auto f = face_from_rays(sigma, parse_index_list(rays));
  if (!f) throw std::runtime_error("ray indices do not span a face: [" + rays + "]");
  return *f;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ROOTMONOID_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

void emit(const json& j, bool as_json, const std::string& human) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << human;
}

std::string render_report(const json& r) {
  std::ostringstream os;
  os << r["command"].get<std::string>() << ": " << r["passed"] << " passed, " << r["failed"]
     << " failed (seed " << r["seed"] << ")\n";
  for (const auto& c : r["counterexamples"])
    os << "  counterexample: " << c.dump() << "\n";
  return os.str();
}

int finish_checks(const std::string& command, std::uint64_t seed, const CheckOutcome& out, bool as_json,
                  double elapsed_s) {
  const json r = make_report(command, seed, out);
  std::ostringstream human;
  human << render_report(r);
  human.precision(3);
  human << "  time: " << std::fixed << elapsed_s << " s\n";
  emit(r, as_json, human.str());
  return out.failed == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------

int run_monoid_check(const RootMonoid& X, std::size_t samples, std::uint64_t seed, bool as_json) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(seed);
  CheckOutcome out;
  for (std::size_t s = 0; s < samples; ++s) {
    Point pts[3];
    for (auto& p : pts) {
      const auto& f = X.all_faces()[rng.uniform(0, static_cast<long>(X.all_faces().size()) - 1)];
      std::vector<Rat> values;
      for (std::size_t l = 0; l < X.face_basis(f).size(); ++l) values.push_back(rng.nonzero_rat());
      p = X.make_point(f, values);
    }
    const auto& [x, y, z] = pts;
    json inputs;
    inputs["x"] = point_to_json(X, x);
    inputs["y"] = point_to_json(X, y);
    inputs["z"] = point_to_json(X, z);

    const Point lhs = X.multiply(X.multiply(x, y), z);
    const Point rhs = X.multiply(x, X.multiply(y, z));
    json assoc = inputs;
    assoc["lhs"] = point_to_json(X, lhs);
    assoc["rhs"] = point_to_json(X, rhs);
    out.record(lhs == rhs, "associativity", assoc);

    const Point ex = X.multiply(X.neutral(), x);
    const Point xe = X.multiply(x, X.neutral());
    json neutral = inputs;
    neutral["lhs"] = point_to_json(X, ex);
    neutral["rhs"] = point_to_json(X, xe);
    out.record(ex == x && xe == x, "neutral element", neutral);

    if (X.is_invertible(x)) {
      const Point inv = X.inverse(x);
      const Point xi = X.multiply(x, inv), ix = X.multiply(inv, x);
      json invd = inputs;
      invd["lhs"] = point_to_json(X, xi);
      invd["rhs"] = point_to_json(X, ix);
      out.record(xi == X.neutral() && ix == X.neutral(), "inverse law", invd);
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return finish_checks("monoid check", seed, out, as_json, secs);
}

int run_idem_verify(const RootMonoid& X, const Face& gamma, std::size_t samples, std::uint64_t seed,
                    bool as_json) {
  const auto start = std::chrono::steady_clock::now();
  CheckOutcome out;
  const auto report = verify_orbit_structure(X, gamma, samples, seed);
  out.passed = report.torus_translates_checked + report.flow_points_checked + report.off_locus_checked -
               report.failures.size();
  for (const auto& f : report.failures) out.record(false, f);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return finish_checks("idem verify", seed, out, as_json, secs);
}

int run_center_verify(const RootMonoid& X, std::size_t samples, std::uint64_t seed, bool as_json) {
  const auto start = std::chrono::steady_clock::now();
  CheckOutcome out;
  const auto report = center_cross_validate(X, samples, seed);
  out.passed = report.soundness_checked + report.completeness_checked - report.failures.size();
  for (const auto& f : report.failures) out.record(false, f);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return finish_checks("center verify", seed, out, as_json, secs);
}

std::string render_cone(const Cone& c) {
  std::ostringstream os;
  os << "cone: rank " << c.ambient_rank() << ", dim " << c.dim() << "\n";
  for (const auto& r : c.rays()) os << "  ray " << to_string(r) << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"root monoids on affine toric varieties: exact construction and verification"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of tables");
  std::uint64_t seed = default_seed();
  app.add_option("--seed", seed, "seed for all sampling (env ROOTMONOID_SEED)");

  std::string cone_path, monoid_path, pairs_path, x_path, y_path, face_rays, tau_rays;
  std::string vec_arg, t_arg, a_arg, params_arg, a_rows, b_rows, diff_rows;
  std::size_t n_arg = 0, k_arg = 0, ray_index = 0;
  std::size_t samples = 100;
  long bound = 5;
  long center_bound = 6;
  std::function<int()> action;

  // cone ------------------------------------------------------------------
  auto* cone_cmd = app.add_subcommand("cone", "cone-level operations");
  {
    auto* dual = cone_cmd->add_subcommand("dual", "extreme rays of the dual cone");
    dual->add_option("--cone", cone_path, "cone JSON file ('-' for stdin)")->required();
    dual->callback([&] {
      action = [&]() {
        const Cone d = dual_cone(cone_input(cone_path));
        emit(cone_to_json(d), as_json, render_cone(d));
        return 0;
      };
    });

    auto* fc = cone_cmd->add_subcommand("faces", "all faces with supporting functionals");
    fc->add_option("--cone", cone_path, "cone JSON file")->required();
    fc->callback([&] {
      action = [&]() {
        const Cone c = cone_input(cone_path);
        json arr = json::array();
        std::ostringstream os;
        for (const auto& f : faces(c)) {
          json jf;
          jf["rays"] = f.ray_indices;
          jf["dim"] = face_dim(c, f);
          jf["functional"] = vec_to_json(f.functional);
          jf["regular"] = is_regular_face(c, f);
          arr.push_back(jf);
          os << "face { ";
          for (auto i : f.ray_indices) os << i << " ";
          os << "} dim " << face_dim(c, f) << (is_regular_face(c, f) ? " regular" : "") << "\n";
        }
        emit(arr, as_json, os.str());
        return 0;
      };
    });

    auto* hb = cone_cmd->add_subcommand("hilbert", "Hilbert basis of the cone's lattice points");
    hb->add_option("--cone", cone_path, "cone JSON file")->required();
    hb->add_option("--bound", bound, "fallback box bound");
    hb->callback([&] {
      action = [&]() {
        const auto basis = hilbert_basis(cone_input(cone_path), Int(bound));
        json j;
        j["certified"] = basis.certified;
        json arr = json::array();
        std::ostringstream os;
        for (const auto& g : basis.generators) {
          arr.push_back(vec_to_json(g));
          os << "  " << to_string(g) << "\n";
        }
        j["generators"] = arr;
        emit(j, as_json,
             "hilbert basis (" + std::string(basis.certified ? "certified" : "bounded search") + "):\n" + os.str());
        return 0;
      };
    });
  }

  // roots -----------------------------------------------------------------
  auto* roots_cmd = app.add_subcommand("roots", "Demazure roots");
  {
    auto* en = roots_cmd->add_subcommand("enumerate", "roots of one ray up to a coordinate bound");
    en->add_option("--cone", cone_path)->required();
    en->add_option("--ray", ray_index, "distinguished ray index")->required();
    en->add_option("--bound", bound, "max-norm bound");
    en->callback([&] {
      action = [&]() {
        const Cone c = cone_input(cone_path);
        json arr = json::array();
        std::ostringstream os;
        for (const auto& r : enumerate_roots(c, ray_index, Int(bound))) {
          arr.push_back(vec_to_json(r.vector));
          os << "  " << to_string(r.vector) << "\n";
        }
        emit(arr, as_json, os.str());
        return 0;
      };
    });

    auto* ck = roots_cmd->add_subcommand("check", "compatibility of a root pair set with a face");
    ck->add_option("--cone", cone_path)->required();
    ck->add_option("--tau", tau_rays, "face ray indices, comma separated");
    ck->add_option("--pairs", pairs_path, "pair set JSON file")->required();
    ck->callback([&] {
      action = [&]() {
        const Cone c = cone_input(cone_path);
        const json pj = read_input(pairs_path);
        const Face tau = tau_rays.empty() ? face_arg(c, [&] {
          std::string s;
          for (auto i : tau_rays_from_json(pj)) s += (s.empty() ? "" : ",") + std::to_string(i);
          return s;
        }())
                                          : face_arg(c, tau_rays);
        const auto check = is_compatible_set(c, tau, pairs_from_json(c, pj));
        json j;
        j["compatible"] = check.compatible;
        j["certificate"] = check.describe();
        emit(j, as_json, check.describe() + "\n");
        return check.compatible ? 0 : 1;
      };
    });

    auto* cs = roots_cmd->add_subcommand("construct", "compatible pairs with prescribed differences");
    cs->add_option("--cone", cone_path)->required();
    cs->add_option("--tau", tau_rays)->required();
    cs->add_option("--differences", diff_rows, "rows 'c1;c2;...' of lattice vectors")->required();
    cs->callback([&] {
      action = [&]() {
        const Cone c = cone_input(cone_path);
        const Face tau = face_arg(c, tau_rays);
        const auto set = compatible_pairs_with_differences(c, tau, parse_vec_rows(diff_rows));
        const json j = pairs_to_json(tau, set);
        std::ostringstream os;
        for (const auto& p : set.pairs)
          os << "  e1 " << to_string(p.e1.vector) << "  e2 " << to_string(p.e2.vector) << "\n";
        emit(j, as_json, os.str());
        return 0;
      };
    });
  }

  // monoid ----------------------------------------------------------------
  auto* monoid_cmd = app.add_subcommand("monoid", "root monoid construction and laws");
  {
    auto* bd = monoid_cmd->add_subcommand("build", "validate and derive a root monoid");
    bd->add_option("--cone", cone_path);
    bd->add_option("--tau", tau_rays);
    bd->add_option("--pairs", pairs_path);
    bd->add_option("--monoid", monoid_path, "monoid JSON (alternative to cone/tau/pairs)");
    bd->callback([&] {
      action = [&]() {
        json mj;
        if (!monoid_path.empty()) {
          mj = read_input(monoid_path);
        } else {
          json cj = read_input(cone_path);
          if (cj.contains("cone")) cj = cj.at("cone");
          mj["cone"] = cj;
          mj["tau_rays"] = parse_index_list(tau_rays);
          mj["pairs"] = read_input(pairs_path)["pairs"];
        }
        const RootMonoid X = monoid_from_json(mj);
        json j = monoid_to_json(X);
        json derived;
        derived["active"] = X.is_active();
        derived["commutative"] = X.is_commutative();
        json chars = json::array();
        for (const auto& chi : X.characters()) chars.push_back(vec_to_json(chi));
        derived["characters"] = chars;
        json gens = json::array();
        for (const auto& g : X.semigroup().generators) gens.push_back(vec_to_json(g));
        derived["semigroup_generators"] = gens;
        derived["neutral"] = point_to_json(X, X.neutral());
        j["derived"] = derived;
        std::ostringstream os;
        os << "root monoid: k = " << X.unipotent_rank() << (X.is_active() ? ", active" : ", non-active")
           << (X.is_commutative() ? ", commutative" : "") << "\n";
        emit(j, as_json, os.str());
        return 0;
      };
    });

    auto* mul = monoid_cmd->add_subcommand("mul", "multiply two points");
    mul->add_option("--monoid", monoid_path)->required();
    mul->add_option("--x", x_path)->required();
    mul->add_option("--y", y_path)->required();
    mul->callback([&] {
      action = [&]() {
        const RootMonoid X = monoid_from_json(read_input(monoid_path));
        const Point z = X.multiply(point_from_json(X, read_input(x_path)), point_from_json(X, read_input(y_path)));
        emit(point_to_json(X, z), as_json, point_to_json(X, z).dump(2) + "\n");
        return 0;
      };
    });

    auto* inv = monoid_cmd->add_subcommand("inv", "invert an invertible point");
    inv->add_option("--monoid", monoid_path)->required();
    inv->add_option("--x", x_path)->required();
    inv->callback([&] {
      action = [&]() {
        const RootMonoid X = monoid_from_json(read_input(monoid_path));
        const Point z = X.inverse(point_from_json(X, read_input(x_path)));
        emit(point_to_json(X, z), as_json, point_to_json(X, z).dump(2) + "\n");
        return 0;
      };
    });

    auto* ck = monoid_cmd->add_subcommand("check", "associativity, neutral and inverse law suites");
    ck->add_option("--monoid", monoid_path)->required();
    ck->add_option("--samples", samples);
    ck->callback([&] {
      action = [&]() {
        return run_monoid_check(monoid_from_json(read_input(monoid_path)), samples, seed, as_json);
      };
    });
  }

  // act -------------------------------------------------------------------
  auto* act_cmd = app.add_subcommand("act", "one-parameter group actions on points");
  {
    auto* torus = act_cmd->add_subcommand("torus", "ambient torus action");
    torus->add_option("--monoid", monoid_path)->required();
    torus->add_option("--t", t_arg, "torus values 'p/q,...' on the standard basis")->required();
    torus->add_option("--x", x_path)->required();
    torus->callback([&] {
      action = [&]() {
        const RootMonoid X = monoid_from_json(read_input(monoid_path));
        std::vector<Rat> t;
        std::stringstream ss(t_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) t.push_back(parse_rat_arg(tok));
        const Point z = ambient_torus_action(X, t, point_from_json(X, read_input(x_path)));
        emit(point_to_json(X, z), as_json, point_to_json(X, z).dump(2) + "\n");
        return 0;
      };
    });

    auto* ray = act_cmd->add_subcommand("ray", "one-parameter subtorus of a primitive vector");
    ray->add_option("--monoid", monoid_path)->required();
    ray->add_option("--p", vec_arg, "primitive lattice vector")->required();
    ray->add_option("--t", t_arg, "nonzero rational parameter")->required();
    ray->add_option("--x", x_path)->required();
    ray->callback([&] {
      action = [&]() {
        const RootMonoid X = monoid_from_json(read_input(monoid_path));
        const Point z =
            ray_subtorus_action(X, parse_vec_arg(vec_arg), parse_rat_arg(t_arg), point_from_json(X, read_input(x_path)));
        emit(point_to_json(X, z), as_json, point_to_json(X, z).dump(2) + "\n");
        return 0;
      };
    });

    auto* root = act_cmd->add_subcommand("root", "root subgroup flow");
    root->add_option("--monoid", monoid_path)->required();
    root->add_option("--e", vec_arg, "Demazure root vector")->required();
    root->add_option("--a", a_arg, "flow parameter p/q")->required();
    root->add_option("--x", x_path)->required();
    root->callback([&] {
      action = [&]() {
        const RootMonoid X = monoid_from_json(read_input(monoid_path));
        const Vec e = parse_vec_arg(vec_arg);
        const auto idx = is_demazure_root(X.sigma(), e);
        if (!idx) throw std::runtime_error("--e is not a Demazure root of the monoid's cone");
        const Point z = root_subgroup_action(X, DemazureRoot{e, *idx}, parse_rat_arg(a_arg),
                                             point_from_json(X, read_input(x_path)));
        emit(point_to_json(X, z), as_json, point_to_json(X, z).dump(2) + "\n");
        return 0;
      };
    });

    auto* pairs = act_cmd->add_subcommand("pairs", "H_e-connected orbit pairs");
    pairs->add_option("--cone", cone_path)->required();
    pairs->add_option("--e", vec_arg)->required();
    pairs->callback([&] {
      action = [&]() {
        const Cone c = cone_input(cone_path);
        const Vec e = parse_vec_arg(vec_arg);
        const auto idx = is_demazure_root(c, e);
        if (!idx) throw std::runtime_error("--e is not a Demazure root of the cone");
        json arr = json::array();
        std::ostringstream os;
        for (const auto& pr : he_connected_pairs(c, DemazureRoot{e, *idx})) {
          json jp;
          jp["gamma1"] = pr.gamma1.ray_indices;
          jp["gamma2"] = pr.gamma2.ray_indices;
          arr.push_back(jp);
          os << "  { ";
          for (auto i : pr.gamma1.ray_indices) os << i << " ";
          os << "} -> { ";
          for (auto i : pr.gamma2.ray_indices) os << i << " ";
          os << "}\n";
        }
        emit(arr, as_json, os.str());
        return 0;
      };
    });
  }

  // idem ------------------------------------------------------------------
  auto* idem_cmd = app.add_subcommand("idem", "idempotent loci per torus orbit");
  {
    auto* cl = idem_cmd->add_subcommand("classify", "classify E_gamma (every face when --face omitted)");
    cl->add_option("--monoid", monoid_path)->required();
    cl->add_option("--face", face_rays, "face ray indices");
    cl->callback([&] {
      action = [&]() {
        const RootMonoid X = monoid_from_json(read_input(monoid_path));
        json arr = json::array();
        std::ostringstream os;
        std::vector<Face> targets;
        if (face_rays.empty())
          targets = X.all_faces();
        else
          targets.push_back(face_arg(X.sigma(), face_rays));
        for (const auto& f : targets) {
          const auto locus = classify(X, f);
          arr.push_back(locus_to_json(X, locus));
          os << "face { ";
          for (auto i : f.ray_indices) os << i << " ";
          os << "}: " << arr.back()["case"].get<std::string>() << "\n";
        }
        emit(face_rays.empty() ? arr : arr[0], as_json, os.str());
        return 0;
      };
    });

    auto* vf = idem_cmd->add_subcommand("verify", "sampled orbit-structure verification");
    vf->add_option("--monoid", monoid_path)->required();
    vf->add_option("--face", face_rays)->required();
    vf->add_option("--samples", samples);
    vf->callback([&] {
      action = [&]() {
        const RootMonoid X = monoid_from_json(read_input(monoid_path));
        return run_idem_verify(X, face_arg(X.sigma(), face_rays), samples, seed, as_json);
      };
    });
  }

  // center ----------------------------------------------------------------
  auto* center_cmd = app.add_subcommand("center", "center of the monoid");
  {
    auto* eq = center_cmd->add_subcommand("equations", "defining equations of the center");
    eq->add_option("--monoid", monoid_path)->required();
    eq->add_option("--bound", center_bound, "index degree bound");
    eq->callback([&] {
      action = [&]() {
        const RootMonoid X = monoid_from_json(read_input(monoid_path));
        const auto locus = center_equations(X, Int(center_bound));
        std::ostringstream os;
        os << (locus.active_branch ? "active" : "non-active") << " branch; " << locus.vanishing.size()
           << " vanishing characters, " << locus.equalities.size() << " equalities\n";
        for (const auto& u : locus.vanishing) os << "  chi^" << to_string(u) << " = 0\n";
        for (const auto& e : locus.equalities)
          os << "  chi^" << to_string(e.lhs) << " = chi^" << to_string(e.rhs) << "\n";
        emit(center_to_json(locus), as_json, os.str());
        return 0;
      };
    });

    auto* vf = center_cmd->add_subcommand("verify", "two-way sampled validation of the equations");
    vf->add_option("--monoid", monoid_path)->required();
    vf->add_option("--samples", samples);
    vf->callback([&] {
      action = [&]() {
        return run_center_verify(monoid_from_json(read_input(monoid_path)), samples, seed, as_json);
      };
    });
  }

  // preset ----------------------------------------------------------------
  auto* preset_cmd = app.add_subcommand("preset", "worked-example monoids");
  {
    auto* aff = preset_cmd->add_subcommand("affine", "root monoid on affine n-space");
    aff->add_option("--n", n_arg)->required();
    aff->add_option("--k", k_arg)->required();
    aff->add_option("--a", a_rows, "exponent rows 'a1;a2;...'")->required();
    aff->add_option("--b", b_rows, "exponent rows 'b1;b2;...'")->required();
    aff->callback([&] {
      action = [&]() {
        const RootMonoid X = affine_space_monoid(n_arg, k_arg, parse_vec_rows(a_rows), parse_vec_rows(b_rows));
        emit(monoid_to_json(X), true, "");
        return 0;
      };
    });

    auto* cyl = preset_cmd->add_subcommand("cylinder", "root monoid on the quadric-cone cylinder");
    cyl->add_option("--params", params_arg, "a1,b1,a2,b2,c1,d1,c2,d2")->required();
    cyl->callback([&] {
      action = [&]() {
        const Vec p = parse_vec_arg(params_arg);
        if (p.size() != 8) throw std::runtime_error("--params needs 8 integers");
        const RootMonoid X =
            quadric_cylinder_monoid(CylinderParams{p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7]});
        emit(monoid_to_json(X), true, "");
        return 0;
      };
    });
  }

  // Global flags (--json, --seed) may appear after any subcommand.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    a->fallthrough();
    for (auto* sc : a->get_subcommands([](CLI::App*) { return true; })) enable_fallthrough(sc);
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

// Command-line surface: builds the reflection groups, generates line-system
// orbits and emits verification reports as text or JSON.
//
// Exit codes: 0 = all checks pass, 1 = a check failed, 2 = input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef QLIN_HAVE_OPENMP
#include <omp.h>
#endif

#include "qlin/constants.hpp"
#include "qlin/fixedlines.hpp"
#include "qlin/linesys.hpp"
#include "qlin/stabilizers.hpp"
#include "qlin/subgroups.hpp"
#include "qlin/verify.hpp"

using json = nlohmann::ordered_json;
namespace cn = qlin::constants;

namespace {

struct GlobalOpts {
  bool as_json = false;
  std::uint64_t seed = 1;
  int threads = 0;
  int cap = 4000;
};

std::vector<qlin::QuatMatrix> named_generators(const std::string& name) {
  if (name == "h3") return cn::gens_b(1);
  if (name == "h24") return cn::gens_b(2);
  if (name == "h120") return cn::gens_b(3);
  if (name == "h720") return cn::gens_b(4);
  if (name == "h1440") return cn::gens_b(5);
  if (name == "ua-ub") return {cn::U_a(), cn::U_b()};
  if (name == "blichfeldt-a") return cn::gens_a(3);
  if (name == "stab-w") return {cn::b(3), cn::g2()};
  // otherwise: a file of matrices
  std::ifstream in(name);
  if (!in) throw qlin::DimensionError("unknown group name or unreadable file: " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  std::vector<qlin::QuatMatrix> mats = qlin::parse_matrices(ss.str());
  if (mats.empty()) throw qlin::DimensionError("no matrices in " + name);
  return mats;
}

qlin::QuatVector named_vector(const std::string& name) {
  if (name == "w") return cn::w();
  if (name == "w-perp") return cn::w_perp();
  if (name == "e1") return cn::e1();
  if (name == "e2") return cn::e2();
  if (name == "fid15") return cn::fiducial_15();
  if (name == "fid30") return cn::fiducial_30();
  return qlin::parse_vector(name);
}

std::vector<qlin::Rational> parse_angle_list(const std::string& s) {
  std::vector<qlin::Rational> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(qlin::rat_parse(tok));
  return out;
}

json angles_json(const qlin::AngleSet& as) {
  json a = json::object();
  for (const auto& [v, m] : as.per_base) a[v.str()] = m;
  return a;
}

json line_system_report(const qlin::LineSystem& sys, int max_t) {
  json doc;
  doc["n"] = sys.size();
  doc["dim"] = sys.dim;
  doc["orbit_vectors"] = sys.orbit_vectors;
  json lines = json::array();
  for (const auto& l : sys.lines) lines.push_back(l.rep.str());
  doc["lines"] = lines;
  if (sys.size() >= 2) {
    qlin::AngleSet as = angle_set(sys);
    doc["angles"] = angles_json(as);
    doc["angles_uniform"] = as.per_base_uniform;
    doc["equiangular"] = as.equiangular;
    json designs = json::object();
    for (int t = 1; t <= max_t; ++t) {
      qlin::DesignCheck dc = qlin::is_t_design(sys, t);
      designs[std::to_string(t)] = {{"is_design", dc.is_design},
                                    {"defect", dc.defect.str()}};
    }
    doc["designs"] = designs;
    // bounds, when the angle shape is covered
    std::vector<qlin::Rational> values;
    bool rational = true;
    for (const auto& [v, m] : as.per_base)
      if (v.is_rational())
        values.push_back(v.as_rational());
      else
        rational = false;
    if (rational && as.per_base_uniform) {
      try {
        qlin::AngleShape shape = qlin::shape_of(values);
        auto nu = qlin::special_bound(values, sys.dim);
        doc["special_bound"] = nu ? qlin::rat_str(*nu) : "inapplicable";
        doc["absolute_bound"] = qlin::rat_str(qlin::absolute_bound(shape, sys.dim));
        if (nu) doc["meets_special_bound"] = (*nu == sys.size());
      } catch (const qlin::DimensionError&) {
        doc["special_bound"] = "shape not covered";
      }
    }
  }
  return doc;
}

void emit(const json& doc, const GlobalOpts& g) {
  if (g.as_json) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  // plain text: flat rendering
  std::function<void(const json&, int)> render = [&](const json& node, int indent) {
    std::string pad(indent, ' ');
    for (auto it = node.begin(); it != node.end(); ++it) {
      if (it->is_object() || it->is_array()) {
        std::cout << pad << it.key() << ":\n";
        if (it->is_object())
          render(*it, indent + 2);
        else
          for (const auto& el : *it)
            std::cout << pad << "  " << (el.is_string() ? el.get<std::string>()
                                                        : el.dump())
                      << "\n";
      } else {
        std::cout << pad << it.key() << ": "
                  << (it->is_string() ? it->get<std::string>() : it->dump())
                  << "\n";
      }
    }
  };
  render(doc, 0);
}

json report_json(const qlin::ReportDocument& doc) {
  json out;
  out["seed"] = doc.seed;
  out["pass"] = doc.all_pass();
  json crits = json::array();
  for (const auto& c : doc.criteria) {
    json jc;
    jc["criterion"] = c.number;
    jc["title"] = c.title;
    jc["pass"] = c.pass();
    json checks = json::array();
    for (const auto& r : c.checks)
      checks.push_back({{"id", r.id},
                        {"paper_location", r.paper_location},
                        {"expected", r.expected},
                        {"computed", r.computed},
                        {"pass", r.pass}});
    jc["checks"] = checks;
    crits.push_back(std::move(jc));
  }
  out["criteria"] = crits;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for the quaternionic reflection groups "
               "H_24 c H_120 c H_720 c H_1440 and their line systems"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_flag("--json", g.as_json, "machine-readable output");
  app.add_option("--seed", g.seed, "seed for randomized checks");
  app.add_option("--threads", g.threads, "worker threads (0 = default)");
  app.add_option("--cap", g.cap, "group closure cap");

  std::string only, group_name, vector_name, angle_list;
  int design_t = 4, min_order = 1;
  qlin::SearchOptions fl;

  CLI::App* cmd_verify = app.add_subcommand("verify-paper", "run the full check suite");
  cmd_verify->add_option("--only", only, "check-id prefix filter");

  CLI::App* cmd_group = app.add_subcommand("group", "build a group and report its structure");
  cmd_group->add_option("name", group_name,
                        "h3|h24|h120|h720|h1440|ua-ub|blichfeldt-a|stab-w or a matrix file")
      ->required();

  CLI::App* cmd_orbit = app.add_subcommand("orbit", "line system of a group orbit");
  cmd_orbit->add_option("name", group_name, "group name or matrix file")->required();
  cmd_orbit->add_option("vector", vector_name,
                        "fiducial: w|w-perp|e1|e2|fid15|fid30 or \"(q, q)\"")
      ->required();

  CLI::App* cmd_design = app.add_subcommand("design-check", "design defects of an orbit");
  cmd_design->add_option("name", group_name, "group name or matrix file")->required();
  cmd_design->add_option("vector", vector_name, "fiducial vector")->required();
  cmd_design->add_option("--t", design_t, "largest t to check (default 4)");

  CLI::App* cmd_bounds = app.add_subcommand("bounds", "special and absolute bounds");
  cmd_bounds->add_option("angles", angle_list, "comma-separated angles, e.g. 0,1/2")
      ->required();

  CLI::App* cmd_stab = app.add_subcommand("stabilizer", "projective stabilizer of a line");
  cmd_stab->add_option("name", group_name, "group name or matrix file")->required();
  cmd_stab->add_option("vector", vector_name, "line representative")->required();

  CLI::App* cmd_fixed = app.add_subcommand("fixed-lines", "numeric fixed-line search");
  cmd_fixed->add_option("name", group_name, "group name or matrix file")->required();
  cmd_fixed->add_option("--restarts", fl.restarts, "random restarts (default 200)");
  cmd_fixed->add_option("--tol", fl.tolerance, "objective tolerance");
  cmd_fixed->add_option("--denom-bound", fl.denom_bound, "denominator bound for snapping");

  CLI::App* cmd_sub = app.add_subcommand("subgroups", "subgroup census up to conjugacy");
  cmd_sub->add_option("name", group_name, "group name or matrix file")->required();
  cmd_sub->add_option("--min-order", min_order, "smallest order to report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

#ifdef QLIN_HAVE_OPENMP
  if (g.threads > 0) omp_set_num_threads(g.threads);
#endif

  try {
    if (cmd_verify->parsed()) {
      qlin::VerifyOptions vo;
      vo.seed = g.seed;
      vo.cap = g.cap;
      vo.only = only;
      vo.threads = g.threads;
      qlin::ReportDocument doc = qlin::run_verification(vo);
      if (g.as_json) {
        std::cout << report_json(doc).dump(2) << "\n";
      } else {
        for (const auto& c : doc.criteria) {
          std::cout << "[" << (c.pass() ? "PASS" : "FAIL") << "] " << c.number
                    << ". " << c.title << "\n";
          for (const auto& r : c.checks) {
            std::cout << "  " << (r.pass ? "ok  " : "FAIL") << " " << r.id
                      << " (" << r.paper_location << ")";
            if (!r.pass)
              std::cout << " expected " << r.expected << ", computed " << r.computed;
            std::cout << "\n";
          }
        }
      }
      if (!doc.all_pass()) {
        const qlin::CheckRecord* f = doc.first_failure();
        std::cerr << "first failing check: " << f->id << "\n";
        return 1;
      }
      if (doc.criteria.empty()) {
        std::cerr << "no check matches --only " << only << "\n";
        return 2;
      }
      return 0;
    }

    if (cmd_group->parsed()) {
      qlin::FiniteMatrixGroup grp =
          qlin::FiniteMatrixGroup::close(named_generators(group_name), g.cap);
      qlin::ReflectionData refl = qlin::reflections_and_root_lines(grp);
      std::vector<qlin::ConjClass> classes = qlin::conjugacy_classes(grp);
      qlin::IrreducibilityResult irr = qlin::is_irreducible(grp, 20, g.seed);
      json doc;
      doc["name"] = group_name;
      doc["order"] = grp.order();
      doc["dim"] = grp.dim();
      doc["center_size"] = grp.center().size();
      doc["reflections"] = refl.reflections.size();
      doc["root_lines"] = refl.root_lines.size();
      doc["conjugacy_classes"] = classes.size();
      json cls = json::array();
      for (const auto& cc : classes)
        cls.push_back({{"order", cc.element_order}, {"size", cc.size}});
      doc["classes"] = cls;
      doc["irreducible"] = irr.irreducible;
      doc["irreducibility_confidence"] = irr.confidence;
      emit(doc, g);
      return 0;
    }

    if (cmd_orbit->parsed() || cmd_design->parsed()) {
      qlin::FiniteMatrixGroup grp =
          qlin::FiniteMatrixGroup::close(named_generators(group_name), g.cap);
      qlin::LineSystem sys = qlin::orbit_lines(grp, named_vector(vector_name));
      emit(line_system_report(sys, design_t), g);
      return 0;
    }

    if (cmd_bounds->parsed()) {
      std::vector<qlin::Rational> angles = parse_angle_list(angle_list);
      qlin::AngleShape shape = qlin::shape_of(angles);
      auto nu = qlin::special_bound(angles, 2);
      json doc;
      doc["angles"] = angle_list;
      doc["special_bound"] = nu ? qlin::rat_str(*nu) : "inapplicable";
      doc["absolute_bound"] = qlin::rat_str(qlin::absolute_bound(shape, 2));
      emit(doc, g);
      return 0;
    }

    if (cmd_stab->parsed()) {
      qlin::FiniteMatrixGroup grp =
          qlin::FiniteMatrixGroup::close(named_generators(group_name), g.cap);
      qlin::ProjectiveStabilizer st =
          qlin::projective_stabilizer(grp, named_vector(vector_name));
      qlin::HStarClass cls = qlin::classify_hstar(qlin::scalar_values(st));
      json doc;
      doc["line"] = st.line_rep.str();
      doc["stabilizer_order"] = st.order();
      doc["hstar_class"] = cls.name();
      doc["faithful"] = qlin::alpha_faithful(st);
      emit(doc, g);
      return 0;
    }

    if (cmd_fixed->parsed()) {
      std::vector<qlin::QuatMatrix> gens = named_generators(group_name);
      fl.seed = g.seed;
      std::vector<qlin::FixedLineCandidate> found = qlin::search_fixed_lines(gens, fl);
      json doc;
      doc["generators"] = gens.size();
      doc["restarts"] = fl.restarts;
      json cands = json::array();
      for (const auto& c : found) {
        json jc;
        jc["residual"] = c.residual;
        jc["certified"] = c.certified;
        if (c.exact) jc["exact"] = c.exact->str();
        cands.push_back(std::move(jc));
      }
      doc["candidates"] = cands;
      emit(doc, g);
      return 0;
    }

    if (cmd_sub->parsed()) {
      qlin::FiniteMatrixGroup grp =
          qlin::FiniteMatrixGroup::close(named_generators(group_name), g.cap);
      std::vector<qlin::SubgroupClass> subs =
          qlin::enumerate_subgroups(grp, min_order, 8, g.seed);
      json doc;
      doc["group_order"] = grp.order();
      doc["classes"] = subs.size();
      json rows = json::array();
      for (const auto& s : subs)
        rows.push_back({{"order", s.order},
                        {"conjugates", s.n_conjugates},
                        {"reducible", s.reducible},
                        {"maximal_reducible", s.maximal_reducible}});
      doc["subgroups"] = rows;
      emit(doc, g);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

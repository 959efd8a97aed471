#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tstar/claims.hpp"

using namespace tstar;

namespace {

struct SetOpts {
  std::string set;
  std::string file;
  int n = 2;
  int q = 0;
  int q0 = 0;

  void add(CLI::App* cmd) {
    cmd->add_option("--set", set, "named set: " + [] {
      std::string s;
      for (const auto& n : named_sets()) s += (s.empty() ? "" : ", ") + n;
      return s;
    }());
    cmd->add_option("--file", file, "point file in H_inf coordinates (header 'n q')");
    cmd->add_option("--n", n, "dimension of H_inf");
    cmd->add_option("--q", q, "field order");
    cmd->add_option("--q0", q0, "subfield order for subgeometry");
  }

  std::pair<FieldCtx, PointSet> load() const {
    if (set.empty() == file.empty()) throw Error("give exactly one of --set and --file");
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw Error("cannot open " + file);
      const PointFile pf = read_pointset_file(in);
      const FieldCtx F = FieldCtx::of_order(pf.q);
      return {F, from_hinf(F, pf.d, pf.points)};
    }
    if (q < 2) throw Error("--q is required with --set");
    const FieldCtx F = FieldCtx::of_order(q);
    return {F, construct_named(set, F, NamedParams{n, q0})};
  }
};

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

ColoredGraph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && (text[start] == 'p' || text[start] == 'c')) {
    std::istringstream is(text);
    return from_dimacs(is);
  }
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);
  return from_graph6(line);
}

Json points_json(const std::vector<ProjPoint>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(coords_json(p));
  return a;
}

Json aut_json(const AutomorphismResult& r, std::size_t n) {
  Json gens = Json::array();
  for (const Perm& p : r.generators) gens.push_back(p.images());
  return Json{{"order", r.order.str()}, {"domain_size", n}, {"base", r.base}, {"orbit_sizes", r.orbit_sizes},
              {"generators", gens}};
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear representations T*_n(K): incidence graphs, automorphism groups, claim checks"};
  app.require_subcommand(1);
  int exit_code = 0;

  SetOpts ps;
  std::string ps_out;
  auto* pointset = app.add_subcommand("pointset", "construct or inspect a point set of H_inf");
  ps.add(pointset);
  pointset->add_option("--out", ps_out, "write the set as a point file");
  pointset->callback([&] {
    auto [F, K] = ps.load();
    const auto pts = K.hinf_points();
    if (!ps_out.empty()) write_text(ps_out, to_pointset_file(K.n, F.q(), pts));
    print(Json{{"n", K.n}, {"q", F.q()}, {"size", K.size()}, {"points", points_json(pts)}});
  });

  SetOpts cl;
  auto* closure_cmd = app.add_subcommand("closure", "closure of a point set (smallest subgeometry containing it)");
  cl.add(closure_cmd);
  closure_cmd->callback([&] {
    auto [F, K] = cl.load();
    const PointSet C = closure(F, K);
    print(Json{{"n", C.n}, {"q", F.q()}, {"size", C.size()}, {"points", points_json(C.hinf_points())}});
  });

  SetOpts st;
  auto* star = app.add_subcommand("check-star", "Property (*): no plane meets K in two lines, or two lines minus their meet");
  st.add(star);
  star->callback([&] {
    auto [F, K] = st.load();
    const StarResult r = property_star(F, K);
    Json j{{"holds", r.holds}};
    if (r.witness_plane) j["witness_plane"] = points_json(r.witness_plane->points(F));
    print(j);
  });

  SetOpts tg;
  auto* tangent = app.add_subcommand("check-tangent", "every point of H_inf outside K on a tangent line");
  tg.add(tangent);
  tangent->callback([&] {
    auto [F, K] = tg.load();
    const TangentResult r = tangent_cover(F, K);
    Json j{{"holds", r.holds}};
    if (r.witness_point) j["witness_point"] = coords_json(*r.witness_point);
    print(j);
  });

  SetOpts bg;
  std::string bg_format = "graph6", bg_output, bg_sidecar;
  auto* build = app.add_subcommand("build-graph", "incidence graph of T*_n(K)");
  bg.add(build);
  build->add_option("--out", bg_format, "graph6 or dimacs")->check(CLI::IsMember({"graph6", "dimacs"}));
  build->add_option("-o,--output", bg_output, "output file (stdout by default)");
  build->add_option("--sidecar", bg_sidecar, "JSON file mapping vertices to points and lines");
  build->callback([&] {
    auto [F, K] = bg.load();
    const LinRep T = LinRep::build(F, K);
    const ColoredGraph g = T.incidence_graph();
    write_text(bg_output, bg_format == "graph6" ? to_graph6(g) + "\n" : to_dimacs(g));
    if (!bg_sidecar.empty()) write_text(bg_sidecar, sidecar_json(T).dump(2) + "\n");
  });

  SetOpts au;
  bool au_graph = false, au_geo = false, au_classes = false;
  std::string au_input;
  auto* aut = app.add_subcommand("aut", "automorphism group of the incidence graph or the geometric subgroup");
  au.add(aut);
  auto* og = aut->add_flag("--graph", au_graph, "all automorphisms of the graph");
  auto* oo = aut->add_flag("--geometric", au_geo, "collineation-induced automorphisms");
  og->excludes(oo);
  aut->add_flag("--preserve-classes", au_classes, "with --graph: keep points and lines apart");
  aut->add_option("--input", au_input, "with --graph: read a graph6 or DIMACS file instead of a set");
  aut->callback([&] {
    if (au_graph == au_geo) throw Error("give exactly one of --graph and --geometric");
    if (au_graph) {
      ColoredGraph g;
      if (!au_input.empty()) {
        g = read_graph(au_input);
      } else {
        auto [F, K] = au.load();
        g = LinRep::build(F, K).incidence_graph(!au_classes);
      }
      print(aut_json(automorphism_group(g), g.size()));
      return;
    }
    auto [F, K] = au.load();
    const LinRep T = LinRep::build(F, K);
    const GeometricGroup geo = geometric_group(T);
    Json j = to_json(geo.group);
    j["order"] = geo.order.str();
    print(j);
  });

  std::string iso_a, iso_b;
  auto* iso = app.add_subcommand("iso", "isomorphism test between two graph files (graph6 or DIMACS)");
  iso->add_option("A", iso_a)->required()->check(CLI::ExistingFile);
  iso->add_option("B", iso_b)->required()->check(CLI::ExistingFile);
  iso->callback([&] {
    const ColoredGraph a = read_graph(iso_a), b = read_graph(iso_b);
    const auto m = find_isomorphism(a, b);
    Json j{{"isomorphic", m.has_value()}};
    if (m) j["mapping"] = m->images();
    print(j);
    if (!m) exit_code = 1;
  });

  SetOpts nv;
  auto* nvt = app.add_subcommand("nvt", "Gamma_4 certificate check for the point/line classes");
  nv.add(nvt);
  nvt->callback([&] {
    auto [F, K] = nv.load();
    const LinRep T = LinRep::build(F, K);
    const NvtReport r = nvt_check(T);
    auto cls = [](const NvtClassReport& c) {
      Json j{{"total", c.total}, {"with_certificate", c.with_certificate}};
      if (c.example) j["example"] = Json::array({c.example->first, c.example->second});
      return j;
    };
    print(Json{{"tangent_cover", r.applicable},
               {"lines", cls(r.lines)},
               {"points", cls(r.points)},
               {"certificate_pattern", r.certificate_pattern},
               {"pass", r.pass}});
  });

  std::string claim;
  bool extended = false, timing = false;
  std::string out_dir;
  auto* verify = app.add_subcommand("verify", "run a claim check by id, or all");
  verify->add_option("claim", claim, "claim id or 'all'")->required();
  verify->add_flag("--extended", extended, "include the slow q = 3 Baer instance in 'all'");
  verify->add_option("--out-dir", out_dir, "write <claim>.json reports here");
  verify->add_flag("--timing", timing, "include wall time in printed reports");
  verify->callback([&] {
    std::vector<std::string> ids = claim == "all" ? claim_ids(extended) : std::vector<std::string>{claim};
    if (claim != "all") {
      const auto known = claim_ids(true);
      if (std::find(known.begin(), known.end(), claim) == known.end()) throw Error("unknown claim id: " + claim);
    }
    if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
    Json all = Json::array();
    for (const auto& id : ids) {
      const ClaimReport r = run_claim(id);
      if (r.verdict == Verdict::Fail) exit_code = 1;
      if (!out_dir.empty()) write_text(out_dir + "/" + id + ".json", r.to_json(true).dump(2) + "\n");
      all.push_back(r.to_json(timing));
      std::cerr << id << ": " << to_string(r.verdict) << '\n';
    }
    print(claim == "all" ? all : all[0]);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}

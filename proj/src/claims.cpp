#include "tstar/claims.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "tstar/spread.hpp"

namespace tstar {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Documented: return "documented";
  }
  return "fail";
}

Json ClaimReport::to_json(bool with_timing) const {
  Json j{{"claim_id", id}, {"inputs", inputs}, {"computed", computed}, {"verdict", to_string(verdict)},
         {"notes", notes}};
  if (with_timing) j["timing"] = Json{{"wall_seconds", wall_seconds}};
  return j;
}

namespace {

std::string str(const BigInt& x) { return x.str(); }

Verdict verdict_of(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

struct Instance {
  FieldCtx F;
  PointSet K;
  LinRep T;
};

Instance make(const std::string& name, int q, int n, int q0 = 0) {
  FieldCtx F = FieldCtx::of_order(q);
  PointSet K = construct_named(name, F, NamedParams{n, q0});
  LinRep T = LinRep::build(F, K);
  return {F, std::move(K), std::move(T)};
}

// Every generator of the geometric group is an automorphism of the graph.
bool generators_in(const ColoredGraph& g, const GeometricGroup& geo) {
  for (const Perm& p : geo.group.generators())
    if (!is_automorphism(g, p)) return false;
  return true;
}

ClaimReport ratio_claim(const std::string& id, const std::string& set, int q, int n, int q0,
                        const BigInt& expected) {
  ClaimReport r;
  r.id = id;
  r.inputs = Json{{"set", set}, {"n", n}, {"q", q}};
  if (q0) r.inputs["q0"] = q0;
  const Instance I = make(set, q, n, q0);
  const ColoredGraph g = I.T.incidence_graph();
  const AutomorphismResult aut = automorphism_group(g);
  const GeometricGroup geo = geometric_group(I.T);
  const bool sub = generators_in(g, geo);
  const BigInt ratio = aut.order / geo.order, rem = aut.order % geo.order;
  r.computed = Json{{"vertices", g.size()},
                    {"aut_order", str(aut.order)},
                    {"geometric_order", str(geo.order)},
                    {"ratio", str(ratio)},
                    {"remainder", str(rem)},
                    {"expected_ratio", str(expected)},
                    {"geometric_is_subgroup", sub}};
  r.verdict = verdict_of(sub && rem == 0 && ratio == expected);
  return r;
}

ClaimReport two_lines_q3() { return ratio_claim("two-lines-q3", "two_lines", 3, 2, 0, 3); }
ClaimReport planes_q3() { return ratio_claim("planes-q3", "two_planes", 3, 3, 0, 9); }
ClaimReport threelines_q3() { return ratio_claim("threelines-q3", "three_lines_rem3", 3, 3, 0, 1); }
ClaimReport fano_in_q8() { return ratio_claim("fano-in-q8", "subgeometry", 8, 2, 2, 8); }
ClaimReport baer_q3() {
  ClaimReport r = ratio_claim("baer-q3", "baer_subplane", 9, 2, 0, 3);
  r.notes.push_back("q(q-1)/2 at q = 3 is 3");
  return r;
}

ClaimReport phi_family() {
  ClaimReport r;
  r.id = "phi-family";
  r.inputs = Json{{"set", "two_lines"}, {"n", 2}, {"q", Json::array({3, 4})}};
  bool ok = true;
  Json per_q = Json::array();
  for (int q : {3, 4}) {
    const Instance I = make("two_lines", q, 2);
    const ColoredGraph g = I.T.incidence_graph();
    std::vector<GeomAut> phi;
    for (std::uint32_t m = 0; m < static_cast<std::uint32_t>(q); ++m) phi.push_back(phi_shear(I.T, FieldElement(m)));

    bool autos = true, law = true, geo_iff = true;
    Json coherent = Json::array();
    for (std::uint32_t m = 0; m < phi.size(); ++m) {
      autos = autos && incidence_equivariant(I.T, phi[m]) && is_automorphism(g, phi[m].vertex_perm());
      const bool geometric = is_geometric(I.T, phi[m]).has_value();
      geo_iff = geo_iff && (geometric == (m == 0));
      const Extension ext = extend_to_infinity(I.T, phi[m]);
      std::size_t c = 0;
      for (char x : ext.coherent) c += x ? 1 : 0;
      coherent.push_back(c);
      for (std::uint32_t b = 0; b < phi.size(); ++b) {
        const FieldElement sum = I.F.add(FieldElement(m), FieldElement(b));
        law = law && then(phi[m], phi[b]) == phi[sum.index()];
      }
    }
    const std::size_t conic = shear_conic_failures(I.F);
    ok = ok && autos && law && geo_iff && conic == 0;
    per_q.push_back(Json{{"q", q},
                         {"all_automorphisms", autos},
                         {"group_law", law},
                         {"geometric_iff_m_zero", geo_iff},
                         {"conic_identity_failures", conic},
                         {"coherent_hinf_points_per_m", coherent}});
  }
  r.computed = Json{{"per_q", per_q}};
  r.verdict = verdict_of(ok);
  return r;
}

ClaimReport rem1_duality() {
  ClaimReport r;
  r.id = "rem1-duality";
  r.inputs = Json{{"set", "qarc_parabola"}, {"n", 2}, {"q", Json::array({2, 4})}};
  bool ok = true;
  Json per_q = Json::array();
  for (int q : {2, 4}) {
    const Instance I = make("qarc_parabola", q, 2);
    const ColoredGraph g = I.T.incidence_graph();
    const auto d = qarc_duality(I.T);
    bool automorphism = false, swaps = false;
    if (d) {
      automorphism = is_automorphism(g, *d);
      swaps = true;
      for (std::size_t v = 0; v < g.size(); ++v) swaps = swaps && ((v < I.T.num_points()) != ((*d)[v] < I.T.num_points()));
    }
    const bool tangent = tangent_cover(I.F, I.K).holds;
    const BigInt with_swap = automorphism_group(g).order;
    const BigInt without = automorphism_group(I.T.incidence_graph(false)).order;
    ok = ok && automorphism && swaps && !tangent && with_swap > without;
    per_q.push_back(Json{{"q", q},
                         {"vertices", g.size()},
                         {"bijection", d.has_value()},
                         {"edge_preserving", automorphism},
                         {"swaps_classes", swaps},
                         {"tangent_cover", tangent},
                         {"aut_order", str(with_swap)},
                         {"class_preserving_aut_order", str(without)}});
  }
  r.computed = Json{{"per_q", per_q}};
  r.verdict = verdict_of(ok);
  return r;
}

ClaimReport nvt_suite() {
  ClaimReport r;
  r.id = "nvt-suite";
  r.inputs = Json{{"sets", Json::array({"conic_arc", "two_lines", "frame"})}, {"n", 2}, {"q", 3}};
  bool ok = true;
  Json per = Json::array();
  for (const char* name : {"conic_arc", "two_lines", "frame"}) {
    const Instance I = make(name, 3, 2);
    const TangentResult tc = tangent_cover(I.F, I.K);
    const NvtReport rep = nvt_check(I.T);
    // a posteriori: no automorphism of the uncolored graph swaps the classes
    const ColoredGraph g = I.T.incidence_graph();
    bool swap = false;
    for (const Perm& p : automorphism_group(g).generators) swap = swap || p[0] >= I.T.num_points();
    ok = ok && rep.pass;
    Json e{{"set", name},
           {"tangent_cover", tc.holds},
           {"line_vertices", rep.lines.total},
           {"line_vertices_certified", rep.lines.with_certificate},
           {"point_vertices", rep.points.total},
           {"point_vertices_certified", rep.points.with_certificate},
           {"certificate_pattern", rep.certificate_pattern},
           {"class_swap_found", swap}};
    if (tc.witness_point) e["point_on_no_tangent"] = coords_json(*tc.witness_point);
    per.push_back(e);
    if (!tc.holds)
      r.notes.push_back(std::string(name) + ": tangent cover fails in PG(2,3); some point of H_inf lies on no tangent");
  }
  r.computed = Json{{"per_set", per}};
  r.verdict = verdict_of(ok);
  return r;
}

ClaimReport hoofd1_hyperoval_q4() {
  ClaimReport r;
  r.id = "hoofd1-hyperoval-q4";
  r.inputs = Json{{"set", "hyperoval"}, {"n", 2}, {"q", 4}};
  const Instance I = make("hyperoval", 4, 2);
  const ColoredGraph g = I.T.incidence_graph();
  const BigInt aut = automorphism_group(g).order;
  const GeometricGroup geo = geometric_group(I.T);
  const BigInt persp = persp_order(I.F, 2);
  const BigInt stab = hinf_stabilizer(I.F, I.K).order;
  r.computed = Json{{"vertices", g.size()},
                    {"aut_order", str(aut)},
                    {"geometric_order", str(geo.order)},
                    {"persp_order", str(persp)},
                    {"hinf_stabilizer_order", str(stab)},
                    {"stabilizer_route_order", str(persp * stab)}};
  r.verdict = verdict_of(aut == geo.order && aut == persp * stab && generators_in(g, geo));
  return r;
}

ClaimReport q2_exhaustive() {
  ClaimReport r;
  r.id = "q2-exhaustive";
  r.inputs = Json{{"n", 2}, {"q", 2}, {"sets", "every nonempty subset of PG(2,2)"}};
  const FieldCtx F = FieldCtx::of_order(2);
  const auto pts = all_points(F, 2);
  std::size_t larger = 0, total = 0;
  Json failures = Json::array();
  std::map<std::string, std::size_t> ratios;
  for (unsigned mask = 1; mask < (1u << pts.size()); ++mask) {
    std::vector<ProjPoint> sel;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (mask >> i & 1) sel.push_back(pts[i]);
    const PointSet K = from_hinf(F, 2, sel);
    const LinRep T = LinRep::build(F, K);
    const BigInt aut = automorphism_group(T.incidence_graph(false)).order;
    const BigInt geo = geometric_group(T).order;
    ++total;
    if (aut > geo && aut % geo == 0) {
      ++larger;
      ++ratios[str(aut / geo)];
    } else {
      failures.push_back(Json{{"mask", mask}, {"aut_order", str(aut)}, {"geometric_order", str(geo)}});
    }
  }
  Json hist = Json::object();
  for (const auto& [k, v] : ratios) hist[k] = v;
  r.computed = Json{{"sets", total}, {"aut_strictly_larger", larger}, {"ratio_histogram", hist}, {"failures", failures}};
  r.notes.push_back("automorphisms of the geometry: class-preserving automorphisms of the incidence graph");
  r.verdict = verdict_of(total == 127 && larger == total);
  return r;
}

ClaimReport baer_q2() {
  ClaimReport r;
  r.id = "baer-q2";
  r.inputs = Json{{"set", "baer_subplane"}, {"n", 2}, {"q", 4}, {"reduced_q", 2}};
  const Instance I = make("baer_subplane", 4, 2);
  const ColoredGraph g = I.T.incidence_graph();
  const BigInt aut = automorphism_group(g).order;
  const GeometricGroup geo = geometric_group(I.T);
  const SpreadData S = barlotti_cofman(FieldCtx::of_order(2), I.F, I.K);
  const SpreadGroup sg = spread_induced_group(I.T, S);
  const int q = 2;
  const BigInt formula = q * (q - 1) / 2;
  r.computed = Json{{"vertices", g.size()},
                    {"aux_vertices", sg.aux_vertices},
                    {"B_lines", S.B.size()},
                    {"aut_order", str(aut)},
                    {"spread_induced_order", str(sg.induced_order)},
                    {"aux_group_order", str(sg.aux_order)},
                    {"geometric_order", str(geo.order)},
                    {"ratio", str(aut / geo.order)},
                    {"formula_q(q-1)/2", str(formula)}};
  r.notes.push_back("raw reading: the B-stabilizer in PGammaL(7,2) acts faithfully on PG(6,2); compared with the geometric group of T");
  r.verdict = verdict_of(aut == sg.induced_order && formula == 1 && aut == geo.order * formula &&
                         sg.aux_order == geo.order * formula && S.B.size() == 7);
  return r;
}

ClaimReport split_isom() {
  ClaimReport r;
  r.id = "split-isom";
  r.inputs = Json{{"set", "two_lines"}, {"n", 2}, {"q", Json::array({3, 4})}};
  bool ok = true;
  Json per_q = Json::array();
  for (int q : {3, 4}) {
    const Instance I = make("two_lines", q, 2);
    const std::size_t nv = I.T.num_points() + I.T.num_lines();
    const GeometricGroup geo = geometric_group(I.T);

    std::vector<Perm> ngens;
    for (const auto& f : persp_generators(I.F, 2)) ngens.push_back(induced_action(I.T, f).vertex_perm());
    const PermGroup N(nv, ngens);

    const HinfStabilizer hs = hinf_stabilizer(I.F, I.K);
    std::optional<ProjPoint> c;
    for (const auto& p : all_points(I.F, 2)) {
      bool fixed = true;
      for (const auto& b : hs.generators) fixed = fixed && b.apply(I.F, p) == p;
      if (fixed) {
        c = p;
        break;
      }
    }
    if (!c) throw Error("the stabilizer of K fixes no point of H_inf");
    std::vector<Perm> hgens;
    for (const auto& b : hs.generators)
      hgens.push_back(induced_action(I.T, lift_fixing_point(I.F, b, *c)).vertex_perm());
    const PermGroup H(nv, hgens);

    const SplitVerdict v = split_extension_check(geo.group, N, H);
    const BigInt persp = BigInt(q) * q * q * (q - 1);
    const bool good = v.split && v.order_n == persp && v.order_h == hs.order;
    ok = ok && good;
    per_q.push_back(Json{{"q", q},
                         {"fixed_point", coords_json(*c)},
                         {"order_G", str(v.order_g)},
                         {"order_N", str(v.order_n)},
                         {"order_H", str(v.order_h)},
                         {"expected_order_N", str(persp)},
                         {"hinf_stabilizer_order", str(hs.order)},
                         {"split", v.split},
                         {"failed_clause", v.failed_clause}});
  }
  r.computed = Json{{"per_q", per_q}};
  r.verdict = verdict_of(ok);
  return r;
}

ClaimReport pg33_in_pg39() {
  ClaimReport r;
  r.id = "pg33-in-pg39";
  r.inputs = Json{{"set", "subgeometry"}, {"n", 3}, {"q", 9}, {"q0", 3}};
  const std::size_t points = 9 * 9 * 9 * 9, lines = num_points(3, 3) * 9 * 9 * 9;
  r.computed = Json{{"expected_ratio", "3"}, {"points", points}, {"lines", lines}, {"vertices", points + lines}};
  r.notes.push_back("not computed: the incidence graph has about 36k vertices; the expected ratio is recorded only");
  r.verdict = Verdict::Documented;
  return r;
}

const std::vector<std::pair<std::string, std::function<ClaimReport()>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<ClaimReport()>>> reg = {
      {"two-lines-q3", two_lines_q3},
      {"phi-family", phi_family},
      {"rem1-duality", rem1_duality},
      {"nvt-suite", nvt_suite},
      {"hoofd1-hyperoval-q4", hoofd1_hyperoval_q4},
      {"q2-exhaustive", q2_exhaustive},
      {"planes-q3", planes_q3},
      {"threelines-q3", threelines_q3},
      {"baer-q2", baer_q2},
      {"fano-in-q8", fano_in_q8},
      {"split-isom", split_isom},
      {"baer-q3", baer_q3},
      {"pg33-in-pg39", pg33_in_pg39},
  };
  return reg;
}

}  // namespace

std::vector<std::string> claim_ids(bool extended) {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : registry())
    if (extended || id != "baer-q3") ids.push_back(id);
  return ids;
}

ClaimReport run_claim(const std::string& id) {
  for (const auto& [name, fn] : registry())
    if (name == id) {
      const auto t0 = std::chrono::steady_clock::now();
      ClaimReport r = fn();
      r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      return r;
    }
  throw Error("unknown claim id: " + id);
}

}  // namespace tstar

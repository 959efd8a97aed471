#include "tstar/io.hpp"

#include <istream>
#include <sstream>

namespace tstar {

std::string to_graph6(const ColoredGraph& g) {
  const std::size_t n = g.size();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n < 258048) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    throw Error("graph too large for graph6");
  }
  int bits = 0, acc = 0;
  for (std::uint32_t j = 1; j < n; ++j)
    for (std::uint32_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        bits = acc = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

ColoredGraph from_graph6(const std::string& raw) {
  std::string s = raw;
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw Error("empty graph6 string");
  for (char c : s)
    if (c < 63 || c > 126) throw Error("invalid graph6 character");
  std::size_t n = 0, pos = 0;
  if (s[0] != 126) {
    n = static_cast<std::size_t>(s[0] - 63);
    pos = 1;
  } else {
    if (s.size() < 4 || s[1] == 126) throw Error("unsupported graph6 size header");
    n = (static_cast<std::size_t>(s[1] - 63) << 12) | (static_cast<std::size_t>(s[2] - 63) << 6) |
        static_cast<std::size_t>(s[3] - 63);
    pos = 4;
  }
  const std::size_t need = (n * (n - (n > 0 ? 1 : 0)) / 2 + 5) / 6;
  if (s.size() - pos != need) throw Error("graph6 string has the wrong length");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  std::size_t k = 0;
  for (std::uint32_t j = 1; j < n; ++j)
    for (std::uint32_t i = 0; i < j; ++i, ++k) {
      const int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) e.emplace_back(i, j);
    }
  return ColoredGraph(n, e);
}

std::string to_dimacs(const ColoredGraph& g) {
  std::ostringstream os;
  os << "p edge " << g.size() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

ColoredGraph from_dimacs(std::istream& in) {
  std::string line;
  std::size_t n = 0;
  bool header = false;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    char tag = 0;
    ls >> tag;
    if (tag == 'p') {
      std::string fmt;
      std::size_t m = 0;
      if (!(ls >> fmt >> n >> m)) throw Error("bad DIMACS header");
      header = true;
    } else if (tag == 'e') {
      std::size_t u = 0, v = 0;
      if (!header || !(ls >> u >> v) || u == 0 || v == 0 || u > n || v > n) throw Error("bad DIMACS edge line");
      e.emplace_back(static_cast<std::uint32_t>(u - 1), static_cast<std::uint32_t>(v - 1));
    }
  }
  if (!header) throw Error("missing DIMACS header");
  return ColoredGraph(n, e);
}

std::string to_pointset_file(int d, int q, const std::vector<ProjPoint>& pts) {
  std::ostringstream os;
  os << d << ' ' << q << '\n';
  for (const auto& p : pts) {
    for (std::size_t i = 0; i < p.coords().size(); ++i) os << (i ? "," : "") << p[i].index();
    os << '\n';
  }
  return os.str();
}

PointFile read_pointset_file(std::istream& in) {
  PointFile f;
  std::string line;
  bool header = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!header) {
      std::istringstream ls(line);
      if (!(ls >> f.d >> f.q) || f.d < 1) throw Error("point file header must be 'd q'");
      prime_power(f.q);
      header = true;
      continue;
    }
    Vec v;
    std::istringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) {
      const long x = std::stol(tok);
      if (x < 0 || x >= f.q) throw Error("field index out of range on line " + std::to_string(lineno));
      v.emplace_back(static_cast<std::uint32_t>(x));
    }
    if (v.size() != static_cast<std::size_t>(f.d + 1))
      throw Error("point on line " + std::to_string(lineno) + " needs " + std::to_string(f.d + 1) + " coordinates");
    bool zero = true;
    for (auto c : v) zero = zero && c.is_zero();
    if (zero) throw Error("zero vector on line " + std::to_string(lineno));
    f.points.push_back(ProjPoint::from(FieldCtx::of_order(f.q), std::move(v)));
  }
  if (!header) throw Error("empty point file");
  return f;
}

Json coords_json(const ProjPoint& p) {
  Json a = Json::array();
  for (auto c : p.coords()) a.push_back(c.index());
  return a;
}

Json to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const Perm& p : g.generators()) gens.push_back(p.images());
  return Json{{"domain_size", g.domain_size()}, {"generators", gens}};
}

Json to_json(const SemilinearMap& f) {
  Json m = Json::array();
  for (int r = 0; r < f.matrix().rows(); ++r) {
    Json row = Json::array();
    for (auto x : f.matrix().row(r)) row.push_back(x.index());
    m.push_back(row);
  }
  return Json{{"matrix", m}, {"autexp", f.autexp()}};
}

Json to_json(const GeomAut& a) {
  return Json{{"points", a.point_perm.images()}, {"lines", a.line_perm.images()}};
}

Json sidecar_json(const LinRep& T) {
  Json v = Json::array();
  for (std::size_t i = 0; i < T.num_points(); ++i)
    v.push_back(Json{{"index", i}, {"kind", "point"}, {"coords", coords_json(T.points()[i])}});
  for (std::size_t l = 0; l < T.num_lines(); ++l)
    v.push_back(Json{{"index", T.num_points() + l},
                     {"kind", "line"},
                     {"at_infinity", coords_json(T.lines()[l].at_infinity)},
                     {"rep", coords_json(T.lines()[l].rep)}});
  return Json{{"n", T.n()}, {"q", T.q()}, {"vertices", v}};
}

std::string big_to_string(const BigInt& x) { return x.str(); }

}  // namespace tstar

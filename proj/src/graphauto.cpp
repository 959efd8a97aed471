#include "tstar/graphauto.hpp"

#include <algorithm>
#include <numeric>

namespace tstar {

ColoredGraph::ColoredGraph(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                           std::vector<int> colors)
    : colors_(std::move(colors)) {
  if (colors_.empty()) colors_.assign(n, 0);
  if (colors_.size() != n) throw Error("color array does not match vertex count");
  std::vector<std::size_t> deg(n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw Error("edge endpoint out of range");
    if (u == v) throw Error("loops are not allowed");
    ++deg[u];
    ++deg[v];
  }
  off_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) off_[i + 1] = off_[i] + deg[i];
  adj_.resize(off_[n]);
  std::vector<std::size_t> fill(off_.begin(), off_.end() - 1);
  for (auto [u, v] : edges) {
    adj_[fill[u]++] = v;
    adj_[fill[v]++] = u;
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto b = adj_.begin() + static_cast<std::ptrdiff_t>(off_[i]);
    auto e = adj_.begin() + static_cast<std::ptrdiff_t>(off_[i + 1]);
    std::sort(b, e);
    if (std::adjacent_find(b, e) != e) throw Error("multiple edges are not allowed");
  }
}

bool ColoredGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> ColoredGraph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(num_edges());
  for (std::uint32_t u = 0; u < size(); ++u)
    for (std::uint32_t v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

ColoredGraph ColoredGraph::relabeled(const Perm& p) const {
  if (p.size() != size()) throw Error("relabeling has the wrong size");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  e.reserve(num_edges());
  for (auto [u, v] : edges()) e.emplace_back(p[u], p[v]);
  std::vector<int> c(size());
  for (std::uint32_t v = 0; v < size(); ++v) c[p[v]] = colors_[v];
  return ColoredGraph(size(), e, std::move(c));
}

ColoredGraph ColoredGraph::with_colors(std::vector<int> colors) const {
  if (colors.size() != size()) throw Error("color array does not match vertex count");
  ColoredGraph g = *this;
  g.colors_ = std::move(colors);
  return g;
}

bool is_isomorphism(const ColoredGraph& a, const ColoredGraph& b, const Perm& p) {
  if (a.size() != b.size() || p.size() != a.size() || a.num_edges() != b.num_edges()) return false;
  for (std::uint32_t v = 0; v < a.size(); ++v) {
    if (a.color(v) != b.color(p[v])) return false;
    if (a.degree(v) != b.degree(p[v])) return false;
    for (std::uint32_t u : a.neighbors(v))
      if (!b.has_edge(p[v], p[u])) return false;
  }
  return true;
}

bool is_automorphism(const ColoredGraph& g, const Perm& p) { return is_isomorphism(g, g, p); }

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using Trace = std::vector<std::uint64_t>;

// Records refinement events and optionally compares them against a
// reference sequence. cmp holds the sign of the first difference.
struct Tracer {
  Trace* record = nullptr;
  const Trace* ref = nullptr;
  bool abort_on_less = true;
  bool abort_on_greater = true;
  std::size_t pos = 0;
  int cmp = 0;

  bool push(std::uint64_t ev) {
    if (record) record->push_back(ev);
    if (ref && cmp == 0) {
      if (pos >= ref->size())
        cmp = 1;
      else if (ev != (*ref)[pos])
        cmp = ev < (*ref)[pos] ? -1 : 1;
      ++pos;
      if ((cmp < 0 && abort_on_less) || (cmp > 0 && abort_on_greater)) return false;
    }
    return true;
  }
  void finish() {
    if (ref && cmp == 0 && pos < ref->size()) cmp = -1;
  }
};

struct Partition {
  std::vector<std::uint32_t> lab;       // position -> vertex
  std::vector<std::uint32_t> pos;       // vertex -> position
  std::vector<std::uint32_t> cell_of;   // vertex -> start of its cell
  std::vector<std::uint32_t> cell_end;  // start -> end (exclusive), valid at cell starts
  std::uint32_t ncells = 0;

  std::size_t size() const { return lab.size(); }
  bool discrete() const { return ncells == lab.size(); }
};

class Refiner {
 public:
  explicit Refiner(const ColoredGraph& g)
      : g_(g), cnt_(g.size(), 0), cell_mark_(g.size(), 0), inq_(g.size(), 0) {}

  Partition from_cells(const std::vector<std::vector<std::uint32_t>>& cells) const {
    const std::size_t n = g_.size();
    Partition P;
    P.lab.reserve(n);
    P.pos.assign(n, 0);
    P.cell_of.assign(n, 0);
    P.cell_end.assign(n, 0);
    std::vector<char> seen(n, 0);
    for (const auto& c : cells) {
      if (c.empty()) throw Error("empty cell in partition");
      const auto start = static_cast<std::uint32_t>(P.lab.size());
      for (std::uint32_t v : c) {
        if (v >= n || seen[v]) throw Error("partition cells must cover every vertex exactly once");
        seen[v] = 1;
        P.pos[v] = static_cast<std::uint32_t>(P.lab.size());
        P.cell_of[v] = start;
        P.lab.push_back(v);
      }
      P.cell_end[start] = static_cast<std::uint32_t>(P.lab.size());
      ++P.ncells;
    }
    if (P.lab.size() != n) throw Error("partition cells must cover every vertex exactly once");
    return P;
  }

  Partition color_partition() const {
    std::vector<std::uint32_t> order(g_.size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return g_.color(a) < g_.color(b); });
    std::vector<std::vector<std::uint32_t>> cells;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i == 0 || g_.color(order[i]) != g_.color(order[i - 1])) cells.emplace_back();
      cells.back().push_back(order[i]);
    }
    return from_cells(cells);
  }

  // Full refinement of an arbitrary starting partition: every cell is a splitter.
  bool refine_all(Partition& P, Tracer& tr) {
    std::vector<std::uint32_t> q;
    for (std::uint32_t s = 0; s < P.size(); s = P.cell_end[s]) {
      q.push_back(s);
      // colors are part of the invariant
      if (!tr.push(mix(mix(s) ^ (static_cast<std::uint64_t>(P.cell_end[s] - s) << 20) ^
                       static_cast<std::uint64_t>(static_cast<std::uint32_t>(g_.color(P.lab[s]))))))
        return false;
    }
    return refine(P, q, tr);
  }

  bool individualize(Partition& P, std::uint32_t v, Tracer& tr) {
    const std::uint32_t s = P.cell_of[v];
    const std::uint32_t e = P.cell_end[s];
    if (e - s < 2) throw Error("individualizing a singleton cell");
    const std::uint32_t pv = P.pos[v];
    const std::uint32_t other = P.lab[s];
    std::swap(P.lab[s], P.lab[pv]);
    P.pos[v] = s;
    P.pos[other] = pv;
    P.cell_end[s] = s + 1;
    P.cell_end[s + 1] = e;
    for (std::uint32_t p = s + 1; p < e; ++p) P.cell_of[P.lab[p]] = s + 1;
    ++P.ncells;
    if (!tr.push(mix(0xabcdefULL ^ (static_cast<std::uint64_t>(s) << 32) ^ (e - s)))) return false;
    return refine(P, {s}, tr);
  }

  // First largest non-singleton cell.
  std::uint32_t target_cell(const Partition& P) const {
    std::uint32_t best = static_cast<std::uint32_t>(P.size()), best_size = 1;
    for (std::uint32_t s = 0; s < P.size(); s = P.cell_end[s])
      if (P.cell_end[s] - s > best_size) {
        best = s;
        best_size = P.cell_end[s] - s;
      }
    return best;
  }

  bool refine(Partition& P, std::vector<std::uint32_t> queue, Tracer& tr) {
    const std::size_t n = P.size();
    std::size_t head = 0;
    for (std::uint32_t s : queue) inq_[s] = 1;
    bool ok = true;
    while (head < queue.size() && P.ncells < n) {
      const std::uint32_t W = queue[head++];
      inq_[W] = 0;
      const std::uint32_t wend = P.cell_end[W];
      touched_.clear();
      for (std::uint32_t p = W; p < wend; ++p)
        for (std::uint32_t u : g_.neighbors(P.lab[p]))
          if (cnt_[u]++ == 0) touched_.push_back(u);
      touched_cells_.clear();
      for (std::uint32_t u : touched_) {
        const std::uint32_t c = P.cell_of[u];
        if (!cell_mark_[c]) {
          cell_mark_[c] = 1;
          touched_cells_.push_back(c);
        }
      }
      std::sort(touched_cells_.begin(), touched_cells_.end());
      for (std::uint32_t c : touched_cells_) {
        cell_mark_[c] = 0;
        if (!ok) continue;
        const std::uint32_t e = P.cell_end[c];
        if (e - c == 1) continue;
        bool uniform = true;
        const std::uint32_t c0 = cnt_[P.lab[c]];
        for (std::uint32_t p = c + 1; p < e && uniform; ++p) uniform = cnt_[P.lab[p]] == c0;
        if (uniform) continue;
        auto first = P.lab.begin() + c, last = P.lab.begin() + e;
        std::sort(first, last, [&](std::uint32_t a, std::uint32_t b) {
          return cnt_[a] != cnt_[b] ? cnt_[a] < cnt_[b] : a < b;
        });
        std::uint64_t ev = mix(mix(W) ^ (static_cast<std::uint64_t>(c) << 24));
        frag_.clear();
        std::uint32_t fs = c;
        for (std::uint32_t p = c; p < e; ++p) {
          P.pos[P.lab[p]] = p;
          if (p + 1 == e || cnt_[P.lab[p + 1]] != cnt_[P.lab[p]]) {
            frag_.push_back(fs);
            P.cell_end[fs] = p + 1;
            for (std::uint32_t r = fs; r <= p; ++r) P.cell_of[P.lab[r]] = fs;
            ev = mix(ev ^ (static_cast<std::uint64_t>(cnt_[P.lab[p]]) << 32) ^ (p + 1 - fs));
            fs = p + 1;
          }
        }
        P.ncells += static_cast<std::uint32_t>(frag_.size()) - 1;
        if (!tr.push(ev)) ok = false;
        if (inq_[c]) {
          for (std::size_t f = 1; f < frag_.size(); ++f) {
            queue.push_back(frag_[f]);
            inq_[frag_[f]] = 1;
          }
        } else {
          std::size_t big = 0;
          for (std::size_t f = 1; f < frag_.size(); ++f)
            if (P.cell_end[frag_[f]] - frag_[f] > P.cell_end[frag_[big]] - frag_[big]) big = f;
          for (std::size_t f = 0; f < frag_.size(); ++f)
            if (f != big) {
              queue.push_back(frag_[f]);
              inq_[frag_[f]] = 1;
            }
        }
      }
      for (std::uint32_t u : touched_) cnt_[u] = 0;
      if (!ok) break;
    }
    for (std::size_t k = head; k < queue.size(); ++k) inq_[queue[k]] = 0;
    if (!ok) return false;
    if (!tr.push(mix(0x5151ULL ^ P.ncells))) return false;
    tr.finish();
    return tr.cmp == 0 || (tr.cmp < 0 ? !tr.abort_on_less : !tr.abort_on_greater);
  }

 private:
  const ColoredGraph& g_;
  std::vector<std::uint32_t> cnt_;
  std::vector<char> cell_mark_;
  std::vector<char> inq_;
  std::vector<std::uint32_t> touched_, touched_cells_, frag_;
};

std::vector<std::vector<std::uint32_t>> cells_of(const Partition& P) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t s = 0; s < P.size(); s = P.cell_end[s])
    out.emplace_back(P.lab.begin() + s, P.lab.begin() + P.cell_end[s]);
  return out;
}

struct UnionFind {
  std::vector<std::uint32_t> parent, sz;
  explicit UnionFind(std::size_t n) : parent(n), sz(n, 1) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (sz[a] < sz[b]) std::swap(a, b);
    parent[b] = a;
    sz[a] += sz[b];
  }
  void unite_perm(const Perm& p) {
    for (std::uint32_t x = 0; x < p.size(); ++x) unite(x, p[x]);
  }
};

// First path through the search tree: the reference every other leaf is
// compared against.
struct FirstPath {
  std::vector<Partition> nodes;  // nodes[l] is refined; nodes.back() is the leaf
  std::vector<Trace> traces;     // traces[0] root, traces[l+1] individualizing base[l]
  std::vector<std::uint32_t> base;
  std::vector<std::uint32_t> target;  // target cell start at each non-leaf node
};

FirstPath first_path(Refiner& R) {
  FirstPath fp;
  fp.traces.emplace_back();
  Partition P = R.color_partition();
  Tracer tr;
  tr.record = &fp.traces.back();
  R.refine_all(P, tr);
  fp.nodes.push_back(P);
  while (!fp.nodes.back().discrete()) {
    Partition C = fp.nodes.back();
    const std::uint32_t t = R.target_cell(C);
    const std::uint32_t v = C.lab[t];
    fp.target.push_back(t);
    fp.base.push_back(v);
    fp.traces.emplace_back();
    Tracer t2;
    t2.record = &fp.traces.back();
    R.individualize(C, v, t2);
    fp.nodes.push_back(std::move(C));
  }
  return fp;
}

// Depth-first search below a node for a leaf that matches the reference
// traces and for which `accept` holds.
template <class Accept>
std::optional<Perm> search_leaf(Refiner& R, const Partition& node, std::size_t depth, const std::vector<Trace>& ref,
                                std::size_t& nodes, Accept&& accept) {
  ++nodes;
  if (node.discrete()) return accept(node);
  if (depth + 1 >= ref.size()) return std::nullopt;
  const std::uint32_t t = R.target_cell(node);
  const std::uint32_t e = node.cell_end[t];
  for (std::uint32_t p = t; p < e; ++p) {
    Partition C = node;
    Tracer tr;
    tr.ref = &ref[depth + 1];
    if (!R.individualize(C, node.lab[p], tr)) continue;
    if (auto r = search_leaf(R, C, depth + 1, ref, nodes, accept)) return r;
  }
  return std::nullopt;
}

Perm leaf_map(const Partition& from, const Partition& to) {
  std::vector<std::uint32_t> img(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) img[from.lab[i]] = to.lab[i];
  return Perm(std::move(img));
}

}  // namespace

std::vector<std::vector<std::uint32_t>> refine(const ColoredGraph& g,
                                               const std::vector<std::vector<std::uint32_t>>& partition) {
  for (const auto& c : partition)
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] < g.size() && c[0] < g.size() && g.color(c[i]) != g.color(c[0]))
        throw Error("partition does not refine the color classes");
  Refiner R(g);
  Partition P = R.from_cells(partition);
  Tracer tr;
  R.refine_all(P, tr);
  return cells_of(P);
}

std::vector<std::vector<std::uint32_t>> refine(const ColoredGraph& g) {
  Refiner R(g);
  Partition P = R.color_partition();
  Tracer tr;
  R.refine_all(P, tr);
  return cells_of(P);
}

AutomorphismResult automorphism_group(const ColoredGraph& g) {
  AutomorphismResult res;
  const std::size_t n = g.size();
  if (n == 0) return res;
  Refiner R(g);
  FirstPath fp = first_path(R);
  res.base = fp.base;
  res.orbit_sizes.assign(fp.base.size(), 1);
  const Partition& leaf0 = fp.nodes.back();

  for (std::size_t lvl = fp.base.size(); lvl-- > 0;) {
    UnionFind uf(n);
    for (const Perm& gen : res.generators) uf.unite_perm(gen);
    const Partition& node = fp.nodes[lvl];
    const std::uint32_t v = fp.base[lvl];
    const std::uint32_t t = fp.target[lvl];
    std::vector<std::uint32_t> failed;
    for (std::uint32_t p = t; p < node.cell_end[t]; ++p) {
      const std::uint32_t w = node.lab[p];
      if (uf.find(w) == uf.find(v)) continue;
      bool known_bad = false;
      for (std::uint32_t f : failed) known_bad = known_bad || uf.find(f) == uf.find(w);
      if (known_bad) continue;
      Partition C = node;
      Tracer tr;
      tr.ref = &fp.traces[lvl + 1];
      std::optional<Perm> found;
      ++res.nodes;
      if (R.individualize(C, w, tr)) {
        found = search_leaf(R, C, lvl + 1, fp.traces, res.nodes, [&](const Partition& leaf) -> std::optional<Perm> {
          Perm gam = leaf_map(leaf0, leaf);
          if (is_automorphism(g, gam)) return gam;
          return std::nullopt;
        });
      }
      if (found) {
        uf.unite_perm(*found);
        res.generators.push_back(std::move(*found));
      } else {
        failed.push_back(w);
      }
    }
    res.orbit_sizes[lvl] = uf.sz[uf.find(v)];
  }
  res.order = 1;
  for (std::size_t s : res.orbit_sizes) res.order *= s;
  return res;
}

namespace {

// Canonical code of a discrete leaf: colors then sorted relabeled edges.
std::vector<std::uint32_t> leaf_code(const ColoredGraph& g, const Partition& leaf) {
  std::vector<std::uint32_t> code;
  code.reserve(2 * g.num_edges());
  std::vector<std::uint64_t> e;
  e.reserve(g.num_edges());
  for (auto [u, v] : g.edges()) {
    std::uint64_t a = leaf.pos[u], b = leaf.pos[v];
    if (a > b) std::swap(a, b);
    e.push_back((a << 32) | b);
  }
  std::sort(e.begin(), e.end());
  for (std::uint64_t x : e) {
    code.push_back(static_cast<std::uint32_t>(x >> 32));
    code.push_back(static_cast<std::uint32_t>(x & 0xffffffffu));
  }
  return code;
}

struct CanonSearch {
  const ColoredGraph& g;
  Refiner& R;
  std::vector<Perm> gens;
  std::vector<Trace> best_traces;
  std::vector<std::uint32_t> best_code;
  Partition best_leaf;
  bool have_best = false;
  std::vector<Trace> cur;  // traces along the current path
  std::vector<std::uint32_t> seq;
  std::size_t updates = 0;  // number of times best changed

  // cmp: sign of (current path) vs (best path) so far, 0 while equal.
  void dfs(const Partition& node, int cmp) {
    if (node.discrete()) {
      std::vector<std::uint32_t> code = leaf_code(g, node);
      int c = cmp;
      if (c == 0 && have_best) c = code < best_code ? -1 : (code > best_code ? 1 : 0);
      if (!have_best || c > 0) {
        best_code = std::move(code);
        best_traces = cur;
        best_leaf = node;
        have_best = true;
        ++updates;
      } else if (c == 0) {
        Perm gam = leaf_map(best_leaf, node);
        if (!gam.is_identity() && is_automorphism(g, gam)) gens.push_back(std::move(gam));
      }
      return;
    }
    const std::uint32_t t = R.target_cell(node);
    const std::uint32_t e = node.cell_end[t];
    std::vector<std::uint32_t> tried;
    UnionFind uf(g.size());
    std::size_t used = 0;
    for (std::uint32_t p = t; p < e; ++p) {
      const std::uint32_t w = node.lab[p];
      // orbits of the generators fixing the current individualized sequence
      for (; used < gens.size(); ++used) {
        bool fixes = true;
        for (std::uint32_t s : seq) fixes = fixes && gens[used][s] == s;
        if (fixes) uf.unite_perm(gens[used]);
      }
      bool skip = false;
      for (std::uint32_t x : tried) skip = skip || uf.find(x) == uf.find(w);
      if (skip) continue;
      tried.push_back(w);

      Partition C = node;
      const std::size_t depth = cur.size();
      cur.emplace_back();
      Tracer tr;
      tr.record = &cur.back();
      int child_cmp = cmp;
      if (cmp == 0 && have_best) {
        if (depth < best_traces.size()) {
          tr.ref = &best_traces[depth];
          tr.abort_on_less = true;
          tr.abort_on_greater = false;
        } else {
          child_cmp = 1;
        }
      }
      seq.push_back(w);
      const std::size_t before = updates;
      const bool alive = R.individualize(C, w, tr);
      if (alive) {
        if (tr.ref) child_cmp = tr.cmp;
        if (child_cmp >= 0) dfs(C, child_cmp);
      }
      seq.pop_back();
      cur.pop_back();
      // a new best below here shares this prefix
      if (updates != before) cmp = 0;
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const ColoredGraph& g) {
  const std::size_t n = g.size();
  CanonicalForm cf;
  if (n == 0) return cf;
  Refiner R(g);
  CanonSearch cs{g, R, automorphism_group(g).generators, {}, {}, {}, false, {}, {}, 0};
  Partition root = R.color_partition();
  cs.cur.emplace_back();
  Tracer tr;
  tr.record = &cs.cur.back();
  R.refine_all(root, tr);
  cs.dfs(root, 0);
  cf.labeling.assign(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) cf.labeling[v] = cs.best_leaf.pos[v];
  cf.graph = g.relabeled(Perm(cf.labeling));
  return cf;
}

std::optional<Perm> find_isomorphism(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.size() != b.size() || a.num_edges() != b.num_edges()) return std::nullopt;
  {
    auto ca = a.colors(), cb = b.colors();
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return std::nullopt;
  }
  if (a.size() == 0) return Perm(0);
  Refiner Ra(a);
  FirstPath fp = first_path(Ra);
  const Partition& leaf0 = fp.nodes.back();

  Refiner Rb(b);
  Partition root = Rb.color_partition();
  Tracer tr;
  tr.ref = &fp.traces[0];
  if (!Rb.refine_all(root, tr)) return std::nullopt;
  std::size_t nodes = 0;
  return search_leaf(Rb, root, 0, fp.traces, nodes, [&](const Partition& leaf) -> std::optional<Perm> {
    Perm gam = leaf_map(leaf0, leaf);
    if (is_isomorphism(a, b, gam)) return gam;
    return std::nullopt;
  });
}

}  // namespace tstar

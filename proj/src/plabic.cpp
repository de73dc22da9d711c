#include "positroid/plabic.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace positroid {
namespace plabic {

namespace {

[[noreturn]] void fail(const std::string &msg) {
  throw std::runtime_error(msg);
}

int next_label(int p, int n) { return p % n + 1; }
int prev_label(int p, int n) { return (p - 2 + n) % n + 1; }

}  // namespace

int PlabicGraph::edge_end(const Item &it, int from_node) const {
  assert(it.kind == Item::edge);
  auto [a, b] = edges.at(it.id);
  if (a == from_node) return b;
  assert(b == from_node);
  return a;
}

// ---------------------------------------------------------------------------
// parse / print

PlabicGraph parse(const std::string &text) {
  PlabicGraph g;
  bool have_n = false;
  std::vector<std::pair<int, std::vector<std::string>>> embed_tokens;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    auto want_int = [&](const std::string &what) {
      std::string tok;
      if (!(ls >> tok)) fail("parse: missing " + what + " on line " + std::to_string(lineno));
      try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
      } catch (const std::exception &) {
        fail("parse: bad " + what + " '" + tok + "' on line " + std::to_string(lineno));
      }
    };
    if (word == "plabic") {
      std::string tok;
      if (!(ls >> tok) || tok.rfind("n=", 0) != 0)
        fail("parse: expected n=<count> on line " + std::to_string(lineno));
      g.n = std::stoi(tok.substr(2));
      have_n = true;
    } else if (word == "node") {
      int id = want_int("node id");
      std::string color;
      if (!(ls >> color)) fail("parse: missing color on line " + std::to_string(lineno));
      if (color != "black" && color != "white")
        fail("parse: bad color '" + color + "' on line " + std::to_string(lineno));
      if (id <= 0) fail("parse: node ids must be positive (line " + std::to_string(lineno) + ")");
      if (!g.nodes.emplace(id, color == "black" ? Color::black : Color::white).second)
        fail("parse: duplicate node " + std::to_string(id));
    } else if (word == "edge") {
      int a = want_int("edge endpoint"), b = want_int("edge endpoint");
      g.edges.emplace_back(std::min(a, b), std::max(a, b));
    } else if (word == "half") {
      int p = want_int("boundary point"), v = want_int("node id");
      if (!g.half.emplace(p, v).second)
        fail("parse: duplicate half-edge at point " + std::to_string(p));
    } else if (word == "embed") {
      std::string idtok;
      if (!(ls >> idtok)) fail("parse: missing node id on line " + std::to_string(lineno));
      if (!idtok.empty() && idtok.back() == ':') idtok.pop_back();
      int v = 0;
      try {
        v = std::stoi(idtok);
      } catch (const std::exception &) {
        fail("parse: bad embed node '" + idtok + "'");
      }
      std::vector<std::string> toks;
      std::string t;
      while (ls >> t) toks.push_back(t);
      embed_tokens.emplace_back(v, toks);
    } else {
      fail("parse: unrecognized line " + std::to_string(lineno) + ": " + raw);
    }
  }
  if (!have_n) fail("parse: missing 'plabic n=<count>' header");
  if (g.n < 1) fail("parse: need at least one boundary point");
  std::stable_sort(g.edges.begin(), g.edges.end());

  for (int p = 1; p <= g.n; ++p)
    if (!g.half.count(p)) fail("parse: no half-edge at boundary point " + std::to_string(p));
  if ((int)g.half.size() != g.n) fail("parse: half-edge at point outside 1..n");
  for (auto &[p, v] : g.half)
    if (!g.nodes.count(v)) fail("parse: half " + std::to_string(p) + " attached to unknown node");
  for (auto &[a, b] : g.edges)
    if (!g.nodes.count(a) || !g.nodes.count(b)) fail("parse: edge endpoint is not a node");

  // instances of each endpoint pair, in canonical edge order
  std::map<std::pair<int, int>, std::vector<int>> occ;
  for (int i = 0; i < (int)g.edges.size(); ++i) occ[g.edges[i]].push_back(i);

  std::set<int> have_embed;
  for (auto &[v, toks] : embed_tokens) {
    if (!g.nodes.count(v)) fail("parse: embed for unknown node " + std::to_string(v));
    if (!have_embed.insert(v).second)
      fail("parse: duplicate embed for node " + std::to_string(v));
    std::vector<Item> items;
    std::map<int, int> seen;  // neighbor -> occurrences so far
    for (auto &t : toks) {
      if (t.size() > 1 && t[0] == 'b') {
        int p = 0;
        try {
          p = std::stoi(t.substr(1));
        } catch (const std::exception &) {
          fail("parse: bad boundary token '" + t + "'");
        }
        if (!g.half.count(p) || g.half[p] != v)
          fail("parse: node " + std::to_string(v) + " lists b" + std::to_string(p) +
               " but that half-edge is not attached to it");
        items.push_back(Item{Item::half, p});
      } else {
        int u = 0;
        try {
          u = std::stoi(t);
        } catch (const std::exception &) {
          fail("parse: bad embed token '" + t + "'");
        }
        std::pair<int, int> key{std::min(u, v), std::max(u, v)};
        auto it = occ.find(key);
        int k = seen[u]++;
        if (it == occ.end() || k >= (int)it->second.size())
          fail("parse: node " + std::to_string(v) + " lists neighbor " + std::to_string(u) +
               " more often than there are such edges");
        // parallel edges: pair u's occurrence order with v's reversed order
        int inst = (v <= u) ? it->second[k] : it->second[it->second.size() - 1 - k];
        items.push_back(Item{Item::edge, inst});
      }
    }
    g.embed[v] = std::move(items);
  }

  // every incidence must be listed exactly once per endpoint
  std::map<int, int> want_deg;
  for (auto &[p, v] : g.half) want_deg[v] += 1;
  for (auto &[a, b] : g.edges) {
    want_deg[a] += 1;
    want_deg[b] += 1;
  }
  for (auto &[v, color] : g.nodes) {
    (void)color;
    auto it = g.embed.find(v);
    int got = it == g.embed.end() ? -1 : (int)it->second.size();
    if (got != want_deg[v])
      fail("parse: embed list of node " + std::to_string(v) + " has " +
           (got < 0 ? std::string("no entries") : std::to_string(got) + " entries") +
           ", expected " + std::to_string(want_deg[v]));
    std::set<Item> distinct(it->second.begin(), it->second.end());
    if (distinct.size() != it->second.size())
      fail("parse: embed list of node " + std::to_string(v) + " repeats an incidence");
  }
  return g;
}

PlabicGraph parse_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string print(const PlabicGraph &g) {
  std::ostringstream out;
  out << "plabic n=" << g.n << "\n";
  for (auto &[v, c] : g.nodes)
    out << "node " << v << ' ' << (c == Color::black ? "black" : "white") << "\n";
  for (auto &[a, b] : g.edges) out << "edge " << a << ' ' << b << "\n";
  for (auto &[p, v] : g.half) out << "half " << p << ' ' << v << "\n";
  for (auto &[v, items] : g.embed) {
    std::vector<std::string> toks;
    for (auto &it : items)
      toks.push_back(it.kind == Item::half ? "b" + std::to_string(it.id)
                                           : std::to_string(g.edge_end(it, v)));
    std::vector<std::string> best = toks;
    for (size_t s = 1; s < toks.size(); ++s) {
      std::vector<std::string> cand(toks.begin() + s, toks.end());
      cand.insert(cand.end(), toks.begin(), toks.begin() + s);
      if (cand < best) best = cand;
    }
    out << "embed " << v << ':';
    for (auto &t : best) out << ' ' << t;
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// core traversal: rotations with boundary, strands, faces

namespace {

struct Core {
  const PlabicGraph *g = nullptr;
  int n = 0, ecount = 0, item_count = 0;
  std::vector<Item> items;                 // halves 0..n-1, then edges
  std::map<int, std::vector<int>> rot;     // vertex (node id or -p) -> carriers
  // carriers: item index, or item_count + (p-1) for the boundary arc p->p+1
  // darts: item i -> 2i, 2i+1; arc p -> 2*item_count + 2(p-1) + dir
  // dir 0: half = into the node, edge = a->b, arc = clockwise (p -> p+1)
  std::vector<int> d_tail, d_head, d_carrier;

  std::vector<int> perm;                   // 1-based
  std::vector<Strand> strands;
  std::vector<int> strand_of_dart, pos_on_strand;

  std::vector<std::vector<int>> face_darts;  // face id -> dart cycle
  std::vector<int> face_of_dart;
  int outer_face = -1;
  std::vector<int> gap_face;               // 1-based

  int arc_code(int p) const { return item_count + (p - 1); }
  int item_index(const Item &it) const {
    return it.kind == Item::half ? it.id - 1 : n + it.id;
  }
  int dart_count() const { return 2 * (item_count + n); }

  void build_items() {
    n = g->n;
    ecount = (int)g->edges.size();
    item_count = n + ecount;
    items.resize(item_count);
    for (int p = 1; p <= n; ++p) items[p - 1] = Item{Item::half, p};
    for (int j = 0; j < ecount; ++j) items[n + j] = Item{Item::edge, j};
  }

  void build_rot() {
    for (auto &[v, lst] : g->embed) {
      std::vector<int> cs;
      for (auto &it : lst) cs.push_back(item_index(it));
      rot.emplace(v, std::move(cs));
    }
    for (int p = 1; p <= n; ++p)
      rot.emplace(-p, std::vector<int>{arc_code(prev_label(p, n)), arc_code(p),
                                       item_index(Item{Item::half, p})});
  }

  void build_darts() {
    d_tail.assign(dart_count(), 0);
    d_head.assign(dart_count(), 0);
    d_carrier.assign(dart_count(), 0);
    for (int i = 0; i < item_count; ++i) {
      int t, h;
      if (items[i].kind == Item::half) {
        int p = items[i].id;
        t = -p;
        h = g->half.at(p);
      } else {
        auto [a, b] = g->edges[items[i].id];
        if (a == b) fail("self-loop edges are not supported");
        t = a;
        h = b;
      }
      d_tail[2 * i] = t;
      d_head[2 * i] = h;
      d_carrier[2 * i] = i;
      d_tail[2 * i + 1] = h;
      d_head[2 * i + 1] = t;
      d_carrier[2 * i + 1] = i;
    }
    for (int p = 1; p <= n; ++p) {
      int base = 2 * item_count + 2 * (p - 1);
      d_tail[base] = -p;
      d_head[base] = -next_label(p, n);
      d_carrier[base] = arc_code(p);
      d_tail[base + 1] = -next_label(p, n);
      d_head[base + 1] = -p;
      d_carrier[base + 1] = arc_code(p);
    }
  }

  int carrier_pos(int vertex, int carrier) const {
    auto &lst = rot.at(vertex);
    for (int i = 0; i < (int)lst.size(); ++i)
      if (lst[i] == carrier) return i;
    fail("embedding is inconsistent: incidence missing from a rotation");
  }

  int dart_of(int tail, int carrier) const {
    if (carrier >= item_count) {
      int p = carrier - item_count + 1;
      return 2 * item_count + 2 * (p - 1) + (tail == -p ? 0 : 1);
    }
    return 2 * carrier + (d_tail[2 * carrier] == tail ? 0 : 1);
  }

  int face_next(int d) const {
    int head = d_head[d];
    auto &lst = rot.at(head);
    int i = carrier_pos(head, d_carrier[d]);
    int c2 = lst[(i + 1) % lst.size()];
    return dart_of(head, c2);
  }

  void trace_strands() {
    perm.assign(n + 1, 0);
    strands.resize(n);
    strand_of_dart.assign(2 * item_count, 0);
    pos_on_strand.assign(2 * item_count, -1);
    int bound = 2 * (item_count + n) + 4;
    for (int s = 1; s <= n; ++s) {
      Strand str;
      str.source = s;
      Item cur = Item{Item::half, s};
      int v = g->half.at(s);
      int dart = 2 * item_index(cur);  // into the graph
      int steps = 0;
      for (;;) {
        if (++steps > bound) fail("strand trace does not terminate");
        strand_of_dart[dart] = s;
        pos_on_strand[dart] = (int)str.trace.size();
        str.trace.push_back(cur);
        str.nodes.push_back(v);
        auto &lst = rot.at(v);
        int i = carrier_pos(v, item_index(cur));
        int dir = g->nodes.at(v) == Color::white ? 1 : -1;
        int c2 = lst[((i + dir) % (int)lst.size() + (int)lst.size()) % (int)lst.size()];
        Item next = items[c2];
        if (next.kind == Item::half) {
          int outd = 2 * c2 + 1;
          strand_of_dart[outd] = s;
          pos_on_strand[outd] = (int)str.trace.size();
          str.trace.push_back(next);
          str.target = next.id;
          perm[s] = next.id;
          break;
        }
        cur = next;
        int v2 = g->edge_end(next, v);
        dart = dart_of(v, c2);
        v = v2;
      }
      strands[s - 1] = std::move(str);
    }
  }

  void trace_faces() {
    face_of_dart.assign(dart_count(), -1);
    for (int d0 = 0; d0 < dart_count(); ++d0) {
      if (face_of_dart[d0] >= 0) continue;
      int fid = (int)face_darts.size();
      std::vector<int> cyc;
      int d = d0;
      int guard = 0;
      while (face_of_dart[d] < 0) {
        if (++guard > dart_count() + 2) fail("face trace does not close");
        face_of_dart[d] = fid;
        cyc.push_back(d);
        d = face_next(d);
      }
      if (d != d0) fail("face trace does not close");
      face_darts.push_back(std::move(cyc));
    }
    // Euler characteristic of the closed-up surface must be a sphere's
    int V = (int)g->nodes.size() + n;
    int E = item_count + n;
    int F = (int)face_darts.size();
    int chi = V - E + F;
    if (chi != 2) fail(chi > 2 ? "graph has a component not attached to the boundary"
                               : "rotation system is not planar in a disc");
    outer_face = face_of_dart[2 * item_count];  // left of the clockwise arc 1->2
    gap_face.assign(n + 1, -1);
    for (int p = 1; p <= n; ++p)
      gap_face[p] = face_of_dart[2 * item_count + 2 * (p - 1) + 1];
    for (int p = 1; p <= n; ++p)
      if (gap_face[p] == outer_face) fail("boundary face tracing hit the outer face");
  }

  void run() {
    build_items();
    build_rot();
    build_darts();
    trace_strands();
    trace_faces();
  }
};

// structural well-formedness; reports instead of throwing
void check_well_formed(const PlabicGraph &g, std::vector<Violation> *out) {
  auto bad = [&](const std::string &m) {
    out->push_back({Violation::structural, m});
  };
  if (g.n < 1) {
    out->push_back({Violation::degenerate, "graph has no boundary points"});
    return;
  }
  for (int p = 1; p <= g.n; ++p)
    if (!g.half.count(p)) bad("no half-edge at boundary point " + std::to_string(p));
  if ((int)g.half.size() != g.n) bad("half-edge outside 1..n");
  for (auto &[v, c] : g.nodes) {
    (void)c;
    if (v <= 0) bad("node ids must be positive");
  }
  for (auto &[p, v] : g.half)
    if (!g.nodes.count(v)) bad("half " + std::to_string(p) + " attached to unknown node");
  if (!std::is_sorted(g.edges.begin(), g.edges.end())) bad("edge list not in canonical order");
  for (auto &[a, b] : g.edges) {
    if (!g.nodes.count(a) || !g.nodes.count(b)) bad("edge endpoint is not a node");
    else if (a > b) bad("edge endpoints not sorted");
    else if (a == b) bad("self-loop edge");
  }
  if (!out->empty()) return;

  // embed lists must match the incidences exactly
  std::map<int, std::multiset<std::pair<int, int>>> want;
  for (auto &[p, v] : g.half) want[v].insert({Item::half, p});
  for (int j = 0; j < (int)g.edges.size(); ++j) {
    want[g.edges[j].first].insert({Item::edge, j});
    want[g.edges[j].second].insert({Item::edge, j});
  }
  for (auto &[v, c] : g.nodes) {
    (void)c;
    auto it = g.embed.find(v);
    if (it == g.embed.end()) {
      bad("node " + std::to_string(v) + " has no rotation list");
      continue;
    }
    std::multiset<std::pair<int, int>> got;
    for (auto &item : it->second) got.insert({item.kind, item.id});
    if (got != want[v]) bad("rotation list of node " + std::to_string(v) +
                            " does not match its incidences");
  }
  for (auto &[v, lst] : g.embed) {
    (void)lst;
    if (!g.nodes.count(v)) bad("rotation list for unknown node " + std::to_string(v));
  }
  if (!out->empty()) return;

  // every node must reach the boundary
  std::set<int> seen;
  std::deque<int> queue;
  for (auto &[p, v] : g.half) {
    (void)p;
    if (seen.insert(v).second) queue.push_back(v);
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (auto &it : g.embed.at(v))
      if (it.kind == Item::edge) {
        int u = g.edge_end(it, v);
        if (seen.insert(u).second) queue.push_back(u);
      }
  }
  for (auto &[v, c] : g.nodes) {
    (void)c;
    if (!seen.count(v))
      bad("node " + std::to_string(v) + " is in a component not attached to the boundary");
  }
}

int type_by_count(const PlabicGraph &g) {
  int w = 0, b = 0, hb = 0;
  for (auto &[v, c] : g.nodes) {
    (void)v;
    (c == Color::white ? w : b) += 1;
  }
  for (auto &[p, v] : g.half) {
    (void)p;
    if (g.nodes.at(v) == Color::black) hb += 1;
  }
  return w - b + hb;
}

}  // namespace

// ---------------------------------------------------------------------------
// validate

std::vector<Violation> validate(const PlabicGraph &g) {
  std::vector<Violation> out;
  check_well_formed(g, &out);
  if (!out.empty()) return out;

  for (auto &[a, b] : g.edges)
    if (g.nodes.at(a) == g.nodes.at(b))
      out.push_back({Violation::structural,
                     "edge " + std::to_string(a) + "-" + std::to_string(b) +
                         " joins two nodes of the same color"});

  Core core;
  core.g = &g;
  try {
    core.run();
  } catch (const std::runtime_error &e) {
    out.push_back({Violation::structural, e.what()});
    return out;
  }

  // a strand may not use the same edge twice (half-edges are exempt: a
  // lollipop strand legitimately enters and leaves through its half-edge)
  for (auto &s : core.strands) {
    std::map<int, int> count;
    for (auto &it : s.trace)
      if (it.kind == Item::edge) count[it.id] += 1;
    for (auto &[e, c] : count)
      if (c > 1)
        out.push_back({Violation::strand_self_cross,
                       "strand from " + std::to_string(s.source) + " traverses edge " +
                           std::to_string(g.edges[e].first) + "-" +
                           std::to_string(g.edges[e].second) + " twice"});
  }

  // two strands may cross at most once in the forward direction; marked
  // points count as crossing sites here
  for (int s = 1; s <= g.n; ++s) {
    for (int t = s + 1; t <= g.n; ++t) {
      auto &a = core.strands[s - 1].trace;
      auto &b = core.strands[t - 1].trace;
      std::map<std::pair<int, int>, int> posa, posb;
      for (int i = 0; i < (int)a.size(); ++i)
        posa.emplace(std::pair<int, int>{a[i].kind, a[i].id}, i);
      for (int i = 0; i < (int)b.size(); ++i)
        posb.emplace(std::pair<int, int>{b[i].kind, b[i].id}, i);
      std::vector<std::pair<int, int>> common;  // (pos in a, pos in b)
      for (auto &[key, pa] : posa) {
        auto it = posb.find(key);
        if (it != posb.end()) common.push_back({pa, it->second});
      }
      std::sort(common.begin(), common.end());
      bool bad = false;
      for (size_t i = 0; i + 1 < common.size() && !bad; ++i)
        for (size_t j = i + 1; j < common.size() && !bad; ++j)
          if (common[j].second > common[i].second) bad = true;
      if (bad)
        out.push_back({Violation::strand_double_cross,
                       "strands from " + std::to_string(s) + " and " + std::to_string(t) +
                           " cross forwards twice"});
    }
  }

  int k = type_by_count(g);
  if (k <= 0 || k >= g.n)
    out.push_back({Violation::degenerate,
                   "graph has type (" + std::to_string(k) + ", " + std::to_string(g.n) +
                       "), which carries no cluster structure"});
  return out;
}

// ---------------------------------------------------------------------------
// analyze: full labelled analysis

namespace {

// source label of the boundary face behind gap (p, p+1): the strands whose
// clockwise walk from source to target crosses the gap, plus white lollipops
Subset gap_label(const PlabicGraph &g, const std::vector<int> &perm, int p) {
  Subset lab;
  for (int i = 1; i <= g.n; ++i) {
    int t = perm[i];
    if (t == i) {
      if (g.nodes.at(g.half.at(i)) == Color::white) lab.push_back(i);
      continue;
    }
    for (int j = i; j != t; j = next_label(j, g.n)) {
      if (j == p) {
        lab.push_back(i);
        break;
      }
    }
  }
  std::sort(lab.begin(), lab.end());
  return lab;
}

}  // namespace

Analysis analyze(const PlabicGraph &g) {
  {
    auto viol = validate(g);
    for (auto &v : viol)
      if (v.kind != Violation::degenerate) fail("invalid plabic graph: " + v.detail);
  }
  if (g.n < 2) fail("invalid plabic graph: need at least two boundary points");

  Core core;
  core.g = &g;
  core.run();

  int face_total = (int)core.face_darts.size();
  std::vector<std::optional<Subset>> src(face_total);
  for (int p = 1; p <= g.n; ++p) {
    Subset lab = gap_label(g, core.perm, p);
    auto &slot = src[core.gap_face[p]];
    if (slot && *slot != lab) fail("boundary face has inconsistent labels");
    slot = lab;
  }

  // propagate labels across (half-)edges: crossing a strand swaps its source
  // out of the label for the face on its left
  std::deque<int> queue;
  for (int p = 1; p <= g.n; ++p) queue.push_back(core.gap_face[p]);
  std::vector<std::vector<int>> darts_of_face(face_total);
  for (int d = 0; d < 2 * core.item_count; ++d)
    darts_of_face[core.face_of_dart[d]].push_back(d);
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (int d : darts_of_face[f]) {
      int fr = core.face_of_dart[d ^ 1];
      if (fr == core.outer_face || src[fr]) continue;
      int sl = core.strand_of_dart[d];
      int sr = core.strand_of_dart[d ^ 1];
      Subset lab = *src[f];
      auto it = std::find(lab.begin(), lab.end(), sl);
      if (it == lab.end()) fail("face label does not contain its strand source");
      lab.erase(it);
      lab.insert(std::lower_bound(lab.begin(), lab.end(), sr), sr);
      src[fr] = std::move(lab);
      queue.push_back(fr);
    }
  }

  size_t k = SIZE_MAX;
  for (int f = 0; f < face_total; ++f) {
    if (f == core.outer_face) continue;
    if (!src[f]) fail("label propagation did not reach every face");
    if (k == SIZE_MAX) k = src[f]->size();
    if (src[f]->size() != k) fail("face label cardinalities differ");
  }
  // every dart's left face label must contain the dart's strand source
  // (fixed-point strands are exempt: a black lollipop's loop has the empty
  // side on its left, a white lollipop's source is in every label anyway)
  for (int d = 0; d < 2 * core.item_count; ++d) {
    int f = core.face_of_dart[d];
    if (f == core.outer_face) fail("a strand dart borders the outer face");
    int s = core.strand_of_dart[d];
    if (core.perm[s] == s) continue;
    auto &lab = *src[f];
    if (!std::binary_search(lab.begin(), lab.end(), s))
      fail("face label does not contain a bordering strand source");
  }
  if ((int)k != type_by_count(g))
    fail("face label size disagrees with the node-count type formula");

  // canonical face ids: boundary faces by least gap, then interior by label
  std::vector<int> new_id(face_total, -1);
  int next_id = 0;
  for (int p = 1; p <= g.n; ++p)
    if (new_id[core.gap_face[p]] < 0) new_id[core.gap_face[p]] = next_id++;
  int boundary_count = next_id;
  std::vector<std::pair<Subset, int>> interior;
  for (int f = 0; f < face_total; ++f)
    if (f != core.outer_face && new_id[f] < 0) interior.push_back({*src[f], f});
  std::sort(interior.begin(), interior.end());
  for (auto &[lab, f] : interior) {
    (void)lab;
    new_id[f] = next_id++;
  }

  Analysis a;
  a.graph = g;
  a.n = g.n;
  a.item_count = core.item_count;
  a.items = core.items;
  a.perm = core.perm;
  a.strands = core.strands;
  a.strand_of_dart = core.strand_of_dart;
  a.pos_on_strand = core.pos_on_strand;
  a.face_of_dart.assign(2 * core.item_count, -1);
  for (int d = 0; d < 2 * core.item_count; ++d)
    a.face_of_dart[d] = new_id[core.face_of_dart[d]];
  a.labels.face_count = next_id;
  a.labels.k = (int)k;
  a.labels.is_boundary.assign(next_id, false);
  for (int f = 0; f < boundary_count; ++f) a.labels.is_boundary[f] = true;
  a.labels.src_label.resize(next_id);
  a.labels.tgt_label.resize(next_id);
  for (int f = 0; f < face_total; ++f) {
    if (f == core.outer_face) continue;
    a.labels.src_label[new_id[f]] = *src[f];
    a.labels.tgt_label[new_id[f]] = permute_subset(core.perm, *src[f]);
  }
  a.labels.gap_face.assign(g.n + 1, -1);
  for (int p = 1; p <= g.n; ++p) a.labels.gap_face[p] = new_id[core.gap_face[p]];
  return a;
}

int Analysis::item_index(const Item &it) const {
  return it.kind == Item::half ? it.id - 1 : n + it.id;
}

// ---------------------------------------------------------------------------
// thin views

std::vector<int> trip_permutation(const PlabicGraph &g) { return analyze(g).perm; }

FaceLabels face_labels(const PlabicGraph &g) { return analyze(g).labels; }

Necklaces necklaces(const PlabicGraph &g) {
  auto a = analyze(g);
  Necklaces out;
  out.src.resize(g.n + 1);
  out.tgt.resize(g.n + 1);
  for (int p = 1; p <= g.n; ++p) {
    out.src[p] = a.labels.src_label[a.labels.gap_face[p]];
    out.tgt[p] = a.labels.tgt_label[a.labels.gap_face[p]];
  }
  return out;
}

std::pair<int, int> graph_type(const PlabicGraph &g) {
  auto a = analyze(g);  // analyze cross-checks label size vs the count formula
  return {a.labels.k, g.n};
}

IceQuiver dual_quiver(const PlabicGraph &g) {
  for (auto &[a, b] : g.edges)
    if (g.nodes.at(a) == g.nodes.at(b))
      fail("dual quiver needs bicolored edges");
  auto a = analyze(g);
  IceQuiver q;
  q.vertex_count = a.labels.face_count;
  q.frozen = a.labels.is_boundary;
  for (int i = 0; i < a.item_count; ++i) {
    const Item &it = a.items[i];
    int din = 2 * i, dout = 2 * i + 1;  // half: into node / out; edge: a->b / b->a
    bool head_black;
    if (it.kind == Item::half) {
      head_black = g.nodes.at(g.half.at(it.id)) == Color::black;
    } else {
      head_black = g.nodes.at(g.edges[it.id].second) == Color::black;
    }
    // arrow from the face left of the white->black dart to the face left of
    // the black->white dart
    int wb = head_black ? din : dout;
    int bw = wb ^ 1;
    q.arrows.push_back({a.face_of_dart[wb], a.face_of_dart[bw], it});
  }
  return q;
}

PlabicGraph opposite(const PlabicGraph &g) {
  PlabicGraph o = g;
  for (auto &[v, c] : o.nodes)
    c = (c == Color::black) ? Color::white : Color::black;
  return o;
}

// ---------------------------------------------------------------------------
// components

ComponentsResult components(const PlabicGraph &g) {
  {
    std::vector<Violation> viol;
    check_well_formed(g, &viol);
    if (!viol.empty()) fail("invalid plabic graph: " + viol.front().detail);
  }
  // connected components of the internal graph
  std::map<int, int> comp;
  int comp_count = 0;
  for (auto &[start, c] : g.nodes) {
    (void)c;
    if (comp.count(start)) continue;
    int id = comp_count++;
    std::deque<int> queue{start};
    comp[start] = id;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (auto &it : g.embed.at(v))
        if (it.kind == Item::edge) {
          int u = g.edge_end(it, v);
          if (!comp.count(u)) {
            comp[u] = id;
            queue.push_back(u);
          }
        }
    }
  }
  std::vector<std::vector<int>> labels_of(comp_count);
  for (int p = 1; p <= g.n; ++p) labels_of[comp[g.half.at(p)]].push_back(p);

  // order: component containing label 1 first, then by least label
  std::vector<int> order(comp_count);
  for (int i = 0; i < comp_count; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    bool ox = std::find(labels_of[x].begin(), labels_of[x].end(), 1) != labels_of[x].end();
    bool oy = std::find(labels_of[y].begin(), labels_of[y].end(), 1) != labels_of[y].end();
    if (ox != oy) return ox;
    return labels_of[x].front() < labels_of[y].front();
  });

  ComponentsResult res;
  for (int ci : order) {
    auto &labels = labels_of[ci];
    if (labels.empty()) fail("component without boundary labels");
    Component part;
    part.labels = labels;
    std::map<int, int> relab;
    for (int i = 0; i < (int)labels.size(); ++i) relab[labels[i]] = i + 1;
    std::vector<int> keep;
    for (auto &[v, c] : comp)
      if (c == ci) keep.push_back(v);
    std::sort(keep.begin(), keep.end());
    std::map<int, int> node_map;
    for (int i = 0; i < (int)keep.size(); ++i) {
      node_map[keep[i]] = i + 1;
      part.node_of.push_back(keep[i]);
    }
    PlabicGraph h;
    h.n = (int)labels.size();
    for (int v : keep) h.nodes[node_map[v]] = g.nodes.at(v);
    for (int p : labels) h.half[relab[p]] = node_map[g.half.at(p)];
    // old edge instance -> new instance, consistently at both endpoints
    std::vector<int> inst_map(g.edges.size(), -1);
    std::vector<std::pair<int, int>> new_edges;
    for (int j = 0; j < (int)g.edges.size(); ++j) {
      auto [x, y] = g.edges[j];
      if (!node_map.count(x)) continue;
      int nx = node_map[x], ny = node_map[y];
      new_edges.emplace_back(std::min(nx, ny), std::max(nx, ny));
    }
    std::stable_sort(new_edges.begin(), new_edges.end());
    // node_map is increasing, so sorted old pairs map to sorted new pairs and
    // the relative order of parallel instances is preserved
    {
      int idx = 0;
      for (int j = 0; j < (int)g.edges.size(); ++j) {
        if (!node_map.count(g.edges[j].first)) continue;
        inst_map[j] = idx++;
      }
    }
    h.edges = new_edges;
    for (int v : keep) {
      std::vector<Item> lst;
      for (auto &it : g.embed.at(v))
        lst.push_back(it.kind == Item::half ? Item{Item::half, relab[it.id]}
                                            : Item{Item::edge, inst_map[it.id]});
      h.embed[node_map[v]] = std::move(lst);
    }
    part.graph = std::move(h);
    res.parts.push_back(std::move(part));
  }

  // shared boundary face of the top split: the gap just before the least
  // label of the chosen interval component
  if (comp_count >= 2) {
    auto is_interval = [&](const std::vector<int> &ls) {
      // contiguous cyclically, not containing 1 (so contiguous linearly)
      if (std::find(ls.begin(), ls.end(), 1) != ls.end()) return false;
      for (size_t i = 0; i + 1 < ls.size(); ++i)
        if (ls[i + 1] != ls[i] + 1) return false;
      return true;
    };
    int best = -1;
    for (auto &part : res.parts)
      if (is_interval(part.labels) && (best < 0 || part.labels.front() < best))
        best = part.labels.front();
    if (best < 0) fail("no interval component avoiding label 1");
    res.star_gap = prev_label(best, g.n);
  }
  return res;
}

// ---------------------------------------------------------------------------
// subset helpers

Subset permute_subset(const std::vector<int> &perm, const Subset &s) {
  Subset out;
  for (int i : s) out.push_back(perm.at(i));
  std::sort(out.begin(), out.end());
  return out;
}

Subset complement_subset(int n, const Subset &s) {
  Subset out;
  for (int i = 1; i <= n; ++i)
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  return out;
}

std::string subset_str(const Subset &s) {
  std::string out;
  bool compact = s.empty() || s.back() <= 9;
  for (size_t i = 0; i < s.size(); ++i) {
    if (!compact && i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

}  // namespace plabic
}  // namespace positroid

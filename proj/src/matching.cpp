#include "positroid/matching.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace positroid {
namespace matching {

namespace {

// canonical item order (halves by boundary point, then edges by index) and
// the incident item indices per internal node
struct Incidence {
  std::vector<Item> items;
  std::vector<int> node_ids;               // internal nodes, ascending
  std::map<int, std::vector<int>> at_node;  // node id -> item indices
};

Incidence incidence(const PlabicGraph &g) {
  Incidence inc;
  for (const auto &[p, v] : g.half) inc.items.push_back({Item::half, p});
  for (int e = 0; e < (int)g.edges.size(); ++e)
    inc.items.push_back({Item::edge, e});
  for (const auto &[v, c] : g.nodes) {
    inc.node_ids.push_back(v);
    inc.at_node[v];
  }
  for (int i = 0; i < (int)inc.items.size(); ++i) {
    const Item &it = inc.items[i];
    if (it.kind == Item::half) {
      inc.at_node[g.half_node(it.id)].push_back(i);
    } else {
      auto [a, b] = g.edges[it.id];
      inc.at_node[a].push_back(i);
      inc.at_node[b].push_back(i);
    }
  }
  return inc;
}

void extend_matchings(const Incidence &inc, const PlabicGraph &g,
                      std::map<int, int> &cover, std::vector<Item> &chosen,
                      std::vector<PerfectMatching> &out) {
  int pick = -1;
  for (int v : inc.node_ids) {
    if (cover.at(v) == 0) {
      pick = v;
      break;
    }
  }
  if (pick < 0) {
    PerfectMatching mu = chosen;
    std::sort(mu.begin(), mu.end());
    out.push_back(std::move(mu));
    return;
  }
  for (int i : inc.at_node.at(pick)) {
    const Item &it = inc.items[i];
    int other = it.kind == Item::edge ? g.edge_end(it, pick) : -1;
    if (other >= 0 && cover.at(other) != 0) continue;
    cover[pick]++;
    if (other >= 0) cover[other]++;
    chosen.push_back(it);
    extend_matchings(inc, g, cover, chosen, out);
    chosen.pop_back();
    cover[pick]--;
    if (other >= 0) cover[other]--;
  }
}

}  // namespace

std::vector<PerfectMatching> enumerate_matchings(const PlabicGraph &g) {
  Incidence inc = incidence(g);
  std::map<int, int> cover;
  for (int v : inc.node_ids) cover[v] = 0;
  std::vector<Item> chosen;
  std::vector<PerfectMatching> out;
  extend_matchings(inc, g, cover, chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

Subset boundary_value(const PlabicGraph &g, const PerfectMatching &mu) {
  std::set<Item> in(mu.begin(), mu.end());
  Subset sub;
  for (const auto &[p, v] : g.half) {
    bool matched = in.count({Item::half, p}) != 0;
    bool white = g.nodes.at(v) == plabic::Color::white;
    if (matched == white) sub.push_back(p);
  }
  return sub;
}

std::set<Subset> positroid(const PlabicGraph &g) {
  std::set<Subset> values;
  for (const PerfectMatching &mu : enumerate_matchings(g))
    values.insert(boundary_value(g, mu));
  return values;
}

namespace {

// dart of item c pointing into node v
int dart_into(const Analysis &a, int c, int v) {
  const Item &it = a.items[c];
  if (it.kind == Item::half) return 2 * c;
  return a.graph.edges[it.id].second == v ? 2 * c : 2 * c + 1;
}

// dart of item c pointing from its white endpoint to its black one; for a
// half-edge the boundary point stands in for the missing endpoint
int white_to_black_dart(const Analysis &a, int c) {
  const Item &it = a.items[c];
  int head;
  if (it.kind == Item::half) {
    head = a.graph.half_node(it.id);
  } else {
    head = a.graph.edges[it.id].second;
  }
  bool head_black = a.graph.nodes.at(head) == plabic::Color::black;
  return head_black ? 2 * c : 2 * c + 1;
}

// items strictly beyond dart d along its strand (forwards or backwards)
void mark_strand_tail(const Analysis &a, int d, Direction dir,
                      std::vector<char> &cut) {
  const plabic::Strand &s = a.strands[a.strand_of_dart[d] - 1];
  int pos = a.pos_on_strand[d];
  int lo = dir == Direction::downstream ? pos + 1 : 0;
  int hi = dir == Direction::downstream ? (int)s.trace.size() : pos;
  for (int q = lo; q < hi; ++q) cut[a.item_index(s.trace[q])] = 1;
}

// can `target` be reached from `start` in the face-adjacency graph after
// deleting the cut items?
bool face_reachable(const Analysis &a, int start, int target,
                    const std::vector<char> &cut) {
  if (start == target) return true;
  std::vector<char> seen(a.labels.face_count, 0);
  seen[start] = 1;
  std::vector<int> queue = {start};
  for (size_t q = 0; q < queue.size(); ++q) {
    int f = queue[q];
    for (int c = 0; c < a.item_count; ++c) {
      if (cut[c]) continue;
      int f0 = a.face_of_dart[2 * c], f1 = a.face_of_dart[2 * c + 1];
      int g = f0 == f ? f1 : (f1 == f ? f0 : -1);
      if (g < 0 || seen[g]) continue;
      if (g == target) return true;
      seen[g] = 1;
      queue.push_back(g);
    }
  }
  return false;
}

void certify_matching(const Analysis &a, const PerfectMatching &mu, int face,
                      Direction dir) {
  std::map<int, int> cover;
  for (const auto &[v, c] : a.graph.nodes) cover[v] = 0;
  for (const Item &it : mu) {
    if (it.kind == Item::half) {
      cover[a.graph.half_node(it.id)]++;
    } else {
      cover[a.graph.edges[it.id].first]++;
      cover[a.graph.edges[it.id].second]++;
    }
  }
  for (const auto &[v, c] : cover) {
    if (c != 1)
      throw std::runtime_error("wedge matching: node " + std::to_string(v) +
                               " covered " + std::to_string(c) + " times");
  }
  const Subset &want = dir == Direction::downstream
                           ? a.labels.src_label[face]
                           : a.labels.tgt_label[face];
  if (boundary_value(a.graph, mu) != want)
    throw std::runtime_error("wedge matching: boundary value mismatch at face " +
                             std::to_string(face));
}

}  // namespace

PerfectMatching ms_matching(const Analysis &a, int face, Direction dir) {
  assert(face >= 0 && face < a.labels.face_count);
  PerfectMatching mu;
  for (int c = 0; c < a.item_count; ++c) {
    int wb = white_to_black_dart(a, c), bw = wb ^ 1;
    std::vector<char> cut(a.item_count, 0);
    cut[c] = 1;
    mark_strand_tail(a, wb, dir, cut);
    mark_strand_tail(a, bw, dir, cut);
    int start = dir == Direction::downstream ? a.face_of_dart[bw]
                                             : a.face_of_dart[wb];
    if (face_reachable(a, start, face, cut)) mu.push_back(a.items[c]);
  }
  std::sort(mu.begin(), mu.end());
  certify_matching(a, mu, face, dir);
  return mu;
}

PerfectMatching ms_matching(const PlabicGraph &g, int face, Direction dir) {
  return ms_matching(plabic::analyze(g), face, dir);
}

StableKClass stable_unit(const Analysis &a, int face) {
  StableKClass cls;
  cls.coeffs.assign(a.labels.face_count, 0);
  if (!a.labels.is_boundary[face]) cls.coeffs[face] = 1;
  return cls;
}

namespace {

// add the interior faces at the corners around v, skipping the two corners
// flanking item index gamma, into acc
void add_far_corners(const Analysis &a, int v, int gamma,
                     std::vector<int> &acc) {
  const std::vector<Item> &rot = a.graph.embed.at(v);
  int d = (int)rot.size();
  int at = -1;
  for (int i = 0; i < d; ++i)
    if (a.item_index(rot[i]) == gamma) at = i;
  assert(at >= 0);
  for (int i = 0; i < d; ++i) {
    if (i == at || i == (at + d - 1) % d) continue;
    int f = a.face_of_dart[dart_into(a, a.item_index(rot[i]), v)];
    if (!a.labels.is_boundary[f]) acc[f]++;
  }
}

std::vector<int> matching_weight(const Analysis &a, const PerfectMatching &mu,
                                 plabic::Color side) {
  std::vector<int> w(a.labels.face_count, 0);
  for (const Item &it : mu) {
    int v = -1;
    if (it.kind == Item::half) {
      int u = a.graph.half_node(it.id);
      if (a.graph.nodes.at(u) == side) v = u;
    } else {
      auto [x, y] = a.graph.edges[it.id];
      v = a.graph.nodes.at(x) == side ? x : y;
      if (a.graph.nodes.at(v) != side) v = -1;
    }
    if (v >= 0) add_far_corners(a, v, a.item_index(it), w);
  }
  return w;
}

}  // namespace

StableKClass stable_class(const Analysis &a, const PerfectMatching &mu) {
  std::vector<int> black = matching_weight(a, mu, plabic::Color::black);
  std::vector<int> white = matching_weight(a, mu, plabic::Color::white);
  StableKClass cls;
  cls.coeffs.assign(a.labels.face_count, 0);
  for (int f = 0; f < a.labels.face_count; ++f) {
    if (a.labels.is_boundary[f]) continue;
    cls.coeffs[f] = 1 - black[f];
    if (black[f] != white[f])
      throw std::runtime_error(
          "stable class: black and white corner weights disagree at face " +
          std::to_string(f));
  }
  return cls;
}

StableKClass stable_class(const PlabicGraph &g, const PerfectMatching &mu) {
  return stable_class(plabic::analyze(g), mu);
}

exact::LaurentPoly partition_function(const PlabicGraph &g, const Subset &I,
                                      const exact::RegistryPtr &reg,
                                      const std::map<Item, int> &weight_var) {
  exact::LaurentPoly total(reg);
  for (const PerfectMatching &mu : enumerate_matchings(g)) {
    if (boundary_value(g, mu) != I) continue;
    exact::Expo e;
    for (const Item &it : mu) {
      int var = weight_var.at(it);
      if ((int)e.size() <= var) e.resize(var + 1, 0);
      e[var] += 1;
    }
    total.add_term(e, exact::Rat(1));
  }
  return total;
}

}  // namespace matching
}  // namespace positroid

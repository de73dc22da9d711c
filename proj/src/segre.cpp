#include "positroid/segre.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace positroid {
namespace segre {

namespace {

using cell::CellModel;
using cell::Labelling;
using exact::LaurentPoly;
using exact::RationalFn;
using quasi::FrozenMonomial;
using quasi::MatchEntry;
using quasi::QuasiReport;

[[noreturn]] void fail(const std::string &msg) {
  throw std::runtime_error(msg);
}

bool poly_equal(const LaurentPoly &a, const LaurentPoly &b) {
  return (a - b).is_zero();
}

cluster::Seed replay(const cluster::Seed &s0, const std::vector<int> &word) {
  cluster::Seed s = s0;
  for (int j : word) s = cluster::mutate(s, j);
  return s;
}

std::vector<int> mutable_sorted(const plabic::IceQuiver &q) {
  std::vector<int> out;
  for (int v = 0; v < q.vertex_count; ++v)
    if (!q.frozen[v]) out.push_back(v);
  return out;
}

Subset intersect(const Subset &I, const std::vector<int> &labels) {
  Subset out;
  for (int i : I)
    if (std::binary_search(labels.begin(), labels.end(), i)) out.push_back(i);
  return out;
}

// induced subgraph on a union of internal components, relabelled to
// 1..|labels| in ascending order (same normal form as plabic::components)
plabic::Component restrict_graph(const plabic::PlabicGraph &g,
                                 const std::vector<int> &keep,
                                 const std::vector<int> &labels) {
  plabic::Component part;
  part.labels = labels;
  part.node_of = keep;
  std::map<int, int> relab;
  for (int i = 0; i < (int)labels.size(); ++i) relab[labels[i]] = i + 1;
  std::map<int, int> node_map;
  for (int i = 0; i < (int)keep.size(); ++i) node_map[keep[i]] = i + 1;

  plabic::PlabicGraph h;
  h.n = (int)labels.size();
  for (int v : keep) h.nodes[node_map.at(v)] = g.nodes.at(v);
  for (int p : labels) h.half[relab.at(p)] = node_map.at(g.half.at(p));
  // node_map is increasing on the sorted keep list, so kept edge pairs stay
  // sorted and the relative order of parallel instances is preserved
  std::vector<int> inst_map(g.edges.size(), -1);
  int idx = 0;
  for (int j = 0; j < (int)g.edges.size(); ++j) {
    auto [x, y] = g.edges[j];
    if (!node_map.count(x)) continue;
    if (!node_map.count(y)) fail("edge leaves the kept components");
    h.edges.emplace_back(std::min(node_map[x], node_map[y]),
                         std::max(node_map[x], node_map[y]));
    inst_map[j] = idx++;
  }
  assert(std::is_sorted(h.edges.begin(), h.edges.end()));
  for (int v : keep) {
    std::vector<plabic::Item> lst;
    for (const plabic::Item &it : g.embed.at(v))
      lst.push_back(it.kind == plabic::Item::half
                        ? plabic::Item{plabic::Item::half, relab.at(it.id)}
                        : plabic::Item{plabic::Item::edge, inst_map[it.id]});
    h.embed[node_map[v]] = std::move(lst);
  }
  part.graph = std::move(h);
  return part;
}

std::vector<int> invert_face_map(const std::vector<int> &face_to_full,
                                 int full_count) {
  std::vector<int> inv(full_count, -1);
  for (int f = 0; f < (int)face_to_full.size(); ++f)
    inv[face_to_full[f]] = f;
  return inv;
}

std::string mono_str(const FrozenMonomial &mono, const CellModel &m) {
  std::string out;
  for (int f = 0; f < (int)mono.exponents.size(); ++f) {
    if (mono.exponents[f] == 0) continue;
    if (!out.empty()) out += " ";
    out += "D" + plabic::subset_str(m.analysis.labels.src_label[f]);
    if (mono.exponents[f] != 1)
      out += "^" + std::to_string(mono.exponents[f]);
  }
  return out.empty() ? "1" : out;
}

int count_arrows(const plabic::IceQuiver &q, int from, int to) {
  int c = 0;
  for (const auto &ar : q.arrows) c += (ar.from == from && ar.to == to);
  return c;
}

}  // namespace

SplitData make_split(const plabic::Analysis &a) {
  plabic::ComponentsResult comps = plabic::components(a.graph);
  if (comps.parts.size() < 2)
    throw std::invalid_argument("graph is connected, nothing to split");

  SplitData split;
  split.star_face = a.labels.gap_face[comps.star_gap];

  // the split-off interval starts right after the star gap
  int first = comps.star_gap % a.n + 1;
  const plabic::Component *chosen = nullptr;
  for (const plabic::Component &part : comps.parts)
    if (part.labels.front() == first) chosen = &part;
  if (!chosen) fail("no component starts at the split gap");
  for (size_t i = 0; i + 1 < chosen->labels.size(); ++i)
    assert(chosen->labels[i + 1] == chosen->labels[i] + 1);

  std::vector<int> keep, labels;
  for (const plabic::Component &part : comps.parts) {
    if (&part == chosen) continue;
    keep.insert(keep.end(), part.node_of.begin(), part.node_of.end());
    labels.insert(labels.end(), part.labels.begin(), part.labels.end());
  }
  std::sort(keep.begin(), keep.end());
  std::sort(labels.begin(), labels.end());
  assert(!labels.empty() && labels.front() == 1);

  split.components.push_back(restrict_graph(a.graph, keep, labels));
  split.components.push_back(*chosen);
  for (int l : labels)
    if (l > chosen->labels.back()) split.s1_plus.push_back(l);

  auto [k1, n1] = plabic::graph_type(split.components[0].graph);
  auto [k2, n2] = plabic::graph_type(split.components[1].graph);
  (void)n1;
  (void)n2;
  split.k_parts = {k1, k2};
  if (k1 + k2 != a.labels.k) fail("part ranks do not add up to the type");
  return split;
}

int to_part_label(const plabic::Component &part, int ambient) {
  auto it =
      std::lower_bound(part.labels.begin(), part.labels.end(), ambient);
  if (it == part.labels.end() || *it != ambient)
    throw std::invalid_argument("label " + std::to_string(ambient) +
                                " is not in the part");
  return (int)(it - part.labels.begin()) + 1;
}

int to_ambient_label(const plabic::Component &part, int local) {
  if (local < 1 || local > (int)part.labels.size())
    throw std::invalid_argument("local label " + std::to_string(local) +
                                " is out of range");
  return part.labels[local - 1];
}

Subset to_part(const plabic::Component &part, const Subset &ambient) {
  Subset out;
  for (int i : ambient) out.push_back(to_part_label(part, i));
  return out;
}

Subset to_ambient(const plabic::Component &part, const Subset &local) {
  Subset out;
  for (int i : local) out.push_back(to_ambient_label(part, i));
  return out;
}

int segre_sign(const Subset &I, const SplitData &split) {
  int above = (int)intersect(I, split.s1_plus).size();
  return (split.k_parts.second * above) % 2 ? -1 : 1;
}

Decomposition segre_decompose(const Subset &I, const SplitData &split) {
  Decomposition d;
  d.part1 = intersect(I, split.components[0].labels);
  d.part2 = intersect(I, split.components[1].labels);
  if ((int)(d.part1.size() + d.part2.size()) != (int)I.size())
    throw std::invalid_argument("subset leaves the boundary labels");
  if ((int)d.part1.size() != split.k_parts.first ||
      (int)d.part2.size() != split.k_parts.second)
    return d;  // sign stays 0: the coordinate vanishes on the split locus
  d.sign = segre_sign(I, split);
  return d;
}

std::vector<int> face_side(const plabic::Analysis &a, const SplitData &split) {
  const Subset &star = a.labels.src_label[split.star_face];
  Subset star1 = intersect(star, split.components[0].labels);
  Subset star2 = intersect(star, split.components[1].labels);

  std::vector<int> side(a.labels.face_count, -2);
  int stars = 0;
  for (int f = 0; f < a.labels.face_count; ++f) {
    const Subset &lab = a.labels.src_label[f];
    bool pinned2 = intersect(lab, split.components[1].labels) == star2;
    bool pinned1 = intersect(lab, split.components[0].labels) == star1;
    if (pinned1 && pinned2) {
      side[f] = -1;
      ++stars;
    } else if (pinned2) {
      side[f] = 0;
    } else if (pinned1) {
      side[f] = 1;
    } else {
      fail("face label " + plabic::subset_str(lab) + " fits neither side");
    }
  }
  if (stars != 1 || side[split.star_face] != -1)
    fail("the star face is not unique");
  return side;
}

std::vector<int> face_map(const plabic::Analysis &ambient,
                          const plabic::Analysis &part_analysis,
                          const SplitData &split, int part) {
  const plabic::Component &comp = split.components[part];
  std::vector<int> side = face_side(ambient, split);

  std::map<Subset, int> by_label;
  for (int f = 0; f < part_analysis.labels.face_count; ++f) {
    Subset amb = to_ambient(comp, part_analysis.labels.src_label[f]);
    if (!by_label.emplace(amb, f).second) fail("duplicate part face label");
  }

  std::vector<int> out(part_analysis.labels.face_count, -1);
  int used = 0;
  for (int f = 0; f < ambient.labels.face_count; ++f) {
    if (side[f] != part && side[f] != -1) continue;
    auto it = by_label.find(intersect(ambient.labels.src_label[f],
                                      comp.labels));
    if (it == by_label.end())
      fail("ambient face " +
           plabic::subset_str(ambient.labels.src_label[f]) +
           " has no partner in the part");
    if (out[it->second] != -1) fail("two ambient faces share a part face");
    out[it->second] = f;
    ++used;
    // boundary flags and target labels must agree through the map
    if (part_analysis.labels.is_boundary[it->second] !=
        ambient.labels.is_boundary[f])
      fail("boundary flag mismatch through the face map");
    if (to_ambient(comp, part_analysis.labels.tgt_label[it->second]) !=
        intersect(ambient.labels.tgt_label[f], comp.labels))
      fail("target labels do not restrict through the face map");
  }
  if (used != part_analysis.labels.face_count)
    fail("some part faces are unmatched");
  return out;
}

SplitContext make_context(const plabic::PlabicGraph &g, int seed_bound) {
  SplitContext ctx;
  ctx.model = cell::build_model(g);
  ctx.seed = cluster::initial_seed(ctx.model.analysis);
  ctx.closure = cluster::enumerate_variables(ctx.seed, seed_bound);
  ctx.split = make_split(ctx.model.analysis);
  ctx.side = face_side(ctx.model.analysis, ctx.split);
  for (int i = 0; i < 2; ++i) {
    PartContext pc;
    pc.model = cell::build_model(ctx.split.components[i].graph);
    pc.seed = cluster::initial_seed(pc.model.analysis);
    pc.closure = cluster::enumerate_variables(pc.seed, seed_bound);
    pc.report = verify_by_parts(ctx.split.components[i].graph, seed_bound);
    pc.face_to_full =
        face_map(ctx.model.analysis, pc.model.analysis, ctx.split, i);
    ctx.parts.push_back(std::move(pc));
  }
  return ctx;
}

MatchEntry compose_identity(const LaurentPoly &x_tgt,
                            const SplitContext &ctx) {
  const CellModel &m = ctx.model;

  // locate the variable in the ambient closure
  int vertex = -1;
  const cluster::Seed *host = nullptr;
  for (const cluster::Seed &s : ctx.closure.seeds) {
    for (int v = 0; v < s.quiver.vertex_count && vertex < 0; ++v)
      if (!s.quiver.frozen[v] && poly_equal(s.vars[v], x_tgt)) {
        vertex = v;
        host = &s;
      }
    if (host) break;
  }
  if (!host)
    throw std::invalid_argument("not a cluster variable of the closure");

  int part = ctx.side[vertex];
  assert(part == 0 || part == 1);
  const PartContext &mine = ctx.parts[part];
  const PartContext &other = ctx.parts[1 - part];
  std::vector<int> full_to_part =
      invert_face_map(mine.face_to_full, m.analysis.labels.face_count);

  // mutations on the other side commute away without moving the variable
  std::vector<int> word;
  for (int j : host->provenance)
    if (ctx.side[j] == part) word.push_back(j);
  cluster::Seed probe = replay(ctx.seed, word);
  if (!poly_equal(probe.vars[vertex], x_tgt))
    fail("cross-part mutations do not commute away");

  // the same word inside the part picks out the part's own variable
  std::vector<int> word_loc;
  for (int j : word) word_loc.push_back(full_to_part[j]);
  cluster::Seed probe_loc = replay(mine.seed, word_loc);
  const LaurentPoly &x_loc = probe_loc.vars[full_to_part[vertex]];

  const MatchEntry *entry = nullptr;
  for (const MatchEntry &e : mine.report.variable_map)
    if (poly_equal(e.target, x_loc)) {
      entry = &e;
      break;
    }
  if (!entry) fail("the part dictionary has no entry for the variable");

  // lift the part's source variable along its own mutation word
  int src_vertex = -1;
  const cluster::Seed *src_host = nullptr;
  for (const cluster::Seed &s : mine.closure.seeds) {
    for (int v = 0; v < s.quiver.vertex_count && src_vertex < 0; ++v)
      if (!s.quiver.frozen[v] && poly_equal(s.vars[v], entry->source)) {
        src_vertex = v;
        src_host = &s;
      }
    if (src_host) break;
  }
  if (!src_host) fail("the part source variable is outside the part closure");
  std::vector<int> src_word;
  for (int j : src_host->provenance)
    src_word.push_back(mine.face_to_full[j]);
  cluster::Seed lifted = replay(ctx.seed, src_word);
  LaurentPoly x_src = lifted.vars[mine.face_to_full[src_vertex]];

  // degree of the variable: exponent sum of any term
  std::vector<cluster::DegVec> ones(ctx.seed.quiver.vertex_count,
                                    cluster::DegVec{1});
  std::optional<cluster::DegVec> dv = cluster::multidegree(x_tgt, ones);
  if (!dv) fail("the variable is not homogeneous");
  int d = (*dv)[0];

  // monomial p * q^d / star^d over ambient faces: p from the part entry, q
  // the other part's frozen expression of the star's target label
  FrozenMonomial mono;
  mono.exponents.assign(m.analysis.labels.face_count, 0);
  for (int f = 0; f < (int)entry->monomial.exponents.size(); ++f)
    mono.exponents[mine.face_to_full[f]] += entry->monomial.exponents[f];

  const plabic::Component &comp_other = ctx.split.components[1 - part];
  Subset key = to_part(comp_other,
                       intersect(m.analysis.labels.tgt_label[ctx.split.star_face],
                                 comp_other.labels));
  auto qit = other.report.frozen_table.find(key);
  if (qit == other.report.frozen_table.end())
    fail("the other part has no frozen entry for the star label");
  for (int f = 0; f < (int)qit->second.exponents.size(); ++f)
    mono.exponents[other.face_to_full[f]] += d * qit->second.exponents[f];
  mono.exponents[ctx.split.star_face] -= d;

  RationalFn lhs = cell::expand(RationalFn(x_tgt), Labelling::tgt, m);
  RationalFn rhs = cell::expand(RationalFn(x_src), Labelling::src, m) *
                   mono.value(Labelling::src, m);
  if (!cell::equal_on_cell(lhs, rhs))
    fail("composed identity fails: target " + x_tgt.str() + " vs source " +
         x_src.str() + " times " + mono_str(mono, m));

  MatchEntry out;
  out.target = x_tgt;
  out.source = std::move(x_src);
  out.monomial = std::move(mono);
  out.degenerate_lattice = entry->degenerate_lattice;
  return out;
}

QuasiReport verify_by_parts(const plabic::PlabicGraph &g, int seed_bound) {
  if (plabic::components(g).parts.size() == 1)
    return quasi::verify_quasi_coincidence(g, seed_bound);

  SplitContext ctx = make_context(g, seed_bound);
  const CellModel &m = ctx.model;

  QuasiReport report;
  report.complete = ctx.closure.finite_type;
  if (!report.complete)
    report.failures.push_back("mutation closure incomplete at bound " +
                              std::to_string(seed_bound));
  for (int i = 0; i < 2; ++i) {
    report.complete = report.complete && ctx.parts[i].report.complete;
    if (!ctx.parts[i].report.pass)
      report.failures.push_back("part " + std::to_string(i) +
                                " fails its own verification");
  }

  // frozen tables straight on the ambient model
  try {
    report.frozen_table =
        quasi::frozen_transition(m, Labelling::tgt, Labelling::src);
    report.frozen_table_back =
        quasi::frozen_transition(m, Labelling::src, Labelling::tgt);
    for (const std::string &line : quasi::transition_checks(
             m, report.frozen_table, report.frozen_table_back))
      report.failures.push_back(line);
  } catch (const std::exception &e) {
    report.failures.push_back(std::string("frozen transition: ") + e.what());
  }

  // variable dictionary assembled from the part dictionaries
  if (report.complete) {
    for (const LaurentPoly &x : ctx.closure.variables) {
      try {
        report.variable_map.push_back(compose_identity(x, ctx));
      } catch (const std::exception &e) {
        report.failures.push_back(std::string("variable compose: ") +
                                  e.what());
      }
    }
    for (const std::string &line :
         quasi::dictionary_checks(ctx.closure, report.variable_map))
      report.failures.push_back(line);
  }

  // witness: concatenate the part witness words, map their vertex images
  // into the ambient quiver, and recheck everything on the ambient model
  if (report.complete && report.failures.empty()) {
    std::vector<int> word;
    for (int i = 0; i < 2; ++i)
      for (int j : ctx.parts[i].report.yhat_witness.word)
        word.push_back(ctx.parts[i].face_to_full[j]);

    std::vector<int> mut = mutable_sorted(ctx.seed.quiver);
    std::vector<int> sigma(mut.size(), -1);
    bool mapped = true;
    for (size_t t = 0; t < mut.size() && mapped; ++t) {
      int i = ctx.side[mut[t]];
      const PartContext &pc = ctx.parts[i];
      std::vector<int> inv =
          invert_face_map(pc.face_to_full, m.analysis.labels.face_count);
      std::vector<int> mut_loc = mutable_sorted(pc.seed.quiver);
      auto pos = std::find(mut_loc.begin(), mut_loc.end(), inv[mut[t]]);
      const std::vector<int> &vmap = pc.report.yhat_witness.vertex_map;
      if (pos == mut_loc.end() ||
          (size_t)(pos - mut_loc.begin()) >= vmap.size()) {
        mapped = false;
        break;
      }
      sigma[t] = pc.face_to_full[vmap[pos - mut_loc.begin()]];
    }

    if (!mapped) {
      report.failures.push_back("part witnesses do not cover every vertex");
    } else {
      cluster::Seed witness = replay(ctx.seed, word);
      bool all = true;
      for (size_t t = 0; t < mut.size() && all; ++t)
        all = cell::equal_on_cell(
            cell::expand(cluster::y_hat(ctx.seed, mut[t]), Labelling::tgt, m),
            cell::expand(cluster::y_hat(witness, sigma[t]), Labelling::src,
                         m));
      for (size_t t1 = 0; t1 < mut.size() && all; ++t1)
        for (size_t t2 = 0; t2 < mut.size() && all; ++t2)
          all = count_arrows(ctx.seed.quiver, mut[t1], mut[t2]) ==
                count_arrows(witness.quiver, sigma[t1], sigma[t2]);
      if (all) {
        report.yhat_witness.word = std::move(word);
        report.yhat_witness.vertex_map = sigma;
        report.stable_iso = std::move(sigma);
      } else {
        report.failures.push_back(
            "the combined witness fails the y-hat identities");
      }
    }
  }

  report.pass = report.complete && report.failures.empty();
  return report;
}

}  // namespace segre
}  // namespace positroid

#include "positroid/cluster.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace positroid {
namespace cluster {

namespace {

using exact::LaurentPoly;
using exact::RationalFn;
using Counts = std::vector<std::vector<int>>;

bool frozen_pair(const IceQuiver &q, int u, int v) {
  return q.frozen[u] && q.frozen[v];
}

// arrow multiplicities of the non-frozen-frozen part
Counts arrow_counts(const IceQuiver &q) {
  Counts c(q.vertex_count, std::vector<int>(q.vertex_count, 0));
  for (const auto &a : q.arrows)
    if (!frozen_pair(q, a.from, a.to)) c[a.from][a.to]++;
  return c;
}

void rebuild_arrows(IceQuiver &q, const std::vector<IceQuiver::Arrow> &keep,
                    const Counts &c) {
  q.arrows = keep;
  for (int u = 0; u < q.vertex_count; ++u)
    for (int v = 0; v < q.vertex_count; ++v)
      for (int t = 0; t < c[u][v]; ++t) q.arrows.push_back({u, v, {}});
}

bool poly_less(const LaurentPoly &a, const LaurentPoly &b) {
  return a.terms() < b.terms();
}

std::vector<std::map<exact::Expo, exact::Rat>> mutable_var_key(const Seed &s) {
  std::vector<std::map<exact::Expo, exact::Rat>> key;
  for (int v = 0; v < s.quiver.vertex_count; ++v)
    if (!s.quiver.frozen[v]) key.push_back(s.vars[v].terms());
  std::sort(key.begin(), key.end());
  return key;
}

bool seeds_equal(const Seed &a, const Seed &b);

}  // namespace

int reduce_two_cycles(IceQuiver &q) {
  Counts c = arrow_counts(q);
  std::vector<IceQuiver::Arrow> keep;
  for (const auto &a : q.arrows)
    if (frozen_pair(q, a.from, a.to)) keep.push_back(a);
  int removed = 0;
  // cancel u->v against v->u, preferring to keep original arrow records
  Counts drop(q.vertex_count, std::vector<int>(q.vertex_count, 0));
  for (int u = 0; u < q.vertex_count; ++u)
    for (int v = u + 1; v < q.vertex_count; ++v) {
      int m = std::min(c[u][v], c[v][u]);
      drop[u][v] = drop[v][u] = m;
      removed += m;
    }
  for (const auto &a : q.arrows) {
    if (frozen_pair(q, a.from, a.to)) continue;
    if (drop[a.from][a.to] > 0) {
      drop[a.from][a.to]--;
    } else {
      keep.push_back(a);
    }
  }
  q.arrows = keep;
  return removed;
}

Seed initial_seed(const plabic::Analysis &a) {
  Seed s;
  s.quiver = plabic::dual_quiver(a.graph);
  reduce_two_cycles(s.quiver);
  s.reg = std::make_shared<exact::VarRegistry>();
  for (int v = 0; v < s.quiver.vertex_count; ++v)
    s.reg->intern("x" + std::to_string(v));
  for (int v = 0; v < s.quiver.vertex_count; ++v)
    s.vars.push_back(LaurentPoly::variable(s.reg, v));
  return s;
}

Seed initial_seed(const plabic::PlabicGraph &g) {
  return initial_seed(plabic::analyze(g));
}

Seed mutate(const Seed &s, int j) {
  const IceQuiver &q = s.quiver;
  if (j < 0 || j >= q.vertex_count)
    throw std::invalid_argument("mutation vertex out of range");
  if (q.frozen[j]) throw std::invalid_argument("cannot mutate frozen vertex");

  Counts c = arrow_counts(q);
  for (int u = 0; u < q.vertex_count; ++u)
    for (int v = u + 1; v < q.vertex_count; ++v)
      assert(!(c[u][v] && c[v][u]) && "quiver has uncancelled 2-cycles");

  // exchange binomial before touching the quiver
  LaurentPoly in = LaurentPoly::constant(s.reg, 1);
  LaurentPoly out = LaurentPoly::constant(s.reg, 1);
  for (int i = 0; i < q.vertex_count; ++i) {
    for (int t = 0; t < c[i][j]; ++t) in = in * s.vars[i];
    for (int t = 0; t < c[j][i]; ++t) out = out * s.vars[i];
  }
  LaurentPoly swapped;
  if (!exact::try_divide(in + out, s.vars[j], swapped))
    throw std::runtime_error("exchange is not Laurent at vertex " +
                             std::to_string(j));

  Counts nc = c;
  // compose paths through j
  for (int i = 0; i < q.vertex_count; ++i)
    for (int k = 0; k < q.vertex_count; ++k)
      if (c[i][j] && c[j][k]) nc[i][k] += c[i][j] * c[j][k];
  // reverse at j
  for (int i = 0; i < q.vertex_count; ++i) {
    nc[i][j] = c[j][i];
    nc[j][i] = c[i][j];
  }
  // composites between frozen vertices play no role: drop them
  for (int u = 0; u < q.vertex_count; ++u)
    for (int v = 0; v < q.vertex_count; ++v)
      if (frozen_pair(q, u, v)) nc[u][v] = 0;
  // cancel the 2-cycles created through j
  for (int u = 0; u < q.vertex_count; ++u)
    for (int v = u + 1; v < q.vertex_count; ++v) {
      int m = std::min(nc[u][v], nc[v][u]);
      nc[u][v] -= m;
      nc[v][u] -= m;
    }

  Seed next;
  next.quiver.vertex_count = q.vertex_count;
  next.quiver.frozen = q.frozen;
  std::vector<IceQuiver::Arrow> keep;
  for (const auto &a : q.arrows)
    if (frozen_pair(q, a.from, a.to)) keep.push_back(a);
  rebuild_arrows(next.quiver, keep, nc);
  next.reg = s.reg;
  next.vars = s.vars;
  next.vars[j] = swapped;
  next.provenance = s.provenance;
  next.provenance.push_back(j);
  return next;
}

int b_entry(const IceQuiver &q, int i, int j) {
  int b = 0;
  for (const auto &a : q.arrows) {
    if (a.from == j && a.to == i) ++b;
    if (a.from == i && a.to == j) --b;
  }
  return b;
}

ExchangeMatrix exchange_matrix(const IceQuiver &q) {
  ExchangeMatrix m;
  for (int j = 0; j < q.vertex_count; ++j)
    if (!q.frozen[j]) m.col_vertex.push_back(j);
  m.b.assign(q.vertex_count, std::vector<int>(m.col_vertex.size(), 0));
  for (int i = 0; i < q.vertex_count; ++i)
    for (int col = 0; col < (int)m.col_vertex.size(); ++col)
      m.b[i][col] = b_entry(q, i, m.col_vertex[col]);
  return m;
}

RationalFn y_hat(const Seed &s, int j) {
  if (s.quiver.frozen.at(j))
    throw std::invalid_argument("y_hat needs a mutable vertex");
  RationalFn y = RationalFn::constant(s.reg, 1);
  for (int i = 0; i < s.quiver.vertex_count; ++i) {
    int b = b_entry(s.quiver, i, j);
    if (b != 0) y = y * RationalFn(s.vars[i]).pow(b);
  }
  return y;
}

Closure enumerate_variables(const Seed &s, int bound) {
  Closure out;
  out.seeds.push_back(s);
  out.finite_type = true;
  for (size_t head = 0; head < out.seeds.size(); ++head) {
    for (int j = 0; j < out.seeds[head].quiver.vertex_count; ++j) {
      if (out.seeds[head].quiver.frozen[j]) continue;
      Seed next = mutate(out.seeds[head], j);
      bool seen = false;
      for (const Seed &old : out.seeds)
        if (seeds_equal(old, next)) {
          seen = true;
          break;
        }
      if (seen) continue;
      if ((int)out.seeds.size() >= bound) {
        out.finite_type = false;
        break;
      }
      out.seeds.push_back(std::move(next));
    }
    if (!out.finite_type) break;
  }
  for (const Seed &seed : out.seeds)
    for (int v = 0; v < seed.quiver.vertex_count; ++v)
      if (!seed.quiver.frozen[v]) out.variables.push_back(seed.vars[v]);
  std::sort(out.variables.begin(), out.variables.end(), poly_less);
  out.variables.erase(
      std::unique(out.variables.begin(), out.variables.end()),
      out.variables.end());
  return out;
}

namespace {

struct IsoSearch {
  const Counts &ca, &cb;
  const IceQuiver &qa, &qb;
  bool respect_frozen;
  const std::vector<LaurentPoly> *va = nullptr;  // optional vertex labels
  const std::vector<LaurentPoly> *vb = nullptr;
  std::vector<int> map;   // a vertex -> b vertex or -1
  std::vector<char> used;

  bool extend(int u) {
    if (u == qa.vertex_count) return true;
    for (int v = 0; v < qb.vertex_count; ++v) {
      if (used[v]) continue;
      if (respect_frozen && qa.frozen[u] != qb.frozen[v]) continue;
      if (ca[u][u] != cb[v][v]) continue;
      if (va && (*va)[u] != (*vb)[v]) continue;
      bool fits = true;
      for (int w = 0; w < u && fits; ++w) {
        fits = ca[u][w] == cb[v][map[w]] && ca[w][u] == cb[map[w]][v];
      }
      if (!fits) continue;
      map[u] = v;
      used[v] = 1;
      if (extend(u + 1)) return true;
      used[v] = 0;
      map[u] = -1;
    }
    return false;
  }
};

Counts full_counts(const IceQuiver &q) {
  Counts c(q.vertex_count, std::vector<int>(q.vertex_count, 0));
  for (const auto &a : q.arrows) c[a.from][a.to]++;
  return c;
}

// seed equivalence: one bijection preserving frozen flags, arrow counts,
// and the attached variables (frozen variables stay pinned, so frozen
// vertices can only map to themselves)
bool seeds_equal(const Seed &a, const Seed &b) {
  if (a.quiver.vertex_count != b.quiver.vertex_count) return false;
  if (a.quiver.arrows.size() != b.quiver.arrows.size()) return false;
  if (mutable_var_key(a) != mutable_var_key(b)) return false;
  Counts ca = full_counts(a.quiver), cb = full_counts(b.quiver);
  IsoSearch search{ca,      cb,      a.quiver, b.quiver, true,
                   &a.vars, &b.vars, std::vector<int>(a.quiver.vertex_count, -1),
                   std::vector<char>(a.quiver.vertex_count, 0)};
  return search.extend(0);
}

}  // namespace

std::optional<std::vector<int>> quiver_isomorphic(const IceQuiver &a,
                                                  const IceQuiver &b,
                                                  bool respect_frozen) {
  if (a.vertex_count != b.vertex_count) return std::nullopt;
  if (a.arrows.size() != b.arrows.size()) return std::nullopt;
  if (respect_frozen) {
    int fa = (int)std::count(a.frozen.begin(), a.frozen.end(), true);
    int fb = (int)std::count(b.frozen.begin(), b.frozen.end(), true);
    if (fa != fb) return std::nullopt;
  }
  Counts ca = full_counts(a), cb = full_counts(b);
  IsoSearch search{ca, cb, a, b, respect_frozen, nullptr, nullptr,
                   std::vector<int>(a.vertex_count, -1),
                   std::vector<char>(a.vertex_count, 0)};
  if (search.extend(0)) return search.map;
  return std::nullopt;
}

MutablePart mutable_part(const IceQuiver &q) {
  MutablePart part;
  std::vector<int> newid(q.vertex_count, -1);
  for (int v = 0; v < q.vertex_count; ++v)
    if (!q.frozen[v]) {
      newid[v] = (int)part.vertex_of.size();
      part.vertex_of.push_back(v);
    }
  part.quiver.vertex_count = (int)part.vertex_of.size();
  part.quiver.frozen.assign(part.quiver.vertex_count, false);
  for (const auto &a : q.arrows)
    if (newid[a.from] >= 0 && newid[a.to] >= 0)
      part.quiver.arrows.push_back({newid[a.from], newid[a.to], a.dual});
  return part;
}

std::optional<DegVec> multidegree(const exact::LaurentPoly &p,
                                  const std::vector<DegVec> &assign) {
  if (p.is_zero() || assign.empty()) return std::nullopt;
  size_t n = assign[0].size();
  std::optional<DegVec> deg;
  for (const auto &[e, c] : p.terms()) {
    DegVec d(n, 0);
    for (size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      assert(j < assign.size());
      for (size_t t = 0; t < n; ++t) d[t] += e[j] * assign[j][t];
    }
    if (!deg) {
      deg = d;
    } else if (*deg != d) {
      return std::nullopt;
    }
  }
  return deg;
}

GradingReport grading(const std::vector<DegVec> &assign, const Seed &seed,
                      const std::vector<exact::LaurentPoly> &variables,
                      int k) {
  const IceQuiver &q = seed.quiver;
  if ((int)assign.size() != q.vertex_count)
    throw std::invalid_argument("one degree vector per vertex required");
  size_t n = assign.empty() ? 0 : assign[0].size();
  for (const auto &d : assign)
    if (d.size() != n) throw std::invalid_argument("mixed degree lengths");

  GradingReport report;
  report.balanced = true;
  for (int j = 0; j < q.vertex_count && report.balanced; ++j) {
    if (q.frozen[j]) continue;
    DegVec in(n, 0), out(n, 0);
    for (const auto &a : q.arrows) {
      if (a.to == j)
        for (size_t t = 0; t < n; ++t) in[t] += assign[a.from][t];
      if (a.from == j)
        for (size_t t = 0; t < n; ++t) out[t] += assign[a.to][t];
    }
    if (in != out) {
      report.balanced = false;
      report.offending = j;
    }
  }
  if (!report.balanced) return report;

  report.homogeneous = true;
  for (const auto &var : variables) {
    auto d = multidegree(var, assign);
    if (!d) {
      report.homogeneous = false;
      report.degvec.emplace_back();
      report.deg.emplace_back(0);
      continue;
    }
    int total = 0;
    for (int t : *d) total += t;
    report.degvec.push_back(*d);
    exact::Rat deg(total, k);
    deg.canonicalize();
    report.deg.push_back(deg);
  }
  return report;
}

int deg_subset(const DegVec &d, const plabic::Subset &S) {
  int total = 0;
  for (int i : S) {
    assert(i >= 1 && i <= (int)d.size());
    total += d[i - 1];
  }
  return total;
}

std::string dump(const Seed &s) {
  std::ostringstream out;
  std::vector<std::pair<int, int>> order;
  for (const auto &a : s.quiver.arrows) order.push_back({a.from, a.to});
  std::sort(order.begin(), order.end());
  for (const auto &[from, to] : order)
    out << "arrow " << from << " -> " << to << "\n";
  for (int v = 0; v < s.quiver.vertex_count; ++v)
    out << "var " << v << (s.quiver.frozen[v] ? " frozen " : " mutable ")
        << s.vars[v].str() << "\n";
  return out.str();
}

}  // namespace cluster
}  // namespace positroid

#include "positroid/quasi.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace positroid {
namespace quasi {

namespace {

using cluster::DegVec;
using exact::Int;
using exact::LaurentPoly;
using exact::RationalFn;

std::vector<DegVec> label_assignment(const CellModel &m, Labelling conv) {
  const auto &labels = m.analysis.labels;
  std::vector<DegVec> assign;
  for (int f = 0; f < labels.face_count; ++f) {
    DegVec d(m.n, 0);
    const Subset &lab =
        conv == Labelling::src ? labels.src_label[f] : labels.tgt_label[f];
    for (int i : lab) d[i - 1] = 1;
    assign.push_back(d);
  }
  return assign;
}

const Subset &label_of(const CellModel &m, int face, Labelling conv) {
  return conv == Labelling::src ? m.analysis.labels.src_label[face]
                                : m.analysis.labels.tgt_label[face];
}

std::vector<int> frozen_faces(const CellModel &m) {
  std::vector<int> out;
  for (int f = 0; f < m.analysis.labels.face_count; ++f)
    if (m.analysis.labels.is_boundary[f]) out.push_back(f);
  return out;
}

std::string subset_str(const Subset &s) {
  std::string out;
  for (int i : s) out += std::to_string(i);
  return out;
}

}  // namespace

// All integral solutions of (basis exponents) * v = d with small entries,
// ordered by L1 norm then lexicographically, so the simplest monomial is
// certified first. Sets `degenerate` when the solve had free columns.
std::vector<std::vector<int>> monomial_candidates(const CellModel &m,
                                                  Labelling basis,
                                                  const DegVec &d,
                                                  bool &degenerate) {
  std::vector<int> cols = frozen_faces(m);
  std::vector<std::vector<Int>> A(m.n, std::vector<Int>(cols.size(), 0));
  for (size_t c = 0; c < cols.size(); ++c)
    for (int i : label_of(m, cols[c], basis)) A[i - 1][c] = 1;
  std::vector<Int> b(d.begin(), d.end());

  exact::IntSolve first = exact::solve_integer_linear(A, b);
  degenerate = first.status == exact::IntSolve::kUnderdetermined;
  std::vector<std::vector<int>> found;
  auto push = [&](const std::vector<Int> &x) {
    std::vector<int> v;
    for (const Int &e : x) {
      if (!e.fits_sint_p() || std::abs((int)e.get_si()) > 4) return;
      v.push_back((int)e.get_si());
    }
    found.push_back(v);
  };

  if (first.status == exact::IntSolve::kNone) return found;
  if (first.status == exact::IntSolve::kUnique) {
    if (first.has_solution) push(first.x);
    return found;
  }

  // pin the free columns to every small value combination
  const std::vector<int> &free_cols = first.free_cols;
  if (free_cols.size() > 4)
    throw std::runtime_error("frozen degree lattice too degenerate");
  static const int kValues[] = {0, 1, -1, 2, -2, 3, -3, 4, -4};
  std::vector<int> pick(free_cols.size(), 0);
  std::function<void(size_t)> walk = [&](size_t at) {
    if (at == free_cols.size()) {
      std::vector<std::vector<Int>> Ae = A;
      std::vector<Int> be = b;
      for (size_t t = 0; t < free_cols.size(); ++t) {
        std::vector<Int> row(cols.size(), 0);
        row[free_cols[t]] = 1;
        Ae.push_back(row);
        be.push_back(kValues[pick[t]]);
      }
      exact::IntSolve r = exact::solve_integer_linear(Ae, be);
      if (r.has_solution) push(r.x);
      return;
    }
    for (size_t v = 0; v < sizeof(kValues) / sizeof(int); ++v) {
      pick[at] = (int)v;
      walk(at + 1);
    }
  };
  walk(0);

  std::sort(found.begin(), found.end(),
            [](const std::vector<int> &a, const std::vector<int> &b) {
              int la = 0, lb = 0;
              for (int e : a) la += std::abs(e);
              for (int e : b) lb += std::abs(e);
              return la != lb ? la < lb : a < b;
            });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

FrozenMonomial monomial_from(const CellModel &m, const std::vector<int> &v) {
  FrozenMonomial p;
  p.exponents.assign(m.analysis.labels.face_count, 0);
  std::vector<int> cols = frozen_faces(m);
  for (size_t c = 0; c < cols.size(); ++c) p.exponents[cols[c]] = v[c];
  return p;
}

namespace {

DegVec degree_of(const LaurentPoly &x, const CellModel &m, Labelling conv) {
  auto d = cluster::multidegree(x, label_assignment(m, conv));
  if (!d)
    throw std::invalid_argument("variable is not homogeneous: " + x.str());
  return *d;
}

// all bijections between the mutable vertices preserving arrow counts
std::vector<std::vector<int>> mutable_isos(const plabic::IceQuiver &a,
                                           const plabic::IceQuiver &b) {
  std::vector<int> ma, mb;
  for (int v = 0; v < a.vertex_count; ++v)
    if (!a.frozen[v]) ma.push_back(v);
  for (int v = 0; v < b.vertex_count; ++v)
    if (!b.frozen[v]) mb.push_back(v);
  std::vector<std::vector<int>> isos;
  if (ma.size() != mb.size()) return isos;

  auto counts = [](const plabic::IceQuiver &q) {
    std::map<std::pair<int, int>, int> c;
    int total = 0;
    for (const auto &ar : q.arrows)
      if (!q.frozen[ar.from] && !q.frozen[ar.to]) {
        c[{ar.from, ar.to}]++;
        ++total;
      }
    return std::make_pair(c, total);
  };
  auto [ca, total_a] = counts(a);
  auto [cb, total_b] = counts(b);
  if (total_a != total_b) return isos;

  std::vector<int> perm = mb;
  std::sort(perm.begin(), perm.end());
  do {
    std::map<int, int> sigma;
    for (size_t i = 0; i < ma.size(); ++i) sigma[ma[i]] = perm[i];
    bool ok = true;
    // equal totals make the one-sided count check an equality of multisets
    for (const auto &[uv, cnt] : ca) {
      auto it = cb.find({sigma[uv.first], sigma[uv.second]});
      if (it == cb.end() || it->second != cnt) {
        ok = false;
        break;
      }
    }
    if (ok) isos.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return isos;
}

}  // namespace

bool FrozenMonomial::trivial() const {
  for (int e : exponents)
    if (e != 0) return false;
  return true;
}

RationalFn FrozenMonomial::value(Labelling basis, const CellModel &m) const {
  RationalFn out = RationalFn::constant(m.reg, 1);
  for (size_t f = 0; f < exponents.size(); ++f) {
    if (exponents[f] == 0) continue;
    assert(m.analysis.labels.is_boundary[f]);
    out = out * RationalFn(m.pl(label_of(m, (int)f, basis))).pow(exponents[f]);
  }
  return out;
}

std::map<Subset, FrozenMonomial> frozen_transition(const CellModel &m,
                                                   Labelling expressed,
                                                   Labelling basis) {
  std::map<Subset, FrozenMonomial> table;
  for (int f : frozen_faces(m)) {
    const Subset &J = label_of(m, f, expressed);
    if (table.count(J)) continue;
    DegVec d(m.n, 0);
    for (int i : J) d[i - 1] = 1;
    bool degenerate = false;
    RationalFn target = RationalFn(m.pl(J));
    bool done = false;
    for (const auto &v : monomial_candidates(m, basis, d, degenerate)) {
      FrozenMonomial p = monomial_from(m, v);
      if (cell::equal_on_cell(target, p.value(basis, m))) {
        table[J] = p;
        done = true;
        break;
      }
    }
    if (!done)
      throw std::runtime_error("no frozen monomial expresses " +
                               subset_str(J));
  }
  return table;
}

MatchEntry match_variable(const LaurentPoly &x_tgt,
                          const std::vector<LaurentPoly> &src_vars,
                          const CellModel &m) {
  DegVec dt = degree_of(x_tgt, m, Labelling::tgt);
  RationalFn target = cell::expand(RationalFn(x_tgt), Labelling::tgt, m);

  MatchEntry entry;
  entry.target = x_tgt;
  int hits = 0;
  for (const LaurentPoly &cand : src_vars) {
    DegVec ds = degree_of(cand, m, Labelling::src);
    DegVec d(m.n);
    for (int i = 0; i < m.n; ++i) d[i] = dt[i] - ds[i];
    bool degenerate = false;
    auto candidates = monomial_candidates(m, Labelling::src, d, degenerate);
    if (candidates.empty()) continue;
    RationalFn base = cell::expand(RationalFn(cand), Labelling::src, m);
    for (const auto &v : candidates) {
      FrozenMonomial p = monomial_from(m, v);
      if (cell::equal_on_cell(target, base * p.value(Labelling::src, m))) {
        ++hits;
        if (hits > 1)
          throw std::runtime_error(
              "two source variables match one target variable");
        entry.source = cand;
        entry.monomial = p;
        entry.degenerate_lattice = degenerate;
        break;
      }
    }
  }
  if (hits == 0)
    throw std::runtime_error("no source variable matches " + x_tgt.str());
  return entry;
}

std::vector<Subset> plucker_factorization(const LaurentPoly &x,
                                          Labelling conv, const CellModel &m) {
  DegVec w = degree_of(x, m, conv);
  int total = 0;
  for (int c : w) total += c;
  if (total <= 0 || total % m.k != 0)
    throw std::runtime_error("variable weight is not a plucker multiple: " +
                             x.str());
  int depth = total / m.k;
  if (depth > 3)
    throw std::runtime_error("variable degree too high to factor: " + x.str());
  RationalFn want = cell::expand(RationalFn(x), conv, m);

  std::vector<Subset> factors;
  // peel one subset per level: a label sits in exactly w[i] of the factors,
  // so labels with w[i] == levels-left are forced and w[i] == 0 excluded
  std::function<bool(DegVec &, int)> rec = [&](DegVec &rem, int left) {
    if (left == 0) {
      for (int c : rem)
        if (c != 0) return false;
      RationalFn prod(m.pl(factors[0]));
      for (size_t t = 1; t < factors.size(); ++t)
        prod = prod * RationalFn(m.pl(factors[t]));
      return cell::equal_on_cell(want, prod);
    }
    Subset forced, optional;
    for (int i = 1; i <= m.n; ++i) {
      if (rem[i - 1] > left) return false;
      if (rem[i - 1] == left) forced.push_back(i);
      else if (rem[i - 1] > 0) optional.push_back(i);
    }
    if ((int)forced.size() > m.k) return false;
    int need = m.k - (int)forced.size();
    if (need > (int)optional.size()) return false;
    std::vector<int> pick(need);
    std::function<bool(int, int)> choose = [&](int at, int from) {
      if (at == need) {
        Subset I = forced;
        for (int t = 0; t < need; ++t) I.push_back(optional[pick[t]]);
        std::sort(I.begin(), I.end());
        // keep factors non-decreasing so each multiset appears once
        if (!factors.empty() && I < factors.back()) return false;
        factors.push_back(I);
        for (int v : I) --rem[v - 1];
        if (rec(rem, left - 1)) return true;
        for (int v : I) ++rem[v - 1];
        factors.pop_back();
        return false;
      }
      for (int j = from; j < (int)optional.size(); ++j) {
        pick[at] = j;
        if (choose(at + 1, j + 1)) return true;
      }
      return false;
    };
    return choose(0, 0);
  };
  if (rec(w, depth)) return factors;
  throw std::runtime_error("no plucker product represents " + x.str());
}

std::vector<std::string> transition_checks(
    const CellModel &m, const std::map<Subset, FrozenMonomial> &fwd_table,
    const std::map<Subset, FrozenMonomial> &back_table) {
  std::vector<std::string> failures;
  for (const auto &[J, fwd] : fwd_table) {
    std::vector<int> composed(m.analysis.labels.face_count, 0);
    for (int f : frozen_faces(m)) {
      if (fwd.exponents[f] == 0) continue;
      const FrozenMonomial &back =
          back_table.at(label_of(m, f, Labelling::src));
      for (size_t gface = 0; gface < composed.size(); ++gface)
        composed[gface] += fwd.exponents[f] * back.exponents[gface];
    }
    FrozenMonomial round;
    round.exponents = composed;
    if (!cell::equal_on_cell(RationalFn(m.pl(J)),
                             round.value(Labelling::tgt, m)))
      failures.push_back("frozen transition does not invert at " +
                         subset_str(J));
  }
  return failures;
}

std::vector<std::string> dictionary_checks(
    const cluster::Closure &cl, const std::vector<MatchEntry> &entries) {
  std::vector<std::string> failures;
  if (entries.size() != cl.variables.size()) return failures;

  std::map<std::map<exact::Expo, exact::Rat>, int> source_hits;
  for (const MatchEntry &e : entries) source_hits[e.source.terms()]++;
  for (const auto &[key, count] : source_hits)
    if (count != 1) {
      failures.push_back("variable dictionary is not a bijection");
      break;
    }
  if (source_hits.size() != cl.variables.size() && !cl.variables.empty())
    failures.push_back("variable dictionary misses some source");

  // compatibility: clusters map to clusters under the dictionary
  std::map<std::map<exact::Expo, exact::Rat>, const LaurentPoly *> dictionary;
  for (const MatchEntry &e : entries) dictionary[e.target.terms()] = &e.source;
  std::set<std::vector<std::map<exact::Expo, exact::Rat>>> clusters;
  for (const cluster::Seed &s : cl.seeds) {
    std::vector<std::map<exact::Expo, exact::Rat>> key;
    for (int v = 0; v < s.quiver.vertex_count; ++v)
      if (!s.quiver.frozen[v]) key.push_back(s.vars[v].terms());
    std::sort(key.begin(), key.end());
    clusters.insert(key);
  }
  for (const cluster::Seed &s : cl.seeds) {
    std::vector<std::map<exact::Expo, exact::Rat>> image;
    bool total = true;
    for (int v = 0; v < s.quiver.vertex_count; ++v) {
      if (s.quiver.frozen[v]) continue;
      auto it = dictionary.find(s.vars[v].terms());
      if (it == dictionary.end()) {
        total = false;
        break;
      }
      image.push_back(it->second->terms());
    }
    if (!total) continue;
    std::sort(image.begin(), image.end());
    if (!clusters.count(image)) {
      failures.push_back(
          "a cluster's image is not a cluster (seed found by word " +
          [&] {
            std::string w;
            for (int j : s.provenance) w += std::to_string(j) + " ";
            return w;
          }());
      break;
    }
  }
  return failures;
}

QuasiReport verify_quasi_coincidence(const plabic::PlabicGraph &g,
                                     int seed_bound) {
  CellModel m = cell::build_model(g);
  cluster::Seed s0 = cluster::initial_seed(m.analysis);
  cluster::Closure cl = cluster::enumerate_variables(s0, seed_bound);

  QuasiReport report;
  report.complete = cl.finite_type;
  if (!report.complete)
    report.failures.push_back("mutation closure incomplete at bound " +
                              std::to_string(seed_bound));

  // frozen transitions, both ways, then composed back to the identity
  try {
    report.frozen_table = frozen_transition(m, Labelling::tgt, Labelling::src);
    report.frozen_table_back =
        frozen_transition(m, Labelling::src, Labelling::tgt);
    for (const std::string &line :
         transition_checks(m, report.frozen_table, report.frozen_table_back))
      report.failures.push_back(line);
  } catch (const std::exception &e) {
    report.failures.push_back(std::string("frozen transition: ") + e.what());
  }

  // the variable dictionary must be a bijection
  if (report.complete) {
    for (const LaurentPoly &x : cl.variables) {
      try {
        report.variable_map.push_back(match_variable(x, cl.variables, m));
      } catch (const std::exception &e) {
        report.failures.push_back(std::string("variable match: ") + e.what());
      }
    }
    for (const std::string &line : dictionary_checks(cl, report.variable_map))
      report.failures.push_back(line);
  }

  // stable quiver isomorphism and matching y-hats on some witness seed
  if (report.complete) {
    std::vector<int> mut;
    for (int v = 0; v < s0.quiver.vertex_count; ++v)
      if (!s0.quiver.frozen[v]) mut.push_back(v);
    std::vector<RationalFn> target_y;
    for (int j : mut)
      target_y.push_back(
          cell::expand(cluster::y_hat(s0, j), Labelling::tgt, m));

    bool witnessed = false;
    for (const cluster::Seed &s : cl.seeds) {
      for (const std::vector<int> &sigma : mutable_isos(s0.quiver, s.quiver)) {
        bool all = true;
        for (size_t i = 0; i < mut.size() && all; ++i) {
          RationalFn ys =
              cell::expand(cluster::y_hat(s, sigma[i]), Labelling::src, m);
          all = cell::equal_on_cell(target_y[i], ys);
        }
        if (all) {
          report.yhat_witness.word = s.provenance;
          report.yhat_witness.vertex_map = sigma;
          report.stable_iso = sigma;
          witnessed = true;
          break;
        }
      }
      if (witnessed) break;
    }
    if (!witnessed && !mut.empty())
      report.failures.push_back("no seed matches the initial y-hats");
  }

  report.pass = report.complete && report.failures.empty();
  return report;
}

std::string render(const QuasiReport &r, const CellModel &m) {
  std::ostringstream out;
  auto monomial_str = [&](const FrozenMonomial &p, Labelling basis) {
    if (p.trivial()) return std::string("1");
    std::string s;
    for (size_t f = 0; f < p.exponents.size(); ++f) {
      if (p.exponents[f] == 0) continue;
      if (!s.empty()) s += " ";
      s += "D" + subset_str(label_of(m, (int)f, basis));
      if (p.exponents[f] != 1) s += "^" + std::to_string(p.exponents[f]);
    }
    return s;
  };

  out << (r.pass ? "pass" : "fail") << "\n";
  for (const auto &[J, p] : r.frozen_table)
    out << "frozen tgt D" << subset_str(J) << " = "
        << monomial_str(p, Labelling::src) << "\n";
  for (const auto &[J, p] : r.frozen_table_back)
    out << "frozen src D" << subset_str(J) << " = "
        << monomial_str(p, Labelling::tgt) << "\n";
  for (const MatchEntry &e : r.variable_map)
    out << "tgt " << e.target.str() << " = src " << e.source.str() << " * "
        << monomial_str(e.monomial, Labelling::src)
        << (e.degenerate_lattice ? "  (degenerate lattice)" : "") << "\n";
  out << "witness word:";
  for (int j : r.yhat_witness.word) out << " " << j;
  out << "\nwitness map:";
  for (int v : r.yhat_witness.vertex_map) out << " " << v;
  out << "\n";
  for (const std::string &f : r.failures) out << "failure: " << f << "\n";
  return out.str();
}

}  // namespace quasi
}  // namespace positroid

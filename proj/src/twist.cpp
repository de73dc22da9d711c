#include "positroid/twist.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace positroid {
namespace twist {

using cell::CellModel;
using cell::Labelling;
using exact::LaurentPoly;
using exact::Rat;
using exact::RatMatrix;
using plabic::subset_str;

namespace {

// minors of one matrix, cached per sorted column subset
struct MinorCache {
  const RatMatrix *mat;
  std::map<Subset, Rat> cache;

  explicit MinorCache(const RatMatrix &m) : mat(&m) {}

  const Rat &minor(const Subset &I) {
    auto it = cache.find(I);
    if (it != cache.end()) return it->second;
    std::vector<int> cols;
    for (int v : I) cols.push_back(v - 1);
    return cache.emplace(I, mat->minor_det(cols)).first->second;
  }

  Rat product(const std::vector<Subset> &factors) {
    Rat r(1);
    for (const Subset &I : factors) r *= minor(I);
    return r;
  }

  Rat power_product(const quasi::FrozenMonomial &mono, const CellModel &m,
                    Labelling basis) {
    Rat r(1);
    const auto &labels = m.analysis.labels;
    for (size_t f = 0; f < mono.exponents.size(); ++f) {
      int e = mono.exponents[f];
      if (e == 0) continue;
      const Subset &J = basis == Labelling::src ? labels.src_label[f]
                                                : labels.tgt_label[f];
      const Rat &base = minor(J);
      for (int t = 0; t < (e > 0 ? e : -e); ++t)
        r = e > 0 ? Rat(r * base) : Rat(r / base);
    }
    return r;
  }
};

cluster::DegVec weight_of(const std::vector<Subset> &factors, int n) {
  cluster::DegVec w(n, 0);
  for (const Subset &I : factors)
    for (int v : I) ++w[v - 1];
  return w;
}

std::string factor_str(const std::vector<Subset> &factors) {
  std::string s;
  for (const Subset &I : factors) {
    if (!s.empty()) s += " ";
    s += "D" + subset_str(I);
  }
  return s;
}

}  // namespace

std::vector<int> greedy_basis(const RatMatrix &M, int i, Scan scan) {
  int n = M.cols, k = M.rows;
  assert(i >= 1 && i <= n);
  std::vector<std::vector<Rat>> reduced;  // row-reduced kept columns
  std::vector<int> kept;
  for (int t = 0; t < n && (int)kept.size() < k; ++t) {
    int lab = scan == Scan::backward ? ((i - 1 - t) % n + n) % n + 1
                                     : (i - 1 + t) % n + 1;
    std::vector<Rat> v(k);
    for (int r = 0; r < k; ++r) v[r] = M.at(r, lab - 1);
    for (const auto &p : reduced) {
      int piv = 0;
      while (p[piv] == Rat(0)) ++piv;
      if (v[piv] == Rat(0)) continue;
      Rat f = v[piv] / p[piv];
      for (int r = 0; r < k; ++r) v[r] -= f * p[r];
    }
    if (std::any_of(v.begin(), v.end(),
                    [](const Rat &x) { return x != Rat(0); })) {
      reduced.push_back(v);
      kept.push_back(lab);
    }
  }
  if ((int)kept.size() < k)
    throw std::runtime_error("matrix is rank deficient, twist undefined");
  if (kept[0] != i)
    throw std::runtime_error("column " + std::to_string(i) +
                             " vanishes, twist undefined");
  return kept;
}

RatMatrix twist_matrix(const RatMatrix &M, Scan scan) {
  int n = M.cols, k = M.rows;
  RatMatrix T(k, n);
  for (int i = 1; i <= n; ++i) {
    std::vector<int> basis = greedy_basis(M, i, scan);
    RatMatrix gram(k, k);  // row t = column basis[t] of M
    for (int t = 0; t < k; ++t)
      for (int r = 0; r < k; ++r) gram.at(t, r) = M.at(r, basis[t] - 1);
    // <v, M_basis[t]> = d_{t,0}: v is the first column of the inverse
    RatMatrix inv = gram.inverse();
    for (int r = 0; r < k; ++r) T.at(r, i - 1) = inv.at(r, 0);
  }
  return T;
}

RatMatrix left_twist_matrix(const RatMatrix &M) {
  return twist_matrix(M, kScan);
}

TwistReport twist_check_variables(const plabic::PlabicGraph &g, int samples,
                                  unsigned long long rng_seed,
                                  int seed_bound) {
  CellModel m = cell::build_model(g);
  TwistReport report;
  report.samples = samples;

  cluster::Seed s0 = cluster::initial_seed(m.analysis);
  cluster::Closure cl = cluster::enumerate_variables(s0, seed_bound);
  if (!cl.finite_type)
    report.failures.push_back(
        "mutation closure incomplete within the bound; variable list "
        "untrusted");

  std::vector<RatMatrix> mats, twisted;
  std::vector<MinorCache> mc, tc;
  for (int s = 0; s < samples; ++s) {
    mats.push_back(
        cell::matrix_from_point(cell::sample_point(m, rng_seed + s)));
    twisted.push_back(left_twist_matrix(mats.back()));
  }
  for (int s = 0; s < samples; ++s) {
    mc.emplace_back(mats[s]);
    tc.emplace_back(twisted[s]);
  }

  // necklace coordinates invert exactly, and the twisted point stays in
  // the open cell (both necklaces' minors nonzero)
  for (int s = 0; s < samples; ++s) {
    for (const std::vector<Subset> *neck :
         {&m.necklaces.src, &m.necklaces.tgt}) {
      for (const Subset &J : *neck) {
        if ((int)J.size() != m.k) continue;  // gap 0 placeholder
        const Rat &before = mc[s].minor(J);
        const Rat &after = tc[s].minor(J);
        if (before == Rat(0) || after == Rat(0)) {
          report.failures.push_back("necklace coordinate D" + subset_str(J) +
                                    " vanishes at sample " +
                                    std::to_string(s));
          continue;
        }
        if (s == 0) ++report.necklace_checks;
        if (after * before != Rat(1))
          report.failures.push_back("necklace inversion fails for D" +
                                    subset_str(J) + " at sample " +
                                    std::to_string(s));
      }
    }
  }

  // three-term relations hold on the twisted matrices (evaluation sanity)
  {
    Subset common;
    for (int v = 1; v <= m.k - 2; ++v) common.push_back(v);
    std::vector<int> rest;
    for (int v = m.k - 1; v <= m.n; ++v)
      if (v >= 1) rest.push_back(v);
    auto with = [&](int a, int b) {
      Subset I = common;
      I.push_back(a);
      I.push_back(b);
      std::sort(I.begin(), I.end());
      return I;
    };
    for (size_t ia = 0; ia + 3 < rest.size(); ++ia)
      for (size_t ib = ia + 1; ib + 2 < rest.size(); ++ib)
        for (size_t ic = ib + 1; ic + 1 < rest.size(); ++ic)
          for (size_t id = ic + 1; id < rest.size(); ++id) {
            int a = rest[ia], b = rest[ib], c = rest[ic], d = rest[id];
            ++report.relation_checks;
            for (int s = 0; s < samples; ++s) {
              Rat lhs = tc[s].minor(with(a, c)) * tc[s].minor(with(b, d));
              Rat rhs = tc[s].minor(with(a, b)) * tc[s].minor(with(c, d)) +
                        tc[s].minor(with(a, d)) * tc[s].minor(with(b, c));
              if (lhs != rhs) {
                report.failures.push_back(
                    "three-term relation fails on the twist at sample " +
                    std::to_string(s));
                s = samples;
              }
            }
          }
  }

  // factor every closure variable once, in both labellings
  std::vector<std::vector<Subset>> tgt_factors(cl.variables.size()),
      src_factors(cl.variables.size());
  std::vector<bool> usable(cl.variables.size(), true);
  for (size_t t = 0; t < cl.variables.size(); ++t) {
    try {
      tgt_factors[t] =
          quasi::plucker_factorization(cl.variables[t], Labelling::tgt, m);
      src_factors[t] =
          quasi::plucker_factorization(cl.variables[t], Labelling::src, m);
    } catch (const std::exception &e) {
      usable[t] = false;
      report.failures.push_back(std::string("factorization: ") + e.what());
    }
  }

  // each variable, seen in the target structure and pulled back through the
  // twist, must match one source variable up to a frozen monomial
  for (size_t t = 0; t < cl.variables.size(); ++t) {
    if (!usable[t]) continue;
    cluster::DegVec wx = weight_of(tgt_factors[t], m.n);
    std::vector<Rat> lhs(samples);
    for (int s = 0; s < samples; ++s) lhs[s] = tc[s].product(tgt_factors[t]);

    bool matched = false;
    for (size_t u = 0; u < cl.variables.size() && !matched; ++u) {
      if (!usable[u]) continue;
      cluster::DegVec wy = weight_of(src_factors[u], m.n);
      cluster::DegVec d(m.n);
      for (int i = 0; i < m.n; ++i) d[i] = -wx[i] - wy[i];
      bool degenerate = false;
      auto candidates =
          quasi::monomial_candidates(m, Labelling::src, d, degenerate);
      for (const auto &v : candidates) {
        quasi::FrozenMonomial mono = quasi::monomial_from(m, v);
        Rat constant;
        bool ok = true;
        for (int s = 0; s < samples && ok; ++s) {
          Rat rhs = mc[s].product(src_factors[u]) *
                    mc[s].power_product(mono, m, Labelling::src);
          if (rhs == Rat(0)) {
            ok = false;
            break;
          }
          Rat c = lhs[s] / rhs;
          if (s == 0)
            constant = c;
          else if (c != constant)
            ok = false;
        }
        if (!ok) continue;
        TwistEntry entry;
        entry.target = tgt_factors[t];
        entry.source = src_factors[u];
        entry.monomial = mono;
        entry.constant = constant;
        entry.degenerate_lattice = degenerate;
        report.entries.push_back(entry);
        matched = true;
        break;
      }
    }
    if (!matched)
      report.failures.push_back(
          "no source variable times a frozen monomial matches the twist of " +
          factor_str(tgt_factors[t]));
  }

  report.pass = cl.finite_type && report.failures.empty();
  return report;
}

std::string render(const TwistReport &r, const CellModel &m) {
  std::ostringstream out;
  const auto &labels = m.analysis.labels;
  out << (r.pass ? "pass" : "fail") << "\n";
  out << "samples: " << r.samples << "\n";
  out << "necklace inversion: " << r.necklace_checks
      << " coordinates inverted\n";
  out << "three-term relations on twisted points: " << r.relation_checks
      << " checked\n";
  for (const TwistEntry &e : r.entries) {
    out << "twist tgt " << factor_str(e.target) << " = src "
        << factor_str(e.source);
    std::string mono;
    for (size_t f = 0; f < e.monomial.exponents.size(); ++f) {
      if (e.monomial.exponents[f] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += "D" + subset_str(labels.src_label[f]);
      if (e.monomial.exponents[f] != 1)
        mono += "^" + std::to_string(e.monomial.exponents[f]);
    }
    out << " * " << (mono.empty() ? "1" : mono);
    if (e.constant != Rat(1)) out << " * " << e.constant.get_str();
    if (e.degenerate_lattice) out << "  (degenerate lattice)";
    out << "\n";
  }
  for (const std::string &f : r.failures) out << "failure: " << f << "\n";
  return out.str();
}

}  // namespace twist
}  // namespace positroid

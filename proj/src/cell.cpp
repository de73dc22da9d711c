#include "positroid/cell.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace positroid {
namespace cell {

namespace {

void each_subset(int n, int k, Subset &pick,
                 const std::function<void(const Subset &)> &fn, int next = 1) {
  if ((int)pick.size() == k) {
    fn(pick);
    return;
  }
  for (int i = next; i + (k - (int)pick.size()) - 1 <= n; ++i) {
    pick.push_back(i);
    each_subset(n, k, pick, fn, i + 1);
    pick.pop_back();
  }
}

void each_subset(int n, int k, const std::function<void(const Subset &)> &fn) {
  if (k < 0) return;
  Subset pick;
  each_subset(n, k, pick, fn);
}

Subset join(const Subset &s, int a, int b) {
  Subset out = s;
  out.push_back(a);
  out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CellModel build_model(const PlabicGraph &g) {
  CellModel m;
  m.analysis = plabic::analyze(g);
  m.n = g.n;
  m.k = m.analysis.labels.k;
  m.necklaces.src.assign(m.n + 1, {});
  m.necklaces.tgt.assign(m.n + 1, {});
  for (int p = 1; p <= m.n; ++p) {
    int f = m.analysis.labels.gap_face[p];
    m.necklaces.src[p] = m.analysis.labels.src_label[f];
    m.necklaces.tgt[p] = m.analysis.labels.tgt_label[f];
  }

  m.reg = std::make_shared<exact::VarRegistry>();
  for (const auto &[p, v] : g.half)
    m.weight_var[{plabic::Item::half, p}] =
        m.reg->intern("h" + std::to_string(p));
  for (int e = 0; e < (int)g.edges.size(); ++e)
    m.weight_var[{plabic::Item::edge, e}] =
        m.reg->intern("w" + std::to_string(e));

  each_subset(m.n, m.k, [&](const Subset &I) {
    m.plucker.emplace(I, exact::LaurentPoly(m.reg));
  });
  for (const auto &mu : matching::enumerate_matchings(g)) {
    exact::Expo e;
    for (const plabic::Item &it : mu) {
      int var = m.weight_var.at(it);
      if ((int)e.size() <= var) e.resize(var + 1, 0);
      e[var] += 1;
    }
    m.plucker.at(matching::boundary_value(g, mu)).add_term(e, exact::Rat(1));
  }

  m.certificate = check_plucker_relations(m);
  if (!m.certificate.ok())
    throw std::runtime_error("plucker relation failed: " +
                             m.certificate.violations.front());
  for (int p = 1; p <= m.n; ++p) {
    if (m.pl(m.necklaces.src[p]).is_zero() ||
        m.pl(m.necklaces.tgt[p]).is_zero())
      throw std::runtime_error("necklace coordinate vanishes at gap " +
                               std::to_string(p));
  }
  return m;
}

PluckerCertificate check_plucker_relations(const CellModel &m) {
  PluckerCertificate cert;
  if (m.k < 2) return cert;
  each_subset(m.n, m.k - 2, [&](const Subset &S) {
    std::vector<int> rest;
    for (int i = 1; i <= m.n; ++i)
      if (!std::binary_search(S.begin(), S.end(), i)) rest.push_back(i);
    int r = (int)rest.size();
    for (int ia = 0; ia < r; ++ia)
      for (int ib = ia + 1; ib < r; ++ib)
        for (int ic = ib + 1; ic < r; ++ic)
          for (int id = ic + 1; id < r; ++id) {
            int a = rest[ia], b = rest[ib], c = rest[ic], d = rest[id];
            exact::LaurentPoly rel =
                m.pl(join(S, a, b)) * m.pl(join(S, c, d)) -
                m.pl(join(S, a, c)) * m.pl(join(S, b, d)) +
                m.pl(join(S, a, d)) * m.pl(join(S, b, c));
            cert.checked++;
            if (!rel.is_zero())
              cert.violations.push_back(
                  "S=" + plabic::subset_str(S) + " abcd=" +
                  std::to_string(a) + std::to_string(b) + std::to_string(c) +
                  std::to_string(d));
          }
  });
  return cert;
}

exact::RationalFn expand(const exact::RationalFn &var, Labelling conv,
                         const CellModel &m) {
  const exact::RegistryPtr &src = var.registry();
  assert(src);
  std::vector<exact::RationalFn> store(src->size());
  std::vector<const exact::RationalFn *> images(src->size(), nullptr);
  auto need = [&](const exact::LaurentPoly &p) {
    for (int i : p.support()) {
      if (images[i]) continue;
      const std::string &name = src->name(i);
      int face = -1;
      if (name.size() > 1 && name[0] == 'x') {
        try {
          face = std::stoi(name.substr(1));
        } catch (...) {
        }
      }
      if (face < 0 || face >= m.analysis.labels.face_count)
        throw std::invalid_argument("not a face variable: " + name);
      const Subset &lab = conv == Labelling::src
                              ? m.analysis.labels.src_label[face]
                              : m.analysis.labels.tgt_label[face];
      store[i] = exact::RationalFn(m.pl(lab));
      images[i] = &store[i];
    }
  };
  need(var.num());
  need(var.den());
  auto subst = [&](const exact::LaurentPoly &p) {
    if (p.support().empty()) {
      exact::Rat v = p.evaluate(std::vector<exact::Rat>());
      return exact::RationalFn::constant(m.reg, v);
    }
    return p.substitute(images);
  };
  return subst(var.num()) / subst(var.den());
}

bool equal_on_cell(const exact::RationalFn &f, const exact::RationalFn &g) {
  return exact::equal_rational(f, g);
}

CellPoint sample_point(const CellModel &m, unsigned long long rng_seed) {
  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<int> pick(1, 24);
  std::vector<exact::Rat> values(m.reg->size());
  for (int i = 0; i < m.reg->size(); ++i) {
    exact::Rat q(pick(rng), pick(rng));
    q.canonicalize();
    values[i] = q;
  }
  CellPoint p;
  p.n = m.n;
  p.k = m.k;
  for (const auto &[I, poly] : m.plucker) p.pluckers[I] = poly.evaluate(values);
  return p;
}

exact::RatMatrix matrix_from_point(const CellPoint &p) {
  const Subset *base = nullptr;
  for (const auto &[I, v] : p.pluckers) {
    if (v != 0) {
      base = &I;
      break;
    }
  }
  if (!base) throw std::runtime_error("no nonvanishing coordinate");
  const Subset &I0 = *base;
  const exact::Rat &scale = p.pluckers.at(I0);
  exact::RatMatrix M(p.k, p.n);
  for (int r = 0; r < p.k; ++r) {
    int ir = I0[r];
    for (int c = 1; c <= p.n; ++c) {
      auto at = std::find(I0.begin(), I0.end(), c);
      if (at != I0.end()) {
        M.at(r, c - 1) = (int)(at - I0.begin()) == r ? 1 : 0;
        continue;
      }
      Subset J;
      int between = 0;
      for (int x : I0)
        if (x != ir) {
          J.push_back(x);
          if (x > std::min(ir, c) && x < std::max(ir, c)) ++between;
        }
      J.push_back(c);
      std::sort(J.begin(), J.end());
      exact::Rat v = p.pluckers.at(J) / scale;
      M.at(r, c - 1) = between % 2 ? -v : v;
    }
  }
  return M;
}

std::string dump(const CellModel &m) {
  std::ostringstream out;
  for (const auto &[I, poly] : m.plucker)
    out << plabic::subset_str(I) << " : " << poly.str() << "\n";
  return out.str();
}

}  // namespace cell
}  // namespace positroid

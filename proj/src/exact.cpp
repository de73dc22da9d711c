#include "positroid/exact.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace positroid {
namespace exact {

int VarRegistry::intern(const std::string &name) {
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  int id = (int)names_.size();
  names_.push_back(name);
  index_[name] = id;
  return id;
}

int VarRegistry::find(const std::string &name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

static void trim(Expo &e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

Expo expo_mul(const Expo &a, const Expo &b) {
  Expo r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Expo expo_div(const Expo &a, const Expo &b) {
  Expo r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

LaurentPoly LaurentPoly::constant(RegistryPtr reg, const Rat &c) {
  LaurentPoly p(std::move(reg));
  if (c != 0) p.terms_[{}] = c;
  return p;
}

LaurentPoly LaurentPoly::variable(RegistryPtr reg, int var, int power) {
  assert(var >= 0 && var < reg->size());
  LaurentPoly p(std::move(reg));
  if (power == 0) {
    p.terms_[{}] = 1;
  } else {
    Expo e(var + 1, 0);
    e[var] = power;
    p.terms_[e] = 1;
  }
  return p;
}

LaurentPoly LaurentPoly::monomial(RegistryPtr reg, const Expo &e, const Rat &c) {
  LaurentPoly p(std::move(reg));
  if (c != 0) {
    Expo ee = e;
    trim(ee);
    p.terms_[ee] = c;
  }
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() &&
         terms_.begin()->second == 1;
}

void LaurentPoly::add_term(const Expo &e, const Rat &c) {
  if (c == 0) return;
  Expo ee = e;
  trim(ee);
  auto it = terms_.find(ee);
  if (it == terms_.end()) {
    terms_[ee] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly &o) const {
  LaurentPoly r = *this;
  if (!r.reg_) r.reg_ = o.reg_;
  for (const auto &[e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly &o) const {
  LaurentPoly r = *this;
  if (!r.reg_) r.reg_ = o.reg_;
  for (const auto &[e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(reg_);
  for (const auto &[e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly &o) const {
  LaurentPoly r(reg_ ? reg_ : o.reg_);
  for (const auto &[e1, c1] : terms_)
    for (const auto &[e2, c2] : o.terms_) r.add_term(expo_mul(e1, e2), c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e == 0) return constant(reg_, 1);
  if (e < 0) {
    assert(is_monomial() && "negative power of a non-monomial");
    const auto &[ex, c] = *terms_.begin();
    Expo inv = ex;
    for (auto &v : inv) v = -v;
    Rat ic = 1 / c;
    LaurentPoly r = monomial(reg_, inv, ic);
    return r.pow(-e);
  }
  LaurentPoly r = constant(reg_, 1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = e > 1 ? base * base : base;
    e >>= 1;
  }
  return r;
}

Expo LaurentPoly::min_exponents() const {
  Expo m;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    (void)c;
    if (first) {
      m = e;
      first = false;
      continue;
    }
    if (m.size() < e.size()) m.resize(e.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
      m[i] = std::min(m[i], i < e.size() ? e[i] : 0);
  }
  return m;
}

LaurentPoly LaurentPoly::shift(const Expo &e) const {
  LaurentPoly r(reg_);
  for (const auto &[ex, c] : terms_) r.terms_[expo_div(ex, e)] = c;
  return r;
}

Rat LaurentPoly::content() const {
  Int num_gcd = 0, den_lcm = 1;
  for (const auto &[e, c] : terms_) {
    (void)e;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.get_den().get_mpz_t());
  }
  if (num_gcd == 0) return Rat(1);
  Rat r(num_gcd, den_lcm);
  r.canonicalize();
  return r;
}

std::vector<int> LaurentPoly::support() const {
  std::vector<char> seen;
  for (const auto &[e, c] : terms_) {
    (void)c;
    if (seen.size() < e.size()) seen.resize(e.size(), 0);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) seen[i] = 1;
  }
  std::vector<int> out;
  for (size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back((int)i);
  return out;
}

Rat LaurentPoly::evaluate(const std::vector<Rat> &values) const {
  Rat total = 0;
  for (const auto &[e, c] : terms_) {
    Rat t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      assert(i < values.size());
      Rat v = values[i];
      int p = e[i];
      if (p < 0) {
        if (v == 0) throw std::domain_error("zero raised to negative power");
        v = 1 / v;
        p = -p;
      }
      for (int j = 0; j < p; ++j) t *= v;
    }
    total += t;
  }
  return total;
}

RationalFn LaurentPoly::substitute(
    const std::vector<const RationalFn *> &images) const {
  RegistryPtr target;
  for (const auto *f : images)
    if (f) {
      target = f->registry();
      break;
    }
  assert(target && "substitution needs at least one image");
  RationalFn total = RationalFn::constant(target, 0);
  for (const auto &[e, c] : terms_) {
    RationalFn t = RationalFn::constant(target, c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      assert(i < images.size() && images[i] && "assignment not total");
      if (e[i] < 0 && images[i]->is_zero())
        throw std::domain_error("zero substituted into negative exponent");
      t = t * images[i]->pow(e[i]);
    }
    total = total + t;
  }
  return total;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  // graded lex on variable names: total degree first, then exponents read in
  // name-alphabetical order (higher exponent first)
  std::vector<int> order;  // variable indices sorted by name
  if (reg_) {
    order.resize(reg_->size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return reg_->name(a) < reg_->name(b);
    });
  }
  auto key = [&](const Expo &e) {
    long deg = 0;
    for (int v : e) deg += v;
    std::vector<long> k{-deg};
    for (int v : order) k.push_back(v < (int)e.size() ? -e[v] : 0);
    return k;
  };
  std::vector<const std::pair<const Expo, Rat> *> ts;
  for (const auto &t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(),
            [&](auto *a, auto *b) { return key(a->first) < key(b->first); });

  std::ostringstream out;
  bool first = true;
  for (const auto *t : ts) {
    const auto &[e, c] = *t;
    Rat ac = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool has_var = !e.empty();
    if (ac != 1 || !has_var) {
      out << ac.get_str();
      if (has_var) out << "*";
    }
    bool first_var = true;
    for (int v : order) {
      int p = v < (int)e.size() ? e[v] : 0;
      if (p == 0) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << reg_->name(v) << "^" << p;
    }
  }
  return out.str();
}

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("division by zero polynomial");
  normalize();
}

RationalFn::RationalFn(const LaurentPoly &num)
    : num_(num), den_(LaurentPoly::constant(num.registry(), 1)) {
  normalize();
}

RationalFn RationalFn::constant(RegistryPtr reg, const Rat &c) {
  return RationalFn(LaurentPoly::constant(reg, c),
                    LaurentPoly::constant(reg, 1));
}

RationalFn RationalFn::variable(RegistryPtr reg, int var, int power) {
  return RationalFn(LaurentPoly::variable(reg, var, power),
                    LaurentPoly::constant(reg, 1));
}

void RationalFn::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(den_.registry(), 1);
    return;
  }
  // common monomial factor
  Expo mn = num_.min_exponents(), md = den_.min_exponents();
  Expo s(std::max(mn.size(), md.size()), 0);
  for (size_t i = 0; i < s.size(); ++i) {
    int a = i < mn.size() ? mn[i] : 0;
    int b = i < md.size() ? md[i] : 0;
    s[i] = std::min(a, b);
  }
  while (!s.empty() && s.back() == 0) s.pop_back();
  if (!s.empty()) {
    num_ = num_.shift(s);
    den_ = den_.shift(s);
  }
  // content
  Rat c = num_.content();
  Rat cd = den_.content();
  Rat g(gcd(c.get_num(), cd.get_num()), lcm(c.get_den(), cd.get_den()));
  g.canonicalize();
  // sign: first term of den (map order) positive
  if (den_.terms().begin()->second < 0) g = -g;
  if (g != 1) {
    LaurentPoly inv = LaurentPoly::constant(num_.registry(), 1 / g);
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RationalFn RationalFn::operator+(const RationalFn &o) const {
  return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator-(const RationalFn &o) const {
  return RationalFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator*(const RationalFn &o) const {
  return RationalFn(num_ * o.num_, den_ * o.den_);
}

RationalFn RationalFn::operator/(const RationalFn &o) const {
  if (o.num_.is_zero()) throw std::domain_error("division by zero");
  return RationalFn(num_ * o.den_, den_ * o.num_);
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFn RationalFn::pow(int e) const {
  if (e < 0) {
    if (num_.is_zero()) throw std::domain_error("negative power of zero");
    return RationalFn(den_.pow(-e), num_.pow(-e));
  }
  return RationalFn(num_.pow(e), den_.pow(e));
}

Rat RationalFn::evaluate(const std::vector<Rat> &values) const {
  Rat d = den_.evaluate(values);
  if (d == 0) throw std::domain_error("denominator vanishes at point");
  return num_.evaluate(values) / d;
}

std::string RationalFn::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.str(), d = den_.str();
  if (num_.term_count() > 1) n = "(" + n + ")";
  if (den_.term_count() > 1) d = "(" + d + ")";
  return n + " / " + d;
}

bool equal_rational(const RationalFn &f, const RationalFn &g) {
  return (f.num() * g.den() - g.num() * f.den()).is_zero();
}

bool try_divide(const LaurentPoly &a, const LaurentPoly &b, LaurentPoly &q) {
  assert(!b.is_zero());
  if (a.is_zero()) {
    q = LaurentPoly(a.registry() ? a.registry() : b.registry());
    return true;
  }
  // shift both to honest polynomials; the quotient of the shifted parts is a
  // polynomial again because per-variable valuations are additive
  Expo ma = a.min_exponents(), mb = b.min_exponents();
  LaurentPoly ra = a.shift(ma), rb = b.shift(mb);
  // greedy cancellation of leading terms in the term-map order, which is a
  // monomial order once all exponents are nonnegative
  LaurentPoly quot(a.registry() ? a.registry() : b.registry());
  auto lead_b = *rb.terms().rbegin();
  while (!ra.is_zero()) {
    auto lead_a = *ra.terms().rbegin();
    Expo t = lead_a.first;
    if (t.size() < lead_b.first.size()) return false;
    for (size_t i = 0; i < lead_b.first.size(); ++i) {
      t[i] -= lead_b.first[i];
      if (t[i] < 0) return false;
    }
    while (!t.empty() && t.back() == 0) t.pop_back();
    LaurentPoly step = LaurentPoly::monomial(quot.registry(), t,
                                             lead_a.second / lead_b.second);
    quot = quot + step;
    ra = ra - step * rb;
  }
  q = quot.shift(expo_div(mb, ma));
  return true;
}

LaurentPoly divide_exact(const LaurentPoly &a, const LaurentPoly &b) {
  LaurentPoly q;
  if (!try_divide(a, b, q)) throw std::domain_error("inexact division");
  return q;
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::mul(const RatMatrix &o) const {
  assert(cols == o.rows);
  RatMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

int RatMatrix::rank() const {
  RatMatrix m = *this;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    for (int i = r + 1; i < m.rows; ++i) {
      if (m.at(i, c) == 0) continue;
      Rat f = m.at(i, c) / m.at(r, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

Rat RatMatrix::det() const {
  assert(rows == cols);
  RatMatrix m = *this;
  Rat d = 1;
  for (int c = 0; c < m.cols; ++c) {
    int p = -1;
    for (int i = c; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) return Rat(0);
    if (p != c) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    for (int i = c + 1; i < m.rows; ++i) {
      if (m.at(i, c) == 0) continue;
      Rat f = m.at(i, c) / m.at(c, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

RatMatrix RatMatrix::inverse() const {
  assert(rows == cols);
  RatMatrix m = *this, inv = identity(rows);
  for (int c = 0; c < cols; ++c) {
    int p = -1;
    for (int i = c; i < rows; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    assert(p >= 0 && "singular matrix");
    for (int j = 0; j < cols; ++j) {
      std::swap(m.at(p, j), m.at(c, j));
      std::swap(inv.at(p, j), inv.at(c, j));
    }
    Rat piv = m.at(c, c);
    for (int j = 0; j < cols; ++j) {
      m.at(c, j) /= piv;
      inv.at(c, j) /= piv;
    }
    for (int i = 0; i < rows; ++i) {
      if (i == c || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = 0; j < cols; ++j) {
        m.at(i, j) -= f * m.at(c, j);
        inv.at(i, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

Rat RatMatrix::minor_det(const std::vector<int> &col_subset) const {
  assert((int)col_subset.size() == rows);
  RatMatrix m(rows, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < rows; ++j) m.at(i, j) = at(i, col_subset[j]);
  return m.det();
}

IntSolve solve_integer_linear(const std::vector<std::vector<Int>> &A,
                              const std::vector<Int> &b) {
  int nr = (int)A.size();
  int nc = nr ? (int)A[0].size() : 0;
  assert((int)b.size() == nr);
  // rational Gaussian elimination on the augmented matrix (exact; the
  // fraction-free variant trades gcd work for bigger intermediates, and at
  // desk scale plain mpq pivots are equally exact)
  std::vector<std::vector<Rat>> m(nr, std::vector<Rat>(nc + 1));
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nc; ++j) m[i][j] = Rat(A[i][j]);
    m[i][nc] = Rat(b[i]);
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int p = -1;
    for (int i = r; i < nr; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    Rat piv = m[r][c];
    for (int j = c; j <= nc; ++j) m[r][j] /= piv;
    for (int i = 0; i < nr; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j <= nc; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  IntSolve out;
  for (int i = r; i < nr; ++i)
    if (m[i][nc] != 0) {
      out.status = IntSolve::kNone;
      return out;
    }
  std::vector<char> is_pivot(nc, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  for (int c = 0; c < nc; ++c)
    if (!is_pivot[c]) out.free_cols.push_back(c);

  // particular solution with free variables zero
  std::vector<Rat> x(nc, Rat(0));
  for (int i = 0; i < (int)pivot_col.size(); ++i) x[pivot_col[i]] = m[i][nc];
  bool integral = true;
  for (const Rat &v : x)
    if (v.get_den() != 1) integral = false;

  out.status = out.free_cols.empty() ? IntSolve::kUnique
                                     : IntSolve::kUnderdetermined;
  if (integral) {
    out.has_solution = true;
    out.x.reserve(nc);
    for (const Rat &v : x) out.x.push_back(v.get_num());
  } else if (out.status == IntSolve::kUnique) {
    // unique but non-integral: no integer solution exists
    out.status = IntSolve::kNone;
  }
  return out;
}

}  // namespace exact
}  // namespace positroid

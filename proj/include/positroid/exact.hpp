#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace positroid {
namespace exact {

using Rat = mpq_class;
using Int = mpz_class;

// Interned variable names; exponent vectors are dense in intern order.
class VarRegistry {
public:
  int intern(const std::string &name);
  int find(const std::string &name) const;  // -1 if absent
  const std::string &name(int i) const { return names_.at(i); }
  int size() const { return (int)names_.size(); }

private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

using RegistryPtr = std::shared_ptr<VarRegistry>;

// Exponent vector with trailing zeros trimmed, so equal monomials compare
// equal across registry growth.
using Expo = std::vector<int>;

Expo expo_mul(const Expo &a, const Expo &b);
Expo expo_div(const Expo &a, const Expo &b);

class RationalFn;

class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(RegistryPtr reg) : reg_(std::move(reg)) {}

  static LaurentPoly constant(RegistryPtr reg, const Rat &c);
  static LaurentPoly variable(RegistryPtr reg, int var, int power = 1);
  static LaurentPoly monomial(RegistryPtr reg, const Expo &e, const Rat &c);

  const RegistryPtr &registry() const { return reg_; }
  const std::map<Expo, Rat> &terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  int term_count() const { return (int)terms_.size(); }

  void add_term(const Expo &e, const Rat &c);

  LaurentPoly operator+(const LaurentPoly &o) const;
  LaurentPoly operator-(const LaurentPoly &o) const;
  LaurentPoly operator*(const LaurentPoly &o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly &o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly &o) const { return !(*this == o); }

  LaurentPoly pow(int e) const;  // e >= 0, or monomial with any e

  // per-variable minimum exponent over all terms (zero poly -> empty)
  Expo min_exponents() const;
  // divide every term by x^e (exact for Laurent polynomials)
  LaurentPoly shift(const Expo &e) const;

  // gcd of coefficient numerators / lcm-free content; positive
  Rat content() const;

  // which variable indices occur with nonzero exponent
  std::vector<int> support() const;

  Rat evaluate(const std::vector<Rat> &values) const;
  RationalFn substitute(const std::vector<const RationalFn *> &images) const;

  std::string str() const;  // canonical: graded lex on variable names

private:
  RegistryPtr reg_;
  std::map<Expo, Rat> terms_;
};

class RationalFn {
public:
  RationalFn() = default;
  RationalFn(LaurentPoly num, LaurentPoly den);
  explicit RationalFn(const LaurentPoly &num);

  static RationalFn constant(RegistryPtr reg, const Rat &c);
  static RationalFn variable(RegistryPtr reg, int var, int power = 1);

  const LaurentPoly &num() const { return num_; }
  const LaurentPoly &den() const { return den_; }
  const RegistryPtr &registry() const { return num_.registry(); }

  bool is_zero() const { return num_.is_zero(); }

  RationalFn operator+(const RationalFn &o) const;
  RationalFn operator-(const RationalFn &o) const;
  RationalFn operator*(const RationalFn &o) const;
  RationalFn operator/(const RationalFn &o) const;
  RationalFn operator-() const;

  RationalFn pow(int e) const;  // negative e swaps num/den

  Rat evaluate(const std::vector<Rat> &values) const;

  std::string str() const;

private:
  void normalize();

  LaurentPoly num_, den_;
};

// true iff f and g agree as rational functions: f.num*g.den == g.num*f.den
bool equal_rational(const RationalFn &f, const RationalFn &g);

// exact division in the Laurent ring: sets q with a == q*b and returns true,
// or returns false when b does not divide a (b must be nonzero)
bool try_divide(const LaurentPoly &a, const LaurentPoly &b, LaurentPoly &q);

// as above but throwing std::domain_error on inexact division
LaurentPoly divide_exact(const LaurentPoly &a, const LaurentPoly &b);

// Exact dense rational matrices (small sizes only).
struct RatMatrix {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), a(r * c, Rat(0)) {}

  Rat &at(int r, int c) { return a[r * cols + c]; }
  const Rat &at(int r, int c) const { return a[r * cols + c]; }

  static RatMatrix identity(int n);
  RatMatrix mul(const RatMatrix &o) const;
  RatMatrix transpose() const;
  int rank() const;
  Rat det() const;                 // square only
  RatMatrix inverse() const;       // square full-rank only
  // minor on the given column subset (size == rows)
  Rat minor_det(const std::vector<int> &col_subset) const;
};

// Exact linear solve A x = b over the rationals, integral answers only.
struct IntSolve {
  enum Status { kUnique, kUnderdetermined, kNone } status = kNone;
  bool has_solution = false;       // an integral particular solution below
  std::vector<Int> x;              // particular solution (free vars = 0)
  std::vector<int> free_cols;     // columns without pivots
};

IntSolve solve_integer_linear(const std::vector<std::vector<Int>> &A,
                              const std::vector<Int> &b);

}  // namespace exact
}  // namespace positroid

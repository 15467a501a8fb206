#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "macdual/rootdata.hpp"
#include "macdual/scalar.hpp"

namespace macdual {

using XExpo = std::vector<int>;

struct XGrlexLess {
  bool operator()(const XExpo& a, const XExpo& b) const {
    long sa = 0, sb = 0;
    for (int v : a) sa += v;
    for (int v : b) sb += v;
    if (sa != sb) return sa < sb;
    return a < b;
  }
};

// Laurent polynomial in N variables with Scalar coefficients.
class LaurentPoly {
 public:
  using Terms = std::map<XExpo, Scalar, XGrlexLess>;

  explicit LaurentPoly(int dim = 0) : dim_(dim) {}
  static LaurentPoly constant(int dim, const Scalar& c);
  static LaurentPoly monomial(const XExpo& e, const Scalar& c);
  static LaurentPoly var(int dim, int i, int power = 1);

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  Scalar coeff(const XExpo& e) const;
  const std::pair<const XExpo, Scalar>& leading() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly&) const;
  LaurentPoly operator-(const LaurentPoly&) const;
  LaurentPoly operator*(const LaurentPoly&) const;
  LaurentPoly& operator+=(const LaurentPoly&);
  LaurentPoly& operator-=(const LaurentPoly&);
  LaurentPoly mul_scalar(const Scalar& c) const;
  LaurentPoly mul_term(const XExpo& e, const Scalar& c) const;
  bool operator==(const LaurentPoly& o) const {
    return dim_ == o.dim_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // x_i -> q^{eps_i} x_i; multiplies each coefficient by Q^{2 <e, eps>}.
  LaurentPoly q_shift(const std::vector<int>& eps) const;

  // Exact quotient as Laurent polynomials; false if the division has a
  // remainder.
  bool try_exact_div(const LaurentPoly& d, LaurentPoly* quot) const;
  LaurentPoly exact_div(const LaurentPoly& d) const;

  Scalar eval(const std::vector<Scalar>& values) const;
  LaurentPoly specialize_coeffs(const ParamPoint& pt) const;

  std::string str() const;

 private:
  int dim_;
  Terms terms_;
  void insert(const XExpo& e, const Scalar& c);
};

// Finite group acting on exponent vectors: full symmetric group, signed
// permutations, or independent coordinate inversions.
struct GroupAction {
  Family family;
  int N;
  size_t order() const;
  // Calls fn once per group element with the image of e (repeats included).
  void for_each_image(const XExpo& e, const std::function<void(const XExpo&)>& fn) const;
};

GroupAction group_action(const TheoryKind& k);

// Plain orbit sum over all group elements, no normalization.
LaurentPoly symmetrize(const LaurentPoly& f, const GroupAction& g);

// Orbit-sum monomial basis element m_lambda: each distinct image of the
// leading monomial once, with coefficient 1.
LaurentPoly basis_monomial(const WeightLabel& label);

// Pieri multiplier: e_m for the symmetric family, e_m over {x_i, 1/x_i} for
// the signed family, x_l + 1/x_l for genus 2.
LaurentPoly elementary(const TheoryKind& kind, int m);

// Rational function of x kept as an unreduced pair; equality by
// cross-multiplication.
class LaurentRatio {
 public:
  LaurentRatio() : num_(0), den_(0) {}
  LaurentRatio(LaurentPoly n, LaurentPoly d);
  static LaurentRatio whole(LaurentPoly n);
  static LaurentRatio constant(int dim, const Scalar& c);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  int dim() const { return num_.dim(); }
  bool is_zero() const { return num_.is_zero(); }

  LaurentRatio operator+(const LaurentRatio&) const;
  LaurentRatio operator-(const LaurentRatio&) const;
  LaurentRatio operator*(const LaurentRatio&) const;
  LaurentRatio operator/(const LaurentRatio&) const;
  LaurentRatio operator-() const;
  bool operator==(const LaurentRatio& o) const;
  bool operator!=(const LaurentRatio& o) const { return !(*this == o); }

  LaurentRatio q_shift(const std::vector<int>& eps) const;
  Scalar eval(const std::vector<Scalar>& values) const;
  LaurentRatio specialize_coeffs(const ParamPoint& pt) const;

  // Common-monomial strip plus scaling so the denominator's leading
  // coefficient is one; stable form for serialization and display.
  LaurentRatio normalized() const;

  std::string str() const;

 private:
  LaurentPoly num_, den_;
};

} // namespace macdual

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "macdual/mpoly.hpp"

namespace macdual {

// Signed Laurent monomial in the coefficient generators, e.g. -T^2*Q^-1.
// Used for parameter tables, where roots like sqrt(q*a*b/(c*d)) must come
// out exactly or not at all.
struct Monomial {
  int sign = 1;  // +1 or -1
  Expo e{};      // may be negative

  static Monomial one() { return {}; }
  static Monomial gen(Gen g, int k = 1) {
    Monomial m;
    m.e[g] = k;
    return m;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r;
    r.sign = sign * o.sign;
    for (int i = 0; i < NGEN; i++) r.e[i] = e[i] + o.e[i];
    return r;
  }
  Monomial inv() const {
    Monomial r;
    r.sign = sign;
    for (int i = 0; i < NGEN; i++) r.e[i] = -e[i];
    return r;
  }
  Monomial operator/(const Monomial& o) const { return *this * o.inv(); }
  Monomial operator-() const {
    Monomial r = *this;
    r.sign = -r.sign;
    return r;
  }
  Monomial pow(int k) const;
  Monomial sqrt() const;  // fails unless sign is + and all exponents even
  bool operator==(const Monomial& o) const { return sign == o.sign && e == o.e; }
  std::string str() const;
};

class Scalar;

// Partial assignment of generator values, substituted simultaneously.
struct ParamPoint {
  std::map<int, Scalar> assign;
  ParamPoint& set(Gen g, const Scalar& v);
  ParamPoint& set(Gen g, const Monomial& v);
  const Scalar* find(Gen g) const;
};

// Element of the fraction field of Z[Q,T,A,B,C,D,S] / (S^2*Q^2 - A*B*C*D),
// kept in a canonical reduced form:
//   * numerator has S-degree <= 1, denominator is S-free,
//   * gcd of the three polynomial parts (num S-even, num S-odd, den) is 1,
//   * integer coefficients with collective content 1,
//   * denominator's leading coefficient is positive.
class Scalar {
 public:
  Scalar() : num_(), den_(mpq_class(1)) {}
  explicit Scalar(long v) : num_(mpq_class(v)), den_(mpq_class(1)) {}
  explicit Scalar(const mpq_class& v);
  Scalar(MPoly num, MPoly den);

  static Scalar gen(Gen g, int power = 1);
  static Scalar from_monomial(const Monomial& m);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_ == den_; }
  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  Scalar operator-() const;
  Scalar operator+(const Scalar&) const;
  Scalar operator-(const Scalar&) const;
  Scalar operator*(const Scalar&) const;
  Scalar operator/(const Scalar&) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;
  Scalar pow(int k) const;

  // Simultaneous substitution of generator values; names the offending
  // assignment if a denominator vanishes.
  Scalar specialize(const ParamPoint& pt) const;

  // T-degree of the value as T -> infinity (num degree minus den degree).
  // Meaningless for zero; callers check is_zero first.
  int t_degree() const;
  // Exact limit of (*this) * T^k as T -> infinity. Fails (divergent-limit)
  // if the T-degree plus k is positive; zero if negative.
  Scalar t_infinity_leading(int k) const;

  // True if the value involves the given generator at all.
  bool depends_on(Gen g) const { return num_.depends_on(g) || den_.depends_on(g); }

  std::string str() const;
  size_t hash() const { return num_.hash() * 1000003u + den_.hash(); }

 private:
  MPoly num_, den_;
  void reduce();
};

inline Scalar operator*(long a, const Scalar& b) { return Scalar(a) * b; }

// Parameter tables for the one-variable-family operators that take four
// parameters (a, b, c, d) plus the distinguished square root sigma of
// a*b*c*d/q. All entries are signed monomials so the dual parameter set
// (which involves square roots of monomial ratios) stays in the field.
struct KoornwinderParams {
  std::string name;
  Monomial a, b, c, d, sigma;
  KoornwinderParams star() const;  // the dual parameter set; an involution
};

// Known presets: DN1, BN1, CN1, A2N-1, DN+12, A2N2, generic.
KoornwinderParams koornwinder_preset(const std::string& name);
std::vector<std::string> koornwinder_preset_names();

// The fully symbolic parameter set: the four letters themselves plus the
// distinguished root S. Its star() leaves the monomial lattice, so duals
// are only taken after substituting a preset.
KoornwinderParams koornwinder_abstract();

// Assignment sending the four parameter letters and S to the preset values.
ParamPoint param_point(const KoornwinderParams& p);

} // namespace macdual

#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace macdual {

// Coefficient-field generators. Q and T are square roots of the two base
// deformation parameters; A..D are the four-parameter family's letters and
// S is the distinguished square root with S^2 * Q^2 = A*B*C*D.
enum Gen : int { GQ = 0, GT, GA, GB, GC, GD, GS, NGEN };

extern const char* const kGenName[NGEN];

using Expo = std::array<int32_t, NGEN>;

struct GrlexLess {
  bool operator()(const Expo& a, const Expo& b) const {
    long da = 0, db = 0;
    for (int i = 0; i < NGEN; i++) { da += a[i]; db += b[i]; }
    if (da != db) return da < db;
    for (int i = NGEN - 1; i >= 0; i--)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

// Sparse polynomial over Q in the seven generators, non-negative exponents.
class MPoly {
 public:
  using Terms = std::map<Expo, mpq_class, GrlexLess>;

  MPoly() = default;
  explicit MPoly(const mpq_class& c);
  static MPoly gen(Gen g, int power = 1);
  static MPoly monomial(const Expo& e, const mpq_class& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial_term() const { return terms_.size() == 1; }
  const Terms& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  mpq_class constant_value() const;

  int degree(int g) const;        // -1 for zero
  int total_degree() const;       // -1 for zero
  bool depends_on(int g) const { return degree(g) > 0; }
  const std::pair<const Expo, mpq_class>& leading() const;  // grlex-largest

  MPoly operator-() const;
  MPoly operator+(const MPoly&) const;
  MPoly operator-(const MPoly&) const;
  MPoly operator*(const MPoly&) const;
  MPoly& operator+=(const MPoly&);
  MPoly& operator-=(const MPoly&);
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(terms_ == o.terms_); }

  MPoly mul_coeff(const mpq_class&) const;
  MPoly mul_monomial(const Expo&, const mpq_class&) const;

  // Quotient when the division is exact; error (division-remainder) if not.
  MPoly exact_div(const MPoly& d) const;
  bool try_exact_div(const MPoly& d, MPoly* quot) const;

  // Rational content and the integer-primitive cofactor (content positive).
  void int_primitive(mpq_class* content, MPoly* primitive) const;

  int min_degree(int g) const;              // 0 for zero
  MPoly coeff_of(int g, int k) const;       // coefficient of g^k, g removed
  MPoly top_coeff(int g) const { return coeff_of(g, degree(g)); }
  MPoly subst_power_shift(int g, int delta) const;  // multiply by g^delta

  static MPoly gcd(const MPoly& a, const MPoly& b);

  std::string str() const;
  size_t hash() const;

 private:
  Terms terms_;
  void strip_zero();
  friend MPoly gcd_impl(MPoly a, MPoly b);
};

} // namespace macdual

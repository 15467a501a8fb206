#pragma once

#include <map>
#include <string>
#include <vector>

#include "macdual/laurent.hpp"
#include "macdual/rootdata.hpp"
#include "macdual/scalar.hpp"

namespace macdual {

// Formal series supported on a translation cone, truncated by height.
// A term keyed by cone element alpha stands for coeff * x^{dir * alpha};
// dir = -1 is the default (series in inverse powers along the cone),
// dir = +1 is used for the plus-side weight function.
class ConeSeries {
 public:
  ConeSeries(TheoryKind kind, int cutoff, int dir = -1);
  static ConeSeries one(const TheoryKind& kind, int cutoff, int dir = -1);

  const TheoryKind& kind() const { return kind_; }
  int cutoff() const { return cutoff_; }
  int dir() const { return dir_; }
  const std::map<std::vector<int>, Scalar>& terms() const { return terms_; }

  Scalar coeff(const std::vector<int>& alpha) const;
  Scalar constant_term() const;
  void set_coeff(const std::vector<int>& alpha, const Scalar& c);

  ConeSeries operator+(const ConeSeries&) const;
  ConeSeries operator-(const ConeSeries&) const;
  ConeSeries operator*(const ConeSeries&) const;
  ConeSeries mul_scalar(const Scalar& c) const;
  // Needs an invertible constant term.
  ConeSeries inverse() const;
  ConeSeries truncated(int cutoff) const;
  // x_i -> q^{eps_i} x_i.
  ConeSeries q_shift(const std::vector<int>& eps) const;
  bool operator==(const ConeSeries& o) const;
  bool operator!=(const ConeSeries& o) const { return !(*this == o); }

  std::string str() const;

 private:
  TheoryKind kind_;
  int cutoff_;
  int dir_;
  std::map<std::vector<int>, Scalar> terms_;  // key: cone element
  int height_of(const std::vector<int>& alpha) const;  // validates membership
};

// One infinite factor prod_{n >= n0} (1 - c q^{base_k n} x^{arg})^{expo}.
struct PochFactor {
  Monomial c;
  std::vector<int> arg;  // literal exponent vector of the x-monomial
  int base_k = 1;        // steps run over powers of q^{base_k}
  int expo = 1;          // +1 in the numerator, -1 in the denominator
  int n0 = 0;
  int dir = -1;          // series direction; dir*arg must lie in the cone
};

// Expand one factor as a ConeSeries. dir*arg must be a cone element of
// positive height, else Domain.
ConeSeries pochhammer_series(const PochFactor& f, const TheoryKind& kind, int cutoff);

// The four weight-function families.
struct DeltaFamily {
  enum class Tag { A, APlus, K, G2 };
  Tag tag;
  int N;
  KoornwinderParams params;  // only read when tag == K

  static DeltaFamily a(int N);
  static DeltaFamily a_plus(int N);
  static DeltaFamily k(int N, KoornwinderParams p);
  static DeltaFamily g2();

  TheoryKind kind() const;
  int dir() const { return tag == Tag::APlus ? +1 : -1; }
  std::string str() const;
};

std::vector<PochFactor> delta_factors(const DeltaFamily& fam);

// Cone expansion of the weight function; the plus-side family expands with
// dir = +1 (its factors live on the opposite side of the cone).
ConeSeries delta_series(const DeltaFamily& fam, int cutoff);

// Delta(x) / Delta(q^eps x) as an exact rational function: each infinite
// factor pairs with its shifted partner and telescopes to a finite product.
LaurentRatio delta_shift_ratio(const DeltaFamily& fam, const std::vector<int>& eps);

// The same telescoped product left as its binomial factors (appended to *num
// and *den), for evaluations that must cancel factor against factor instead
// of reducing one expanded ratio.
void delta_shift_ratio_factors(const DeltaFamily& fam, const std::vector<int>& eps,
                               std::vector<LaurentPoly>* num,
                               std::vector<LaurentPoly>* den);

// Delta(q^{from} t^rho) / Delta(q^{to} t^rho), exact.
Scalar delta_ratio_at(const DeltaFamily& fam, const WeightLabel& from,
                      const WeightLabel& to);
// Same ratio at raw integer vectors; `from` may sit outside the dominant
// cone (the numerator then usually vanishes and the ratio is zero).
Scalar delta_ratio_at(const DeltaFamily& fam, const std::vector<int>& from,
                      const std::vector<int>& to);

// Coefficient series of the conjugated shift: D(q^shift x) / D(x).
ConeSeries conjugation_coefficient(const ConeSeries& D, const std::vector<int>& shift);

// Expand a rational function in the cone's asymptotic region. Domain if a
// unique extreme monomial is missing or the quotient has a monomial prefix.
ConeSeries rational_to_cone(const LaurentRatio& r, const TheoryKind& kind, int cutoff,
                            int dir = -1);

} // namespace macdual

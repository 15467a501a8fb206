#include "macdual/scalar.hpp"

#include <sstream>

#include "macdual/error.hpp"

namespace macdual {

Monomial Monomial::pow(int k) const {
  Monomial r;
  r.sign = (k % 2 == 0) ? 1 : sign;
  for (int i = 0; i < NGEN; i++) r.e[i] = e[i] * k;
  return r;
}

Monomial Monomial::sqrt() const {
  if (sign != 1) fail(ErrKind::Domain, "square root of a negative monomial: " + str());
  Monomial r;
  for (int i = 0; i < NGEN; i++) {
    if (e[i] % 2 != 0)
      fail(ErrKind::Domain, "monomial is not a perfect square: " + str());
    r.e[i] = e[i] / 2;
  }
  return r;
}

std::string Monomial::str() const {
  std::ostringstream os;
  if (sign < 0) os << "-";
  bool any = false;
  for (int i = 0; i < NGEN; i++) {
    if (e[i] == 0) continue;
    if (any) os << "*";
    any = true;
    os << kGenName[i];
    if (e[i] != 1) os << "^" << e[i];
  }
  if (!any) os << "1";
  return os.str();
}

ParamPoint& ParamPoint::set(Gen g, const Scalar& v) {
  assign[g] = v;
  return *this;
}

ParamPoint& ParamPoint::set(Gen g, const Monomial& v) {
  assign[g] = Scalar::from_monomial(v);
  return *this;
}

const Scalar* ParamPoint::find(Gen g) const {
  auto it = assign.find(g);
  return it == assign.end() ? nullptr : &it->second;
}

Scalar::Scalar(const mpq_class& v) : num_(v), den_(mpq_class(1)) { reduce(); }

Scalar::Scalar(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  reduce();
}

Scalar Scalar::gen(Gen g, int power) {
  return from_monomial(Monomial::gen(g, power));
}

Scalar Scalar::from_monomial(const Monomial& m) {
  Expo pos{}, neg{};
  for (int i = 0; i < NGEN; i++) {
    if (m.e[i] > 0) pos[i] = m.e[i];
    else neg[i] = -m.e[i];
  }
  return Scalar(MPoly::monomial(pos, m.sign), MPoly::monomial(neg, 1));
}

namespace {

// S^(2m+r) -> (ABCD)^m S^r Q^(-2m); the Q deficit is evened out inside the
// polynomial by padding every term up to the worst case, reported to the
// caller so the fraction can be rebalanced.
MPoly rewrite_s(const MPoly& p, int* qdeficit) {
  int maxm = 0;
  for (auto& [e, c] : p.terms()) maxm = std::max(maxm, int(e[GS]) / 2);
  *qdeficit = 2 * maxm;
  if (maxm == 0) return p;
  MPoly r;
  for (auto& [e, c] : p.terms()) {
    int m = e[GS] / 2;
    Expo e2 = e;
    e2[GS] = e[GS] % 2;
    e2[GA] += m;
    e2[GB] += m;
    e2[GC] += m;
    e2[GD] += m;
    e2[GQ] += 2 * (maxm - m);
    r += MPoly::monomial(e2, c);
  }
  return r;
}

MPoly abcd_poly() {
  Expo e{};
  e[GA] = e[GB] = e[GC] = e[GD] = 1;
  return MPoly::monomial(e, 1);
}

} // namespace

void Scalar::reduce() {
  if (den_.is_zero()) fail(ErrKind::NotInvertible, "zero denominator");
  if (num_.is_zero()) {
    den_ = MPoly(mpq_class(1));
    return;
  }

  int qn = 0, qd = 0;
  MPoly n = rewrite_s(num_, &qn);
  MPoly d = rewrite_s(den_, &qd);
  int common = std::min(qn, qd);
  qn -= common;
  qd -= common;
  if (qd) n = n.subst_power_shift(GQ, qd);
  if (qn) d = d.subst_power_shift(GQ, qn);

  if (d.degree(GS) > 0) {
    // conjugate by (d0 - S d1); S^2 d1^2 = ABCD d1^2 / Q^2, so scale by Q^2
    MPoly d0 = d.coeff_of(GS, 0), d1 = d.coeff_of(GS, 1);
    MPoly n0 = n.coeff_of(GS, 0), n1 = n.coeff_of(GS, 1);
    MPoly abcd = abcd_poly();
    Expo q2{};
    q2[GQ] = 2;
    Expo s1{};
    s1[GS] = 1;
    MPoly even = (n0 * d0).mul_monomial(q2, 1) - abcd * (n1 * d1);
    MPoly odd = (n1 * d0 - n0 * d1).mul_monomial(q2, 1);
    n = even + odd * MPoly::monomial(s1, 1);
    d = (d0 * d0).mul_monomial(q2, 1) - abcd * (d1 * d1);
    if (d.is_zero()) fail(ErrKind::Internal, "conjugation annihilated a denominator");
  }

  MPoly g = MPoly::gcd(n, d);
  if (!(g.is_constant())) {
    n = n.exact_div(g);
    d = d.exact_div(g);
  }

  mpq_class cn, cd;
  MPoly pn, pd;
  n.int_primitive(&cn, &pn);
  d.int_primitive(&cd, &pd);
  mpz_class gnum, dlcm;
  mpz_gcd(gnum.get_mpz_t(), cn.get_num_mpz_t(), cd.get_num_mpz_t());
  mpz_lcm(dlcm.get_mpz_t(), cn.get_den_mpz_t(), cd.get_den_mpz_t());
  mpq_class gc(gnum, dlcm);
  gc.canonicalize();
  n = pn.mul_coeff(cn / gc);
  d = pd.mul_coeff(cd / gc);

  if (d.leading().second < 0) {
    n = -n;
    d = -d;
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) fail(ErrKind::NotInvertible, "division by zero");
  return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrKind::NotInvertible, "inverse of zero");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar r(1);
  Scalar base = *this;
  while (k) {
    if (k & 1) r *= base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

Scalar Scalar::specialize(const ParamPoint& pt) const {
  auto eval = [&pt](const MPoly& p) -> Scalar {
    Scalar acc;
    for (auto& [e, c] : p.terms()) {
      Scalar term{c};
      for (int g = 0; g < NGEN; g++) {
        if (e[g] == 0) continue;
        if (const Scalar* v = pt.find(Gen(g))) term *= v->pow(e[g]);
        else term *= Scalar::gen(Gen(g), e[g]);
      }
      acc += term;
    }
    return acc;
  };
  Scalar dv = eval(den_);
  if (dv.is_zero()) {
    std::string where;
    for (auto& [g, v] : pt.assign) where += std::string(kGenName[g]) + "=" + v.str() + " ";
    fail(ErrKind::Pole, "denominator (" + den_.str() + ") vanishes at " + where);
  }
  return eval(num_) / dv;
}

int Scalar::t_degree() const {
  return num_.degree(GT) - den_.degree(GT);
}

Scalar Scalar::t_infinity_leading(int k) const {
  if (is_zero()) return Scalar();
  int d = t_degree() + k;
  if (d > 0)
    fail(ErrKind::DivergentLimit,
         "value grows like T^" + std::to_string(d) + " in the large-T limit: " + str());
  if (d < 0) return Scalar();
  return Scalar(num_.top_coeff(GT), den_.top_coeff(GT));
}

std::string Scalar::str() const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
  std::string n = num_.size() > 1 ? "(" + num_.str() + ")" : num_.str();
  return n + "/(" + den_.str() + ")";
}

KoornwinderParams KoornwinderParams::star() const {
  Monomial q = Monomial::gen(GQ, 2);
  KoornwinderParams r;
  r.name = name + "*";
  r.a = sigma;
  r.b = -((q * a * b / (c * d)).sqrt());
  r.c = (q * a * c / (b * d)).sqrt();
  r.d = -((q * a * d / (b * c)).sqrt());
  r.sigma = a;
  return r;
}

KoornwinderParams koornwinder_preset(const std::string& name) {
  const Monomial one = Monomial::one();
  const Monomial Q = Monomial::gen(GQ);
  const Monomial T = Monomial::gen(GT);
  if (name == "DN1") return {name, one, -one, Q, -Q, one};
  if (name == "BN1") return {name, T.pow(2), -one, Q, -Q, T};
  if (name == "CN1") return {name, T, -T, T * Q, -(T * Q), T.pow(2)};
  if (name == "A2N-1") return {name, T, -T, Q, -Q, T};
  if (name == "DN+12") return {name, T.pow(2), -one, T.pow(2) * Q, -Q, T.pow(2)};
  if (name == "A2N2") return {name, T.pow(2), -one, T * Q, -(T * Q), T.pow(2)};
  if (name == "generic") {
    Monomial A = Monomial::gen(GA), B = Monomial::gen(GB);
    Monomial C = Monomial::gen(GC), D = Monomial::gen(GD);
    return {name, A.pow(2), -B.pow(2), C.pow(2), -D.pow(2), A * B * C * D / Q};
  }
  fail(ErrKind::Unsupported, "unknown parameter preset: " + name);
}

std::vector<std::string> koornwinder_preset_names() {
  return {"DN1", "BN1", "CN1", "A2N-1", "DN+12", "A2N2", "generic"};
}

KoornwinderParams koornwinder_abstract() {
  return {"abstract", Monomial::gen(GA), Monomial::gen(GB), Monomial::gen(GC),
          Monomial::gen(GD), Monomial::gen(GS)};
}

ParamPoint param_point(const KoornwinderParams& p) {
  ParamPoint pt;
  pt.set(GA, p.a).set(GB, p.b).set(GC, p.c).set(GD, p.d).set(GS, p.sigma);
  return pt;
}

} // namespace macdual

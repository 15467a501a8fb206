#include "macdual/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "macdual/error.hpp"

namespace macdual {

LaurentPoly LaurentPoly::constant(int dim, const Scalar& c) {
  LaurentPoly p(dim);
  p.insert(XExpo(dim, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const XExpo& e, const Scalar& c) {
  LaurentPoly p(int(e.size()));
  p.insert(e, c);
  return p;
}

LaurentPoly LaurentPoly::var(int dim, int i, int power) {
  if (i < 0 || i >= dim) fail(ErrKind::MalformedInput, "variable index out of range");
  XExpo e(dim, 0);
  e[i] = power;
  return monomial(e, Scalar(1));
}

void LaurentPoly::insert(const XExpo& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar LaurentPoly::coeff(const XExpo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

const std::pair<const XExpo, Scalar>& LaurentPoly::leading() const {
  if (terms_.empty()) fail(ErrKind::Internal, "leading term of zero");
  return *terms_.rbegin();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(dim_);
  for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (dim_ != o.dim_) fail(ErrKind::MalformedInput, "dimension mismatch");
  for (auto& [e, c] : o.terms_) insert(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (dim_ != o.dim_) fail(ErrKind::MalformedInput, "dimension mismatch");
  for (auto& [e, c] : o.terms_) insert(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (dim_ != o.dim_) fail(ErrKind::MalformedInput, "dimension mismatch");
  LaurentPoly r(dim_);
  XExpo e(dim_);
  for (auto& [ea, ca] : terms_)
    for (auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < dim_; i++) e[i] = ea[i] + eb[i];
      r.insert(e, ca * cb);
    }
  return r;
}

LaurentPoly LaurentPoly::mul_scalar(const Scalar& c) const {
  LaurentPoly r(dim_);
  if (c.is_zero()) return r;
  for (auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

LaurentPoly LaurentPoly::mul_term(const XExpo& e, const Scalar& c) const {
  LaurentPoly r(dim_);
  if (c.is_zero()) return r;
  XExpo e2(dim_);
  for (auto& [ea, ca] : terms_) {
    for (int i = 0; i < dim_; i++) e2[i] = ea[i] + e[i];
    r.terms_.emplace(e2, ca * c);
  }
  return r;
}

LaurentPoly LaurentPoly::q_shift(const std::vector<int>& eps) const {
  if (int(eps.size()) != dim_) fail(ErrKind::MalformedInput, "shift dimension mismatch");
  LaurentPoly r(dim_);
  for (auto& [e, c] : terms_) {
    long dot = 0;
    for (int i = 0; i < dim_; i++) dot += long(e[i]) * eps[i];
    r.terms_.emplace(e, c * Scalar::gen(GQ, int(2 * dot)));
  }
  return r;
}

bool LaurentPoly::try_exact_div(const LaurentPoly& d, LaurentPoly* quot) const {
  if (d.is_zero()) fail(ErrKind::MalformedInput, "division by zero");
  if (dim_ != d.dim_) fail(ErrKind::MalformedInput, "dimension mismatch");
  if (is_zero()) {
    *quot = LaurentPoly(dim_);
    return true;
  }
  // Strip per-variable minimal exponents; an exact Laurent quotient of the
  // stripped parts is an ordinary polynomial, so plain division terminates.
  XExpo mf(dim_, 0), md(dim_, 0);
  auto mins = [this](const LaurentPoly& p, XExpo& m) {
    m = p.terms_.begin()->first;
    for (auto& [e, c] : p.terms_)
      for (int i = 0; i < p.dim_; i++) m[i] = std::min(m[i], e[i]);
  };
  mins(*this, mf);
  mins(d, md);
  XExpo neg_mf(dim_), neg_md(dim_), off(dim_);
  for (int i = 0; i < dim_; i++) {
    neg_mf[i] = -mf[i];
    neg_md[i] = -md[i];
    off[i] = mf[i] - md[i];
  }
  LaurentPoly F = mul_term(neg_mf, Scalar(1));
  LaurentPoly D = d.mul_term(neg_md, Scalar(1));

  LaurentPoly q(dim_), r = F;
  const auto& [de, dc] = D.leading();
  XExpo e(dim_);
  while (!r.is_zero()) {
    const auto& [re, rc] = r.leading();
    for (int i = 0; i < dim_; i++) {
      e[i] = re[i] - de[i];
      if (e[i] < 0) return false;
    }
    Scalar c = rc / dc;
    q.insert(e, c);
    r -= D.mul_term(e, c);
  }
  *quot = q.mul_term(off, Scalar(1));
  return true;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
  LaurentPoly q(dim_);
  if (!try_exact_div(d, &q))
    fail(ErrKind::DivisionRemainder, "inexact division: (" + str() + ") / (" + d.str() + ")");
  return q;
}

Scalar LaurentPoly::eval(const std::vector<Scalar>& values) const {
  if (int(values.size()) != dim_) fail(ErrKind::MalformedInput, "evaluation dimension mismatch");
  Scalar acc;
  for (auto& [e, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < dim_; i++)
      if (e[i] != 0) t *= values[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

LaurentPoly LaurentPoly::specialize_coeffs(const ParamPoint& pt) const {
  LaurentPoly r(dim_);
  for (auto& [e, c] : terms_) r.insert(e, c.specialize(pt));
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    for (int i = 0; i < dim_; i++) {
      if (it->first[i] == 0) continue;
      os << "*x" << (i + 1);
      if (it->first[i] != 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

size_t GroupAction::order() const {
  auto fact = [](int n) {
    size_t f = 1;
    for (int i = 2; i <= n; i++) f *= i;
    return f;
  };
  switch (family) {
    case Family::TypeA: return fact(N);
    case Family::Koornwinder: return fact(N) << N;
    case Family::GenusTwo: return 8;
  }
  return 0;
}

void GroupAction::for_each_image(const XExpo& e,
                                 const std::function<void(const XExpo&)>& fn) const {
  if (int(e.size()) != N) fail(ErrKind::MalformedInput, "dimension mismatch");
  if (family == Family::GenusTwo) {
    XExpo img(3);
    for (int mask = 0; mask < 8; mask++) {
      for (int i = 0; i < 3; i++) img[i] = (mask >> i) & 1 ? -e[i] : e[i];
      fn(img);
    }
    return;
  }
  std::vector<int> perm(N);
  std::iota(perm.begin(), perm.end(), 0);
  XExpo img(N);
  do {
    if (family == Family::TypeA) {
      for (int i = 0; i < N; i++) img[perm[i]] = e[i];
      fn(img);
    } else {
      for (int mask = 0; mask < (1 << N); mask++) {
        for (int i = 0; i < N; i++)
          img[perm[i]] = (mask >> i) & 1 ? -e[i] : e[i];
        fn(img);
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

GroupAction group_action(const TheoryKind& k) { return {k.family, k.dim()}; }

LaurentPoly symmetrize(const LaurentPoly& f, const GroupAction& g) {
  if (f.dim() != g.N) fail(ErrKind::MalformedInput, "dimension mismatch");
  LaurentPoly r(f.dim());
  for (auto& [e, c] : f.terms()) {
    g.for_each_image(e, [&](const XExpo& img) { r += LaurentPoly::monomial(img, c); });
  }
  return r;
}

LaurentPoly basis_monomial(const WeightLabel& label) {
  XExpo lead = leading_exponent(label);
  GroupAction g = group_action(label.kind);
  std::set<XExpo> orbit;
  g.for_each_image(lead, [&](const XExpo& img) { orbit.insert(img); });
  LaurentPoly r(label.kind.dim());
  for (auto& e : orbit) r += LaurentPoly::monomial(e, Scalar(1));
  return r;
}

LaurentPoly elementary(const TheoryKind& kind, int m) {
  const int N = kind.dim();
  if (kind.family == Family::GenusTwo) {
    if (m < 1 || m > 3) fail(ErrKind::MalformedInput, "index out of range");
    return LaurentPoly::var(3, m - 1) + LaurentPoly::var(3, m - 1, -1);
  }
  int bound = kind.family == Family::TypeA ? N : 2 * N;
  if (m < 1 || m > bound) fail(ErrKind::MalformedInput, "elementary degree out of range");
  std::vector<LaurentPoly> vals;
  for (int i = 0; i < N; i++) {
    vals.push_back(LaurentPoly::var(N, i));
    if (kind.family == Family::Koornwinder) vals.push_back(LaurentPoly::var(N, i, -1));
  }
  // coefficient of y^m in prod (1 + y v)
  std::vector<LaurentPoly> acc(size_t(m) + 1, LaurentPoly(N));
  acc[0] = LaurentPoly::constant(N, Scalar(1));
  for (auto& v : vals)
    for (int k = std::min<int>(m, 1 + int(&v - vals.data())); k >= 1; k--)
      acc[k] += acc[k - 1] * v;
  return acc[m];
}

LaurentRatio::LaurentRatio(LaurentPoly n, LaurentPoly d)
    : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) fail(ErrKind::NotInvertible, "zero denominator");
  if (num_.dim() != den_.dim()) fail(ErrKind::MalformedInput, "dimension mismatch");
}

LaurentRatio LaurentRatio::whole(LaurentPoly n) {
  int d = n.dim();
  return LaurentRatio(std::move(n), LaurentPoly::constant(d, Scalar(1)));
}

LaurentRatio LaurentRatio::constant(int dim, const Scalar& c) {
  return LaurentRatio(LaurentPoly::constant(dim, c), LaurentPoly::constant(dim, Scalar(1)));
}

LaurentRatio LaurentRatio::operator+(const LaurentRatio& o) const {
  return LaurentRatio(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

LaurentRatio LaurentRatio::operator-(const LaurentRatio& o) const {
  return LaurentRatio(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

LaurentRatio LaurentRatio::operator*(const LaurentRatio& o) const {
  return LaurentRatio(num_ * o.num_, den_ * o.den_);
}

LaurentRatio LaurentRatio::operator/(const LaurentRatio& o) const {
  if (o.num_.is_zero()) fail(ErrKind::NotInvertible, "division by zero");
  return LaurentRatio(num_ * o.den_, den_ * o.num_);
}

LaurentRatio LaurentRatio::operator-() const { return LaurentRatio(-num_, den_); }

bool LaurentRatio::operator==(const LaurentRatio& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

LaurentRatio LaurentRatio::q_shift(const std::vector<int>& eps) const {
  return LaurentRatio(num_.q_shift(eps), den_.q_shift(eps));
}

Scalar LaurentRatio::eval(const std::vector<Scalar>& values) const {
  Scalar d = den_.eval(values);
  if (d.is_zero()) fail(ErrKind::Pole, "denominator vanishes at the evaluation point");
  return num_.eval(values) / d;
}

LaurentRatio LaurentRatio::specialize_coeffs(const ParamPoint& pt) const {
  LaurentPoly d = den_.specialize_coeffs(pt);
  if (d.is_zero()) fail(ErrKind::Pole, "denominator vanishes under substitution");
  return LaurentRatio(num_.specialize_coeffs(pt), d);
}

LaurentRatio LaurentRatio::normalized() const {
  if (num_.is_zero()) {
    int d = dim();
    return LaurentRatio(LaurentPoly(d), LaurentPoly::constant(d, Scalar(1)));
  }
  const int d = dim();
  XExpo m(d, 0);
  bool first = true;
  for (auto* p : {&num_, &den_})
    for (auto& [e, c] : p->terms()) {
      for (int i = 0; i < d; i++) m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
  for (int i = 0; i < d; i++) m[i] = -m[i];
  LaurentPoly n2 = num_.mul_term(m, Scalar(1));
  LaurentPoly d2 = den_.mul_term(m, Scalar(1));
  Scalar lc = d2.leading().second;
  return LaurentRatio(n2.mul_scalar(lc.inverse()), d2.mul_scalar(lc.inverse()));
}

std::string LaurentRatio::str() const {
  return "[" + num_.str() + "] / [" + den_.str() + "]";
}

} // namespace macdual

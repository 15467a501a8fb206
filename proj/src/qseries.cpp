#include "macdual/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "macdual/error.hpp"

namespace macdual {

namespace {

std::vector<int> scaled(const std::vector<int>& v, int s) {
  std::vector<int> r(v.size());
  for (size_t i = 0; i < v.size(); i++) r[i] = s * v[i];
  return r;
}

std::vector<int> vadd(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (size_t i = 0; i < a.size(); i++) r[i] = a[i] + b[i];
  return r;
}

std::vector<int> vsub(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (size_t i = 0; i < a.size(); i++) r[i] = a[i] - b[i];
  return r;
}

long vdot(const std::vector<int>& a, const std::vector<int>& b) {
  long s = 0;
  for (size_t i = 0; i < a.size(); i++) s += (long)a[i] * b[i];
  return s;
}

std::string vec_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); i++) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

} // namespace

ConeSeries::ConeSeries(TheoryKind kind, int cutoff, int dir)
    : kind_(kind), cutoff_(cutoff), dir_(dir) {
  if (cutoff < 0 || (dir != 1 && dir != -1))
    fail(ErrKind::MalformedInput, "bad cone series parameters");
}

ConeSeries ConeSeries::one(const TheoryKind& kind, int cutoff, int dir) {
  ConeSeries s(kind, cutoff, dir);
  s.terms_[std::vector<int>(kind.dim(), 0)] = Scalar(1);
  return s;
}

int ConeSeries::height_of(const std::vector<int>& alpha) const {
  int h = 0;
  if ((int)alpha.size() != kind_.dim() || !in_cone(kind_, alpha, &h))
    fail(ErrKind::Domain, "exponent " + vec_str(alpha) + " outside the " +
                              kind_.str() + " cone");
  return h;
}

Scalar ConeSeries::coeff(const std::vector<int>& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Scalar() : it->second;
}

Scalar ConeSeries::constant_term() const {
  return coeff(std::vector<int>(kind_.dim(), 0));
}

void ConeSeries::set_coeff(const std::vector<int>& alpha, const Scalar& c) {
  int h = height_of(alpha);
  if (h > cutoff_) return;  // beyond the truncation order
  if (c.is_zero()) terms_.erase(alpha);
  else terms_[alpha] = c;
}

ConeSeries ConeSeries::operator+(const ConeSeries& o) const {
  if (kind_ != o.kind_ || dir_ != o.dir_)
    fail(ErrKind::Domain, "mixed cone series");
  ConeSeries r = truncated(std::min(cutoff_, o.cutoff_));
  for (const auto& [a, c] : o.terms_) {
    if (r.height_of(a) > r.cutoff_) continue;
    Scalar s = r.coeff(a) + c;
    if (s.is_zero()) r.terms_.erase(a);
    else r.terms_[a] = s;
  }
  return r;
}

ConeSeries ConeSeries::operator-(const ConeSeries& o) const {
  return *this + o.mul_scalar(Scalar(-1));
}

ConeSeries ConeSeries::operator*(const ConeSeries& o) const {
  if (kind_ != o.kind_ || dir_ != o.dir_)
    fail(ErrKind::Domain, "mixed cone series");
  ConeSeries r(kind_, std::min(cutoff_, o.cutoff_), dir_);
  std::vector<std::tuple<const std::vector<int>*, const Scalar*, int>> lhs, rhs;
  for (const auto& t : terms_) lhs.push_back({&t.first, &t.second, height_of(t.first)});
  for (const auto& t : o.terms_)
    rhs.push_back({&t.first, &t.second, o.height_of(t.first)});
  for (const auto& [ea, ca, ha] : lhs)
    for (const auto& [eb, cb, hb] : rhs) {
      if (ha + hb > r.cutoff_) continue;
      std::vector<int> key = vadd(*ea, *eb);
      Scalar s = r.coeff(key) + *ca * *cb;
      if (s.is_zero()) r.terms_.erase(key);
      else r.terms_[key] = s;
    }
  return r;
}

ConeSeries ConeSeries::mul_scalar(const Scalar& c) const {
  ConeSeries r(kind_, cutoff_, dir_);
  if (c.is_zero()) return r;
  for (const auto& [a, v] : terms_) r.terms_[a] = v * c;
  return r;
}

ConeSeries ConeSeries::inverse() const {
  Scalar d0 = constant_term();
  if (d0.is_zero())
    fail(ErrKind::NotInvertible, "cone series with zero constant term");
  Scalar inv0 = d0.inverse();
  ConeSeries r(kind_, cutoff_, dir_);
  const std::vector<int> zero(kind_.dim(), 0);
  r.terms_[zero] = inv0;
  for (const auto& alpha : cone_elements(kind_, cutoff_)) {
    if (alpha == zero) continue;
    Scalar acc;
    for (const auto& [beta, db] : terms_) {
      if (beta == zero) continue;
      std::vector<int> gamma = vsub(alpha, beta);
      if (!in_cone(kind_, gamma)) continue;
      auto it = r.terms_.find(gamma);
      if (it != r.terms_.end()) acc += db * it->second;
    }
    if (!acc.is_zero()) r.terms_[alpha] = -(acc * inv0);
  }
  return r;
}

ConeSeries ConeSeries::truncated(int cutoff) const {
  if (cutoff > cutoff_)
    fail(ErrKind::Domain, "cannot extend a truncated series");
  ConeSeries r(kind_, cutoff, dir_);
  for (const auto& [a, c] : terms_)
    if (height_of(a) <= cutoff) r.terms_[a] = c;
  return r;
}

ConeSeries ConeSeries::q_shift(const std::vector<int>& eps) const {
  if ((int)eps.size() != kind_.dim())
    fail(ErrKind::MalformedInput, "shift dimension mismatch");
  ConeSeries r(kind_, cutoff_, dir_);
  for (const auto& [a, c] : terms_)
    r.terms_[a] = c * Scalar::gen(GQ, 2 * dir_ * (int)vdot(eps, a));
  return r;
}

bool ConeSeries::operator==(const ConeSeries& o) const {
  return kind_ == o.kind_ && dir_ == o.dir_ && cutoff_ == o.cutoff_ &&
         terms_ == o.terms_;
}

std::string ConeSeries::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool con = std::all_of(a.begin(), a.end(), [](int v) { return v == 0; });
    if (con) {
      os << c.str();
    } else {
      os << "(" << c.str() << ")*x^" << vec_str(scaled(a, dir_));
    }
  }
  return os.str();
}

ConeSeries pochhammer_series(const PochFactor& f, const TheoryKind& kind, int cutoff) {
  if ((int)f.arg.size() != kind.dim())
    fail(ErrKind::MalformedInput, "factor dimension mismatch");
  std::vector<int> key = scaled(f.arg, f.dir);
  int h = 0;
  if (!in_cone(kind, key, &h) || h == 0)
    fail(ErrKind::Domain, "factor argument x^" + vec_str(f.arg) +
                              " is not strictly inside the expansion cone");
  ConeSeries out(kind, cutoff, f.dir);
  const Scalar c = Scalar::from_monomial(f.c);
  Scalar cur(1);
  out.set_coeff(std::vector<int>(kind.dim(), 0), cur);
  for (int m = 1; m * h <= cutoff; m++) {
    Scalar denom = Scalar(1) - Scalar::gen(GQ, 2 * f.base_k * m);
    if (f.expo == 1)
      cur = -(c * Scalar::gen(GQ, 2 * f.base_k * (f.n0 + m - 1)) * cur) / denom;
    else
      cur = c * Scalar::gen(GQ, 2 * f.base_k * f.n0) * cur / denom;
    out.set_coeff(scaled(key, m), cur);
  }
  return out;
}

DeltaFamily DeltaFamily::a(int N) { return {Tag::A, N, {}}; }
DeltaFamily DeltaFamily::a_plus(int N) { return {Tag::APlus, N, {}}; }
DeltaFamily DeltaFamily::k(int N, KoornwinderParams p) {
  return {Tag::K, N, std::move(p)};
}
DeltaFamily DeltaFamily::g2() { return {Tag::G2, 3, {}}; }

TheoryKind DeltaFamily::kind() const {
  switch (tag) {
    case Tag::A:
    case Tag::APlus: return TheoryKind::A(N);
    case Tag::K: return TheoryKind::K(N);
    case Tag::G2: return TheoryKind::G2();
  }
  fail(ErrKind::Internal, "bad family tag");
}

std::string DeltaFamily::str() const {
  switch (tag) {
    case Tag::A: return "delta[A" + std::to_string(N) + "]";
    case Tag::APlus: return "delta_plus[A" + std::to_string(N) + "]";
    case Tag::K: return "delta[K" + std::to_string(N) + "," + params.name + "]";
    case Tag::G2: return "delta[G2]";
  }
  return "?";
}

std::vector<PochFactor> delta_factors(const DeltaFamily& fam) {
  std::vector<PochFactor> fs;
  const Monomial q = Monomial::gen(GQ, 2);
  if (fam.tag == DeltaFamily::Tag::A || fam.tag == DeltaFamily::Tag::APlus) {
    RootFrame fr = root_frame(TheoryKind::A(fam.N));
    for (const auto& beta : fr.positive_roots) {
      if (fam.tag == DeltaFamily::Tag::A) {
        // prod_{n>=1} (1 - q^n x^{-beta}) / (1 - t^{-1} q^n x^{-beta})
        fs.push_back({Monomial::one(), scaled(beta, -1), 1, +1, 1, -1});
        fs.push_back({Monomial::gen(GT, -2), scaled(beta, -1), 1, -1, 1, -1});
      } else {
        // prod_{n>=0} (1 - q^n x^{beta}) / (1 - t q^n x^{beta})
        fs.push_back({Monomial::one(), beta, 1, +1, 0, +1});
        fs.push_back({Monomial::gen(GT, 2), beta, 1, -1, 0, +1});
      }
    }
  } else if (fam.tag == DeltaFamily::Tag::K) {
    const int N = fam.N;
    const Monomial letters[4] = {fam.params.a, fam.params.b, fam.params.c,
                                 fam.params.d};
    for (int i = 0; i < N; i++) {
      std::vector<int> ei(N, 0);
      ei[i] = 1;
      // (q/x_i^2; q)_inf / prod_al (q/(al x_i); q)_inf
      fs.push_back({q, scaled(ei, -2), 1, +1, 0, -1});
      for (const Monomial& al : letters)
        fs.push_back({q / al, scaled(ei, -1), 1, -1, 0, -1});
      for (int j = i + 1; j < N; j++) {
        for (int e = -1; e <= 1; e += 2) {
          // (q x_j^e / x_i; q)_inf / (q x_j^e / (t x_i); q)_inf
          std::vector<int> arg(N, 0);
          arg[i] = -1;
          arg[j] = e;
          fs.push_back({q, arg, 1, +1, 0, -1});
          fs.push_back({q * Monomial::gen(GT, -2), arg, 1, -1, 0, -1});
        }
      }
    }
  } else {
    RootFrame fr = root_frame(TheoryKind::G2());
    const auto& al = fr.simple;
    const Monomial q2 = Monomial::gen(GQ, 4);
    const Monomial q2t = q2 * Monomial::gen(GT, -2);
    for (int i = 0; i < 3; i++)
      for (int j = i + 1; j < 3; j++)
        fs.push_back({q2, scaled(vadd(al[i], al[j]), -1), 2, +1, 0, -1});
    fs.push_back({q2t, {-1, -1, -1}, 2, -1, 0, -1});
    for (int i = 0; i < 3; i++)
      fs.push_back({q2t, scaled(al[i], -1), 2, -1, 0, -1});
  }
  return fs;
}

ConeSeries delta_series(const DeltaFamily& fam, int cutoff) {
  ConeSeries s = ConeSeries::one(fam.kind(), cutoff, fam.dir());
  for (const PochFactor& f : delta_factors(fam))
    s = s * pochhammer_series(f, fam.kind(), cutoff);
  return s;
}

namespace {

// Enumerates the linear factors of Delta(x)/Delta(q^eps x): each infinite
// product (u0; qb)_inf / (qb^j u0; qb)_inf telescopes to finitely many
// (1 - qb^i u0), u0 = c q^{k n0} x^{arg}, qb = q^k. The callback receives
// the factor's source, the power i, and which side it lands on.
template <class F>
void for_each_shift_factor(const DeltaFamily& fam, const std::vector<int>& eps,
                           F&& emit) {
  for (const PochFactor& f : delta_factors(fam)) {
    long d = vdot(eps, f.arg);
    if (d % f.base_k != 0)
      fail(ErrKind::NonIntegralShift,
           "shift " + vec_str(eps) + " moves a factor by a non-integral power "
           "of the base");
    long j = d / f.base_k;
    if (j >= 0)
      for (long i = 0; i < j; i++) emit(f, i, f.expo == 1);
    else
      for (long i = 1; i <= -j; i++) emit(f, -i, f.expo != 1);
  }
}

} // namespace

void delta_shift_ratio_factors(const DeltaFamily& fam, const std::vector<int>& eps,
                               std::vector<LaurentPoly>* num,
                               std::vector<LaurentPoly>* den) {
  const int dim = fam.kind().dim();
  if ((int)eps.size() != dim)
    fail(ErrKind::MalformedInput, "shift dimension mismatch");
  for_each_shift_factor(fam, eps, [&](const PochFactor& f, long i, bool in_num) {
    Scalar coef = -Scalar::from_monomial(f.c) *
                  Scalar::gen(GQ, (int)(2 * f.base_k * (f.n0 + i)));
    LaurentPoly factor =
        LaurentPoly::constant(dim, Scalar(1)) + LaurentPoly::monomial(f.arg, coef);
    (in_num ? num : den)->push_back(std::move(factor));
  });
}

LaurentRatio delta_shift_ratio(const DeltaFamily& fam, const std::vector<int>& eps) {
  const int dim = fam.kind().dim();
  std::vector<LaurentPoly> nf, df;
  delta_shift_ratio_factors(fam, eps, &nf, &df);
  LaurentPoly num = LaurentPoly::constant(dim, Scalar(1));
  LaurentPoly den = num;
  for (const LaurentPoly& f : nf) num = num * f;
  for (const LaurentPoly& f : df) den = den * f;
  return LaurentRatio(std::move(num), std::move(den));
}

Scalar delta_ratio_at(const DeltaFamily& fam, const WeightLabel& from,
                      const WeightLabel& to) {
  if (from.kind != fam.kind() || to.kind != fam.kind())
    fail(ErrKind::MalformedInput, "labels do not match the weight family");
  return delta_ratio_at(fam, from.lambda, to.lambda);
}

Scalar delta_ratio_at(const DeltaFamily& fam, const std::vector<int>& from,
                      const std::vector<int>& to) {
  if (from.size() != to.size() || (int)from.size() != fam.kind().dim())
    fail(ErrKind::MalformedInput, "points do not match the weight family");
  std::vector<int> eps = vsub(to, from);
  std::vector<Monomial> pt;
  for (Monomial m : s_monomials(fam.kind(), from)) {
    if (fam.tag == DeltaFamily::Tag::K && m.e[GS] != 0) {
      // the point's distinguished root is the family's, not the abstract one
      int k = m.e[GS];
      m.e[GS] = 0;
      m = m * fam.params.sigma.pow(k);
    }
    pt.push_back(m);
  }
  // Every factor specializes to 1 - (signed monomial), so the whole ratio is
  // a quotient of products of binomials. Expanding both sides and reducing
  // in one go makes the gcd intractable; instead cancel factor against
  // factor (binomial gcds are cheap) until the two sides are coprime, and
  // only then expand. The final reduction is then a no-op.
  std::vector<MPoly> nf, df;
  MPoly nmono(mpq_class(1)), dmono(mpq_class(1));
  bool num_vanishes = false, den_vanishes = false;
  for_each_shift_factor(fam, eps, [&](const PochFactor& f, long i, bool in_num) {
    Monomial u = f.c * Monomial::gen(GQ, (int)(2 * f.base_k * (f.n0 + i)));
    for (size_t m = 0; m < pt.size(); m++) u = u * pt[m].pow(f.arg[m]);
    Scalar v = Scalar(1) - Scalar::from_monomial(u);
    if (v.is_zero()) {
      (in_num ? num_vanishes : den_vanishes) = true;
    } else if (in_num) {
      nf.push_back(v.num());
      dmono = dmono * v.den();
    } else {
      df.push_back(v.num());
      nmono = nmono * v.den();
    }
  });
  if (den_vanishes)
    fail(ErrKind::Pole, "a factor of the shifted weight function vanishes at "
         "the point of " + vec_str(from));
  if (num_vanishes) return Scalar(0);
  for (bool changed = true; changed;) {
    changed = false;
    for (MPoly& a : nf)
      for (MPoly& b : df) {
        if (a.is_constant() || b.is_constant()) continue;
        MPoly g = MPoly::gcd(a, b);
        if (g.is_constant()) continue;
        a = a.exact_div(g);
        b = b.exact_div(g);
        changed = true;
      }
  }
  MPoly num = nmono, den = dmono;
  for (const MPoly& a : nf) num = num * a;
  for (const MPoly& b : df) den = den * b;
  return Scalar(std::move(num), std::move(den));
}

ConeSeries conjugation_coefficient(const ConeSeries& D, const std::vector<int>& shift) {
  return D.q_shift(shift) * D.inverse();
}

namespace {

// The term that dominates every other one in the asymptotic region, i.e.
// m with dir*(e - m) in the cone for all terms e. Domain if none does.
const std::pair<const XExpo, Scalar>& extreme_term(const LaurentPoly& p,
                                                   const TheoryKind& kind, int dir) {
  if (p.is_zero()) fail(ErrKind::Domain, "cannot expand around zero");
  for (const auto& cand : p.terms()) {
    bool ok = true;
    for (const auto& other : p.terms()) {
      if (!in_cone(kind, scaled(vsub(other.first, cand.first), dir))) {
        ok = false;
        break;
      }
    }
    if (ok) return cand;
  }
  fail(ErrKind::Domain, "no extreme term; not expandable in this region");
}

ConeSeries poly_to_cone(const LaurentPoly& p, const XExpo& m, const TheoryKind& kind,
                        int cutoff, int dir) {
  ConeSeries s(kind, cutoff, dir);
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> gamma = scaled(vsub(e, m), dir);
    int h = 0;
    if (!in_cone(kind, gamma, &h))
      fail(ErrKind::Internal, "term escaped the cone during expansion");
    if (h <= cutoff) s.set_coeff(gamma, c);
  }
  return s;
}

} // namespace

ConeSeries rational_to_cone(const LaurentRatio& r, const TheoryKind& kind, int cutoff,
                            int dir) {
  const auto& mn = extreme_term(r.num(), kind, dir);
  const auto& md = extreme_term(r.den(), kind, dir);
  if (!in_cone(kind, scaled(vsub(mn.first, md.first), dir)))
    fail(ErrKind::Domain, "expansion carries the monomial prefix x^" +
                              vec_str(vsub(mn.first, md.first)) +
                              "; not a cone series");
  ConeSeries num = poly_to_cone(r.num(), md.first, kind, cutoff, dir);
  ConeSeries den = poly_to_cone(r.den(), md.first, kind, cutoff, dir);
  return num * den.inverse();
}

} // namespace macdual

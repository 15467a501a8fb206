#include "macdual/diffop.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <sstream>

#include "macdual/error.hpp"

namespace macdual {

namespace {

std::string vec_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); i++) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

Scalar tpow(int k) { return Scalar::gen(GT, 2 * k); }  // t = T^2
Scalar qpow(int k) { return Scalar::gen(GQ, 2 * k); }

LaurentPoly one(int dim) { return LaurentPoly::constant(dim, Scalar(1)); }

// Size-a subsets of {0..N-1} as membership masks.
void for_each_subset(int N, int a, const std::function<void(const std::vector<char>&)>& fn) {
  std::vector<int> idx(a);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<char> in(N);
  while (true) {
    std::fill(in.begin(), in.end(), 0);
    for (int i : idx) in[i] = 1;
    fn(in);
    int k = a - 1;
    while (k >= 0 && idx[k] == N - a + k) k--;
    if (k < 0) break;
    idx[k]++;
    for (int m = k + 1; m < a; m++) idx[m] = idx[m - 1] + 1;
  }
}

// x^e |-> Lambda^e * prod_i scale_i^{e_i}: formal substitution of the
// spectral point into a coefficient.
LaurentPoly scale_vars(const LaurentPoly& f, const std::vector<Monomial>& scale) {
  LaurentPoly r(f.dim());
  for (const auto& [e, c] : f.terms()) {
    Monomial u = Monomial::one();
    for (size_t i = 0; i < scale.size(); i++)
      if (e[i] != 0) u = u * scale[i].pow(e[i]);
    r += LaurentPoly::monomial(e, c * Scalar::from_monomial(u));
  }
  return r;
}

// Index rotations used for the genus-2 Pieri displays: the label-ell operator
// raises Lambda_p Lambda_r and is written on the index order (p, r, s).
// The assignment is fixed by matching each display against the conjugation
// construction (leading shift omega_ell).
void g2_display_order(int ell, int* p, int* r, int* s) {
  static const int tab[3][3] = {{0, 1, 2}, {2, 0, 1}, {1, 2, 0}};
  if (ell < 1 || ell > 3) fail(ErrKind::MalformedInput, "genus-2 label out of range");
  *p = tab[ell - 1][0];
  *r = tab[ell - 1][1];
  *s = tab[ell - 1][2];
}

} // namespace

DiffOp DiffOp::identity(int dim, OpFlavor flavor) {
  DiffOp d(dim, flavor);
  d.add_term(XExpo(dim, 0), LaurentRatio::constant(dim, Scalar(1)));
  return d;
}

bool DiffOp::is_zero() const { return terms_.empty(); }

void DiffOp::add_term(const XExpo& shift, const LaurentRatio& coeff) {
  if ((int)shift.size() != dim_)
    fail(ErrKind::MalformedInput, "shift length does not match the dimension");
  if (coeff.dim() != dim_)
    fail(ErrKind::MalformedInput, "coefficient dimension mismatch");
  auto it = terms_.find(shift);
  if (it == terms_.end()) {
    if (!coeff.is_zero()) terms_.emplace(shift, coeff);
    return;
  }
  // same-denominator merges keep the pair small
  LaurentRatio s = it->second.den() == coeff.den()
                       ? LaurentRatio(it->second.num() + coeff.num(), coeff.den())
                       : it->second + coeff;
  if (s.is_zero()) terms_.erase(it);
  else it->second = s;
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
  if (dim_ != o.dim_ || flavor_ != o.flavor_)
    fail(ErrKind::MalformedInput, "cannot add operators of different flavor");
  DiffOp r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

DiffOp DiffOp::operator-(const DiffOp& o) const {
  if (dim_ != o.dim_ || flavor_ != o.flavor_)
    fail(ErrKind::MalformedInput, "cannot subtract operators of different flavor");
  DiffOp r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

DiffOp DiffOp::mul_ratio(const LaurentRatio& f) const {
  DiffOp r(dim_, flavor_);
  if (f.is_zero()) return r;
  for (const auto& [e, c] : terms_) r.add_term(e, f * c);
  return r;
}

DiffOp DiffOp::mul_scalar(const Scalar& c) const {
  DiffOp r(dim_, flavor_);
  if (c.is_zero()) return r;
  for (const auto& [e, co] : terms_)
    r.terms_.emplace(e, LaurentRatio(co.num().mul_scalar(c), co.den()));
  return r;
}

LaurentPoly DiffOp::apply(const LaurentPoly& f) const {
  if (f.dim() != dim_)
    fail(ErrKind::MalformedInput, "operator and argument dimensions differ");
  // Clear all coefficients over one denominator. Biggest first: in the
  // operators built here the smaller denominators divide the big one, so the
  // common multiple stays tight.
  std::vector<const std::pair<const XExpo, LaurentRatio>*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
    return a->second.den().size() > b->second.den().size();
  });
  LaurentPoly den = one(dim_);
  LaurentPoly q(dim_);
  for (auto* t : ts) {
    if (t->second.den().try_exact_div(den, &q)) den = t->second.den();
    else if (!den.try_exact_div(t->second.den(), &q)) den = den * t->second.den();
  }
  LaurentPoly acc(dim_);
  for (auto* t : ts)
    acc += t->second.num() * den.exact_div(t->second.den()) * f.q_shift(t->first);
  LaurentPoly out(dim_);
  if (!acc.try_exact_div(den, &out))
    fail(ErrKind::DivisionRemainder,
         "application did not return a Laurent polynomial");
  return out;
}

bool DiffOp::operator==(const DiffOp& o) const {
  if (dim_ != o.dim_ || flavor_ != o.flavor_ || terms_.size() != o.terms_.size())
    return false;
  auto it = o.terms_.begin();
  for (const auto& [e, c] : terms_) {
    if (it->first != e || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

std::string DiffOp::str() const {
  std::ostringstream os;
  os << (flavor_ == OpFlavor::X ? "x-shift" : "spectral-shift") << " operator, dim "
     << dim_;
  for (const auto& [e, c] : terms_)
    os << "\n  " << vec_str(e) << ": " << c.normalized().str();
  return os.str();
}

DiffOp compose(const DiffOp& d1, const DiffOp& d2) {
  if (d1.dim() != d2.dim() || d1.flavor() != d2.flavor())
    fail(ErrKind::MalformedInput, "cannot compose operators of different flavor");
  DiffOp r(d1.dim(), d1.flavor());
  XExpo e(d1.dim());
  for (const auto& [e1, c1] : d1.terms())
    for (const auto& [e2, c2] : d2.terms()) {
      for (int k = 0; k < d1.dim(); k++) e[k] = e1[k] + e2[k];
      r.add_term(e, c1 * c2.q_shift(e1));
    }
  return r;
}

DiffOp commutator(const DiffOp& d1, const DiffOp& d2) {
  return compose(d1, d2) - compose(d2, d1);
}

OperatorFamily OperatorFamily::macdonald_a(int a, int n) {
  OperatorFamily f{Tag::MacdonaldA};
  f.a = a;
  f.n = n;
  return f;
}
OperatorFamily OperatorFamily::koornwinder_d1(KoornwinderParams p) {
  OperatorFamily f{Tag::KoornwinderD1};
  f.params = std::move(p);
  return f;
}
OperatorFamily OperatorFamily::genus_two(int i, int j) {
  OperatorFamily f{Tag::GenusTwo};
  f.i = i;
  f.j = j;
  return f;
}
OperatorFamily OperatorFamily::pieri_a_explicit(int a) {
  OperatorFamily f{Tag::PieriAExplicit};
  f.a = a;
  return f;
}
OperatorFamily OperatorFamily::pieri_g2_explicit(int ell) {
  OperatorFamily f{Tag::PieriG2Explicit};
  f.ell = ell;
  return f;
}
OperatorFamily OperatorFamily::pieri_ad(TheoryKind kind, int index, KoornwinderParams p) {
  OperatorFamily f{Tag::PieriAd};
  f.kind = kind;
  f.m = index;
  f.params = std::move(p);
  return f;
}
OperatorFamily OperatorFamily::whittaker_a(int a, int n) {
  OperatorFamily f{Tag::WhittakerA};
  f.a = a;
  f.n = n;
  return f;
}
OperatorFamily OperatorFamily::whittaker_g2(int i, int j) {
  OperatorFamily f{Tag::WhittakerG2};
  f.i = i;
  f.j = j;
  return f;
}
OperatorFamily OperatorFamily::toda_a() { return OperatorFamily{Tag::TodaA}; }
OperatorFamily OperatorFamily::toda_g2(int ell) {
  OperatorFamily f{Tag::TodaG2};
  f.ell = ell;
  return f;
}
OperatorFamily OperatorFamily::a1_whittaker_d1() {
  return OperatorFamily{Tag::A1WhittakerD1};
}

std::string OperatorFamily::str() const {
  std::ostringstream os;
  switch (tag) {
    case Tag::MacdonaldA: os << "macdonald-a[" << a << ",n=" << n << "]"; break;
    case Tag::KoornwinderD1: os << "koornwinder-d1[" << params.name << "]"; break;
    case Tag::GenusTwo: os << "genus2[" << i << "," << j << "]"; break;
    case Tag::PieriAExplicit: os << "pieri-a[" << a << "]"; break;
    case Tag::PieriG2Explicit: os << "pieri-g2[" << ell << "]"; break;
    case Tag::PieriAd: os << "pieri-ad[" << kind.str() << "," << m << "]"; break;
    case Tag::WhittakerA: os << "whittaker-a[" << a << ",n=" << n << "]"; break;
    case Tag::WhittakerG2: os << "whittaker-g2[" << i << "," << j << "]"; break;
    case Tag::TodaA: os << "toda-a"; break;
    case Tag::TodaG2: os << "toda-g2[" << ell << "]"; break;
    case Tag::A1WhittakerD1: os << "whittaker-a1-d1"; break;
  }
  return os.str();
}

namespace {

// A coefficient kept as pre * prod(num) / prod(den). The operators are
// assembled from this, and the same factors drive lattice evaluation of the
// conjugated ladder coefficients, where reducing one fully multiplied
// numerator against one fully multiplied denominator is intractable.
struct TermParts {
  LaurentPoly pre;
  std::vector<LaurentPoly> num;
  std::vector<LaurentPoly> den;
};
using PartsMap = std::map<XExpo, TermParts, XGrlexLess>;

LaurentRatio parts_ratio(int dim, const TermParts& tp) {
  LaurentPoly n = tp.pre, d = one(dim);
  for (const LaurentPoly& f : tp.num) n = n * f;
  for (const LaurentPoly& f : tp.den) d = d * f;
  return LaurentRatio(std::move(n), std::move(d));
}

DiffOp parts_op(int dim, const PartsMap& parts) {
  DiffOp D(dim, OpFlavor::X);
  for (const auto& [sh, tp] : parts) D.add_term(sh, parts_ratio(dim, tp));
  return D;
}

PartsMap macdonald_a_parts(int N, int a, int n) {
  if (a < 1 || a > N)
    fail(ErrKind::MalformedInput, "operator order must lie between 1 and the rank");
  PartsMap parts;
  const Scalar t = tpow(1);
  for_each_subset(N, a, [&](const std::vector<char>& in) {
    TermParts tp;
    XExpo sh(N, 0), mono(N, 0);
    for (int i = 0; i < N; i++) {
      if (!in[i]) continue;
      sh[i] = 1;
      mono[i] = n;
      for (int j = 0; j < N; j++) {
        if (in[j]) continue;
        tp.num.push_back(LaurentPoly::var(N, i).mul_scalar(t) - LaurentPoly::var(N, j));
        tp.den.push_back(LaurentPoly::var(N, i) - LaurentPoly::var(N, j));
      }
    }
    tp.pre = LaurentPoly::monomial(mono, Scalar(1));
    parts.emplace(sh, std::move(tp));
  });
  return parts;
}

PartsMap koornwinder_d1_parts(int N, const KoornwinderParams& P) {
  if (N < 1) fail(ErrKind::MalformedInput, "rank must be positive");
  PartsMap parts;
  const Scalar q = qpow(1), t = tpow(1);
  const Scalar letters[4] = {Scalar::from_monomial(P.a), Scalar::from_monomial(P.b),
                             Scalar::from_monomial(P.c), Scalar::from_monomial(P.d)};
  const Scalar sig2 = Scalar::from_monomial(P.sigma).pow(2);

  // Every x-inverted factor is a unit multiple of an upright one, so one
  // product of distinct factors clears all 2N+1 coefficients:
  //   per i: (1 - x_i^2)(1 - q x_i^2)(x_i^2 - q),
  //   per pair: (x_i - x_j)(x_i x_j - 1).
  std::vector<LaurentPoly> common;
  for (int i = 0; i < N; i++) {
    common.push_back(one(N) - LaurentPoly::var(N, i, 2));
    common.push_back(one(N) - LaurentPoly::var(N, i, 2).mul_scalar(q));
    common.push_back(LaurentPoly::var(N, i, 2) - LaurentPoly::constant(N, q));
  }
  for (int i = 0; i < N; i++)
    for (int j = i + 1; j < N; j++) {
      XExpo eij(N, 0);
      eij[i] = 1;
      eij[j] = 1;
      common.push_back(LaurentPoly::var(N, i) - LaurentPoly::var(N, j));
      common.push_back(LaurentPoly::monomial(eij, Scalar(1)) - one(N));
    }
  LaurentPoly den_common = one(N);
  for (const LaurentPoly& f : common) den_common = den_common * f;

  Scalar c0;  // (1-t^N)/(1-t) * (1 + sigma^2 t^{N-1})
  for (int k = 0; k < N; k++) c0 += tpow(k);
  c0 *= Scalar(1) + sig2 * tpow(N - 1);
  LaurentPoly zero_num = den_common.mul_scalar(c0);

  for (int i = 0; i < N; i++)
    for (int e : {1, -1}) {
      TermParts tp;
      tp.pre = one(N);
      for (const Scalar& al : letters)
        tp.num.push_back(one(N) - LaurentPoly::var(N, i, e).mul_scalar(al));
      tp.den.push_back(one(N) - LaurentPoly::var(N, i, 2 * e));
      tp.den.push_back(one(N) - LaurentPoly::var(N, i, 2 * e).mul_scalar(q));
      for (int j = 0; j < N; j++) {
        if (j == i) continue;
        XExpo cross(N, 0);
        cross[i] = e;
        cross[j] = 1;
        tp.num.push_back(LaurentPoly::var(N, i, e).mul_scalar(t) - LaurentPoly::var(N, j));
        tp.num.push_back(LaurentPoly::monomial(cross, t) - one(N));
        tp.den.push_back(LaurentPoly::var(N, i, e) - LaurentPoly::var(N, j));
        tp.den.push_back(LaurentPoly::monomial(cross, Scalar(1)) - one(N));
      }
      LaurentRatio r = parts_ratio(N, tp);
      zero_num -= r.num() * den_common.exact_div(r.den());
      XExpo sh(N, 0);
      sh[i] = e;
      parts.emplace(sh, std::move(tp));
    }
  TermParts z;
  z.pre = std::move(zero_num);
  z.den = std::move(common);
  parts.emplace(XExpo(N, 0), std::move(z));
  return parts;
}

PartsMap genus_two_parts(int i1, int j1) {
  if (i1 > j1) std::swap(i1, j1);
  if (i1 < 1 || j1 > 3 || i1 == j1)
    fail(ErrKind::MalformedInput, "pair indices must be distinct and within 1..3");
  const int i = i1 - 1, j = j1 - 1, k = 3 - i - j;
  PartsMap parts;
  const Scalar t = tpow(1);
  for (int ei : {1, -1})
    for (int ej : {1, -1}) {
      XExpo u(3, 0), v(3, 0), sh(3, 0);
      u[i] = ei; u[j] = ej; u[k] = 1;
      v[i] = ei; v[j] = ej; v[k] = -1;
      sh[i] = ei; sh[j] = ej;
      TermParts tp;
      tp.pre = one(3);
      tp.num.push_back(LaurentPoly::monomial(u, t) - one(3));
      tp.num.push_back(LaurentPoly::monomial(v, t) - one(3));
      tp.den.push_back((LaurentPoly::var(3, i, 2 * ei) - one(3)).mul_scalar(t));
      tp.den.push_back(LaurentPoly::var(3, j, 2 * ej) - one(3));
      parts.emplace(sh, std::move(tp));
    }
  return parts;
}

DiffOp macdonald_a_op(int N, int a, int n) { return parts_op(N, macdonald_a_parts(N, a, n)); }

DiffOp koornwinder_d1_op(int N, const KoornwinderParams& P) {
  return parts_op(N, koornwinder_d1_parts(N, P));
}

DiffOp genus_two_op(int i1, int j1) { return parts_op(3, genus_two_parts(i1, j1)); }

DiffOp pieri_a_explicit_op(int N, int a) {
  if (a < 1 || a > N)
    fail(ErrKind::MalformedInput, "operator order must lie between 1 and the rank");
  DiffOp D(N, OpFlavor::Lambda);
  const Scalar q = qpow(1);
  for_each_subset(N, a, [&](const std::vector<char>& in) {
    LaurentPoly num = one(N), den = one(N);
    XExpo sh(N, 0);
    for (int i = 0; i < N; i++) {
      if (!in[i]) continue;
      sh[i] = 1;
      for (int j = 0; j < i; j++) {
        if (in[j]) continue;
        const int d = i - j;
        num = num *
              (LaurentPoly::var(N, j).mul_scalar(tpow(d - 1)) - LaurentPoly::var(N, i)) *
              (LaurentPoly::var(N, j).mul_scalar(tpow(d + 1)) -
               LaurentPoly::var(N, i).mul_scalar(q));
        den = den *
              (LaurentPoly::var(N, j).mul_scalar(tpow(d)) - LaurentPoly::var(N, i)) *
              (LaurentPoly::var(N, j).mul_scalar(tpow(d)) -
               LaurentPoly::var(N, i).mul_scalar(q));
      }
    }
    D.add_term(sh, LaurentRatio(std::move(num), std::move(den)));
  });
  return D;
}

DiffOp pieri_g2_explicit_op(int ell) {
  int p, r, s;
  g2_display_order(ell, &p, &r, &s);
  DiffOp D(3, OpFlavor::Lambda);
  const Scalar t = tpow(1);
  const Scalar q2t2 = qpow(-2) * tpow(2);   // q^{-2} t^2
  const Scalar q2t4 = qpow(-2) * tpow(4);
  auto bin = [&](const XExpo& e, const Scalar& c) {  // 1 - c * Lambda^e
    return one(3) - LaurentPoly::monomial(e, c);
  };
  XExpo rs_p(3, 0), ps_r(3, 0), pr_s(3, 0), prs(3, 0);
  rs_p[r] = 1; rs_p[s] = 1; rs_p[p] = -1;
  ps_r[p] = 1; ps_r[s] = 1; ps_r[r] = -1;
  pr_s[p] = 1; pr_s[r] = 1; pr_s[s] = -1;
  prs[p] = 1; prs[r] = 1; prs[s] = 1;
  XExpo p2(3, 0), r2(3, 0);
  p2[p] = 2;
  r2[r] = 2;

  XExpo sh(3, 0);
  sh[p] = 1; sh[r] = 1;
  D.add_term(sh, LaurentRatio::constant(3, Scalar(1)));

  sh[p] = 1; sh[r] = -1;
  D.add_term(sh, LaurentRatio(
      (bin(rs_p, Scalar(1)) * bin(rs_p, q2t2)).mul_term(pr_s, t),
      bin(r2, tpow(2)) * bin(r2, q2t2)));

  sh[p] = -1; sh[r] = 1;
  D.add_term(sh, LaurentRatio(
      (bin(ps_r, Scalar(1)) * bin(ps_r, q2t2)).mul_term(pr_s, t),
      bin(p2, tpow(2)) * bin(p2, q2t2)));

  sh[p] = -1; sh[r] = -1;
  D.add_term(sh, LaurentRatio(
      bin(pr_s, Scalar(1)) * bin(pr_s, q2t2) * bin(prs, tpow(2)) * bin(prs, q2t4),
      bin(p2, tpow(2)) * bin(p2, q2t2) * bin(r2, tpow(2)) * bin(r2, q2t2)));
  return D;
}

DiffOp whittaker_a_op(int N, int a, int n) {
  if (a < 1 || a > N)
    fail(ErrKind::MalformedInput, "operator order must lie between 1 and the rank");
  DiffOp D(N, OpFlavor::X);
  for_each_subset(N, a, [&](const std::vector<char>& in) {
    LaurentPoly den = one(N);
    XExpo sh(N, 0), mono(N, 0);
    for (int i = 0; i < N; i++) {
      if (!in[i]) continue;
      sh[i] = 1;
      mono[i] = (N - a) + n;  // x_i per excluded j, then the time twist
      for (int j = 0; j < N; j++)
        if (!in[j]) den = den * (LaurentPoly::var(N, i) - LaurentPoly::var(N, j));
    }
    D.add_term(sh, LaurentRatio(LaurentPoly::monomial(mono, Scalar(1)), std::move(den)));
  });
  return D;
}

DiffOp whittaker_g2_op(int i1, int j1) {
  if (i1 > j1) std::swap(i1, j1);
  if (i1 < 1 || j1 > 3 || i1 == j1)
    fail(ErrKind::MalformedInput, "pair indices must be distinct and within 1..3");
  const int i = i1 - 1, j = j1 - 1;
  DiffOp D(3, OpFlavor::X);
  for (int ei : {1, -1})
    for (int ej : {1, -1}) {
      XExpo sh(3, 0), mono(3, 0);
      sh[i] = ei; sh[j] = ej;
      mono[i] = 2 * ei; mono[j] = 2 * ej;
      LaurentPoly den = (LaurentPoly::var(3, i, 2 * ei) - one(3)) *
                        (LaurentPoly::var(3, j, 2 * ej) - one(3));
      D.add_term(sh, LaurentRatio(LaurentPoly::monomial(mono, Scalar(1)), std::move(den)));
    }
  return D;
}

DiffOp toda_a_op(int N) {
  DiffOp D(N, OpFlavor::Lambda);
  XExpo sh(N, 0);
  sh[0] = 1;
  D.add_term(sh, LaurentRatio::constant(N, Scalar(1)));
  for (int i = 1; i < N; i++) {
    std::fill(sh.begin(), sh.end(), 0);
    sh[i] = 1;
    XExpo step(N, 0);
    step[i] = 1;
    step[i - 1] = -1;
    D.add_term(sh, LaurentRatio::whole(one(N) - LaurentPoly::monomial(step, Scalar(1))));
  }
  return D;
}

DiffOp toda_g2_op(int ell) {
  int p, r, s;
  g2_display_order(ell, &p, &r, &s);
  DiffOp D(3, OpFlavor::Lambda);
  XExpo sh(3, 0);
  sh[p] = 1; sh[r] = 1;
  D.add_term(sh, LaurentRatio::constant(3, Scalar(1)));
  sh[p] = -1; sh[r] = -1;
  XExpo step(3, 0);
  step[s] = 1;
  step[p] = -1;
  step[r] = -1;
  D.add_term(sh, LaurentRatio::whole(one(3) - LaurentPoly::monomial(step, Scalar(1))));
  return D;
}

DiffOp a1_whittaker_op() {
  DiffOp D(1, OpFlavor::X);
  for (int e : {1, -1}) {
    LaurentPoly num = LaurentPoly::var(1, 0, 2 * e);
    D.add_term({e}, LaurentRatio(num, num - one(1)));
  }
  return D;
}

} // namespace

DiffOp build_operator(const OperatorFamily& fam, int N) {
  using Tag = OperatorFamily::Tag;
  switch (fam.tag) {
    case Tag::MacdonaldA: return macdonald_a_op(N, fam.a, fam.n);
    case Tag::KoornwinderD1: return koornwinder_d1_op(N, fam.params);
    case Tag::GenusTwo:
      if (N != 3) fail(ErrKind::MalformedInput, "the genus-2 family lives in 3 variables");
      return genus_two_op(fam.i, fam.j);
    case Tag::PieriAExplicit: return pieri_a_explicit_op(N, fam.a);
    case Tag::PieriG2Explicit:
      if (N != 3) fail(ErrKind::MalformedInput, "the genus-2 family lives in 3 variables");
      return pieri_g2_explicit_op(fam.ell);
    case Tag::PieriAd:
      if (N != fam.kind.dim())
        fail(ErrKind::MalformedInput, "rank does not match the requested theory");
      return ad_pieri(fam.kind, fam.m, fam.params);
    case Tag::WhittakerA: return whittaker_a_op(N, fam.a, fam.n);
    case Tag::WhittakerG2:
      if (N != 3) fail(ErrKind::MalformedInput, "the genus-2 family lives in 3 variables");
      return whittaker_g2_op(fam.i, fam.j);
    case Tag::TodaA: return toda_a_op(N);
    case Tag::TodaG2:
      if (N != 3) fail(ErrKind::MalformedInput, "the genus-2 family lives in 3 variables");
      return toda_g2_op(fam.ell);
    case Tag::A1WhittakerD1:
      if (N != 1) fail(ErrKind::MalformedInput, "the one-variable factor has rank 1");
      return a1_whittaker_op();
  }
  fail(ErrKind::Internal, "unhandled operator family");
}

DiffOp ad_conjugate(const DiffOp& base, const DeltaFamily& fam,
                    const std::vector<Monomial>& scale,
                    const std::vector<int>& weight_T, const Monomial& weight_letter) {
  const int N = base.dim();
  if ((int)scale.size() != N || (int)weight_T.size() != N || fam.kind().dim() != N)
    fail(ErrKind::MalformedInput, "conjugation data does not match the operator");
  DiffOp out(N, OpFlavor::Lambda);
  for (const auto& [eps, c] : base.terms()) {
    // the coefficient and the weight ratio, read at s_i = scale_i * Lambda_i
    LaurentRatio ratio = delta_shift_ratio(fam, eps);  // Delta(s)/Delta(q^eps s)
    LaurentPoly num = scale_vars(c.num(), scale) * scale_vars(ratio.den(), scale);
    LaurentPoly den = scale_vars(c.den(), scale) * scale_vars(ratio.num(), scale);
    long sum = 0, dot = 0;
    for (int k = 0; k < N; k++) {
      sum += eps[k];
      dot += (long)eps[k] * weight_T[k];
    }
    Monomial w = weight_letter.pow((int)-sum) * Monomial::gen(GT, (int)-dot);
    out.add_term(eps, LaurentRatio(num.mul_scalar(Scalar::from_monomial(w)), std::move(den)));
  }
  return out;
}

namespace {

// Everything the conjugation of one eigenvalue operator needs; shared by the
// symbolic ladder operator and the factored lattice evaluator below.
struct LadderData {
  PartsMap parts;
  DeltaFamily fam;
  std::vector<Monomial> scale;
  std::vector<int> weight_T;
  Monomial letter;
  Scalar pref;
};

LadderData ladder_data(const TheoryKind& kind, int index, const KoornwinderParams& params) {
  const int N = kind.dim();
  const std::vector<int> r = rho(kind);
  if (kind.family == Family::TypeA) {
    LadderData d{macdonald_a_parts(N, index, 0),
                 DeltaFamily::a(N),
                 {},
                 {},
                 Monomial::one(),
                 Scalar::gen(GT, index * (index - 1))};  // t^{a(a-1)/2}
    for (int i = 0; i < N; i++) {
      d.scale.push_back(Monomial::gen(GT, 2 * r[i]));
      d.weight_T.push_back(2 * r[i]);
    }
    return d;
  }
  if (kind.family == Family::Koornwinder) {
    if (index != 1)
      fail(ErrKind::Unsupported, "only the first operator of the signed family is wired");
    KoornwinderParams st;
    try {
      st = params.star();
    } catch (const Error&) {
      fail(ErrKind::Unsupported,
           "dual parameters leave the monomial lattice for " +
               (params.name.empty() ? std::string("these letters") : params.name));
    }
    // conjugating by the dual weight swaps the letter set: the ladder's shift
    // coefficients are the dual-letter ones read on the original lattice
    LadderData d{koornwinder_d1_parts(N, st),
                 DeltaFamily::k(N, st),
                 {},
                 {},
                 st.sigma,
                 Scalar::from_monomial(params.a.inv()) * tpow(1 - N)};
    for (int i = 0; i < N; i++) {
      d.scale.push_back(params.sigma * Monomial::gen(GT, 2 * r[i]));
      d.weight_T.push_back(2 * r[i]);
    }
    return d;
  }
  static const int pair_of[3][2] = {{1, 2}, {1, 3}, {2, 3}};  // alpha_i + alpha_j = 2 e_ell
  if (index < 1 || index > 3)
    fail(ErrKind::MalformedInput, "genus-2 label out of range");
  return LadderData{genus_two_parts(pair_of[index - 1][0], pair_of[index - 1][1]),
                    DeltaFamily::g2(),
                    std::vector<Monomial>(3, Monomial::gen(GT, 2)),
                    std::vector<int>(3, 1),  // t^{(rho,l)/2} = T^{(rho,l)}
                    Monomial::one(),
                    Scalar(1)};
}

}  // namespace

DiffOp ad_pieri(const TheoryKind& kind, int index, const KoornwinderParams& params) {
  LadderData d = ladder_data(kind, index, params);
  DiffOp base = parts_op(kind.dim(), d.parts);
  return ad_conjugate(base, d.fam, d.scale, d.weight_T, d.letter).mul_scalar(d.pref);
}

DiffOp op_t_limit(const DiffOp& d, int renorm) {
  DiffOp out(d.dim(), d.flavor());
  for (const auto& [e, c] : d.terms()) {
    int dn = INT_MIN, dd = INT_MIN;
    for (const auto& [xe, s] : c.num().terms()) dn = std::max(dn, s.t_degree());
    for (const auto& [xe, s] : c.den().terms()) dd = std::max(dd, s.t_degree());
    const int excess = dn - dd + 2 * renorm;
    if (excess > 0)
      fail(ErrKind::DivergentLimit, "coefficient at shift " + vec_str(e) +
                                        " grows without bound at this scaling");
    if (excess < 0) continue;
    LaurentPoly n(d.dim()), den(d.dim());
    for (const auto& [xe, s] : c.num().terms())
      if (s.t_degree() == dn) n += LaurentPoly::monomial(xe, s.t_infinity_leading(-dn));
    for (const auto& [xe, s] : c.den().terms())
      if (s.t_degree() == dd) den += LaurentPoly::monomial(xe, s.t_infinity_leading(-dd));
    out.add_term(e, LaurentRatio(std::move(n), std::move(den)));
  }
  return out;
}

Scalar coefficient_at(const DiffOp& d, const XExpo& shift, const WeightLabel& l) {
  if (d.flavor() != OpFlavor::Lambda)
    fail(ErrKind::MalformedInput, "lattice evaluation needs a spectral-side operator");
  if (d.dim() != l.kind.dim() || (int)shift.size() != d.dim())
    fail(ErrKind::MalformedInput, "label does not match the operator");
  auto it = d.terms().find(shift);
  if (it == d.terms().end()) return Scalar();
  std::vector<Scalar> v;
  for (int c : l.lambda) v.push_back(qpow(c));
  return it->second.eval(v);
}

namespace {

// Value of pre * prod(num) / prod(den) at the point s, never forming the
// expanded ratio. Three stages keep every reduction binomial-sized. First, a
// denominator factor may vanish at the point; for the degenerate letter rows
// a numerator factor then vanishes along with it and one divides the other
// as a polynomial, so the pair is cancelled before evaluating. A vanishing
// that survives the pairing is a genuine pole. Second, the surviving factor
// values (all binomials in the letters) are cancelled against each other.
// Last, what still divides the assembled numerator is peeled off, so the
// reducing constructor only ever sees near-coprime operands.
Scalar parts_value(int dim, TermParts tp, const std::vector<Scalar>& s) {
  for (size_t i = 0; i < tp.den.size();) {
    if (!tp.den[i].eval(s).is_zero()) {
      ++i;
      continue;
    }
    bool fixed = false;
    for (size_t j = 0; j < tp.num.size() && !fixed; j++) {
      if (!tp.num[j].eval(s).is_zero()) continue;
      LaurentPoly cof(dim);
      if (tp.den[i].try_exact_div(tp.num[j], &cof)) {
        tp.den[i] = std::move(cof);
        tp.num.erase(tp.num.begin() + (long)j);
        fixed = true;
      } else if (tp.num[j].try_exact_div(tp.den[i], &cof)) {
        tp.num[j] = std::move(cof);
        tp.den.erase(tp.den.begin() + (long)i);
        fixed = true;
      }
    }
    if (!fixed) fail(ErrKind::Pole, "coefficient denominator vanishes at the lattice point");
    // re-examine position i: the replacement cofactor may vanish again
  }
  Scalar pre = tp.pre.eval(s);
  if (pre.is_zero()) return Scalar();
  std::vector<MPoly> nf, df;
  MPoly nmono = pre.num(), dmono = pre.den();
  for (const LaurentPoly& f : tp.num) {
    Scalar v = f.eval(s);
    if (v.is_zero()) return Scalar();
    dmono = dmono * v.den();
    if (v.num().is_constant())
      nmono = nmono * v.num();
    else
      nf.push_back(v.num());
  }
  for (const LaurentPoly& f : tp.den) {
    Scalar v = f.eval(s);
    nmono = nmono * v.den();
    if (v.num().is_constant())
      dmono = dmono * v.num();
    else
      df.push_back(v.num());
  }
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
  MPoly n = nmono;
  for (const MPoly& a : nf) n = n * a;
  MPoly d = dmono;
  for (const MPoly& b : df) {
    MPoly quo;
    if (!b.is_constant() && n.try_exact_div(b, &quo))
      n = std::move(quo);
    else
      d = d * b;
  }
  return Scalar(std::move(n), std::move(d));
}

}  // namespace

Scalar ladder_coefficient(const TheoryKind& kind, int index, const XExpo& shift,
                          const WeightLabel& l, const KoornwinderParams& params) {
  if (l.kind != kind) fail(ErrKind::MalformedInput, "label does not match the requested family");
  const int N = kind.dim();
  if ((int)shift.size() != N) fail(ErrKind::MalformedInput, "shift does not match the rank");
  LadderData d = ladder_data(kind, index, params);
  auto it = d.parts.find(shift);
  if (it == d.parts.end()) return Scalar();

  std::vector<Scalar> s;
  for (int i = 0; i < N; i++)
    s.push_back(Scalar::from_monomial(d.scale[i]) * qpow(l.lambda[i]));

  TermParts tp = it->second;
  bool moved = false;
  for (int e : shift) moved = moved || e != 0;
  // fold in Delta(q^shift s)/Delta(s), read at the same point: it is the
  // inverse of the telescoped ratio, so its numerator joins the denominator
  if (moved) delta_shift_ratio_factors(d.fam, shift, &tp.den, &tp.num);

  Scalar v;
  try {
    v = parts_value(N, tp, s);
  } catch (const Error& err) {
    // the balance coefficient is a difference, not a product: when its
    // cleared denominator vanishes, fall back to the defining difference
    if (err.kind() != ErrKind::Pole || moved || kind.family != Family::Koornwinder) throw;
    const Scalar sig2 = Scalar::from_monomial(d.letter).pow(2);  // dual sigma
    v = Scalar();
    for (int k = 0; k < N; k++) v += tpow(k);
    v *= Scalar(1) + sig2 * tpow(N - 1);  // the constant part of the operator
    for (const auto& [sh, other] : d.parts)
      if (sh != shift) v -= parts_value(N, other, s);
  }
  if (v.is_zero() || !moved) return v * d.pref;

  long sum = 0, dot = 0;
  for (int i = 0; i < N; i++) {
    sum += shift[i];
    dot += (long)shift[i] * d.weight_T[i];
  }
  v *= Scalar::from_monomial(d.letter.pow((int)-sum) * Monomial::gen(GT, (int)-dot));
  return v * d.pref;
}

Scalar genus2_psi_prefactor(const WeightLabel& l) {
  if (l.kind.family != Family::GenusTwo)
    fail(ErrKind::MalformedInput, "normalization factor is specific to the genus-2 family");
  const int sum = l.lambda[0] + l.lambda[1] + l.lambda[2];
  Scalar out = tpow(-sum);
  for (int k = 0; k < 3; k++)
    for (int i = 0; i < l.lambda[k]; i++)
      out *= (Scalar(1) - tpow(4) * qpow(2 * i)) / (Scalar(1) - tpow(2) * qpow(2 * i));
  return out;
}

} // namespace macdual

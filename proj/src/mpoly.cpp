#include "macdual/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "macdual/error.hpp"

namespace macdual {

const char* const kGenName[NGEN] = {"Q", "T", "A", "B", "C", "D", "S"};

MPoly::MPoly(const mpq_class& c) {
  if (c != 0) terms_[Expo{}] = c;
}

MPoly MPoly::gen(Gen g, int power) {
  MPoly p;
  Expo e{};
  e[g] = power;
  p.terms_[e] = 1;
  return p;
}

MPoly MPoly::monomial(const Expo& e, const mpq_class& c) {
  MPoly p;
  if (c != 0) p.terms_[e] = c;
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo{});
}

mpq_class MPoly::constant_value() const {
  auto it = terms_.find(Expo{});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

int MPoly::degree(int g) const {
  int d = -1;
  for (auto& [e, c] : terms_) d = std::max(d, int(e[g]));
  return d;
}

int MPoly::total_degree() const {
  int d = -1;
  for (auto& [e, c] : terms_) {
    int s = 0;
    for (int i = 0; i < NGEN; i++) s += e[i];
    d = std::max(d, s);
  }
  return d;
}

const std::pair<const Expo, mpq_class>& MPoly::leading() const {
  if (terms_.empty()) fail(ErrKind::Internal, "leading() of zero polynomial");
  return *terms_.rbegin();
}

void MPoly::strip_zero() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) it = terms_.erase(it);
    else ++it;
  }
}

MPoly MPoly::operator-() const {
  MPoly r;
  for (auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (auto& [e, c] : o.terms_) {
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (auto& [e, c] : o.terms_) {
    auto [it, fresh] = terms_.emplace(e, -c);
    if (!fresh) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MPoly MPoly::operator+(const MPoly& o) const { MPoly r = *this; r += o; return r; }
MPoly MPoly::operator-(const MPoly& o) const { MPoly r = *this; r -= o; return r; }

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r;
  if (terms_.empty() || o.terms_.empty()) return r;
  for (auto& [ea, ca] : terms_) {
    for (auto& [eb, cb] : o.terms_) {
      Expo e;
      for (int i = 0; i < NGEN; i++) e[i] = ea[i] + eb[i];
      auto [it, fresh] = r.terms_.emplace(e, ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  }
  r.strip_zero();
  return r;
}

MPoly MPoly::mul_coeff(const mpq_class& c) const {
  MPoly r;
  if (c == 0) return r;
  for (auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

MPoly MPoly::mul_monomial(const Expo& m, const mpq_class& c) const {
  MPoly r;
  if (c == 0) return r;
  for (auto& [e, v] : terms_) {
    Expo e2;
    for (int i = 0; i < NGEN; i++) e2[i] = e[i] + m[i];
    r.terms_[e2] = v * c;
  }
  return r;
}

bool MPoly::try_exact_div(const MPoly& d, MPoly* quot) const {
  if (d.is_zero()) fail(ErrKind::MalformedInput, "division by zero polynomial");
  MPoly q, r = *this;
  const auto& [de, dc] = d.leading();
  while (!r.is_zero()) {
    const auto& [re, rc] = r.leading();
    Expo e;
    for (int i = 0; i < NGEN; i++) {
      e[i] = re[i] - de[i];
      if (e[i] < 0) return false;
    }
    mpq_class c = rc / dc;
    q.terms_[e] = c;
    r -= d.mul_monomial(e, c);
  }
  *quot = std::move(q);
  return true;
}

MPoly MPoly::exact_div(const MPoly& d) const {
  MPoly q;
  if (!try_exact_div(d, &q))
    fail(ErrKind::DivisionRemainder,
         "exact polynomial division left a remainder: (" + str() + ") / (" + d.str() + ")");
  return q;
}

void MPoly::int_primitive(mpq_class* content, MPoly* primitive) const {
  if (terms_.empty()) {
    *content = 0;
    *primitive = MPoly();
    return;
  }
  mpz_class den_lcm = 1;
  for (auto& [e, c] : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (auto& [e, c] : terms_) {
    mpz_class n = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  mpq_class cont(num_gcd, den_lcm);
  cont.canonicalize();
  MPoly prim;
  for (auto& [e, c] : terms_) prim.terms_[e] = c / cont;
  *content = cont;
  *primitive = std::move(prim);
}

int MPoly::min_degree(int g) const {
  if (terms_.empty()) return 0;
  int d = INT32_MAX;
  for (auto& [e, c] : terms_) d = std::min(d, int(e[g]));
  return d;
}

MPoly MPoly::coeff_of(int g, int k) const {
  MPoly r;
  for (auto& [e, c] : terms_) {
    if (e[g] == k) {
      Expo e2 = e;
      e2[g] = 0;
      r.terms_[e2] = c;
    }
  }
  return r;
}

MPoly MPoly::subst_power_shift(int g, int delta) const {
  MPoly r;
  for (auto& [e, c] : terms_) {
    Expo e2 = e;
    e2[g] += delta;
    if (e2[g] < 0) fail(ErrKind::Internal, "negative exponent in power shift");
    r.terms_[e2] = c;
  }
  return r;
}

size_t MPoly::hash() const {
  size_t h = 1469598103934665603ull;
  for (auto& [e, c] : terms_) {
    for (int i = 0; i < NGEN; i++) h = (h ^ size_t(e[i] + 7)) * 1099511628211ull;
    h = (h ^ mpz_fdiv_ui(c.get_num_mpz_t(), 1000000007)) * 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// gcd machinery: monomial/content stripping, a sound modular triviality
// certificate, and a subresultant polynomial-remainder sequence for the rest.
// ---------------------------------------------------------------------------

namespace {

// Univariate view of p in variable v: map degree -> coefficient polynomial.
std::vector<MPoly> univariate_view(const MPoly& p, int v) {
  std::vector<MPoly> cs(size_t(p.degree(v)) + 1);
  for (auto& [e, c] : p.terms()) {
    Expo e2 = e;
    e2[v] = 0;
    cs[e[v]] += MPoly::monomial(e2, c);
  }
  return cs;
}

MPoly pow_poly(const MPoly& p, int n) {
  MPoly r(mpq_class(1));
  for (int i = 0; i < n; i++) r = r * p;
  return r;
}

// Pseudo-remainder of f by d in variable v (deg_v f >= deg_v d > 0 assumed).
MPoly prem(const MPoly& f, const MPoly& d, int v) {
  int df = f.degree(v), dd = d.degree(v);
  MPoly lcd = d.coeff_of(v, dd);
  MPoly r = f;
  int e = df - dd + 1;
  while (!r.is_zero() && r.degree(v) >= dd) {
    int dr = r.degree(v);
    MPoly lcr = r.coeff_of(v, dr);
    Expo shift{};
    shift[v] = dr - dd;
    r = r * lcd - d.mul_monomial(shift, 1) * lcr;
    e--;
  }
  if (e > 0) r = r * pow_poly(lcd, e);
  return r;
}

MPoly content_in_var(const MPoly& p, int v) {
  auto cs = univariate_view(p, v);
  MPoly g;
  for (auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : MPoly::gcd(g, c);
    if (g.is_constant()) break;
  }
  return g.is_zero() ? MPoly(mpq_class(1)) : g;
}

// gcd of pp_v(a) and pp_v(b) via the subresultant PRS; inputs primitive in v.
MPoly subres_gcd(MPoly P, MPoly Q, int v) {
  if (P.degree(v) < Q.degree(v)) std::swap(P, Q);
  MPoly g(mpq_class(1)), h(mpq_class(1));
  while (true) {
    int delta = P.degree(v) - Q.degree(v);
    MPoly R = prem(P, Q, v);
    if (R.is_zero()) break;
    if (R.degree(v) == 0) return MPoly(mpq_class(1));
    P = Q;
    Q = R.exact_div(g * pow_poly(h, delta));
    g = P.coeff_of(v, P.degree(v));
    if (delta > 0) h = pow_poly(g, delta).exact_div(pow_poly(h, delta - 1));
  }
  return Q.exact_div(content_in_var(Q, v));
}

// --- modular triviality certificate -----------------------------------------

constexpr uint64_t kPrimes[] = {2147483647ull, 2147483629ull, 2147483587ull};

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) { return (a * b) % p; }

uint64_t powmod(uint64_t a, uint64_t n, uint64_t p) {
  uint64_t r = 1;
  a %= p;
  while (n) {
    if (n & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    n >>= 1;
  }
  return r;
}

struct XorShift {
  uint64_t s;
  explicit XorShift(uint64_t seed) : s(seed * 2654435769ull + 1) {}
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
};

// Image of p (integer coefficients) as a univariate polynomial in v mod prime,
// other variables evaluated at the given points. Returns false if the leading
// v-coefficient vanished (unlucky point).
bool modular_image(const MPoly& p, int v, const std::array<uint64_t, NGEN>& pt,
                   uint64_t prime, std::vector<uint64_t>* out) {
  int d = p.degree(v);
  std::vector<uint64_t> img(size_t(d) + 1, 0);
  for (auto& [e, c] : p.terms()) {
    uint64_t val = mpz_fdiv_ui(c.get_num_mpz_t(), prime);
    for (int i = 0; i < NGEN; i++) {
      if (i == v || e[i] == 0) continue;
      val = mulmod(val, powmod(pt[i], uint64_t(e[i]), prime), prime);
    }
    img[e[v]] = (img[e[v]] + val) % prime;
  }
  while (!img.empty() && img.back() == 0) img.pop_back();
  if (int(img.size()) - 1 != d) return false;
  *out = std::move(img);
  return true;
}

int univ_gcd_degree_mod(std::vector<uint64_t> a, std::vector<uint64_t> b, uint64_t p) {
  auto norm = [](std::vector<uint64_t>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  };
  norm(a); norm(b);
  while (!b.empty()) {
    // a mod b
    uint64_t inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      uint64_t f = mulmod(a.back(), inv, p);
      size_t off = a.size() - b.size();
      for (size_t i = 0; i < b.size(); i++)
        a[off + i] = (a[off + i] + p - mulmod(f, b[i], p)) % p;
      norm(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return int(a.size()) - 1;
}

// Sound certificate that gcd(a, b) has degree 0 in v: if the images keep full
// v-degree and their univariate gcd mod p is constant, any common divisor must
// be v-free (its image divides the image gcd while its cofactor keeps degree).
bool certified_trivial_in_var(const MPoly& a, const MPoly& b, int v) {
  for (int attempt = 0; attempt < 4; attempt++) {
    uint64_t prime = kPrimes[attempt % 3];
    XorShift rng(0x9E3779B97F4A7C15ull + uint64_t(v) * 131 + uint64_t(attempt));
    std::array<uint64_t, NGEN> pt{};
    for (int i = 0; i < NGEN; i++) pt[i] = rng.next() % (prime - 2) + 1;
    std::vector<uint64_t> ia, ib;
    if (!modular_image(a, v, pt, prime, &ia)) continue;
    if (!modular_image(b, v, pt, prime, &ib)) continue;
    return univ_gcd_degree_mod(ia, ib, prime) == 0;
  }
  return false;
}

MPoly strip_monomial(const MPoly& p, Expo* mono) {
  Expo m{};
  for (int i = 0; i < NGEN; i++) m[i] = p.min_degree(i);
  *mono = m;
  MPoly r;
  for (auto& [e, c] : p.terms()) {
    Expo e2;
    for (int i = 0; i < NGEN; i++) e2[i] = e[i] - m[i];
    r += MPoly::monomial(e2, c);
  }
  return r;
}

MPoly sign_normalize(MPoly p) {
  if (!p.is_zero() && p.leading().second < 0) return -p;
  return p;
}

// gcd of the coefficients of p viewed as a polynomial in the variables
// outside keep; the result involves kept variables only. Any common divisor
// of p with a keep-only polynomial divides every such coefficient.
MPoly coeff_gcd_outside(const MPoly& p, const std::array<bool, NGEN>& keep) {
  std::map<Expo, MPoly> groups;
  for (auto& [e, c] : p.terms()) {
    Expo outer{}, inner{};
    for (int i = 0; i < NGEN; i++) (keep[i] ? inner : outer)[i] = e[i];
    groups[outer] += MPoly::monomial(inner, c);
  }
  MPoly g;
  for (auto& [o, q] : groups) {
    g = g.is_zero() ? q : MPoly::gcd(g, q);
    if (g.is_constant()) break;
  }
  return g;
}

} // namespace

MPoly gcd_impl(MPoly a, MPoly b) {
  // Primitive integer parts; rational content is the caller's business.
  mpq_class ca, cb;
  MPoly pa, pb;
  a.int_primitive(&ca, &pa);
  b.int_primitive(&cb, &pb);

  Expo ma, mb;
  pa = strip_monomial(pa, &ma);
  pb = strip_monomial(pb, &mb);
  Expo mg;
  for (int i = 0; i < NGEN; i++) mg[i] = std::min(ma[i], mb[i]);
  MPoly mono = MPoly::monomial(mg, 1);

  if (pa == pb) return sign_normalize(pa.mul_monomial(mg, 1));
  if (pa.is_constant() || pb.is_constant()) return mono;

  std::vector<int> common;
  std::array<bool, NGEN> keep{};
  for (int v = 0; v < NGEN; v++)
    if (pa.degree(v) > 0 && pb.degree(v) > 0) {
      common.push_back(v);
      keep[v] = true;
    }
  if (common.empty()) return mono;

  // Shed variables only one side has: the gcd lives in the common set, so
  // each side may be replaced by the gcd of its coefficients over the rest.
  auto only_common = [&keep](const MPoly& p) {
    for (int v = 0; v < NGEN; v++)
      if (!keep[v] && p.degree(v) > 0) return false;
    return true;
  };
  if (!only_common(pa) || !only_common(pb)) {
    MPoly ra = only_common(pa) ? pa : coeff_gcd_outside(pa, keep);
    MPoly rb = only_common(pb) ? pb : coeff_gcd_outside(pb, keep);
    return sign_normalize(MPoly::gcd(ra, rb).mul_monomial(mg, 1));
  }

  // Mutual divisibility: very common when reducing a fraction whose
  // denominator survives intact in the numerator.
  {
    const MPoly& small = pa.size() <= pb.size() ? pa : pb;
    const MPoly& large = pa.size() <= pb.size() ? pb : pa;
    bool deg_ok = true;
    for (int v : common)
      if (small.degree(v) > large.degree(v)) { deg_ok = false; break; }
    MPoly quot;
    if (deg_ok && large.try_exact_div(small, &quot))
      return sign_normalize(small.mul_monomial(mg, 1));
  }

  std::vector<int> live;
  for (int v : common)
    if (!certified_trivial_in_var(pa, pb, v)) live.push_back(v);
  if (live.empty()) return mono;

  int v = live[0];
  int best = INT32_MAX;
  for (int u : live) {
    int w = std::min(pa.degree(u), pb.degree(u));
    if (w < best) { best = w; v = u; }
  }

  MPoly conta = content_in_var(pa, v);
  MPoly contb = content_in_var(pb, v);
  MPoly ppa = pa.exact_div(conta);
  MPoly ppb = pb.exact_div(contb);
  MPoly g = MPoly::gcd(conta, contb) * subres_gcd(ppa, ppb, v);

  mpq_class gc;
  MPoly gp;
  g.int_primitive(&gc, &gp);
  return sign_normalize(gp.mul_monomial(mg, 1));
}

MPoly MPoly::gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return sign_normalize(b);
  if (b.is_zero()) return sign_normalize(a);
  return gcd_impl(a, b);
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpq_class ac = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_var = false;
    for (int i = 0; i < NGEN; i++) has_var = has_var || e[i] != 0;
    if (ac != 1 || !has_var) {
      os << ac.get_str();
      if (has_var) os << "*";
    }
    bool firstv = true;
    for (int i = 0; i < NGEN; i++) {
      if (e[i] == 0) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << kGenName[i];
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

} // namespace macdual

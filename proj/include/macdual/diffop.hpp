#pragma once

#include <map>
#include <string>
#include <vector>

#include "macdual/laurent.hpp"
#include "macdual/qseries.hpp"

namespace macdual {

// Which kind of variable the shifts act on: multiplicative x_i -> q^{e_i} x_i
// or the spectral side Lambda_i -> q^{e_i} Lambda_i. Purely a tag: the
// mechanics are identical, but mixing the two is always a bug.
enum class OpFlavor { X, Lambda };

// q-difference operator: finite sum of (rational coefficient) * (shift).
// One term per shift vector; coefficients are kept as unreduced ratios and
// compared by cross-multiplication.
class DiffOp {
 public:
  using Terms = std::map<XExpo, LaurentRatio, XGrlexLess>;

  DiffOp(int dim, OpFlavor flavor) : dim_(dim), flavor_(flavor) {}
  static DiffOp identity(int dim, OpFlavor flavor);

  int dim() const { return dim_; }
  OpFlavor flavor() const { return flavor_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const;

  // Merges into an existing term with the same shift, drops exact zeros.
  void add_term(const XExpo& shift, const LaurentRatio& coeff);

  DiffOp operator+(const DiffOp&) const;
  DiffOp operator-(const DiffOp&) const;
  DiffOp mul_ratio(const LaurentRatio& f) const;  // multiply on the left
  DiffOp mul_scalar(const Scalar& c) const;

  // Sum of c_e(x) f(q^e x), cleared over a common denominator and divided
  // out exactly. DivisionRemainder if the result is not Laurent-polynomial.
  LaurentPoly apply(const LaurentPoly& f) const;

  bool operator==(const DiffOp&) const;
  bool operator!=(const DiffOp& o) const { return !(*this == o); }

  std::string str() const;

 private:
  int dim_;
  OpFlavor flavor_;
  Terms terms_;
};

// (D1 compose D2) f = D1(D2(f)): coefficients c1(x) c2(q^{e1} x).
DiffOp compose(const DiffOp& d1, const DiffOp& d2);
DiffOp commutator(const DiffOp& d1, const DiffOp& d2);

// A named constructor from the fixed operator zoo. Fields beyond the tag are
// read per family: a/n for the symmetric-family operators, i/j for the
// three-variable pair operators, ell for the genus-2 Pieri label, m for the
// signed-family order, params for anything Koornwinder.
struct OperatorFamily {
  enum class Tag {
    MacdonaldA,       // D_{a,n}, x-space
    KoornwinderD1,    // D_1^{(a,b,c,d)}, x-space
    GenusTwo,         // D_{i,j}^{(2)}, x-space
    PieriAExplicit,   // H_a, lambda-space quantum torus display
    PieriG2Explicit,  // H_ell^{(2)}, lambda-space display
    PieriAd,          // Ad-constructed Pieri operator
    WhittakerA,       // t->infinity of t^{-a(N-a)} D_{a,n}
    WhittakerG2,      // t->infinity of t^{-1} D_{i,j}^{(2)}
    TodaA,            // H_1 limit: T_1 + sum (1 - L_i/L_{i-1}) T_i
    TodaG2,           // H_ell^{(2)} limit
    A1WhittakerD1,    // one-variable factor of WhittakerG2
  };
  Tag tag;
  int a = 1, n = 0;
  int i = 1, j = 2;
  int ell = 1;
  int m = 1;
  TheoryKind kind = TheoryKind::A(1);
  KoornwinderParams params{};

  static OperatorFamily macdonald_a(int a, int n = 0);
  static OperatorFamily koornwinder_d1(KoornwinderParams p);
  static OperatorFamily genus_two(int i, int j);
  static OperatorFamily pieri_a_explicit(int a);
  static OperatorFamily pieri_g2_explicit(int ell);
  static OperatorFamily pieri_ad(TheoryKind kind, int index,
                                 KoornwinderParams p = KoornwinderParams{});
  static OperatorFamily whittaker_a(int a, int n = 0);
  static OperatorFamily whittaker_g2(int i, int j);
  static OperatorFamily toda_a();
  static OperatorFamily toda_g2(int ell);
  static OperatorFamily a1_whittaker_d1();

  std::string str() const;
};

DiffOp build_operator(const OperatorFamily& fam, int N);

// Pieri operator by conjugating the eigenvalue operator with the inverse
// weight-function prefactor at the formal spectral point: lambda-space, with
// coefficients the finite shifted-weight ratios. For the signed family the
// index is the order m (only m=1 is wired) and params must be a preset whose
// starred letters stay signed monomials; A takes index a, the genus-2 family
// takes index ell.
DiffOp ad_pieri(const TheoryKind& kind, int index,
                const KoornwinderParams& params = KoornwinderParams{});

// t->infinity limit of T^{2 renorm} D, term by term; terms with negative
// T-excess vanish, positive excess is a DivergentLimit naming the shift.
DiffOp op_t_limit(const DiffOp& d, int renorm);

// Core of the Pieri construction, exposed for cross-checks: reinterpret an
// x-space operator at the formal spectral point x_i = scale_i * Lambda_i and
// conjugate by the inverse weight prefactor together with the diagonal
// monomial weight prod_i (letter * T^{w_i})^{lambda_i}. Each term at shift
// eps picks up [Delta(q^eps s)/Delta(s)] and (letter^{sum eps} T^{(w,eps)})^{-1}.
DiffOp ad_conjugate(const DiffOp& base, const DeltaFamily& fam,
                    const std::vector<Monomial>& scale,
                    const std::vector<int>& weight_T, const Monomial& weight_letter);

// Coefficient of a lambda-space operator at the lattice point Lambda = q^l.
Scalar coefficient_at(const DiffOp& d, const XExpo& shift, const WeightLabel& l);

// Coefficient of ad_pieri(kind, index, params) at shift and Lambda = q^l,
// computed factor by factor instead of from the assembled rational
// coefficient. Equal to coefficient_at(ad_pieri(...), shift, l) wherever the
// latter is defined, but stays cheap for the signed family at six-letter
// parameter rows, resolves the removable zero-denominators of the degenerate
// letter rows, and returns an exact zero at shifts leaving the dominant cone.
Scalar ladder_coefficient(const TheoryKind& kind, int index, const XExpo& shift,
                          const WeightLabel& l,
                          const KoornwinderParams& params = KoornwinderParams{});

// Elementary part of the genus-2 normalization factor
//   r(l) = t^{-(rho,l)} prod_k prod_{i<l_k} (1-t^4 q^{2i})/(1-t^2 q^{2i}) / P_l(t^rho);
// this returns everything except the principal value P_l(t^rho), which the
// caller divides out once the eigenfunction is known.
Scalar genus2_psi_prefactor(const WeightLabel& l);

} // namespace macdual

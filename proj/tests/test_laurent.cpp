#include "doctest.h"
#include "macdual/error.hpp"
#include "macdual/laurent.hpp"

using namespace macdual;

namespace {
LaurentPoly X(int dim, int i, int p = 1) { return LaurentPoly::var(dim, i, p); }
LaurentPoly K(int dim, long v) { return LaurentPoly::constant(dim, Scalar(v)); }
} // namespace

TEST_CASE("laurent arithmetic") {
  auto x1 = X(2, 0), x2 = X(2, 1);
  CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
  CHECK((x1 * X(2, 0, -1)) == K(2, 1));
  auto p = x1 + x2.mul_scalar(Scalar::gen(GT));
  CHECK(p.coeff({0, 1}) == Scalar::gen(GT));
  CHECK(p.coeff({5, 5}).is_zero());
  CHECK((p - p).is_zero());
  // leading term is graded-lex largest
  CHECK((x1 * x1 + x2).leading().first == XExpo{2, 0});
  CHECK((x1 + x2).leading().first == XExpo{1, 0});  // ties break toward x1
}

TEST_CASE("laurent exact division") {
  auto x1 = X(2, 0), x2 = X(2, 1);
  CHECK((x1 * x1 - x2 * x2).exact_div(x1 - x2) == x1 + x2);
  // pure Laurent case: (x - 1/x) / (1 - 1/x^2) = x
  auto f = X(1, 0) - X(1, 0, -1);
  auto d = K(1, 1) - X(1, 0, -2);
  CHECK(f.exact_div(d) == X(1, 0));
  LaurentPoly q(2);
  CHECK_FALSE((x1 * x1 + x2).try_exact_div(x1 + x2, &q));
  CHECK_THROWS_AS((x1 * x1 + x2).exact_div(x1 + x2), Error);
  CHECK(LaurentPoly(2).exact_div(x1 + x2).is_zero());
}

TEST_CASE("q-shift") {
  auto x1 = X(2, 0), x2 = X(2, 1);
  auto p = x1 * x1 + x2;
  auto sh = p.q_shift({1, 0});  // x1 -> q x1
  CHECK(sh == x1.mul_scalar(Scalar::gen(GQ, 4)) * x1 + x2);
  auto inv = X(1, 0, -1).q_shift({1});
  CHECK(inv == X(1, 0, -1).mul_scalar(Scalar::gen(GQ, -2)));
}

TEST_CASE("symmetrization over the three group types") {
  GroupAction s2 = group_action(TheoryKind::A(2));
  CHECK(symmetrize(X(2, 0), s2) == X(2, 0) + X(2, 1));
  CHECK(symmetrize(X(2, 0) * X(2, 1), s2) == (X(2, 0) * X(2, 1)).mul_scalar(Scalar(2)));

  GroupAction z2 = group_action(TheoryKind::K(1));
  CHECK(symmetrize(X(1, 0), z2) == X(1, 0) + X(1, 0, -1));

  GroupAction inv3 = group_action(TheoryKind::G2());
  CHECK(symmetrize(K(3, 1), inv3) == K(3, 8));
  CHECK(inv3.order() == 8);
  CHECK(group_action(TheoryKind::K(2)).order() == 8);
  CHECK(group_action(TheoryKind::A(4)).order() == 24);

  // invariance under a generator, and bilinearity against an invariant factor
  auto f = X(2, 0) * X(2, 0) * X(2, 1);
  auto sym = symmetrize(f, s2);
  LaurentPoly swapped(2);
  for (auto& [e, c] : sym.terms())
    swapped += LaurentPoly::monomial({e[1], e[0]}, c);
  CHECK(swapped == sym);
  auto g = X(2, 0) * X(2, 1);  // invariant
  CHECK(symmetrize(f * g, s2) == symmetrize(f, s2) * g);
}

TEST_CASE("monomial basis") {
  CHECK(basis_monomial(WeightLabel(TheoryKind::A(2), {1, 0})) == X(2, 0) + X(2, 1));
  CHECK(basis_monomial(WeightLabel(TheoryKind::A(2), {1, 1})) == X(2, 0) * X(2, 1));
  CHECK(basis_monomial(WeightLabel(TheoryKind::K(1), {1})) == X(1, 0) + X(1, 0, -1));
  CHECK(basis_monomial(WeightLabel(TheoryKind::G2(), {1, 1, 0})) ==
        X(3, 0) + X(3, 0, -1));
  CHECK(basis_monomial(WeightLabel(TheoryKind::K(2), {1, 1})).size() == 4);
  CHECK(basis_monomial(WeightLabel(TheoryKind::G2(), {2, 2, 2})).size() == 8);
  CHECK(basis_monomial(WeightLabel(TheoryKind::G2(), {0, 0, 0})) == K(3, 1));
  // monic leading coefficient
  auto m = basis_monomial(WeightLabel(TheoryKind::A(3), {2, 1, 0}));
  CHECK(m.coeff({2, 1, 0}).is_one());
}

TEST_CASE("elementary multipliers") {
  CHECK(elementary(TheoryKind::A(2), 1) == X(2, 0) + X(2, 1));
  CHECK(elementary(TheoryKind::A(3), 2) ==
        X(3, 0) * X(3, 1) + X(3, 0) * X(3, 2) + X(3, 1) * X(3, 2));
  CHECK(elementary(TheoryKind::A(3), 3) == X(3, 0) * X(3, 1) * X(3, 2));
  CHECK(elementary(TheoryKind::K(1), 1) == X(1, 0) + X(1, 0, -1));
  CHECK(elementary(TheoryKind::K(2), 1) ==
        X(2, 0) + X(2, 0, -1) + X(2, 1) + X(2, 1, -1));
  // e_2 over {x1, 1/x1, x2, 1/x2} includes the two unit products
  auto e2 = elementary(TheoryKind::K(2), 2);
  CHECK(e2.coeff({0, 0}) == Scalar(2));
  CHECK(e2.coeff({1, 1}).is_one());
  CHECK(e2.coeff({1, -1}).is_one());
  CHECK(e2.size() == 5);
  CHECK(elementary(TheoryKind::G2(), 3) == X(3, 2) + X(3, 2, -1));
  CHECK_THROWS_AS(elementary(TheoryKind::A(2), 3), Error);
  CHECK_THROWS_AS(elementary(TheoryKind::G2(), 4), Error);
  CHECK_THROWS_AS(elementary(TheoryKind::K(2), 0), Error);
}

TEST_CASE("rational coefficient pairs") {
  auto x1 = X(2, 0), x2 = X(2, 1);
  LaurentRatio r1(x1 * x1 - x2 * x2, x1 - x2);
  CHECK(r1 == LaurentRatio::whole(x1 + x2));
  CHECK(r1 + LaurentRatio::whole(-x1 - x2) == LaurentRatio(LaurentPoly(2), K(2, 1)));
  LaurentRatio r2(K(2, 1), x1);
  CHECK(r2 * LaurentRatio::whole(x1) == LaurentRatio::constant(2, Scalar(1)));
  CHECK((r2 / r2) == LaurentRatio::constant(2, Scalar(1)));
  CHECK_THROWS_AS(LaurentRatio(x1, LaurentPoly(2)), Error);

  // evaluation
  LaurentRatio r3(x1 - x2, x1 + x2);
  Scalar q = Scalar::gen(GQ);
  CHECK(r3.eval({q * q, q}) == Scalar(MPoly::gen(GQ) - MPoly(mpq_class(1)),
                                      MPoly::gen(GQ) + MPoly(mpq_class(1))));
  CHECK_THROWS_AS(r3.eval({q, -q}), Error);

  // normalized form: minimal exponents stripped, monic denominator
  LaurentRatio r4(x1.mul_scalar(Scalar(3)), x1 * x1 - x1 * x2);
  LaurentRatio n = r4.normalized();
  CHECK(n.den().coeff({1, 0}).is_one() + n.den().coeff({0, 1}).is_one() >= 1);
  CHECK(n == r4);
  // leading den coefficient is one after normalization
  CHECK(n.den().leading().second.is_one());
}

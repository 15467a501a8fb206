#pragma once

#include <array>
#include <string>
#include <vector>

#include "macdual/scalar.hpp"

namespace macdual {

enum class Family { TypeA, Koornwinder, GenusTwo };

struct TheoryKind {
  Family family = Family::TypeA;
  int N = 1;  // ambient coordinates; the genus-2 analog always has 3

  static TheoryKind A(int n);
  static TheoryKind K(int n);
  static TheoryKind G2();
  int dim() const { return N; }
  bool operator==(const TheoryKind& o) const { return family == o.family && N == o.N; }
  bool operator!=(const TheoryKind& o) const { return !(*this == o); }
  bool operator<(const TheoryKind& o) const {
    return family != o.family ? family < o.family : N < o.N;
  }
  std::string str() const;
};

// Closed-form membership test for the genus-2 label set: coordinate sum even
// and every pair-sum dominates the third coordinate. (Equivalent to all three
// defining pairings being non-negative even integers.)
bool genus2_member(const std::array<int, 3>& l);

bool valid_label(const TheoryKind& k, const std::vector<int>& lambda);

struct WeightLabel {
  TheoryKind kind;
  std::vector<int> lambda;

  WeightLabel(TheoryKind k, std::vector<int> l);
  bool operator==(const WeightLabel& o) const {
    return kind == o.kind && lambda == o.lambda;
  }
  bool operator<(const WeightLabel& o) const {
    return kind != o.kind ? kind < o.kind : lambda < o.lambda;
  }
  std::string str() const;
};

struct RootFrame {
  TheoryKind kind;
  std::vector<std::vector<int>> positive_roots;
  std::vector<std::vector<int>> simple;     // spanning vectors alpha_i
  std::vector<std::vector<int>> omega;      // duals: (alpha_i, omega_j) = 2 delta_ij (genus 2)
  std::vector<std::vector<int>> cone_gens;  // monoid generators of Q_+
  std::string weyl;  // "symmetric" | "signed" | "inversions"
};

RootFrame root_frame(const TheoryKind& k);

// Non-negative combinations of the cone generators with coefficient sum
// at most height, in graded order, 0 included.
std::vector<std::vector<int>> cone_elements(const TheoryKind& k, int height);

// Membership of v in the positive cone; optionally reports the coefficient
// sum (the "height" grading the cone).
bool in_cone(const TheoryKind& k, const std::vector<int>& v, int* height = nullptr);

// All valid labels mu with lambda - mu in the positive cone, lambda itself
// first, sorted by increasing drop height (ties lexicographically).
std::vector<WeightLabel> dominance_lower_set(const WeightLabel& label);

// The spectral vector s = q^lambda t^rho in the kind's convention.
std::vector<Scalar> s_vector(const WeightLabel& label);
std::vector<Monomial> s_monomials(const WeightLabel& label);
// Same points for arbitrary integer vectors (e.g. a label moved off the
// dominant cone by a shift); no validity requirement on lambda.
std::vector<Monomial> s_monomials(const TheoryKind& kind, const std::vector<int>& lambda);

// Weyl-vector exponents: (N-1, ..., 0) for the two N-variable families,
// (1,1,1) for genus 2.
std::vector<int> rho(const TheoryKind& k);

// Exponent vector of the leading monomial of the monic eigenfunction:
// lambda itself, except genus 2 uses the omega-coordinates (alpha_i, lambda)/2.
std::vector<int> leading_exponent(const WeightLabel& label);

// All valid labels with coordinate sum at most bound, graded lexicographic.
std::vector<WeightLabel> labels_up_to(const TheoryKind& k, int bound);

} // namespace macdual

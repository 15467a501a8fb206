#include "macdual/rootdata.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "macdual/error.hpp"

namespace macdual {

TheoryKind TheoryKind::A(int n) {
  if (n < 1) fail(ErrKind::MalformedInput, "need at least one variable");
  return {Family::TypeA, n};
}

TheoryKind TheoryKind::K(int n) {
  if (n < 1) fail(ErrKind::MalformedInput, "need at least one variable");
  return {Family::Koornwinder, n};
}

TheoryKind TheoryKind::G2() { return {Family::GenusTwo, 3}; }

std::string TheoryKind::str() const {
  switch (family) {
    case Family::TypeA: return "A" + std::to_string(N);
    case Family::Koornwinder: return "K" + std::to_string(N);
    case Family::GenusTwo: return "G2";
  }
  return "?";
}

bool genus2_member(const std::array<int, 3>& l) {
  if ((l[0] + l[1] + l[2]) % 2 != 0) return false;
  return l[0] + l[1] >= l[2] && l[0] + l[2] >= l[1] && l[1] + l[2] >= l[0];
}

bool valid_label(const TheoryKind& k, const std::vector<int>& lambda) {
  if (int(lambda.size()) != k.dim()) return false;
  if (k.family == Family::GenusTwo)
    return genus2_member({lambda[0], lambda[1], lambda[2]});
  for (size_t i = 0; i + 1 < lambda.size(); i++)
    if (lambda[i] < lambda[i + 1]) return false;
  return lambda.back() >= 0;
}

WeightLabel::WeightLabel(TheoryKind k, std::vector<int> l)
    : kind(k), lambda(std::move(l)) {
  if (!valid_label(kind, lambda)) {
    std::string s;
    for (int v : lambda) s += std::to_string(v) + ",";
    fail(ErrKind::MalformedInput, "invalid weight label (" + s + ") for kind " + kind.str());
  }
}

std::string WeightLabel::str() const {
  std::string s = kind.str() + ":(";
  for (size_t i = 0; i < lambda.size(); i++)
    s += (i ? "," : "") + std::to_string(lambda[i]);
  return s + ")";
}

RootFrame root_frame(const TheoryKind& k) {
  RootFrame f;
  f.kind = k;
  const int N = k.N;
  auto unit = [N](int i, int v) {
    std::vector<int> e(N, 0);
    e[i] = v;
    return e;
  };
  switch (k.family) {
    case Family::TypeA: {
      for (int i = 0; i < N; i++)
        for (int j = i + 1; j < N; j++) {
          auto r = unit(i, 1);
          r[j] = -1;
          f.positive_roots.push_back(r);
        }
      for (int i = 0; i + 1 < N; i++) {
        auto r = unit(i, 1);
        r[i + 1] = -1;
        f.simple.push_back(r);
      }
      f.cone_gens = f.simple;
      f.weyl = "symmetric";
      break;
    }
    case Family::Koornwinder: {
      for (int i = 0; i < N; i++)
        for (int j = i + 1; j < N; j++) {
          auto r = unit(i, 1);
          r[j] = -1;
          f.positive_roots.push_back(r);
          r[j] = 1;
          f.positive_roots.push_back(r);
        }
      for (int i = 0; i < N; i++) {
        f.positive_roots.push_back(unit(i, 1));
        f.positive_roots.push_back(unit(i, 2));
      }
      for (int i = 0; i + 1 < N; i++) {
        auto r = unit(i, 1);
        r[i + 1] = -1;
        f.simple.push_back(r);
      }
      f.simple.push_back(unit(N - 1, 1));
      f.cone_gens = f.simple;
      f.weyl = "signed";
      break;
    }
    case Family::GenusTwo: {
      f.simple = {{1, 1, -1}, {1, -1, 1}, {-1, 1, 1}};
      f.omega = {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
      f.positive_roots = f.simple;
      f.positive_roots.push_back({2, 0, 0});
      f.positive_roots.push_back({0, 2, 0});
      f.positive_roots.push_back({0, 0, 2});
      f.positive_roots.push_back({1, 1, 1});
      f.cone_gens = f.simple;
      f.weyl = "inversions";
      break;
    }
  }
  return f;
}

std::vector<std::vector<int>> cone_elements(const TheoryKind& k, int height) {
  if (height < 0) fail(ErrKind::MalformedInput, "negative cone height");
  auto gens = root_frame(k).cone_gens;
  const int dim = k.dim();
  std::set<std::pair<int, std::vector<int>>> acc;
  std::vector<int> cur(dim, 0);
  std::function<void(size_t, int)> rec = [&](size_t gi, int used) {
    if (gi == gens.size()) {
      acc.insert({used, cur});
      return;
    }
    std::vector<int> saved = cur;
    for (int c = 0; used + c <= height; c++) {
      rec(gi + 1, used + c);
      for (int j = 0; j < dim; j++) cur[j] += gens[gi][j];
    }
    cur = saved;
  };
  rec(0, 0);
  std::vector<std::vector<int>> out;
  out.reserve(acc.size());
  for (auto& [h, v] : acc) out.push_back(v);
  return out;
}

bool in_cone(const TheoryKind& k, const std::vector<int>& v, int* height) {
  if (int(v.size()) != k.dim()) fail(ErrKind::MalformedInput, "dimension mismatch");
  if (k.family == Family::GenusTwo) {
    int a = v[0], b = v[1], c = v[2];
    if (((a ^ b) & 1) || ((a ^ c) & 1)) return false;
    int c1 = (a + b) / 2, c2 = (a + c) / 2, c3 = (b + c) / 2;
    if (c1 < 0 || c2 < 0 || c3 < 0) return false;
    if (height) *height = c1 + c2 + c3;
    return true;
  }
  long p = 0, h = 0;
  for (int i = 0; i < k.N; i++) {
    p += v[i];
    if (k.family == Family::TypeA && i == k.N - 1) {
      if (p != 0) return false;
    } else {
      if (p < 0) return false;
      h += p;
    }
  }
  if (height) *height = int(h);
  return true;
}

std::vector<WeightLabel> dominance_lower_set(const WeightLabel& label) {
  const TheoryKind k = label.kind;
  long hbound = 0;
  {
    long p = 0;
    for (int i = 0; i < k.dim(); i++) {
      p += label.lambda[i];
      hbound += p;
    }
  }
  std::set<std::pair<int, std::vector<int>>> acc;
  for (auto& c : cone_elements(k, int(hbound))) {
    std::vector<int> mu(k.dim());
    for (int i = 0; i < k.dim(); i++) mu[i] = label.lambda[i] - c[i];
    if (!valid_label(k, mu)) continue;
    int h = 0;
    in_cone(k, c, &h);
    acc.insert({h, mu});
  }
  std::vector<WeightLabel> out;
  out.reserve(acc.size());
  for (auto& [h, mu] : acc) out.emplace_back(k, mu);
  return out;
}

std::vector<Monomial> s_monomials(const TheoryKind& kind, const std::vector<int>& lambda) {
  std::vector<Monomial> s;
  const int N = kind.N;
  if ((int)lambda.size() != kind.dim())
    fail(ErrKind::MalformedInput, "point vector does not match the rank");
  if (kind.family == Family::GenusTwo) {
    for (int l = 0; l < 3; l++)
      s.push_back(Monomial::gen(GT, 2) * Monomial::gen(GQ, 2 * lambda[l]));
    return s;
  }
  for (int i = 0; i < N; i++) {
    Monomial m =
        Monomial::gen(GQ, 2 * lambda[i]) * Monomial::gen(GT, 2 * (N - 1 - i));
    if (kind.family == Family::Koornwinder) m = m * Monomial::gen(GS);
    s.push_back(m);
  }
  return s;
}

std::vector<Monomial> s_monomials(const WeightLabel& label) {
  return s_monomials(label.kind, label.lambda);
}

std::vector<Scalar> s_vector(const WeightLabel& label) {
  std::vector<Scalar> s;
  for (const Monomial& m : s_monomials(label)) s.push_back(Scalar::from_monomial(m));
  return s;
}

std::vector<int> rho(const TheoryKind& k) {
  if (k.family == Family::GenusTwo) return {1, 1, 1};
  std::vector<int> r(k.N);
  for (int i = 0; i < k.N; i++) r[i] = k.N - 1 - i;
  return r;
}

std::vector<int> leading_exponent(const WeightLabel& label) {
  if (label.kind.family != Family::GenusTwo) return label.lambda;
  const auto& l = label.lambda;
  return {(l[0] + l[1] - l[2]) / 2, (l[0] - l[1] + l[2]) / 2, (-l[0] + l[1] + l[2]) / 2};
}

std::vector<WeightLabel> labels_up_to(const TheoryKind& k, int bound) {
  if (bound < 0) fail(ErrKind::MalformedInput, "negative label bound");
  std::set<std::pair<int, std::vector<int>>> acc;
  if (k.family == Family::GenusTwo) {
    for (int a = 0; a <= bound; a++)
      for (int b = 0; a + b <= bound; b++)
        for (int c = 0; a + b + c <= bound; c++)
          if (genus2_member({a, b, c})) acc.insert({a + b + c, {a, b, c}});
  } else {
    std::vector<int> cur(k.N, 0);
    std::function<void(int, int, int)> rec = [&](int i, int maxpart, int left) {
      if (i == k.N) {
        int tot = 0;
        for (int v : cur) tot += v;
        acc.insert({tot, cur});
        return;
      }
      for (int v = 0; v <= std::min(maxpart, left); v++) {
        cur[i] = v;
        rec(i + 1, v, left - v);
      }
      cur[i] = 0;
    };
    rec(0, bound, bound);
  }
  std::vector<WeightLabel> out;
  out.reserve(acc.size());
  for (auto& [h, l] : acc) out.emplace_back(k, l);
  return out;
}

} // namespace macdual

#pragma once

// Test-only oracle: realizes each simple type by its classical simple roots
// in orthonormal coordinates (scaled by 2 where half-integers appear) and
// enumerates the reflection group through its permutation action on the
// root list. Shares no code or coordinates with the library route.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "isoform/rational.hpp"
#include "isoform/root_system.hpp"

namespace euclid_oracle {

using isoform::Family;
using isoform::Rational;
using isoform::SimpleType;

using Vec = std::vector<Rational>;

inline std::vector<Vec> simple_roots(SimpleType t) {
  int n = t.rank;
  auto e = [](int dim, int i, long long c = 1) {
    Vec v(dim, Rational(0));
    v[i] = Rational(c);
    return v;
  };
  auto chain = [&](int dim) {
    std::vector<Vec> out;
    for (int i = 0; i + 1 < n; ++i) {
      Vec v(dim, Rational(0));
      v[i] = Rational(1);
      v[i + 1] = Rational(-1);
      out.push_back(v);
    }
    return out;
  };
  switch (t.family) {
    case Family::A: {
      std::vector<Vec> out;
      for (int i = 0; i < n; ++i) {
        Vec v(n + 1, Rational(0));
        v[i] = Rational(1);
        v[i + 1] = Rational(-1);
        out.push_back(v);
      }
      return out;
    }
    case Family::B: {
      auto out = chain(n);
      out.push_back(e(n, n - 1));
      return out;
    }
    case Family::C: {
      auto out = chain(n);
      out.push_back(e(n, n - 1, 2));
      return out;
    }
    case Family::D: {
      auto out = chain(n);
      Vec v(n, Rational(0));
      v[n - 2] = Rational(1);
      v[n - 1] = Rational(1);
      out.push_back(v);
      return out;
    }
    case Family::G: {
      // alpha1 = e1 - e2, alpha2 = -2 e1 + e2 + e3
      Vec a1{Rational(1), Rational(-1), Rational(0)};
      Vec a2{Rational(-2), Rational(1), Rational(1)};
      return {a1, a2};
    }
    case Family::F: {
      // e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2, scaled by 2
      return {{Rational(0), Rational(2), Rational(-2), Rational(0)},
              {Rational(0), Rational(0), Rational(2), Rational(-2)},
              {Rational(0), Rational(0), Rational(0), Rational(2)},
              {Rational(1), Rational(-1), Rational(-1), Rational(-1)}};
    }
    case Family::E: {
      // Bourbaki roots in R^8, scaled by 2.
      std::vector<Vec> out;
      Vec a1(8, Rational(-1));
      a1[0] = Rational(1);
      a1[7] = Rational(1);
      out.push_back(a1);  // (e1+e8)/2 - (e2+...+e7)/2, doubled
      Vec a2(8, Rational(0));
      a2[0] = Rational(2);
      a2[1] = Rational(2);
      out.push_back(a2);  // e1+e2, doubled
      auto diff = [](int i, int j) {
        Vec v(8, Rational(0));
        v[i] = Rational(2);
        v[j] = Rational(-2);
        return v;
      };
      out.push_back(diff(1, 0));  // e2-e1
      out.push_back(diff(2, 1));  // e3-e2
      out.push_back(diff(3, 2));  // e4-e3
      out.push_back(diff(4, 3));  // e5-e4
      if (n >= 7) out.push_back(diff(5, 4));
      if (n >= 8) out.push_back(diff(6, 5));
      return out;
    }
  }
  return {};
}

inline Rational dot(const Vec& a, const Vec& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec reflect(const Vec& alpha, const Vec& x) {
  Rational c = Rational(2) * dot(x, alpha) / dot(alpha, alpha);
  Vec out = x;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] -= c * alpha[i];
  return out;
}

/// Every root, by closing the simple roots under the simple reflections.
inline std::vector<Vec> all_roots(SimpleType t) {
  auto simples = simple_roots(t);
  std::set<Vec> seen(simples.begin(), simples.end());
  std::vector<Vec> frontier = simples;
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& x : frontier)
      for (const auto& a : simples) {
        Vec y = reflect(a, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// Group order via the permutation action on the root list.
inline long long weyl_order(SimpleType t) {
  auto roots = all_roots(t);
  std::map<Vec, int> index;
  for (std::size_t i = 0; i < roots.size(); ++i) index[roots[i]] = static_cast<int>(i);

  auto simples = simple_roots(t);
  std::vector<std::vector<int>> gens;
  for (const auto& a : simples) {
    std::vector<int> perm(roots.size());
    for (std::size_t j = 0; j < roots.size(); ++j) perm[j] = index.at(reflect(a, roots[j]));
    gens.push_back(std::move(perm));
  }

  std::vector<int> id(roots.size());
  for (std::size_t j = 0; j < roots.size(); ++j) id[j] = static_cast<int>(j);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier)
      for (const auto& g : gens) {
        std::vector<int> p(w.size());
        for (std::size_t j = 0; j < w.size(); ++j) p[j] = g[w[j]];
        if (seen.insert(p).second) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return static_cast<long long>(seen.size());
}

}  // namespace euclid_oracle

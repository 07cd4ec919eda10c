#include "isoform/pairs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "isoform/errors.hpp"
#include "isoform/weyl_group.hpp"

namespace isoform {

std::string construction_name(Construction c) {
  switch (c) {
    case Construction::fold: return "fold";
    case Construction::circle: return "circle";
    case Construction::regular: return "regular";
    case Construction::product: return "product";
    case Construction::central: return "central";
    case Construction::diagonal: return "diagonal";
  }
  return "?";
}

std::string PairData::canonical_bytes() const {
  std::string out = construction_name(construction) + "|" + g.str() + "|k:";
  for (int d : k_degrees) out += std::to_string(d) + ",";
  out += "|w:" + std::to_string(k_weyl_order);
  out += "|tk:" + tk.canonical_bytes();
  for (const auto& b : blocks) out += "{" + b.canonical_bytes() + "}";
  return out;
}

namespace {

std::vector<int> orbit_lengths(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<bool> visited(n, false);
  std::vector<int> lengths;
  for (int i = 0; i < n; ++i) {
    if (visited[i]) continue;
    int len = 0, j = i;
    while (!visited[j]) {
      visited[j] = true;
      ++len;
      j = perm[j] - 1;
    }
    lengths.push_back(len);
  }
  return lengths;
}

/// Fixed subalgebra type of a diagram automorphism, per the classical
/// folding table. B1 is returned as the isomorphic label A1.
SimpleType folded_type(SimpleType g, int order) {
  if (order == 1) return g;
  if (order == 2) {
    switch (g.family) {
      case Family::A: {
        int m = g.rank;
        if (m % 2 == 0) {  // A_{2n} -> B_n
          int n = m / 2;
          return n >= 2 ? SimpleType(Family::B, n) : SimpleType(Family::A, 1);
        }
        return SimpleType(Family::C, (m + 1) / 2);  // A_{2n-1} -> C_n, n >= 2
      }
      case Family::D:
        return g.rank - 1 >= 2 ? SimpleType(Family::B, g.rank - 1) : SimpleType(Family::A, 1);
      case Family::E:
        if (g.rank == 6) return SimpleType(Family::F, 4);
        break;
      default: break;
    }
  }
  if (order == 3 && g.family == Family::D && g.rank == 4) return SimpleType(Family::G, 2);
  throw UnsupportedFoldError("no fold of order " + std::to_string(order) + " for " + g.str());
}

std::vector<std::vector<Rational>> orbit_sum_basis(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<bool> visited(n, false);
  std::vector<std::vector<Rational>> basis;
  for (int i = 0; i < n; ++i) {
    if (visited[i]) continue;
    std::vector<Rational> v(n, Rational(0));
    int j = i;
    while (!visited[j]) {
      visited[j] = true;
      v[j] = Rational(1);
      j = perm[j] - 1;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

QMatrix diagram_automorphism_matrix(const RootSystem& rs, const std::vector<int>& permutation) {
  int n = rs.rank();
  if (static_cast<int>(permutation.size()) != n)
    throw NotDiagramAutomorphismError("permutation length " + std::to_string(permutation.size()) +
                                      " != rank " + std::to_string(n));
  std::vector<bool> hit(n, false);
  for (int x : permutation) {
    if (x < 1 || x > n || hit[x - 1])
      throw NotDiagramAutomorphismError("not a permutation of 1.." + std::to_string(n));
    hit[x - 1] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.cartan[permutation[i] - 1][permutation[j] - 1] != rs.cartan[i][j])
        throw NotDiagramAutomorphismError("permutation does not preserve the Cartan matrix of " +
                                          rs.type.str());
  QMatrix p(n, n);
  for (int i = 0; i < n; ++i) p.at(permutation[i] - 1, i) = Rational(1);
  return p;
}

PairData resolve_fold(const FoldSpec& spec) {
  RootSystem rs = build_root_system(spec.g_type);
  int n = rs.rank();
  std::vector<int> perm = spec.permutation;
  if (perm.empty()) {
    perm.resize(n);
    std::iota(perm.begin(), perm.end(), 1);
  }
  (void)diagram_automorphism_matrix(rs, perm);  // validates

  auto lengths = orbit_lengths(perm);
  int order = 1;
  for (int l : lengths) order = std::lcm(order, l);
  SimpleType k = folded_type(spec.g_type, order);

  PairData p;
  p.g = CompactAlgebra(spec.g_type);
  p.k_type = k;
  p.k_degrees = primitive_degrees(k);
  p.k_weyl_order = weyl_order_formula(k);
  p.tk = Subspace::span(n, orbit_sum_basis(perm));
  p.construction = Construction::fold;
  p.license = "automorphism-pair";
  p.provenance = "fold " + spec.g_type.str() + " (order " + std::to_string(order) + ") -> " +
                 k.str();
  if (p.tk.dim() != k.rank)
    throw InternalInconsistencyError("fold: fixed-space dimension " + std::to_string(p.tk.dim()) +
                                     " != rank of " + k.str());
  return p;
}

std::vector<Rational> trace_zero_to_simple_coords(const std::vector<Rational>& v) {
  if (v.size() < 2) throw ZeroDirectionError("trace-zero form needs at least 2 coordinates");
  Rational sum(0);
  for (const auto& x : v) sum += x;
  if (!sum.is_zero())
    throw ZeroDirectionError("trace-zero form must sum to zero, got " + sum.str());
  std::vector<Rational> out(v.size() - 1, Rational(0));
  Rational acc(0);
  for (std::size_t j = 0; j + 1 < v.size(); ++j) {
    acc += v[j];
    out[j] = acc;
  }
  return out;
}

PairData resolve_circle(const CircleSpec& spec) {
  int rank = spec.g.rank();
  std::vector<Rational> dir = spec.direction;
  if (spec.trace_zero) {
    if (spec.g.center_dim != 0 || spec.g.factors.size() != 1 ||
        spec.g.factors[0].family != Family::A)
      throw UnsupportedPairError("trace-zero coordinates require G to be a single type-A factor");
    if (static_cast<int>(dir.size()) != spec.g.factors[0].rank + 1)
      throw ZeroDirectionError("trace-zero direction needs rank+1 coordinates");
    dir = trace_zero_to_simple_coords(dir);
  }
  if (static_cast<int>(dir.size()) != rank)
    throw ZeroDirectionError("direction length " + std::to_string(dir.size()) +
                             " != rank " + std::to_string(rank));
  bool central = false, semisimple = false;
  for (int i = 0; i < rank; ++i) {
    if (dir[i].is_zero()) continue;
    (i < spec.g.center_dim ? central : semisimple) = true;
  }
  if (!central && !semisimple) throw ZeroDirectionError("circle direction is zero");

  PairData p;
  p.g = spec.g;
  p.k_degrees = {1};
  p.k_weyl_order = 1;
  p.tk = Subspace::span(rank, {dir});
  p.construction = Construction::circle;
  p.license = "circle-transgression";
  p.circle_central = central;
  p.circle_semisimple = semisimple;
  std::string coords;
  for (const auto& x : dir) coords += (coords.empty() ? "" : ",") + x.str();
  p.provenance = "circle in " + spec.g.str() + " along (" + coords + ")";
  return p;
}

namespace {

struct AmbientRoots {
  std::vector<std::vector<int>> all;  // positive and negative, full coordinates
  std::vector<std::vector<long long>> bilinear;
};

AmbientRoots ambient_roots(const CompactAlgebra& g) {
  AmbientRoots out;
  int rank = g.rank();
  out.bilinear.assign(rank, std::vector<long long>(rank, 0));
  for (int i = 0; i < g.center_dim; ++i) out.bilinear[i][i] = 1;
  int off = g.center_dim;
  for (const auto& t : g.factors) {
    RootSystem rs = build_root_system(t);
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) out.bilinear[off + i][off + j] = rs.bilinear[i][j];
    for (const auto& r : rs.positive_roots) {
      std::vector<int> full(rank, 0), neg(rank, 0);
      for (int i = 0; i < rs.rank(); ++i) {
        full[off + i] = r[i];
        neg[off + i] = -r[i];
      }
      out.all.push_back(std::move(full));
      out.all.push_back(std::move(neg));
    }
    off += rs.rank();
  }
  std::sort(out.all.begin(), out.all.end());
  return out;
}

std::vector<int> reflect_int(const std::vector<std::vector<long long>>& bilinear,
                             const std::vector<int>& alpha, const std::vector<int>& v) {
  int n = static_cast<int>(v.size());
  long long num = 0, len2 = 0;
  std::vector<long long> b_alpha(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b_alpha[i] += bilinear[i][j] * alpha[j];
  for (int i = 0; i < n; ++i) {
    num += b_alpha[i] * v[i];
    len2 += b_alpha[i] * alpha[i];
  }
  long long c = 2 * num / len2;
  if (c * len2 != 2 * num)
    throw InternalInconsistencyError("reflect_int: non-integral Cartan pairing");
  std::vector<int> out = v;
  for (int i = 0; i < n; ++i) out[i] -= static_cast<int>(c) * alpha[i];
  return out;
}

/// Orbit of the given roots under the reflection group they generate; this
/// is the root subsystem generated by them, since reflections in orbit
/// members are conjugates of the generating reflections.
std::set<std::vector<int>> reflection_subsystem(const AmbientRoots& amb,
                                                const std::vector<std::vector<int>>& gens) {
  std::set<std::vector<int>> sys(gens.begin(), gens.end());
  std::vector<std::vector<int>> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& v : frontier)
      for (const auto& alpha : gens) {
        auto w = reflect_int(amb.bilinear, alpha, v);
        if (sys.insert(w).second) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return sys;
}

bool is_positive_vec(const std::vector<int>& v) {
  for (int x : v) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return false;
}

/// Simple system, Cartan matrix, and component types of a closed subsystem.
std::vector<SimpleType> identify_components(const AmbientRoots& amb,
                                            const std::set<std::vector<int>>& sys) {
  std::vector<std::vector<int>> positives;
  for (const auto& r : sys)
    if (is_positive_vec(r)) positives.push_back(r);

  // Indecomposable positive roots form the simple system.
  std::set<std::vector<int>> pos_set(positives.begin(), positives.end());
  std::vector<std::vector<int>> simple;
  for (const auto& gamma : positives) {
    bool decomposable = false;
    for (const auto& d1 : positives) {
      std::vector<int> d2(gamma.size());
      for (std::size_t i = 0; i < gamma.size(); ++i) d2[i] = gamma[i] - d1[i];
      if (d2 == std::vector<int>(gamma.size(), 0)) continue;
      if (pos_set.count(d2)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(gamma);
  }

  int m = static_cast<int>(simple.size());
  int n = static_cast<int>(amb.bilinear.size());
  auto pairing = [&](const std::vector<int>& a, const std::vector<int>& b) -> long long {
    long long num = 0, len2 = 0;
    for (int i = 0; i < n; ++i) {
      long long bi = 0;
      for (int j = 0; j < n; ++j) bi += amb.bilinear[i][j] * b[j];
      num += static_cast<long long>(a[i]) * bi;
    }
    for (int i = 0; i < n; ++i) {
      long long bi = 0;
      for (int j = 0; j < n; ++j) bi += amb.bilinear[i][j] * a[j];
      len2 += static_cast<long long>(a[i]) * bi;
    }
    long long c = 2 * num / len2;
    if (c * len2 != 2 * num)
      throw InternalInconsistencyError("identify_components: non-integral Cartan entry");
    return c;
  };
  std::vector<std::vector<int>> cartan(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) cartan[i][j] = static_cast<int>(pairing(simple[i], simple[j]));

  // Connected components of the Dynkin graph.
  std::vector<int> comp(m, -1);
  int ncomp = 0;
  for (int i = 0; i < m; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < m; ++b)
        if (comp[b] < 0 && cartan[a][b] != 0) {
          comp[b] = ncomp;
          stack.push_back(b);
        }
    }
    ++ncomp;
  }

  std::vector<SimpleType> out;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> nodes;
    for (int i = 0; i < m; ++i)
      if (comp[i] == c) nodes.push_back(i);
    int r = static_cast<int>(nodes.size());
    std::vector<std::vector<int>> sub(r, std::vector<int>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) sub[i][j] = cartan[nodes[i]][nodes[j]];

    // Match against the candidate Cartan matrices of this rank up to a
    // simultaneous permutation of the nodes.
    std::vector<SimpleType> candidates;
    candidates.emplace_back(Family::A, r);
    if (r >= 2) candidates.emplace_back(Family::B, r);
    if (r >= 2) candidates.emplace_back(Family::C, r);
    if (r >= 3) candidates.emplace_back(Family::D, r);
    if (r >= 6 && r <= 8) candidates.emplace_back(Family::E, r);
    if (r == 4) candidates.emplace_back(Family::F, 4);
    if (r == 2) candidates.emplace_back(Family::G, 2);

    std::optional<SimpleType> found;
    for (const auto& cand : candidates) {
      RootSystem crs = build_root_system(cand);
      std::vector<int> perm(r);
      std::iota(perm.begin(), perm.end(), 0);
      bool match = false;
      do {
        bool ok = true;
        for (int i = 0; i < r && ok; ++i)
          for (int j = 0; j < r && ok; ++j)
            if (crs.cartan[perm[i]][perm[j]] != sub[i][j]) ok = false;
        if (ok) {
          match = true;
          break;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (match) {
        found = cand;
        break;
      }
    }
    if (!found)
      throw InternalInconsistencyError("identify_components: unrecognized component Cartan matrix");
    out.push_back(*found);
  }
  return out;
}

}  // namespace

PairData resolve_regular(const RegularSpec& spec) {
  int rank = spec.g.rank();
  if (rank == 0) throw UnsupportedPairError("regular: rank-0 ambient group");
  AmbientRoots amb = ambient_roots(spec.g);
  for (const auto& r : spec.sub_roots) {
    if (static_cast<int>(r.size()) != rank)
      throw RootNotInSystemError("regular: root length != rank G");
    if (!std::binary_search(amb.all.begin(), amb.all.end(), r)) {
      std::string txt;
      for (int x : r) txt += std::to_string(x) + " ";
      throw RootNotInSystemError("regular: (" + txt + ") is not a root of " + spec.g.str());
    }
  }

  auto sys = reflection_subsystem(amb, spec.sub_roots);
  // The subsystem must be additively closed in the ambient root system,
  // otherwise it is not the root system of a subalgebra.
  std::vector<std::vector<int>> sys_vec(sys.begin(), sys.end());
  for (const auto& a : sys_vec)
    for (const auto& b : sys_vec) {
      std::vector<int> s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      if (std::binary_search(amb.all.begin(), amb.all.end(), s) && !sys.count(s))
        throw NotClosedSubsystemError(
            "regular: generated subsystem is not additively closed in " + spec.g.str());
    }

  std::vector<std::vector<Rational>> span_rows;
  for (const auto& r : spec.sub_roots) {
    std::vector<Rational> row;
    for (int x : r) row.emplace_back(x);
    span_rows.push_back(std::move(row));
  }
  int span_dim = spec.sub_roots.empty() ? 0 : Subspace::span(rank, span_rows).dim();
  if (span_dim + spec.extra_center < rank)
    throw RankDeficientError("regular: span " + std::to_string(span_dim) + " + extra center " +
                             std::to_string(spec.extra_center) + " < rank " +
                             std::to_string(rank));
  if (span_dim + spec.extra_center > rank)
    throw UnsupportedPairError("regular: span + extra center exceeds rank G");

  PairData p;
  p.g = spec.g;
  p.k_weyl_order = reflection_closure_order(amb.bilinear, spec.sub_roots);
  std::vector<SimpleType> comps =
      spec.sub_roots.empty() ? std::vector<SimpleType>{} : identify_components(amb, sys);
  p.k_degrees.assign(static_cast<std::size_t>(spec.extra_center), 1);
  std::string comp_txt;
  for (const auto& t : comps) {
    auto d = primitive_degrees(t);
    p.k_degrees.insert(p.k_degrees.end(), d.begin(), d.end());
    comp_txt += (comp_txt.empty() ? "" : " x ") + t.str();
  }
  std::sort(p.k_degrees.begin(), p.k_degrees.end());
  p.k_generator_roots = spec.sub_roots;
  p.tk = Subspace::full(rank);
  p.construction = Construction::regular;
  p.license = "equal-rank";
  p.provenance = "regular subalgebra of " + spec.g.str() + ": " +
                 (comp_txt.empty() ? "torus" : comp_txt) +
                 (spec.extra_center > 0 ? " + U1^" + std::to_string(spec.extra_center) : "");

  // Two independent routes to |W(K)| must agree: reflection closure vs the
  // degree product of the identified component types.
  long long degree_route = 1;
  for (int d : p.k_degrees) degree_route *= (d + 1) / 2;
  if (degree_route != p.k_weyl_order)
    throw InternalInconsistencyError("regular: degree product " + std::to_string(degree_route) +
                                     " != closure order " + std::to_string(p.k_weyl_order));
  return p;
}

PairData resolve_product(const ProductPermSpec& spec) {
  if (spec.center_dim < 0) throw UnsupportedPairError("product: negative center dimension");
  if (spec.center_dim == 0 && spec.blocks.empty())
    throw UnsupportedPairError("product: empty specification");

  PairData top;
  top.construction = Construction::product;
  top.license = "kunneth";

  std::vector<SimpleType> all_factors;
  int total_rank = spec.center_dim;
  for (const auto& b : spec.blocks) {
    if (b.copies < 1) throw UnsupportedPairError("product: copies must be >= 1");
    for (int i = 0; i < b.copies; ++i) all_factors.push_back(b.factor);
    total_rank += b.copies * b.factor.rank;
  }
  top.g = CompactAlgebra(spec.center_dim, all_factors);

  std::vector<std::vector<Rational>> tk_rows;
  int offset = 0;

  if (spec.center_dim > 0) {
    PairData central;
    central.g = CompactAlgebra(spec.center_dim, {});
    central.k_degrees.assign(static_cast<std::size_t>(spec.center_dim), 1);
    central.k_weyl_order = 1;
    central.tk = Subspace::full(spec.center_dim);
    central.construction = Construction::central;
    central.license = "abelian";
    central.provenance = "central torus U1^" + std::to_string(spec.center_dim);
    top.blocks.push_back(std::move(central));
    for (int i = 0; i < spec.center_dim; ++i) {
      std::vector<Rational> row(total_rank, Rational(0));
      row[i] = Rational(1);
      tk_rows.push_back(std::move(row));
    }
    offset = spec.center_dim;
  }

  for (const auto& b : spec.blocks) {
    PairData inner = resolve_fold(FoldSpec{b.factor, b.return_automorphism});
    int nf = b.factor.rank;
    int block_rank = b.copies * nf;

    PairData block;
    if (b.copies == 1) {
      block = inner;  // a one-copy orbit is just the fold pair
    } else {
      block.g = CompactAlgebra(0, std::vector<SimpleType>(b.copies, b.factor));
      block.k_degrees = inner.k_degrees;
      block.k_weyl_order = inner.k_weyl_order;
      block.k_type = inner.k_type;
      std::vector<std::vector<Rational>> diag_rows;
      for (const auto& row : inner.tk.basis()) {
        std::vector<Rational> lifted;
        lifted.reserve(static_cast<std::size_t>(block_rank));
        for (int c = 0; c < b.copies; ++c) lifted.insert(lifted.end(), row.begin(), row.end());
        diag_rows.push_back(std::move(lifted));
      }
      block.tk = Subspace::span(block_rank, diag_rows);
      block.construction = Construction::diagonal;
      block.license = "kunneth-diagonal";
      block.provenance = "diagonal " + (inner.k_type ? inner.k_type->str() : std::string("K")) +
                         " in " + b.factor.str() + "^" + std::to_string(b.copies) +
                         " [" + inner.provenance + "]";
    }

    for (const auto& row : block.tk.basis()) {
      std::vector<Rational> full(total_rank, Rational(0));
      for (int i = 0; i < block_rank; ++i) full[offset + i] = row[i];
      tk_rows.push_back(std::move(full));
    }
    offset += block_rank;
    top.blocks.push_back(std::move(block));
  }

  top.k_degrees.clear();
  top.k_weyl_order = 1;
  for (const auto& b : top.blocks) {
    top.k_degrees.insert(top.k_degrees.end(), b.k_degrees.begin(), b.k_degrees.end());
    top.k_weyl_order *= b.k_weyl_order;
  }
  std::sort(top.k_degrees.begin(), top.k_degrees.end());
  top.tk = Subspace::span(total_rank, tk_rows);
  std::string prov;
  for (const auto& b : top.blocks) prov += (prov.empty() ? "" : "; ") + b.provenance;
  top.provenance = "product: " + prov;
  return top;
}

PairData resolve(const PairSpec& spec) {
  struct Visitor {
    PairData operator()(const FoldSpec& s) const { return resolve_fold(s); }
    PairData operator()(const CircleSpec& s) const { return resolve_circle(s); }
    PairData operator()(const RegularSpec& s) const { return resolve_regular(s); }
    PairData operator()(const ProductPermSpec& s) const { return resolve_product(s); }
  };
  return std::visit(Visitor{}, spec);
}

}  // namespace isoform

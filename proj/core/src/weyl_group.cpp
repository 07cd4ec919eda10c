#include "isoform/weyl_group.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "isoform/errors.hpp"

namespace isoform {

namespace {

using Bytes = std::string;

Bytes to_bytes(const std::vector<std::int8_t>& m) {
  return Bytes(reinterpret_cast<const char*>(m.data()), m.size());
}

// c = a * b for n x n int8 matrices, with range checking into int8.
std::vector<std::int8_t> mul(const std::int8_t* a, const std::int8_t* b, int n) {
  std::vector<std::int8_t> c(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      long long acc = 0;
      for (int k = 0; k < n; ++k)
        acc += static_cast<long long>(a[i * n + k]) * b[k * n + j];
      if (acc < -127 || acc > 127)
        throw InternalInconsistencyError("Weyl matrix entry out of int8 range");
      c[static_cast<std::size_t>(i) * n + j] = static_cast<std::int8_t>(acc);
    }
  }
  return c;
}

std::vector<std::int8_t> identity_bytes(int n) {
  std::vector<std::int8_t> m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;
  return m;
}

}  // namespace

QMatrix WeylGroup::element_matrix(std::size_t idx) const {
  QMatrix m(dim_, dim_);
  auto e = element(idx);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m.at(i, j) = Rational(e[static_cast<std::size_t>(i) * dim_ + j]);
  return m;
}

std::vector<long long> WeylGroup::apply(std::size_t idx, std::span<const long long> v) const {
  if (static_cast<int>(v.size()) != dim_)
    throw ShapeMismatchError("WeylGroup::apply: vector length mismatch");
  auto e = element(idx);
  std::vector<long long> out(dim_, 0);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      out[i] += static_cast<long long>(e[static_cast<std::size_t>(i) * dim_ + j]) * v[j];
  return out;
}

std::vector<Rational> WeylGroup::apply(std::size_t idx, const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != dim_)
    throw ShapeMismatchError("WeylGroup::apply: vector length mismatch");
  auto e = element(idx);
  std::vector<Rational> out(dim_, Rational(0));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      int c = e[static_cast<std::size_t>(i) * dim_ + j];
      if (c != 0) out[i] += Rational(c) * v[j];
    }
  return out;
}

WeylGroup WeylGroup::trivial(int dim) {
  WeylGroup g;
  g.dim_ = dim;
  g.size_ = 1;
  g.arena_ = identity_bytes(dim);
  g.bilinear_.assign(dim, std::vector<long long>(dim, 0));
  for (int i = 0; i < dim; ++i) g.bilinear_[i][i] = 1;
  return g;
}

WeylGroup enumerate_weyl(const RootSystem& rs, long long cap) {
  long long order = weyl_order_formula(rs.type);
  if (order > cap)
    throw CapExceededError("enumerate_weyl: |W(" + rs.type.str() + ")| = " +
                               std::to_string(order) + " exceeds cap " + std::to_string(cap),
                           order, cap);
  int n = rs.rank();

  WeylGroup g;
  g.dim_ = n;
  g.bilinear_ = rs.bilinear;
  for (const auto& r : rs.positive_roots) {
    g.roots_.push_back(r);
    auto neg = r;
    for (auto& x : neg) x = -x;
    g.roots_.push_back(std::move(neg));
  }
  std::sort(g.roots_.begin(), g.roots_.end());

  // Simple reflection s_i: identity except row i, which is -C[i][j] off the
  // diagonal and -1 on it.
  std::vector<std::vector<std::int8_t>> gens;
  for (int i = 0; i < n; ++i) {
    auto m = identity_bytes(n);
    for (int j = 0; j < n; ++j)
      m[static_cast<std::size_t>(i) * n + j] =
          static_cast<std::int8_t>((i == j ? 1 : 0) - rs.cartan[i][j]);
    gens.push_back(std::move(m));
  }

  std::size_t stride = static_cast<std::size_t>(n) * n;
  std::unordered_set<Bytes> seen;
  seen.reserve(static_cast<std::size_t>(order) * 2);
  g.arena_.reserve(static_cast<std::size_t>(order) * stride);

  auto append = [&](const std::vector<std::int8_t>& m) {
    g.arena_.insert(g.arena_.end(), m.begin(), m.end());
    ++g.size_;
  };

  auto id = identity_bytes(n);
  seen.insert(to_bytes(id));
  append(id);

  std::vector<std::vector<std::int8_t>> frontier{id};
  while (!frontier.empty()) {
    std::set<std::vector<std::int8_t>> level;  // sorted for deterministic order
    for (const auto& m : frontier) {
      for (const auto& s : gens) {
        auto p = mul(m.data(), s.data(), n);
        if (seen.find(to_bytes(p)) == seen.end()) level.insert(std::move(p));
      }
    }
    frontier.clear();
    for (const auto& m : level) {
      seen.insert(to_bytes(m));
      append(m);
      frontier.push_back(m);
    }
  }
  if (static_cast<long long>(g.size_) != order)
    throw InternalInconsistencyError("enumerate_weyl: closure size " + std::to_string(g.size_) +
                                     " != formula order " + std::to_string(order) + " for " +
                                     rs.type.str());
  // Generator indices, located by their bytes.
  for (const auto& s : gens) {
    for (std::size_t i = 0; i < g.size_; ++i) {
      if (std::memcmp(g.arena_.data() + i * stride, s.data(), stride) == 0) {
        g.generators_.push_back(i);
        break;
      }
    }
  }
  return g;
}

WeylGroup product_weyl(const std::vector<const WeylGroup*>& groups, long long cap) {
  long long total = 1;
  int dim = 0;
  for (const auto* f : groups) {
    if (__builtin_mul_overflow(total, static_cast<long long>(f->size()), &total) || total > cap)
      throw CapExceededError("product_weyl: product order exceeds cap", -1, cap);
    dim += f->dim();
  }

  WeylGroup g;
  g.dim_ = dim;
  g.size_ = static_cast<std::size_t>(total);
  std::size_t stride = static_cast<std::size_t>(dim) * dim;
  g.arena_.assign(g.size_ * stride, 0);

  // Elements in mixed-radix order over the factor element indices; the
  // rightmost factor varies fastest.
  std::vector<std::size_t> idx(groups.size(), 0);
  for (std::size_t e = 0; e < g.size_; ++e) {
    int off = 0;
    for (std::size_t f = 0; f < groups.size(); ++f) {
      const WeylGroup& fg = *groups[f];
      auto block = fg.element(idx[f]);
      for (int i = 0; i < fg.dim(); ++i)
        for (int j = 0; j < fg.dim(); ++j)
          g.arena_[e * stride + static_cast<std::size_t>(off + i) * dim + (off + j)] =
              block[static_cast<std::size_t>(i) * fg.dim() + j];
      off += fg.dim();
    }
    for (std::size_t f = groups.size(); f-- > 0;) {
      if (++idx[f] < groups[f]->size()) break;
      idx[f] = 0;
    }
  }

  g.bilinear_.assign(dim, std::vector<long long>(dim, 0));
  int off = 0;
  for (const auto* f : groups) {
    for (int i = 0; i < f->dim(); ++i)
      for (int j = 0; j < f->dim(); ++j) g.bilinear_[off + i][off + j] = f->bilinear()[i][j];
    for (const auto& r : f->roots()) {
      std::vector<int> full(dim, 0);
      for (int i = 0; i < f->dim(); ++i) full[off + i] = r[i];
      g.roots_.push_back(std::move(full));
    }
    off += f->dim();
  }
  std::sort(g.roots_.begin(), g.roots_.end());

  // Embedded generators: factor generators with all other blocks identity.
  // Locate them by computing their position in the mixed-radix layout.
  std::vector<std::size_t> radix(groups.size(), 1);
  for (std::size_t f = groups.size(); f-- > 1;)
    radix[f - 1] = radix[f] * groups[f]->size();
  for (std::size_t f = 0; f < groups.size(); ++f)
    for (std::size_t gen : groups[f]->generators())
      g.generators_.push_back(gen * radix[f]);
  return g;
}

WeylGroup ambient_weyl(const CompactAlgebra& a, long long cap) {
  long long order = a.weyl_order();
  if (order > cap)
    throw CapExceededError("ambient_weyl: |W(" + a.str() + ")| = " + std::to_string(order) +
                               " exceeds cap " + std::to_string(cap),
                           order, cap);
  std::vector<WeylGroup> owned;
  if (a.center_dim > 0) owned.push_back(WeylGroup::trivial(a.center_dim));
  for (const auto& t : a.factors) owned.push_back(enumerate_weyl(build_root_system(t), cap));
  std::vector<const WeylGroup*> ptrs;
  ptrs.reserve(owned.size());
  for (const auto& g : owned) ptrs.push_back(&g);
  return product_weyl(ptrs, cap);
}

QMatrix reflection_matrix(const std::vector<std::vector<long long>>& bilinear,
                          const std::vector<int>& root) {
  int n = static_cast<int>(bilinear.size());
  if (static_cast<int>(root.size()) != n)
    throw ShapeMismatchError("reflection_matrix: root length mismatch");
  std::vector<long long> b_alpha(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b_alpha[i] += bilinear[i][j] * root[j];
  long long len2 = 0;
  for (int i = 0; i < n; ++i) len2 += static_cast<long long>(root[i]) * b_alpha[i];
  if (len2 <= 0) throw ShapeMismatchError("reflection_matrix: root has nonpositive length");
  QMatrix s = QMatrix::identity(n);
  for (int j = 0; j < n; ++j) {
    Rational c = Rational(2 * b_alpha[j], len2);
    if (c.is_zero()) continue;
    for (int k = 0; k < n; ++k) s.at(k, j) -= c * Rational(root[k]);
  }
  return s;
}

long long reflection_closure_order(const std::vector<std::vector<long long>>& bilinear,
                                   const std::vector<std::vector<int>>& roots) {
  if (roots.empty()) return 1;
  int n = static_cast<int>(bilinear.size());
  std::vector<std::vector<std::int8_t>> gens;
  for (const auto& r : roots) {
    QMatrix s = reflection_matrix(bilinear, r);
    std::vector<std::int8_t> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long long v = s.at(i, j).as_int64();
        if (v < -127 || v > 127)
          throw InternalInconsistencyError("reflection_closure_order: entry out of range");
        m[static_cast<std::size_t>(i) * n + j] = static_cast<std::int8_t>(v);
      }
    gens.push_back(std::move(m));
  }

  std::unordered_set<Bytes> seen;
  auto id = identity_bytes(n);
  seen.insert(to_bytes(id));
  std::vector<std::vector<std::int8_t>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<std::int8_t>> next;
    for (const auto& m : frontier)
      for (const auto& s : gens) {
        auto p = mul(m.data(), s.data(), n);
        if (seen.insert(to_bytes(p)).second) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return static_cast<long long>(seen.size());
}

long long subgroup_order(const WeylGroup& w, const std::vector<std::vector<int>>& roots) {
  for (const auto& r : roots) {
    if (!std::binary_search(w.roots().begin(), w.roots().end(), r)) {
      std::string txt;
      for (int x : r) txt += std::to_string(x) + " ";
      throw RootNotInSystemError("subgroup_order: (" + txt + ") is not a root of the ambient group");
    }
  }
  return reflection_closure_order(w.bilinear(), roots);
}

namespace {

// Integer stabilizer pre-filter: w maps tk into tk iff every conormal
// annihilates every transformed basis vector. Falls back to rational
// arithmetic when magnitudes cannot be certified to fit in int64.
struct IntFilter {
  bool usable = false;
  std::vector<std::vector<long long>> basis;      // integer-cleared rows of tk
  std::vector<std::vector<long long>> conormals;  // integer kernel rows

  static IntFilter build(const Subspace& tk, int dim) {
    IntFilter f;
    long long max_basis = 0, max_conormal = 0;
    auto fits = [](const BigInt& v, long long& maxabs) {
      if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min()) return false;
      long long a = std::abs(static_cast<long long>(v));
      maxabs = std::max(maxabs, a);
      return true;
    };
    for (const auto& row : tk.integer_basis()) {
      std::vector<long long> r;
      for (const auto& v : row) {
        if (!fits(v, max_basis)) return f;
        r.push_back(static_cast<long long>(v));
      }
      f.basis.push_back(std::move(r));
    }
    for (const auto& row : tk.integer_conormals()) {
      std::vector<long long> r;
      for (const auto& v : row) {
        if (!fits(v, max_conormal)) return f;
        r.push_back(static_cast<long long>(v));
      }
      f.conormals.push_back(std::move(r));
    }
    // |conormal . (W . basis)| <= dim^2 * 127 * max_basis * max_conormal
    long long bound = 127;
    if (__builtin_mul_overflow(bound, static_cast<long long>(dim) * dim, &bound)) return f;
    if (max_basis > 0 && __builtin_mul_overflow(bound, max_basis, &bound)) return f;
    if (max_conormal > 0 && __builtin_mul_overflow(bound, max_conormal, &bound)) return f;
    f.usable = true;
    return f;
  }

  /// Images of the scaled basis rows under w, or nullopt when some image
  /// leaves the subspace. Membership is exactly the vanishing of every
  /// conormal pairing.
  std::optional<std::vector<std::vector<long long>>> images(std::span<const std::int8_t> w,
                                                            int n) const {
    std::vector<std::vector<long long>> out;
    out.reserve(basis.size());
    for (const auto& z : basis) {
      std::vector<long long> u(n, 0);
      for (int i = 0; i < n; ++i) {
        long long acc = 0;
        for (int j = 0; j < n; ++j)
          acc += static_cast<long long>(w[static_cast<std::size_t>(i) * n + j]) * z[j];
        u[i] = acc;
      }
      for (const auto& c : conormals) {
        long long acc = 0;
        for (int i = 0; i < n; ++i)
          if (c[i] != 0) acc += c[i] * u[i];
        if (acc != 0) return std::nullopt;
      }
      out.push_back(std::move(u));
    }
    return out;
  }
};

}  // namespace

RestrictionSet restriction_set(const WeylGroup& w, const Subspace& tk) {
  if (tk.ambient_dim() != w.dim())
    throw AmbientMismatchError("restriction_set: subspace ambient dimension " +
                               std::to_string(tk.ambient_dim()) + " != group dimension " +
                               std::to_string(w.dim()));
  if (tk.dim() < 1)
    throw AmbientMismatchError("restriction_set: subspace must have positive dimension");

  int n = w.dim();
  int k = tk.dim();
  IntFilter filter = IntFilter::build(tk, n);

  RestrictionSet out{tk, {}};
  std::unordered_set<std::string> seen;
  if (filter.usable) {
    // The image of basis row i is scale[i] times the image of the
    // canonical basis row, so its coordinates read off the pivot entries.
    std::vector<long long> scale(k);
    for (int i = 0; i < k; ++i) scale[i] = filter.basis[i][tk.pivots()[i]];
    for (std::size_t idx = 0; idx < w.size(); ++idx) {
      auto images = filter.images(w.element(idx), n);
      if (!images) continue;
      QMatrix r(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) r.at(j, i) = Rational((*images)[i][tk.pivots()[j]], scale[i]);
      if (seen.insert(r.canonical_bytes()).second) out.restrictions.push_back(std::move(r));
    }
  } else {
    for (std::size_t idx = 0; idx < w.size(); ++idx) {
      auto restricted = restrict_to_subspace(w.element_matrix(idx), tk);
      if (!restricted) continue;
      if (seen.insert(restricted->canonical_bytes()).second)
        out.restrictions.push_back(std::move(*restricted));
    }
  }
  return out;
}

}  // namespace isoform

#include "isoform/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "isoform/rational.hpp"

namespace isoform {

namespace {

long long checked_mul(long long a, long long b, const char* what) {
  long long out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(std::string(what) + ": overflow");
  return out;
}

std::vector<std::vector<int>> cartan_matrix(SimpleType t) {
  int n = t.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j) {  // 1-based simple bond
    c[i - 1][j - 1] = -1;
    c[j - 1][i - 1] = -1;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      c[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 1; i <= n - 2; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case Family::E:
      bond(1, 3);
      bond(3, 4);
      bond(4, 5);
      bond(2, 4);
      if (n >= 6) bond(5, 6);
      if (n >= 7) bond(6, 7);
      if (n >= 8) bond(7, 8);
      break;
    case Family::F:
      bond(1, 2);
      bond(2, 3);
      bond(3, 4);
      c[2][1] = -2;  // alpha_3 short of alpha_2
      break;
    case Family::G:
      bond(1, 2);
      c[0][1] = -3;  // alpha_1 short of the long alpha_2
      break;
  }
  return c;
}

std::vector<long long> symmetrizer_of(const std::vector<std::vector<int>>& c) {
  int n = static_cast<int>(c.size());
  std::vector<Rational> d(n, Rational(0));
  d[0] = Rational(1);
  // Propagate d_j = d_i * c[i][j] / c[j][i] over the (connected) diagram.
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (i == j || c[i][j] == 0 || !d[j].is_zero()) continue;
      d[j] = d[i] * Rational(c[i][j]) / Rational(c[j][i]);
      stack.push_back(j);
    }
  }
  BigInt l = 1;
  for (const auto& x : d) l = l / boost::multiprecision::gcd(l, x.denominator()) * x.denominator();
  std::vector<long long> out(n);
  for (int i = 0; i < n; ++i)
    out[i] = Rational(Rational(l) * d[i]).as_int64();
  return out;
}

std::size_t classical_positive_count(SimpleType t) {
  int n = t.rank;
  switch (t.family) {
    case Family::A: return static_cast<std::size_t>(n) * (n + 1) / 2;
    case Family::B:
    case Family::C: return static_cast<std::size_t>(n) * n;
    case Family::D: return static_cast<std::size_t>(n) * (n - 1);
    case Family::G: return 6;
    case Family::F: return 24;
    case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
  }
  throw InvalidTypeError("unreachable family");
}

}  // namespace

SimpleType::SimpleType(Family f, int r) : family(f), rank(r) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = r >= 1; break;
    case Family::B: ok = r >= 2; break;
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 3; break;
    case Family::E: ok = r >= 6 && r <= 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok)
    throw InvalidTypeError("rank " + std::to_string(r) + " out of bounds for family " +
                           std::string(1, static_cast<char>(f)));
}

SimpleType SimpleType::parse(std::string_view s) {
  if (s.size() < 2) throw InvalidTypeError("type label too short: '" + std::string(s) + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (f < 'A' || f > 'G')
    throw InvalidTypeError("unknown family '" + std::string(1, s[0]) + "'");
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw InvalidTypeError("invalid rank in type label '" + std::string(s) + "'");
    rank = rank * 10 + (s[i] - '0');
    if (rank > 1000) throw InvalidTypeError("rank too large in '" + std::string(s) + "'");
  }
  return SimpleType(static_cast<Family>(f), rank);
}

std::string SimpleType::str() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool RootSystem::is_root(const std::vector<int>& v) const {
  if (static_cast<int>(v.size()) != rank()) return false;
  auto neg = v;
  for (auto& x : neg) x = -x;
  for (const auto& r : positive_roots)
    if (r == v || r == neg) return true;
  return false;
}

RootSystem build_root_system(SimpleType t) {
  RootSystem rs{t, cartan_matrix(t), {}, primitive_degrees(t), weyl_order_formula(t), {}, {}};
  int n = t.rank;
  rs.symmetrizer = symmetrizer_of(rs.cartan);
  rs.bilinear.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.bilinear[i][j] = rs.symmetrizer[i] * rs.cartan[i][j];

  // Closure of the simple roots under the simple reflections
  // s_i(v) = v - (sum_j C[i][j] v_j) e_i.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(std::move(e));
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& v : frontier) {
      for (int i = 0; i < n; ++i) {
        long long pairing = 0;
        for (int j = 0; j < n; ++j) pairing += static_cast<long long>(rs.cartan[i][j]) * v[j];
        std::vector<int> w = v;
        w[i] -= static_cast<int>(pairing);
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  for (const auto& v : seen) {
    bool nonneg = std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
    if (nonneg) rs.positive_roots.push_back(v);
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end());
  if (rs.positive_roots.size() != classical_positive_count(t))
    throw InternalInconsistencyError("positive root count mismatch for " + t.str());
  return rs;
}

std::vector<int> primitive_degrees(SimpleType t) {
  int n = t.rank;
  std::vector<int> d;
  switch (t.family) {
    case Family::A:
      for (int k = 1; k <= n; ++k) d.push_back(2 * k + 1);
      break;
    case Family::B:
    case Family::C:
      for (int k = 1; k <= n; ++k) d.push_back(4 * k - 1);
      break;
    case Family::D:
      for (int k = 1; k <= n - 1; ++k) d.push_back(4 * k - 1);
      d.push_back(2 * n - 1);
      break;
    case Family::G:
      d = {3, 11};
      break;
    case Family::F:
      d = {3, 11, 15, 23};
      break;
    case Family::E:
      if (n == 6) d = {3, 9, 11, 15, 17, 23};
      else if (n == 7) d = {3, 11, 15, 19, 23, 27, 35};
      else d = {3, 15, 23, 27, 35, 39, 47, 59};
      break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

long long weyl_order_formula(SimpleType t) {
  long long order = 1;
  for (int g : primitive_degrees(t)) order = checked_mul(order, (g + 1) / 2, "weyl_order_formula");
  return order;
}

CompactAlgebra::CompactAlgebra(int center, std::vector<SimpleType> f)
    : center_dim(center), factors(std::move(f)) {
  if (center < 0) throw InvalidTypeError("CompactAlgebra: negative center dimension");
}

int CompactAlgebra::rank() const {
  int r = center_dim;
  for (const auto& t : factors) r += t.rank;
  return r;
}

std::vector<int> CompactAlgebra::primitive_degrees() const {
  std::vector<int> d(center_dim, 1);
  for (const auto& t : factors) {
    auto f = isoform::primitive_degrees(t);
    d.insert(d.end(), f.begin(), f.end());
  }
  std::sort(d.begin(), d.end());
  return d;
}

long long CompactAlgebra::weyl_order() const {
  long long order = 1;
  for (const auto& t : factors)
    order = checked_mul(order, weyl_order_formula(t), "CompactAlgebra::weyl_order");
  return order;
}

std::string CompactAlgebra::str() const {
  std::string out;
  if (center_dim > 0) {
    out = "U1";
    if (center_dim > 1) out += "^" + std::to_string(center_dim);
  }
  for (const auto& t : factors) {
    if (!out.empty()) out += " x ";
    out += t.str();
  }
  return out.empty() ? "0" : out;
}

}  // namespace isoform

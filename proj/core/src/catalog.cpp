#include "isoform/catalog.hpp"

namespace isoform {

namespace {

SimpleType st(const char* label) { return SimpleType::parse(label); }

std::vector<int> a_flip(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = n - i;
  return p;
}

std::vector<int> d_swap(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n - 2; ++i) p[i] = i + 1;
  p[n - 2] = n;
  p[n - 1] = n - 1;
  return p;
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;

  // Folds: the type-A flips, the type-D leaf swaps, triality, E6, and one
  // identity row.
  c.push_back({"a2_identity_fold", "fold", FoldSpec{st("A2"), {}}});
  for (int n = 2; n <= 7; ++n) {
    std::string target = (n % 2 == 0) ? ("b" + std::to_string(n / 2))
                                      : ("c" + std::to_string((n + 1) / 2));
    if (n == 2) target = "so3";
    c.push_back({"su" + std::to_string(n + 1) + "_" + target + "_fold", "fold",
                 FoldSpec{SimpleType(Family::A, n), a_flip(n)}});
  }
  for (int n = 3; n <= 7; ++n)
    c.push_back({"spin" + std::to_string(2 * n) + "_spin" + std::to_string(2 * n - 1) + "_fold",
                 "fold", FoldSpec{SimpleType(Family::D, n), d_swap(n)}});
  c.push_back({"spin8_g2_triality", "fold", FoldSpec{st("D4"), {3, 2, 4, 1}}});
  c.push_back({"e6_f4_fold", "fold", FoldSpec{st("E6"), {6, 2, 5, 4, 3, 1}}});

  // Equal-rank subgroups.
  c.push_back({"su3_maximal_torus", "regular", RegularSpec{CompactAlgebra(st("A2")), {}, 2}});
  c.push_back({"g2_su3_long", "regular",
               RegularSpec{CompactAlgebra(st("G2")), {{0, 1}, {3, 1}}, 0}});
  c.push_back({"g2_so4", "regular",
               RegularSpec{CompactAlgebra(st("G2")), {{0, 1}, {2, 1}}, 0}});
  c.push_back({"su4_su2xsu2xu1", "regular",
               RegularSpec{CompactAlgebra(st("A3")), {{1, 0, 0}, {0, 0, 1}}, 1}});
  c.push_back({"so5_so4", "regular",
               RegularSpec{CompactAlgebra(st("B2")), {{1, 0}, {1, 2}}, 0}});
  c.push_back({"su2_self_regular", "regular", RegularSpec{CompactAlgebra(st("A1")), {{1}}, 0}});

  // Circle subgroups. Directions for type A are in trace-zero form.
  c.push_back({"su3_circle_123", "circle",
               CircleSpec{CompactAlgebra(st("A2")),
                          {Rational(1), Rational(2), Rational(-3)}, true}});
  c.push_back({"su3_circle_10m1", "circle",
               CircleSpec{CompactAlgebra(st("A2")),
                          {Rational(1), Rational(0), Rational(-1)}, true}});
  c.push_back({"su2_torus_circle", "circle",
               CircleSpec{CompactAlgebra(st("A1")), {Rational(1), Rational(-1)}, true}});
  c.push_back({"central_circle", "circle",
               CircleSpec{CompactAlgebra(1, {}), {Rational(1)}, false}});
  c.push_back({"u2_mixed_circle", "circle",
               CircleSpec{CompactAlgebra(1, {st("A1")}), {Rational(1), Rational(1)}, false}});
  c.push_back({"so5_circle_short", "circle",
               CircleSpec{CompactAlgebra(st("B2")), {Rational(0), Rational(1)}, false}});

  // Products with a permutation of identical factors.
  c.push_back({"su2sq_diagonal", "product",
               ProductPermSpec{0, {ProductBlockSpec{st("A1"), 2, {}}}}});
  c.push_back({"su3cube_diagonal", "product",
               ProductPermSpec{0, {ProductBlockSpec{st("A2"), 3, {}}}}});
  c.push_back({"spin8sq_g2_triality_return", "product",
               ProductPermSpec{0, {ProductBlockSpec{st("D4"), 2, {3, 2, 4, 1}}}}});
  c.push_back({"su3_so3_as_product", "product",
               ProductPermSpec{0, {ProductBlockSpec{st("A2"), 1, {2, 1}}}}});
  c.push_back({"u1_x_su2sq_diagonal", "product",
               ProductPermSpec{1, {ProductBlockSpec{st("A1"), 2, {}}}}});

  return c;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = make_catalog();
  return catalog;
}

}  // namespace isoform

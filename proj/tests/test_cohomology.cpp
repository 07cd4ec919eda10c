#include <doctest.h>

#include "isoform/catalog.hpp"
#include "isoform/cohomology.hpp"
#include "isoform/errors.hpp"

using namespace isoform;

namespace {
SimpleType st(const char* s) { return SimpleType::parse(s); }
Rational q(long long n) { return Rational(n); }
}

TEST_CASE("multiset difference with containment checking") {
  CHECK(multiset_difference({3, 5, 7}, {3, 7}) == DegreeMultiset{5});
  CHECK(multiset_difference({3, 7, 7, 11}, {3, 11}) == DegreeMultiset{7, 7});
  CHECK(multiset_difference({3, 5}, {}) == DegreeMultiset{3, 5});
  CHECK(multiset_difference({3, 3}, {3, 3}).empty());
  CHECK_THROWS_AS(multiset_difference({3, 5}, {7}), MultisetNotContainedError);
  CHECK_THROWS_AS(multiset_difference({3}, {3, 3}), MultisetNotContainedError);
}

TEST_CASE("surviving degrees of the classical constructions") {
  // SU(4)/Sp(2): {3,5,7} minus {3,7}
  PairData a3 = resolve_fold(FoldSpec{st("A3"), {3, 2, 1}});
  CHECK(samelson_degrees(a3) == DegreeMultiset{5});

  // Spin(8)/G2: {3,7,7,11} minus {3,11}
  PairData d4 = resolve_fold(FoldSpec{st("D4"), {3, 2, 4, 1}});
  CHECK(samelson_degrees(d4) == DegreeMultiset{7, 7});

  // the SU(3) circle drops the degree-3 entry
  PairData circle =
      resolve_circle(CircleSpec{CompactAlgebra(st("A2")), {q(1), q(2), q(-3)}, true});
  CHECK(samelson_degrees(circle) == DegreeMultiset{5});

  // a central circle drops a degree-1 entry instead
  PairData central = resolve_circle(CircleSpec{CompactAlgebra(1, {st("A1")}), {q(1), q(0)}, false});
  CHECK(samelson_degrees(central) == DegreeMultiset{3});

  // equal-rank pairs have no surviving primitives
  PairData torus = resolve_regular(RegularSpec{CompactAlgebra(st("A2")), {}, 2});
  CHECK(samelson_degrees(torus).empty());

  // product pairs reduce blockwise
  PairData prod = resolve_product(ProductPermSpec{0, {ProductBlockSpec{st("A1"), 2, {}}}});
  CHECK_THROWS_AS(samelson_degrees(prod), UnsupportedPairError);
  CHECK(samelson_degrees(prod.blocks[0]) == DegreeMultiset{3});
}

TEST_CASE("Weil image dimension by the ascending degree pairing") {
  // the SU(3) circle: (3+1)/(1+1) = 2
  CHECK(dim_image_weil({3, 5}, {1}, {5}) == 2);
  // surviving complement equal to the K-degrees: trivial Weil image
  CHECK(dim_image_weil({3, 5, 7}, {3, 7}, {5}) == 1);
  // equal rank maximal torus of SU(3): (4/2)(6/2) = 6 = |W|
  CHECK(dim_image_weil({3, 5}, {1, 1}, {}) == 6);
  // non-integer pairings are construction bugs and must fail loudly
  CHECK_THROWS_AS(dim_image_weil({3, 9}, {5}, {3}), NonIntegerProductError);
  CHECK_THROWS_AS(dim_image_weil({3, 5}, {1}, {}), SizeMismatchError);
  CHECK_THROWS_AS(dim_image_weil({3, 5}, {1}, {7}), MultisetNotContainedError);
}

TEST_CASE("quotient dimensions of the worked examples") {
  PairData circle =
      resolve_circle(CircleSpec{CompactAlgebra(st("A2")), {q(1), q(2), q(-3)}, true});
  CHECK(dim_cohomology_quotient(circle) == 4);  // 2 * 2

  PairData so3 = resolve_fold(FoldSpec{st("A2"), {2, 1}});
  CHECK(dim_cohomology_quotient(so3) == 2);  // rationally a 5-sphere

  PairData g2_su3 = resolve_regular(RegularSpec{CompactAlgebra(st("G2")), {{0, 1}, {3, 1}}, 0});
  CHECK(dim_cohomology_quotient(g2_su3) == 2);  // 12/6, the 6-sphere

  PairData spheres = resolve_fold(FoldSpec{st("D5"), {1, 2, 3, 5, 4}});
  CHECK(dim_cohomology_quotient(spheres) == 2);  // S^9
}

TEST_CASE("group dimension is 2^rank") {
  CHECK(dim_cohomology_group(CompactAlgebra(st("A1"))) == 2);
  CHECK(dim_cohomology_group(CompactAlgebra(st("A2"))) == 4);
  CHECK(dim_cohomology_group(CompactAlgebra(1, {st("A1")})) == 4);
  CHECK(dim_cohomology_group(CompactAlgebra(3, {})) == 8);
}

TEST_CASE("equal-rank quotients match the Weyl order ratio") {
  for (const auto& entry : builtin_catalog()) {
    if (entry.kind != "regular") continue;
    PairData p = resolve(entry.spec);
    INFO(entry.label);
    CHECK(dim_cohomology_quotient(p) == p.g.weyl_order() / p.k_weyl_order);
  }
}

TEST_CASE("ncz dimension identity holds for folds, diagonals, central circles") {
  auto check_ncz = [](const PairData& p) {
    long long lhs = dim_cohomology_group(p.g);
    long long rhs = dim_cohomology_quotient(p) * (1LL << p.rank_k());
    CHECK(lhs == rhs);
  };
  for (const auto& entry : builtin_catalog()) {
    if (entry.kind == "fold" || entry.kind == "product") {
      INFO(entry.label);
      check_ncz(resolve(entry.spec));
    }
  }
  check_ncz(resolve_circle(CircleSpec{CompactAlgebra(1, {st("A1")}), {q(1), q(0)}, false}));
}

TEST_CASE("surviving-degree count is the rank difference") {
  for (const auto& entry : builtin_catalog()) {
    PairData p = resolve(entry.spec);
    if (p.construction == Construction::product) {
      std::size_t total = 0;
      int rank_diff = 0;
      for (const auto& b : p.blocks) {
        total += samelson_degrees(b).size();
        rank_diff += b.rank_g() - b.rank_k();
      }
      CHECK(total == static_cast<std::size_t>(rank_diff));
    } else {
      CHECK(samelson_degrees(p).size() ==
            static_cast<std::size_t>(p.rank_g() - p.rank_k()));
    }
  }
}

TEST_CASE("equal-rank transfer between the fold subgroup and its torus") {
  // K = the fixed subgroup of the flip on SU(3), H = the circle with
  // trace-zero weights (1,0,-1); both have the same Cartan line.
  PairData k = resolve_fold(FoldSpec{st("A2"), {2, 1}});
  PairData h = resolve_circle(CircleSpec{CompactAlgebra(st("A2")), {q(1), q(0), q(-1)}, true});
  TransferReport r = equal_rank_transfer(k, h);
  CHECK(r.dim_quotient_k == 2);
  CHECK(r.dim_quotient_h == 4);
  CHECK(r.weyl_k == 2);
  CHECK(r.weyl_h == 1);
  CHECK(r.samelson_equal);
}

TEST_CASE("equal-rank transfer is reflexive") {
  PairData k = resolve_fold(FoldSpec{st("A2"), {2, 1}});
  TransferReport r = equal_rank_transfer(k, k);
  CHECK(r.dim_quotient_k == r.dim_quotient_h);
  CHECK(r.weyl_k == r.weyl_h);

  PairData t1 = resolve_regular(RegularSpec{CompactAlgebra(st("A2")), {}, 2});
  PairData t2 = resolve_regular(RegularSpec{CompactAlgebra(st("A2")), {}, 2});
  TransferReport tt = equal_rank_transfer(t1, t2);
  CHECK(tt.dim_quotient_k == 6);
  CHECK(tt.dim_quotient_h == 6);
}

TEST_CASE("transfer rejects mismatched Cartan subspaces or groups") {
  PairData k = resolve_fold(FoldSpec{st("A2"), {2, 1}});
  PairData other_line =
      resolve_circle(CircleSpec{CompactAlgebra(st("A2")), {q(1), q(2), q(-3)}, true});
  CHECK_THROWS_AS(equal_rank_transfer(k, other_line), SubspaceMismatchError);

  PairData other_group = resolve_fold(FoldSpec{st("A3"), {3, 2, 1}});
  CHECK_THROWS_AS(equal_rank_transfer(k, other_group), SubspaceMismatchError);
}

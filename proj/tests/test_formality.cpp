#include <doctest.h>

#include "isoform/catalog.hpp"
#include "isoform/errors.hpp"
#include "isoform/formality.hpp"

using namespace isoform;

namespace {
SimpleType st(const char* s) { return SimpleType::parse(s); }
Rational q(long long n) { return Rational(n); }

PairData su3_circle(long long a, long long b, long long c) {
  return resolve_circle(CircleSpec{CompactAlgebra(st("A2")), {q(a), q(b), q(c)}, true});
}
}  // namespace

TEST_CASE("fixed-point counts of the stated examples") {
  // equal rank: the full group stabilizes, components = |W(G)|/|W(K)|
  PairData torus = resolve_regular(RegularSpec{CompactAlgebra(st("A2")), {}, 2});
  WeylGroup w = ambient_weyl(torus.g);
  CHECK(fixed_point_components(torus, w) == 6);
  CHECK(fixed_point_dim(torus, w) == 6);

  // the SU(3) circle with weights (1,2,-3): connected normalizer
  PairData counterexample = su3_circle(1, 2, -3);
  CHECK(fixed_point_components(counterexample, w) == 1);
  CHECK(fixed_point_dim(counterexample, w) == 2);

  // the root-line circle: one negating transposition
  PairData root_line = su3_circle(1, -1, 0);
  CHECK(fixed_point_components(root_line, w) == 2);
  CHECK(fixed_point_dim(root_line, w) == 4);

  // the diagonal in two rank-1 factors: |H| = 2 over |W(A1)| = 2
  PairData diag = resolve_product(ProductPermSpec{0, {ProductBlockSpec{st("A1"), 2, {}}}});
  WeylGroup w2 = ambient_weyl(diag.g);
  CHECK(fixed_point_components(diag.blocks[0], w2) == 1);
  CHECK(fixed_point_dim(diag.blocks[0], w2) == 2);
}

TEST_CASE("the SU(3) circle counterexample is not equivariantly formal") {
  FormalityReport r = analyze(su3_circle(1, 2, -3));
  CHECK(r.dim_quotient == 4);
  CHECK(r.fp_available);
  CHECK(r.fp_dim == 2);
  CHECK(r.fp_components == 1);
  REQUIRE(r.formal.has_value());
  CHECK_FALSE(*r.formal);
  CHECK(r.fixed_set_connected.value_or(false));
  CHECK_FALSE(r.ncz);
}

TEST_CASE("the triality fold is formal and ncz with connected fixed set") {
  FormalityReport r = analyze(resolve_fold(FoldSpec{st("D4"), {3, 2, 4, 1}}));
  CHECK(r.dim_quotient == 4);
  CHECK(r.fp_dim == 4);
  CHECK(r.fp_components == 1);
  CHECK(r.formal.value_or(false));
  CHECK(r.ncz);
}

TEST_CASE("the diagonal rank-1 pair is formal and ncz") {
  FormalityReport r =
      analyze(resolve_product(ProductPermSpec{0, {ProductBlockSpec{st("A1"), 2, {}}}}));
  CHECK(r.dim_quotient == 2);
  CHECK(r.fp_dim == 2);
  CHECK(r.formal.value_or(false));
  CHECK(r.ncz);
  REQUIRE(r.blocks.size() == 1);
  CHECK(r.blocks[0].fp_h_size == 2);
}

TEST_CASE("capping the enumeration downgrades the fixed-point side honestly") {
  AnalyzeConfig tiny{10};

  FormalityReport fold = analyze(resolve_fold(FoldSpec{st("A3"), {3, 2, 1}}), tiny);
  CHECK_FALSE(fold.fp_available);
  CHECK(fold.formal.value_or(false));  // structural guarantee, flagged as unverified
  CHECK(fold.cartan_pair_license.find("unverified") != std::string::npos);
  CHECK(!fold.warnings.empty());
  CHECK(fold.ncz);  // the dimension identity needs no enumeration
  CHECK(fold.fixed_set_connected.value_or(false));

  FormalityReport circle = analyze(su3_circle(1, 2, -3), tiny);
  CHECK_FALSE(circle.fp_available);
  CHECK_FALSE(circle.formal.has_value());  // undecidable without fixed points
  CHECK_FALSE(circle.ncz);

  FormalityReport regular =
      analyze(resolve_regular(RegularSpec{CompactAlgebra(st("A2")), {}, 2}), tiny);
  CHECK_FALSE(regular.fp_available);
  CHECK(regular.formal.value_or(false));
  CHECK_FALSE(regular.fixed_set_connected.value_or(true));  // 6 components by the order formula
}

TEST_CASE("circle formality is exactly the existence of a negating element") {
  struct Case {
    long long a, b, c;
    bool negatable;
  };
  // A permutation sends (a,b,c) to its negative iff the multisets {a,b,c}
  // and {-a,-b,-c} coincide.
  for (const Case& t : {Case{1, 2, -3, false}, Case{1, -1, 0, true}, Case{2, 0, -2, true},
                        Case{1, 1, -2, false}}) {
    FormalityReport r = analyze(su3_circle(t.a, t.b, t.c));
    REQUIRE(r.formal.has_value());
    CHECK(*r.formal == t.negatable);
    CHECK(r.fp_dim <= r.dim_quotient);
  }
}

TEST_CASE("mixed circle directions carry a warning but stay consistent") {
  PairData mixed =
      resolve_circle(CircleSpec{CompactAlgebra(1, {st("A1")}), {q(1), q(1)}, false});
  FormalityReport r = analyze(mixed);
  bool has_mixed_warning = false;
  for (const auto& w : r.warnings)
    if (w.find("mixed") != std::string::npos) has_mixed_warning = true;
  CHECK(has_mixed_warning);
  CHECK(r.dim_quotient == 2);
  CHECK(r.fp_dim == 2);
  CHECK(r.formal.value_or(false));
  CHECK(r.ncz);
}

TEST_CASE("purely central circles are ncz with a connected fixed set") {
  PairData central =
      resolve_circle(CircleSpec{CompactAlgebra(1, {st("A1")}), {q(1), q(0)}, false});
  FormalityReport r = analyze(central);
  CHECK(r.fp_h_size == 1);
  CHECK(r.fp_components == 1);
  CHECK(r.dim_quotient == 2);
  CHECK(r.formal.value_or(false));
  CHECK(r.ncz);
}

TEST_CASE("every catalog row passes the hard cross-checks inside analyze") {
  for (const auto& entry : builtin_catalog()) {
    INFO(entry.label);
    FormalityReport r = analyze(resolve(entry.spec));
    if (r.fp_available) CHECK(r.fp_dim <= r.dim_quotient);
    if (r.fp_available && r.formal.has_value() && r.fixed_set_connected.has_value())
      CHECK(r.ncz == (*r.formal && *r.fixed_set_connected));
  }
}

TEST_CASE("product reports conjoin block verdicts") {
  FormalityReport r = analyze(
      resolve_product(ProductPermSpec{1, {ProductBlockSpec{st("A1"), 2, {}}}}));
  REQUIRE(r.blocks.size() == 2);  // central block + diagonal block
  CHECK(r.blocks[0].construction == "central");
  CHECK(r.blocks[1].construction == "diagonal");
  long long dim_product = 1;
  for (const auto& b : r.blocks) dim_product *= b.dim_quotient;
  CHECK(r.dim_quotient == dim_product);
  bool all_formal = true;
  for (const auto& b : r.blocks) all_formal = all_formal && b.formal.value_or(false);
  CHECK(r.formal.value_or(false) == all_formal);
}

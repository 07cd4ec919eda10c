#include <doctest.h>

#include <map>

#include "euclid_oracle.hpp"
#include "isoform/errors.hpp"
#include "isoform/root_system.hpp"

using namespace isoform;

namespace {
SimpleType st(const char* s) { return SimpleType::parse(s); }
}

TEST_CASE("type labels parse case-insensitively with rank bounds") {
  CHECK(st("A2").family == Family::A);
  CHECK(st("A2").rank == 2);
  CHECK(st("d4") == st("D4"));
  CHECK(st("e6").str() == "E6");
  CHECK_THROWS_AS(st("A0"), InvalidTypeError);
  CHECK_THROWS_AS(st("B1"), InvalidTypeError);
  CHECK_THROWS_AS(st("C1"), InvalidTypeError);
  CHECK_THROWS_AS(st("D2"), InvalidTypeError);
  CHECK_THROWS_AS(st("E5"), InvalidTypeError);
  CHECK_THROWS_AS(st("E9"), InvalidTypeError);
  CHECK_THROWS_AS(st("F5"), InvalidTypeError);
  CHECK_THROWS_AS(st("G3"), InvalidTypeError);
  CHECK_THROWS_AS(st("H3"), InvalidTypeError);
  CHECK_THROWS_AS(st("A"), InvalidTypeError);
  CHECK_THROWS_AS(st("Axy"), InvalidTypeError);
}

TEST_CASE("A2 textbook datum") {
  RootSystem rs = build_root_system(st("A2"));
  CHECK(rs.positive_roots.size() == 3);
  CHECK(rs.cartan == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  CHECK(rs.weyl_order == 6);
}

TEST_CASE("G2 and D4 data against the enumeration oracle") {
  RootSystem g2 = build_root_system(st("G2"));
  CHECK(g2.positive_roots.size() == 6);
  CHECK(g2.weyl_order == 12);
  CHECK(euclid_oracle::weyl_order(st("G2")) == 12);
  CHECK(euclid_oracle::all_roots(st("G2")).size() == 12);

  RootSystem d4 = build_root_system(st("D4"));
  CHECK(d4.positive_roots.size() == 12);
  CHECK(d4.weyl_order == 192);
  CHECK(euclid_oracle::weyl_order(st("D4")) == 192);
}

TEST_CASE("primitive degree tables") {
  CHECK(primitive_degrees(st("A1")) == std::vector<int>{3});
  CHECK(primitive_degrees(st("A2")) == std::vector<int>{3, 5});
  CHECK(primitive_degrees(st("B2")) == std::vector<int>{3, 7});
  CHECK(primitive_degrees(st("C3")) == std::vector<int>{3, 7, 11});
  CHECK(primitive_degrees(st("D4")) == std::vector<int>{3, 7, 7, 11});
  CHECK(primitive_degrees(st("G2")) == std::vector<int>{3, 11});
  CHECK(primitive_degrees(st("F4")) == std::vector<int>{3, 11, 15, 23});
  CHECK(primitive_degrees(st("E6")) == std::vector<int>{3, 9, 11, 15, 17, 23});
  CHECK(primitive_degrees(st("E7")) == std::vector<int>{3, 11, 15, 19, 23, 27, 35});
  CHECK(primitive_degrees(st("E8")) == std::vector<int>{3, 15, 23, 27, 35, 39, 47, 59});
}

TEST_CASE("weyl_order_formula matches enumeration at desk scale") {
  CHECK(weyl_order_formula(st("A3")) == 24);
  CHECK(weyl_order_formula(st("B3")) == 48);
  CHECK(weyl_order_formula(st("E6")) == 51840);
  CHECK(euclid_oracle::weyl_order(st("A3")) == 24);
  CHECK(euclid_oracle::weyl_order(st("B3")) == 48);
  // permutation-representation oracle values for the remaining small types
  std::map<std::string, long long> expected{{"A1", 2},  {"A2", 6},  {"B2", 8},
                                            {"C2", 8},  {"C3", 48}, {"D3", 24},
                                            {"G2", 12}, {"F4", 1152}};
  for (const auto& [label, order] : expected) {
    CHECK(euclid_oracle::weyl_order(st(label.c_str())) == order);
    CHECK(weyl_order_formula(st(label.c_str())) == order);
  }
}

TEST_CASE("degree tables satisfy the order product rule for every type") {
  std::vector<SimpleType> types;
  for (int n = 1; n <= 8; ++n) types.push_back(SimpleType(Family::A, n));
  for (int n = 2; n <= 8; ++n) types.push_back(SimpleType(Family::B, n));
  for (int n = 2; n <= 8; ++n) types.push_back(SimpleType(Family::C, n));
  for (int n = 3; n <= 8; ++n) types.push_back(SimpleType(Family::D, n));
  types.push_back(st("G2"));
  types.push_back(st("F4"));
  types.push_back(st("E6"));
  types.push_back(st("E7"));
  types.push_back(st("E8"));
  for (const auto& t : types) {
    auto d = primitive_degrees(t);
    CHECK(static_cast<int>(d.size()) == t.rank);
    long long prod = 1;
    for (int g : d) {
      CHECK(g % 2 == 1);
      prod *= (g + 1) / 2;
    }
    CHECK(prod == weyl_order_formula(t));
  }
  CHECK(weyl_order_formula(st("E7")) == 2903040);
  CHECK(weyl_order_formula(st("E8")) == 696729600);
}

TEST_CASE("positive root counts match the classical census") {
  auto count = [](const char* s) { return build_root_system(st(s)).positive_roots.size(); };
  CHECK(count("A5") == 15);
  CHECK(count("B5") == 25);
  CHECK(count("C6") == 36);
  CHECK(count("D6") == 30);
  CHECK(count("F4") == 24);
  CHECK(count("E6") == 36);
  CHECK(count("E7") == 63);
  CHECK(count("E8") == 120);
}

TEST_CASE("simple reflections permute the root set") {
  for (const char* label : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    RootSystem rs = build_root_system(st(label));
    int n = rs.rank();
    for (const auto& root : rs.positive_roots) {
      for (int i = 0; i < n; ++i) {
        long long pairing = 0;
        for (int j = 0; j < n; ++j) pairing += static_cast<long long>(rs.cartan[i][j]) * root[j];
        std::vector<int> image = root;
        image[i] -= static_cast<int>(pairing);
        CHECK(rs.is_root(image));
      }
    }
  }
}

TEST_CASE("the bilinear form is symmetric and positive on roots") {
  for (const char* label : {"A2", "B3", "C3", "G2", "F4", "E6"}) {
    RootSystem rs = build_root_system(st(label));
    int n = rs.rank();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(rs.bilinear[i][j] == rs.bilinear[j][i]);
    for (const auto& r : rs.positive_roots) {
      long long len2 = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) len2 += rs.bilinear[i][j] * r[i] * r[j];
      CHECK(len2 > 0);
    }
  }
}

TEST_CASE("euclidean root counts agree with the library") {
  for (const char* label : {"A1", "A2", "A4", "B2", "B4", "C3", "D3", "D5", "G2", "F4", "E6"}) {
    SimpleType t = st(label);
    CHECK(euclid_oracle::all_roots(t).size() == 2 * build_root_system(t).positive_roots.size());
  }
}

TEST_CASE("compact algebras aggregate rank, degrees and Weyl order") {
  CompactAlgebra torus(2, {});
  CHECK(torus.rank() == 2);
  CHECK(torus.primitive_degrees() == std::vector<int>{1, 1});
  CHECK(torus.weyl_order() == 1);

  CompactAlgebra u1_su2(1, {st("A1")});
  CHECK(u1_su2.rank() == 2);
  CHECK(u1_su2.primitive_degrees() == std::vector<int>{1, 3});
  CHECK(u1_su2.weyl_order() == 2);
  CHECK(u1_su2.str() == "U1 x A1");

  CompactAlgebra prod(0, {st("A2"), st("D4")});
  CHECK(prod.rank() == 6);
  CHECK(prod.primitive_degrees() == std::vector<int>{3, 3, 5, 7, 7, 11});
  CHECK(prod.weyl_order() == 6 * 192);

  CHECK_THROWS_AS(CompactAlgebra(-1, {}), InvalidTypeError);
}

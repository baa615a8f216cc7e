#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "twl/apoly.hpp"

using namespace twl;

TEST_CASE("A-polynomial of the Whitehead link (k = 1)") {
  APolyTuple t = apoly_closed_form(1);
  LaurentPoly M = V(Var::M), L = V(Var::L);
  LaurentPoly expected_canonical = V(Var::M, 4) * V(Var::L, 2) -
                                   V(Var::M, 4) * L + 4 * V(Var::M, 2) * L -
                                   L + C(1);
  CHECK(t.canonical_factor == expected_canonical);
  CHECK(t.nonhyp_factor == L - C(1));
  CHECK(t.a1 == primitive_part((L - C(1)) * expected_canonical));
  CHECK(t.a2 == t.a1);
}

TEST_CASE("k = 2 tuple: shape of the non-hyperbolic factor") {
  APolyTuple t = apoly_closed_form(2);
  CHECK(t.nonhyp_factor == V(Var::L) * V(Var::M, 2) - C(1));
  CHECK(t.a1 == primitive_part(t.nonhyp_factor * t.canonical_factor));
  CHECK(t.canonical_factor.num_terms() >= 3);
}

TEST_CASE("closed form rejects k = 0") {
  CHECK_THROWS_AS(apoly_closed_form(0), std::domain_error);
}

TEST_CASE("canonical factor is primitive and content-free") {
  for (int k = 1; k <= 6; ++k) {
    LaurentPoly cf = apoly_closed_form(k).canonical_factor;
    CHECK(primitive_part(cf) == cf);
    CHECK(content(cf) == 1);
  }
}

TEST_CASE("reciprocity: invariant under (M, L) -> (1/M, 1/L)") {
  std::map<Var, LaurentPoly> inv{{Var::M, V(Var::M, -1)},
                                 {Var::L, V(Var::L, -1)}};
  for (int k = 1; k <= 8; ++k) {
    LaurentPoly cf = apoly_closed_form(k).canonical_factor;
    CHECK(equal_up_to_unit(cf.substitute_poly(inv), cf));
  }
}

TEST_CASE("elimination oracle agrees with the closed form") {
  for (int k = 1; k <= 4; ++k) {
    LaurentPoly expected = squarefree_primitive(
        apoly_closed_form(k).canonical_factor);
    for (Component comp : {Component::a, Component::b}) {
      for (int sign : {1, -1}) {
        LaurentPoly res = squarefree_primitive(
            elimination_oracle(k, comp, sign));
        CHECK(equal_up_to_unit(res, expected));
      }
    }
  }
}

TEST_CASE("elimination oracle input validation") {
  CHECK_THROWS_AS(elimination_oracle(0, Component::a), std::domain_error);
  CHECK_THROWS_AS(elimination_oracle(1, Component::a, 2),
                  std::invalid_argument);
}

TEST_CASE("Slope arithmetic") {
  CHECK(Slope::of(2, 4) == Slope{1, 2});
  CHECK(Slope::of(-2, -4) == Slope{1, 2});
  CHECK(Slope::of(1, -2) == Slope{-1, 2});
  CHECK(Slope::of(3, 0).is_vertical());
  CHECK(Slope::of(0, 5) == Slope{0, 1});
  CHECK(Slope::vertical().to_string() == "inf");
  CHECK(Slope::of(1, 4).to_string() == "1/4");
  CHECK(Slope::of(2, 1).to_string() == "2");
  CHECK(Slope::of(0, 1) < Slope::of(1, 4));
  CHECK(Slope::of(1, 4) < Slope::vertical());
}

TEST_CASE("Newton polygon: degenerate supports") {
  NewtonPolygon single = newton_polygon(C(5));
  CHECK(single.vertices == std::vector<std::pair<long, long>>{{0, 0}});
  CHECK(single.slopes.empty());

  NewtonPolygon segment = newton_polygon(V(Var::M, 2) * V(Var::L) + C(1));
  CHECK(segment.vertices.size() == 2);
  REQUIRE(segment.slopes.size() == 1);
  CHECK(segment.slopes[0] == Slope{1, 2});

  CHECK_THROWS_AS(newton_polygon(LaurentPoly()), std::domain_error);
}

TEST_CASE("Newton polygon of the k = 1 canonical factor") {
  NewtonPolygon np = newton_polygon(apoly_closed_form(1).canonical_factor);
  std::set<std::pair<long, long>> got(np.vertices.begin(), np.vertices.end());
  std::set<std::pair<long, long>> want{{0, 0}, {0, 1}, {4, 1}, {4, 2}};
  CHECK(got == want);
  CHECK(np.distinct_slopes() == 2);
  std::set<std::string> slopes;
  for (const Slope& s : np.slopes) slopes.insert(s.to_string());
  CHECK(slopes == std::set<std::string>{"1/4", "inf"});
}

TEST_CASE("Newton polygon vertices are counterclockwise and convex") {
  for (int k = 1; k <= 5; ++k) {
    NewtonPolygon np = newton_polygon(apoly_closed_form(k).canonical_factor);
    const auto& v = np.vertices;
    REQUIRE(v.size() >= 3);
    long area2 = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& a = v[i];
      const auto& b = v[(i + 1) % v.size()];
      area2 += a.first * b.second - b.first * a.second;
    }
    CHECK(area2 > 0);  // positive signed area == counterclockwise
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& o = v[i];
      const auto& a = v[(i + 1) % v.size()];
      const auto& b = v[(i + 2) % v.size()];
      long cr = (a.first - o.first) * (b.second - o.second) -
                (a.second - o.second) * (b.first - o.first);
      CHECK(cr > 0);  // strictly convex: no collinear triples survive
    }
  }
}

TEST_CASE("canonical check holds for k = 1..8") {
  for (int k = 1; k <= 8; ++k) CHECK(canonical_check(k));
  CHECK_FALSE(passes_canonical_check(V(Var::L) - C(1)));
  CHECK_FALSE(passes_canonical_check(V(Var::M, 2) + V(Var::M) + C(1)));
}

TEST_CASE("numeric witnesses for k = 1..4") {
  for (int k = 1; k <= 4; ++k) {
    WitnessReport r = numeric_witness(k, 12, /*seed=*/k * 101u + 7u);
    INFO("k = " << k);
    CHECK(r.failures.empty());
    CHECK(r.max_canonical_residual < 1e-8);
    if (r.has_noncanonical) CHECK(r.max_noncanonical_deviation < 1e-8);
    CHECK(r.has_noncanonical == (k >= 2));
  }
}

#include "doctest.h"
#include "test_support.hpp"

using namespace macsat;

TEST_CASE("A1 construction") {
  auto rs = build_root_system(RootType::A, 1);
  CHECK(rs.roots.size() == 2);
  CHECK(rs.c0 == 1);
  CHECK_FALSE(rs.nonreduced);
  int a1 = rs.simple[0];
  CHECK(rs.len2(a1) == 2);
  CHECK(rs.theta == a1);
}

TEST_CASE("BC1 construction") {
  auto rs = build_root_system(RootType::BC, 1);
  CHECK(rs.roots.size() == 4);  // {+-e1, +-2e1}
  CHECK(rs.c0 == 2);
  std::multiset<Rational> lens;
  for (int i = 0; i < (int)rs.roots.size(); ++i) lens.insert(rs.len2(i));
  CHECK(lens == std::multiset<Rational>{1, 1, 4, 4});
  CHECK(rs.len2(rs.theta) == 4);  // theta = 2e1, the highest root
  CHECK(rs.roots[rs.theta] == QVec{Rational(2)});
}

TEST_CASE("A2 closure matches a brute-force reflection orbit") {
  auto rs = build_root_system(RootType::A, 2);
  CHECK(rs.roots.size() == 6);
  for (int i = 0; i < 6; ++i) CHECK(rs.len2(i) == 2);
  // theta = alpha_1 + alpha_2
  QVec th = rs.roots[rs.simple[0]] + rs.roots[rs.simple[1]];
  CHECK(rs.roots[rs.theta] == th);
  // independent closure oracle: repeatedly reflect the simples by all roots
  std::set<QVec> orbit(rs.roots.begin() + 0, rs.roots.begin() + 0);
  std::set<QVec> seed{rs.roots[rs.simple[0]], rs.roots[rs.simple[1]]};
  bool grew = true;
  std::set<QVec> acc = seed;
  while (grew) {
    grew = false;
    for (const auto& v : std::set<QVec>(acc)) {
      for (const auto& a : seed) {
        Rational m = Rational(2) * rs.inner(v, a) / rs.inner(a, a);
        QVec img = v - m * a;
        if (acc.insert(img).second) grew = true;
      }
    }
  }
  CHECK(acc.size() == 6);
  for (const auto& v : acc) CHECK(rs.root_index(v) >= 0);
}

TEST_CASE("invalid type/rank pairs are named") {
  CHECK_THROWS_WITH_AS(build_root_system(RootType::B, 1), "invalid root system (B,1)",
                       ConstructionError);
  CHECK_THROWS_AS(build_root_system(RootType::E, 9), ConstructionError);
  CHECK_THROWS_AS(build_root_system(RootType::F, 3), ConstructionError);
  CHECK_THROWS_AS(build_root_system(RootType::D, 2), ConstructionError);
  CHECK_THROWS_AS(build_root_system(RootType::A, 0), ConstructionError);
}

TEST_CASE("coroots and Cartan invariants") {
  for (auto [t, n] : std::vector<std::pair<RootType, int>>{
           {RootType::A, 3}, {RootType::A, 4}, {RootType::B, 3}, {RootType::B, 4},
           {RootType::C, 3}, {RootType::C, 4}, {RootType::D, 3}, {RootType::D, 4},
           {RootType::G, 2}, {RootType::F, 4}, {RootType::BC, 2}, {RootType::BC, 4}}) {
    auto rs = build_root_system(t, n);
    // alpha^vee = 2 alpha / (alpha,alpha), and reflections preserve R (closure)
    for (int i = 0; i < (int)rs.roots.size(); ++i) {
      QVec cv = rs.coroot(i);
      CHECK(rs.inner(rs.roots[i], cv) == 2);
      for (int s = 0; s < n; ++s) CHECK(rs.reflect_root(i, rs.simple[s]) >= 0);
    }
    // <lambda_j, alpha_i^vee> = delta_ij
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(rs.pair(rs.fund_weight[j], rs.simple[i]) == (i == j ? 1 : 0));
  }
}

TEST_CASE("affine root enumeration") {
  SUBCASE("A1 window 1") {
    auto rs = build_root_system(RootType::A, 1);
    auto ar = build_affine_roots(rs, 1);
    CHECK(ar.size() == 6);  // {+-alpha + k delta, k in -1..1}
    for (const auto& a : ar) CHECK(a.shift2 % 2 == 0);
  }
  SUBCASE("BC1 half-integral band") {
    auto rs = build_root_system(RootType::BC, 1);
    auto ar = build_affine_roots(rs, 1);
    bool found_half = false;
    for (const auto& a : ar)
      if (rs.len2(a.root) == 1 && a.shift2 == 1) found_half = true;
    CHECK(found_half);
    // longs on integral shifts only
    for (const auto& a : ar)
      if (rs.len2(a.root) == 4) CHECK(a.shift2 % 2 == 0);
  }
  SUBCASE("alpha_0 present with shift c0^{-1}") {
    for (auto [t, n] : std::vector<std::pair<RootType, int>>{{RootType::A, 2}, {RootType::BC, 2}}) {
      auto rs = build_root_system(t, n);
      auto ar = build_affine_roots(rs, 2);
      AffineRoot a0 = affine_alpha0(rs);
      CHECK(std::find(ar.begin(), ar.end(), a0) != ar.end());
      CHECK(Rational(a0.shift2, 2) == Rational(1, rs.c0));
    }
  }
}

TEST_CASE("orbit tables") {
  SUBCASE("BC2 has five orbits matching the explicit bands") {
    auto rs = build_root_system(RootType::BC, 2);
    auto tab = orbit_table(rs);
    CHECK(tab.num_orbits == 5);
    AffineRoot a0 = affine_alpha0(rs);
    AffineRoot an = affine_simple(rs, 2);
    AffineRoot a1 = affine_simple(rs, 1);
    int two_a0 = tab.orbit_id({rs.root_index(Rational(2) * rs.roots[a0.root]), 2 * a0.shift2});
    int two_an = tab.orbit_id({rs.root_index(Rational(2) * rs.roots[an.root]), 0});
    // W(alpha_n) = shorts + Z delta: integral shifts of e_2
    CHECK(tab.orbit_id({an.root, 2}) == tab.orbit_id(an));
    CHECK(tab.orbit_id({an.root, -2}) == tab.orbit_id(an));
    // W(alpha_0) = shorts + Z delta + delta/2
    CHECK(tab.orbit_id({an.root, 1}) == tab.orbit_id(a0));
    CHECK(tab.orbit_id({an.root, 3}) == tab.orbit_id(a0));
    // W(2 alpha_0) = longs + 2Z delta + delta, W(2 alpha_n) = longs + 2Z delta
    CHECK(tab.orbit_id({rs.root_index(QVec{Rational(2), Rational(0)}), 2}) == two_a0);
    CHECK(tab.orbit_id({rs.root_index(QVec{Rational(2), Rational(0)}), 4}) == two_an);
    // W(alpha_1) = mids + Z delta
    CHECK(tab.orbit_id({a1.root, 2}) == tab.orbit_id(a1));
    CHECK(tab.num_orbits == 5);
  }
  SUBCASE("BC1 has four orbits") {
    auto rs = build_root_system(RootType::BC, 1);
    CHECK(orbit_table(rs).num_orbits == 4);
  }
  SUBCASE("affine A1 splits by shift parity (computed, not merged)") {
    auto rs = build_root_system(RootType::A, 1);
    auto tab = orbit_table(rs);
    CHECK(tab.num_orbits == 2);
    AffineRoot a1 = affine_simple(rs, 1);
    CHECK(tab.orbit_id({a1.root, 4}) == tab.orbit_id(a1));  // even shifts with alpha_1
    CHECK(tab.orbit_id({a1.root, 2}) == tab.orbit_id(affine_alpha0(rs)));  // odd shifts
    CHECK(tab.orbit_id(affine_alpha0(rs)) != tab.orbit_id(a1));
    // parameter binding merges per root length (single parameter here)
    CHECK(tab.nparams() == 1);
    CHECK(tab.p_t01 == tab.p_t03);
  }
  SUBCASE("orbit partition is stable under every simple reflection") {
    for (auto [t, n] : std::vector<std::pair<RootType, int>>{
             {RootType::A, 1}, {RootType::A, 2}, {RootType::B, 2}, {RootType::C, 2},
             {RootType::BC, 1}, {RootType::BC, 2}, {RootType::G, 2}}) {
      auto rs = build_root_system(t, n);
      auto tab = orbit_table(rs);  // construction itself runs the stability sweep
      CHECK(tab.num_orbits >= 1);
    }
  }
}

TEST_CASE("extended inner product") {
  auto rs = build_root_system(RootType::A, 2);
  ExtVec delta{QVec(rs.ambient, Rational(0)), 1, 0};
  ExtVec lam0{QVec(rs.ambient, Rational(0)), 0, 1};
  CHECK(inner(rs, delta, lam0) == 1);
  CHECK(inner(rs, delta, delta) == 0);
  CHECK(inner(rs, lam0, lam0) == 0);
  ExtVec alpha{rs.roots[rs.simple[0]], 0, 0};
  CHECK(inner(rs, delta, alpha) == 0);
  ExtVec theta{rs.roots[rs.theta], 0, 0};
  CHECK(inner(rs, theta, theta) == 2);
  auto bc = build_root_system(RootType::BC, 2);
  CHECK(bc.inner(bc.roots[bc.theta], bc.roots[bc.theta]) == 4);
}

TEST_CASE("lattices") {
  auto rs = build_root_system(RootType::A, 2);
  auto P = make_lattice_P(rs);
  auto Q = make_lattice_Q(rs);
  SUBCASE("Q <= P and membership") {
    for (int i = 0; i < 2; ++i) {
      auto c = P.coords_of(rs.roots[rs.simple[i]]);
      REQUIRE(c);
      // alpha_i in fundamental-weight coordinates = Cartan column
      CHECK((*c)[i] == 2);
    }
    // omega_1 is not in Q
    CHECK_FALSE(Q.coords_of(rs.fund_weight[0]).has_value());
  }
  SUBCASE("pairing rows recover fundamental coordinates") {
    for (const IVec& lam : coord_box(2, 3)) {
      QVec v = P.realize(lam);
      for (int i = 0; i < 2; ++i) CHECK(P.pair(lam, i) == lam[i]);
      auto back = P.coords_of(v);
      REQUIRE(back);
      CHECK(*back == lam);
    }
  }
  SUBCASE("custom intermediate lattice") {
    // index-3 sublattice of P(A2) containing Q: basis {omega1+omega2, 3omega2}? use Q itself
    auto L = make_lattice_custom(rs, {{2, -1}, {-1, 2}});
    CHECK(L.coords_of(rs.roots[rs.simple[0]]).has_value());
    auto bad = std::vector<std::vector<long long>>{{1, 0}, {0, 2}};  // does not contain alpha_2
    CHECK_THROWS_AS(make_lattice_custom(rs, bad), LatticeError);
  }
  SUBCASE("BC parity rule") {
    auto bc1 = build_root_system(RootType::BC, 1);
    CHECK_THROWS_AS(make_lattice_P(bc1), LatticeError);
    CHECK_NOTHROW(make_lattice_Q(bc1));
  }
}

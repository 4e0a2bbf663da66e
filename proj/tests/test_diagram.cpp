#include <random>

#include "brancher/diagram.hpp"
#include "brancher/genlink.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace brancher;

namespace {
const char* kTrefoil = "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]";
const char* kFig8 = "PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]";
}

TEST_CASE("Goeritz forms of the trefoil") {
  PDCode tre = parse_pd(kTrefoil);
  GoeritzForm g0 = goeritz_form(tre, 0);
  GoeritzForm g1 = goeritz_form(tre, 1);
  CHECK(abs(det(g0.reduced)) == 3);
  CHECK(abs(det(g1.reduced)) == 3);
  CHECK(determinant(tre) == 3);
  CHECK(h1_branched_cover(tre).str() == "Z/3");
}

TEST_CASE("determinants and signatures of standard examples") {
  PDCode tre = parse_pd(kTrefoil);  // left-handed in this labeling
  CHECK(murasugi_xi(tre) == 2);
  CHECK(murasugi_xi(mirror(tre)) == -2);

  PDCode fig8 = parse_pd(kFig8);
  CHECK(determinant(fig8) == 5);
  CHECK(murasugi_xi(fig8) == 0);

  PDCode hopf = braid_closure(2, {1, 1});  // positive Hopf link
  CHECK(determinant(hopf) == 2);
  CHECK(murasugi_xi(hopf) == 0);
  DiagramInfo hi = analyze(hopf);
  QuasiOrientation base(2, false);
  CHECK(linking_number(hopf, base, 0, 1) == 1);
  CHECK(gl_signature(hopf, base) == -1);

  CHECK(determinant(parse_pd("PD[]")) == 1);
  CHECK(murasugi_xi(parse_pd("PD[]")) == 0);
}

TEST_CASE("torus knots and two-bridge links") {
  CHECK(murasugi_xi(torus_link(2, 3, true)) == -2);
  CHECK(murasugi_xi(torus_link(2, 5, true)) == -4);
  CHECK(murasugi_xi(torus_link(3, 7, true)) == -8);
  CHECK(determinant(torus_link(3, 7, true)) == 1);
  for (long p : {3L, 5L, 7L, 9L, 11L})
    for (long q = 1; q < p; q += 2) {
      if (gcd(Int(p), Int(q)) != 1) continue;
      PDCode d = two_bridge(p, q);
      CHECK(is_alternating(d));
      CHECK(determinant(d) == p);
    }
}

TEST_CASE("determinant agrees with the state-sum oracle") {
  std::mt19937 rng(20260826);
  std::vector<PDCode> pool = {
      parse_pd(kTrefoil), parse_pd(kFig8), braid_closure(2, {1, 1}),
      two_bridge(7, 3),   two_bridge(9, 5), torus_link(2, 5, true),
      montesinos_diagram({ExtRational(2), ExtRational(3), ExtRational(3)}),
  };
  for (int i = 0; i < 8; ++i) {
    long p = 3 + 2 * (long)(rng() % 6);
    long q = 1 + (long)(rng() % (p - 1));
    if (gcd(Int(p), Int(q)) != 1) continue;
    pool.push_back(two_bridge(p, q));
  }
  for (const auto& d : pool) CHECK(determinant(d) == oracles::kauffman_det(d));
}

TEST_CASE("xi is the average signature over quasi-orientations") {
  std::vector<PDCode> pool = {
      braid_closure(2, {1, 1}),
      braid_closure(2, {1, 1, 1, 1}),  // (2,4) torus link
      braid_closure(3, {1, -2, 1, -2}),
      montesinos_diagram({ExtRational(2), ExtRational(2), ExtRational(-3)}),
  };
  for (const auto& d : pool) {
    Rat avg = murasugi_xi_average(d);
    CHECK(avg.get_den() == 1);
    CHECK(avg.get_num() == murasugi_xi(d));
  }
}

TEST_CASE("sigma changes sign under mirror") {
  for (auto d : {two_bridge(5, 3), two_bridge(11, 3),
                 montesinos_diagram({ExtRational(2), ExtRational(3), ExtRational(5)})}) {
    CHECK(murasugi_xi(mirror(d)) == -murasugi_xi(d));
    CHECK(determinant(mirror(d)) == determinant(d));
  }
}

TEST_CASE("Goeritz determinant independent of color and base region") {
  for (auto d : {parse_pd(kTrefoil), parse_pd(kFig8), two_bridge(13, 5)}) {
    GoeritzForm a = goeritz_form(d, 0), b = goeritz_form(d, 1);
    CHECK(abs(det(a.reduced)) == abs(det(b.reduced)));
    Inertia ia = inertia(a.unreduced);
    CHECK(ia.null == 1);  // zero row sums: exactly the one relation
  }
}

TEST_CASE("split diagrams are rejected by the Goeritz pipeline") {
  PDCode split = parse_pd("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]"
                          ""),
         loop = split;
  loop.free_loops = 1;
  CHECK_THROWS_AS(murasugi_xi(loop), std::invalid_argument);
  CHECK(determinant(loop) == 0);
}

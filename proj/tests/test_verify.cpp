#include <random>

#include "brancher/corpus.hpp"
#include "brancher/genlink.hpp"
#include "brancher/verify.hpp"
#include "doctest.h"

using namespace brancher;

namespace {

// Random Farey triangle: a unimodular image of (0, 1, inf).
std::array<ExtRational, 3> random_triangle(std::mt19937& rng) {
  std::uniform_int_distribution<long> shear(-2, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  Mat2Z a;
  for (int i = 0; i < 4; ++i) {
    Mat2Z m;
    if (coin(rng))
      m.b = shear(rng);
    else
      m.c = shear(rng);
    a = a * m;
  }
  return {a.apply(ExtRational(0)), a.apply(ExtRational(1)),
          a.apply(ExtRational::infinity())};
}

}  // namespace

TEST_CASE("point fixtures for the predicted Lefschetz number") {
  PDCode k237 = montesinos_diagram({ExtRational(2), ExtRational(-3), ExtRational(-7)});
  CHECK(determinant(k237) == 1);
  CHECK(murasugi_xi(k237) == 8);
  CHECK(predicted_lefschetz(k237, {Rat(0)}) == 1);

  // h(Sigma(2,3,7)) = 0 from the star plumbing lattice.
  IMat star{{-1, 1, 1, 1}, {1, -2, 0, 0}, {1, 0, -3, 0}, {1, 0, 0, -7}};
  auto ds = spin_d_multiset(star);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0] == ExtRational(0));
  PDCode t37 = torus_link(3, 7, true);
  CHECK(lefschetz_concordance(t37, Rat(0)) == -1);
}

TEST_CASE("the twisted (5,6)-torus-knot fixture") {
  std::vector<int> word;
  for (int rep = 0; rep < 6; ++rep)
    for (int s : {-1, -2, -3, -4}) word.push_back(s);
  word.push_back(-1);
  word.push_back(-1);
  PDCode k1 = braid_closure(5, word);
  CHECK(num_components(k1) == 1);
  CHECK(murasugi_xi(k1) == 16);
  CHECK(predicted_lefschetz(k1, {Rat(0)}) == 2);  // d(Y_1) = 0 is an input
}

TEST_CASE("thin identity and chi on standard alternating diagrams") {
  PDCode tre = parse_pd("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]");
  ThinCheck tc = check_thin_identity("3_1", tre);
  CHECK(tc.ok);
  CHECK(tc.xi == 2);
  CHECK(tc.sum_spin_h == Rat(1, 4));
  CHECK(chi(tre, spin_h_values(tre), Rat(0)) == 0);

  PDCode fig8 = parse_pd("PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]");
  CHECK(check_thin_identity("4_1", fig8).ok);
  CHECK(spin_h_values(fig8) == std::vector<Rat>{Rat(0)});

  PDCode hopf = two_bridge(2, 1);
  ThinCheck hc = check_thin_identity("hopf", hopf);
  CHECK(hc.ok);
  CHECK(hc.num_spin == 2);
}

TEST_CASE("corpus: size, ramifiability, thin identity sample") {
  const auto& corpus = alternating_corpus();
  CHECK(corpus.size() >= 60);
  for (size_t i = 0; i < corpus.size(); i += 7) {
    const auto& e = corpus[i];
    CHECK(is_ramifiable(e.diagram));
    CHECK(check_thin_identity(e.id, e.diagram).ok);
  }
}

TEST_CASE("concordance invariant: additivity and mirror antisymmetry") {
  std::vector<PDCode> knots{two_bridge(3, 1), two_bridge(5, 3), two_bridge(7, 3),
                            two_bridge(9, 5)};
  auto lef = [](const PDCode& k) {
    std::vector<Rat> hs = spin_h_values(k);
    REQUIRE(hs.size() == 1);
    return lefschetz_concordance(k, hs[0]);
  };
  for (const PDCode& k : knots) {
    CHECK(lef(k) == 0);  // alternating knots
    CHECK(lef(mirror(k)) == -lef(k));
  }
  for (size_t i = 0; i < knots.size(); ++i)
    for (size_t j = i; j < knots.size(); ++j) {
      PDCode sum = connected_sum(knots[i], 1, knots[j], 1);
      CHECK(lef(sum) == lef(knots[i]) + lef(knots[j]));
      PDCode diff = connected_sum(knots[i], 1, mirror(knots[j]), 1);
      CHECK(lef(diff) == lef(knots[i]) - lef(knots[j]));
    }
}

TEST_CASE("determinant skein relation under crossing resolution") {
  PDCode tre = parse_pd("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]");
  SkeinTriple t = resolve_triple(tre, 0);
  CHECK(determinant(t.l2) == 3);
  CHECK(check_det_skein(t));
  PDCode fig8 = parse_pd("PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]");
  for (size_t i = 0; i < fig8.n(); ++i) CHECK(check_det_skein(resolve_triple(fig8, i)));
}

TEST_CASE("generated Montesinos skein triples satisfy both skein laws") {
  std::mt19937 rng(20260826);
  std::uniform_int_distribution<long> small(-4, 4);
  int found = 0, tried = 0;
  while (found < 12 && tried < 20000) {
    ++tried;
    long a1 = small(rng), b1 = small(rng), a2 = small(rng), b2 = small(rng);
    if (a1 == 0 || a2 == 0) continue;
    if (gcd(Int(a1), Int(b1)) != 1 || gcd(Int(a2), Int(b2)) != 1) continue;
    auto tri = random_triangle(rng);
    auto t = montesinos_skein_triple(ExtRational(a1, b1), ExtRational(a2, b2),
                                     tri[0], tri[1], tri[2]);
    if (!t) continue;
    ++found;
    REQUIRE(t->data);
    CHECK(is_admissible_six_tuple(*t->data));
    CHECK(check_murasugi_skein(*t));
    CHECK(check_det_skein(*t));
    // At most one of the three links is non-ramifiable.
    int bad = (determinant(t->l0) == 0) + (determinant(t->l1) == 0) +
              (determinant(t->l2) == 0);
    CHECK(bad <= 1);
  }
  CHECK(found == 12);
}

TEST_CASE("reports populate exact fields only when justified") {
  PDCode tre = parse_pd("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]");
  InvariantReport r = make_report("3_1", tre, Rat(0));
  CHECK(r.exact);
  CHECK(r.det == 3);
  CHECK(r.xi == 2);
  CHECK(*r.predicted == 0);
  CHECK(*r.defect == 0);

  PDCode k237 = montesinos_diagram({ExtRational(2), ExtRational(-3), ExtRational(-7)});
  InvariantReport rk = make_report("K(2,-3,-7)", k237, std::nullopt);
  CHECK(rk.det == 1);
  CHECK(rk.xi == 8);
  CHECK_FALSE(rk.exact);  // no negative definite color: h not derivable here
  CHECK_FALSE(rk.predicted.has_value());
}

#include <doctest.h>

#include "parahoric/rootdata.hpp"

#include <set>
#include <sstream>

using namespace parahoric;

namespace {

struct Expect {
  const char* type;
  int weyl;
  int positive;
  int rank;
  int ssRank;
};

// Weyl orders from the degrees of basic invariants; positive roots from the exponents.
const Expect kTable[] = {
    {"A1", 2, 1, 1, 1},   {"SL2", 2, 1, 1, 1}, {"PGL2", 2, 1, 1, 1}, {"GL2", 2, 1, 2, 1},
    {"GL3", 6, 3, 3, 2},  {"A2", 6, 3, 2, 2},  {"A3", 24, 6, 3, 3},  {"B2", 8, 4, 2, 2},
    {"C2", 8, 4, 2, 2},   {"G2", 12, 6, 2, 2}, {"B3", 48, 9, 3, 3},  {"C3", 48, 9, 3, 3},
};

}  // namespace

TEST_CASE("weyl group sizes and positive roots") {
  for (const auto& e : kTable) {
    std::string label = e.type;
    CAPTURE(label);
    RootDatum d = RootDatum::build(e.type);
    CHECK(d.weyl().size() == e.weyl);
    CHECK(static_cast<int>(d.positiveRoots().size()) == e.positive);
    CHECK(static_cast<int>(d.roots().size()) == 2 * e.positive);
    CHECK(d.rank() == e.rank);
    CHECK(d.semisimpleRank() == e.ssRank);
    CHECK(d.weyl().length(d.weyl().longest()) == e.positive);
  }
}

TEST_CASE("cartan matrix and reflections") {
  for (const auto& t : RootDatum::supportedTypes()) {
    CAPTURE(t);
    RootDatum d = RootDatum::build(t);
    const int l = d.semisimpleRank();
    for (int i = 1; i <= l; ++i) {
      CHECK(d.cartan(i, i) == 2);
      CHECK(d.reflect(i, d.coroot(i)) == neg(d.coroot(i)));
      // 2 rho pairs to 2 with every simple coroot
      CHECK(d.pairing(d.twoRho(), d.coroot(i)) == 2);
      for (int j = 1; j <= l; ++j)
        if (i != j) CHECK(d.cartan(i, j) <= 0);
    }
  }
  RootDatum g2 = RootDatum::build("G2");
  CHECK(g2.cartan(1, 2) * g2.cartan(2, 1) == 3);
  RootDatum c2 = RootDatum::build("C2");
  CHECK(c2.cartan(1, 2) * c2.cartan(2, 1) == 2);
}

TEST_CASE("orbits and dominant representatives") {
  RootDatum c2 = RootDatum::build("C2");
  // first fundamental coweight has four conjugates
  CHECK(c2.orbit({1, 0}).size() == 4);
  RootDatum a2 = RootDatum::build("A2");
  CHECK(a2.orbit({1, 0}).size() == 3);
  CHECK(a2.orbit({1, 1}).size() == 6);
  CHECK(a2.orbit({0, 0}).size() == 1);
  for (const auto& x : a2.orbit({2, -1})) CHECK(a2.dominantRep(x) == a2.dominantRep({2, -1}));
  CHECK(a2.isDominant(a2.dominantRep({-3, 1})));
  RootDatum a1 = RootDatum::build("A1");
  CHECK(a1.orbit({2}) == std::vector<IVec>{{-2}, {2}});
  CHECK(a1.orbitNorm({-3}) == 3);
  CHECK(a1.dominantUpTo(2) == std::vector<IVec>{{0}, {1}, {2}});
}

TEST_CASE("parabolic subgroups") {
  RootDatum a3 = RootDatum::build("A3");
  CHECK(a3.parabolicSubgroup(0).size() == 1);
  CHECK(a3.parabolicSubgroup(0b0010).size() == 2);
  CHECK(a3.parabolicSubgroup(0b1010).size() == 4);
  CHECK(a3.parabolicSubgroup(0b0110).size() == 6);
  CHECK(a3.parabolicSubgroup(a3.simpleMask()).size() == 24);
}

TEST_CASE("diagram automorphisms") {
  RootDatum a2 = RootDatum::build("A2");
  auto flip = DiagramAutomorphism::build(a2, "flip", 2);
  CHECK(flip.order == 2);
  CHECK(flip.perm[1] == 2);
  CHECK(flip.apply(a2.coroot(1)) == a2.coroot(2));
  CHECK(DiagramAutomorphism::build(a2, "perm:2,1", 4).matrix == flip.matrix);
  CHECK_THROWS_AS(DiagramAutomorphism::build(a2, "flip", 3), std::invalid_argument);
  CHECK_THROWS_AS(DiagramAutomorphism::build(a2, "1", 2), std::invalid_argument);
  CHECK_THROWS_AS(DiagramAutomorphism::build(a2, "garbage", 2), std::invalid_argument);
  CHECK(DiagramAutomorphism::build(a2, "id", 3).isIdentity());
  RootDatum gl3 = RootDatum::build("GL3");
  auto f3 = DiagramAutomorphism::build(gl3, "flip", 2);
  CHECK(f3.order == 2);
  CHECK(f3.apply({1, 0, 0}) == IVec{0, 0, -1});
}

TEST_CASE("folding") {
  struct Case {
    const char* type;
    const char* theta;
    int relWeyl;
    int fixedRank;
  };
  // unitary flips fold to relative Weyl groups of type A1 or B2
  const Case cases[] = {{"A2", "flip", 2, 1}, {"A3", "flip", 8, 2}, {"GL2", "flip", 2, 1},
                        {"GL3", "flip", 2, 1}, {"A2", "id", 6, 2},  {"C2", "id", 8, 2}};
  for (const auto& c : cases) {
    std::string label = std::string(c.type) + " " + c.theta;
    CAPTURE(label);
    RootDatum d = RootDatum::build(c.type);
    auto t = DiagramAutomorphism::build(d, c.theta, 2);
    RelativeDatum rel = fold(d, t);
    CHECK(static_cast<int>(rel.relativeWeyl.size()) == c.relWeyl);
    CHECK(static_cast<int>(rel.fixedBasis.size()) == c.fixedRank);
    CHECK(rel.generatedByFoldingGenerators);
    CHECK(rel.faithfulOnFixedLattice);
    for (const auto& b : rel.fixedBasis) CHECK(t.apply(b) == b);
  }
  RootDatum a2 = RootDatum::build("A2");
  RelativeDatum rel = fold(a2, DiagramAutomorphism::build(a2, "flip", 2));
  // the relative Weyl group is {e, w0}
  CHECK(std::set<int>(rel.relativeWeyl.begin(), rel.relativeWeyl.end()) ==
        std::set<int>{0, a2.weyl().longest()});
  // restricted roots of a non-reduced rank-one system: +-a and +-2a
  CHECK(rel.restrictedRoots.size() == 4);
}

TEST_CASE("datum config parsing") {
  std::istringstream in("# comment\ntype = A2\ntheta = flip  # inline\nr = 4\n");
  DatumConfig cfg = parseDatumConfig(in);
  CHECK(cfg.type == "A2");
  CHECK(cfg.theta == "flip");
  CHECK(cfg.r == 4);
  std::istringstream bad("colour = red\n");
  CHECK_THROWS_AS(parseDatumConfig(bad), std::invalid_argument);
  std::istringstream empty("");
  CHECK_THROWS_AS(parseDatumConfig(empty), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::build("E8"), std::invalid_argument);
}

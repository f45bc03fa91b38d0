#include <doctest.h>

#include "kg/bracket.hpp"
#include "kg/graphinv.hpp"
#include "support.hpp"

using namespace kg;

TEST_CASE("graph invariants survive random R1-R5 walks") {
  std::mt19937_64 rng(101);
  int trials = 0;
  for (int t = 0; t < 200; ++t) {
    Diagram g = kgtest::random_braid(rng, 3, 4, 1 + t % 2, t % 5 == 4);
    Report r = check_reidemeister(g, 1, 3, rng());
    INFO(serialize(g) << r.to_string());
    CHECK(r.ok);
    ++trials;
  }
  CHECK(trials == 200);
}

TEST_CASE("p_eval survives random R1-R3 walks") {
  std::mt19937_64 rng(202);
  for (int t = 0; t < 200; ++t) {
    Diagram d = kgtest::random_braid(rng, 4, 7);
    Report r = check_reidemeister(d, 1, 4, rng());
    INFO(serialize(d) << r.to_string());
    CHECK(r.ok);
  }
}

TEST_CASE("orientation reversal of a component") {
  // the writhe changes by an even amount, so Z does not change at all
  std::mt19937_64 rng(303);
  for (int t = 0; t < 200; ++t) {
    Diagram d = kgtest::random_braid(rng, 4, 6);
    int c = std::uniform_int_distribution<int>(0, components(d) - 1)(rng);
    Diagram r = reverse_component(d, c);
    REQUIRE(validate(r).empty());
    LaurentPoly zr = z_eval(r), z = z_eval(d);
    CHECK((writhe(r) - writhe(d)) % 2 == 0);
    CHECK(zr == z);
    CHECK(p_eval(r) == z.shifted(-3 * writhe(r)));
  }
}

TEST_CASE("casimir weights reproduce the crossing values") {
  std::mt19937_64 rng(404);
  for (int t = 0; t < 200; ++t) {
    Diagram g = kgtest::random_braid(rng, 3, 5, 1);
    int v = 0;
    while (!is_vertex(g.nodes[v])) ++v;
    Diagram m = g;
    m.nodes[v] = NodeKind::CVert;
    RationalFunc plain = eval_with_casimir_marks(g), marked = eval_with_casimir_marks(m);
    RationalFunc half = RationalFunc(Rational(1, 2)) * RationalFunc(A(1) + A(-1)) * plain;
    RationalFunc twice = RationalFunc(2) * RationalFunc(A(1) - A(-1)) * marked;
    CHECK(half + twice == RationalFunc(z_eval(replace_vertex(g, v, Replacement::Pos))));
    CHECK(half - twice == RationalFunc(z_eval(replace_vertex(g, v, Replacement::Neg))));
  }
}

TEST_CASE("canonical text is stable under moves and back") {
  std::mt19937_64 rng(505);
  for (int t = 0; t < 200; ++t) {
    Diagram d = kgtest::random_braid(rng, 4, 6, t % 3);
    auto m = random_move(d, rng, true);
    if (!m) continue;
    MoveResult r = apply_move_ex(d, *m);
    if (r.undo) CHECK(canonical_text(apply_move(r.diagram, *r.undo)) == canonical_text(d));
  }
}

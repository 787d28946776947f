#include <doctest.h>

#include "gainsw/demos.hpp"
#include "gainsw/gain_graph.hpp"
#include "test_support.hpp"

using namespace gainsw;

TEST_CASE("adjacency matrix") {
  const Group mu4 = Group::roots_of_unity(4);
  SUBCASE("edgeless graph") {
    GainGraph g(mu4, {"a", "b", "c"});
    const auto m = adjacency(g);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(m.at(i, j).is_zero());
  }
  SUBCASE("single edge carries the gain and its inverse") {
    GainGraph g(mu4, {"a", "b"});
    const auto gain = make_exponent(mu4, 1);
    g.add_edge("a", "b", gain);
    const auto m = adjacency(g);
    CHECK(ga_equal(m.at(0, 1), GAElement::basis(gain)));
    CHECK(ga_equal(m.at(1, 0), GAElement::basis(inv(gain))));
    CHECK(mat_equal(mat_star(m), m));
  }
  SUBCASE("hub row of the mu4 example") {
    const auto g = demos::t_graph();
    const auto m = adjacency(g);
    int ones = 0, eyes = 0;
    for (int j = 1; j < 9; ++j) {
      const auto& entry = m.at(0, j);
      if (ga_equal(entry, GAElement::basis(identity(mu4)))) ++ones;
      if (ga_equal(entry, GAElement::basis(make_exponent(mu4, 1)))) ++eyes;
    }
    CHECK(ones == 4);
    CHECK(eyes == 4);
  }
  SUBCASE("star invariance on random graphs") {
    testing::Rng rng(37);
    for (const Group& g : {Group::dihedral(8), Group::symmetric(3), Group::roots_of_unity(4)})
      for (int t = 0; t < 30; ++t) {
        const auto graph = testing::random_graph(rng, g, testing::pick(rng, 2, 7));
        const auto m = adjacency(graph);
        CHECK(mat_equal(mat_star(m), m));
      }
  }
  SUBCASE("U(H) graphs have no CG adjacency") {
    CHECK_THROWS_AS(adjacency(demos::quat_graph()), UnsupportedError);
  }
}

TEST_CASE("walk gains") {
  const auto g = demos::t_graph();
  CHECK(walk_gain(g, {}).is_identity());
  CHECK(walk_gain(g, {"v1"}).is_identity());
  CHECK(walk_gain(g, {"v1", "v2", "v1"}).is_identity());
  // v0 -> v2 has gain i, v2 -> v0 has gain -i
  CHECK(walk_gain(g, {"v0", "v2"}) == make_exponent(g.group(), 1));
  CHECK_THROWS_AS(walk_gain(g, {"v1", "v4"}), Error);

  // triangle with third gain forced to (gh)^-1 closes to 1_G
  const Group d8 = Group::dihedral(8);
  GainGraph tri(d8, {"a", "b", "c"});
  const auto x = make_dihedral(d8, 1, false);
  const auto y = make_dihedral(d8, 0, true);
  tri.add_edge("a", "b", x);
  tri.add_edge("b", "c", y);
  tri.add_edge("c", "a", inv(mul(x, y)));
  CHECK(walk_gain(tri, {"a", "b", "c", "a"}).is_identity());
}

TEST_CASE("balance") {
  const Group mu4 = Group::roots_of_unity(4);
  SUBCASE("trees are balanced") {
    GainGraph g(mu4, {"a", "b", "c", "d"});
    g.add_edge("a", "b", make_exponent(mu4, 1));
    g.add_edge("b", "c", make_exponent(mu4, 2));
    g.add_edge("b", "d", make_exponent(mu4, 3));
    CHECK(is_balanced(g));
  }
  SUBCASE("trivial gains are balanced") {
    testing::Rng rng(41);
    auto g = testing::random_graph(rng, mu4, 6, 0.6);
    GainGraph trivial(mu4, g.vertices());
    for (const auto& [u, v, gain] : g.edges()) trivial.add_edge(u, v, identity(mu4));
    CHECK(is_balanced(trivial));
  }
  SUBCASE("4-cycle with one gain i is unbalanced") {
    GainGraph g(mu4, {"a", "b", "c", "d"});
    g.add_edge("a", "b", make_exponent(mu4, 1));
    g.add_edge("b", "c", identity(mu4));
    g.add_edge("c", "d", identity(mu4));
    g.add_edge("d", "a", identity(mu4));
    CHECK_FALSE(is_balanced(g));
    CHECK(walk_gain(g, {"a", "b", "c", "d", "a"}) == make_exponent(mu4, 1));
  }
  SUBCASE("balance agrees with switching equivalence to trivial gains") {
    testing::Rng rng(43);
    for (const Group& g : {Group::roots_of_unity(4), Group::dihedral(8)}) {
      for (int t = 0; t < 12; ++t) {
        const int n = testing::pick(rng, 2, 8);
        auto graph = testing::random_graph(rng, g, n, 0.5);
        GainGraph trivial(g, graph.vertices());
        for (const auto& [u, v, gain] : graph.edges())
          trivial.add_edge(u, v, identity(g));
        // restrict the relabeling to the identity question: compare balance
        // against a switching-equivalence witness on the same labeling
        const auto witness = switching_isomorphic(graph, trivial);
        CHECK(is_balanced(graph) == witness.has_value());
      }
    }
  }
}

TEST_CASE("switching isomorphism") {
  SUBCASE("reflexive with the identity witness") {
    const auto g = demos::t_graph();
    const auto w = switching_isomorphic(g, g);
    REQUIRE(w.has_value());
    // a valid witness maps gains correctly; the first found need not be the
    // identity map, so verify the defining identity instead
    for (const auto& [u, v, gain] : g.edges()) {
      const auto lhs = g.gain(g.index_of(w->phi.at(g.label(u))),
                              g.index_of(w->phi.at(g.label(v))));
      REQUIRE(lhs.has_value());
      CHECK(*lhs == mul(mul(inv(w->f.at(g.label(u))), gain), w->f.at(g.label(v))));
    }
  }
  SUBCASE("gauge plus relabeling is detected") {
    testing::Rng rng(47);
    for (const Group& g : {Group::roots_of_unity(4), Group::dihedral(8), Group::symmetric(3)}) {
      for (int t = 0; t < 6; ++t) {
        const auto graph = testing::random_graph(rng, g, testing::pick(rng, 3, 7), 0.5);
        const auto twisted = testing::random_gauge_permute(rng, graph);
        const auto w = switching_isomorphic(graph, twisted);
        REQUIRE(w.has_value());
        for (const auto& [u, v, gain] : graph.edges()) {
          const auto lhs = twisted.gain(twisted.index_of(w->phi.at(graph.label(u))),
                                        twisted.index_of(w->phi.at(graph.label(v))));
          REQUIRE(lhs.has_value());
          CHECK(*lhs == mul(mul(inv(w->f.at(graph.label(u))), gain), w->f.at(graph.label(v))));
        }
        // composing the witness closes the loop: the gauged graph carries the
        // target's gains verbatim
        const auto applied = apply_gauge(graph, w->f, w->phi);
        for (const auto& [u, v, gain] : applied.edges()) {
          const auto target = twisted.gain(twisted.index_of(applied.label(u)),
                                           twisted.index_of(applied.label(v)));
          REQUIRE(target.has_value());
          CHECK(*target == gain);
        }
        CHECK(switching_isomorphic(applied, twisted).has_value());
      }
    }
  }
  SUBCASE("the mu4 example pair is not switching isomorphic") {
    CHECK_FALSE(switching_isomorphic(demos::t_graph(), demos::t_switched()).has_value());
  }
  SUBCASE("U(H) pairs are unsupported") {
    CHECK_THROWS_AS(switching_isomorphic(demos::quat_graph(), demos::quat_switched()),
                    UnsupportedError);
  }
  SUBCASE("the 12-vertex cap is enforced") {
    const Group c2 = Group::cyclic(2);
    GainGraph big(c2, testing::numbered_labels("x", 13));
    CHECK_THROWS_AS(switching_isomorphic(big, big), UnsupportedError);
  }
}

TEST_CASE("multiply_gain") {
  const auto g1 = demos::s4k_psi1();
  const Group s4 = g1.group();
  SUBCASE("left identity changes nothing") {
    CHECK(multiply_gain(g1, "v1", "v7", identity(s4)) == g1);
  }
  SUBCASE("kernel multiplication preserves the represented adjacency") {
    const auto rep = sign_rep(s4);
    const auto g2 = multiply_gain(g1, "v1", "v7", parse_element(s4, "(1 2)(3 4)"));
    CHECK(max_abs(fourier(rep, adjacency(g1)) - fourier(rep, adjacency(g2))) == 0.0);
    CHECK(g2 == demos::s4k_psi2());
  }
  SUBCASE("missing edge is an error") {
    CHECK_THROWS_AS(multiply_gain(g1, "v1", "v5", identity(s4)), Error);
  }
  SUBCASE("reverse orientation picks up the inverse") {
    const auto left = parse_element(s4, "(1 2 3)");
    const auto h = multiply_gain(g1, "v4", "v3", left);
    CHECK(*h.gain(h.index_of("v4"), h.index_of("v3")) ==
          mul(left, *g1.gain(g1.index_of("v4"), g1.index_of("v3"))));
  }
}

TEST_CASE("graph construction guards") {
  const Group mu4 = Group::roots_of_unity(4);
  GainGraph g(mu4, {"a", "b"});
  CHECK_THROWS_AS(g.add_edge("a", "a", identity(mu4)), Error);  // loop
  g.add_edge("a", "b", identity(mu4));
  CHECK_THROWS_AS(g.add_edge("b", "a", identity(mu4)), Error);  // multi-edge
  CHECK_THROWS_AS(g.index_of("zz"), Error);
  CHECK_THROWS_AS(GainGraph(mu4, {"a", "a"}), Error);  // duplicate label
  CHECK_THROWS_AS(g.add_edge("a", "b", identity(Group::cyclic(3))), Error);
}

TEST_CASE("file round trips") {
  SUBCASE("every demo graph round-trips exactly") {
    for (const auto& g : {demos::t_graph(), demos::t_switched(), demos::s4_graph(),
                          demos::s4k_psi1(), demos::d8_graph(), demos::quat_graph(),
                          demos::quat_switched()}) {
      CHECK(parse_graph(format_graph(g)) == g);
      CHECK(format_graph(parse_graph(format_graph(g))) == format_graph(g));
    }
  }
  SUBCASE("partition round trip") {
    const auto p = demos::d8_partition();
    const auto q = parse_partition(format_partition(p));
    CHECK(p.cells == q.cells);
  }
  SUBCASE("parse failures name the problem") {
    CHECK_THROWS_AS(parse_graph("not json"), Error);
    CHECK_THROWS_AS(parse_graph("{}"), Error);
    CHECK_THROWS_AS(parse_graph(R"({"group":{"kind":"nope"},"vertices":[],"edges":[]})"),
                    Error);
    CHECK_THROWS_AS(load_graph("/nonexistent/file.json"), Error);
    // wrong JSON types surface as Error, not library exceptions
    CHECK_THROWS_AS(parse_graph(R"({"group":{"kind":"cyclic","n":"x"},"vertices":[],"edges":[]})"),
                    Error);
    CHECK_THROWS_AS(parse_graph(R"({"group":{"kind":"cyclic","n":3},"vertices":7,"edges":[]})"),
                    Error);
    CHECK_THROWS_AS(parse_partition(R"({"cells": 3})"), Error);
  }
}

TEST_CASE("partition validation") {
  const auto g = demos::d8_graph();
  CHECK_THROWS_AS(resolve_partition(g, Partition{{{"v1"}}}), Error);  // missing vertices
  CHECK_THROWS_AS(
      resolve_partition(g, Partition{{{"v1", "v1"}, {"v2", "v3", "v4", "v5", "v6", "v7", "v8"}}}),
      Error);  // duplicate
  Partition with_empty{{{}, {"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"}}};
  CHECK(resolve_partition(g, with_empty).size() == 2);  // C0 may be empty
  Partition empty_late{{{"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"}, {}}};
  CHECK_THROWS_AS(resolve_partition(g, empty_late), Error);
}

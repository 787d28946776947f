#include <doctest.h>

#include "gainsw/demos.hpp"
#include "gainsw/quaternions.hpp"
#include "gainsw/spectra.hpp"
#include "test_support.hpp"

using namespace gainsw;

TEST_CASE("hermitian_eigs") {
  SUBCASE("zero matrix") {
    const auto s = hermitian_eigs(Eigen::MatrixXcd::Zero(3, 3));
    for (double v : s.eigenvalues) CHECK(v == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("triangle with trivial gains under the trivial representation") {
    const Group c2 = Group::cyclic(2);
    GainGraph tri(c2, {"a", "b", "c"});
    tri.add_edge("a", "b", identity(c2));
    tri.add_edge("b", "c", identity(c2));
    tri.add_edge("a", "c", identity(c2));
    const auto s = hermitian_eigs(fourier(trivial_rep(c2), adjacency(tri)));
    REQUIRE(s.size() == 3);
    CHECK(s.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(s.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(s.eigenvalues[2] == doctest::Approx(2.0).epsilon(1e-9));
  }
  SUBCASE("2x2 with gain i: the characteristic equation gives +-1") {
    Eigen::MatrixXcd m(2, 2);
    m << 0.0, cplx(0, 1), cplx(0, -1), 0.0;
    const auto s = hermitian_eigs(m);
    REQUIRE(s.size() == 2);
    CHECK(s.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(s.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("non-Hermitian input is rejected") {
    Eigen::MatrixXcd m(2, 2);
    m << 0, 1, 2, 0;
    CHECK_THROWS_AS(hermitian_eigs(m), Error);
  }
}

TEST_CASE("char_poly") {
  SUBCASE("identity") {
    const auto p = char_poly(Eigen::MatrixXcd::Identity(2, 2));
    REQUIRE(p.degree() == 2);
    CHECK(charpoly_coeff(p, 2) == doctest::Approx(1.0));
    CHECK(charpoly_coeff(p, 1) == doctest::Approx(-2.0));
    CHECK(charpoly_coeff(p, 0) == doctest::Approx(1.0));
    CHECK(format_charpoly(p) == "x^2 - 2x + 1");
  }
  SUBCASE("D8 example polynomial") {
    const auto g = demos::d8_graph();
    const auto p = char_poly(fourier(dihedral2_rep(g.group()), adjacency(g)));
    CHECK(format_charpoly(p) == demos::d8_charpoly);
  }
  SUBCASE("quaternion example polynomial is covered in test_quaternions") {}
  SUBCASE("rendering") {
    CHECK(format_charpoly(CharPoly{{0.0, 0.0, 1.0}}) == "x^2");
    CHECK(format_charpoly(CharPoly{{-4.0, 0.0, 1.0}}) == "x^2 - 4");
    CHECK(format_charpoly(CharPoly{{0.0, 2.0, 1.0}}) == "x^2 + 2x");
    CHECK(format_charpoly(CharPoly{{1.0}}) == "1");
  }
  SUBCASE("eigenvalues reconstruct the coefficients") {
    for (const auto& m : {fourier(dihedral2_rep(Group::dihedral(8)), adjacency(demos::d8_graph())),
                          fourier(permutation_rep(Group::symmetric(4)), adjacency(demos::s4_graph())),
                          complex_adjoint(quat_adjacency(demos::quat_graph()))}) {
      const auto p = char_poly(m);
      const auto s = hermitian_eigs(m);
      std::vector<double> coeffs{1.0};  // expand prod (x - lambda_i)
      for (double lambda : s.eigenvalues) {
        std::vector<double> next(coeffs.size() + 1, 0.0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
          next[i + 1] += coeffs[i];
          next[i] -= lambda * coeffs[i];
        }
        coeffs = std::move(next);
      }
      double scale = 1.0;
      for (double c : p.coeffs) scale = std::max(scale, std::abs(c));
      for (int k = 0; k <= p.degree(); ++k)
        CHECK(std::abs(coeffs[static_cast<std::size_t>(k)] - charpoly_coeff(p, k)) <=
              1e-6 * scale);
    }
  }
}

TEST_CASE("pi_cospectral") {
  const auto g = demos::s4_graph();
  const auto sw = demos::s4_switched();
  CHECK(pi_cospectral(g, g, sign_rep(g.group())));
  CHECK(pi_cospectral(g, sw, permutation_rep(g.group())));
  CHECK_FALSE(pi_cospectral(g, sw, sign_rep(g.group())));

  const auto d8g = demos::d8_graph();
  CHECK(pi_cospectral(d8g, demos::d8_switched(), dihedral2_rep(d8g.group())));
}

TEST_CASE("g_cospectral") {
  SUBCASE("the mu4 example pair, regular mode") {
    CHECK(g_cospectral(demos::t_graph(), demos::t_switched(), GMode::Regular));
  }
  SUBCASE("a graph against itself, traces up to 10") {
    const auto g = demos::t_graph();
    CHECK(g_cospectral(g, g, GMode::Traces, 10));
  }
  SUBCASE("P2 vs the edgeless graph on 2 vertices differ at h = 2") {
    const Group c2 = Group::cyclic(2);
    GainGraph p2(c2, {"a", "b"});
    p2.add_edge("a", "b", identity(c2));
    GainGraph empty(c2, {"a", "b"});
    CHECK_FALSE(g_cospectral(p2, empty, GMode::Regular));
    CHECK_FALSE(g_cospectral(p2, empty, GMode::Traces, 4));
  }
  SUBCASE("traces mode agrees with regular mode on the example pairs") {
    CHECK(g_cospectral(demos::t_graph(), demos::t_switched(), GMode::Traces, 8));
    CHECK_FALSE(g_cospectral(demos::s4_graph(), demos::s4_switched(), GMode::Traces, 8));
  }
  SUBCASE("switching-isomorphic graphs are G-cospectral") {
    testing::Rng rng(71);
    for (const Group& G : {Group::roots_of_unity(4), Group::dihedral(8)}) {
      for (int t = 0; t < 5; ++t) {
        const auto g = testing::random_graph(rng, G, testing::pick(rng, 3, 6), 0.5);
        const auto twisted = testing::random_gauge_permute(rng, g);
        CHECK(g_cospectral(g, twisted, GMode::Regular));
      }
    }
  }
  SUBCASE("regular-mode cospectrality implies cospectrality for every irreducible") {
    for (const Group& G : {Group::roots_of_unity(4), Group::dihedral(8)}) {
      const auto pair = G.kind() == GroupKind::Dihedral
                            ? std::make_pair(demos::d8_graph(), demos::d8_switched())
                            : std::make_pair(demos::t_graph(), demos::t_switched());
      if (g_cospectral(pair.first, pair.second, GMode::Regular))
        for (const auto& rep : complete_system(G))
          CHECK(pi_cospectral(pair.first, pair.second, rep));
    }
  }
  SUBCASE("infinite groups are rejected") {
    CHECK_THROWS_AS(g_cospectral(demos::quat_graph(), demos::quat_switched(), GMode::Regular),
                    UnsupportedError);
  }
}

TEST_CASE("spectra_equal tolerances") {
  Spectrum a{{0.0, 1.0}}, b{{0.0, 1.0 + 5e-8}}, c{{0.0, 1.0 + 5e-6}};
  CHECK(spectra_equal(a, b));
  CHECK_FALSE(spectra_equal(a, c));
  CHECK_FALSE(spectra_equal(a, Spectrum{{0.0}}));
}

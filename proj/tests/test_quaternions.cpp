#include <doctest.h>

#include <random>

#include "gainsw/demos.hpp"
#include "gainsw/quaternions.hpp"
#include "test_support.hpp"

using namespace gainsw;

namespace {

Quaternion random_quat(testing::Rng& rng, double span = 2.0) {
  std::uniform_real_distribution<> d(-span, span);
  return {d(rng), d(rng), d(rng), d(rng)};
}

Quaternion random_unit(testing::Rng& rng) {
  Quaternion q = random_quat(rng);
  while (q.norm() < 1e-3) q = random_quat(rng);
  return q * (1.0 / q.norm());
}

QuatMatrix random_qm(testing::Rng& rng, int n) {
  QuatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = random_quat(rng);
  return m;
}

QuatMatrix random_hermitian(testing::Rng& rng, int n) {
  QuatMatrix m(n, n);
  std::uniform_real_distribution<> d(-2.0, 2.0);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = Quaternion::real(d(rng));
    for (int j = i + 1; j < n; ++j) {
      m.at(i, j) = random_quat(rng);
      m.at(j, i) = m.at(i, j).conj();
    }
  }
  return m;
}

}  // namespace

TEST_CASE("quaternion scalar algebra") {
  CHECK(q_mul(Quaternion::unit_j(), Quaternion::unit_i()) == -Quaternion::unit_k());
  CHECK(q_mul(Quaternion::unit_i(), Quaternion::unit_j()) == Quaternion::unit_k());
  CHECK(q_close(q_inv(Quaternion::unit_i()), -Quaternion::unit_i(), 1e-15));
  const double h = std::sqrt(2.0) / 2.0;
  CHECK(q_norm({h, 0, h, 0}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(q_inv(Quaternion::zero()), Error);

  testing::Rng rng(73);
  for (int t = 0; t < 50; ++t) {
    const auto q1 = random_quat(rng), q2 = random_quat(rng);
    CHECK(q_norm(q1 * q2) == doctest::Approx(q_norm(q1) * q_norm(q2)).epsilon(1e-9));
    CHECK(q_close(q1.conj() * q1, Quaternion::real(q1.norm_sq()), 1e-9));
  }
}

TEST_CASE("canonical similarity class") {
  CHECK(canonical_class(Quaternion::real(-2.5)) == cplx(-2.5, 0));
  CHECK(canonical_class(Quaternion::unit_j()) == cplx(0, 1));
  CHECK(std::abs(canonical_class({1, 1, 1, 1}) - cplx(1, std::sqrt(3.0))) <= 1e-12);

  testing::Rng rng(79);
  for (int t = 0; t < 30; ++t) {
    const auto q = random_quat(rng);
    const auto h = random_unit(rng);
    const auto conjugated = q_inv(h) * q * h;
    CHECK(std::abs(canonical_class(conjugated) - canonical_class(q)) <= 1e-9);
  }
}

TEST_CASE("complex adjoint") {
  SUBCASE("scalar images match the degree-2 representation") {
    QuatMatrix m(1, 1);
    m.at(0, 0) = Quaternion::unit_i();
    Eigen::MatrixXcd want(2, 2);
    want << cplx(0, 1), 0, 0, cplx(0, -1);
    CHECK(max_abs(complex_adjoint(m) - want) == 0.0);
    m.at(0, 0) = Quaternion::unit_j();
    want << 0, 1, -1, 0;
    CHECK(max_abs(complex_adjoint(m) - want) == 0.0);
    m.at(0, 0) = Quaternion::unit_k();
    want << 0, cplx(0, 1), cplx(0, 1), 0;
    CHECK(max_abs(complex_adjoint(m) - want) == 0.0);
  }
  SUBCASE("identity maps to the identity") {
    CHECK(max_abs(complex_adjoint(QuatMatrix::identity(2)) -
                  Eigen::MatrixXcd::Identity(4, 4)) == 0.0);
  }
  SUBCASE("ring-map properties on 50 random 3x3 matrices") {
    testing::Rng rng(83);
    for (int t = 0; t < 50; ++t) {
      const auto a = random_qm(rng, 3);
      const auto b = random_qm(rng, 3);
      CHECK(max_abs(complex_adjoint(qm_add(a, b)) -
                    (complex_adjoint(a) + complex_adjoint(b))) <= 1e-9);
      CHECK(max_abs(complex_adjoint(qm_mul(a, b)) -
                    complex_adjoint(a) * complex_adjoint(b)) <= 1e-9);
      CHECK(max_abs(complex_adjoint(a.conj_transpose()) -
                    complex_adjoint(a).adjoint()) <= 1e-9);
      const Eigen::MatrixXcd fa = complex_adjoint(a);
      if (std::abs(fa.determinant()) > 1e-6) {
        // f(A)^-1 = f(A^-1): invert through the adjoint and map back
        const Eigen::MatrixXcd inv_fa = fa.inverse();
        QuatMatrix a_inv(3, 3);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            const cplx p1 = inv_fa(i, j);
            const cplx p2 = inv_fa(i, 3 + j);
            a_inv.at(i, j) = {p1.real(), p1.imag(), p2.real(), p2.imag()};
          }
        CHECK(qm_close(qm_mul(a, a_inv), QuatMatrix::identity(3), 1e-9));
        CHECK(max_abs(complex_adjoint(a_inv) - inv_fa) <= 1e-9);
      }
    }
  }
}

TEST_CASE("right spectrum") {
  SUBCASE("zero matrix") {
    const auto s = right_spectrum(QuatMatrix(2, 2));
    REQUIRE(s.size() == 2);
    CHECK(s.eigenvalues[0] == doctest::Approx(0.0));
    CHECK(s.eigenvalues[1] == doctest::Approx(0.0));
  }
  SUBCASE("single j-edge has right spectrum {-1, 1}") {
    QuatMatrix m(2, 2);
    m.at(0, 1) = Quaternion::unit_j();
    m.at(1, 0) = Quaternion::unit_j().conj();
    const auto s = right_spectrum(m);
    REQUIRE(s.size() == 2);
    CHECK(s.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(s.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("adjoint eigenvalues pair up on 20 random Hermitian matrices") {
    testing::Rng rng(89);
    for (int t = 0; t < 20; ++t) {
      const auto m = random_hermitian(rng, testing::pick(rng, 2, 5));
      const auto doubled = hermitian_eigs(complex_adjoint(m)).eigenvalues;
      REQUIRE(doubled.size() % 2 == 0);
      for (std::size_t i = 0; i + 1 < doubled.size(); i += 2)
        CHECK(std::abs(doubled[i] - doubled[i + 1]) <= 1e-7);
      CHECK(right_spectrum(m).size() == doubled.size() / 2);
    }
  }
  SUBCASE("non-Hermitian input is rejected") {
    QuatMatrix m(2, 2);
    m.at(0, 1) = Quaternion::unit_j();
    CHECK_THROWS_AS(right_spectrum(m), Error);
  }
}

TEST_CASE("pi_H and the shuffle identity") {
  SUBCASE("1x1 blocks need no shuffle") {
    QuatMatrix m(1, 1);
    m.at(0, 0) = {0.5, 0.5, 0.5, 0.5};
    CHECK(max_abs(pi_h_matrix(m) - complex_adjoint(m)) == 0.0);
    CHECK(shuffle_identity(m));
  }
  SUBCASE("random 2x2 and 3x3 matrices") {
    testing::Rng rng(97);
    for (int t = 0; t < 20; ++t) CHECK(shuffle_identity(random_qm(rng, testing::pick(rng, 2, 3))));
  }
  SUBCASE("the example adjacency shuffles and is isospectral both ways") {
    const auto a = quat_adjacency(demos::quat_graph());
    CHECK(shuffle_identity(a));
    const auto s1 = hermitian_eigs(pi_h_matrix(a));
    const auto s2 = hermitian_eigs(complex_adjoint(a));
    CHECK(spectra_equal(s1, s2));
  }
  SUBCASE("pi_H as a representation is unitary on random unit quaternions") {
    testing::Rng rng(101);
    const auto rep = pi_h_rep();
    for (int t = 0; t < 20; ++t) {
      const auto q = make_unit_quaternion(random_unit(rng));
      const auto img = rep.image(q);
      CHECK(max_abs(img * img.adjoint() - Eigen::MatrixXcd::Identity(2, 2)) <= 1e-9);
      const auto q2 = make_unit_quaternion(random_unit(rng));
      CHECK(max_abs(rep.image(mul(q, q2)) - img * rep.image(q2)) <= 1e-9);
    }
  }
}

TEST_CASE("quaternionic GM switching") {
  const auto g = demos::quat_graph();
  const auto alpha = demos::quat_partition();
  SUBCASE("gain sums in H") {
    CHECK(psi_h_sum(g, "v7", alpha.cells[1]).is_zero(1e-9));
    CHECK(psi_h_sum(g, "v1", alpha.cells[1]).is_zero(1e-9));
    CHECK(q_close(psi_h_sum(g, "v8", alpha.cells[1]), Quaternion::real(3.0), 1e-12));
  }
  SUBCASE("the example plan") {
    const auto result = check_quat_gm(g, alpha);
    REQUIRE(result);
    const auto* act7 = result.plan->action(g.index_of("v7"), 1);
    REQUIRE(act7 != nullptr);
    CHECK(act7->kind == CellAction::Kind::CentralMultiply);
    const auto* act8 = result.plan->action(g.index_of("v8"), 1);
    REQUIRE(act8 != nullptr);
    CHECK(act8->kind == CellAction::Kind::Swap);
    CHECK(act8->g1->is_identity());
    CHECK_FALSE(act8->g2.has_value());
  }
  SUBCASE("switch reproduces the expected graph and is right cospectral") {
    const auto result = check_quat_gm(g, alpha);
    REQUIRE(result);
    const auto switched = apply_quat_switch(g, alpha, *result.plan);
    CHECK(switched == demos::quat_switched());
    CHECK(spectra_equal(right_spectrum(quat_adjacency(g)),
                        right_spectrum(quat_adjacency(switched))));
    CHECK(verify_quat_conjugation(g, alpha, *result.plan));
  }
  SUBCASE("negation twice restores the graph exactly") {
    const auto result = check_quat_gm(g, alpha);
    REQUIRE(result);
    const auto once = apply_quat_switch(g, alpha, *result.plan);
    CHECK(apply_quat_switch(once, alpha, *result.plan) == g);
  }
  SUBCASE("all-singleton edgeless partition is all skips") {
    const Group uh = Group::unit_quaternions();
    GainGraph empty(uh, {"a", "b"});
    const auto result = check_quat_gm(empty, Partition{{{"a"}, {"b"}}});
    REQUIRE(result);
    for (const auto& [key, act] : result.plan->actions)
      CHECK(act.kind == CellAction::Kind::Skip);
  }
  SUBCASE("example polynomials") {
    const auto p1 = char_poly(complex_adjoint(quat_adjacency(g)));
    const auto p2 = char_poly(pi_h_matrix(quat_adjacency(demos::quat_switched())));
    CHECK(format_charpoly(p1) == demos::quat_charpoly);
    CHECK(format_charpoly(p2) == demos::quat_charpoly);
  }
}

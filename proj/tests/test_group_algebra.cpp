#include <doctest.h>

#include "gainsw/group_algebra.hpp"
#include "test_support.hpp"

using namespace gainsw;

TEST_CASE("vector space operations") {
  const Group c2 = Group::cyclic(2);
  const auto one = GAElement::basis(identity(c2));
  const auto g = GAElement::basis(make_exponent(c2, 1));

  CHECK(ga_add(one, g).support_size() == 2);
  CHECK(ga_scale(0.0, ga_add(one, g)).is_zero());

  const Group mu4 = Group::roots_of_unity(4);
  GAElement psi(mu4);
  psi.add_term(identity(mu4), 4.0);
  psi.add_term(make_exponent(mu4, 1), 4.0);
  CHECK(psi.support_size() == 2);
  CHECK(format_ga(psi) == "4*1 + 4*i");
}

TEST_CASE("convolution product") {
  const Group c2 = Group::cyclic(2);
  const auto one = GAElement::basis(identity(c2));
  const auto g = GAElement::basis(make_exponent(c2, 1));
  // (1 + g)(1 - g) = 1 - g^2 + g - g = 0 since g^2 = 1
  CHECK(ga_mul(ga_add(one, g), ga_sub(one, g)).is_zero());

  const Group s4 = Group::symmetric(4);
  GAElement f(s4);
  f.add_term(parse_element(s4, "(1 2)"), 1.0);
  f.add_term(parse_element(s4, "(3 4)"), 1.0);
  // Hand-expanded: (12)(12) = e, (12)(34) = (34)(12) = (12)(34), (34)(34) = e.
  GAElement expect(s4);
  expect.add_term(identity(s4), 2.0);
  expect.add_term(parse_element(s4, "(1 2)(3 4)"), 2.0);
  CHECK(ga_equal(ga_mul(f, f), expect));

  testing::Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const auto h = testing::random_ga(rng, s4, 3);
    CHECK(ga_equal(ga_mul(GAElement::basis(identity(s4)), h), h));
  }
}

TEST_CASE("star involution") {
  const Group c3 = Group::cyclic(3);
  CHECK(ga_equal(ga_star(GAElement::basis(identity(c3), cplx(2, 5))),
                 GAElement::basis(identity(c3), cplx(2, -5))));
  // coefficient i on the generator g maps to -i on g^2
  CHECK(ga_equal(ga_star(GAElement::basis(make_exponent(c3, 1), cplx(0, 1))),
                 GAElement::basis(make_exponent(c3, 2), cplx(0, -1))));

  testing::Rng rng(11);
  for (const Group& g : {Group::dihedral(8), Group::symmetric(3)}) {
    for (int t = 0; t < 30; ++t) {
      const auto f = testing::random_ga(rng, g, 4);
      const auto h = testing::random_ga(rng, g, 4);
      CHECK(ga_equal(ga_star(ga_star(f)), f));
      CHECK(ga_equal(ga_star(ga_mul(f, h)), ga_mul(ga_star(h), ga_star(f))));
    }
  }
}

TEST_CASE("associativity on random triples") {
  testing::Rng rng(13);
  for (const Group& g : {Group::dihedral(8), Group::symmetric(3)}) {
    for (int t = 0; t < 30; ++t) {
      const auto a = testing::random_ga(rng, g, 4);
      const auto b = testing::random_ga(rng, g, 4);
      const auto c = testing::random_ga(rng, g, 4);
      CHECK(ga_equal(ga_mul(ga_mul(a, b), c), ga_mul(a, ga_mul(b, c))));
    }
  }
}

TEST_CASE("class-function map") {
  SUBCASE("abelian groups: coefficientwise identity") {
    const Group mu4 = Group::roots_of_unity(4);
    GAElement f(mu4);
    f.add_term(make_exponent(mu4, 1), cplx(2, 1));
    f.add_term(make_exponent(mu4, 3), -1.0);
    const auto mu = ga_mu(f);
    CHECK(mu.values().size() == 4);
    CHECK(mu.values().at(make_exponent(mu4, 1)) == cplx(2, 1));
    CHECK(mu.values().at(make_exponent(mu4, 3)) == cplx(-1, 0));
    CHECK(mu.values().at(identity(mu4)) == cplx(0, 0));
  }
  SUBCASE("transpositions of S4 collapse to one class") {
    const Group s4 = Group::symmetric(4);
    GAElement f(s4);
    f.add_term(parse_element(s4, "(1 2)"), 1.0);
    f.add_term(parse_element(s4, "(3 4)"), 1.0);
    const auto mu = ga_mu(f);
    // (3 4) is the canonically minimal transposition, so it keys the class
    CHECK(mu.values().at(parse_element(s4, "(3 4)")) == cplx(2, 0));
    int nonzero = 0;
    for (const auto& [rep, v] : mu.values())
      if (v != cplx(0, 0)) ++nonzero;
    CHECK(nonzero == 1);
  }
  SUBCASE("D8: 1 + a + a^3 maps to 1 on {1} and 2 on {a, a^3}") {
    const Group d8 = Group::dihedral(8);
    GAElement f(d8);
    f.add_term(identity(d8), 1.0);
    f.add_term(make_dihedral(d8, 1, false), 1.0);
    f.add_term(make_dihedral(d8, 3, false), 1.0);
    const auto mu = ga_mu(f);
    CHECK(mu.values().at(identity(d8)) == cplx(1, 0));
    CHECK(mu.values().at(make_dihedral(d8, 1, false)) == cplx(2, 0));
    CHECK(mu.values().at(make_dihedral(d8, 2, false)) == cplx(0, 0));
  }
  SUBCASE("mu is multiplicative over abelian groups") {
    testing::Rng rng(17);
    const Group mu4 = Group::roots_of_unity(4);
    for (int t = 0; t < 30; ++t) {
      const auto f = testing::random_ga(rng, mu4, 3);
      const auto h = testing::random_ga(rng, mu4, 3);
      const auto lhs = ga_mu(ga_mul(f, h));
      // pointwise product under the singleton-class identification
      std::map<GroupElement, cplx> vals;
      const auto mf = ga_mu(f).values();
      const auto mh = ga_mu(h).values();
      for (const auto& x : elements(mu4)) {
        cplx sum = 0.0;
        for (const auto& y : elements(mu4)) sum += mf.at(y) * mh.at(mul(inv(y), x));
        vals.emplace(x, sum);
      }
      CHECK(class_function_equal(lhs, ClassFunction(mu4, vals)));
    }
  }
}

TEST_CASE("group mismatch is an error") {
  const auto f = GAElement::basis(identity(Group::cyclic(2)));
  const auto h = GAElement::basis(identity(Group::cyclic(3)));
  CHECK_THROWS_AS(ga_add(f, h), Error);
  CHECK_THROWS_AS(ga_mul(f, h), Error);
}

TEST_CASE("no group algebra over U(H)") {
  CHECK_THROWS_AS(GAElement(Group::unit_quaternions()), UnsupportedError);
}

#include <catch_amalgamated.hpp>

#include <set>

#include "egroupoid/carrier.hpp"
#include "fixtures.hpp"
#include "gen.hpp"
#include "oracles.hpp"

using namespace egroupoid;
using namespace fixtures;

namespace {

  template <typename C>
  void check_laws_exhaustively(C const& c, int L) {
    auto const els = elements(c, L);
    for (auto const& a : els) {
      REQUIRE(c.compose(a, c.compose(c.star(a), a)) == a);
      REQUIRE(c.star(c.star(a)) == a);
      for (auto const& b : els) {
        REQUIRE(c.star(c.compose(a, b)) == c.compose(c.star(b), c.star(a)));
        for (auto const& d : els) {
          REQUIRE(c.compose(c.compose(a, b), d) == c.compose(a, c.compose(b, d)));
        }
      }
    }
  }

  template <typename C>
  void check_order_exhaustively(C const& c, int L) {
    auto const els = elements(c, L);
    for (auto const& g : els) {
      REQUIRE(natural_leq(c, g, g));
      for (auto const& h : els) {
        bool const le = natural_leq(c, g, h);
        // the equivalent form g = g g* h
        REQUIRE(le == (g == c.compose(g, c.compose(c.star(g), h))));
        if (le && natural_leq(c, h, g)) {
          REQUIRE(g == h);
        }
        if (!le) {
          continue;
        }
        for (auto const& k : els) {
          if (natural_leq(c, h, k)) {
            REQUIRE(natural_leq(c, g, k));
          }
        }
      }
    }
  }

  template <typename C>
  void check_idempotents_commute(C const& c, int L) {
    auto const E = idempotents(c, L);
    for (auto const& e : E) {
      REQUIRE(c.is_idempotent(e));
      for (auto const& f : E) {
        REQUIRE(c.compose(e, f) == c.compose(f, e));
        REQUIRE(c.is_idempotent(c.compose(e, f)));
      }
    }
  }

  std::set<std::vector<std::uint32_t>> image_set(FiniteInverseSemigroup const& s) {
    std::set<std::vector<std::uint32_t>> out;
    for (std::uint32_t i = 0; i < s.size(); ++i) {
      out.insert(s.at(i).images());
    }
    return out;
  }

}  // namespace

TEST_CASE("partial bijections compose in operator order", "[core]") {
  auto a = pb(3, {{1, 2}, {2, 3}});
  auto b = pb(3, {{3, 1}, {2, 2}});
  auto ab = a * b;
  CHECK(ab(3) == 2u);
  CHECK(ab(2) == 3u);
  CHECK_FALSE(ab(1).has_value());
  CHECK(a.inverse().inverse() == a);
  CHECK(a.to_string() == "[1:2;2:3]");
  CHECK(pb(2, {}).to_string() == "[]");
  CHECK_THROWS_AS(pb(2, {{1, 1}, {1, 2}}), input_error);
  CHECK_THROWS_AS(pb(2, {{1, 2}, {2, 2}}), input_error);
  CHECK_THROWS_AS(pb(2, {{3, 1}}), input_error);
  CHECK_THROWS_AS(a * pb(2, {{1, 1}}), usage_error);
}

TEST_CASE("compose examples", "[core]") {
  auto id12 = PartialBijection::identity_on(2, {1, 2});
  CHECK(id12 * id12 == id12);

  auto c = chain();
  for (std::uint32_t n = 1; n <= 20; ++n) {
    CHECK(c.compose(ChainElement::symmetry(), ChainElement::e(n)) == ChainElement::e(n));
    CHECK(c.compose(ChainElement::e(n), ChainElement::symmetry()) == ChainElement::e(n));
  }
  CHECK(c.compose(ChainElement::symmetry(), ChainElement::symmetry()) == ChainElement::one());

  Bicyclic b;
  auto [M, N] = oracle::bicyclic_product(1, 0, 0, 1);
  CHECK(b.compose(B{1, 0}, B{0, 1}) == B{static_cast<std::uint32_t>(M), static_cast<std::uint32_t>(N)});
  CHECK(b.compose(B{1, 0}, B{0, 1}) == B{1, 1});
}

TEST_CASE("bicyclic product agrees with partial shifts", "[core][oracle]") {
  Bicyclic b;
  for (std::uint32_t m = 0; m <= 7; ++m) {
    for (std::uint32_t n = 0; n <= 7; ++n) {
      for (std::uint32_t k = 0; k <= 7; ++k) {
        for (std::uint32_t l = 0; l <= 7; ++l) {
          auto [M, N] = oracle::bicyclic_product(m, n, k, l);
          REQUIRE(b.compose(B{m, n}, B{k, l})
                  == B{static_cast<std::uint32_t>(M), static_cast<std::uint32_t>(N)});
        }
      }
    }
  }
}

TEST_CASE("polycyclic product agrees with word maps", "[core][oracle]") {
  for (unsigned n : {2u, 3u}) {
    Polycyclic p(n);
    auto const els = elements(p, n == 2 ? 2 : 1);
    for (auto const& a : els) {
      for (auto const& b : els) {
        auto to_pair = [](P const& x) -> oracle::WordPair {
          if (x.is_zero) {
            return std::nullopt;
          }
          return std::make_pair(x.mu, x.nu);
        };
        REQUIRE(to_pair(p.compose(a, b))
                == oracle::polycyclic_product(n, to_pair(a), to_pair(b)));
      }
    }
  }
}

TEST_CASE("star examples", "[core]") {
  auto c = chain();
  CHECK(c.star(ChainElement::symmetry()) == ChainElement::symmetry());
  CHECK(c.star(ChainElement::e(4)) == ChainElement::e(4));
  Bicyclic b;
  CHECK(b.star(B{2, 0}) == B{0, 2});
  CHECK(b.compose(B{2, 0}, b.compose(B{0, 2}, B{2, 0})) == B{2, 0});
  auto s = i3();
  for (std::uint32_t i = 0; i < s.size(); ++i) {
    CHECK(s.at(s.star(i)) == s.at(i).inverse());
  }
}

TEST_CASE("elements of different carriers do not compose", "[core]") {
  auto c1 = chain();
  auto c2 = chain();
  Element<ChainFamily> a(c1, ChainElement::symmetry());
  Element<ChainFamily> b(c2, ChainElement::one());
  CHECK_THROWS_AS(compose(a, b), usage_error);
  CHECK_THROWS_AS(natural_leq(a, b), usage_error);
  Element<ChainFamily> d(c1, ChainElement::e(2));
  CHECK(compose(a, d) == Element<ChainFamily>(c1, ChainElement::e(2)));
  CHECK(star(a).name() == "S");
}

TEST_CASE("generate_closure sizes match the symmetric inverse monoid count", "[core][oracle]") {
  CHECK(oracle::symmetric_inverse_monoid_size(2) == 7);
  CHECK(oracle::symmetric_inverse_monoid_size(3) == 34);
  auto s2 = i2();
  auto s3 = i3();
  CHECK(s2.size() == oracle::symmetric_inverse_monoid_size(2));
  CHECK(s3.size() == oracle::symmetric_inverse_monoid_size(3));
  CHECK(image_set(s2) == oracle::all_partial_injections(2));
  CHECK(image_set(s3) == oracle::all_partial_injections(3));

  std::vector<PartialBijection> g4{pb(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}),
                                   pb(4, {{1, 2}, {2, 1}, {3, 3}, {4, 4}}),
                                   PartialBijection::identity_on(4, {1, 2, 3})};
  auto s4 = generate_closure(g4, 1000);
  CHECK(s4.size() == oracle::symmetric_inverse_monoid_size(4));
  CHECK(image_set(s4) == oracle::all_partial_injections(4));
}

TEST_CASE("generate_closure edge cases", "[core]") {
  std::vector<PartialBijection> one{PartialBijection::identity_on(3, {1, 3})};
  CHECK(generate_closure(one, 10).size() == 1);

  std::vector<PartialBijection> gens{pb(3, {{1, 2}, {2, 3}, {3, 1}}),
                                     pb(3, {{1, 2}, {2, 1}, {3, 3}}),
                                     pb(3, {{1, 1}, {2, 2}})};
  try {
    generate_closure(gens, 10);
    FAIL("cap was not enforced");
  } catch (resource_error const& e) {
    CHECK(e.partial_size() > 10);
  }
  CHECK_THROWS_AS(generate_closure(std::vector<PartialBijection>{}, 10), input_error);
  std::vector<PartialBijection> mixed{pb(2, {{1, 1}}), pb(3, {{1, 1}})};
  CHECK_THROWS_AS(generate_closure(mixed, 10), input_error);
}

TEST_CASE("natural order examples", "[core]") {
  auto c = chain();
  for (std::uint32_t n = 1; n < 10; ++n) {
    CHECK(natural_leq(c, ChainElement::e(n), ChainElement::e(n + 1)));
    CHECK_FALSE(natural_leq(c, ChainElement::e(n + 1), ChainElement::e(n)));
    CHECK(natural_leq(c, ChainElement::e(n), ChainElement::symmetry()));
  }
  CHECK_FALSE(natural_leq(c, ChainElement::one(), ChainElement::symmetry()));

  Bicyclic b;
  for (std::uint32_t k = 0; k <= 10; ++k) {
    for (std::uint32_t n = 0; n <= 10; ++n) {
      // brute force: (k,k) = (n,n)(k,k)(k,k) evaluated through partial shifts
      auto [M1, N1] = oracle::bicyclic_product(n, n, k, k);
      auto [M2, N2] = oracle::bicyclic_product(M1, N1, k, k);
      bool const expected = M2 == static_cast<long>(k) && N2 == static_cast<long>(k);
      CHECK(natural_leq(b, B{k, k}, B{n, n}) == expected);
      CHECK(expected == (k >= n));
    }
  }
}

TEST_CASE("idempotents examples", "[core]") {
  CHECK(idempotents(chain(), 3)
        == std::vector{ChainElement::one(), ChainElement::e(1), ChainElement::e(2),
                       ChainElement::e(3)});
  CHECK(idempotents(pure_chain(), 2)
        == std::vector{ChainElement::one(), ChainElement::e(1), ChainElement::e(2)});
  Bicyclic b;
  std::vector<B> brute;
  for (std::uint32_t m = 0; m <= 2; ++m) {
    for (std::uint32_t n = 0; n <= 2; ++n) {
      auto [M, N] = oracle::bicyclic_product(m, n, m, n);
      if (M == m && N == n) {
        brute.push_back(B{m, n});
      }
    }
  }
  CHECK(idempotents(b, 2) == brute);
  CHECK(brute == std::vector{B{0, 0}, B{1, 1}, B{2, 2}});

  std::vector<PartialBijection> cyc{pb(3, {{1, 2}, {2, 3}, {3, 1}})};
  auto group = generate_closure(cyc, 10);
  CHECK(group.size() == 3);
  REQUIRE(idempotents(group, 0).size() == 1);
  CHECK(group.at(idempotents(group, 0)[0]) == PartialBijection::identity_on(3, {1, 2, 3}));

  Polycyclic p(2);
  auto E = idempotents(p, 2);
  CHECK(E.size() == 1 + 7);
  CHECK(E.front().is_zero);
}

TEST_CASE("inverse semigroup laws on finite closures", "[core][property]") {
  check_laws_exhaustively(i2(), 0);
  check_laws_exhaustively(i3(), 0);
  check_idempotents_commute(i3(), 0);
  check_order_exhaustively(i3(), 0);
}

TEST_CASE("inverse semigroup laws on the families", "[core][property]") {
  check_laws_exhaustively(chain(), 8);
  check_laws_exhaustively(pure_chain(), 8);
  check_laws_exhaustively(Bicyclic(), 4);
  check_laws_exhaustively(Polycyclic(2), 2);
  check_idempotents_commute(chain(), 20);
  check_idempotents_commute(Bicyclic(), 20);
  check_idempotents_commute(Polycyclic(2), 4);
  check_idempotents_commute(Polycyclic(3), 3);
  check_order_exhaustively(chain(), 10);
  check_order_exhaustively(Bicyclic(), 4);
  check_order_exhaustively(Polycyclic(2), 2);
}

TEST_CASE("random closures satisfy the laws", "[core][property]") {
  gen::Gen g(20261016);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<PartialBijection> gens{g.partial_bijection(4), g.partial_bijection(4)};
    auto s = generate_closure(gens, 500);
    REQUIRE(s.size() <= oracle::symmetric_inverse_monoid_size(4));
    auto const els = elements(s, 0);
    for (int k = 0; k < 400; ++k) {
      auto a = g.pick(els), b = g.pick(els), d = g.pick(els);
      REQUIRE(s.compose(s.compose(a, b), d) == s.compose(a, s.compose(b, d)));
      REQUIRE(s.star(s.compose(a, b)) == s.compose(s.star(b), s.star(a)));
      REQUIRE(s.at(s.compose(a, b)) == s.at(a) * s.at(b));
    }
    check_idempotents_commute(s, 0);
  }
}

TEST_CASE("names round-trip through parse", "[core]") {
  auto round = [](auto const& c, int L) {
    for (auto const& g : elements(c, L)) {
      auto back = c.parse(c.name(g));
      REQUIRE(back.has_value());
      REQUIRE(*back == g);
    }
  };
  round(chain(), 12);
  round(pure_chain(), 12);
  round(Bicyclic(), 6);
  round(Polycyclic(2), 2);
  round(Polycyclic(3), 2);
  round(i3(), 0);
  CHECK(chain().name(ChainElement::e(3)) == "e3");
  CHECK(Bicyclic().name(B{2, 5}) == "(2,5)");
  Polycyclic p(2);
  CHECK(p.name(P::zero()) == "0");
  CHECK(p.name(word_pair("", "12")) == "-|12");
  CHECK_FALSE(pure_chain().parse("S").has_value());
  CHECK_FALSE(chain().parse("e0").has_value());
  CHECK_FALSE(p.parse("13|1").has_value());
}

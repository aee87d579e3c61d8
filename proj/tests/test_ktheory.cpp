#include <catch_amalgamated.hpp>

#include "egroupoid/ktheory.hpp"
#include "oracles.hpp"

using namespace egroupoid;

namespace {

  int kind_of(ChainElement g) {
    switch (g.kind) {
      case ChainElement::Kind::one:
        return 0;
      case ChainElement::Kind::symmetry:
        return 1;
      default:
        return 2;
    }
  }

  Rational value(detail::Combination<detail::AKey> const& v, int n, int point) {
    Rational s = 0;
    for (auto const& [k, r] : v.terms) {
      s += r * oracle::a_point_value(n, point, kind_of(k), static_cast<int>(k.n));
    }
    return s;
  }

  Rational value(detail::Combination<detail::BKey> const& v, int n, int point) {
    Rational s = 0;
    for (auto const& [k, r] : v.terms) {
      int const a = k.first.kind == ChainElement::Kind::one ? 0 : static_cast<int>(k.first.n);
      s += r * oracle::b_point_value(n, point, a, kind_of(k.second));
    }
    return s;
  }

  // The point at which each projection is 1; every projection must be the
  // indicator of one point, and the points must be distinct and exhaust
  // the n + 2 characters of the stage.
  template <typename Stage>
  std::vector<int> supports(Stage const& s, int n, int eval_at) {
    std::vector<int> out;
    std::set<int>    seen;
    for (auto const& p : s.projections) {
      int hit = 0;
      int count = 0;
      for (int pt = 1; pt <= eval_at + 2; ++pt) {
        auto v = value(p, eval_at, pt);
        REQUIRE((v == 0 || v == 1));
        if (v == 1) {
          hit = pt;
          ++count;
        }
      }
      REQUIRE(count == 1);
      REQUIRE(seen.insert(hit).second);
      out.push_back(hit);
    }
    REQUIRE(static_cast<int>(out.size()) == n + 2);
    return out;
  }

  template <typename Stage>
  InclusionMatrix oracle_inclusion(Stage const& from, Stage const& to, int n) {
    auto const pts = supports(to, n + 1, n + 1);
    InclusionMatrix M(from.projections.size(), std::vector<int>(to.projections.size(), 0));
    for (std::size_t i = 0; i < from.projections.size(); ++i) {
      for (std::size_t j = 0; j < pts.size(); ++j) {
        M[i][j] = static_cast<int>(value(from.projections[i], n + 1, pts[j]));
      }
    }
    return M;
  }

  std::vector<int> row_sums(InclusionMatrix const& M) {
    std::vector<int> out;
    for (auto const& row : M) {
      out.push_back(std::accumulate(row.begin(), row.end(), 0));
    }
    return out;
  }

}  // namespace

TEST_CASE("stage examples", "[k0]") {
  auto a0 = stage(AfVariant::A, 0);
  CHECK(a0.rank == 2);
  REQUIRE(a0.minimal_projections.size() == 2);
  CHECK(a0.minimal_projections[0].name == "(1-S)/2");
  CHECK(a0.minimal_projections[1].name == "(1+S)/2");
  CHECK(stage(AfVariant::A, 3).rank == 5);
  CHECK(stage(AfVariant::B, 3).rank == 5);
  CHECK(stage(AfVariant::A, 3).minimal_projections.back().name == "(1+S)/2-e3");
  CHECK(stage(AfVariant::B, 2).minimal_projections.back().name == "eps_e2 x e2");
  CHECK(a0.verified());
}

TEST_CASE("stages agree with their characters", "[k0][oracle]") {
  for (int n = 0; n <= 30; ++n) {
    supports(detail::a_stage(n), n, n);
    supports(detail::b_stage(n), n, n);
    for (auto v : {AfVariant::A, AfVariant::B}) {
      auto s = stage(v, n);
      REQUIRE(s.rank == static_cast<std::size_t>(n + 2));
      REQUIRE(s.verified());
    }
  }
}

TEST_CASE("inclusions agree with restriction of characters", "[k0][oracle]") {
  for (int n = 0; n < 30; ++n) {
    REQUIRE(inclusion(AfVariant::A, n)
            == oracle_inclusion(detail::a_stage(n), detail::a_stage(n + 1), n));
    REQUIRE(inclusion(AfVariant::B, n)
            == oracle_inclusion(detail::b_stage(n), detail::b_stage(n + 1), n));
  }
}

TEST_CASE("inclusion examples", "[k0]") {
  auto M = inclusion(AfVariant::A, 0);
  auto s1 = stage(AfVariant::A, 1);
  // (1+S)/2 = e1 + ((1+S)/2 - e1)
  REQUIRE(M.size() == 2);
  CHECK(M[1] == std::vector<int>{0, 1, 1});
  CHECK(s1.minimal_projections[1].name == "e1");
  CHECK(s1.minimal_projections[2].name == "(1+S)/2-e1");
  for (int n = 0; n < 30; ++n) {
    auto a = row_sums(inclusion(AfVariant::A, n));
    CHECK(std::count(a.begin(), a.end(), 2) == 1);
    CHECK(std::count(a.begin(), a.end(), 1) == n + 1);
    CHECK(splitting_rows(inclusion(AfVariant::A, n)).size() == 1);
    auto b = row_sums(inclusion(AfVariant::B, n));
    CHECK(std::count(b.begin(), b.end(), 1) == n + 2);
    CHECK(splitting_rows(inclusion(AfVariant::B, n)).empty());
  }
}

TEST_CASE("the class of (1-S)/2 never splits", "[k0]") {
  auto M = inclusion(AfVariant::A, 0);
  for (int n = 1; n < 30; ++n) {
    M = compose_inclusions(M, inclusion(AfVariant::A, n));
    auto const& row = M[0];
    CHECK(std::accumulate(row.begin(), row.end(), 0) == 1);
    CHECK(stage(AfVariant::A, n + 1).minimal_projections[static_cast<std::size_t>(
              std::find(row.begin(), row.end(), 1) - row.begin())].name
          == "(1-S)/2");
  }
}

TEST_CASE("K0 reports", "[k0]") {
  auto a = k0_colimit_description(AfVariant::A, 30);
  REQUIRE(a.stages.size() == 31);
  CHECK(a.inclusions.size() == 30);
  for (int n = 0; n <= 30; ++n) {
    CHECK(a.stages[static_cast<std::size_t>(n)].rank == static_cast<std::size_t>(n + 2));
  }
  CHECK(a.splitting_classes == std::vector<std::string>{"(1+S)/2"});
  CHECK(a.distinguished_class);
  CHECK(std::find(a.stable_generators.begin(), a.stable_generators.end(), "(1-S)/2")
        != a.stable_generators.end());
  CHECK(std::find(a.stable_generators.begin(), a.stable_generators.end(), "e1")
        != a.stable_generators.end());
  CHECK(std::find(a.stable_generators.begin(), a.stable_generators.end(), "e5-e4")
        != a.stable_generators.end());

  auto b = k0_colimit_description(AfVariant::B, 30);
  CHECK(b.splitting_classes.empty());
  CHECK_FALSE(b.distinguished_class);
  CHECK(b.stable_generators.size() == 31);

  auto one = k0_colimit_description(AfVariant::A, 1);
  CHECK(one.stages.size() == 2);
  CHECK(one.inclusions.size() == 1);
  CHECK_THROWS(k0_colimit_description(AfVariant::A, 0));
  CHECK(parse_variant("B") == AfVariant::B);
  CHECK_FALSE(parse_variant("C").has_value());
}

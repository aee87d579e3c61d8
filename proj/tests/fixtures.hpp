#ifndef EGROUPOID_TESTS_FIXTURES_HPP_
#define EGROUPOID_TESTS_FIXTURES_HPP_

#include <vector>

#include "egroupoid/families.hpp"
#include "egroupoid/finite_semigroup.hpp"

namespace fixtures {

  using egroupoid::PartialBijection;

  inline PartialBijection pb(std::size_t                                                   degree,
                             std::vector<std::pair<std::uint32_t, std::uint32_t>> const& pairs) {
    return PartialBijection(degree, pairs);
  }

  //! I_2 from the transposition and the partial identity on {1}.
  inline egroupoid::FiniteInverseSemigroup i2() {
    std::vector<PartialBijection> gens{pb(2, {{1, 2}, {2, 1}}), pb(2, {{1, 1}})};
    return egroupoid::generate_closure(gens, 100);
  }

  //! I_3 from a 3-cycle, a transposition and the partial identity on {1,2}.
  inline egroupoid::FiniteInverseSemigroup i3() {
    std::vector<PartialBijection> gens{pb(3, {{1, 2}, {2, 3}, {3, 1}}),
                                       pb(3, {{1, 2}, {2, 1}, {3, 3}}),
                                       pb(3, {{1, 1}, {2, 2}})};
    return egroupoid::generate_closure(gens, 1000);
  }

  inline egroupoid::ChainFamily chain() {
    return egroupoid::ChainFamily(true);
  }

  inline egroupoid::ChainFamily pure_chain() {
    return egroupoid::ChainFamily(false);
  }

  using egroupoid::ChainElement;
  using B = egroupoid::BicyclicElement;
  using P = egroupoid::PolycyclicElement;

  inline P word_pair(std::string mu, std::string nu) {
    return P{false, std::move(mu), std::move(nu)};
  }

}  // namespace fixtures

#endif  // EGROUPOID_TESTS_FIXTURES_HPP_

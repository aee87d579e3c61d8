// Seeded generators for the property tests.

#ifndef EGROUPOID_TESTS_GEN_HPP_
#define EGROUPOID_TESTS_GEN_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "egroupoid/partial_bijection.hpp"
#include "egroupoid/rational.hpp"

namespace gen {

  class Gen {
   public:
    explicit Gen(std::uint64_t seed) : _rng(seed) {}

    std::size_t index(std::size_t n) {
      return std::uniform_int_distribution<std::size_t>(0, n - 1)(_rng);
    }

    int integer(int lo, int hi) {
      return std::uniform_int_distribution<int>(lo, hi)(_rng);
    }

    template <typename T>
    T const& pick(std::vector<T> const& v) {
      return v[index(v.size())];
    }

    //! A set of 1..max_size distinct items of v, in the order of v.
    template <typename T>
    std::vector<T> subset(std::vector<T> const& v, std::size_t max_size) {
      auto size = 1 + index(std::min(max_size, v.size()));
      std::vector<std::size_t> idx(v.size());
      for (std::size_t i = 0; i < idx.size(); ++i) {
        idx[i] = i;
      }
      std::shuffle(idx.begin(), idx.end(), _rng);
      idx.resize(size);
      std::sort(idx.begin(), idx.end());
      std::vector<T> out;
      for (auto i : idx) {
        out.push_back(v[i]);
      }
      return out;
    }

    egroupoid::PartialBijection partial_bijection(std::size_t degree) {
      std::vector<egroupoid::PartialBijection::point_type> targets(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        targets[i] = static_cast<egroupoid::PartialBijection::point_type>(i + 1);
      }
      std::shuffle(targets.begin(), targets.end(), _rng);
      std::vector<std::pair<egroupoid::PartialBijection::point_type,
                            egroupoid::PartialBijection::point_type>>
          pairs;
      for (std::size_t i = 0; i < degree; ++i) {
        if (integer(0, 2) != 0) {
          pairs.emplace_back(static_cast<egroupoid::PartialBijection::point_type>(i + 1),
                             targets[i]);
        }
      }
      return egroupoid::PartialBijection(degree, pairs);
    }

    egroupoid::QComplex qcomplex() {
      return {egroupoid::Rational(integer(-6, 6), integer(1, 5)),
              egroupoid::Rational(integer(-6, 6), integer(1, 5))};
    }

   private:
    std::mt19937_64 _rng;
  };

}  // namespace gen

#endif  // EGROUPOID_TESTS_GEN_HPP_

#ifndef EGROUPOID_INVARIANTS_HPP_
#define EGROUPOID_INVARIANTS_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "carrier.hpp"
#include "continuity.hpp"
#include "groupoid.hpp"
#include "l2_module.hpp"
#include "spectrum.hpp"

namespace egroupoid {

  struct InvariantResult {
    std::string name;
    bool        passed  = false;
    std::size_t checked = 0;
    std::string detail;
  };

  inline constexpr std::size_t invariant_sample_cap = 20000;

  namespace detail {

    //! All index tuples when n^k <= cap, otherwise `cap` seeded samples.
    template <std::size_t K>
    std::vector<std::array<std::size_t, K>>
    index_tuples(std::size_t n, std::size_t cap, std::mt19937_64& rng) {
      std::vector<std::array<std::size_t, K>> out;
      if (n == 0) {
        return out;
      }
      double total = 1;
      for (std::size_t i = 0; i < K; ++i) {
        total *= static_cast<double>(n);
      }
      if (total <= static_cast<double>(cap)) {
        std::array<std::size_t, K> t{};
        while (true) {
          out.push_back(t);
          std::size_t i = 0;
          while (i < K && ++t[i] == n) {
            t[i++] = 0;
          }
          if (i == K) {
            break;
          }
        }
        return out;
      }
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t s = 0; s < cap; ++s) {
        std::array<std::size_t, K> t{};
        for (auto& v : t) {
          v = pick(rng);
        }
        out.push_back(t);
      }
      return out;
    }

  }  // namespace detail

  //! The full invariant suite on one carrier at truncation L. Exhaustive
  //! where small, seeded samples otherwise.
  template <Carrier C>
  std::vector<InvariantResult>
  run_invariants(C const& c, int L, std::size_t budget, std::uint64_t seed) {
    using Elem = element_t<C>;
    std::mt19937_64              rng(seed);
    std::vector<InvariantResult> out;
    auto const                   els   = elements(c, L);
    auto const                   idems = idempotents(c, L);
    auto const                   chars = characters(c, L);
    auto const                   n     = els.size();

    auto record = [&](std::string name, std::size_t checked, std::string failure) {
      out.push_back({std::move(name), failure.empty(), checked, std::move(failure)});
    };

    {
      std::string fail;
      std::size_t k = 0;
      for (auto const& [i, j] : detail::index_tuples<2>(n, invariant_sample_cap, rng)) {
        auto const &g = els[i], &h = els[j];
        ++k;
        if (!(c.star(c.star(g)) == g) || !(c.star(c.compose(g, h)) == c.compose(c.star(h), c.star(g)))
            || !(c.compose(g, c.compose(c.star(g), g)) == g)) {
          fail = "involution or inverse law fails at " + c.name(g) + ", " + c.name(h);
          break;
        }
      }
      record("involution and inverse laws", k, fail);
    }
    {
      std::string fail;
      std::size_t k = 0;
      for (auto const& [i, j, l] : detail::index_tuples<3>(n, invariant_sample_cap, rng)) {
        ++k;
        auto const &a = els[i], &b = els[j], &d = els[l];
        if (!(c.compose(c.compose(a, b), d) == c.compose(a, c.compose(b, d)))) {
          fail = "associativity fails at " + c.name(a) + ", " + c.name(b) + ", " + c.name(d);
          break;
        }
      }
      record("associativity", k, fail);
    }
    {
      std::string fail;
      std::size_t k = 0;
      for (auto const& [i, j] : detail::index_tuples<2>(idems.size(), invariant_sample_cap, rng)) {
        ++k;
        auto const &e = idems[i], &f = idems[j];
        if (!(c.compose(e, f) == c.compose(f, e)) || !c.is_idempotent(c.compose(e, f))) {
          fail = "idempotents " + c.name(e) + ", " + c.name(f) + " do not commute";
          break;
        }
      }
      record("idempotents commute", k, fail);
    }
    {
      auto const r = density_check(c, L, budget);
      record("principal characters are dense",
             r.opens_checked + r.filters_checked,
             r.passed() ? "" : std::to_string(r.violations.size()) + " opens miss every principal point");
    }
    {
      std::string fail;
      std::size_t k = 0;
      for (auto const& [i, j] : detail::index_tuples<2>(n, invariant_sample_cap, rng)) {
        auto const& g = els[j];
        auto const& f = idems[i % idems.size()];
        ++k;
        auto const x  = Character<Elem>::principal(f);
        if (!in_spectrum(c, x)) {
          continue;
        }
        auto const y  = act_character(c, x, c.star(g));
        auto const ef = epsilon_action(c, g, f);
        bool const ok = y ? ef == EpsilonFunction<Elem>::point(y->e) : ef.is_zero();
        if (!ok) {
          fail = "character action and eps-action disagree at " + c.name(g) + ", " + c.name(f);
          break;
        }
      }
      record("character action intertwines the eps(E)-action", k, fail);
    }
    {
      std::string fail;
      std::size_t k     = 0;
      auto        pairs = detail::index_tuples<2>(n, 400, rng);
      for (auto const& [i, j] : pairs) {
        auto const &g = els[i], &h = els[j];
        ++k;
        auto const a = phi_inner(c, g, h, L, budget);
        auto const b = phi_inner(c, h, g, L, budget);
        if (a.value.join_set != b.value.join_set) {
          fail = "join sets differ for " + c.name(g) + ", " + c.name(h);
          break;
        }
        auto const gg = phi_inner(c, g, g, L, budget);
        auto const rg = c.compose(g, c.star(g));
        for (auto const& x : chars) {
          if (value_at(c, gg.value, x) != evaluate(c, x, rg)) {
            fail = "<phi_g, phi_g> differs from 1_{gg*} at g = " + c.name(g);
            break;
          }
        }
        auto const& e  = idems[(i + j) % idems.size()];
        auto const  eg = phi_inner(c, c.compose(e, g), h, L, budget);
        for (auto const& x : chars) {
          if (value_at(c, eg.value, x) != (evaluate(c, x, e) && value_at(c, a.value, x))) {
            fail = "<phi_g e, phi_h> differs from 1_e <phi_g, phi_h> at " + c.name(g) + ", "
                   + c.name(h) + ", " + c.name(e);
            break;
          }
        }
        if (!fail.empty()) {
          break;
        }
      }
      record("inner product symmetry, diagonal and module compatibility", k, fail);
    }
    {
      std::string                        fail;
      std::size_t                        k = 0;
      std::uniform_int_distribution<int> size(1, 4);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (int t = 0; t < 20 && n > 0; ++t) {
        std::vector<Elem> subset;
        int const         s = size(rng);
        for (int i = 0; i < s; ++i) {
          subset.push_back(els[pick(rng)]);
        }
        ++k;
        if (!gram_psd_check(c, subset, chars, L, budget).passed()) {
          fail = "a Gram matrix is not positive semidefinite";
          break;
        }
        std::sort(subset.begin(), subset.end());
        subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
        auto trials = random_trials(rng(), subset.size(), 5);
        for (auto const& tr : linear_independence_probe(c, subset, trials, chars, L, budget)) {
          if (tr.result != ProbeResult::pass) {
            fail = "a nonzero combination vanishes at every sampled character";
          }
        }
        if (!fail.empty()) {
          break;
        }
      }
      record("Gram positivity and linear independence", k, fail);
    }
    {
      std::string fail;
      std::size_t k = 0;
      for (auto const& [i, j, l] : detail::index_tuples<3>(n, 300, rng)) {
        ++k;
        if (!equivariance_check(c, els[i], els[j], els[l], chars, L, budget).passed()) {
          fail = "equivariance fails at " + c.name(els[i]) + ", " + c.name(els[j]) + ", "
                 + c.name(els[l]);
          break;
        }
      }
      record("equivariance of the inner product", k, fail);
    }
    {
      std::string fail;
      std::size_t k = 0;
      for (auto const& [i, j, l] : detail::index_tuples<3>(n, invariant_sample_cap, rng)) {
        ++k;
        auto const v     = EpsilonModuleVector<Elem>::basis(els[l]);
        auto const two   = epsilon_act(c, els[j], epsilon_act(c, els[i], v));
        auto const prod  = epsilon_act(c, c.compose(els[j], els[i]), v);
        if (!(two == prod)) {
          fail = "eps-module action law fails at " + c.name(els[j]) + ", " + c.name(els[i])
                 + ", " + c.name(els[l]);
          break;
        }
      }
      record("eps(E)-module action law", k, fail);
    }
    {
      std::string fail;
      std::size_t k = 0;
      for (auto const& x : chars) {
        auto classes = germs_over(c, x, L);
        for (auto const& a : classes) {
          for (auto const& b : classes) {
            if (auto ab = compose_germs(c, a.rep, b.rep, L)) {
              ++k;
              if (!literal_composition_condition(c, a.rep, b.rep, L)) {
                fail = "composable germs violate the composition condition";
              }
            }
          }
        }
        if (k > invariant_sample_cap || !fail.empty()) {
          break;
        }
      }
      record("germ composition", k, fail);
    }
    {
      auto const r = theorem_cross_check(c, L, budget);
      record("Hausdorff iff E-continuous (direct separation agrees)",
             r.pairs,
             r.agree() ? "" : std::string("theorem says ") + to_string(r.theorem)
                                  + ", direct separation says " + to_string(r.direct));
    }
    return out;
  }

}  // namespace egroupoid

#endif  // EGROUPOID_INVARIANTS_HPP_

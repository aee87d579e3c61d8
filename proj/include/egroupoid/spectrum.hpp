#ifndef EGROUPOID_SPECTRUM_HPP_
#define EGROUPOID_SPECTRUM_HPP_

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "carrier.hpp"
#include "character.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace egroupoid {

  //! Idempotents scanned when building basic opens; bounds the work at large
  //! truncations of the polycyclic family.
  inline constexpr std::size_t idempotent_scan_limit = 64;

  //! Extra levels beyond a neighbourhood's truncation at which principal
  //! points are searched.
  inline constexpr int search_margin = 2;

  template <Carrier C>
  void require_idempotent(C const& c, element_t<C> const& e) {
    if (!c.is_idempotent(e)) {
      throw usage_error("'" + c.name(e) + "' is not an idempotent");
    }
  }

  //! x(e): 1 iff e lies in the filter of x.
  template <Carrier C>
  bool evaluate(C const& c, Character<element_t<C>> const& x, element_t<C> const& e) {
    require_idempotent(c, e);
    if (x.is_principal()) {
      return c.compose(x.e, e) == x.e;
    }
    return c.limit_contains(x.code, e);
  }

  //! carrier_membership: same as evaluate, as a {0,1} value.
  template <Carrier C>
  int carrier_membership(C const&                       c,
                         Character<element_t<C>> const& x,
                         element_t<C> const&            e) {
    return evaluate(c, x, e) ? 1 : 0;
  }

  //! False for the character of the zero idempotent when kill_zero is set.
  template <Carrier C>
  bool in_spectrum(C const& c, Character<element_t<C>> const& x) {
    if (c.kill_zero() && x.is_principal() && c.zero() && x.e == *c.zero()) {
      return false;
    }
    return true;
  }

  template <Carrier C>
  Character<element_t<C>> principal(C const& c, element_t<C> const& e) {
    require_idempotent(c, e);
    return Character<element_t<C>>::principal(e);
  }

  //! All characters of a finite carrier: one principal filter per idempotent.
  inline std::vector<Character<FiniteInverseSemigroup::element_type>>
  characters_finite(FiniteInverseSemigroup const& c) {
    std::vector<Character<FiniteInverseSemigroup::element_type>> out;
    c.for_each_idempotent(0, [&](auto e) {
      auto x = Character<FiniteInverseSemigroup::element_type>::principal(e);
      if (in_spectrum(c, x)) {
        out.push_back(x);
      }
      return true;
    });
    return out;
  }

  template <Carrier C>
  std::vector<Character<element_t<C>>> limit_characters(C const& c, int L) {
    std::vector<Character<element_t<C>>> out;
    for (auto const& x : c.limit_characters(L)) {
      if (in_spectrum(c, x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  //! Principal characters at truncation L together with the limit
  //! characters, deduplicated and canonically ordered.
  template <Carrier C>
  std::vector<Character<element_t<C>>> characters(C const& c, int L) {
    std::vector<Character<element_t<C>>> out;
    c.for_each_idempotent(L, [&](element_t<C> const& e) {
      auto x = Character<element_t<C>>::principal(e);
      if (in_spectrum(c, x)) {
        out.push_back(std::move(x));
      }
      return true;
    });
    for (auto const& x : limit_characters(c, L)) {
      out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  //! x . g, the character e -> x(g e g*), or nullopt when it is zero.
  template <Carrier C>
  std::optional<Character<element_t<C>>>
  act_character(C const& c, Character<element_t<C>> const& x, element_t<C> const& g) {
    if (x.is_principal()) {
      // For x = eps_f: x . g = eps_{g* f g} when f <= g g*, zero otherwise.
      auto const range = c.compose(g, c.star(g));
      if (!(c.compose(x.e, range) == x.e)) {
        return std::nullopt;
      }
      auto y = Character<element_t<C>>::principal(
          c.compose(c.star(g), c.compose(x.e, g)));
      if (!in_spectrum(c, y)) {
        return std::nullopt;
      }
      return y;
    }
    auto code = c.limit_act(x.code, g);
    if (!code) {
      return std::nullopt;
    }
    return Character<element_t<C>>::limit(*code);
  }

  //! g(1_e) = 1_{g e g*}.
  template <Carrier C>
  element_t<C> act_indicator(C const& c, element_t<C> const& g, element_t<C> const& e) {
    require_idempotent(c, e);
    return c.compose(g, c.compose(e, c.star(g)));
  }

  ////////////////////////////////////////////////////////////////////////
  // The discretized algebra eps(E)
  ////////////////////////////////////////////////////////////////////////

  //! A finite formal sum of one-point functions eps_e with rational
  //! coefficients; zero coefficients are never stored.
  template <typename Elem>
  struct EpsilonFunction {
    std::map<Elem, Rational> terms;

    static EpsilonFunction point(Elem e) {
      EpsilonFunction out;
      out.terms.emplace(std::move(e), Rational(1));
      return out;
    }

    bool is_zero() const {
      return terms.empty();
    }

    void add(Elem const& e, Rational const& r) {
      auto& v = terms[e];
      v += r;
      if (v == 0) {
        terms.erase(e);
      }
    }

    Rational evaluate(Character<Elem> const& x) const {
      if (!x.is_principal()) {
        return 0;
      }
      auto it = terms.find(x.e);
      return it == terms.end() ? Rational(0) : it->second;
    }

    friend bool operator==(EpsilonFunction const&,
                           EpsilonFunction const&) = default;
  };

  //! g(eps_e) = eps_{g e g*} if e <= g* g, and 0 otherwise.
  template <Carrier C>
  EpsilonFunction<element_t<C>>
  epsilon_action(C const& c, element_t<C> const& g, element_t<C> const& e) {
    require_idempotent(c, e);
    auto const source = c.compose(c.star(g), g);
    if (!(c.compose(e, source) == e)) {
      return {};
    }
    auto image = act_indicator(c, g, e);
    if (c.kill_zero() && c.zero() && image == *c.zero()) {
      return {};
    }
    return EpsilonFunction<element_t<C>>::point(image);
  }

  ////////////////////////////////////////////////////////////////////////
  // Basic opens {x : x(e) = 1, x(f1) = ... = x(fk) = 0}
  ////////////////////////////////////////////////////////////////////////

  template <typename Elem>
  struct BasicOpen {
    Elem              positive{};
    std::vector<Elem> negatives;

    friend bool operator==(BasicOpen const&, BasicOpen const&) = default;
    friend auto operator<=>(BasicOpen const&, BasicOpen const&) = default;
  };

  template <Carrier C>
  bool contains(C const&                          c,
                BasicOpen<element_t<C>> const&     U,
                Character<element_t<C>> const&     x) {
    if (!in_spectrum(c, x) || !evaluate(c, x, U.positive)) {
      return false;
    }
    return std::none_of(U.negatives.begin(),
                        U.negatives.end(),
                        [&](auto const& f) { return evaluate(c, x, f); });
  }

  //! Normal form: negatives replaced by positive * f and reduced to the
  //! maximal ones. Returns nullopt when some negative is >= the positive,
  //! which makes the set empty.
  template <Carrier C>
  std::optional<BasicOpen<element_t<C>>>
  normalize(C const& c, BasicOpen<element_t<C>> const& U) {
    require_idempotent(c, U.positive);
    std::vector<element_t<C>> negs;
    for (auto const& f : U.negatives) {
      require_idempotent(c, f);
      auto pf = c.compose(U.positive, f);
      if (pf == U.positive) {
        return std::nullopt;
      }
      negs.push_back(pf);
    }
    return BasicOpen<element_t<C>>{U.positive, maximal_elements(c, std::move(negs))};
  }

  //! Intersection of two basic opens (not normalized).
  template <Carrier C>
  BasicOpen<element_t<C>> intersect(C const&                      c,
                                    BasicOpen<element_t<C>> const& U,
                                    BasicOpen<element_t<C>> const& V) {
    BasicOpen<element_t<C>> out{c.compose(U.positive, V.positive), U.negatives};
    out.negatives.insert(out.negatives.end(), V.negatives.begin(), V.negatives.end());
    return out;
  }

  //! A point of U, searched among eps_{positive}, the principal characters
  //! at truncation L and the limit characters.
  template <Carrier C>
  std::optional<Character<element_t<C>>>
  find_point(C const& c, BasicOpen<element_t<C>> const& U, int L) {
    auto x = Character<element_t<C>>::principal(U.positive);
    if (contains(c, U, x)) {
      return x;
    }
    std::optional<Character<element_t<C>>> found;
    c.for_each_idempotent(L, [&](element_t<C> const& e) {
      auto y = Character<element_t<C>>::principal(e);
      if (contains(c, U, y)) {
        found = y;
        return false;
      }
      return true;
    });
    if (found) {
      return found;
    }
    for (auto const& y : limit_characters(c, L)) {
      if (contains(c, U, y)) {
        return y;
      }
    }
    return std::nullopt;
  }

  namespace detail {
    //! At most `budget` items, evenly spread over v (first and last kept).
    template <typename T>
    std::vector<T> spread(std::vector<T> v, std::size_t budget) {
      if (v.size() <= budget || budget == 0) {
        return budget == 0 ? std::vector<T>{} : v;
      }
      std::vector<T> out;
      if (budget == 1) {
        out.push_back(v.back());
        return out;
      }
      for (std::size_t i = 0; i < budget; ++i) {
        out.push_back(v[i * (v.size() - 1) / (budget - 1)]);
      }
      return out;
    }

    //! Normalized nonempty basic opens built from `pos` and subsets of size
    //! <= 2 of `neg`, in canonical order, without duplicates.
    template <Carrier C>
    std::vector<BasicOpen<element_t<C>>>
    basic_opens_from(C const&                         c,
                     std::vector<element_t<C>> const& pos,
                     std::vector<element_t<C>> const& neg,
                     std::size_t*                     empty_count = nullptr) {
      std::set<BasicOpen<element_t<C>>> seen;
      std::vector<BasicOpen<element_t<C>>> out;
      auto add = [&](BasicOpen<element_t<C>> const& U) {
        auto N = normalize(c, U);
        if (!N || (c.kill_zero() && c.zero() && N->positive == *c.zero())) {
          if (empty_count != nullptr) {
            ++*empty_count;
          }
          return;
        }
        if (seen.insert(*N).second) {
          out.push_back(*N);
        }
      };
      for (auto const& p : pos) {
        add({p, {}});
        for (std::size_t i = 0; i < neg.size(); ++i) {
          add({p, {neg[i]}});
          for (std::size_t j = i + 1; j < neg.size(); ++j) {
            add({p, {neg[i], neg[j]}});
          }
        }
      }
      return out;
    }
  }  // namespace detail

  //! Basic open neighbourhoods of x built from the first idempotents at
  //! truncation L, at most `budget` of them (evenly spread when there are
  //! more).
  template <Carrier C>
  std::vector<BasicOpen<element_t<C>>>
  neighborhoods(C const& c, Character<element_t<C>> const& x, int L, std::size_t budget) {
    std::vector<element_t<C>> pos, neg;
    for (auto const& e : idempotents_prefix(c, L, idempotent_scan_limit)) {
      (evaluate(c, x, e) ? pos : neg).push_back(e);
    }
    auto all = detail::basic_opens_from(c, pos, neg);
    std::erase_if(all, [&](auto const& U) { return !contains(c, U, x); });
    return detail::spread(std::move(all), budget);
  }

  struct DensityReport {
    std::size_t              opens_checked    = 0;
    std::size_t              empty_skipped    = 0;
    std::size_t              limit_points_hit = 0;
    std::size_t              filters_checked  = 0;
    std::vector<std::string> violations;

    bool passed() const noexcept {
      return violations.empty();
    }
  };

  //! Checks that every nonempty basic open within budget contains a
  //! principal character: each limit character lying in an open must have a
  //! principal approximant in it. For finite carriers every filter (found by
  //! subset enumeration when |E| <= 16) must also be principal.
  template <Carrier C>
  DensityReport density_check(C const& c, int L, std::size_t budget) {
    DensityReport report;
    auto          idems = idempotents_prefix(c, L, idempotent_scan_limit);
    auto opens = detail::basic_opens_from(c, idems, idems, &report.empty_skipped);
    opens      = detail::spread(std::move(opens), budget);
    auto limits = limit_characters(c, L);

    for (auto const& U : opens) {
      auto point = find_point(c, U, L);
      if (!point) {
        ++report.empty_skipped;
        continue;
      }
      ++report.opens_checked;
      if (!point->is_principal()) {
        // Only a limit point was found directly; an approximant must exist.
        bool ok = false;
        for (auto const& a : c.approximants(*point, L + search_margin)) {
          ok = ok || contains(c, U, Character<element_t<C>>::principal(a));
        }
        if (!ok) {
          report.violations.push_back("open at " + c.name(U.positive)
                                      + " has no principal point");
        }
      }
      for (auto const& x : limits) {
        if (!contains(c, U, x)) {
          continue;
        }
        ++report.limit_points_hit;
        bool ok = false;
        for (auto const& a : c.approximants(x, L + search_margin)) {
          auto y = Character<element_t<C>>::principal(a);
          if (!(y == x) && contains(c, U, y)) {
            ok = true;
            break;
          }
        }
        if (!ok) {
          report.violations.push_back(
              "limit point " + (x.is_principal() ? c.name(x.e) : x.code)
              + " in open at " + c.name(U.positive)
              + " is not approached by principal points");
        }
      }
    }

    if constexpr (std::is_same_v<C, FiniteInverseSemigroup>) {
      auto E = idempotents(c, L);
      if (E.size() <= 16) {
        for (std::uint32_t mask = 1; mask < (1u << E.size()); ++mask) {
          auto in = [&](std::size_t i) { return (mask >> i) & 1u; };
          bool filter = true;
          for (std::size_t i = 0; i < E.size() && filter; ++i) {
            for (std::size_t j = 0; j < E.size() && filter; ++j) {
              if (in(i) && in(j)) {
                auto m = c.compose(E[i], E[j]);
                auto k = std::find(E.begin(), E.end(), m) - E.begin();
                filter = in(static_cast<std::size_t>(k));
              }
              if (in(i) && !in(j) && c.compose(E[i], E[j]) == E[i]) {
                filter = false;  // not upward closed
              }
            }
          }
          if (!filter) {
            continue;
          }
          ++report.filters_checked;
          // The meet of a finite filter generates it.
          auto meet = E[static_cast<std::size_t>(std::countr_zero(mask))];
          for (std::size_t i = 0; i < E.size(); ++i) {
            if (in(i)) {
              meet = c.compose(meet, E[i]);
            }
          }
          for (std::size_t i = 0; i < E.size(); ++i) {
            if (static_cast<bool>(in(i)) != (c.compose(meet, E[i]) == meet)) {
              report.violations.push_back("non-principal filter found");
              break;
            }
          }
        }
      }
    }
    return report;
  }

}  // namespace egroupoid

#endif  // EGROUPOID_SPECTRUM_HPP_

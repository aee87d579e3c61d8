#ifndef EGROUPOID_GROUPOID_HPP_
#define EGROUPOID_GROUPOID_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carrier.hpp"
#include "character.hpp"
#include "continuity.hpp"
#include "spectrum.hpp"

namespace egroupoid {

  //! A point (g, x) of G * X, i.e. x(g* g) = 1.
  template <typename Elem>
  struct GermRep {
    Elem            g{};
    Character<Elem> x;

    friend bool operator==(GermRep const&, GermRep const&) = default;
    friend auto operator<=>(GermRep const&, GermRep const&) = default;
  };

  //! A germ, stored by its canonical representative: the least element (in
  //! canonical order, at the truncation used) of the class.
  template <typename Elem>
  struct Germ {
    GermRep<Elem> rep;

    friend bool operator==(Germ const&, Germ const&) = default;
    friend auto operator<=>(Germ const&, Germ const&) = default;
  };

  template <Carrier C>
  bool is_germ(C const& c, GermRep<element_t<C>> const& a) {
    return in_spectrum(c, a.x) && evaluate(c, a.x, c.compose(c.star(a.g), a.g));
  }

  template <Carrier C>
  GermRep<element_t<C>> make_germ(C const&                       c,
                                  element_t<C> const&            g,
                                  Character<element_t<C>> const& x) {
    GermRep<element_t<C>> a{g, x};
    if (!is_germ(c, a)) {
      throw usage_error("(" + c.name(g) + ", x) is not in G * X: x(g*g) = 0");
    }
    return a;
  }

  //! An idempotent of the filter of x small enough to decide whether
  //! g e = h e for some e in the filter, for all g, h of level <= depth.
  //! Principal filters have a least element; for limit filters the carrier
  //! guarantees that its filter element at depth >= level decides.
  template <Carrier C>
  element_t<C> deciding_filter_element(C const&                       c,
                                       Character<element_t<C>> const& x,
                                       int                            depth) {
    if (x.is_principal()) {
      return x.e;
    }
    return c.limit_filter_element(x.code, depth);
  }

  //! (g, x) == (h, y) iff x = y and g e = h e for some e in the filter of x.
  template <Carrier C>
  bool germ_eq(C const& c, GermRep<element_t<C>> const& a, GermRep<element_t<C>> const& b) {
    if (!is_germ(c, a) || !is_germ(c, b)) {
      throw usage_error("germ_eq called on a pair outside G * X");
    }
    if (!(a.x == b.x)) {
      return false;
    }
    auto e = deciding_filter_element(c, a.x, std::max(c.level(a.g), c.level(b.g)));
    return c.compose(a.g, e) == c.compose(b.g, e);
  }

  //! Source x and range x . g* of the germ (g, x).
  template <Carrier C>
  std::pair<Character<element_t<C>>, Character<element_t<C>>>
  source_range(C const& c, GermRep<element_t<C>> const& a) {
    if (!is_germ(c, a)) {
      throw usage_error("source_range called outside G * X");
    }
    auto r = act_character(c, a.x, c.star(a.g));
    if (!r) {
      throw usage_error("range of a germ vanished; carrier contract broken");
    }
    return {a.x, *r};
  }

  //! The canonical representative of the class of a: the first element g'
  //! with (g', x) == a at the least truncation >= L holding one.
  template <Carrier C>
  Germ<element_t<C>> reduce_germ(C const& c, GermRep<element_t<C>> const& a, int L) {
    std::optional<GermRep<element_t<C>>> best;
    for (int d = L; !best; ++d) {
      c.for_each_element(d, [&](element_t<C> const& g) {
        GermRep<element_t<C>> b{g, a.x};
        if (is_germ(c, b) && germ_eq(c, a, b)) {
          best = b;
          return false;
        }
        return true;
      });
      if (d >= c.level(a.g)) {
        break;
      }
    }
    return {best ? *best : a};
  }

  //! The composition condition exactly as quantified: for every e with
  //! y(e) = 1, x((h e)(h e)*) = 1. By antitonicity in e it is decided at the
  //! least element of a principal filter, and at a deep filter element
  //! (beyond every level in play) for a limit filter.
  template <Carrier C>
  bool literal_composition_condition(C const&                     c,
                                     GermRep<element_t<C>> const& a,
                                     GermRep<element_t<C>> const& b,
                                     int                          L) {
    int const depth
        = std::max({L, c.level(a.g), c.level(b.g)}) + search_margin;
    auto const e  = deciding_filter_element(c, b.x, depth);
    auto const he = c.compose(b.g, e);
    return evaluate(c, a.x, c.compose(he, c.star(he)));
  }

  //! pi(g, x) pi(h, y) = pi(g h, y), defined iff x is the range of (h, y).
  template <Carrier C>
  std::optional<Germ<element_t<C>>> compose_germs(C const&                     c,
                                                  GermRep<element_t<C>> const& a,
                                                  GermRep<element_t<C>> const& b,
                                                  int                          L) {
    auto [src, rng] = source_range(c, b);
    if (!is_germ(c, a) || !(a.x == rng)) {
      return std::nullopt;
    }
    return reduce_germ(c, GermRep<element_t<C>>{c.compose(a.g, b.g), b.x}, L);
  }

  template <Carrier C>
  std::optional<Germ<element_t<C>>> compose_germs(C const&                  c,
                                                  Germ<element_t<C>> const& a,
                                                  Germ<element_t<C>> const& b,
                                                  int                       L) {
    return compose_germs(c, a.rep, b.rep, L);
  }

  //! Canonical representatives of all germ classes over x with g at
  //! truncation L.
  template <Carrier C>
  std::vector<Germ<element_t<C>>> germs_over(C const& c, Character<element_t<C>> const& x, int L) {
    using Elem = element_t<C>;
    std::vector<Elem> fiber;
    int               depth = 0;
    c.for_each_element(L, [&](Elem const& g) {
      if (is_germ(c, GermRep<Elem>{g, x})) {
        fiber.push_back(g);
        depth = std::max(depth, c.level(g));
      }
      return true;
    });
    // One deciding element serves the whole fiber.
    auto const             e = deciding_filter_element(c, x, depth);
    std::map<Elem, Elem>   first_by_key;
    std::vector<Germ<Elem>> out;
    for (auto const& g : fiber) {
      if (first_by_key.emplace(c.compose(g, e), g).second) {
        out.push_back({GermRep<Elem>{g, x}});
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Hausdorff verdicts
  ////////////////////////////////////////////////////////////////////////

  //! The open set pi(g x U) generated by g x U, U inside carrier(g* g).
  template <typename Elem>
  struct GroupoidBasisSet {
    Elem            g{};
    BasicOpen<Elem> U;
  };

  template <Carrier C>
  GroupoidBasisSet<element_t<C>> basis_set(C const&                       c,
                                           element_t<C> const&            g,
                                           BasicOpen<element_t<C>> const& U) {
    auto V     = U;
    V.positive = c.compose(U.positive, c.compose(c.star(g), g));
    return {g, V};
  }

  //! Membership of the germ a = (h, y) in pi(g x U).
  template <Carrier C>
  bool contains(C const&                              c,
                GroupoidBasisSet<element_t<C>> const& W,
                GermRep<element_t<C>> const&          a) {
    if (!contains(c, W.U, a.x)) {
      return false;
    }
    GermRep<element_t<C>> b{W.g, a.x};
    return is_germ(c, b) && germ_eq(c, a, b);
  }

  enum class Separation { separated, not_separated, inconclusive };

  inline char const* to_string(Separation s) {
    switch (s) {
      case Separation::separated:
        return "separated";
      case Separation::not_separated:
        return "not_separated";
      default:
        return "inconclusive";
    }
  }

  template <typename Elem>
  struct SeparationResult {
    Separation kind = Separation::inconclusive;
    std::string method;
    // separated via the complement t of carrier(F), F the sup of e <= h* g
    std::vector<Elem> certificate;
    // separated by base points: x(e) != y(e)
    std::optional<Elem> splitting_idempotent;
    std::size_t         characters_verified = 0;
    // not separated: neighbourhood pairs checked and sample common germs
    std::size_t                                          pairs_checked = 0;
    std::vector<std::pair<BasicOpen<Elem>, GermRep<Elem>>> common_germs;
    std::string                                          note;
  };

  //! Shared state for many separation checks at one truncation.
  template <Carrier C>
  struct SeparationContext {
    using Elem = element_t<C>;

    SeparationContext(C const& c, int L, std::size_t budget)
        : verdicts(c, L, budget), chars(characters(c, L)) {}

    VerdictCache<C>              verdicts;
    std::vector<Character<Elem>> chars;
    // (g, h) -> no character of t has a common germ of g and h
    std::map<std::pair<Elem, Elem>, bool> t_disjoint;
  };

  //! Tries to separate two inequivalent germs by disjoint basis opens.
  //!
  //! Different base points are separated through an idempotent on which the
  //! two characters differ. For a common base x, with F the supremum of
  //! {f <= h* g} (finite certificate from the continuity module), the sets
  //! generated by g x t and h x t, t the complement of carrier(F), are
  //! checked disjoint at every character at truncation L. Failing that,
  //! every pair of neighbourhoods (at most `budget` per side) is searched for
  //! a common germ; if all meet, the pair is NotSeparated.
  template <Carrier C>
  SeparationResult<element_t<C>>
  direct_separation_check(C const&                     c,
                          GermRep<element_t<C>> const& a,
                          GermRep<element_t<C>> const& b,
                          int                          L,
                          std::size_t                  budget,
                          SeparationContext<C>&        ctx) {
    using Elem = element_t<C>;
    if (germ_eq(c, a, b)) {
      throw usage_error("direct_separation_check requires inequivalent germs");
    }
    SeparationResult<Elem> out;
    if (!(a.x == b.x)) {
      std::optional<Elem> split;
      auto try_split = [&](Elem const& e) {
        if (evaluate(c, a.x, e) != evaluate(c, b.x, e)) {
          split = e;
          return false;
        }
        return true;
      };
      c.for_each_idempotent(L + search_margin, try_split);
      for (auto const& x : {a.x, b.x}) {
        if (!split) {
          for (int d = 0; d <= L + search_margin && !split; ++d) {
            try_split(deciding_filter_element(c, x, d));
          }
        }
      }
      if (split) {
        out.kind                 = Separation::separated;
        out.method               = "base points";
        out.splitting_idempotent = split;
      } else {
        out.note = "no idempotent distinguishes the base points";
      }
      return out;
    }

    auto const& x    = a.x;
    auto const  g    = a.g;
    auto const  h    = b.g;
    auto const  hsg  = c.compose(c.star(h), g);
    auto const  gsg  = c.compose(c.star(g), g);
    auto const  hsh  = c.compose(c.star(h), h);
    auto const& verdict = ctx.verdicts(hsg);

    if (verdict.kind == Verdict::continuous) {
      auto const& F = verdict.certificate;
      auto in_t     = [&](Character<Elem> const& y) {
        return std::none_of(
            F.begin(), F.end(), [&](auto const& f) { return evaluate(c, y, f); });
      };
      bool ok = in_t(x);
      if (ok) {
        auto [it, fresh] = ctx.t_disjoint.try_emplace({g, h}, true);
        if (fresh) {
          for (auto const& y : ctx.chars) {
            if (in_t(y) && evaluate(c, y, gsg) && evaluate(c, y, hsh)
                && germ_eq(c, GermRep<Elem>{g, y}, GermRep<Elem>{h, y})) {
              it->second = false;
              break;
            }
          }
        }
        ok                      = it->second;
        out.characters_verified = ctx.chars.size();
      }
      if (ok) {
        out.kind        = Separation::separated;
        out.method      = "complement of sup carrier";
        out.certificate = F;
        return out;
      }
    }

    auto nbhds = neighborhoods(c, x, L, budget);
    for (std::size_t i = 0; i < nbhds.size(); ++i) {
      for (std::size_t j = i; j < nbhds.size(); ++j) {
        ++out.pairs_checked;
        auto U = intersect(c, nbhds[i], nbhds[j]);
        U.positive = c.compose(U.positive, c.compose(gsg, hsh));
        std::optional<GermRep<Elem>> common;
        c.for_each_idempotent(L + search_margin, [&](Elem const& e) {
          auto y = Character<Elem>::principal(c.compose(U.positive, e));
          if (contains(c, U, y)
              && c.compose(g, y.e) == c.compose(h, y.e)) {
            common = GermRep<Elem>{g, y};
            return false;
          }
          return true;
        });
        if (!common) {
          out.note = "no common germ found for a neighbourhood pair";
          return out;
        }
        if (out.common_germs.size() < 5) {
          out.common_germs.emplace_back(U, *common);
        }
      }
    }
    out.kind   = Separation::not_separated;
    out.method = "every neighbourhood pair meets";
    return out;
  }

  template <Carrier C>
  SeparationResult<element_t<C>>
  direct_separation_check(C const&                     c,
                          GermRep<element_t<C>> const& a,
                          GermRep<element_t<C>> const& b,
                          int                          L,
                          std::size_t budget = default_basis_budget) {
    SeparationContext<C> ctx(c, L, budget);
    return direct_separation_check(c, a, b, L, budget, ctx);
  }

  enum class Hausdorff { hausdorff, not_hausdorff, unknown };

  inline char const* to_string(Hausdorff h) {
    switch (h) {
      case Hausdorff::hausdorff:
        return "hausdorff";
      case Hausdorff::not_hausdorff:
        return "not_hausdorff";
      default:
        return "unknown";
    }
  }

  template <typename Elem>
  struct HausdorffVerdict {
    Hausdorff                                          kind = Hausdorff::unknown;
    SemigroupVerdict<Elem>                             continuity;
    std::optional<std::pair<GermRep<Elem>, GermRep<Elem>>> evidence_pair;
  };

  //! Hausdorff iff E-continuous. A discontinuity of the supremum below g at
  //! x yields the non-separable pair (g, x), (g* g, x).
  template <Carrier C>
  HausdorffVerdict<element_t<C>>
  hausdorff_verdict(C const& c, int L, std::size_t budget = default_basis_budget) {
    HausdorffVerdict<element_t<C>> out;
    out.continuity = semigroup_verdict(c, L, budget);
    switch (out.continuity.global) {
      case Verdict::continuous:
        out.kind = Hausdorff::hausdorff;
        break;
      case Verdict::discontinuous: {
        out.kind     = Hausdorff::not_hausdorff;
        auto const g = *out.continuity.discontinuous_at;
        for (auto const& [el, v] : out.continuity.per_element) {
          if (el == g) {
            auto const& x     = *v.witness;
            out.evidence_pair = std::make_pair(
                GermRep<element_t<C>>{g, x},
                GermRep<element_t<C>>{c.compose(c.star(g), g), x});
          }
        }
        break;
      }
      default:
        out.kind = Hausdorff::unknown;
    }
    return out;
  }

  template <typename Elem>
  struct CrossCheck {
    Hausdorff   theorem = Hausdorff::unknown;
    Hausdorff   direct  = Hausdorff::unknown;
    std::size_t pairs         = 0;
    std::size_t separated     = 0;
    std::size_t not_separated = 0;
    std::size_t inconclusive  = 0;
    std::optional<std::pair<GermRep<Elem>, GermRep<Elem>>> first_not_separated;

    bool agree() const noexcept {
      return theorem == direct;
    }
  };

  //! Compares the theorem route with direct separation over every pair of
  //! inequivalent germs with a common base point at truncation L.
  template <Carrier C>
  CrossCheck<element_t<C>>
  theorem_cross_check(C const& c, int L, std::size_t budget = default_basis_budget) {
    using Elem = element_t<C>;
    CrossCheck<Elem> out;
    out.theorem = hausdorff_verdict(c, L, budget).kind;
    SeparationContext<C> ctx(c, L, budget);
    for (auto const& x : ctx.chars) {
      auto classes = germs_over(c, x, L);
      for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
          ++out.pairs;
          auto r = direct_separation_check(
              c, classes[i].rep, classes[j].rep, L, budget, ctx);
          switch (r.kind) {
            case Separation::separated:
              ++out.separated;
              break;
            case Separation::not_separated:
              ++out.not_separated;
              if (!out.first_not_separated) {
                out.first_not_separated
                    = std::make_pair(classes[i].rep, classes[j].rep);
              }
              break;
            default:
              ++out.inconclusive;
          }
        }
      }
    }
    out.direct = out.not_separated > 0  ? Hausdorff::not_hausdorff
                 : out.inconclusive > 0 ? Hausdorff::unknown
                                        : Hausdorff::hausdorff;
    return out;
  }

}  // namespace egroupoid

#endif  // EGROUPOID_GROUPOID_HPP_

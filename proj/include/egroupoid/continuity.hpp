#ifndef EGROUPOID_CONTINUITY_HPP_
#define EGROUPOID_CONTINUITY_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carrier.hpp"
#include "character.hpp"
#include "spectrum.hpp"

namespace egroupoid {

  inline constexpr std::size_t default_basis_budget = 50;

  //! A {0,1}-valued function on X given as the pointwise supremum of the
  //! indicators of a set of idempotents. When the supremum is attained on a
  //! finite set, `maxima` holds it and evaluation is exact at every point.
  template <typename Elem>
  struct SpectrumFunction {
    std::vector<Elem>                join_set;
    std::optional<std::vector<Elem>> maxima;
  };

  template <Carrier C>
  bool value_at(C const&                               c,
                SpectrumFunction<element_t<C>> const&  f,
                Character<element_t<C>> const&         x) {
    auto const& set = f.maxima ? *f.maxima : f.join_set;
    return std::any_of(
        set.begin(), set.end(), [&](auto const& e) { return evaluate(c, x, e); });
  }

  enum class Verdict { continuous, discontinuous, unknown };

  inline char const* to_string(Verdict v) {
    switch (v) {
      case Verdict::continuous:
        return "continuous";
      case Verdict::discontinuous:
        return "discontinuous";
      default:
        return "unknown";
    }
  }

  template <typename Elem>
  struct ContinuityVerdict {
    Verdict                        kind = Verdict::unknown;
    std::vector<Elem>              certificate;  // when continuous
    std::optional<Character<Elem>> witness;      // when discontinuous
    int                            bound      = 0;
    bool                           stabilized = false;
    std::size_t                    neighborhoods_checked = 0;
    std::string                    note;
  };

  template <typename Elem>
  struct WitnessCheck {
    bool        ok = false;
    std::size_t neighborhoods = 0;
    std::string failure;
  };

  //! Checks that x is a discontinuity point of the supremum of `join`:
  //! x(e) = 0 for every listed e, while every basic neighbourhood of x built
  //! at truncation L (at most `budget`) meets carrier(e) for a listed e.
  //! U meets carrier(e) iff eps_{e p} lies in U, p the positive of U.
  template <Carrier C>
  WitnessCheck<element_t<C>>
  verify_witness(C const&                         c,
                 Character<element_t<C>> const&   x,
                 std::vector<element_t<C>> const& join,
                 int                              L,
                 std::size_t                      budget) {
    WitnessCheck<element_t<C>> out;
    if (!in_spectrum(c, x)) {
      out.failure = "witness is not a point of X";
      return out;
    }
    for (auto const& e : join) {
      if (evaluate(c, x, e)) {
        out.failure = "witness lies in carrier(" + c.name(e) + ")";
        return out;
      }
    }
    for (auto const& U : neighborhoods(c, x, L, budget)) {
      ++out.neighborhoods;
      bool meets = false;
      for (auto const& e : join) {
        auto y = Character<element_t<C>>::principal(c.compose(e, U.positive));
        if (contains(c, U, y)) {
          meets = true;
          break;
        }
      }
      if (!meets) {
        out.failure = "a neighbourhood of the witness at "
                      + c.name(U.positive) + " misses every carrier";
        return out;
      }
    }
    out.ok = true;
    return out;
  }

  //! Decides whether the supremum of the down-closed idempotent set
  //! {e : in_join(e)} is attained on a finite set. Every member of the set
  //! lies below `ceiling`; the members found are stored in `members` when
  //! given.
  //!
  //! Finite carriers are decided exhaustively. Otherwise the set is scanned
  //! at three consecutive levels from max(L, base_level, oracle levels). An
  //! oracle-bounded set F certifies when F lies in the scan and every member
  //! lies below F, which is the same as the maximal elements being F at all
  //! three levels. An oracle-unbounded set certifies only when the levels
  //! keep changing and the oracle's witness verifies. Everything else is
  //! Unknown.
  template <Carrier C, typename Pred>
  ContinuityVerdict<element_t<C>>
  assess_join(C const&                                          c,
              Pred&&                                            in_join,
              std::optional<LowerSetShape<element_t<C>>> const& shape,
              int                                               base_level,
              int                                               L,
              std::size_t                                       budget,
              element_t<C> const&                               ceiling,
              std::vector<element_t<C>>*                        members = nullptr) {
    using Elem = element_t<C>;
    ContinuityVerdict<Elem> out;
    out.bound = L;

    std::vector<Elem> set;
    if (c.is_finite()) {
      c.for_each_idempotent(L, [&](Elem const& e) {
        if (in_join(e)) {
          set.push_back(e);
        }
        return true;
      });
      out.kind        = Verdict::continuous;
      out.certificate = maximal_elements(c, set);
      out.stabilized  = true;
      if (members != nullptr) {
        *members = std::move(set);
      }
      return out;
    }

    int h0 = std::max(L, base_level);
    if (shape && shape->bounded) {
      for (auto const& m : shape->maxima) {
        h0 = std::max(h0, c.level(m));
      }
    }
    out.bound = h0 + 2;

    // Idempotents at truncation h are exactly those of level <= h.
    for_each_idempotent_below(c, ceiling, h0 + 2, [&](Elem const& e) {
      if (in_join(e)) {
        set.push_back(e);
      }
      return true;
    });
    struct Publish {
      std::vector<Elem>* to;
      std::vector<Elem>* from;
      ~Publish() {
        if (to != nullptr) {
          *to = std::move(*from);
        }
      }
    } publish{members, &set};

    if (shape && shape->bounded) {
      auto F     = maximal_elements(c, shape->maxima);
      bool sound = std::all_of(F.begin(), F.end(), [&](auto const& f) {
        return in_join(f);
      });
      for (auto const& e : set) {
        if (!sound) {
          break;
        }
        sound = std::any_of(F.begin(), F.end(), [&](auto const& f) {
          return c.compose(e, f) == e;
        });
      }
      if (sound) {
        out.kind        = Verdict::continuous;
        out.stabilized  = true;
        out.certificate = std::move(F);
      } else {
        out.note = "oracle maxima disagree with the truncated lower set";
      }
      return out;
    }

    std::vector<Elem> at_level[3];
    for (int i = 0; i < 3; ++i) {
      std::vector<Elem> sub;
      for (auto const& e : set) {
        if (c.level(e) <= h0 + i) {
          sub.push_back(e);
        }
      }
      at_level[i] = maximal_elements(c, std::move(sub));
    }
    out.stabilized = at_level[0] == at_level[1] && at_level[1] == at_level[2];

    if (!shape) {
      out.note = "no family oracle; the truncated lower set cannot certify";
      return out;
    }

    if (out.stabilized || !shape->witness) {
      out.note = "oracle reports no maximum but the truncation stabilized";
      return out;
    }
    auto check = verify_witness(c, *shape->witness, set, L, budget);
    out.neighborhoods_checked = check.neighborhoods;
    if (check.ok) {
      out.kind    = Verdict::discontinuous;
      out.witness = shape->witness;
    } else {
      out.note = check.failure;
    }
    return out;
  }

  //! All idempotents e <= g at truncation L (e = g e), canonically ordered.
  template <Carrier C>
  std::vector<element_t<C>> lower_idempotents(C const& c, element_t<C> const& g, int L) {
    std::vector<element_t<C>> out;
    for_each_idempotent_below(c, c.compose(g, c.star(g)), L, [&](element_t<C> const& e) {
      if (c.compose(g, e) == e) {
        out.push_back(e);
      }
      return true;
    });
    return out;
  }

  template <Carrier C>
  ContinuityVerdict<element_t<C>>
  e_continuity_verdict(C const&            c,
                       element_t<C> const& g,
                       int                 L,
                       std::size_t         budget = default_basis_budget) {
    return assess_join(
        c,
        [&](element_t<C> const& e) { return c.compose(g, e) == e; },
        c.lower_set_shape(g),
        c.level(g),
        L,
        budget,
        c.compose(g, c.star(g)));
  }

  //! The supremum of the indicators of {e in E : e <= g}.
  template <Carrier C>
  SpectrumFunction<element_t<C>>
  sup_indicator(C const&            c,
                element_t<C> const& g,
                int                 L,
                std::size_t         budget = default_basis_budget) {
    SpectrumFunction<element_t<C>> out;
    auto                           verdict = e_continuity_verdict(c, g, L, budget);
    out.join_set = lower_idempotents(c, g, std::max(L, verdict.bound));
    if (verdict.kind == Verdict::continuous) {
      out.maxima = verdict.certificate;
    }
    return out;
  }

  template <typename Elem>
  struct SemigroupVerdict {
    std::vector<std::pair<Elem, ContinuityVerdict<Elem>>> per_element;
    Verdict                                               global = Verdict::unknown;
    std::optional<Elem>                                   discontinuous_at;
  };

  //! Per-element verdicts at truncation L and the global one: continuous iff
  //! every element is; a single discontinuity decides the global verdict.
  template <Carrier C>
  SemigroupVerdict<element_t<C>>
  semigroup_verdict(C const& c, int L, std::size_t budget = default_basis_budget) {
    SemigroupVerdict<element_t<C>> out;
    bool                           any_unknown = false;
    c.for_each_element(L, [&](element_t<C> const& g) {
      auto v = e_continuity_verdict(c, g, L, budget);
      if (v.kind == Verdict::discontinuous && !out.discontinuous_at) {
        out.discontinuous_at = g;
      }
      any_unknown = any_unknown || v.kind == Verdict::unknown;
      out.per_element.emplace_back(g, std::move(v));
      return true;
    });
    out.global = out.discontinuous_at ? Verdict::discontinuous
                 : any_unknown        ? Verdict::unknown
                                      : Verdict::continuous;
    return out;
  }

  //! Memoized e_continuity_verdict at a fixed truncation and budget.
  template <Carrier C>
  class VerdictCache {
   public:
    VerdictCache(C const& c, int L, std::size_t budget)
        : _c(&c), _L(L), _budget(budget) {}

    ContinuityVerdict<element_t<C>> const& operator()(element_t<C> const& g) {
      auto it = _cache.find(g);
      if (it == _cache.end()) {
        it = _cache.emplace(g, e_continuity_verdict(*_c, g, _L, _budget)).first;
      }
      return it->second;
    }

   private:
    C const*                                                _c;
    int                                                     _L;
    std::size_t                                             _budget;
    std::map<element_t<C>, ContinuityVerdict<element_t<C>>> _cache;
  };

}  // namespace egroupoid

#endif  // EGROUPOID_CONTINUITY_HPP_

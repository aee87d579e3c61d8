#ifndef EGROUPOID_CARRIER_HPP_
#define EGROUPOID_CARRIER_HPP_

#include <algorithm>
#include <concepts>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "character.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "finite_semigroup.hpp"

namespace egroupoid {

  //! What every inverse-semigroup carrier provides. Carriers are immutable
  //! value types; element codes are small regular values ordered canonically.
  template <typename C>
  concept Carrier = requires(C const&                                  c,
                             typename C::element_type const&           a,
                             std::string const&                        s,
                             Character<typename C::element_type> const& x) {
    { c.compose(a, a) } -> std::convertible_to<typename C::element_type>;
    { c.star(a) } -> std::convertible_to<typename C::element_type>;
    { c.is_idempotent(a) } -> std::convertible_to<bool>;
    { c.level(a) } -> std::convertible_to<int>;
    { c.name(a) } -> std::convertible_to<std::string>;
    { c.parse(s) };
    { c.is_finite() } -> std::convertible_to<bool>;
    { c.zero() };
    { c.kill_zero() } -> std::convertible_to<bool>;
    { c.limit_characters(0) };
    { c.limit_contains(s, a) } -> std::convertible_to<bool>;
    { c.limit_act(s, a) };
    { c.limit_filter_element(s, 0) };
    { c.approximants(x, 0) };
    { c.lower_set_shape(a) };
    { c.valid_limit_code(s) } -> std::convertible_to<bool>;
    { c.family_name() } -> std::convertible_to<std::string>;
  };

  template <typename C>
  using element_t = typename C::element_type;

  //! An element together with the carrier it belongs to.
  template <Carrier C>
  class Element {
   public:
    Element(C const& carrier, element_t<C> code)
        : _carrier(&carrier), _code(std::move(code)) {}

    C const& carrier() const noexcept {
      return *_carrier;
    }

    element_t<C> const& code() const noexcept {
      return _code;
    }

    std::string name() const {
      return _carrier->name(_code);
    }

    friend bool operator==(Element const& a, Element const& b) {
      return a._carrier == b._carrier && a._code == b._code;
    }

   private:
    C const*     _carrier;
    element_t<C> _code;
  };

  namespace detail {
    template <Carrier C>
    void same_carrier(Element<C> const& a, Element<C> const& b) {
      if (&a.carrier() != &b.carrier()) {
        throw usage_error("elements belong to different carriers");
      }
    }
  }  // namespace detail

  template <Carrier C>
  Element<C> compose(Element<C> const& a, Element<C> const& b) {
    detail::same_carrier(a, b);
    return {a.carrier(), a.carrier().compose(a.code(), b.code())};
  }

  template <Carrier C>
  Element<C> star(Element<C> const& a) {
    return {a.carrier(), a.carrier().star(a.code())};
  }

  //! g <= h in the natural partial order, i.e. g = h g* g.
  template <Carrier C>
  bool natural_leq(C const& c, element_t<C> const& g, element_t<C> const& h) {
    return g == c.compose(h, c.compose(c.star(g), g));
  }

  template <Carrier C>
  bool natural_leq(Element<C> const& g, Element<C> const& h) {
    detail::same_carrier(g, h);
    return natural_leq(g.carrier(), g.code(), h.code());
  }

  //! All elements at truncation level L, in canonical order.
  //! The idempotents e <= k at truncation L, in canonical order.
  template <Carrier C, typename F>
  void for_each_idempotent_below(C const& c, element_t<C> const& k, int L, F&& f) {
    if constexpr (requires { c.for_each_idempotent_below(k, L, f); }) {
      c.for_each_idempotent_below(k, L, f);
    } else {
      c.for_each_idempotent(L, [&](element_t<C> const& e) {
        return c.compose(e, k) == e ? f(e) : true;
      });
    }
  }

  template <Carrier C>
  std::vector<element_t<C>> elements(C const& c, int L) {
    std::vector<element_t<C>> out;
    c.for_each_element(L, [&](element_t<C> const& g) {
      out.push_back(g);
      return true;
    });
    return out;
  }

  //! All idempotents at truncation level L, in canonical order.
  template <Carrier C>
  std::vector<element_t<C>> idempotents(C const& c, int L) {
    std::vector<element_t<C>> out;
    c.for_each_idempotent(L, [&](element_t<C> const& e) {
      out.push_back(e);
      return true;
    });
    return out;
  }

  //! At most `limit` idempotents at truncation L, in canonical order.
  template <Carrier C>
  std::vector<element_t<C>>
  idempotents_prefix(C const& c, int L, std::size_t limit) {
    std::vector<element_t<C>> out;
    c.for_each_idempotent(L, [&](element_t<C> const& e) {
      out.push_back(e);
      return out.size() < limit;
    });
    return out;
  }

  //! The maximal elements of a set of idempotents, canonically ordered.
  template <Carrier C>
  std::vector<element_t<C>> maximal_elements(C const&                  c,
                                             std::vector<element_t<C>> set) {
    if (!std::is_sorted(set.begin(), set.end())) {
      std::sort(set.begin(), set.end());
    }
    set.erase(std::unique(set.begin(), set.end()), set.end());
    // Running antichain of the maximal elements seen so far; it stays sorted.
    std::vector<element_t<C>> out;
    for (auto const& e : set) {
      bool dominated = std::any_of(out.begin(), out.end(), [&](auto const& m) {
        return c.compose(e, m) == e;
      });
      if (dominated) {
        continue;
      }
      std::erase_if(out, [&](auto const& m) { return c.compose(m, e) == m; });
      out.push_back(e);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Family specification and the closed set of carriers
  ////////////////////////////////////////////////////////////////////////

  enum class FamilyKind { chain_with_symmetry, pure_chain, bicyclic, polycyclic };

  struct FamilySpec {
    FamilyKind family     = FamilyKind::chain_with_symmetry;
    unsigned   alphabet   = 2;  // polycyclic only
    int        truncation = 10;
    bool       oracle     = true;
    bool       kill_zero  = false;
  };

  inline std::optional<FamilyKind> parse_family(std::string const& s) {
    if (s == "chain_with_symmetry") {
      return FamilyKind::chain_with_symmetry;
    }
    if (s == "pure_chain") {
      return FamilyKind::pure_chain;
    }
    if (s == "bicyclic") {
      return FamilyKind::bicyclic;
    }
    if (s == "polycyclic") {
      return FamilyKind::polycyclic;
    }
    return std::nullopt;
  }

  using AnyCarrier
      = std::variant<FiniteInverseSemigroup, ChainFamily, Bicyclic, Polycyclic>;

  inline AnyCarrier make_carrier(FamilySpec const& spec) {
    switch (spec.family) {
      case FamilyKind::chain_with_symmetry:
        return ChainFamily(true, spec.oracle);
      case FamilyKind::pure_chain:
        return ChainFamily(false, spec.oracle);
      case FamilyKind::bicyclic:
        return Bicyclic(spec.oracle);
      case FamilyKind::polycyclic:
        return Polycyclic(spec.alphabet, spec.kill_zero, spec.oracle);
    }
    throw usage_error("unknown family");
  }

}  // namespace egroupoid

#endif  // EGROUPOID_CARRIER_HPP_

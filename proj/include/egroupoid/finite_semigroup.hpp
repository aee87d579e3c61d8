#ifndef EGROUPOID_FINITE_SEMIGROUP_HPP_
#define EGROUPOID_FINITE_SEMIGROUP_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "character.hpp"
#include "errors.hpp"
#include "partial_bijection.hpp"

namespace egroupoid {

  //! A finite inverse semigroup of partial bijections with full product and
  //! star tables. Elements are indices into the canonical element list
  //! (rank descending, then images ascending).
  class FiniteInverseSemigroup {
   public:
    using element_type = std::uint32_t;

    FiniteInverseSemigroup() = default;

    std::size_t size() const noexcept {
      return _elements.size();
    }

    std::size_t degree() const noexcept {
      return _elements.empty() ? 0 : _elements.front().degree();
    }

    PartialBijection const& at(element_type i) const {
      check(i);
      return _elements[i];
    }

    std::optional<element_type> find(PartialBijection const& p) const {
      auto it = _index.find(p);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    element_type compose(element_type a, element_type b) const {
      check(a);
      check(b);
      return _product[a * size() + b];
    }

    element_type star(element_type a) const {
      check(a);
      return _star[a];
    }

    bool is_idempotent(element_type a) const {
      return compose(a, a) == a;
    }

    // Truncation is meaningless for a finite carrier; the whole carrier is
    // enumerated at every level.
    template <typename F>
    void for_each_element(int, F&& f) const {
      for (element_type i = 0; i < size(); ++i) {
        if (!f(i)) {
          return;
        }
      }
    }

    template <typename F>
    void for_each_idempotent(int, F&& f) const {
      for (auto i : _idempotents) {
        if (!f(i)) {
          return;
        }
      }
    }

    int level(element_type) const noexcept {
      return 0;
    }

    std::string name(element_type a) const {
      return at(a).to_string();
    }

    //! Accepts "[s:t;...]" or "#index".
    std::optional<element_type> parse(std::string_view s) const {
      if (!s.empty() && s.front() == '#') {
        try {
          auto i = std::stoul(std::string(s.substr(1)));
          if (i < size()) {
            return static_cast<element_type>(i);
          }
        } catch (std::exception const&) {
        }
        return std::nullopt;
      }
      for (element_type i = 0; i < size(); ++i) {
        if (_elements[i].to_string() == s) {
          return i;
        }
      }
      return std::nullopt;
    }

    bool is_finite() const noexcept {
      return true;
    }

    std::optional<element_type> zero() const {
      return _zero;
    }

    bool kill_zero() const noexcept {
      return _kill_zero;
    }

    void set_kill_zero(bool val) noexcept {
      _kill_zero = val;
    }

    std::string family_name() const {
      return "finite";
    }

    // Every filter of a finite semilattice is principal.
    std::vector<Character<element_type>> limit_characters(int) const {
      return {};
    }

    bool valid_limit_code(std::string const&) const {
      return false;
    }

    bool limit_contains(std::string const&, element_type) const {
      throw usage_error("finite carriers have no limit characters");
    }

    std::optional<std::string> limit_act(std::string const&,
                                         element_type) const {
      throw usage_error("finite carriers have no limit characters");
    }

    element_type limit_filter_element(std::string const&, int) const {
      throw usage_error("finite carriers have no limit characters");
    }

    std::vector<element_type>
    approximants(Character<element_type> const& x, int) const {
      return {x.e};
    }

    // Finite carriers are decided exhaustively, no oracle is needed.
    std::optional<LowerSetShape<element_type>>
    lower_set_shape(element_type) const {
      return std::nullopt;
    }

    friend FiniteInverseSemigroup
    generate_closure(std::span<PartialBijection const> generators,
                     std::size_t                       cap);

   private:
    void check(element_type i) const {
      if (i >= size()) {
        throw usage_error("element #" + std::to_string(i)
                          + " does not belong to this carrier (size "
                          + std::to_string(size()) + ")");
      }
    }

    std::vector<PartialBijection> _elements;
    std::unordered_map<PartialBijection, element_type, PartialBijectionHash>
                                _index;
    std::vector<element_type>   _product;
    std::vector<element_type>   _star;
    std::vector<element_type>   _idempotents;
    std::optional<element_type> _zero;
    bool                        _kill_zero = false;
  };

  //! The inverse semigroup generated by `generators`: the smallest set
  //! containing them that is closed under composition and inversion.
  //! Throws resource_error when more than `cap` elements appear.
  inline FiniteInverseSemigroup
  generate_closure(std::span<PartialBijection const> generators,
                   std::size_t                       cap) {
    if (generators.empty()) {
      throw input_error("at least one generator is required");
    }
    if (cap == 0) {
      throw input_error("cap must be positive");
    }
    auto const deg = generators.front().degree();
    for (auto const& g : generators) {
      if (g.degree() != deg) {
        throw input_error("generators must share one degree");
      }
    }

    std::vector<PartialBijection> gens;
    for (auto const& g : generators) {
      gens.push_back(g);
      gens.push_back(g.inverse());
    }

    std::vector<PartialBijection> elts;
    std::unordered_map<PartialBijection, std::uint32_t, PartialBijectionHash>
         seen;
    auto add = [&](PartialBijection const& p) {
      if (seen.emplace(p, static_cast<std::uint32_t>(elts.size())).second) {
        elts.push_back(p);
        if (elts.size() > cap) {
          throw resource_error("closure exceeds cap of " + std::to_string(cap),
                               elts.size());
        }
      }
    };
    for (auto const& g : gens) {
      add(g);
    }
    // Words in the generators and their inverses; the set so obtained is
    // closed under inversion because (ab)^-1 = b^-1 a^-1.
    for (std::size_t i = 0; i < elts.size(); ++i) {
      for (auto const& g : gens) {
        add(elts[i] * g);
      }
    }

    std::sort(elts.begin(), elts.end(), [](auto const& a, auto const& b) {
      if (a.rank() != b.rank()) {
        return a.rank() > b.rank();
      }
      return a.images() < b.images();
    });

    FiniteInverseSemigroup out;
    auto const             n = elts.size();
    out._elements            = std::move(elts);
    for (std::uint32_t i = 0; i < n; ++i) {
      out._index.emplace(out._elements[i], i);
    }
    out._product.resize(n * n);
    out._star.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        out._product[i * n + j]
            = out._index.at(out._elements[i] * out._elements[j]);
      }
      out._star[i] = out._index.at(out._elements[i].inverse());
      if (out._elements[i].is_idempotent()) {
        out._idempotents.push_back(i);
        if (out._elements[i].rank() == 0) {
          out._zero = i;
        }
      }
    }
    return out;
  }

}  // namespace egroupoid

#endif  // EGROUPOID_FINITE_SEMIGROUP_HPP_

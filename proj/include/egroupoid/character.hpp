#ifndef EGROUPOID_CHARACTER_HPP_
#define EGROUPOID_CHARACTER_HPP_

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace egroupoid {

  enum class CharacterKind { principal, limit };

  //! A point of the spectrum X, i.e. a filter on the idempotent semilattice.
  //!
  //! Principal characters are stored by the generating idempotent e (filter
  //! {f : f >= e}); every other character is stored by a carrier-specific
  //! canonical code, and its membership predicate is supplied by the carrier.
  //! Two characters are equal iff their kinds and canonical data agree.
  template <typename Elem>
  struct Character {
    CharacterKind kind = CharacterKind::principal;
    Elem          e{};
    std::string   code;

    static Character principal(Elem idem) {
      return Character{CharacterKind::principal, std::move(idem), {}};
    }

    static Character limit(std::string c) {
      return Character{CharacterKind::limit, Elem{}, std::move(c)};
    }

    bool is_principal() const noexcept {
      return kind == CharacterKind::principal;
    }

    friend bool operator==(Character const&, Character const&) = default;
    friend auto operator<=>(Character const&, Character const&) = default;
  };

  //! Exact description of a set of idempotents {e : e <= g} (or a similar
  //! down-closed join set) supplied by a family oracle.
  //!
  //! bounded: the set is the down-closure of the finite set `maxima`.
  //! otherwise: the supremum is not attained; `witness` is a point of X at
  //! which the supremum function is discontinuous.
  template <typename Elem>
  struct LowerSetShape {
    bool                           bounded = true;
    std::vector<Elem>              maxima;
    std::optional<Character<Elem>> witness;
  };

}  // namespace egroupoid

#endif  // EGROUPOID_CHARACTER_HPP_

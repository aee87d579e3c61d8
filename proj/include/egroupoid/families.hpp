#ifndef EGROUPOID_FAMILIES_HPP_
#define EGROUPOID_FAMILIES_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "character.hpp"
#include "errors.hpp"

namespace egroupoid {

  ////////////////////////////////////////////////////////////////////////
  // Chains {1, e1 < e2 < ... < 1}, optionally with a symmetry S
  ////////////////////////////////////////////////////////////////////////

  struct ChainElement {
    enum class Kind : std::uint8_t { one, symmetry, idempotent };
    Kind          kind = Kind::one;
    std::uint32_t n    = 0;  // index of e_n when kind == idempotent

    static constexpr ChainElement one() {
      return {};
    }
    static constexpr ChainElement symmetry() {
      return {Kind::symmetry, 0};
    }
    static constexpr ChainElement e(std::uint32_t i) {
      return {Kind::idempotent, i};
    }

    friend bool operator==(ChainElement const&, ChainElement const&) = default;
    friend auto operator<=>(ChainElement const&, ChainElement const&) = default;
  };

  //! The abelian inverse semigroup {1, S, e1, e2, ...} with S^2 = 1, S* = S,
  //! S e_n = e_n S = e_n and e_n e_m = e_min(n,m); without the symmetry it is
  //! the bare chain {1, e1, e2, ...}. Truncation L keeps e1, ..., eL.
  class ChainFamily {
   public:
    using element_type = ChainElement;

    explicit ChainFamily(bool with_symmetry, bool oracle = true)
        : _with_symmetry(with_symmetry), _oracle(oracle) {}

    bool has_symmetry() const noexcept {
      return _with_symmetry;
    }

    element_type compose(element_type a, element_type b) const {
      check(a);
      check(b);
      using K = ChainElement::Kind;
      if (a.kind == K::one) {
        return b;
      }
      if (b.kind == K::one) {
        return a;
      }
      if (a.kind == K::symmetry && b.kind == K::symmetry) {
        return ChainElement::one();
      }
      if (a.kind == K::symmetry) {
        return b;
      }
      if (b.kind == K::symmetry) {
        return a;
      }
      return ChainElement::e(std::min(a.n, b.n));
    }

    element_type star(element_type a) const {
      check(a);
      return a;
    }

    bool is_idempotent(element_type a) const {
      check(a);
      return a.kind != ChainElement::Kind::symmetry;
    }

    template <typename F>
    void for_each_element(int L, F&& f) const {
      if (!f(ChainElement::one())) {
        return;
      }
      if (_with_symmetry && !f(ChainElement::symmetry())) {
        return;
      }
      for (int i = 1; i <= L; ++i) {
        if (!f(ChainElement::e(static_cast<std::uint32_t>(i)))) {
          return;
        }
      }
    }

    template <typename F>
    void for_each_idempotent(int L, F&& f) const {
      if (!f(ChainElement::one())) {
        return;
      }
      for (int i = 1; i <= L; ++i) {
        if (!f(ChainElement::e(static_cast<std::uint32_t>(i)))) {
          return;
        }
      }
    }

    int level(element_type a) const noexcept {
      return static_cast<int>(a.n);
    }

    std::string name(element_type a) const {
      switch (a.kind) {
        case ChainElement::Kind::one:
          return "1";
        case ChainElement::Kind::symmetry:
          return "S";
        default:
          return "e" + std::to_string(a.n);
      }
    }

    std::optional<element_type> parse(std::string_view s) const {
      if (s == "1") {
        return ChainElement::one();
      }
      if (s == "S") {
        if (!_with_symmetry) {
          return std::nullopt;
        }
        return ChainElement::symmetry();
      }
      if (s.size() >= 2 && s.front() == 'e'
          && std::all_of(s.begin() + 1, s.end(), [](char c) {
               return c >= '0' && c <= '9';
             })
          && s.size() < 11) {
        auto n = std::stoul(std::string(s.substr(1)));
        if (n >= 1) {
          return ChainElement::e(static_cast<std::uint32_t>(n));
        }
      }
      return std::nullopt;
    }

    bool is_finite() const noexcept {
      return false;
    }

    std::optional<element_type> zero() const {
      return std::nullopt;
    }

    bool kill_zero() const noexcept {
      return false;
    }

    std::string family_name() const {
      return _with_symmetry ? "chain_with_symmetry" : "pure_chain";
    }

    // The only point of X that is not isolated is the principal character of
    // 1, the limit of eps_{e_n}; it is reported here as the family's boundary
    // point.
    std::vector<Character<element_type>> limit_characters(int) const {
      return {Character<element_type>::principal(ChainElement::one())};
    }

    bool valid_limit_code(std::string const&) const {
      return false;
    }

    bool limit_contains(std::string const&, element_type) const {
      throw usage_error("chain families have no non-principal characters");
    }

    std::optional<std::string> limit_act(std::string const&,
                                         element_type) const {
      throw usage_error("chain families have no non-principal characters");
    }

    element_type limit_filter_element(std::string const&, int) const {
      throw usage_error("chain families have no non-principal characters");
    }

    std::vector<element_type>
    approximants(Character<element_type> const& x, int L) const {
      if (x.is_principal() && x.e == ChainElement::one()) {
        std::vector<element_type> out;
        for (int i = 1; i <= L; ++i) {
          out.push_back(ChainElement::e(static_cast<std::uint32_t>(i)));
        }
        return out;
      }
      return {x.e};
    }

    std::optional<LowerSetShape<element_type>>
    lower_set_shape(element_type g) const {
      check(g);
      if (!_oracle) {
        return std::nullopt;
      }
      LowerSetShape<element_type> out;
      if (g.kind == ChainElement::Kind::symmetry) {
        // e_n <= S for every n, and 1 is not: the supremum is never attained.
        out.bounded = false;
        out.witness = Character<element_type>::principal(ChainElement::one());
      } else {
        out.maxima = {g};
      }
      return out;
    }

   private:
    void check(element_type a) const {
      if (a.kind == ChainElement::Kind::symmetry && !_with_symmetry) {
        throw usage_error("S does not belong to pure_chain");
      }
      if (a.kind == ChainElement::Kind::idempotent && a.n == 0) {
        throw usage_error("chain idempotents are indexed from 1");
      }
    }

    bool _with_symmetry;
    bool _oracle;
  };

  ////////////////////////////////////////////////////////////////////////
  // Bicyclic monoid
  ////////////////////////////////////////////////////////////////////////

  struct BicyclicElement {
    std::uint32_t m = 0;
    std::uint32_t n = 0;

    friend bool operator==(BicyclicElement const&,
                           BicyclicElement const&) = default;
    friend auto operator<=>(BicyclicElement const&,
                            BicyclicElement const&) = default;
  };

  //! Pairs (m, n) with (m,n)(k,l) = (m - n + max(n,k), l - k + max(n,k)) and
  //! (m,n)* = (n,m). Truncation L keeps m, n <= L.
  //!
  //! The single non-principal character x_inf (code "inf") is the filter of
  //! all idempotents.
  class Bicyclic {
   public:
    using element_type = BicyclicElement;

    static constexpr char const* infinity_code = "inf";

    explicit Bicyclic(bool oracle = true) : _oracle(oracle) {}

    element_type compose(element_type a, element_type b) const {
      auto const M = std::max(a.n, b.m);
      return {a.m - a.n + M, b.n - b.m + M};
    }

    element_type star(element_type a) const {
      return {a.n, a.m};
    }

    bool is_idempotent(element_type a) const {
      return a.m == a.n;
    }

    template <typename F>
    void for_each_element(int L, F&& f) const {
      for (std::uint32_t m = 0; m <= static_cast<std::uint32_t>(L); ++m) {
        for (std::uint32_t n = 0; n <= static_cast<std::uint32_t>(L); ++n) {
          if (!f(element_type{m, n})) {
            return;
          }
        }
      }
    }

    template <typename F>
    void for_each_idempotent(int L, F&& f) const {
      for (std::uint32_t k = 0; k <= static_cast<std::uint32_t>(L); ++k) {
        if (!f(element_type{k, k})) {
          return;
        }
      }
    }

    int level(element_type a) const noexcept {
      return static_cast<int>(std::max(a.m, a.n));
    }

    std::string name(element_type a) const {
      return "(" + std::to_string(a.m) + "," + std::to_string(a.n) + ")";
    }

    std::optional<element_type> parse(std::string_view s) const {
      if (s.size() < 5 || s.front() != '(' || s.back() != ')') {
        return std::nullopt;
      }
      auto body  = s.substr(1, s.size() - 2);
      auto comma = body.find(',');
      if (comma == std::string_view::npos) {
        return std::nullopt;
      }
      auto num = [](std::string_view t) -> std::optional<std::uint32_t> {
        if (t.empty() || t.size() > 9
            || !std::all_of(
                t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; })) {
          return std::nullopt;
        }
        return static_cast<std::uint32_t>(std::stoul(std::string(t)));
      };
      auto m = num(body.substr(0, comma));
      auto n = num(body.substr(comma + 1));
      if (!m || !n) {
        return std::nullopt;
      }
      return element_type{*m, *n};
    }

    bool is_finite() const noexcept {
      return false;
    }

    std::optional<element_type> zero() const {
      return std::nullopt;
    }

    bool kill_zero() const noexcept {
      return false;
    }

    std::string family_name() const {
      return "bicyclic";
    }

    std::vector<Character<element_type>> limit_characters(int) const {
      return {Character<element_type>::limit(infinity_code)};
    }

    bool valid_limit_code(std::string const& code) const {
      return code == infinity_code;
    }

    bool limit_contains(std::string const& code, element_type e) const {
      check_code(code);
      if (!is_idempotent(e)) {
        throw usage_error("character evaluated at a non-idempotent");
      }
      return true;
    }

    // x_inf(g e g*) = 1 for every idempotent e, since there is no zero.
    std::optional<std::string> limit_act(std::string const& code,
                                         element_type) const {
      check_code(code);
      return code;
    }

    element_type limit_filter_element(std::string const& code,
                                      int                depth) const {
      check_code(code);
      auto d = static_cast<std::uint32_t>(std::max(depth, 0));
      return {d, d};
    }

    std::vector<element_type>
    approximants(Character<element_type> const& x, int L) const {
      if (x.is_principal()) {
        return {x.e};
      }
      std::vector<element_type> out;
      for_each_idempotent(L, [&](element_type e) {
        out.push_back(e);
        return true;
      });
      return out;
    }

    // (k,k) <= (m,n) iff m = n and k >= n.
    std::optional<LowerSetShape<element_type>>
    lower_set_shape(element_type g) const {
      if (!_oracle) {
        return std::nullopt;
      }
      LowerSetShape<element_type> out;
      if (g.m == g.n) {
        out.maxima = {g};
      }
      return out;
    }

   private:
    void check_code(std::string const& code) const {
      if (code != infinity_code) {
        throw usage_error("unknown bicyclic limit code '" + code + "'");
      }
    }

    bool _oracle;
  };

  ////////////////////////////////////////////////////////////////////////
  // Polycyclic monoid P_n
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Shortlex order on words.
    inline bool shortlex_less(std::string const& a, std::string const& b) {
      if (a.size() != b.size()) {
        return a.size() < b.size();
      }
      return a < b;
    }

    inline bool is_prefix(std::string_view p, std::string_view w) {
      return p.size() <= w.size() && w.substr(0, p.size()) == p;
    }
  }  // namespace detail

  //! S_mu S_nu^*, or the zero element.
  struct PolycyclicElement {
    bool        is_zero = false;
    std::string mu;
    std::string nu;

    static PolycyclicElement zero() {
      return {true, {}, {}};
    }

    friend bool operator==(PolycyclicElement const&,
                           PolycyclicElement const&) = default;

    friend std::strong_ordering operator<=>(PolycyclicElement const& a,
                                            PolycyclicElement const& b) {
      if (a.is_zero != b.is_zero) {
        return a.is_zero ? std::strong_ordering::less
                         : std::strong_ordering::greater;
      }
      if (a.mu != b.mu) {
        return detail::shortlex_less(a.mu, b.mu) ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
      }
      if (a.nu != b.nu) {
        return detail::shortlex_less(a.nu, b.nu) ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
      }
      return std::strong_ordering::equal;
    }
  };

  //! The polycyclic monoid on letters 1..n (n in 2..9), elements (mu, nu)
  //! standing for S_mu S_nu^* plus a zero, with the prefix-cancellation
  //! product. Truncation L keeps words of length <= L.
  //!
  //! Non-principal characters are the filters of prefixes of an infinite word;
  //! eventually periodic words u v v v ... are coded "u(v)" in a canonical
  //! form (v primitive, u as short as possible).
  class Polycyclic {
   public:
    using element_type = PolycyclicElement;

    //! Largest |u| + |v| of the eventually periodic limit codes enumerated.
    static constexpr int max_limit_code_length = 4;

    explicit Polycyclic(unsigned alphabet,
                        bool     kill_zero = false,
                        bool     oracle    = true)
        : _alphabet(alphabet), _kill_zero(kill_zero), _oracle(oracle) {
      if (alphabet < 2 || alphabet > 9) {
        throw input_error("polycyclic alphabet size must be in 2..9");
      }
    }

    unsigned alphabet() const noexcept {
      return _alphabet;
    }

    element_type compose(element_type const& a, element_type const& b) const {
      if (a.is_zero || b.is_zero) {
        return element_type::zero();
      }
      // S_mu S_nu^* S_alpha S_beta^*
      if (detail::is_prefix(a.nu, b.mu)) {
        element_type out{false, a.mu, b.nu};
        out.mu.append(b.mu, a.nu.size());
        return out;
      }
      if (detail::is_prefix(b.mu, a.nu)) {
        element_type out{false, a.mu, b.nu};
        out.nu.append(a.nu, b.mu.size());
        return out;
      }
      return element_type::zero();
    }

    element_type star(element_type const& a) const {
      if (a.is_zero) {
        return a;
      }
      return {false, a.nu, a.mu};
    }

    bool is_idempotent(element_type const& a) const {
      return a.is_zero || a.mu == a.nu;
    }

    //! Words of length <= L in shortlex order.
    std::vector<std::string> words(int L) const {
      std::vector<std::string> out{""};
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (static_cast<int>(out[i].size()) == L) {
          continue;
        }
        for (unsigned c = 1; c <= _alphabet; ++c) {
          out.push_back(out[i] + static_cast<char>('0' + c));
        }
      }
      return out;
    }

    template <typename F>
    void for_each_element(int L, F&& f) const {
      if (!f(element_type::zero())) {
        return;
      }
      auto const w = words(L);
      for (auto const& mu : w) {
        for (auto const& nu : w) {
          if (!f(element_type{false, mu, nu})) {
            return;
          }
        }
      }
    }

    template <typename F>
    void for_each_idempotent(int L, F&& f) const {
      if (!f(element_type::zero())) {
        return;
      }
      // Generated lazily so callers can stop early at large truncations.
      std::vector<std::string> frontier{""};
      for (int len = 0; len <= L; ++len) {
        std::vector<std::string> next;
        for (auto const& w : frontier) {
          if (!f(element_type{false, w, w})) {
            return;
          }
          if (len < L) {
            for (unsigned c = 1; c <= _alphabet; ++c) {
              next.push_back(w + static_cast<char>('0' + c));
            }
          }
        }
        frontier = std::move(next);
      }
    }

    //! The idempotents below k at truncation L, in the order of
    //! for_each_idempotent: 0, then (k w, k w) shortlex in w.
    template <typename F>
    void for_each_idempotent_below(element_type const& k, int L, F&& f) const {
      if (!f(element_type::zero()) || k.is_zero) {
        return;
      }
      std::vector<std::string> frontier{k.mu};
      for (int len = static_cast<int>(k.mu.size()); len <= L; ++len) {
        std::vector<std::string> next;
        for (auto const& w : frontier) {
          if (!f(element_type{false, w, w})) {
            return;
          }
          if (len < L) {
            for (unsigned c = 1; c <= _alphabet; ++c) {
              next.push_back(w + static_cast<char>('0' + c));
            }
          }
        }
        frontier = std::move(next);
      }
    }

    int level(element_type const& a) const noexcept {
      return static_cast<int>(std::max(a.mu.size(), a.nu.size()));
    }

    std::string name(element_type const& a) const {
      if (a.is_zero) {
        return "0";
      }
      auto word = [](std::string const& w) { return w.empty() ? "-" : w; };
      return word(a.mu) + "|" + word(a.nu);
    }

    std::optional<element_type> parse(std::string_view s) const {
      if (s == "0") {
        return element_type::zero();
      }
      auto bar = s.find('|');
      if (bar == std::string_view::npos) {
        return std::nullopt;
      }
      auto mu = parse_word(s.substr(0, bar));
      auto nu = parse_word(s.substr(bar + 1));
      if (!mu || !nu) {
        return std::nullopt;
      }
      return element_type{false, *mu, *nu};
    }

    bool is_finite() const noexcept {
      return false;
    }

    std::optional<element_type> zero() const {
      return element_type::zero();
    }

    bool kill_zero() const noexcept {
      return _kill_zero;
    }

    std::string family_name() const {
      return "polycyclic";
    }

    //! Canonical code of the infinite word u v v v ...
    std::string canonical_code(std::string u, std::string v) const {
      if (v.empty()) {
        throw usage_error("periodic part of a limit code must be nonempty");
      }
      // Primitive root of v.
      for (std::size_t p = 1; p <= v.size(); ++p) {
        if (v.size() % p != 0) {
          continue;
        }
        bool periodic = true;
        for (std::size_t i = p; i < v.size() && periodic; ++i) {
          periodic = v[i] == v[i - p];
        }
        if (periodic) {
          v.resize(p);
          break;
        }
      }
      while (!u.empty() && u.back() == v.back()) {
        v = v.back() + v.substr(0, v.size() - 1);
        u.pop_back();
      }
      return u + "(" + v + ")";
    }

    bool valid_limit_code(std::string const& code) const {
      auto parts = split_code(code);
      if (!parts) {
        return false;
      }
      return canonical_code(parts->first, parts->second) == code;
    }

    std::vector<Character<element_type>> limit_characters(int L) const {
      int const                 bound = std::min(L, max_limit_code_length);
      std::set<std::string>     codes;
      std::vector<std::string>  w     = words(bound);
      for (auto const& u : w) {
        for (auto const& v : w) {
          if (!v.empty()
              && static_cast<int>(u.size() + v.size()) <= bound) {
            codes.insert(canonical_code(u, v));
          }
        }
      }
      std::vector<std::string> sorted(codes.begin(), codes.end());
      std::sort(sorted.begin(), sorted.end(), detail::shortlex_less);
      std::vector<Character<element_type>> out;
      for (auto& c : sorted) {
        out.push_back(Character<element_type>::limit(std::move(c)));
      }
      return out;
    }

    bool limit_contains(std::string const& code, element_type const& e) const {
      if (!is_idempotent(e)) {
        throw usage_error("character evaluated at a non-idempotent");
      }
      auto [u, v] = checked_split(code);
      if (e.is_zero) {
        return false;
      }
      for (std::size_t i = 0; i < e.mu.size(); ++i) {
        if (e.mu[i] != letter(u, v, i)) {
          return false;
        }
      }
      return true;
    }

    // (x_w . g)(e) = x_w(g e g*): nonzero iff mu is a prefix of w = mu w',
    // and then x_w . g = x_{nu w'}.
    std::optional<std::string> limit_act(std::string const&  code,
                                         element_type const& g) const {
      auto [u, v] = checked_split(code);
      if (g.is_zero) {
        return std::nullopt;
      }
      for (std::size_t i = 0; i < g.mu.size(); ++i) {
        if (g.mu[i] != letter(u, v, i)) {
          return std::nullopt;
        }
      }
      if (g.mu.size() <= u.size()) {
        return canonical_code(g.nu + u.substr(g.mu.size()), v);
      }
      auto k = (g.mu.size() - u.size()) % v.size();
      return canonical_code(g.nu, v.substr(k) + v.substr(0, k));
    }

    element_type limit_filter_element(std::string const& code,
                                      int                depth) const {
      auto [u, v] = checked_split(code);
      std::string w;
      for (int i = 0; i < depth; ++i) {
        w += letter(u, v, static_cast<std::size_t>(i));
      }
      return {false, w, w};
    }

    std::vector<element_type>
    approximants(Character<element_type> const& x, int L) const {
      if (x.is_principal()) {
        return {x.e};
      }
      std::vector<element_type> out;
      for (int d = 0; d <= L; ++d) {
        out.push_back(limit_filter_element(x.code, d));
      }
      return out;
    }

    // (a,a) <= (mu,nu) iff mu = nu and nu is a prefix of a; 0 <= everything.
    std::optional<LowerSetShape<element_type>>
    lower_set_shape(element_type const& g) const {
      if (!_oracle) {
        return std::nullopt;
      }
      LowerSetShape<element_type> out;
      if (!g.is_zero && g.mu == g.nu) {
        out.maxima = {g};
      } else {
        out.maxima = {element_type::zero()};
      }
      return out;
    }

   private:
    std::optional<std::string> parse_word(std::string_view s) const {
      if (s == "-") {
        return std::string{};
      }
      if (s.empty()) {
        return std::nullopt;
      }
      for (char c : s) {
        if (c < '1' || c > static_cast<char>('0' + _alphabet)) {
          return std::nullopt;
        }
      }
      return std::string(s);
    }

    std::optional<std::pair<std::string, std::string>>
    split_code(std::string const& code) const {
      auto open = code.find('(');
      if (open == std::string::npos || code.size() < open + 3
          || code.back() != ')') {
        return std::nullopt;
      }
      std::string u = code.substr(0, open);
      std::string v = code.substr(open + 1, code.size() - open - 2);
      if (v.empty()) {
        return std::nullopt;
      }
      for (char c : u + v) {
        if (c < '1' || c > static_cast<char>('0' + _alphabet)) {
          return std::nullopt;
        }
      }
      return std::make_pair(u, v);
    }

    std::pair<std::string, std::string>
    checked_split(std::string const& code) const {
      auto parts = split_code(code);
      if (!parts) {
        throw usage_error("malformed polycyclic limit code '" + code + "'");
      }
      return *parts;
    }

    static char
    letter(std::string const& u, std::string const& v, std::size_t i) {
      return i < u.size() ? u[i] : v[(i - u.size()) % v.size()];
    }

    unsigned _alphabet;
    bool     _kill_zero;
    bool     _oracle;
  };

}  // namespace egroupoid

#endif  // EGROUPOID_FAMILIES_HPP_

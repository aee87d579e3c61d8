#ifndef EGROUPOID_KTHEORY_HPP_
#define EGROUPOID_KTHEORY_HPP_

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "families.hpp"
#include "rational.hpp"

namespace egroupoid {

  enum class AfVariant { A, B };

  inline char const* to_string(AfVariant v) {
    return v == AfVariant::A ? "A" : "B";
  }

  inline std::optional<AfVariant> parse_variant(std::string const& s) {
    if (s == "A" || s == "a") {
      return AfVariant::A;
    }
    if (s == "B" || s == "b") {
      return AfVariant::B;
    }
    return std::nullopt;
  }

  namespace detail {

    //! A rational linear combination of basis symbols, multiplied through a
    //! basis product that returns nullopt for zero.
    template <typename Key>
    struct Combination {
      std::map<Key, Rational> terms;

      void add(Key const& k, Rational const& r) {
        auto& v = terms[k];
        v += r;
        if (v == 0) {
          terms.erase(k);
        }
      }

      friend Combination operator+(Combination a, Combination const& b) {
        for (auto const& [k, r] : b.terms) {
          a.add(k, r);
        }
        return a;
      }

      friend Combination operator-(Combination a, Combination const& b) {
        for (auto const& [k, r] : b.terms) {
          a.add(k, -r);
        }
        return a;
      }

      Combination scaled(Rational const& s) const {
        Combination out;
        for (auto const& [k, r] : terms) {
          out.add(k, s * r);
        }
        return out;
      }

      bool is_zero() const {
        return terms.empty();
      }

      friend bool operator==(Combination const&, Combination const&) = default;
    };

    template <typename Key>
    using BasisProduct = std::function<std::optional<Key>(Key const&, Key const&)>;

    template <typename Key>
    Combination<Key> multiply(BasisProduct<Key> const& mul,
                              Combination<Key> const&  a,
                              Combination<Key> const&  b) {
      Combination<Key> out;
      for (auto const& [ka, ra] : a.terms) {
        for (auto const& [kb, rb] : b.terms) {
          if (auto k = mul(ka, kb)) {
            out.add(*k, ra * rb);
          }
        }
      }
      return out;
    }

    template <typename Key>
    Combination<Key> symbol(Key const& k, Rational r = 1) {
      Combination<Key> out;
      out.add(k, r);
      return out;
    }

    // A variant: the group algebra span of 1, S, e_k.
    using AKey = ChainElement;
    // B variant: eps_a x g with a an idempotent, normalized to a <= g g*
    // and g = a g.
    using BKey = std::pair<ChainElement, ChainElement>;

    inline ChainFamily const& chain() {
      static ChainFamily const c(true);
      return c;
    }

    inline BasisProduct<AKey> a_product() {
      return [](AKey const& x, AKey const& y) -> std::optional<AKey> {
        return chain().compose(x, y);
      };
    }

    inline std::optional<BKey> b_normalize(ChainElement const& a, ChainElement const& g) {
      auto const& c = chain();
      if (!(c.compose(a, c.compose(g, c.star(g))) == a)) {
        return std::nullopt;
      }
      return BKey{a, c.compose(a, g)};
    }

    //! (eps_a x g)(eps_b x h) = [b <= g* g][a = g b g*] eps_a x g h.
    inline BasisProduct<BKey> b_product() {
      return [](BKey const& x, BKey const& y) -> std::optional<BKey> {
        auto const& c = chain();
        auto const& [a, g] = x;
        auto const& [b, h] = y;
        if (!(c.compose(b, c.compose(c.star(g), g)) == b)) {
          return std::nullopt;
        }
        if (!(c.compose(g, c.compose(b, c.star(g))) == a)) {
          return std::nullopt;
        }
        return b_normalize(a, c.compose(g, h));
      };
    }

    inline std::string key_name(AKey const& k) {
      return chain().name(k);
    }

    inline std::string key_name(BKey const& k) {
      return "eps_" + chain().name(k.first) + " x " + chain().name(k.second);
    }

    template <typename Key>
    std::string expression(Combination<Key> const& v) {
      if (v.is_zero()) {
        return "0";
      }
      std::string out;
      for (auto const& [k, r] : v.terms) {
        auto coef = r;
        if (out.empty()) {
          out += coef < 0 ? "-" : "";
        } else {
          out += coef < 0 ? " - " : " + ";
        }
        if (coef < 0) {
          coef = -coef;
        }
        if (coef != 1) {
          out += to_string(coef) + "*";
        }
        out += key_name(k);
      }
      return out;
    }

    template <typename Key>
    struct SymbolicStage {
      std::vector<std::string>      names;
      std::vector<Combination<Key>> projections;
      std::vector<Combination<Key>> generators;
      BasisProduct<Key>             mul;
    };

    inline SymbolicStage<AKey> a_stage(int n) {
      SymbolicStage<AKey> s;
      s.mul              = a_product();
      auto const one     = symbol(ChainElement::one());
      auto const S       = symbol(ChainElement::symmetry());
      auto const half    = Rational(1, 2);
      auto const e       = [](int k) { return symbol(ChainElement::e(static_cast<std::uint32_t>(k))); };
      s.generators       = {one, S};
      s.names.push_back("(1-S)/2");
      s.projections.push_back((one - S).scaled(half));
      for (int k = 1; k <= n; ++k) {
        s.generators.push_back(e(k));
        if (k == 1) {
          s.names.push_back("e1");
          s.projections.push_back(e(1));
        } else {
          s.names.push_back("e" + std::to_string(k) + "-e" + std::to_string(k - 1));
          s.projections.push_back(e(k) - e(k - 1));
        }
      }
      auto top = (one + S).scaled(half);
      if (n == 0) {
        s.names.push_back("(1+S)/2");
      } else {
        s.names.push_back("(1+S)/2-e" + std::to_string(n));
        top = top - e(n);
      }
      s.projections.push_back(std::move(top));
      return s;
    }

    inline SymbolicStage<BKey> b_stage(int n) {
      SymbolicStage<BKey> s;
      s.mul           = b_product();
      auto const one  = ChainElement::one();
      auto const S    = ChainElement::symmetry();
      auto const half = Rational(1, 2);
      auto const u    = symbol(BKey{one, one});
      auto const v    = symbol(BKey{one, S});
      s.generators    = {u, v};
      s.names         = {"eps_1 x (1-S)/2", "eps_1 x (1+S)/2"};
      s.projections   = {(u - v).scaled(half), (u + v).scaled(half)};
      for (int k = 1; k <= n; ++k) {
        auto const ek = ChainElement::e(static_cast<std::uint32_t>(k));
        auto const p  = symbol(BKey{ek, ek});
        s.generators.push_back(p);
        s.names.push_back("eps_e" + std::to_string(k) + " x e" + std::to_string(k));
        s.projections.push_back(p);
      }
      return s;
    }

  }  // namespace detail

  struct MinimalProjection {
    std::string name;
    std::string expression;
  };

  struct BratteliStage {
    AfVariant                      variant = AfVariant::A;
    int                            level   = 0;
    std::vector<MinimalProjection> minimal_projections;
    std::size_t                    rank = 0;
    // p_i^2 = p_i != 0, p_i p_j = 0 (i != j)
    bool orthogonal_idempotents = false;
    // sum p_i is a unit for every generator
    bool sums_to_unit = false;
    // every generator is a combination of the p_i
    bool spans_generators = false;

    bool verified() const noexcept {
      return orthogonal_idempotents && sums_to_unit && spans_generators;
    }
  };

  using InclusionMatrix = std::vector<std::vector<int>>;

  namespace detail {

    template <typename Key>
    BratteliStage describe(AfVariant variant, int n, SymbolicStage<Key> const& s) {
      BratteliStage out;
      out.variant = variant;
      out.level   = n;
      out.rank    = s.projections.size();
      for (std::size_t i = 0; i < s.projections.size(); ++i) {
        out.minimal_projections.push_back({s.names[i], expression(s.projections[i])});
      }
      auto const& P  = s.projections;
      bool        ok = true;
      for (std::size_t i = 0; i < P.size() && ok; ++i) {
        ok = !P[i].is_zero() && multiply(s.mul, P[i], P[i]) == P[i];
        for (std::size_t j = 0; j < P.size() && ok; ++j) {
          ok = i == j || multiply(s.mul, P[i], P[j]).is_zero();
        }
      }
      out.orthogonal_idempotents = ok;

      Combination<Key> unit;
      for (auto const& p : P) {
        unit = unit + p;
      }
      out.sums_to_unit = std::all_of(s.generators.begin(), s.generators.end(), [&](auto const& x) {
        return multiply(s.mul, unit, x) == x && multiply(s.mul, x, unit) == x;
      });

      // x p_i = lambda_i p_i for every i, and x = sum lambda_i p_i.
      out.spans_generators = std::all_of(
          s.generators.begin(), s.generators.end(), [&](auto const& x) {
            Combination<Key> rebuilt;
            for (auto const& p : P) {
              auto const xp = multiply(s.mul, x, p);
              if (xp.is_zero()) {
                continue;
              }
              auto const& [k, r] = *p.terms.begin();
              auto const  it     = xp.terms.find(k);
              if (it == xp.terms.end()) {
                return false;
              }
              auto const lambda = it->second / r;
              if (!(xp == p.scaled(lambda))) {
                return false;
              }
              rebuilt = rebuilt + xp;
            }
            return rebuilt == x;
          });
      return out;
    }

    //! M[i][j] = 1 iff q_j <= p_i; throws if some p_i q_j is neither 0 nor
    //! q_j, or if p_i is not the sum of the q_j below it.
    template <typename Key>
    InclusionMatrix include(SymbolicStage<Key> const& from, SymbolicStage<Key> const& to) {
      InclusionMatrix M(from.projections.size(),
                        std::vector<int>(to.projections.size(), 0));
      for (std::size_t i = 0; i < from.projections.size(); ++i) {
        Combination<Key> sum;
        for (std::size_t j = 0; j < to.projections.size(); ++j) {
          auto const pq = multiply(from.mul, from.projections[i], to.projections[j]);
          if (pq == to.projections[j]) {
            M[i][j] = 1;
            sum     = sum + pq;
          } else if (!pq.is_zero()) {
            throw usage_error("stage projections are not nested");
          }
        }
        if (!(sum == from.projections[i])) {
          throw usage_error("projection is not a sum of next-stage projections");
        }
      }
      return M;
    }

  }  // namespace detail

  inline BratteliStage stage(AfVariant variant, int n) {
    if (n < 0) {
      throw usage_error("stage level must be >= 0");
    }
    return variant == AfVariant::A ? detail::describe(variant, n, detail::a_stage(n))
                                   : detail::describe(variant, n, detail::b_stage(n));
  }

  inline InclusionMatrix inclusion(AfVariant variant, int n) {
    if (n < 0) {
      throw usage_error("inclusion level must be >= 0");
    }
    return variant == AfVariant::A
               ? detail::include(detail::a_stage(n), detail::a_stage(n + 1))
               : detail::include(detail::b_stage(n), detail::b_stage(n + 1));
  }

  inline InclusionMatrix compose_inclusions(InclusionMatrix const& a, InclusionMatrix const& b) {
    InclusionMatrix out(a.size(), std::vector<int>(b.empty() ? 0 : b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t k = 0; k < b.size(); ++k) {
        if (a[i][k] != 0) {
          for (std::size_t j = 0; j < b[k].size(); ++j) {
            out[i][j] += a[i][k] * b[k][j];
          }
        }
      }
    }
    return out;
  }

  //! Rows whose sum exceeds 1.
  inline std::vector<std::size_t> splitting_rows(InclusionMatrix const& M) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < M.size(); ++i) {
      int sum = 0;
      for (int v : M[i]) {
        sum += v;
      }
      if (sum > 1) {
        out.push_back(i);
      }
    }
    return out;
  }

  struct K0Report {
    AfVariant                    variant = AfVariant::A;
    int                          levels  = 0;
    std::vector<BratteliStage>   stages;
    std::vector<InclusionMatrix> inclusions;
    // classes that never split again once they appear
    std::vector<std::string> stable_generators;
    // classes that split at every level observed
    std::vector<std::string> splitting_classes;
    bool                     distinguished_class = false;
    std::string              description;
  };

  //! Stages 0..levels and the inclusions between consecutive stages.
  inline K0Report k0_colimit_description(AfVariant variant, int levels) {
    if (levels < 1) {
      throw usage_error("levels must be >= 1");
    }
    K0Report out;
    out.variant = variant;
    out.levels  = levels;
    for (int n = 0; n <= levels; ++n) {
      out.stages.push_back(stage(variant, n));
    }
    for (int n = 0; n < levels; ++n) {
      out.inclusions.push_back(inclusion(variant, n));
    }

    // perpetual[m][r]: row r of stage m splits at every later inclusion,
    // following its own splitting piece.
    std::vector<std::vector<bool>> perpetual(levels + 1);
    perpetual[levels].assign(out.stages[levels].rank, true);
    for (int m = levels - 1; m >= 0; --m) {
      auto const& M = out.inclusions[m];
      perpetual[m].assign(M.size(), false);
      for (std::size_t r = 0; r < M.size(); ++r) {
        int  pieces = 0;
        bool onward = false;
        for (std::size_t j = 0; j < M[r].size(); ++j) {
          pieces += M[r][j];
          onward = onward || (M[r][j] != 0 && perpetual[m + 1][j]);
        }
        perpetual[m][r] = pieces > 1 && onward;
      }
    }

    // Classes first seen before the last stage: stable when every later
    // inclusion sends them to a single projection.
    std::map<std::string, bool> seen;
    for (int n = 0; n < levels; ++n) {
      auto const& st = out.stages[n];
      for (std::size_t i = 0; i < st.rank; ++i) {
        auto const& name = st.minimal_projections[i].name;
        if (!seen.emplace(name, true).second) {
          continue;
        }
        bool        stable = true;
        std::size_t row    = i;
        for (int m = n; m < levels && stable; ++m) {
          auto const& M = out.inclusions[m];
          auto const  c = std::count(M[row].begin(), M[row].end(), 1);
          stable        = c == 1;
          if (stable) {
            row = static_cast<std::size_t>(
                std::find(M[row].begin(), M[row].end(), 1) - M[row].begin());
          }
        }
        if (stable) {
          out.stable_generators.push_back(name);
        } else if (n == 0 && perpetual[0][i]) {
          out.splitting_classes.push_back(name);
        }
      }
    }
    out.distinguished_class = !out.splitting_classes.empty();
    out.description = out.distinguished_class
                          ? "free abelian on the stable classes, plus a distinguished "
                            "class that splits at every level (an adjoint unit)"
                          : "free abelian on the stable classes; no class splits";
    return out;
  }

}  // namespace egroupoid

#endif  // EGROUPOID_KTHEORY_HPP_

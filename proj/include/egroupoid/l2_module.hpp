#ifndef EGROUPOID_L2_MODULE_HPP_
#define EGROUPOID_L2_MODULE_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "carrier.hpp"
#include "character.hpp"
#include "continuity.hpp"
#include "families.hpp"
#include "rational.hpp"
#include "spectrum.hpp"

namespace egroupoid {

  //! A finite formal sum of generators with rational-complex coefficients,
  //! keyed by the generator's element. Zero coefficients are never stored.
  template <typename Elem>
  struct FormalSum {
    std::map<Elem, QComplex> terms;

    static FormalSum basis(Elem g) {
      FormalSum out;
      out.terms.emplace(std::move(g), QComplex(1));
      return out;
    }

    bool is_zero() const {
      return terms.empty();
    }

    void add(Elem const& g, QComplex const& c) {
      auto& v = terms[g];
      v += c;
      if (v.is_zero()) {
        terms.erase(g);
      }
    }

    FormalSum& operator+=(FormalSum const& other) {
      for (auto const& [g, c] : other.terms) {
        add(g, c);
      }
      return *this;
    }

    friend FormalSum operator+(FormalSum a, FormalSum const& b) {
      return a += b;
    }

    friend FormalSum operator-(FormalSum a, FormalSum const& b) {
      for (auto const& [g, c] : b.terms) {
        a.add(g, -c);
      }
      return a;
    }

    FormalSum scaled(QComplex const& s) const {
      FormalSum out;
      for (auto const& [g, c] : terms) {
        out.add(g, s * c);
      }
      return out;
    }

    friend bool operator==(FormalSum const&, FormalSum const&) = default;
  };

  //! Sum of c_i phi_{g_i}.
  template <typename Elem>
  using ModuleVector = FormalSum<Elem>;

  //! Sum of c_i delta_{g_i}.
  template <typename Elem>
  using EpsilonModuleVector = FormalSum<Elem>;

  //! phi_g . e = phi_{e g}.
  template <Carrier C>
  ModuleVector<element_t<C>> right_act(C const&                          c,
                                       ModuleVector<element_t<C>> const& v,
                                       element_t<C> const&               e) {
    require_idempotent(c, e);
    ModuleVector<element_t<C>> out;
    for (auto const& [g, k] : v.terms) {
      out.add(c.compose(e, g), k);
    }
    return out;
  }

  //! g(phi_h) = phi_{g h}.
  template <Carrier C>
  ModuleVector<element_t<C>> act(C const&                          c,
                                 element_t<C> const&               g,
                                 ModuleVector<element_t<C>> const& v) {
    ModuleVector<element_t<C>> out;
    for (auto const& [h, k] : v.terms) {
      out.add(c.compose(g, h), k);
    }
    return out;
  }

  template <typename Elem>
  struct PhiInner {
    SpectrumFunction<Elem>  value;
    ContinuityVerdict<Elem> attainment;
  };

  //! <phi_g, phi_h> = sup{e : e g = e h, e <= g g* h h*}.
  //!
  //! The join set equals the idempotents below h g* cut down to g g* h h*,
  //! so the supremum is attained on {f k : f maximal below h g*} whenever
  //! the lower set of h g* is finitely generated.
  template <Carrier C>
  PhiInner<element_t<C>> phi_inner(C const&            c,
                                   element_t<C> const& g,
                                   element_t<C> const& h,
                                   int                 L,
                                   std::size_t         budget = default_basis_budget) {
    using Elem   = element_t<C>;
    auto const k = c.compose(c.compose(g, c.star(g)), c.compose(h, c.star(h)));
    auto in_join = [&](Elem const& e) {
      return c.compose(e, k) == e && c.compose(e, g) == c.compose(e, h);
    };
    auto shape = c.lower_set_shape(c.compose(h, c.star(g)));
    if (shape && shape->bounded) {
      std::vector<Elem> cut;
      for (auto const& f : shape->maxima) {
        cut.push_back(c.compose(f, k));
      }
      shape->maxima = maximal_elements(c, std::move(cut));
    }
    PhiInner<Elem> out;
    out.attainment = assess_join(c,
                                 in_join,
                                 shape,
                                 std::max(c.level(g), c.level(h)),
                                 L,
                                 budget,
                                 k,
                                 &out.value.join_set);
    if (out.attainment.kind == Verdict::continuous) {
      out.value.maxima = out.attainment.certificate;
    }
    return out;
  }

  template <typename Elem>
  struct GramAt {
    Character<Elem>                    x;
    std::vector<std::vector<Rational>> matrix;
  };

  template <typename Elem>
  struct Gram {
    std::vector<Elem>                           elements;
    std::vector<std::vector<PhiInner<Elem>>>    entries;
    std::vector<GramAt<Elem>>                   at;
  };

  template <Carrier C>
  Gram<element_t<C>> gram(C const&                                    c,
                          std::vector<element_t<C>> const&            elements,
                          std::vector<Character<element_t<C>>> const& chars,
                          int                                         L,
                          std::size_t budget = default_basis_budget) {
    Gram<element_t<C>> out;
    out.elements  = elements;
    auto const n  = elements.size();
    out.entries.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out.entries[i].push_back(phi_inner(c, elements[i], elements[j], L, budget));
      }
    }
    for (auto const& x : chars) {
      GramAt<element_t<C>> m{x, {}};
      m.matrix.assign(n, std::vector<Rational>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          m.matrix[i][j] = value_at(c, out.entries[i][j].value, x) ? 1 : 0;
        }
      }
      out.at.push_back(std::move(m));
    }
    return out;
  }

  //! Exact determinant by fraction-free-in-spirit Gaussian elimination.
  inline Rational determinant(std::vector<std::vector<Rational>> m) {
    auto const n   = m.size();
    Rational   det = 1;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && m[pivot][col] == 0) {
        ++pivot;
      }
      if (pivot == n) {
        return 0;
      }
      if (pivot != col) {
        std::swap(m[pivot], m[col]);
        det = -det;
      }
      det *= m[col][col];
      for (std::size_t r = col + 1; r < n; ++r) {
        if (m[r][col] == 0) {
          continue;
        }
        Rational const f = m[r][col] / m[col][col];
        for (std::size_t k = col; k < n; ++k) {
          m[r][k] -= f * m[col][k];
        }
      }
    }
    return det;
  }

  //! A symmetric matrix is positive semidefinite iff every principal minor
  //! is nonnegative. Returns the first failing index set, if any.
  inline std::optional<std::vector<std::size_t>>
  psd_violation(std::vector<std::vector<Rational>> const& m) {
    auto const n = m.size();
    if (n > 20) {
      throw usage_error("principal-minor test limited to 20 x 20 matrices");
    }
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::uint32_t{1} << i)) {
          idx.push_back(i);
        }
      }
      std::vector<std::vector<Rational>> sub(idx.size(), std::vector<Rational>(idx.size()));
      for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = 0; j < idx.size(); ++j) {
          sub[i][j] = m[idx[i]][idx[j]];
        }
      }
      if (determinant(std::move(sub)) < 0) {
        return idx;
      }
    }
    return std::nullopt;
  }

  template <typename Elem>
  struct PsdReport {
    std::size_t matrices_checked = 0;
    std::vector<std::pair<Character<Elem>, std::vector<std::size_t>>> violations;

    bool passed() const noexcept {
      return violations.empty();
    }
  };

  template <Carrier C>
  PsdReport<element_t<C>> gram_psd_check(C const&                                    c,
                                         std::vector<element_t<C>> const&            elements,
                                         std::vector<Character<element_t<C>>> const& chars,
                                         int                                         L,
                                         std::size_t budget = default_basis_budget) {
    PsdReport<element_t<C>> out;
    for (auto const& m : gram(c, elements, chars, L, budget).at) {
      ++out.matrices_checked;
      if (auto bad = psd_violation(m.matrix)) {
        out.violations.emplace_back(m.x, std::move(*bad));
      }
    }
    return out;
  }

  template <typename Elem>
  struct EquivarianceReport {
    std::size_t                  characters_checked = 0;
    std::vector<Character<Elem>> mismatches;

    bool passed() const noexcept {
      return mismatches.empty();
    }
  };

  //! <phi_{g a}, phi_{g b}>(x) against g(<phi_a, phi_b>)(x), where
  //! g(f)(x) = f(x . g) and the translate vanishes where x . g is zero.
  template <Carrier C>
  EquivarianceReport<element_t<C>>
  equivariance_check(C const&                                    c,
                     element_t<C> const&                         g,
                     element_t<C> const&                         a,
                     element_t<C> const&                         b,
                     std::vector<Character<element_t<C>>> const& chars,
                     int                                         L,
                     std::size_t budget = default_basis_budget) {
    EquivarianceReport<element_t<C>> out;
    auto const lhs = phi_inner(c, c.compose(g, a), c.compose(g, b), L, budget);
    auto const rhs = phi_inner(c, a, b, L, budget);
    for (auto const& x : chars) {
      ++out.characters_checked;
      auto const y     = act_character(c, x, g);
      bool const left  = value_at(c, lhs.value, x);
      bool const right = y && value_at(c, rhs.value, *y);
      if (left != right) {
        out.mismatches.push_back(x);
      }
    }
    return out;
  }

  //! c* G(x) c, real for the symmetric {0,1} Gram matrices at hand.
  inline Rational quadratic_form(std::vector<QComplex> const&              coef,
                                 std::vector<std::vector<Rational>> const& m) {
    QComplex sum;
    for (std::size_t i = 0; i < coef.size(); ++i) {
      for (std::size_t j = 0; j < coef.size(); ++j) {
        if (m[i][j] != 0) {
          sum += coef[i].conj() * QComplex(m[i][j]) * coef[j];
        }
      }
    }
    return sum.re;
  }

  template <typename Elem>
  struct NormEstimate {
    std::optional<Rational>        value;
    std::optional<Character<Elem>> attained_at;
    std::string                    refusal;
    std::size_t                    characters_sampled = 0;
  };

  //! sup over characters of the quadratic form of v. Exact when every Gram
  //! entry is attained finitely, because eps(E) is dense in X and the entries
  //! are then continuous. Refuses otherwise.
  template <Carrier C>
  NormEstimate<element_t<C>> norm_estimate(C const&                          c,
                                           ModuleVector<element_t<C>> const& v,
                                           int                               L,
                                           std::size_t budget = default_basis_budget) {
    NormEstimate<element_t<C>> out;
    std::vector<element_t<C>>  els;
    std::vector<QComplex>      coef;
    for (auto const& [g, k] : v.terms) {
      els.push_back(g);
      coef.push_back(k);
    }
    auto const chars = characters(c, L);
    auto const G     = gram(c, els, chars, L, budget);
    for (std::size_t i = 0; i < els.size(); ++i) {
      for (std::size_t j = 0; j < els.size(); ++j) {
        auto const& a = G.entries[i][j].attainment;
        if (a.kind != Verdict::continuous) {
          out.refusal = "<phi_" + c.name(els[i]) + ", phi_" + c.name(els[j])
                        + "> is " + to_string(a.kind)
                        + "; the module degenerates here (see degeneration)";
          return out;
        }
      }
    }
    Rational best = 0;
    for (auto const& m : G.at) {
      ++out.characters_sampled;
      auto q = quadratic_form(coef, m.matrix);
      if (!out.attained_at || q > best) {
        best            = q;
        out.attained_at = m.x;
      }
    }
    out.value = best;
    return out;
  }

  enum class ProbeResult { pass, inconclusive };

  inline char const* to_string(ProbeResult r) {
    return r == ProbeResult::pass ? "PASS" : "INCONCLUSIVE";
  }

  template <typename Elem>
  struct ProbeTrial {
    std::vector<QComplex>          coef;
    ProbeResult                    result = ProbeResult::inconclusive;
    std::optional<Character<Elem>> nonzero_at;
  };

  //! Nonzero rational coefficient vectors with entries in [-5, 5],
  //! deterministic in the seed.
  inline std::vector<std::vector<QComplex>>
  random_trials(std::uint64_t seed, std::size_t n, std::size_t count) {
    std::mt19937_64                    rng(seed);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<std::vector<QComplex>> out;
    while (out.size() < count && n > 0) {
      std::vector<QComplex> c;
      bool                  nonzero = false;
      for (std::size_t i = 0; i < n; ++i) {
        Rational re(num(rng), den(rng));
        Rational im(num(rng), den(rng));
        nonzero = nonzero || re != 0 || im != 0;
        c.emplace_back(re, im);
      }
      if (nonzero) {
        out.push_back(std::move(c));
      }
    }
    return out;
  }

  //! For each trial c, looks for a character where c* G(x) c is nonzero.
  //! Never claims dependence: a trial vanishing everywhere sampled is
  //! Inconclusive.
  template <Carrier C>
  std::vector<ProbeTrial<element_t<C>>>
  linear_independence_probe(C const&                                    c,
                            std::vector<element_t<C>> const&            elements,
                            std::vector<std::vector<QComplex>> const&   trials,
                            std::vector<Character<element_t<C>>> const& chars,
                            int                                         L,
                            std::size_t budget = default_basis_budget) {
    auto sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw usage_error("linear_independence_probe requires distinct elements");
    }
    auto const                            G = gram(c, elements, chars, L, budget);
    std::vector<ProbeTrial<element_t<C>>> out;
    for (auto const& coef : trials) {
      if (coef.size() != elements.size()) {
        throw usage_error("coefficient vector length differs from element count");
      }
      ProbeTrial<element_t<C>> t{coef, ProbeResult::inconclusive, std::nullopt};
      for (auto const& m : G.at) {
        if (quadratic_form(coef, m.matrix) != 0) {
          t.result     = ProbeResult::pass;
          t.nonzero_at = m.x;
          break;
        }
      }
      out.push_back(std::move(t));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // The eps(E)-valued module
  ////////////////////////////////////////////////////////////////////////

  //! <delta_g, delta_h> = 1_{g = h} eps_{g* g}.
  template <Carrier C>
  EpsilonFunction<element_t<C>>
  epsilon_inner(C const& c, element_t<C> const& g, element_t<C> const& h) {
    if (!(g == h)) {
      return {};
    }
    return EpsilonFunction<element_t<C>>::point(c.compose(c.star(g), g));
  }

  //! delta_g eps_f = 1_{g* g = f} delta_g.
  template <Carrier C>
  EpsilonModuleVector<element_t<C>>
  epsilon_module_product(C const& c, element_t<C> const& g, element_t<C> const& f) {
    require_idempotent(c, f);
    if (!(c.compose(c.star(g), g) == f)) {
      return {};
    }
    return EpsilonModuleVector<element_t<C>>::basis(g);
  }

  //! h(delta_g) = 1_{h* h >= g g*} delta_{h g}, extended linearly.
  template <Carrier C>
  EpsilonModuleVector<element_t<C>> epsilon_act(C const&                                 c,
                                                element_t<C> const&                      h,
                                                EpsilonModuleVector<element_t<C>> const& v) {
    auto const                        src = c.compose(c.star(h), h);
    EpsilonModuleVector<element_t<C>> out;
    for (auto const& [g, k] : v.terms) {
      auto const rng = c.compose(g, c.star(g));
      if (c.compose(rng, src) == rng) {
        out.add(c.compose(h, g), k);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Degeneration of the C0(X)-valued module over the chain with symmetry
  ////////////////////////////////////////////////////////////////////////

  struct DegenerationStep {
    std::string claim;
    bool        verified = false;
    std::string detail;
  };

  struct DegenerationReport {
    std::vector<DegenerationStep> steps;
    std::string                   conclusion;

    bool verified() const {
      return !steps.empty() && std::all_of(steps.begin(), steps.end(), [](auto const& s) {
        return s.verified;
      });
    }
  };

  //! Machine-checks the forced degeneration of any C0(X)-valued module with
  //! generators delta_g, compatibility delta_g e = delta_{e g} and
  //! <delta_{e_n}, delta_{e_n}> = e_n, at truncation L.
  inline DegenerationReport degeneration_report(ChainFamily const& c,
                                                int                L,
                                                std::size_t budget = default_basis_budget) {
    using Elem = ChainElement;
    if (!c.has_symmetry()) {
      throw usage_error("degeneration_report needs the chain with symmetry");
    }
    if (L < 1) {
      throw usage_error("degeneration_report needs truncation >= 1");
    }
    DegenerationReport out;
    auto const         one = Elem::one();
    auto const         S   = Elem::symmetry();
    auto const         e   = [](int n) { return Elem::e(static_cast<std::uint32_t>(n)); };
    auto               add = [&](std::string claim, bool ok, std::string detail) {
      out.steps.push_back({std::move(claim), ok, std::move(detail)});
    };

    {
      bool ok = true;
      for (int n = 1; n <= L; ++n) {
        ok = ok && c.compose(e(n), S) == e(n) && c.compose(e(n), one) == e(n);
      }
      add("delta_S e_n = delta_{e_n S} = delta_{e_n} and delta_1 e_n = delta_{e_n}",
          ok,
          "e_n S = e_n = e_n 1 for n = 1.." + std::to_string(L));
    }
    {
      // <delta_S, delta_S> e_n = <delta_S e_n, delta_S e_n> = e_n, read at
      // eps_{e_n}; eps_1 lies in no carrier(e_n).
      auto const x1 = Character<Elem>::principal(one);
      bool       ok = true;
      for (int n = 1; n <= L; ++n) {
        ok = ok && evaluate(c, Character<Elem>::principal(e(n)), e(n))
             && !evaluate(c, x1, e(n));
      }
      add("<delta_S, delta_S>(eps_{e_n}) = <delta_S, delta_S>(eps_{e_n}) e_n(eps_{e_n}) = 1 "
          "for all n",
          ok,
          "eps_{e_n} lies in carrier(e_n) for n = 1.." + std::to_string(L));
    }
    {
      auto const        chars = characters(c, L);
      std::vector<Character<Elem>> expected{Character<Elem>::principal(one)};
      for (int n = 1; n <= L; ++n) {
        expected.push_back(Character<Elem>::principal(e(n)));
      }
      std::sort(expected.begin(), expected.end());
      add("X = {eps_{e_n}} u {eps_1}",
          chars == expected,
          std::to_string(chars.size()) + " characters at truncation "
              + std::to_string(L));
    }
    {
      auto const  x1   = Character<Elem>::principal(one);
      std::size_t hits = 0;
      bool        ok   = true;
      auto const  nbhd = neighborhoods(c, x1, L, budget);
      for (auto const& U : nbhd) {
        bool meets = false;
        for (int n = 1; n <= L + search_margin && !meets; ++n) {
          meets = contains(c, U, Character<Elem>::principal(e(n)));
        }
        hits += meets ? 1 : 0;
        ok = ok && meets;
      }
      add("eps_1 is a limit of eps_{e_n}: every basic neighbourhood of eps_1 "
          "contains some eps_{e_n}",
          ok && !nbhd.empty(),
          std::to_string(hits) + " of " + std::to_string(nbhd.size())
              + " neighbourhoods checked");
    }
    add("continuity forces <delta_S, delta_S>(eps_1) = 1, so <delta_S, delta_S> = 1",
        out.verified(),
        "a continuous {0,1}-valued function constant 1 on a dense subset of a "
        "neighbourhood base of eps_1");
    add("similarly <delta_S, delta_1> = <delta_1, delta_1> = 1",
        out.verified(),
        "same argument with delta_S e_n = delta_1 e_n = delta_{e_n}");
    {
      // ||delta_1 - delta_S||^2 = <1,1> - <1,S> - <S,1> + <S,S> at each point.
      Rational const forced = 1;
      Rational const q      = forced - forced - forced + forced;
      add("||delta_1 - delta_S||^2 = 0", out.verified() && q == 0,
          "quadratic form 1 - 1 - 1 + 1 = " + to_string(q)
              + " at every character");
    }
    {
      auto const disc = epsilon_inner(c, S, one);
      add("the eps(E)-valued module keeps <delta_S, delta_1> = 0 and does not degenerate",
          disc.is_zero() && epsilon_inner(c, S, S) == EpsilonFunction<Elem>::point(one),
          "<delta_S, delta_1> = 0, <delta_S, delta_S> = eps_1");
    }
    out.conclusion = out.verified() ? "the module degenerates: ||delta_1 - delta_S||^2 = 0"
                                    : "derivation not verified";
    return out;
  }

}  // namespace egroupoid

#endif  // EGROUPOID_L2_MODULE_HPP_

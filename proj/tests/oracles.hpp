// Independent reference computations for the tests. Nothing here calls the
// library's algorithms; carriers are used only as opaque multiplication
// tables where a test compares against them.

#ifndef EGROUPOID_TESTS_ORACLES_HPP_
#define EGROUPOID_TESTS_ORACLES_HPP_

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

  inline std::uint64_t binomial(unsigned n, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

  inline std::uint64_t factorial(unsigned n) {
    std::uint64_t r = 1;
    for (unsigned i = 2; i <= n; ++i) {
      r *= i;
    }
    return r;
  }

  //! |I_n| = sum_k C(n,k)^2 k!
  inline std::uint64_t symmetric_inverse_monoid_size(unsigned n) {
    std::uint64_t s = 0;
    for (unsigned k = 0; k <= n; ++k) {
      s += binomial(n, k) * binomial(n, k) * factorial(k);
    }
    return s;
  }

  //! Every partial injection of {1..n} as an image vector (0 = undefined),
  //! by running through all (n+1)^n functions.
  inline std::set<std::vector<std::uint32_t>> all_partial_injections(unsigned n) {
    std::set<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t>           f(n, 0);
    while (true) {
      std::vector<bool> hit(n + 1, false);
      bool              injective = true;
      for (auto t : f) {
        if (t != 0) {
          injective = injective && !hit[t];
          hit[t]    = true;
        }
      }
      if (injective) {
        out.insert(f);
      }
      unsigned i = 0;
      while (i < n && f[i] == n) {
        f[i++] = 0;
      }
      if (i == n) {
        break;
      }
      ++f[i];
    }
    return out;
  }

  //! Filters of a finite meet-semilattice given by its elements and meet,
  //! by testing every nonempty subset for meet-closure and upward closure.
  template <typename E, typename Meet>
  std::vector<std::set<E>> filters(std::vector<E> const& els, Meet meet) {
    std::vector<std::set<E>> out;
    auto const               n = els.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      auto in = [&](std::size_t i) { return ((mask >> i) & 1u) != 0; };
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        for (std::size_t j = 0; j < n && ok; ++j) {
          if (!in(i)) {
            continue;
          }
          auto m = meet(els[i], els[j]);
          if (in(j)) {
            for (std::size_t k = 0; k < n; ++k) {
              if (els[k] == m) {
                ok = ok && in(k);
              }
            }
          } else if (m == els[i]) {
            ok = false;  // els[i] <= els[j] but els[j] missing
          }
        }
      }
      if (ok) {
        std::set<E> F;
        for (std::size_t i = 0; i < n; ++i) {
          if (in(i)) {
            F.insert(els[i]);
          }
        }
        out.push_back(std::move(F));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bicyclic monoid as partial shifts of the naturals
  ////////////////////////////////////////////////////////////////////////

  //! (m, n) acts as x -> x - n + m on {x >= n}. Composition (a b)(x) =
  //! a(b(x)) is evaluated on a window and the result read back as a pair.
  struct Shift {
    long m = 0;
    long n = 0;

    std::optional<long> operator()(long x) const {
      if (x < n) {
        return std::nullopt;
      }
      return x - n + m;
    }
  };

  inline std::pair<long, long> bicyclic_product(long m, long n, long k, long l) {
    Shift a{m, n}, b{k, l};
    long const window = 4 * (m + n + k + l) + 4;
    std::optional<long> first;
    for (long x = 0; x <= window && !first; ++x) {
      if (auto y = b(x); y && a(*y)) {
        first = x;
      }
    }
    // The domain of a product of shifts is again a ray.
    auto const N = *first;
    auto const M = *a(*b(N));
    for (long x = 0; x <= window; ++x) {
      auto y  = b(x);
      auto z  = y ? a(*y) : std::nullopt;
      auto zz = Shift{M, N}(x);
      if (z != zz) {
        throw std::logic_error("product of shifts is not a shift");
      }
    }
    return {M, N};
  }

  ////////////////////////////////////////////////////////////////////////
  // Polycyclic monoid as partial maps on words
  ////////////////////////////////////////////////////////////////////////

  //! (mu, nu) acts as nu w -> mu w. nullopt stands for zero.
  using WordPair = std::optional<std::pair<std::string, std::string>>;

  inline std::vector<std::string> words_upto(unsigned alphabet, std::size_t len) {
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].size() < len) {
        for (unsigned c = 1; c <= alphabet; ++c) {
          out.push_back(out[i] + static_cast<char>('0' + c));
        }
      }
    }
    return out;
  }

  inline std::optional<std::string> act_on_word(WordPair const& a, std::string const& w) {
    if (!a || w.compare(0, a->second.size(), a->second) != 0
        || w.size() < a->second.size()) {
      return std::nullopt;
    }
    return a->first + w.substr(a->second.size());
  }

  inline WordPair polycyclic_product(unsigned alphabet, WordPair const& a, WordPair const& b) {
    if (!a || !b) {
      return std::nullopt;
    }
    auto const len = a->first.size() + a->second.size() + b->first.size()
                     + b->second.size();
    auto const ws = words_upto(alphabet, len);
    std::optional<std::string> N;
    for (auto const& w : ws) {  // shortlex: the first hit is the shortest
      if (auto y = act_on_word(b, w); y && act_on_word(a, *y)) {
        N = w;
        break;
      }
    }
    if (!N) {
      return std::nullopt;
    }
    WordPair out = std::make_pair(*act_on_word(a, *act_on_word(b, *N)), *N);
    for (auto const& w : ws) {
      auto y = act_on_word(b, w);
      auto z = y ? act_on_word(a, *y) : std::nullopt;
      if (z != act_on_word(out, w)) {
        throw std::logic_error("product of word maps is not a word map");
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Germ classes of a finite carrier
  ////////////////////////////////////////////////////////////////////////

  struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
      std::iota(parent.begin(), parent.end(), 0);
    }

    std::size_t find(std::size_t i) {
      while (parent[i] != i) {
        i = parent[i] = parent[parent[i]];
      }
      return i;
    }

    void unite(std::size_t a, std::size_t b) {
      parent[find(a)] = find(b);
    }

    std::size_t classes() {
      std::size_t n = 0;
      for (std::size_t i = 0; i < parent.size(); ++i) {
        n += find(i) == i;
      }
      return n;
    }
  };

  //! Number of germ classes over all base points of a finite inverse
  //! semigroup given by its table. Base points are the filters of E (passed
  //! in explicitly); (g, F) and (h, F) are identified when g e = h e for some
  //! e in F.
  template <typename Mul, typename Star>
  std::size_t germ_class_count(std::size_t                                   n,
                               Mul                                           mul,
                               Star                                          star,
                               std::vector<std::set<std::uint32_t>> const&   base_points) {
    std::size_t total = 0;
    for (auto const& F : base_points) {
      std::vector<std::uint32_t> fiber;
      for (std::uint32_t g = 0; g < n; ++g) {
        if (F.count(mul(star(g), g)) != 0) {
          fiber.push_back(g);
        }
      }
      UnionFind uf(fiber.size());
      for (std::size_t i = 0; i < fiber.size(); ++i) {
        for (std::size_t j = i + 1; j < fiber.size(); ++j) {
          for (auto e : F) {
            if (mul(fiber[i], e) == mul(fiber[j], e)) {
              uf.unite(i, j);
              break;
            }
          }
        }
      }
      total += uf.classes();
    }
    return total;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bratteli points
  ////////////////////////////////////////////////////////////////////////

  //! Characters of the commutative stage generated by 1, S, e_1..e_n:
  //! points 1..n have e_j -> [j >= k], S -> 1; point n+1 has every e_j -> 0,
  //! S -> 1; point n+2 has every e_j -> 0, S -> -1.
  //! `kind` 0 = one, 1 = S, 2 = e_j (index j).
  inline int a_point_value(int n, int point, int kind, int j) {
    if (kind == 0) {
      return 1;
    }
    if (kind == 1) {
      return point == n + 2 ? -1 : 1;
    }
    return point <= n && j >= point ? 1 : 0;
  }

  //! Characters of the stage generated by eps_1 x 1, eps_1 x S and
  //! eps_{e_k} x e_k: point k <= n sees only eps_{e_k} x e_k; points n+1
  //! and n+2 see eps_1 x 1 -> 1 and eps_1 x S -> +1 / -1.
  //! `a` = 0 for eps_1, else the index k of e_k; `g` = 0 one, 1 S, 2 e_k.
  inline int b_point_value(int n, int point, int a, int g) {
    if (a == 0) {
      if (point <= n) {
        return 0;
      }
      if (g == 0) {
        return 1;
      }
      if (g == 1) {
        return point == n + 2 ? -1 : 1;
      }
      return 0;
    }
    return point == a && g == 2 ? 1 : 0;
  }

}  // namespace oracle

#endif  // EGROUPOID_TESTS_ORACLES_HPP_

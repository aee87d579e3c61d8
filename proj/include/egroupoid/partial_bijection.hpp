#ifndef EGROUPOID_PARTIAL_BIJECTION_HPP_
#define EGROUPOID_PARTIAL_BIJECTION_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace egroupoid {

  //! A partial injection of {1, ..., degree}.
  //!
  //! Composition follows operator order: (a * b)(x) = a(b(x)), defined where
  //! b is defined at x and a is defined at b(x).
  class PartialBijection {
   public:
    using point_type = std::uint32_t;

    PartialBijection() = default;

    //! Builds from 1-based (source, target) pairs; throws input_error if a
    //! point is out of range or a source/target repeats.
    PartialBijection(std::size_t degree,
                     std::vector<std::pair<point_type, point_type>> const& pairs)
        : _images(degree, 0) {
      if (degree == 0) {
        throw input_error("partial bijection degree must be positive");
      }
      std::vector<bool> hit(degree + 1, false);
      for (auto const& [s, t] : pairs) {
        if (s < 1 || s > degree || t < 1 || t > degree) {
          throw input_error("point out of range in partial bijection: "
                            + std::to_string(s) + " -> " + std::to_string(t));
        }
        if (_images[s - 1] != 0) {
          throw input_error("repeated source point " + std::to_string(s));
        }
        if (hit[t]) {
          throw input_error("repeated target point " + std::to_string(t));
        }
        hit[t]          = true;
        _images[s - 1] = t;
      }
    }

    static PartialBijection identity_on(std::size_t                    degree,
                                        std::vector<point_type> const& domain) {
      std::vector<std::pair<point_type, point_type>> pairs;
      for (auto p : domain) {
        pairs.emplace_back(p, p);
      }
      return PartialBijection(degree, pairs);
    }

    std::size_t degree() const noexcept {
      return _images.size();
    }

    std::optional<point_type> operator()(point_type x) const {
      if (x < 1 || x > _images.size() || _images[x - 1] == 0) {
        return std::nullopt;
      }
      return _images[x - 1];
    }

    std::size_t rank() const noexcept {
      std::size_t r = 0;
      for (auto t : _images) {
        r += (t != 0);
      }
      return r;
    }

    std::vector<std::pair<point_type, point_type>> pairs() const {
      std::vector<std::pair<point_type, point_type>> out;
      for (std::size_t i = 0; i < _images.size(); ++i) {
        if (_images[i] != 0) {
          out.emplace_back(static_cast<point_type>(i + 1), _images[i]);
        }
      }
      return out;
    }

    PartialBijection operator*(PartialBijection const& b) const {
      if (b.degree() != degree()) {
        throw usage_error("cannot compose partial bijections of different degree");
      }
      PartialBijection out;
      out._images.assign(degree(), 0);
      for (std::size_t i = 0; i < degree(); ++i) {
        auto mid = b._images[i];
        if (mid != 0) {
          out._images[i] = _images[mid - 1];
        }
      }
      return out;
    }

    PartialBijection inverse() const {
      PartialBijection out;
      out._images.assign(degree(), 0);
      for (std::size_t i = 0; i < degree(); ++i) {
        if (_images[i] != 0) {
          out._images[_images[i] - 1] = static_cast<point_type>(i + 1);
        }
      }
      return out;
    }

    bool is_idempotent() const {
      for (std::size_t i = 0; i < degree(); ++i) {
        if (_images[i] != 0 && _images[i] != i + 1) {
          return false;
        }
      }
      return true;
    }

    //! "[1:2;2:1]", or "[]" for the empty map.
    std::string to_string() const {
      std::string out = "[";
      bool        first = true;
      for (auto const& [s, t] : pairs()) {
        if (!first) {
          out += ";";
        }
        first = false;
        out += std::to_string(s) + ":" + std::to_string(t);
      }
      return out + "]";
    }

    std::vector<point_type> const& images() const noexcept {
      return _images;
    }

    friend bool operator==(PartialBijection const&,
                           PartialBijection const&) = default;
    friend auto operator<=>(PartialBijection const&,
                            PartialBijection const&) = default;

   private:
    // _images[i] is the image of i + 1, or 0 when undefined.
    std::vector<point_type> _images;
  };

  struct PartialBijectionHash {
    std::size_t operator()(PartialBijection const& p) const noexcept {
      std::size_t h = p.degree();
      for (auto t : p.images()) {
        h = h * 1000003u ^ t;
      }
      return h;
    }
  };

}  // namespace egroupoid

#endif  // EGROUPOID_PARTIAL_BIJECTION_HPP_

#ifndef EGROUPOID_RATIONAL_HPP_
#define EGROUPOID_RATIONAL_HPP_

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace egroupoid {

  using Rational = boost::multiprecision::cpp_rational;

  //! "p/q", or "p" when q = 1.
  inline std::string to_string(Rational const& r) {
    return r.str();
  }

  inline Rational parse_rational(std::string const& s) {
    try {
      return Rational(s);
    } catch (std::exception const&) {
      throw input_error("malformed rational '" + s + "'");
    }
  }

  //! A complex number with rational real and imaginary parts.
  struct QComplex {
    Rational re;
    Rational im;

    QComplex() = default;
    QComplex(Rational r) : re(std::move(r)) {}  // NOLINT(runtime/explicit)
    QComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    QComplex(int r) : re(r) {}  // NOLINT(runtime/explicit)

    QComplex conj() const {
      return {re, -im};
    }

    bool is_zero() const {
      return re == 0 && im == 0;
    }

    friend QComplex operator+(QComplex const& a, QComplex const& b) {
      return {a.re + b.re, a.im + b.im};
    }
    friend QComplex operator-(QComplex const& a, QComplex const& b) {
      return {a.re - b.re, a.im - b.im};
    }
    friend QComplex operator-(QComplex const& a) {
      return {-a.re, -a.im};
    }
    friend QComplex operator*(QComplex const& a, QComplex const& b) {
      return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    QComplex& operator+=(QComplex const& b) {
      re += b.re;
      im += b.im;
      return *this;
    }
    friend bool operator==(QComplex const& a, QComplex const& b) {
      return a.re == b.re && a.im == b.im;
    }

    //! "a", "a+bi" or "a-bi".
    std::string str() const {
      if (im == 0) {
        return re.str();
      }
      std::string out = re == 0 ? "" : re.str();
      if (im > 0 && !out.empty()) {
        out += "+";
      }
      return out + im.str() + "i";
    }
  };

  //! Parses "a", "a+bi", "a-bi", "bi" with rational a, b.
  inline QComplex parse_qcomplex(std::string s) {
    if (s.empty()) {
      throw input_error("empty coefficient");
    }
    if (s.back() != 'i') {
      return QComplex(parse_rational(s));
    }
    s.pop_back();
    // Split at the last sign that is not the leading one.
    auto pos = s.find_last_of("+-");
    if (pos == std::string::npos || pos == 0) {
      auto im = s.empty() || s == "+" ? Rational(1)
                : s == "-"            ? Rational(-1)
                                      : parse_rational(s);
      return QComplex(Rational(0), im);
    }
    auto re_part = s.substr(0, pos);
    auto im_part = s.substr(pos);
    Rational im  = im_part == "+" ? Rational(1)
                  : im_part == "-" ? Rational(-1)
                                   : parse_rational(im_part[0] == '+'
                                                        ? im_part.substr(1)
                                                        : im_part);
    return QComplex(parse_rational(re_part), im);
  }

}  // namespace egroupoid

#endif  // EGROUPOID_RATIONAL_HPP_

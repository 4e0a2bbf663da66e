#pragma once
// Exact rational arithmetic on the extended line Q u {inf}, plus 2x2 integer
// matrices acting by fractional linear transformations.

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace brancher {

using Int = mpz_class;
using Rat = mpq_class;

// p/q in lowest terms, q >= 0; infinity is 1/0. Zero is 0/1.
struct ExtRational {
  Int p{0};
  Int q{1};

  ExtRational() = default;
  ExtRational(Int num, Int den) : p(std::move(num)), q(std::move(den)) { normalize(); }
  explicit ExtRational(Int num) : p(std::move(num)), q(1) {}
  ExtRational(long num) : p(num), q(1) {}
  static ExtRational infinity() { return ExtRational(1, 0); }

  void normalize();
  bool is_infinity() const { return q == 0; }
  bool is_integer() const { return q == 1; }

  bool operator==(const ExtRational& o) const { return p == o.p && q == o.q; }
  bool operator!=(const ExtRational& o) const { return !(*this == o); }
  bool operator<(const ExtRational& o) const;  // lex/value order, inf greatest

  ExtRational operator-() const { return ExtRational(-p, q); }
  // t - 1/x and 1/x helpers used by continued fractions.
  ExtRational reciprocal() const { return ExtRational(q, p); }

  Rat as_rat() const;  // throws on infinity
  std::string str() const;
};

ExtRational operator+(const ExtRational& a, const ExtRational& b);
ExtRational operator-(const ExtRational& a, const ExtRational& b);

// |p0*q1 - p1*q0|, the Farey distance numerator.
Int farey_delta(const ExtRational& a, const ExtRational& b);

// Parses "p/q", "n", or "inf"/"-inf". Throws std::invalid_argument on junk
// (including "0/0").
ExtRational parse_ext_rational(const std::string& s);

// Row-action matrix [[a,b],[c,d]]: p/q -> (a p + b q)/(c p + d q).
struct Mat2Z {
  Int a{1}, b{0}, c{0}, d{1};
  Int det() const { return a * d - b * c; }
  bool unimodular() const { Int t = det(); return t == 1 || t == -1; }
  Mat2Z inverse() const;  // requires det = +-1
  ExtRational apply(const ExtRational& x) const;
  Mat2Z operator*(const Mat2Z& o) const;
  bool operator==(const Mat2Z& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

}  // namespace brancher

#include "brancher/rational.hpp"

#include <sstream>

namespace brancher {

void ExtRational::normalize() {
  if (p == 0 && q == 0) throw std::invalid_argument("0/0 is not a point of the extended line");
  if (q == 0) { p = 1; return; }
  if (p == 0) { q = 1; return; }
  Int g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  p /= g;
  q /= g;
  if (q < 0) { p = -p; q = -q; }
}

bool ExtRational::operator<(const ExtRational& o) const {
  if (is_infinity()) return false;
  if (o.is_infinity()) return true;
  return p * o.q < o.p * q;
}

Rat ExtRational::as_rat() const {
  if (is_infinity()) throw std::domain_error("infinity has no rational value");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string ExtRational::str() const {
  if (is_infinity()) return "inf";
  if (q == 1) return p.get_str();
  return p.get_str() + "/" + q.get_str();
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  if (a.is_infinity() || b.is_infinity()) {
    if (a.is_infinity() && b.is_infinity())
      throw std::domain_error("inf + inf undefined");
    return ExtRational::infinity();
  }
  return ExtRational(a.p * b.q + b.p * a.q, a.q * b.q);
}

ExtRational operator-(const ExtRational& a, const ExtRational& b) { return a + (-b); }

Int farey_delta(const ExtRational& a, const ExtRational& b) {
  Int d = a.p * b.q - b.p * a.q;
  return abs(d);
}

ExtRational parse_ext_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw std::invalid_argument("empty rational");
  if (t == "inf" || t == "+inf" || t == "-inf") return ExtRational::infinity();
  auto slash = t.find('/');
  auto parse_int = [](const std::string& u) {
    if (u.empty() || (u.size() == 1 && (u[0] == '+' || u[0] == '-')))
      throw std::invalid_argument("bad integer literal");
    for (size_t i = 0; i < u.size(); ++i) {
      char c = u[i];
      if (i == 0 && (c == '+' || c == '-')) continue;
      if (!isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad integer literal");
    }
    return Int(u);
  };
  if (slash == std::string::npos) return ExtRational(parse_int(t), 1);
  Int num = parse_int(t.substr(0, slash));
  Int den = parse_int(t.substr(slash + 1));
  if (num == 0 && den == 0) throw std::invalid_argument("0/0 is not a valid rational");
  return ExtRational(num, den);
}

Mat2Z Mat2Z::inverse() const {
  Int dt = det();
  if (dt == 1) return Mat2Z{d, -b, -c, a};
  if (dt == -1) return Mat2Z{-d, b, c, -a};
  throw std::domain_error("matrix not unimodular");
}

ExtRational Mat2Z::apply(const ExtRational& x) const {
  return ExtRational(a * x.p + b * x.q, c * x.p + d * x.q);
}

Mat2Z Mat2Z::operator*(const Mat2Z& o) const {
  return Mat2Z{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

}  // namespace brancher

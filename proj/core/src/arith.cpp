#include "d4/arith.hpp"

#include <sstream>

namespace d4 {

std::string to_fraction_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_fraction(std::string_view text) {
  std::string s(text);
  if (s.empty()) fail(ErrorCode::kParse, "empty fraction");
  Rational q;
  if (q.set_str(s, 10) != 0) fail(ErrorCode::kParse, "bad fraction: " + s);
  if (q.get_den() == 0) fail(ErrorCode::kParse, "zero denominator: " + s);
  q.canonicalize();
  return q;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const Integer& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

IntVector primitive(std::span<const Integer> v) {
  IntVector out(v.begin(), v.end());
  Integer g = content(v);
  if (g == 0 || g == 1) return out;
  for (Integer& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

IntVector primitive(std::span<const Rational> v) {
  Integer l = 1;
  for (const Rational& q : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  IntVector scaled;
  scaled.reserve(v.size());
  for (const Rational& q : v) {
    Integer num = q.get_num() * (l / q.get_den());
    scaled.push_back(num);
  }
  return primitive(std::span<const Integer>(scaled));
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  ensure(a.size() == b.size(), "dot: size mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  }
  return s;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  ensure(a.size() == b.size(), "dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVector to_rational(std::span<const Integer> v) {
  return RatVector(v.begin(), v.end());
}

std::strong_ordering lex_compare(std::span<const Integer> a,
                                 std::span<const Integer> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

std::string to_string(std::span<const Integer> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) fail(ErrorCode::kOutOfRange, "integer exceeds int64: " + z.get_str());
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace d4

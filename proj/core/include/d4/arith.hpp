#pragma once

// Exact arithmetic vocabulary shared by every module. No floating point is
// used anywhere in the library.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace d4 {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

enum class ErrorCode {
  kOutOfRange,
  kInvalidArgument,
  kParabolicMismatch,
  kNotInCosetReps,
  kNotInWeightLattice,
  kSumNotInRootLattice,
  kNotPointed,
  kSingularSystem,
  kInternal,
  kParse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::kInternal, what);
}

/// "p/q" with q > 1, or "p" for integers.
std::string to_fraction_string(const Rational& q);
Rational parse_fraction(std::string_view text);

/// Scales a rational vector to the primitive integer vector on the same ray
/// (positive multiple). The zero vector maps to the zero vector.
IntVector primitive(std::span<const Rational> v);
IntVector primitive(std::span<const Integer> v);

Integer content(std::span<const Integer> v);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

RatVector to_rational(std::span<const Integer> v);

/// Lexicographic three-way comparison used to canonicalise vector lists.
std::strong_ordering lex_compare(std::span<const Integer> a,
                                 std::span<const Integer> b);

struct IntVectorLess {
  bool operator()(const IntVector& a, const IntVector& b) const {
    return lex_compare(a, b) < 0;
  }
};

std::string to_string(std::span<const Integer> v);

/// Conversion to int64 with a range check.
std::int64_t to_int64(const Integer& z);

}  // namespace d4

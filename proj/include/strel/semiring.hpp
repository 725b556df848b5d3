#pragma once

// Constraint semirings and signal domains. A semiring carries a choose
// operation (idempotent join, used to pick among candidate verdicts or
// distances) and a combine operation (meet-like accumulation). A signal
// domain is an idempotent semiring extended with an involutive negation
// satisfying the De Morgan laws. Algorithms elsewhere are generic over
// these policy types.

#include <cstdint>

#include "strel/util.hpp"

namespace strel {

// --------------------------------------------------------------------------
// Signal domains (verdict carriers)

/// Qualitative verdicts: <{false,true}, or, and, not, false, true>.
struct BooleanDomain {
  using value_type = bool;
  static constexpr const char* name = "boolean";
  static constexpr bool is_idempotent = true;
  static constexpr bool is_total = true;

  static constexpr bool bottom() { return false; }
  static constexpr bool top() { return true; }
  static constexpr bool choose(bool a, bool b) { return a || b; }
  static constexpr bool combine(bool a, bool b) { return a && b; }
  static constexpr bool negate(bool a) { return !a; }
  /// Derived order: a preceq b iff choose(a,b) == b.
  static constexpr bool preceq(bool a, bool b) { return !a || b; }
};

/// Quantitative verdicts: <R u {-inf,+inf}, max, min, arithmetic negation>.
struct MaxMinDomain {
  using value_type = double;
  static constexpr const char* name = "maxmin";
  static constexpr bool is_idempotent = true;
  static constexpr bool is_total = true;

  static constexpr double bottom() { return -kInf; }
  static constexpr double top() { return kInf; }
  static constexpr double choose(double a, double b) { return a > b ? a : b; }
  static constexpr double combine(double a, double b) { return a < b ? a : b; }
  static constexpr double negate(double a) { return -a; }
  static constexpr bool preceq(double a, double b) { return a <= b; }
};

// --------------------------------------------------------------------------
// Distance semirings

/// <R>=0 u {+inf}, min, +, +inf, 0>. Not idempotent (+).
struct TropicalSemiring {
  using value_type = double;
  static constexpr const char* name = "tropical";
  static constexpr bool is_idempotent = false;
  static constexpr bool is_total = true;

  static constexpr double bottom() { return kInf; }
  static constexpr double top() { return 0.0; }
  static constexpr double choose(double a, double b) { return a < b ? a : b; }
  static constexpr double combine(double a, double b) { return a + b; }
  /// a preceq b iff min(a,b) == a... the lattice prefers smaller costs:
  /// bottom = +inf is least, so preceq is numeric >=.
  static constexpr bool preceq(double a, double b) { return a >= b; }
};

/// Tropical semiring over hop counts: <N u {inf}, min, +, inf, 0>.
struct TropicalIntSemiring {
  using value_type = std::int64_t;
  static constexpr const char* name = "tropical-int";
  static constexpr bool is_idempotent = false;
  static constexpr bool is_total = true;

  static constexpr std::int64_t bottom() { return kIntInf; }
  static constexpr std::int64_t top() { return 0; }
  static constexpr std::int64_t choose(std::int64_t a, std::int64_t b) {
    return a < b ? a : b;
  }
  static constexpr std::int64_t combine(std::int64_t a, std::int64_t b) {
    return (a == kIntInf || b == kIntInf) ? kIntInf : a + b;
  }
  static constexpr bool preceq(std::int64_t a, std::int64_t b) { return a >= b; }
};

/// <N u {inf}, max, min, 0, inf>.
struct IntegerSemiring {
  using value_type = std::int64_t;
  static constexpr const char* name = "integer";
  static constexpr bool is_idempotent = true;
  static constexpr bool is_total = true;

  static constexpr std::int64_t bottom() { return 0; }
  static constexpr std::int64_t top() { return kIntInf; }
  static constexpr std::int64_t choose(std::int64_t a, std::int64_t b) {
    return a > b ? a : b;
  }
  static constexpr std::int64_t combine(std::int64_t a, std::int64_t b) {
    return a < b ? a : b;
  }
  static constexpr bool preceq(std::int64_t a, std::int64_t b) { return a <= b; }
};

// --------------------------------------------------------------------------

/// Folds choose over a collection starting from bottom, the choose-identity.
/// An empty collection yields bottom (no candidate at all).
template <class S, class Range>
typename S::value_type choose_all(const Range& values) {
  typename S::value_type acc = S::bottom();
  for (const auto& v : values) acc = S::choose(acc, v);
  return acc;
}

}  // namespace strel

#pragma once

#include <cstdint>

namespace adlin {

/// Domain values and all derived arithmetic are 64-bit signed. Callers must
/// keep values and coefficients within |v| <= 2^31 so that intermediate
/// products and sums cannot overflow; the library does not check for it.
using Value = std::int64_t;

/// Dense variable index into a DomainStore / ProblemInstance.
using VariableId = std::uint32_t;

/// Relations accepted at the problem level. Filtering itself only works on
/// the <= and >= forms; the others are normalized away when a solver is built.
enum class Rel { le, ge, eq, lt, gt };

/// Quotient rounded toward negative infinity (b != 0).
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  std::int64_t r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

/// Quotient rounded toward positive infinity (b != 0).
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  std::int64_t r = a % b;
  if (r != 0 && ((r < 0) == (b < 0))) ++q;
  return q;
}

}  // namespace adlin

// Exact integer scalars and the dense Eigen aliases used across the library.
#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <limits>
#include <type_traits>

#include "toric/error.hpp"

// Eigen 3.4 dense types expose a `const_iterator` typedef that boost 1.74
// mistakes for a byte container when resolving scalar * matrix overloads.
namespace boost::multiprecision::detail {
template <class C>
  requires std::is_base_of_v<Eigen::EigenBase<C>, C>
struct is_byte_container<C> : boost::false_type {};
}  // namespace boost::multiprecision::detail

namespace toric {

/// Arbitrary precision integer used by the exact polyhedral and lattice code.
using Integer = boost::multiprecision::cpp_int;

/// Machine integer used for hot loops once values are known to be small.
using Coeff = std::int64_t;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using LatticePoint = VectorX<Coeff>;

}  // namespace toric

namespace Eigen {
template <>
struct NumTraits<toric::Integer> : GenericNumTraits<toric::Integer> {
  using Real = toric::Integer;
  using NonInteger = toric::Integer;
  using Literal = toric::Integer;
  using Nested = toric::Integer;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 8,
    MulCost = 16
  };
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace toric {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

template <typename Scalar>
Scalar gcd_value(Scalar a, Scalar b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Scalar r = a % b;
    a = b;
    b = r;
  }
  return a;
}

/// Floor division; the divisor must be non-zero.
template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

/// Narrow an exact integer to a machine type, throwing when it does not fit.
template <std::integral To, typename From>
To narrow(const From& x) {
  if constexpr (std::is_integral_v<From>) {
    if (x < From(std::numeric_limits<To>::min()) || x > From(std::numeric_limits<To>::max()))
      throw Error(ErrorCode::Overflow, "integer does not fit machine word");
    return static_cast<To>(x);
  } else {
    if (x < Integer(std::numeric_limits<To>::min()) || x > Integer(std::numeric_limits<To>::max()))
      throw Error(ErrorCode::Overflow, "integer does not fit machine word");
    return x.template convert_to<To>();
  }
}

template <typename To, typename Derived>
VectorX<To> narrow_vector(const Eigen::MatrixBase<Derived>& v) {
  VectorX<To> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = narrow<To>(v(i));
  return out;
}

}  // namespace toric

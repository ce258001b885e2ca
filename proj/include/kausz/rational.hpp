#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <type_traits>

// Boost 1.74 probes every constructor argument for a byte container through
// iterator_traits<C::const_iterator>, a hard error in C++20 when that type is void
// (Eigen matrices).  Such types are never byte containers.
namespace boost::multiprecision::detail {
template <class C>
  requires std::is_void_v<typename C::const_iterator>
struct is_byte_container_imp<C, true> : boost::false_type {};
}  // namespace boost::multiprecision::detail

namespace kausz {

// Expression templates are disabled so both types behave as plain Eigen scalars.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Canonical form "p/q" with q > 0 and gcd(p, q) = 1; integers keep the "/1".
std::string to_string(const Rational& q);

// Accepts "a", "-a", "a/b"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);
Integer numerator_of(const Rational& q);
Integer denominator_of(const Rational& q);

Integer binomial(int n, int k);

}  // namespace kausz

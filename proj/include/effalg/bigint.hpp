#ifndef EFFALG_BIGINT_HPP
#define EFFALG_BIGINT_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace effalg {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt pow(const BigInt& base, std::uint64_t exponent);

}  // namespace effalg

#endif  // EFFALG_BIGINT_HPP

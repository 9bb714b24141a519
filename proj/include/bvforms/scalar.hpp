#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bvf {

// Exact rational coefficient. mpq_class keeps values canonical
// (lowest terms, positive denominator) after every arithmetic operation.
using Scalar = mpq_class;

// num/den in canonical form; den must be non-zero.
Scalar ratio(long num, long den);

// "a" for integers, "a/b" otherwise.
std::string to_string(const Scalar& value);

// Always "a/b", the exchange format of the JSON interfaces.
std::string to_fraction_string(const Scalar& value);

// Accepts "a", "-a", "a/b"; throws InvalidArgument on malformed text or b == 0.
Scalar parse_scalar(std::string_view text);

}  // namespace bvf

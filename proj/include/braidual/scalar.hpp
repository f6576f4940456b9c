#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace braidual {

// GMP keeps results of arithmetic in canonical form.
using Scalar = mpq_class;

// Accepts "p", "-p" and "p/q"; throws ErrorKind::Parse on anything else.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& s);

Scalar scalar_pow(const Scalar& base, long exponent);

}  // namespace braidual

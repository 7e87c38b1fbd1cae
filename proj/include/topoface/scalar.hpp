#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace topoface {

/// Exact rational number. GMP keeps it canonical (reduced, positive denominator).
using Scalar = mpq_class;

/// Parses "p" or "p/q" (optional leading '-'), requiring lowest terms and q > 0.
/// Throws ParseError on anything else.
Scalar parse_scalar(std::string_view text);

/// Canonical "p/q" or "p" form; parse_scalar(format_scalar(x)) == x.
std::string format_scalar(const Scalar& value);

/// Display-only conversion. Never feed the result back into a predicate.
double to_double(const Scalar& value);

int sign(const Scalar& value);

/// Canonical num/den; den must be nonzero.
Scalar ratio(long num, long den);

} // namespace topoface

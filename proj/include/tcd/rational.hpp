#pragma once

#include <gmpxx.h>

#include <string>

namespace tcd {

using Rational = mpq_class;

/// "p/q", "-p/q" or an integer. Throws BadParam on anything else or a zero
/// denominator.
Rational parse_rational(const std::string& text);

/// Canonical "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& q);

}  // namespace tcd

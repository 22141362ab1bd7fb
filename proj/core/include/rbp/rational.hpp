#pragma once

#include <gmpxx.h>

#include <string>

namespace rbp {

// Exact rational weight. All cost comparisons in the library are exact;
// no floating point is used in any optimization decision.
using Rat = mpq_class;

// Parses "a", "-a", or "a/b" into canonical form. Throws std::invalid_argument
// on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// Canonical rendering: integer if the denominator is 1, else "a/b".
std::string rat_to_string(const Rat& r);

double rat_to_double(const Rat& r);

}  // namespace rbp

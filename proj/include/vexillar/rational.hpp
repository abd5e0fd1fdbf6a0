#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vexillar {

using Rat = mpq_class;
using Int = mpz_class;

// Parses "p", "-p" or "p/q" into a canonical rational.
std::optional<Rat> parse_rational(const std::string& s);

// Canonical "p" or "p/q" rendering.
std::string rational_to_string(const Rat& r);

// Factorial as an exact integer.
Int factorial(unsigned long k);

// Binomial coefficient C(n, k).
Int binomial(unsigned long n, unsigned long k);

// FNV-style hash of the canonical representation, for dedup tables.
std::size_t hash_rational(const Rat& r);

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace vexillar

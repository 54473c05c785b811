#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace fusionlab {

/// Solves A x = b over Z/modulus by diagonalizing A with unimodular row and
/// column operations (a Smith-style reduction that skips the divisibility
/// chain, which solving does not need). Entries of A and b may be any
/// integers; they are reduced first. Returns one solution with entries in
/// [0, modulus), or nullopt when the system is inconsistent.
std::optional<std::vector<std::int64_t>> solve_mod(std::vector<std::vector<std::int64_t>> a,
                                                   std::vector<std::int64_t> b, std::int64_t modulus);

/// Extended gcd: returns g = gcd(a, b) >= 0 with s*a + t*b = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t);

}  // namespace fusionlab

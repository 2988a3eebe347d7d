#pragma once

#include <cstdint>

namespace grpfun {

// Least positive m with m*n = 1 (mod modulus). Throws Errc::coprimality when
// gcd(n, modulus) != 1 and Errc::precondition for zero arguments.
std::uint64_t mod_inverse(std::uint64_t n, std::uint64_t modulus);

bool is_prime(std::uint64_t n);

// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

}  // namespace grpfun

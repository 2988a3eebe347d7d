#include "grpfun/number.hpp"

#include <numeric>
#include <string>

#include "grpfun/error.hpp"

namespace grpfun {

std::uint64_t mod_inverse(std::uint64_t n, std::uint64_t modulus) {
  if (n == 0 || modulus == 0) fail(Errc::precondition, "mod_inverse arguments must be positive");
  if (std::gcd(n, modulus) != 1)
    fail(Errc::coprimality, std::to_string(n) + " is not invertible modulo " + std::to_string(modulus));
  if (modulus == 1) return 1;
  // Extended Euclid on (n mod modulus, modulus).
  std::int64_t old_r = static_cast<std::int64_t>(n % modulus), r = static_cast<std::int64_t>(modulus);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const auto q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  const auto m = static_cast<std::int64_t>(modulus);
  auto result = old_s % m;
  if (result <= 0) result += m;
  return static_cast<std::uint64_t>(result);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  if (p < 2 || n == 0) return 1;
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

}  // namespace grpfun

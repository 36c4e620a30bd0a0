#include "quotmaps/fp.hpp"

namespace quot {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

Fp::Fp(std::int64_t v, std::uint32_t prime) : p_(prime) {
  if (prime < 2 || prime >= (1u << 31)) throw DomainError("prime out of range: " + std::to_string(prime));
  std::int64_t r = v % static_cast<std::int64_t>(prime);
  if (r < 0) r += prime;
  v_ = static_cast<std::uint32_t>(r);
}

Fp Fp::inverse() const {
  if (v_ == 0) throw DomainError("inverse of zero in F_" + std::to_string(p_));
  // extended Euclid on (v, p)
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Fp(x0, p_);
}

}  // namespace quot

#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "quotmaps/errors.hpp"

namespace quot {

bool is_prime(std::uint64_t p);

/// Element of the prime field F_p, p < 2^31. The prime travels with the value so
/// that mixing fields is caught at run time.
class Fp {
 public:
  Fp(std::int64_t v, std::uint32_t prime);

  std::uint32_t value() const noexcept { return v_; }
  std::uint32_t prime() const noexcept { return p_; }

  /// Throws DomainError on zero.
  Fp inverse() const;

  Fp& operator+=(const Fp& o) {
    check(o);
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} + o.v_) % p_);
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    check(o);
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} + p_ - o.v_) % p_);
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    check(o);
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} * o.v_) % p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend Fp operator-(const Fp& a) { return Fp(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }

  friend bool operator==(const Fp& a, const Fp& b) {
    a.check(b);
    return a.v_ == b.v_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.v_; }

 private:
  void check(const Fp& o) const {
    if (o.p_ != p_)
      throw FieldMismatch("F_" + std::to_string(p_) + " and F_" + std::to_string(o.p_) + " mixed");
  }

  std::uint32_t v_;
  std::uint32_t p_;
};

inline bool is_zero(const Fp& x) { return x.value() == 0; }
inline Fp zero_like(const Fp& x) { return Fp(0, x.prime()); }
inline Fp one_like(const Fp& x) { return Fp(1, x.prime()); }
inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

}  // namespace quot

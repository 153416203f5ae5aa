#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace bdm {

inline constexpr std::size_t kMaxVars = 32;

// Dense exponent vector; entries beyond the ring's variable count stay 0.
class Monomial {
 public:
  using Exp = std::uint16_t;

  Monomial() { e_.fill(0); }

  Exp operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned v) {
    if (v > 0xFFFF) throw std::overflow_error("exponent overflow");
    e_[i] = static_cast<Exp>(v);
  }
  unsigned degree() const {
    unsigned s = 0;
    for (auto x : e_) s += x;
    return s;
  }
  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](Exp x) { return x == 0; });
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] && other.e_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned s = unsigned(a.e_[i]) + b.e_[i];
      if (s > 0xFFFF) throw std::overflow_error("exponent overflow");
      m.e_[i] = static_cast<Exp>(s);
    }
    return m;
  }
  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e_[i] = static_cast<Exp>(a.e_[i] - b.e_[i]);
    return m;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e_[i] = std::max(a.e_[i], b.e_[i]);
    return m;
  }
  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e_[i] = std::min(a.e_[i], b.e_[i]);
    return m;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : e_) h = (h ^ x) * 1099511628211ull;
    return h;
  }

 private:
  std::array<Exp, kMaxVars> e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Degree reverse lexicographic comparison on the first nvars variables:
// returns <0, 0, >0.
inline int grevlex_compare(const Monomial& a, const Monomial& b, std::size_t nvars) {
  unsigned da = 0, db = 0;
  for (std::size_t i = 0; i < nvars; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = nvars; i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace bdm

#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "formcert/multipoly.hpp"

namespace formcert {

// Default modulus: the Mersenne prime 2^61 - 1. Any odd prime below 2^62
// works with the routines here; the default is what certificates record.
inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);

// Deterministic splitmix64 stream; identical across platforms, unlike the
// standard library distributions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [0, bound) by rejection.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

using ModAssignment = std::map<VarId, std::uint64_t>;

// Evaluates p at the assignment in the prime field. Every variable of p
// must be assigned and prime must exceed the total degree.
std::uint64_t mod_eval(const MultiPoly& p, const ModAssignment& assignment,
                       std::uint64_t prime);

}  // namespace formcert

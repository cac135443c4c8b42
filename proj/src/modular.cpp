#include "formcert/modular.hpp"

#include "formcert/error.hpp"

namespace formcert {

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  if (s >= p || s < a) s -= p;
  return s;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  // rejection sampling keeps the draw exactly uniform
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t mod_eval(const MultiPoly& p, const ModAssignment& assignment,
                       std::uint64_t prime) {
  if (prime <= p.total_degree())
    throw ValidationError("mod_eval: prime must exceed the total degree");
  std::uint64_t acc = 0;
  for (const auto& [mono, coeff] : p.terms()) {
    std::uint64_t t = coeff.mod(prime);
    for (const auto& [v, e] : mono) {
      auto it = assignment.find(v);
      if (it == assignment.end())
        throw ValidationError("mod_eval: unassigned variable " + v.str());
      t = mod_mul(t, mod_pow(it->second, e, prime), prime);
    }
    acc = mod_add(acc, t, prime);
  }
  return acc;
}

}  // namespace formcert

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tricover {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// A residue class value mod modulus, with 0 <= value < modulus.
struct Residue {
  BigInt value;
  BigInt modulus;

  Residue(BigInt v, BigInt m);
  bool operator==(const Residue&) const = default;
};

/// One cycle of the multiplication-by-r action on nonzero residues mod m,
/// listed from its minimal element.
struct Orbit {
  std::vector<Int> elements;
  bool operator==(const Orbit&) const = default;
};

// Deterministic Miller-Rabin for n < 3.317e24 (fixed base set); strong
// probable-prime test beyond that.
bool is_prime(const BigInt& n);
bool is_prime(Int n);

std::vector<std::pair<BigInt, int>> factorize(BigInt n);
BigInt euler_phi(const BigInt& n);

// Legendre symbol (a/ell) for odd prime ell, by Euler's criterion.
// Rejects ell that fails the primality test.
int legendre(const BigInt& a, const BigInt& ell);
int legendre(Int a, Int ell);

// Least k >= 1 with a^k = 1 mod n; requires gcd(a, n) = 1.
BigInt mult_order(const BigInt& a, const BigInt& n);
Int mult_order(Int a, Int n);

// Cycles of j -> r*j mod m on {1, ..., m-1}; requires gcd(r, m) = 1.
// Each orbit starts at its minimal element; orbits sorted by minimal element.
std::vector<Orbit> frobenius_orbits(Int m, Int r);

// Unique residue mod lcm of the moduli satisfying all the given congruences.
// Throws on an inconsistent system, naming the first conflicting pair.
Residue crt_lift(const std::vector<Residue>& parts);

// Modular exponentiation on Int without overflow.
Int powmod(Int base, Int exp, Int mod);

}  // namespace tricover

#include "tricover/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tricover {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::powm;

Int mulmod(Int a, Int b, Int m) {
  return static_cast<Int>(static_cast<__int128>(a) * b % m);
}

// Miller-Rabin with the first twelve primes as bases is deterministic for
// all n below 3.317e24.
constexpr Int kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin(const BigInt& n) {
  BigInt d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (Int b : kMrBases) {
    if (n == b) return true;
    BigInt x = powm(BigInt(b) % n, d, n);
    if (x == 0) return false;  // base divides n
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

BigInt egcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  BigInt x1, y1;
  BigInt g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// Inverse of a mod m; requires gcd(a, m) = 1.
BigInt invmod(const BigInt& a, const BigInt& m) {
  BigInt x, y;
  BigInt g = egcd(((a % m) + m) % m, m, x, y);
  if (g != 1) throw std::invalid_argument("invmod: not invertible");
  x %= m;
  if (x < 0) x += m;
  return x;
}

BigInt pollard_rho(const BigInt& n) {
  // Floyd cycle detection on x -> x^2 + c; n must be odd and composite.
  for (BigInt c = 1;; ++c) {
    BigInt x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = gcd(x >= y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(BigInt n, std::map<BigInt, int>& out) {
  for (Int p : {2, 3, 5}) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  for (Int p = 7; BigInt(p) * p <= n && p < 1'000'000; p += 2) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Residue::Residue(BigInt v, BigInt m) : value(std::move(v)), modulus(std::move(m)) {
  if (modulus < 1) throw std::invalid_argument("Residue: modulus must be >= 1");
  value %= modulus;
  if (value < 0) value += modulus;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (Int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  return miller_rabin(n);
}

bool is_prime(Int n) { return is_prime(BigInt(n)); }

std::vector<std::pair<BigInt, int>> factorize(BigInt n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  std::map<BigInt, int> acc;
  if (n > 1) factor_into(std::move(n), acc);
  return {acc.begin(), acc.end()};
}

BigInt euler_phi(const BigInt& n) {
  BigInt phi = 1;
  for (const auto& [p, e] : factorize(n)) {
    phi *= p - 1;
    for (int i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

int legendre(const BigInt& a, const BigInt& ell) {
  if (ell < 3 || ell % 2 == 0 || !is_prime(ell))
    throw std::invalid_argument("legendre: ell must be an odd prime");
  BigInt r = a % ell;
  if (r < 0) r += ell;
  if (r == 0) return 0;
  BigInt e = powm(r, (ell - 1) / 2, ell);
  if (e == 1) return 1;
  if (e == ell - 1) return -1;
  throw std::logic_error("legendre: Euler criterion failed; ell is composite");
}

int legendre(Int a, Int ell) { return legendre(BigInt(a), BigInt(ell)); }

BigInt mult_order(const BigInt& a, const BigInt& n) {
  if (n < 1) throw std::invalid_argument("mult_order: n must be >= 1");
  if (n == 1) return 1;
  BigInt r = a % n;
  if (r < 0) r += n;
  if (gcd(r, n) != 1) throw std::invalid_argument("mult_order: gcd(a, n) != 1");
  // The order divides phi(n); strip prime factors while the power stays 1.
  BigInt ord = euler_phi(n);
  for (const auto& [q, e] : factorize(ord)) {
    (void)e;
    while (ord % q == 0 && powm(r, ord / q, n) == 1) ord /= q;
  }
  return ord;
}

Int mult_order(Int a, Int n) { return static_cast<Int>(mult_order(BigInt(a), BigInt(n))); }

std::vector<Orbit> frobenius_orbits(Int m, Int r) {
  if (m < 2) throw std::invalid_argument("frobenius_orbits: m must be >= 2");
  r %= m;
  if (r < 0) r += m;
  if (std::gcd(r, m) != 1) throw std::invalid_argument("frobenius_orbits: gcd(r, m) != 1");
  std::vector<bool> seen(m, false);
  std::vector<Orbit> orbits;
  for (Int j = 1; j < m; ++j) {
    if (seen[j]) continue;
    Orbit o;
    Int x = j;
    do {
      seen[x] = true;
      o.elements.push_back(x);
      x = mulmod(x, r, m);
    } while (x != j);
    orbits.push_back(std::move(o));
  }
  return orbits;
}

Residue crt_lift(const std::vector<Residue>& parts) {
  if (parts.empty()) throw std::invalid_argument("crt_lift: empty system");
  BigInt x = parts[0].value, mod = parts[0].modulus;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const BigInt& r = parts[i].value;
    const BigInt& m = parts[i].modulus;
    BigInt g = gcd(mod, m);
    if ((x - r) % g != 0) {
      // Pairwise consistency implies global consistency, so some earlier
      // constraint conflicts with this one directly; name that pair.
      for (std::size_t j = 0; j < i; ++j) {
        BigInt gj = gcd(parts[j].modulus, m);
        if ((parts[j].value - r) % gj != 0)
          throw std::invalid_argument("crt_lift: inconsistent congruences at indices " +
                                      std::to_string(j) + " and " + std::to_string(i));
      }
      throw std::logic_error("crt_lift: inconsistency without a conflicting pair");
    }
    // x' = x + mod * t with x + mod * t = r mod m, i.e. t = (r-x)/g * inv(mod/g) mod m/g.
    BigInt mg = m / g;
    BigInt t = 0;
    if (mg > 1) {
      t = ((r - x) / g) % mg;
      t = (t * invmod(mod / g, mg)) % mg;
      if (t < 0) t += mg;
    }
    BigInt lcm = mod / g * m;
    x = (x + mod * t) % lcm;
    mod = lcm;
  }
  return Residue(x, mod);
}

Int powmod(Int base, Int exp, Int mod) {
  if (mod <= 0) throw std::invalid_argument("powmod: mod must be positive");
  if (exp < 0) throw std::invalid_argument("powmod: negative exponent");
  base %= mod;
  if (base < 0) base += mod;
  Int result = 1 % mod;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

}  // namespace tricover

#include <doctest.h>

#include <numeric>

#include "tricover/arith.hpp"

using namespace tricover;

TEST_CASE("legendre symbol basics") {
  CHECK(legendre(1, 7) == 1);
  CHECK(legendre(14, 7) == 0);
  // squares mod 7 are {1,2,4}
  CHECK(legendre(3, 7) == -1);
  CHECK_THROWS(legendre(3, 9));
  CHECK_THROWS(legendre(3, 8));
}

TEST_CASE("legendre symbol is multiplicative") {
  for (Int ell : {5, 7, 11, 13, 23}) {
    for (Int a = 0; a < 2 * ell; ++a)
      for (Int b = 0; b < ell; ++b)
        CHECK(legendre(a, ell) * legendre(b, ell) == legendre(a * b, ell));
  }
}

TEST_CASE("multiplicative orders") {
  CHECK(mult_order(1, 20) == 1);
  // powers of 3 mod 11: 3, 9, 5, 4, 1
  CHECK(mult_order(3, 11) == 5);
  // 2 is a primitive root mod 13
  CHECK(mult_order(2, 13) == 12);
  CHECK(mult_order(7, 1) == 1);
  CHECK_THROWS(mult_order(6, 20));
}

TEST_CASE("order divides phi") {
  for (Int n = 2; n <= 60; ++n)
    for (Int a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      Int ord = mult_order(a, n);
      CHECK(static_cast<Int>(euler_phi(n)) % ord == 0);
      CHECK(powmod(a, ord, n) == 1 % n);
    }
}

TEST_CASE("frobenius orbits match the worked examples") {
  auto orbits = frobenius_orbits(20, 11);
  std::vector<std::vector<Int>> expected = {{1, 11}, {2},  {3, 13}, {4},  {5, 15},
                                            {6},     {7, 17}, {8},  {9, 19}, {10},
                                            {12},    {14}, {16},    {18}};
  REQUIRE(orbits.size() == expected.size());
  for (std::size_t i = 0; i < orbits.size(); ++i) CHECK(orbits[i].elements == expected[i]);

  auto orbits35 = frobenius_orbits(35, 3);
  std::vector<std::vector<Int>> expected35 = {
      {1, 3, 9, 27, 11, 33, 29, 17, 16, 13, 4, 12},
      {2, 6, 18, 19, 22, 31, 23, 34, 32, 26, 8, 24},
      {5, 15, 10, 30, 20, 25},
      {7, 21, 28, 14}};
  REQUIRE(orbits35.size() == expected35.size());
  for (std::size_t i = 0; i < orbits35.size(); ++i) CHECK(orbits35[i].elements == expected35[i]);
}

TEST_CASE("identity action gives singletons") {
  for (Int m : {2, 7, 12}) {
    auto orbits = frobenius_orbits(m, 1);
    REQUIRE(static_cast<Int>(orbits.size()) == m - 1);
    for (const auto& o : orbits) CHECK(o.elements.size() == 1);
  }
}

TEST_CASE("orbit structure invariants") {
  for (Int m : {6, 20, 35, 36}) {
    for (Int r = 2; r < m; ++r) {
      if (std::gcd(r, m) != 1) continue;
      auto orbits = frobenius_orbits(m, r);
      std::vector<bool> seen(m, false);
      Int total = 0;
      for (const auto& o : orbits) {
        total += static_cast<Int>(o.elements.size());
        Int shared_gcd = std::gcd(o.elements[0], m);
        for (Int j : o.elements) {
          CHECK(!seen[j]);
          seen[j] = true;
          CHECK(std::gcd(j, m) == shared_gcd);
          // closure under multiplication by r
          Int next = (j * r) % m;
          CHECK(std::find(o.elements.begin(), o.elements.end(), next) != o.elements.end());
        }
      }
      CHECK(total == m - 1);
    }
  }
  CHECK_THROWS(frobenius_orbits(20, 5));
}

TEST_CASE("crt lift") {
  Residue r = crt_lift({Residue(11, 20), Residue(2, 3)});
  CHECK(r.value == 11);
  CHECK(r.modulus == 60);

  Residue trivial = crt_lift({Residue(0, 1)});
  CHECK(trivial.value == 0);
  CHECK(trivial.modulus == 1);

  CHECK_THROWS_WITH_AS(static_cast<void>(crt_lift({Residue(1, 4), Residue(3, 4)})),
                       doctest::Contains("indices 0 and 1"), std::invalid_argument);

  // non-coprime but consistent moduli
  Residue s = crt_lift({Residue(5, 6), Residue(5, 10)});
  CHECK(s.value == 5);
  CHECK(s.modulus == 30);

  Residue big = crt_lift({Residue(3, 1000003), Residue(7, 1000033), Residue(11, 1000037)});
  CHECK(big.value % 1000003 == 3);
  CHECK(big.value % 1000033 == 7);
  CHECK(big.value % 1000037 == 11);
}

TEST_CASE("primality and factorization utilities") {
  CHECK(is_prime(2));
  CHECK(is_prime(839));
  CHECK(is_prime(1019));
  CHECK(is_prime(BigInt("2039")));
  CHECK(!is_prime(1));
  CHECK(!is_prime(1000001));  // 101 * 9901
  // Carmichael number
  CHECK(!is_prime(561));

  auto f = factorize(5040);
  std::vector<std::pair<BigInt, int>> expected = {{2, 4}, {3, 2}, {5, 1}, {7, 1}};
  CHECK(f == expected);
  CHECK(euler_phi(20) == 8);
  CHECK(euler_phi(1320) == 320);

  // both factors sit beyond the trial-division range
  auto semi = factorize(BigInt(1000003) * 1000033);
  std::vector<std::pair<BigInt, int>> sexpected = {{1000003, 1}, {1000033, 1}};
  CHECK(semi == sexpected);

  Residue wide = crt_lift({Residue(5, BigInt(1) << 40), Residue(2, BigInt("205891132094649"))});
  CHECK(wide.value % (BigInt(1) << 40) == 5);
  CHECK(wide.value % BigInt("205891132094649") == 2);  // 3^30
  CHECK(wide.modulus == (BigInt(1) << 40) * BigInt("205891132094649"));
}

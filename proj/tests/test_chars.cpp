#include <doctest.h>

#include <numeric>
#include <set>

#include "tricover/chars.hpp"

using namespace tricover;

namespace {

Cover prop32_cover() { return cover_from_inertia(make_group(20), {1, 0}, {9, 0}, {10, 0}); }
Cover prop41_cover() { return cover_from_inertia(make_group(35), {1, 0}, {20, 0}, {14, 0}); }

std::set<Int> ones(const Cover& c) {
  std::set<Int> out;
  SignatureTable t(c);
  for (int i = 0; i < t.size(); ++i)
    if (t.f(i) == 1) out.insert(t.relevant()[static_cast<std::size_t>(i)].x);
  return out;
}

}  // namespace

TEST_CASE("pairing") {
  AbelianGroup z20 = make_group(20);
  CHECK(pairing(z20, {1, 0}, {9, 0}) == Rat{9, 20});
  CHECK(pairing(z20, {0, 0}, {13, 0}) == Rat{0, 1});
  AbelianGroup v4 = make_group(2, 2);
  CHECK(pairing(v4, {1, 0}, {0, 1}) == Rat{0, 1});
  CHECK(pairing(v4, {1, 1}, {1, 1}) == Rat{0, 1});
  CHECK(pairing(v4, {1, 0}, {1, 0}) == Rat{1, 2});
  // bilinearity mod 1
  AbelianGroup g = make_group(12, 2);
  for (Int tx = 0; tx < g.c; ++tx)
    for (Int ax = 0; ax < g.c; ++ax)
      for (Int ay = 0; ay < g.d; ++ay) {
        Rat p1 = pairing(g, {tx, 1}, {ax, ay});
        Rat doubled = pairing(g, scalar_mul(g, 2, {tx, 1}), {ax, ay});
        Int m = g.order();
        CHECK((2 * p1.num * (m / p1.den)) % m == doubled.num * (m / doubled.den) % m);
      }
}

TEST_CASE("signature reproduces the worked signature sets") {
  CHECK(ones(prop32_cover()) == std::set<Int>{1, 3, 5, 7, 9});
  CHECK(ones(prop41_cover()) == std::set<Int>{1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23});
}

TEST_CASE("signature conventions") {
  Cover c = prop32_cover();
  // pairing with a_inf = 10 vanishes on even characters
  CHECK(signature(c, {2, 0}) == 0);
  CHECK(signature(c, {10, 0}) == 0);
  CHECK_THROWS(signature(c, {0, 0}));
  CHECK_THROWS(signature(c, {20, 0}));  // reduces to the trivial character
}

TEST_CASE("relevant characters") {
  auto r32 = relevant_characters(prop32_cover());
  std::vector<Character> expect32;
  for (Int j = 1; j < 20; j += 2) expect32.push_back({j, 0});
  CHECK(r32 == expect32);

  auto r41 = relevant_characters(prop41_cover());
  CHECK(r41.size() == 24);
  for (const auto& tau : r41) {
    CHECK(tau.x % 5 != 0);
    CHECK(tau.x % 7 != 0);
  }
}

TEST_CASE("cyclic chevalley-weil agrees with the direct fractional-part formula") {
  for (const auto& c : {prop32_cover(), prop41_cover()}) {
    Int m = c.group.order();
    for (Int j = 1; j < m; ++j) {
      Int total = 0;
      bool zero = false;
      for (const auto& ab : c.inertia.tuple()) {
        Int num = (j * ab.x) % m;
        if (num == 0) zero = true;
        total += (m - num) % m;
      }
      int expect = zero ? 0 : static_cast<int>(total / m - 1);
      CHECK(signature(c, {j, 0}) == expect);
    }
  }
}

TEST_CASE("signature table invariants at small genus") {
  for (Int g = 2; g <= 5; ++g)
    for (const auto& c : enumerate_covers(g)) {
      SignatureTable table(c);
      CHECK(table.size() == 2 * g);
      Int total_f = 0;
      for (int i = 0; i < table.size(); ++i) {
        total_f += table.f(i);
        // Serre duality shadow
        CHECK(table.f(i) + table.f(table.neg_index(i)) == 1);
      }
      CHECK(total_f == g);
      // sum over all nontrivial characters equals g as well (others are 0)
      Int all = 0;
      for (Int x = 0; x < c.group.c; ++x)
        for (Int y = 0; y < c.group.d; ++y) {
          if (x == 0 && y == 0) continue;
          all += signature(c, {x, y});
        }
      CHECK(all == g);
      // stability of the relevant set under units
      Int e = c.group.exponent();
      for (Int r = 1; r < e; ++r) {
        if (std::gcd(r, e) != 1) continue;
        for (int i = 0; i < table.size(); ++i) CHECK(table.mul_index(r, i) >= 0);
      }
    }
}

TEST_CASE("orbit decomposition of the relevant set") {
  SignatureTable table(prop41_cover());
  auto orbits = table.orbits(3);
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0].size() == 12);
  CHECK(orbits[1].size() == 12);
  CHECK_THROWS(table.orbits(7));
}

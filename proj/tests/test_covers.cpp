#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "tricover/covers.hpp"

using namespace tricover;

namespace {

Cover prop32_cover() { return cover_from_inertia(make_group(20), {1, 0}, {9, 0}, {10, 0}); }
Cover prop41_cover() { return cover_from_inertia(make_group(35), {1, 0}, {20, 0}, {14, 0}); }

}  // namespace

TEST_CASE("element arithmetic in Z/c x Z/d") {
  AbelianGroup g = make_group(12, 2);
  CHECK(g.order() == 24);
  CHECK(g.exponent() == 12);
  CHECK(!g.cyclic());
  CHECK(element_order(g, {1, 0}) == 12);
  CHECK(element_order(g, {0, 1}) == 2);
  CHECK(element_order(g, {4, 1}) == 6);
  CHECK(add(g, {11, 1}, {1, 1}) == GroupElement{0, 0});
  CHECK(neg(g, {5, 1}) == GroupElement{7, 1});
  CHECK(scalar_mul(g, 7, {2, 1}) == GroupElement{2, 1});
  CHECK(generates(g, {1, 0}, {0, 1}));
  CHECK(!generates(g, {1, 0}, {2, 0}));
  CHECK(!generates(g, {2, 1}, {4, 0}));
  CHECK_THROWS(make_group(12, 5));
}

TEST_CASE("riemann-hurwitz genus") {
  CHECK(genus(make_group(20), {20, 20, 2, 1}) == 5);
  CHECK(genus(make_group(35), {35, 7, 5, 1}) == 12);
  // the one-parameter family [n*ell, n*ell, ell, 1] has genus n(ell-1)/2
  CHECK(genus(make_group(22), {22, 22, 11, 1}) == 10);
  CHECK_THROWS(genus(make_group(20), {20, 20, 3, 1}));  // 3 does not divide 20
  CHECK_THROWS(genus(make_group(20), {10, 10, 2, 1}));  // m != s*c0
}

TEST_CASE("inertia validation") {
  CHECK(validate_inertia(make_group(20), {20, 20, 2, 1}, {{1, 0}, {9, 0}, {10, 0}}).ok);
  CHECK(validate_inertia(make_group(35), {35, 7, 5, 1}, {{1, 0}, {20, 0}, {14, 0}}).ok);
  auto bad = validate_inertia(make_group(20), {20, 20, 2, 1}, {{1, 0}, {9, 0}, {11, 0}});
  CHECK(!bad.ok);
  CHECK(!bad.reason.empty());
  // non-generating pair in a non-cyclic group
  auto sub = validate_inertia(make_group(4, 2), {2, 2, 2, 4}, {{2, 0}, {2, 1}, {0, 1}});
  CHECK(!sub.ok);
}

TEST_CASE("cover constructors") {
  Cover c = prop32_cover();
  CHECK(c.ram == RamificationType{20, 20, 2, 1});
  CHECK(c.genus == 5);
  CHECK(prop41_cover().genus == 12);
  CHECK_THROWS(cover_from_inertia(make_group(20), {1, 0}, {9, 0}, {11, 0}));
  // branched at fewer than three points is rejected
  CHECK_THROWS(cover_from_inertia(make_group(5), {1, 0}, {4, 0}, {0, 0}));
}

TEST_CASE("canonicalize is idempotent and constant on orbits") {
  Cover c = prop32_cover();
  Cover canon = canonicalize(c);
  CHECK(canonicalize(canon) == canon);
  CHECK(canon.genus == c.genus);
  CHECK(canon.ram == c.ram);

  // image of (1,9,10) under the automorphism x -> 3x of Z/20
  Cover image = cover_from_inertia(make_group(20), {3, 0}, {7, 0}, {10, 0});
  CHECK(canonicalize(image) == canon);

  Cover c41 = prop41_cover();
  Cover canon41 = canonicalize(c41);
  CHECK(canonicalize(canon41) == canon41);
  // brute-force the full orbit: every image canonicalizes identically
  auto auts = automorphisms(c41.group);
  CHECK(auts.size() == 24);  // phi(35)
  for (const auto& aut : auts) {
    Cover img = cover_from_inertia(c41.group, apply(c41.group, aut, c41.inertia.a0),
                                   apply(c41.group, aut, c41.inertia.a1),
                                   apply(c41.group, aut, c41.inertia.ainf));
    CHECK(canonicalize(img) == canon41);
  }
}

TEST_CASE("automorphism groups") {
  CHECK(automorphisms(make_group(20)).size() == 8);    // phi(20)
  CHECK(automorphisms(make_group(2, 2)).size() == 6);  // GL_2(F_2)
  CHECK(automorphisms(make_group(4, 2)).size() == 8);
}

TEST_CASE("enumerate_covers finds the worked examples") {
  auto covers5 = enumerate_covers(5);
  CHECK(std::find(covers5.begin(), covers5.end(), canonicalize(prop32_cover())) != covers5.end());
  for (const auto& c : covers5) {
    CHECK(c.genus == 5);
    CHECK(validate_inertia(c.group, c.ram, c.inertia).ok);
    CHECK(canonicalize(c) == c);
    CHECK(genus(c.group, c.ram) == 5);
  }
  CHECK(std::is_sorted(covers5.begin(), covers5.end()));
  CHECK_THROWS(enumerate_covers(1));
}

TEST_CASE("enumerate_covers genus 12 contains the slope-5/12 cover" * doctest::timeout(600)) {
  auto covers12 = enumerate_covers(12);
  CHECK(std::find(covers12.begin(), covers12.end(), canonicalize(prop41_cover())) !=
        covers12.end());
}

TEST_CASE("group order bound is not binding" * doctest::timeout(600)) {
  for (Int g = 2; g <= 8; ++g) {
    auto base = enumerate_covers(g);
    auto widened = enumerate_covers(g, 0, 84 * (g - 1) + 100);
    CHECK(base == widened);
  }
}

TEST_CASE("cyclic inertia validity forces lcm of orders m") {
  for (Int g = 2; g <= 4; ++g)
    for (const auto& c : enumerate_covers(g)) {
      if (!c.group.cyclic()) continue;
      Int o0 = element_order(c.group, c.inertia.a0);
      Int o1 = element_order(c.group, c.inertia.a1);
      CHECK(std::lcm(o0, o1) == c.group.order());
    }
}

TEST_CASE("enumeration is worker-count independent") {
  CHECK(enumerate_covers(4, 1) == enumerate_covers(4, 3));
}

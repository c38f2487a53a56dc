#include <doctest.h>

#include <map>
#include <numeric>

#include "tricover/eo.hpp"
#include "tricover/newton.hpp"

using namespace tricover;

namespace {

Cover prop32_cover() { return cover_from_inertia(make_group(20), {1, 0}, {9, 0}, {10, 0}); }
Cover prop41_cover() { return cover_from_inertia(make_group(35), {1, 0}, {20, 0}, {14, 0}); }

// F and V as maps on character x-coordinates (cyclic case)
std::map<Int, Int> as_map(const DieudonneBasisMap& maps, const std::vector<int>& to) {
  std::map<Int, Int> out;
  for (int i = 0; i < maps.size(); ++i)
    if (to[static_cast<std::size_t>(i)] >= 0)
      out[maps.basis[static_cast<std::size_t>(i)].x] =
          maps.basis[static_cast<std::size_t>(to[static_cast<std::size_t>(i)])].x;
  return out;
}

}  // namespace

TEST_CASE("dieudonne maps of the superspecial genus-5 cover at 11") {
  auto maps = dieudonne_maps(prop32_cover(), 11);
  std::map<Int, Int> expected = {{11, 1}, {13, 3}, {15, 5}, {17, 7}, {19, 9}};
  CHECK(as_map(maps, maps.f_to) == expected);
  CHECK(as_map(maps, maps.v_to) == expected);
}

TEST_CASE("supersingular elliptic block") {
  // y^3 = x(1-x) has genus 1; at p = 2 mod 3 the block is F(e_2)=V(e_2)=e_1
  Cover c = cover_from_inertia(make_group(3), {1, 0}, {1, 0}, {1, 0});
  CHECK(c.genus == 1);
  auto maps = dieudonne_maps(c, 2);
  CHECK(as_map(maps, maps.f_to) == std::map<Int, Int>{{2, 1}});
  CHECK(as_map(maps, maps.v_to) == std::map<Int, Int>{{2, 1}});
  CHECK(final_type(maps) == FinalType{{0}});
}

TEST_CASE("ordinary maps split into singletons") {
  auto maps = dieudonne_maps(prop41_cover(), 1);
  for (int i = 0; i < maps.size(); ++i) {
    bool f_def = maps.f_to[static_cast<std::size_t>(i)] >= 0;
    bool v_def = maps.v_to[static_cast<std::size_t>(i)] >= 0;
    CHECK(f_def != v_def);
    if (f_def) CHECK(maps.f_to[static_cast<std::size_t>(i)] == i);
    if (v_def) CHECK(maps.v_to[static_cast<std::size_t>(i)] == i);
  }
  auto words = eo_words(maps);
  CHECK(std::count(words.begin(), words.end(), "f") == 12);
  CHECK(std::count(words.begin(), words.end(), "v") == 12);
}

TEST_CASE("kraft words") {
  auto words32 = eo_words(dieudonne_maps(prop32_cover(), 11));
  CHECK(words32 == std::vector<std::string>(5, "fv"));

  auto words41 = eo_words(dieudonne_maps(prop41_cover(), 3));
  REQUIRE(words41.size() == 2);
  std::multiset<Int> fcounts;
  for (const auto& w : words41) {
    CHECK(w.size() == 12);
    fcounts.insert(std::count(w.begin(), w.end(), 'f'));
  }
  CHECK(fcounts == std::multiset<Int>{5, 7});
}

TEST_CASE("non-unit residues are rejected") {
  CHECK_THROWS(dieudonne_maps(prop32_cover(), 5));
  CHECK_THROWS(dieudonne_maps(prop32_cover(), 0));
}

TEST_CASE("final types") {
  CHECK(final_type(dieudonne_maps(prop32_cover(), 11)) == FinalType{{0, 0, 0, 0, 0}});
  CHECK(final_type(dieudonne_maps(prop32_cover(), 19)) == FinalType{{0, 0, 0, 0, 0}});
  CHECK(final_type(dieudonne_maps(prop41_cover(), 1)) ==
        FinalType{{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}});
  CHECK(is_superspecial(FinalType{{0, 0, 0}}));
  CHECK(!is_superspecial(final_type(dieudonne_maps(prop41_cover(), 3))));
}

TEST_CASE("letter balance and stable sets across residues") {
  for (const auto& cover : {prop32_cover(), prop41_cover()}) {
    SignatureTable table(cover);
    Int e = cover.group.exponent();
    const Int g = cover.genus;
    for (Int r = 1; r < e; ++r) {
      if (std::gcd(r, e) != 1) continue;
      auto maps = dieudonne_maps(table, r);
      Int fs = 0, vs = 0;
      for (const auto& w : eo_words(maps)) {
        fs += std::count(w.begin(), w.end(), 'f');
        vs += std::count(w.begin(), w.end(), 'v');
      }
      CHECK(fs == g);
      CHECK(vs == g);

      NewtonPolygon np = newton_polygon(table, r);
      CHECK(static_cast<Int>(stable_f_set(maps).size()) == np.multiplicity(0, 1));
      CHECK(static_cast<Int>(stable_v_set(maps).size()) == np.multiplicity(1, 1));

      FinalType ft = final_type(maps);
      REQUIRE(static_cast<Int>(ft.nu.size()) == g);
      for (std::size_t i = 0; i < ft.nu.size(); ++i) {
        Int prev = i == 0 ? 0 : ft.nu[i - 1];
        CHECK(ft.nu[i] >= prev);
        CHECK(ft.nu[i] <= prev + 1);
        CHECK(ft.nu[i] <= static_cast<Int>(i) + 1);
      }
      if (is_superspecial(ft)) CHECK(is_supersingular(np));
    }
  }
}

TEST_CASE("a-number identity: g - nu_g counts vectors killed by both F and V") {
  for (Int g = 2; g <= 5; ++g)
    for (const auto& cover : enumerate_covers(g)) {
      SignatureTable table(cover);
      Int e = cover.group.exponent();
      for (Int r = 1; r < e; ++r) {
        if (std::gcd(r, e) != 1) continue;
        auto maps = dieudonne_maps(table, r);
        Int both_killed = 0;
        for (int i = 0; i < maps.size(); ++i)
          if (maps.f_to[static_cast<std::size_t>(i)] < 0 &&
              maps.v_to[static_cast<std::size_t>(i)] < 0)
            ++both_killed;
        FinalType ft = final_type(maps);
        CHECK(g - ft.nu.back() == both_killed);
      }
    }
}

TEST_CASE("eo depends only on the residue class") {
  SignatureTable table(prop32_cover());
  auto ft3 = final_type(dieudonne_maps(table, 3 % 20));
  for (Int p : {23, 43, 83}) CHECK(final_type(dieudonne_maps(table, p % 20)) == ft3);
}

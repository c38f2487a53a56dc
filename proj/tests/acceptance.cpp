// Acceptance suite: runs every criterion end to end and prints one line per
// criterion.  Exit status is the number of failures.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "tricover/density.hpp"
#include "tricover/json_io.hpp"
#include "tricover/theory.hpp"
#include "tricover/zeta.hpp"

using namespace tricover;

namespace {

int failures = 0;

void run(const std::string& name, const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string error;
  try {
    body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream line;
  line << (error.empty() ? "PASS" : "FAIL") << "  " << name << "  (" << secs << "s)";
  if (!error.empty()) {
    line << "\n      " << error;
    ++failures;
  }
  std::cout << line.str() << std::endl;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

Cover prop41_cover() { return cover_from_inertia(make_group(35), {1, 0}, {20, 0}, {14, 0}); }

bool genus5_superspecial_listed(Int p) {
  return p % 8 == 7 || p % 11 == 10 || p % 12 == 11 || p % 15 == 14 || p % 20 == 19 ||
         p % 15 == 11 || p % 20 == 11;
}

// covers of genus <= 8 are shared between several criteria
std::map<Int, std::vector<Cover>> g_covers;

const std::vector<Cover>& covers_of_genus(Int g) {
  auto it = g_covers.find(g);
  if (it == g_covers.end()) it = g_covers.emplace(g, enumerate_covers(g)).first;
  return it->second;
}

void criterion1_superspecial_genus5() {
  const auto& covers = covers_of_genus(5);
  std::vector<std::pair<Int, std::vector<Int>>> sets;
  Int order_lcm = 20;
  for (const auto& c : covers) {
    sets.emplace_back(c.group.exponent(),
                      property_residues(c, CoverProperty::superspecial).residues);
    order_lcm = std::lcm(order_lcm, c.group.order());
  }
  Int checked = 0;
  for (Int p = 2; p < 10'000; ++p) {
    if (!is_prime(p) || order_lcm % p == 0) continue;
    ++checked;
    bool computed = false;
    for (const auto& [e, rs] : sets)
      if (std::binary_search(rs.begin(), rs.end(), p % e)) {
        computed = true;
        break;
      }
    require(computed == genus5_superspecial_listed(p),
            "disagreement at p = " + std::to_string(p));
  }
  require(checked > 1000, "too few primes checked");
}

void criterion2_genus12_slopes() {
  SignatureTable table(prop41_cover());
  NewtonPolygon expect = make_polygon({{5, 12, 12}, {7, 12, 12}});
  for (Int p : {3, 47, 17, 103})
    require(newton_polygon(table, p % 35) == expect,
            "wrong polygon at p = " + std::to_string(p));
}

void criterion3_strata_dims() {
  for (Int g = 2; g <= 20; ++g)
    require(np_stratum_dim(supersingular_polygon(g)) == g * g / 4,
            "supersingular dim at g = " + std::to_string(g));
  for (Int g : {2, 5, 9, 12}) {
    require(eo_stratum_dim(FinalType{std::vector<Int>(static_cast<std::size_t>(g), 0)}) == 0,
            "superspecial EO dim");
    require(classify(ordinary_polygon(g), g).codim == 0, "ordinary NP codim");
    std::vector<Int> nu(static_cast<std::size_t>(g));
    std::iota(nu.begin(), nu.end(), 1);
    require(classify(FinalType{nu}, g).codim == 0, "ordinary EO codim");
  }
}

std::vector<Int> least_primes(Int ell, Int n, Theorem15Class want, std::size_t count) {
  std::vector<Int> out;
  for (Int p = 2; out.size() < count && p < 100000; ++p)
    if (is_prime(p) && theorem15_hypotheses(ell, n, p) == want) out.push_back(p);
  if (out.size() < count) throw std::runtime_error("prime search exhausted");
  return out;
}

void criterion4_theorem15_order_g() {
  for (Int ell : {7, 11, 13, 17, 19, 23})
    for (Int n = 1; n <= 4; ++n) {
      if (std::gcd(n, ell) != 1) continue;
      auto pred = predicted_slopes(ell);
      Cover cover = construct_cover(make_construction(ell, n));
      SignatureTable table(cover);
      NewtonPolygon expect = two_slope_polygon(pred.alpha, pred.g, n * pred.g);
      require(expect.height() == 2 * n * pred.g, "bad expected height");
      for (Int p : least_primes(ell, n, Theorem15Class::order_g, 2))
        require(newton_polygon(table, p % (n * ell)) == expect,
                "slope mismatch at ell=" + std::to_string(ell) + " n=" + std::to_string(n) +
                    " p=" + std::to_string(p));
    }
}

void criterion5_corollary18_order_2g() {
  for (Int ell : {7, 11, 13, 17, 19, 23})
    for (Int n = 1; n <= 4; ++n) {
      if (std::gcd(n, ell) != 1) continue;
      Cover cover = construct_cover(make_construction(ell, n));
      SignatureTable table(cover);
      NewtonPolygon expect = supersingular_polygon(cover.genus);
      for (Int p : least_primes(ell, n, Theorem15Class::order_2g, 2))
        require(newton_polygon(table, p % (n * ell)) == expect,
                "not supersingular at ell=" + std::to_string(ell) + " n=" + std::to_string(n) +
                    " p=" + std::to_string(p));
    }
}

void criterion6_lemma42() {
  for (Int ell = 5; ell <= 101; ++ell) {
    if (!is_prime(ell)) continue;
    for (Int n = 1; n <= 12; ++n) {
      if (std::gcd(n, ell) != 1) continue;
      for (Int r = 1; r <= n; ++r)
        require(verify_lemma42(ell, n, r), "identity fails at (" + std::to_string(ell) + "," +
                                               std::to_string(n) + "," + std::to_string(r) + ")");
    }
  }
}

void criterion7_closed_forms() {
  for (Int ell = 5; ell <= 101; ++ell) {
    if (!is_prime(ell)) continue;
    for (Int n = 1; n <= 12; ++n) {
      if (std::gcd(n, ell) != 1) continue;
      auto params = make_construction(ell, n);
      Cover cover = construct_cover(params);
      for (Int j = 1; j < n * ell; ++j) {
        if (j % ell == 0) continue;
        int direct = signature(cover, {j, 0});
        if (closed_form_signature(j, params) != direct || interval_signature(j, params) != direct)
          throw std::runtime_error("signature mismatch at ell=" + std::to_string(ell) +
                                   " n=" + std::to_string(n) + " j=" + std::to_string(j));
      }
    }
  }
}

void criterion8_zeta_oracle() {
  const std::vector<std::array<Int, 3>> curves = {
      {3, 1, 1}, {5, 1, 1}, {5, 1, 2}, {7, 1, 1}, {7, 1, 2}, {8, 1, 1},
      {9, 1, 1}, {10, 1, 1}, {11, 1, 1}, {11, 1, 7}, {12, 1, 1}, {20, 1, 9}};
  int pairs = 0;
  for (const auto& [m, a0, a1] : curves)
    for (Int p : {2, 3, 5, 7, 11, 13}) {
      if (m % p == 0) continue;
      OracleReport rep = run_oracle(m, a0, a1, p);
      require(rep.match, "oracle mismatch at m=" + std::to_string(m) + " a0=" +
                             std::to_string(a0) + " a1=" + std::to_string(a1) +
                             " p=" + std::to_string(p));
      ++pairs;
    }
  require(pairs >= 10, "fewer than 10 covers exercised");
}

void criterion9_density_bounds() {
  std::string failed;
  for (Int g : {9, 10, 11, 12}) {
    auto covers = enumerate_covers(g);
    const std::pair<CoverProperty, BigRat> bounds[] = {
        {CoverProperty::supersingular, BigRat(7, 10)},
        {CoverProperty::superspecial, BigRat(2, 10)},
        {CoverProperty::unlikely_np, BigRat(875, 1000)},
    };
    for (const auto& [prop, bound] : bounds) {
      DensityResult res = density_from_covers(covers, prop);
      if (!(res.value > bound))
        failed += "\n      delta_" + property_name(prop) + "(" + std::to_string(g) + ") = " +
                  to_string(res.value) + " (" +
                  (res.mode == DensityMode::exact ? "exact" : "lower bound") +
                  ") does not exceed " + to_string(bound);
    }
  }
  require(failed.empty(), "strict density bounds violated:" + failed);
}

void criterion10_inclusion_exclusion() {
  require(inclusion_excl_density({5}).value == BigRat(2, 5), "single term");
  const std::vector<Int> germain49 = {
      3,    5,    29,   41,   53,   83,   89,   113,  131,  173,  179,  191,  233,
      239,  251,  281,  293,  359,  419,  431,  443,  491,  509,  593,  641,  653,
      659,  683,  719,  743,  761,  809,  911,  953,  1013, 1019, 1031, 1049, 1103,
      1223, 1229, 1289, 1409, 1439, 1451, 1481, 1499, 1511, 1559};
  require(germain49.size() == 49, "set size");
  auto res = inclusion_excl_density(germain49, /*enforce=*/false);
  require(res.value > BigRat(9999, 10000), "value " + to_string(res.value));
}

void criterion11_example52() {
  auto cert = large_denominator_certificate(419, 1);
  require(cert.polygon.slopes ==
              std::vector<std::array<Int, 3>>{{193, 419, 419}, {226, 419, 419}},
          "slopes are not 193/419 and 226/419");
  require(cert.report.unlikely, "not unlikely");
}

void criterion12_invariant_suite() {
  for (Int g = 2; g <= 8; ++g) {
    const auto& covers = covers_of_genus(g);
    require(!covers.empty(), "no covers at genus " + std::to_string(g));
    for (const auto& cover : covers) {
      SignatureTable table(cover);
      require(table.size() == 2 * g, "relevant set size");
      Int fsum = 0;
      for (int i = 0; i < table.size(); ++i) fsum += table.f(i);
      require(fsum == g, "signature sum");
      Int e = cover.group.exponent();
      for (Int r = 1; r < e; ++r) {
        if (std::gcd(r, e) != 1) continue;
        NewtonPolygon np = newton_polygon(table, r);  // construction validates
        require(np.height() == 2 * g, "height");
        auto maps = dieudonne_maps(table, r);
        FinalType ft = final_type(maps);  // construction validates monotonicity
        if (is_superspecial(ft))
          require(is_supersingular(np), "superspecial without supersingular");
        require(static_cast<Int>(stable_f_set(maps).size()) == np.multiplicity(0, 1),
                "slope-0 multiplicity vs stable F image");
        require(static_cast<Int>(stable_v_set(maps).size()) == np.multiplicity(1, 1),
                "slope-1 multiplicity vs stable V image");
      }
    }
  }
}

}  // namespace

int main() {
  run("criterion-1  genus-5 superspecial list vs primes < 10^4", criterion1_superspecial_genus5);
  run("criterion-2  genus-12 cover has slopes 5/12, 7/12", criterion2_genus12_slopes);
  run("criterion-3  stratum dimension formulas", criterion3_strata_dims);
  run("criterion-4  slope theorem, order-g primes", criterion4_theorem15_order_g);
  run("criterion-5  supersingular corollary, order-2g primes", criterion5_corollary18_order_2g);
  run("criterion-6  quadratic-excess identity sweep", criterion6_lemma42);
  run("criterion-7  closed-form signatures vs Chevalley-Weil", criterion7_closed_forms);
  run("criterion-8  point-counting oracle vs Shimura-Taniyama", criterion8_zeta_oracle);
  run("criterion-9  density lower bounds at genus 9-12", criterion9_density_bounds);
  run("criterion-10 inclusion-exclusion densities", criterion10_inclusion_exclusion);
  run("criterion-11 genus-419 unlikely certificate", criterion11_example52);
  run("criterion-12 invariant suite at genus <= 8", criterion12_invariant_suite);
  if (failures) std::cout << failures << " criterion(s) failed" << std::endl;
  return failures;
}

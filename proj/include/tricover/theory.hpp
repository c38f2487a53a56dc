#pragma once

#include <utility>
#include <vector>

#include "tricover/density.hpp"
#include "tricover/moduli.hpp"
#include "tricover/newton.hpp"

namespace tricover {

// Sum of Legendre symbols (t/ell) over integers strictly between a and b.
Int quadratic_excess(Rat a, Rat b, Int ell);

// Checks the interval identity
//   (-1/ell) q(ell r/4n, 4 ell r/4n) = sum_{i=1..3} q(ell(i n - r)/4n, i ell n/4n)
// for a prime ell > 3 and 1 <= r <= n, evaluating both sides independently.
bool verify_lemma42(Int ell, Int n, Int r);

/// Parameters of the one-parameter family y^{n ell} = x (1-x)^{(n-k) ell - 4}
/// with k = -3/ell mod n; the base genus is g = (ell-1)/2 and the curve has
/// genus n*g.
struct ConstructionParams {
  Int ell = 5;
  Int n = 1;
  Int k = 0;  // in [0, n), k*ell + 3 = 0 mod n
  Int g = 2;  // (ell-1)/2
};

ConstructionParams make_construction(Int ell, Int n);
Cover construct_cover(const ConstructionParams& params);

/// alpha = number of quadratic residues mod ell in
/// (0, ell/4) u (ell/3, ell/2) u (2 ell/3, 3 ell/4); the predicted Newton
/// slopes are alpha/g and (g-alpha)/g.
struct SlopePrediction {
  Int alpha = 0;
  Int g = 0;
};

SlopePrediction predicted_slopes(Int ell);

// Interval I(i) = [lo, hi] of the partition of [1, n*ell - 1] indexed by
// 0 <= i <= 6n-1.
std::pair<Int, Int> signature_interval(int i, const ConstructionParams& params);

// Two closed forms for the signature of the constructed cover at j
// (1 <= j <= n*ell - 1, j != 0 mod ell): a floor/ceiling expression read off
// the interval index, and direct membership in the unions of open intervals.
int closed_form_signature(Int j, const ConstructionParams& params);
int interval_signature(Int j, const ConstructionParams& params);

enum class Theorem15Class { order_g, order_2g, fails };

// Classifies p against the slope-theorem hypotheses: gcd(p, n*ell) = 1,
// the order of p mod n coprime to g, and the order of p mod ell equal to
// g (order_g) or 2g (order_2g).
Theorem15Class theorem15_hypotheses(Int ell, Int n, Int p);

// For an order_g prime, the orbits of multiplication by p on nonzero
// residues mod n*ell are predicted exactly: elements sharing a nonzero
// Legendre symbol mod ell fuse across the orbit of their class under
// multiplication by p mod n, and the multiples of ell permute like the
// nonzero residues mod n.  Returns whether the computed orbits match.
bool orbit_structure_check(Int ell, Int n, Int p);

// floor(g * f(g)) for f(g) = (g - 2 sqrt(2g+1) log(2g+1)) / (2g), computed
// with certified rational brackets (log bracketed below 1e-30).
Int threshold_floor(Int g);

/// Certificate that the two-slope polygon with denominator g is unlikely in
/// genus n*g, for a Sophie Germain prime g > 363.
struct DenominatorCertificate {
  Int g = 0, n = 1, ell = 0, alpha = 0;
  NewtonPolygon polygon;
  StratumReport report;
  Int threshold = 0;  // floor(g * f(g))
  Int xi1_codim = 0;  // codim of the comparison polygon with smaller slope
};

DenominatorCertificate large_denominator_certificate(Int g, Int n);

/// Exact value of the alternating congruence-class density sum over a set
/// of Sophie Germain primes, plus any violations of the pairwise
/// compatibility conditions (g_i != 2 g_j + 1 and g_i not dividing g_j - 1).
struct IEDensity {
  BigRat value;
  std::vector<std::pair<Int, Int>> violations;
};

// Throws on a compatibility violation when enforce is set; with enforce
// false the sum is still evaluated and the violations are reported.
IEDensity inclusion_excl_density(std::vector<Int> primes, bool enforce = true);

struct SSGenusSearch {
  bool found = false;
  Int ell = 0;
  Int genus = 0;
  std::vector<Int> near_misses;  // sieve survivors failing the order check
};

// Least prime ell <= bound with ell = 1 mod 4, ell = 1 mod p, and p of
// order (ell-1)/2 mod ell; the constructed cover is verified supersingular
// at p before returning.
SSGenusSearch supersingular_genus_for_prime(Int p, Int bound);

}  // namespace tricover

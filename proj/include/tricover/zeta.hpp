#pragma once

#include <cstdint>
#include <vector>

#include "tricover/newton.hpp"

namespace tricover {

inline constexpr std::uint64_t kDefaultOracleSeed = 0x7265736964756573ULL;
inline constexpr Int kFieldBudget = 1'500'000;  // max field size for brute force

/// Point counts N_1..N_k of the smooth projective model of
/// y^m = x^{a0} (1-x)^{a1} over the fields of p^i elements.
struct PointCounts {
  Int m = 0, a0 = 0, a1 = 0;
  Int p = 0;
  std::vector<Int> counts;  // counts[i-1] = N_i
};

/// L(T) = sum c_i T^i with c_0 = 1, deg 2g, c_{2g-i} = p^{g-i} c_i.
struct LPolynomial {
  Int p = 0;
  std::vector<BigInt> coeffs;
};

// Exact N_i: affine points with x outside {0,1} counted by brute force over
// a searched irreducible extension; the three branch fibers are resolved by
// the cycle-type search described at count_curve.
Int count_points(Int m, Int a0, Int a1, Int p, int i,
                 std::uint64_t seed = kDefaultOracleSeed);

// N_1..N_g in one sweep.  The Frobenius cycle type on each d_b = gcd(a_b, m)
// point fiber is not computed locally; instead every combination of cycle
// types is tried and the unique one whose assembled L-polynomial has integer
// coefficients, satisfies the Weil bounds exactly, and passes the root
// modulus screen is kept.  Zero or several consistent candidates is an
// error.
PointCounts count_curve(Int m, Int a0, Int a1, Int p, std::uint64_t seed = kDefaultOracleSeed);

// Newton's identities on S_i = p^i + 1 - N_i, completed by the functional
// equation; throws if the result fails any of its invariants.
LPolynomial l_polynomial(const PointCounts& counts, Int g);

// p-adic Newton polygon of L: lower convex hull of (i, v_p(c_i)), slopes
// emitted with multiplicities.
NewtonPolygon np_from_lpoly(const LPolynomial& lpoly);

struct OracleReport {
  Int m = 0, a0 = 0, a1 = 0, p = 0;
  Int genus = 0;
  std::uint64_t seed = 0;
  PointCounts counts;
  LPolynomial lpoly;
  std::vector<Int> derived_counts;  // N_i from L for i = g+1..max_i, cross-checked
  NewtonPolygon np_counted;
  NewtonPolygon np_shimura_taniyama;
  bool match = false;
};

// Full pipeline: counts, L, both Newton polygons, and the verdict.  max_i
// beyond the genus re-counts affine points over larger fields and checks
// them against the L-polynomial prediction.
OracleReport run_oracle(Int m, Int a0, Int a1, Int p, int max_i = 0,
                        std::uint64_t seed = kDefaultOracleSeed);

}  // namespace tricover

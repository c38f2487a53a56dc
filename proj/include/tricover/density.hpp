#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tricover/moduli.hpp"

namespace tricover {

/// Residues mod the group exponent (all coprime to it) where some property
/// of the reduction holds.
struct CongruenceSet {
  Int modulus = 1;
  std::vector<Int> residues;  // sorted, deduplicated, units
  bool operator==(const CongruenceSet&) const = default;
};

enum class CoverProperty {
  ordinary,
  supersingular,
  superspecial,
  unlikely_np,
  unlikely_eo,
  two_unlikely_np,
  two_unlikely_eo,
};

CoverProperty property_from_name(const std::string& name);  // ss, ssp, nu, eu, 2nu, 2eu, ordinary
std::string property_name(CoverProperty p);

enum class DensityMode { exact, lower_bound };

struct DensityResult {
  BigRat value;
  DensityMode mode = DensityMode::exact;
  BigInt effective_modulus = 1;
  Int covers_used = 0;                   // input sets absorbed into the union
  unsigned long long evaluations = 0;    // DFS nodes visited
};

// Scans all units r mod the exponent and keeps those where pred holds.
CongruenceSet residues_where(const SignatureTable& table,
                             const std::function<bool(const SignatureTable&, Int)>& pred);

CongruenceSet property_residues(const SignatureTable& table, CoverProperty prop);
CongruenceSet property_residues(const Cover& cover, CoverProperty prop);

// Density of units in the union of the congruence sets.  Exact when the
// CRT-factored traversal of lcm of all moduli fits within cap unit
// evaluations; otherwise a certified lower bound from a greedy subset whose
// lcm stays within cap (largest standalone density first).
DensityResult union_density(const std::vector<CongruenceSet>& sets, unsigned long long cap);

inline constexpr unsigned long long kDefaultDensityCap = 100'000'000ULL;

// Natural density of primes p such that some abelian three-point cover of
// genus g has the property at p.  Primes dividing a group order are finitely
// many and do not affect the density.
DensityResult genus_density(Int g, CoverProperty prop,
                            unsigned long long cap = kDefaultDensityCap, int workers = 0);
DensityResult density_from_covers(const std::vector<Cover>& covers, CoverProperty prop,
                                  unsigned long long cap = kDefaultDensityCap);

struct Conjecture13Report {
  Int genus = 0;
  BigInt modulus = 1;       // lcm of all cover exponents
  BigInt unit_classes = 0;  // phi(modulus)
  bool partial = false;
  unsigned long long classes_decided = 0;  // unit classes settled (incl. pruned in bulk)
  unsigned long long violating = 0;
  std::vector<BigInt> sample;  // first violating classes, capped
};

// Scans unit classes r mod lcm(exponents) with r != 1 mod every cover
// exponent, asking for some cover with an unlikely Newton polygon at r and
// some cover with an unlikely Ekedahl-Oort type at r.  Classes missing
// either are reported as violations of the expected pattern.
Conjecture13Report conjecture13_check(Int g, unsigned long long budget, int workers = 0);

}  // namespace tricover

#pragma once

#include <string>
#include <vector>

#include "tricover/chars.hpp"

namespace tricover {

/// Frobenius and Verschiebung on the basis indexed by relevant characters.
/// With tau* = -tau:  F(e_tau) = e_{r*tau} iff f(tau*) = 1, else 0;
/// V(e_{r*tau}) = e_tau iff f(tau*) = 0, else 0.  Exactly one of "F defined
/// at tau" and "V defined at r*tau" holds, and both maps are injective
/// where defined.
struct DieudonneBasisMap {
  std::vector<Character> basis;  // the relevant characters, sorted
  std::vector<int> f_to;         // F(e_i) = e_{f_to[i]}, or -1
  std::vector<int> v_to;         // V(e_i) = e_{v_to[i]}, or -1
  Int r = 1;

  int size() const { return static_cast<int>(basis.size()); }
};

DieudonneBasisMap dieudonne_maps(const SignatureTable& table, Int r);
DieudonneBasisMap dieudonne_maps(const Cover& cover, Int r);

// Kraft decomposition: one cyclic word over {f, v} per Frobenius orbit,
// letter 'f' at position tau iff F is defined there.  Words are rotated to
// their lexicographic minimum and returned sorted.
std::vector<std::string> eo_words(const DieudonneBasisMap& maps);

/// Elementary sequence [nu_1 .. nu_g] of the Ekedahl-Oort type:
/// nu_1 in {0,1}, increments in {0,1}, nu_i <= i.
struct FinalType {
  std::vector<Int> nu;
  bool operator==(const FinalType&) const = default;
};

// Computes the final type from the canonical filtration: close {0, M}
// under V and F^{-1} (all members are coordinate subspaces), then read off
// dim V(-) along the filtration; V is injective or zero on each graded
// piece, which interpolates nu between canonical dimensions.
FinalType final_type(const DieudonneBasisMap& maps);

bool is_superspecial(const FinalType& ft);

// Indices whose entire forward F-trajectory (resp. V-trajectory) stays
// defined; sizes equal the slope-0 and slope-1 multiplicities.
std::vector<int> stable_f_set(const DieudonneBasisMap& maps);
std::vector<int> stable_v_set(const DieudonneBasisMap& maps);

}  // namespace tricover

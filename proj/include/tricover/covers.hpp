#pragma once

#include <array>
#include <string>
#include <vector>

#include "tricover/arith.hpp"

namespace tricover {

/// Z/c x Z/d with d | c.  Cyclic iff d = 1; exponent is c, order is c*d.
struct AbelianGroup {
  Int c = 1;
  Int d = 1;

  Int order() const { return c * d; }
  Int exponent() const { return c; }
  bool cyclic() const { return d == 1; }
  bool operator==(const AbelianGroup&) const = default;
  auto operator<=>(const AbelianGroup&) const = default;
};

AbelianGroup make_group(Int c, Int d = 1);

struct GroupElement {
  Int x = 0;
  Int y = 0;
  bool operator==(const GroupElement&) const = default;
  auto operator<=>(const GroupElement&) const = default;
};

GroupElement reduce(const AbelianGroup& g, Int x, Int y);
GroupElement add(const AbelianGroup& g, GroupElement a, GroupElement b);
GroupElement neg(const AbelianGroup& g, GroupElement a);
GroupElement scalar_mul(const AbelianGroup& g, Int k, GroupElement a);
Int element_order(const AbelianGroup& g, GroupElement a);
bool generates(const AbelianGroup& g, GroupElement a, GroupElement b);

/// Inertia-group orders over the branch points 0, 1, oo (descending) plus
/// the index s of the first inertia group in the full group.
struct RamificationType {
  Int c0 = 1;
  Int c1 = 1;
  Int cinf = 1;
  Int s = 1;
  bool operator==(const RamificationType&) const = default;
  auto operator<=>(const RamificationType&) const = default;
};

struct InertiaType {
  GroupElement a0, a1, ainf;

  std::array<GroupElement, 3> tuple() const { return {a0, a1, ainf}; }
  bool operator==(const InertiaType&) const = default;
  auto operator<=>(const InertiaType&) const = default;
};

struct Cover {
  AbelianGroup group;
  RamificationType ram;
  InertiaType inertia;
  Int genus = 0;

  bool operator==(const Cover&) const = default;
  auto operator<=>(const Cover&) const = default;
};

// Riemann-Hurwitz genus of a tame cover of P^1 branched at three points:
// g = 1 - m + (1/2) * sum_b (m/c_b)(c_b - 1).  Throws if the data is
// incoherent (c_b not dividing m, m != s*c0, or a non-integral/negative g).
Int genus(const AbelianGroup& group, const RamificationType& ram);

struct InertiaValidation {
  bool ok = false;
  std::string reason;  // empty when ok
};

// Checks the three inertia-type conditions: element orders match the
// ramification type, the elements sum to zero, and they generate the group.
InertiaValidation validate_inertia(const AbelianGroup& group, const RamificationType& ram,
                                   const InertiaType& inertia);

// Validated constructors.  cover_from_inertia sorts the branch points by
// descending inertia order and derives the ramification type.
Cover make_cover(const AbelianGroup& group, const RamificationType& ram,
                 const InertiaType& inertia);
Cover cover_from_inertia(const AbelianGroup& group, GroupElement a0, GroupElement a1,
                         GroupElement ainf);

/// An automorphism of Z/c x Z/d, stored as the images of (1,0) and (0,1).
struct Automorphism {
  GroupElement img1, img2;
};

GroupElement apply(const AbelianGroup& g, const Automorphism& aut, GroupElement a);
std::vector<Automorphism> automorphisms(const AbelianGroup& g);

// Lexicographically minimal representative of the equivalence class under
// Aut(G) and permutations of branch points with equal inertia order.
Cover canonicalize(const Cover& cover);
Cover canonicalize(const Cover& cover, const std::vector<Automorphism>& auts);

// All covers of genus g up to equivalence, canonical and sorted.  The group
// order is bounded by 84(g-1) via Riemann-Hurwitz.  max_order widens that
// scan bound when positive (used to test completeness).
std::vector<Cover> enumerate_covers(Int g, int workers = 0, Int max_order = 0);

}  // namespace tricover

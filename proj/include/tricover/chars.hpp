#pragma once

#include <cstdint>
#include <vector>

#include "tricover/covers.hpp"

namespace tricover {

/// Characters of G are identified with elements of G via the fixed (c, d)
/// coordinates; negation realizes complex conjugation.
using Character = GroupElement;

/// A fraction num/den in lowest terms.
struct Rat {
  Int num = 0;
  Int den = 1;
  bool operator==(const Rat&) const = default;
};

Rat make_rat(Int num, Int den);

// <tau, a> in Q/Z represented in [0, 1):
// pairing = frac(t_x * a_x / c + t_y * a_y / d).
Rat pairing(const AbelianGroup& g, Character tau, GroupElement a);

// Chevalley-Weil dimension of the tau-eigenspace of holomorphic
// differentials: -1 + sum_b frac(-<tau, a_b>) when all three pairings are
// nonzero, and 0 by convention otherwise (such characters factor through a
// genus-0 quotient).  Throws on the trivial character.
int signature(const Cover& cover, Character tau);

// Nontrivial characters pairing nonzero with all three inertia generators;
// there are exactly 2g of them.  Sorted.
std::vector<Character> relevant_characters(const Cover& cover);

/// Precomputed signature data for one cover: the relevant characters in
/// sorted order, their f-values, and O(1) index lookups for the
/// multiplication and negation actions.
class SignatureTable {
 public:
  explicit SignatureTable(const Cover& cover);

  const Cover& cover() const { return cover_; }
  Int genus() const { return cover_.genus; }
  Int exponent() const { return cover_.group.exponent(); }
  const std::vector<Character>& relevant() const { return relevant_; }

  int f(int idx) const { return fvals_[static_cast<std::size_t>(idx)]; }
  int size() const { return static_cast<int>(relevant_.size()); }

  // Index of a character in the relevant list, or -1.
  int index_of(Character tau) const;
  int neg_index(int idx) const { return neg_[static_cast<std::size_t>(idx)]; }
  // Index of r * tau; requires gcd(r, exponent) = 1 so the action stays
  // inside the relevant set.
  int mul_index(Int r, int idx) const;

  // Orbits of tau -> r*tau on the relevant characters, as index cycles
  // starting from the minimal index, sorted by that index.
  std::vector<std::vector<int>> orbits(Int r) const;

 private:
  Cover cover_;
  std::vector<Character> relevant_;
  std::vector<std::uint8_t> fvals_;
  std::vector<int> index_;  // keyed by x*d + y over all of G
  std::vector<int> neg_;
};

}  // namespace tricover

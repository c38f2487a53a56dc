#pragma once

#include <array>
#include <utility>
#include <vector>

#include "tricover/chars.hpp"

namespace tricover {

/// Multiset of Frobenius slopes in [0,1], stored as (num, den, mult)
/// triples in lowest terms, ascending.  Symmetric of height 2g: total
/// multiplicity 2g, mult(x) = mult(1-x), slope sum g, integral breakpoints.
struct NewtonPolygon {
  std::vector<std::array<Int, 3>> slopes;

  Int height() const;
  Int genus() const { return height() / 2; }
  Int multiplicity(Int num, Int den) const;
  bool operator==(const NewtonPolygon&) const = default;
};

// Builds a polygon from (num, den, mult) entries (not necessarily reduced
// or sorted), merging equal slopes and checking all invariants.
NewtonPolygon make_polygon(const std::vector<std::array<Int, 3>>& entries);

// Throws unless the polygon satisfies the symmetry, height, slope-sum, and
// integral-breakpoint invariants.
void validate_polygon(const NewtonPolygon& np);

// Shimura-Taniyama: each orbit O of tau -> r*tau on the relevant characters
// contributes slope #(O cap S1)/#O with multiplicity #O, where S1 is the
// set of relevant characters with signature 1.
NewtonPolygon newton_polygon(const SignatureTable& table, Int r);
NewtonPolygon newton_polygon(const Cover& cover, Int r);

bool is_supersingular(const NewtonPolygon& np);
bool is_ordinary(const NewtonPolygon& np);

// Multiset union; heights add.
NewtonPolygon direct_sum(const NewtonPolygon& a, const NewtonPolygon& b);

// Vertices of the lower-convex polygon from (0,0) to (2g,g); breakpoints
// are integral.
std::vector<std::pair<Int, Int>> polygon_points(const NewtonPolygon& np);

NewtonPolygon ordinary_polygon(Int g);
NewtonPolygon supersingular_polygon(Int g);
// Slopes a/g and (g-a)/g, each with the given multiplicity.
NewtonPolygon two_slope_polygon(Int a, Int g, Int mult);

}  // namespace tricover

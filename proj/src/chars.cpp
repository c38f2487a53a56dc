#include "tricover/chars.hpp"

#include <numeric>
#include <stdexcept>

namespace tricover {

namespace {

// Numerator of <tau, a> over the common denominator m = c*d.
Int pairing_num(const AbelianGroup& g, Character tau, GroupElement a) {
  const Int m = g.order();
  __int128 n = static_cast<__int128>(tau.x) * a.x * g.d + static_cast<__int128>(tau.y) * a.y * g.c;
  Int r = static_cast<Int>(n % m);
  return r < 0 ? r + m : r;
}

}  // namespace

Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) return Rat{0, 1};
  return Rat{num / g, den / g};
}

Rat pairing(const AbelianGroup& g, Character tau, GroupElement a) {
  return make_rat(pairing_num(g, tau, a), g.order());
}

int signature(const Cover& cover, Character tau) {
  const auto& g = cover.group;
  tau = reduce(g, tau.x, tau.y);
  if (tau == Character{0, 0}) throw std::invalid_argument("signature: trivial character");
  const Int m = g.order();
  Int total = 0;
  for (const auto& ab : cover.inertia.tuple()) {
    Int num = pairing_num(g, tau, ab);
    if (num == 0) return 0;
    total += num;
  }
  // frac(-q) = 1 - q for q in (0,1), so f = 2 - total/m; the sum of the
  // three pairings is an integer multiple of 1 because the a_b sum to zero.
  if (total % m != 0) throw std::logic_error("signature: pairings do not sum to an integer");
  Int f = 2 - total / m;
  if (f != 0 && f != 1) throw std::logic_error("signature: value outside {0,1}");
  return static_cast<int>(f);
}

std::vector<Character> relevant_characters(const Cover& cover) {
  const auto& g = cover.group;
  std::vector<Character> out;
  for (Int x = 0; x < g.c; ++x)
    for (Int y = 0; y < g.d; ++y) {
      if (x == 0 && y == 0) continue;
      Character tau{x, y};
      bool relevant = true;
      for (const auto& ab : cover.inertia.tuple())
        if (pairing_num(g, tau, ab) == 0) {
          relevant = false;
          break;
        }
      if (relevant) out.push_back(tau);
    }
  return out;
}

SignatureTable::SignatureTable(const Cover& cover) : cover_(cover) {
  if (cover.group.order() > 20'000'000)
    throw std::invalid_argument("SignatureTable: group too large for a dense index");
  relevant_ = relevant_characters(cover);
  if (static_cast<Int>(relevant_.size()) != 2 * cover.genus)
    throw std::logic_error("SignatureTable: relevant character count is not 2g");
  const auto& g = cover.group;
  index_.assign(static_cast<std::size_t>(g.order()), -1);
  fvals_.resize(relevant_.size());
  neg_.resize(relevant_.size());
  for (int i = 0; i < size(); ++i) {
    const Character& tau = relevant_[static_cast<std::size_t>(i)];
    index_[static_cast<std::size_t>(tau.x * g.d + tau.y)] = i;
    fvals_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(signature(cover, tau));
  }
  for (int i = 0; i < size(); ++i) {
    int ni = index_of(neg(g, relevant_[static_cast<std::size_t>(i)]));
    if (ni < 0) throw std::logic_error("SignatureTable: relevant set not closed under negation");
    neg_[static_cast<std::size_t>(i)] = ni;
  }
}

int SignatureTable::index_of(Character tau) const {
  const auto& g = cover_.group;
  tau = reduce(g, tau.x, tau.y);
  return index_[static_cast<std::size_t>(tau.x * g.d + tau.y)];
}

int SignatureTable::mul_index(Int r, int idx) const {
  const auto& g = cover_.group;
  int j = index_of(scalar_mul(g, r, relevant_[static_cast<std::size_t>(idx)]));
  if (j < 0) throw std::logic_error("SignatureTable: multiplication left the relevant set");
  return j;
}

std::vector<std::vector<int>> SignatureTable::orbits(Int r) const {
  if (std::gcd(((r % exponent()) + exponent()) % exponent(), exponent()) != 1)
    throw std::invalid_argument("orbits: r must be a unit mod the exponent");
  std::vector<bool> seen(relevant_.size(), false);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> cycle;
    int j = i;
    do {
      seen[static_cast<std::size_t>(j)] = true;
      cycle.push_back(j);
      j = mul_index(r, j);
    } while (j != i);
    out.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace tricover

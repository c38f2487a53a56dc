#include "tricover/covers.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace tricover {

namespace {

Int mod_reduce(Int v, Int m) {
  v %= m;
  return v < 0 ? v + m : v;
}

// |det| of the Hermite form of the lattice spanned by the given rows of a
// 2-column integer matrix; 0 if the lattice has rank < 2.
Int lattice_index(std::vector<std::array<Int, 2>> rows) {
  Int a = 0, b = 0;  // pivot row
  Int s = 0;         // gcd of second entries of first-column-zero rows
  for (auto [u, v] : rows) {
    while (u != 0) {
      Int q = a / u;
      a -= q * u;
      b -= q * v;
      std::swap(a, u);
      std::swap(b, v);
    }
    s = std::gcd(s, v);
  }
  if (a == 0 || s == 0) return 0;
  return std::abs(a) * std::abs(s);
}

}  // namespace

AbelianGroup make_group(Int c, Int d) {
  if (c < 1 || d < 1 || c % d != 0)
    throw std::invalid_argument("make_group: need d | c with c, d >= 1");
  return AbelianGroup{c, d};
}

GroupElement reduce(const AbelianGroup& g, Int x, Int y) {
  return GroupElement{mod_reduce(x, g.c), mod_reduce(y, g.d)};
}

GroupElement add(const AbelianGroup& g, GroupElement a, GroupElement b) {
  return reduce(g, a.x + b.x, a.y + b.y);
}

GroupElement neg(const AbelianGroup& g, GroupElement a) { return reduce(g, -a.x, -a.y); }

GroupElement scalar_mul(const AbelianGroup& g, Int k, GroupElement a) {
  k = mod_reduce(k, g.c);
  return reduce(g, static_cast<Int>(static_cast<__int128>(k) * a.x % g.c),
                static_cast<Int>(static_cast<__int128>(k) * a.y % g.d));
}

Int element_order(const AbelianGroup& g, GroupElement a) {
  Int ox = g.c / std::gcd(a.x, g.c);
  Int oy = g.d / std::gcd(a.y, g.d);
  return std::lcm(ox, oy);
}

bool generates(const AbelianGroup& g, GroupElement a, GroupElement b) {
  return lattice_index({{{a.x, a.y}, {b.x, b.y}, {g.c, 0}, {0, g.d}}}) == 1;
}

Int genus(const AbelianGroup& group, const RamificationType& ram) {
  Int m = group.order();
  if (ram.c0 < 1 || ram.c1 < 1 || ram.cinf < 1)
    throw std::invalid_argument("genus: inertia orders must be positive");
  if (ram.s * ram.c0 != m) throw std::invalid_argument("genus: need m = s * c0");
  Int ramified = 0;
  for (Int cb : {ram.c0, ram.c1, ram.cinf}) {
    if (m % cb != 0) throw std::invalid_argument("genus: c_b must divide the group order");
    ramified += (m / cb) * (cb - 1);
  }
  if (ramified % 2 != 0) throw std::invalid_argument("genus: non-integral Riemann-Hurwitz value");
  Int g = 1 - m + ramified / 2;
  if (g < 0) throw std::invalid_argument("genus: negative Riemann-Hurwitz value");
  return g;
}

InertiaValidation validate_inertia(const AbelianGroup& group, const RamificationType& ram,
                                   const InertiaType& inertia) {
  const auto t = inertia.tuple();
  const Int want[3] = {ram.c0, ram.c1, ram.cinf};
  for (int b = 0; b < 3; ++b) {
    Int got = element_order(group, t[b]);
    if (got != want[b])
      return {false, "order of a_" + std::string(b == 2 ? "inf" : std::to_string(b)) + " is " +
                         std::to_string(got) + ", expected " + std::to_string(want[b])};
  }
  if (add(group, add(group, inertia.a0, inertia.a1), inertia.ainf) != GroupElement{0, 0})
    return {false, "a_0 + a_1 + a_inf != 0"};
  if (!generates(group, inertia.a0, inertia.a1))
    return {false, "inertia elements do not generate the group"};
  return {true, ""};
}

Cover make_cover(const AbelianGroup& group, const RamificationType& ram,
                 const InertiaType& inertia) {
  if (!(ram.c0 >= ram.c1 && ram.c1 >= ram.cinf))
    throw std::invalid_argument("make_cover: need c0 >= c1 >= cinf");
  if (ram.cinf < 2)
    throw std::invalid_argument("make_cover: cover must be branched at all three points");
  auto v = validate_inertia(group, ram, inertia);
  if (!v.ok) throw std::invalid_argument("make_cover: " + v.reason);
  return Cover{group, ram, inertia, genus(group, ram)};
}

Cover cover_from_inertia(const AbelianGroup& group, GroupElement a0, GroupElement a1,
                         GroupElement ainf) {
  std::array<GroupElement, 3> t = {a0, a1, ainf};
  std::stable_sort(t.begin(), t.end(), [&](GroupElement a, GroupElement b) {
    return element_order(group, a) > element_order(group, b);
  });
  Int c0 = element_order(group, t[0]);
  RamificationType ram{c0, element_order(group, t[1]), element_order(group, t[2]),
                       group.order() / c0};
  return make_cover(group, ram, InertiaType{t[0], t[1], t[2]});
}

GroupElement apply(const AbelianGroup& g, const Automorphism& aut, GroupElement a) {
  return add(g, scalar_mul(g, a.x, aut.img1), scalar_mul(g, a.y, aut.img2));
}

std::vector<Automorphism> automorphisms(const AbelianGroup& g) {
  // A pair (u, v) defines an endomorphism iff d*v = 0, and an automorphism
  // iff the images also generate; surjective implies bijective here.
  std::vector<Automorphism> out;
  for (Int ux = 0; ux < g.c; ++ux)
    for (Int uy = 0; uy < g.d; ++uy) {
      GroupElement u{ux, uy};
      for (Int vx = 0; vx < g.c; ++vx) {
        if (mod_reduce(vx * g.d, g.c) != 0) continue;
        for (Int vy = 0; vy < g.d; ++vy) {
          GroupElement v{vx, vy};
          if (generates(g, u, v)) out.push_back({u, v});
        }
      }
    }
  return out;
}

Cover canonicalize(const Cover& cover) { return canonicalize(cover, automorphisms(cover.group)); }

Cover canonicalize(const Cover& cover, const std::vector<Automorphism>& auts) {
  const auto& g = cover.group;
  const Int cb[3] = {cover.ram.c0, cover.ram.c1, cover.ram.cinf};
  const auto src = cover.inertia.tuple();

  static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                       {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::array<GroupElement, 3> best = src;
  for (const auto& perm : kPerms) {
    // Only relabel branch points whose inertia groups have equal order.
    if (cb[perm[0]] != cb[0] || cb[perm[1]] != cb[1] || cb[perm[2]] != cb[2]) continue;
    std::array<GroupElement, 3> permuted = {src[perm[0]], src[perm[1]], src[perm[2]]};
    for (const auto& aut : auts) {
      std::array<GroupElement, 3> cand = {apply(g, aut, permuted[0]), apply(g, aut, permuted[1]),
                                          apply(g, aut, permuted[2])};
      if (cand < best) best = cand;
    }
  }
  return Cover{g, cover.ram, InertiaType{best[0], best[1], best[2]}, cover.genus};
}

namespace {

void enumerate_group(const AbelianGroup& g, Int target_genus, std::set<Cover>& out) {
  const Int c = g.c, d = g.d, m = g.order();
  std::vector<Int> ord(static_cast<std::size_t>(m));
  for (Int x = 0; x < c; ++x)
    for (Int y = 0; y < d; ++y) ord[static_cast<std::size_t>(x * d + y)] = element_order(g, {x, y});

  std::vector<Automorphism> auts;  // computed lazily, most groups yield nothing
  for (Int x0 = 0; x0 < c; ++x0)
    for (Int y0 = 0; y0 < d; ++y0) {
      if (x0 == 0 && y0 == 0) continue;
      const Int o0 = ord[static_cast<std::size_t>(x0 * d + y0)];
      for (Int x1 = 0; x1 < c; ++x1)
        for (Int y1 = 0; y1 < d; ++y1) {
          if (x1 == 0 && y1 == 0) continue;
          const Int o1 = ord[static_cast<std::size_t>(x1 * d + y1)];
          if (o1 > o0) continue;
          const Int xi = mod_reduce(-(x0 + x1), c), yi = mod_reduce(-(y0 + y1), d);
          if (xi == 0 && yi == 0) continue;
          const Int oi = ord[static_cast<std::size_t>(xi * d + yi)];
          if (oi > o1) continue;
          Int ramified = (m / o0) * (o0 - 1) + (m / o1) * (o1 - 1) + (m / oi) * (oi - 1);
          if (ramified % 2 != 0 || 1 - m + ramified / 2 != target_genus) continue;
          GroupElement a0{x0, y0}, a1{x1, y1};
          if (!generates(g, a0, a1)) continue;
          if (auts.empty()) auts = automorphisms(g);
          Cover cover{g, RamificationType{o0, o1, oi, m / o0},
                      InertiaType{a0, a1, {xi, yi}}, target_genus};
          out.insert(canonicalize(cover, auts));
        }
    }
}

}  // namespace

std::vector<Cover> enumerate_covers(Int g, int workers, Int max_order) {
  if (g < 2) throw std::invalid_argument("enumerate_covers: genus must be >= 2");
  // 2g - 2 = m * (1 - 1/c0 - 1/c1 - 1/cinf) and the bracket is >= 1/42 when
  // positive, so m <= 84(g-1).
  const Int mmax = max_order > 0 ? max_order : 84 * (g - 1);
  std::vector<AbelianGroup> groups;
  for (Int m = 2; m <= mmax; ++m)
    for (Int d = 1; d * d <= m; ++d)
      if (m % d == 0 && (m / d) % d == 0) groups.push_back(AbelianGroup{m / d, d});

  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = std::min<int>(workers, static_cast<int>(groups.size()));
  if (workers == 0) return {};

  std::vector<std::set<Cover>> partial(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = next.fetch_add(1); i < groups.size(); i = next.fetch_add(1))
        enumerate_group(groups[i], g, partial[static_cast<std::size_t>(w)]);
    });
  for (auto& t : pool) t.join();

  std::set<Cover> merged;
  for (auto& p : partial) merged.merge(p);
  return {merged.begin(), merged.end()};
}

}  // namespace tricover

#include "tricover/eo.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tricover {

DieudonneBasisMap dieudonne_maps(const SignatureTable& table, Int r) {
  const Int e = table.exponent();
  if (std::gcd(((r % e) + e) % e, e) != 1)
    throw std::invalid_argument("dieudonne_maps: r must be a unit mod the exponent");
  const int n = table.size();
  DieudonneBasisMap maps;
  maps.basis = table.relevant();
  maps.r = r;
  maps.f_to.assign(static_cast<std::size_t>(n), -1);
  maps.v_to.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int fstar = table.f(table.neg_index(i));
    int ri = table.mul_index(r, i);
    if (fstar == 1)
      maps.f_to[static_cast<std::size_t>(i)] = ri;
    else
      maps.v_to[static_cast<std::size_t>(ri)] = i;
  }
  for (int i = 0; i < n; ++i) {
    int ri = table.mul_index(r, i);
    bool f_here = maps.f_to[static_cast<std::size_t>(i)] >= 0;
    bool v_there = maps.v_to[static_cast<std::size_t>(ri)] >= 0;
    if (f_here == v_there)
      throw std::logic_error("dieudonne_maps: F/V exclusivity violated");
  }
  return maps;
}

DieudonneBasisMap dieudonne_maps(const Cover& cover, Int r) {
  return dieudonne_maps(SignatureTable(cover), r);
}

std::vector<std::string> eo_words(const DieudonneBasisMap& maps) {
  const int n = maps.size();
  // the orbit of i is the cycle of i -> (F or V target position) r*tau_i;
  // recover it from whichever of the two maps is defined
  std::vector<int> next(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (maps.f_to[static_cast<std::size_t>(i)] >= 0)
      next[static_cast<std::size_t>(i)] = maps.f_to[static_cast<std::size_t>(i)];
  }
  for (int j = 0; j < n; ++j) {
    int src = maps.v_to[static_cast<std::size_t>(j)];
    if (src >= 0) next[static_cast<std::size_t>(src)] = j;
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::string> words;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::string w;
    int j = i;
    do {
      seen[static_cast<std::size_t>(j)] = true;
      w.push_back(maps.f_to[static_cast<std::size_t>(j)] >= 0 ? 'f' : 'v');
      j = next[static_cast<std::size_t>(j)];
    } while (j != i);
    std::string best = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
      std::rotate(w.begin(), w.begin() + 1, w.end());
      best = std::min(best, w);
    }
    words.push_back(best);
  }
  std::sort(words.begin(), words.end());
  return words;
}

namespace {

using Mask = std::vector<std::uint8_t>;

int popcount(const Mask& m) {
  int c = 0;
  for (auto b : m) c += b;
  return c;
}

bool subset_of(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

}  // namespace

FinalType final_type(const DieudonneBasisMap& maps) {
  const int n = maps.size();
  if (n % 2 != 0) throw std::invalid_argument("final_type: basis size must be 2g");
  const Int g = n / 2;

  auto v_image = [&](const Mask& s) {
    Mask out(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j)
      if (s[static_cast<std::size_t>(j)] && maps.v_to[static_cast<std::size_t>(j)] >= 0)
        out[static_cast<std::size_t>(maps.v_to[static_cast<std::size_t>(j)])] = 1;
    return out;
  };
  auto f_preimage = [&](const Mask& s) {
    Mask out(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      int t = maps.f_to[static_cast<std::size_t>(i)];
      if (t < 0 || s[static_cast<std::size_t>(t)]) out[static_cast<std::size_t>(i)] = 1;
    }
    return out;
  };

  std::set<Mask> family;
  family.insert(Mask(static_cast<std::size_t>(n), 0));
  family.insert(Mask(static_cast<std::size_t>(n), 1));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> fresh;
    for (const auto& s : family) {
      fresh.push_back(v_image(s));
      fresh.push_back(f_preimage(s));
    }
    for (auto& s : fresh)
      if (family.insert(std::move(s)).second) grew = true;
  }

  std::vector<Mask> chain(family.begin(), family.end());
  std::sort(chain.begin(), chain.end(),
            [](const Mask& a, const Mask& b) { return popcount(a) < popcount(b); });
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (!subset_of(chain[i - 1], chain[i]))
      throw std::logic_error("final_type: canonical filtration is not a chain");

  // nu interpolates between canonical members: slope 1 where V is injective
  // on the graded piece, slope 0 where V vanishes on it.
  std::vector<Int> psi(static_cast<std::size_t>(n + 1), 0);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    Int d0 = popcount(chain[i]), d1 = popcount(chain[i + 1]);
    Int v0 = popcount(v_image(chain[i])), v1 = popcount(v_image(chain[i + 1]));
    if (v1 - v0 != 0 && v1 - v0 != d1 - d0)
      throw std::logic_error("final_type: V neither injective nor zero on a graded piece");
    for (Int x = d0; x <= d1; ++x)
      psi[static_cast<std::size_t>(x)] = v0 + (v1 > v0 ? x - d0 : 0);
  }

  FinalType ft;
  ft.nu.assign(psi.begin() + 1, psi.begin() + 1 + g);
  for (Int i = 0; i < g; ++i) {
    Int prev = i == 0 ? 0 : ft.nu[static_cast<std::size_t>(i - 1)];
    Int cur = ft.nu[static_cast<std::size_t>(i)];
    if (cur < prev || cur > prev + 1 || cur > i + 1)
      throw std::logic_error("final_type: elementary sequence constraints violated");
  }
  return ft;
}

bool is_superspecial(const FinalType& ft) {
  return std::all_of(ft.nu.begin(), ft.nu.end(), [](Int v) { return v == 0; });
}

namespace {

std::vector<int> stable_set(const std::vector<int>& to) {
  const int n = static_cast<int>(to.size());
  std::vector<bool> alive(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) alive[static_cast<std::size_t>(i)] = to[static_cast<std::size_t>(i)] >= 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (!alive[static_cast<std::size_t>(i)]) continue;
      int t = to[static_cast<std::size_t>(i)];
      if (!alive[static_cast<std::size_t>(t)]) {
        alive[static_cast<std::size_t>(i)] = false;
        changed = true;
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (alive[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

}  // namespace

std::vector<int> stable_f_set(const DieudonneBasisMap& maps) { return stable_set(maps.f_to); }
std::vector<int> stable_v_set(const DieudonneBasisMap& maps) { return stable_set(maps.v_to); }

}  // namespace tricover

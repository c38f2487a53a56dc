#include "tricover/newton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tricover {

namespace {

bool slope_less(const std::array<Int, 3>& a, const std::array<Int, 3>& b) {
  return static_cast<__int128>(a[0]) * b[1] < static_cast<__int128>(b[0]) * a[1];
}

}  // namespace

Int NewtonPolygon::height() const {
  Int h = 0;
  for (const auto& s : slopes) h += s[2];
  return h;
}

Int NewtonPolygon::multiplicity(Int num, Int den) const {
  Rat r = make_rat(num, den);
  for (const auto& s : slopes)
    if (s[0] == r.num && s[1] == r.den) return s[2];
  return 0;
}

NewtonPolygon make_polygon(const std::vector<std::array<Int, 3>>& entries) {
  std::map<std::pair<Int, Int>, Int> acc;
  for (const auto& e : entries) {
    if (e[2] < 0) throw std::invalid_argument("make_polygon: negative multiplicity");
    if (e[2] == 0) continue;
    Rat r = make_rat(e[0], e[1]);
    if (r.num < 0 || r.num > r.den)
      throw std::invalid_argument("make_polygon: slope outside [0,1]");
    acc[{r.num, r.den}] += e[2];
  }
  NewtonPolygon np;
  for (const auto& [key, mult] : acc) np.slopes.push_back({key.first, key.second, mult});
  std::sort(np.slopes.begin(), np.slopes.end(), slope_less);
  validate_polygon(np);
  return np;
}

void validate_polygon(const NewtonPolygon& np) {
  Int h = np.height();
  if (h % 2 != 0) throw std::logic_error("polygon: odd height");
  __int128 weighted_num = 0;  // sum of slope*mult over common denominator
  __int128 den_lcm = 1;
  for (const auto& s : np.slopes) {
    if (std::gcd(s[0], s[1]) != 1 || s[1] <= 0)
      throw std::logic_error("polygon: slope not in lowest terms");
    if (s[2] % s[1] != 0) throw std::logic_error("polygon: non-integral breakpoint");
    if (np.multiplicity(s[1] - s[0], s[1]) != s[2])
      throw std::logic_error("polygon: mult(x) != mult(1-x)");
    den_lcm = std::lcm(static_cast<Int>(den_lcm), s[1]);
  }
  for (const auto& s : np.slopes) weighted_num += den_lcm / s[1] * s[0] * s[2];
  if (weighted_num != den_lcm * (h / 2)) throw std::logic_error("polygon: slope sum != g");
  for (std::size_t i = 1; i < np.slopes.size(); ++i)
    if (!slope_less(np.slopes[i - 1], np.slopes[i]))
      throw std::logic_error("polygon: slopes not strictly ascending");
}

NewtonPolygon newton_polygon(const SignatureTable& table, Int r) {
  std::vector<std::array<Int, 3>> entries;
  for (const auto& orbit : table.orbits(r)) {
    Int in_s1 = 0;
    for (int idx : orbit) in_s1 += table.f(idx);
    entries.push_back({in_s1, static_cast<Int>(orbit.size()), static_cast<Int>(orbit.size())});
  }
  return make_polygon(entries);
}

NewtonPolygon newton_polygon(const Cover& cover, Int r) {
  return newton_polygon(SignatureTable(cover), r);
}

bool is_supersingular(const NewtonPolygon& np) {
  return np.slopes.size() == 1 && np.slopes[0][0] == 1 && np.slopes[0][1] == 2;
}

bool is_ordinary(const NewtonPolygon& np) {
  for (const auto& s : np.slopes)
    if (!(s[0] == 0 || (s[0] == 1 && s[1] == 1))) return false;
  return true;
}

NewtonPolygon direct_sum(const NewtonPolygon& a, const NewtonPolygon& b) {
  std::vector<std::array<Int, 3>> entries = a.slopes;
  entries.insert(entries.end(), b.slopes.begin(), b.slopes.end());
  return make_polygon(entries);
}

std::vector<std::pair<Int, Int>> polygon_points(const NewtonPolygon& np) {
  validate_polygon(np);
  std::vector<std::pair<Int, Int>> pts = {{0, 0}};
  Int x = 0;
  Int rise_num = 0;  // accumulated y over the current denominator
  for (const auto& s : np.slopes) {
    // each slope run has integral rise: mult * num / den with den | mult
    x += s[2];
    rise_num += s[2] / s[1] * s[0];
    pts.emplace_back(x, rise_num);
  }
  if (pts.size() > 1 && pts.back() != std::pair<Int, Int>{x, np.height() / 2})
    throw std::logic_error("polygon_points: endpoint mismatch");
  return pts;
}

NewtonPolygon ordinary_polygon(Int g) {
  if (g < 0) throw std::invalid_argument("ordinary_polygon: negative genus");
  if (g == 0) return NewtonPolygon{};
  return make_polygon({{0, 1, g}, {1, 1, g}});
}

NewtonPolygon supersingular_polygon(Int g) {
  if (g < 0) throw std::invalid_argument("supersingular_polygon: negative genus");
  if (g == 0) return NewtonPolygon{};
  return make_polygon({{1, 2, 2 * g}});
}

NewtonPolygon two_slope_polygon(Int a, Int g, Int mult) {
  if (g < 1 || a < 0 || a > g) throw std::invalid_argument("two_slope_polygon: need 0 <= a <= g");
  if (2 * a == g) return make_polygon({{1, 2, 2 * mult}});
  return make_polygon({{a, g, mult}, {g - a, g, mult}});
}

}  // namespace tricover

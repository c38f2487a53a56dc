#include "tricover/moduli.hpp"

#include <numeric>
#include <stdexcept>

namespace tricover {

namespace {

StratumReport report_from_dim(Int dim, Int g) {
  if (g < 2) throw std::invalid_argument("classify: genus must be >= 2");
  StratumReport r;
  r.genus = g;
  r.stratum_dim = dim;
  r.ambient_dim = g * (g + 1) / 2;
  r.codim = r.ambient_dim - dim;
  if (r.codim < 0) throw std::logic_error("classify: stratum dimension exceeds ambient");
  r.mg_dim = 3 * g - 3;
  r.unlikely = r.codim > r.mg_dim;
  r.two_unlikely = r.codim > 2 * r.mg_dim;
  return r;
}

}  // namespace

Int np_stratum_dim(const NewtonPolygon& np) {
  validate_polygon(np);
  const Int g = np.genus();
  // Walk x = 1..g accumulating xi(x) exactly; count lattice points with
  // xi(x) <= y < x.
  Int count = 0;
  std::size_t si = 0;
  Int left_in_run = np.slopes.empty() ? 0 : np.slopes[0][2];
  BigInt num = 0, den = 1;  // xi(x) = num/den
  for (Int x = 1; x <= g; ++x) {
    while (si < np.slopes.size() && left_in_run == 0) {
      ++si;
      left_in_run = si < np.slopes.size() ? np.slopes[si][2] : 0;
    }
    if (si >= np.slopes.size()) throw std::logic_error("np_stratum_dim: polygon too short");
    // advance by one step of the current slope
    num = num * np.slopes[si][1] + den * np.slopes[si][0];
    den = den * np.slopes[si][1];
    BigInt gcd = boost::multiprecision::gcd(num, den);
    if (gcd > 1) {
      num /= gcd;
      den /= gcd;
    }
    --left_in_run;
    BigInt ceil_xi = (num + den - 1) / den;
    if (ceil_xi < x) count += x - static_cast<Int>(ceil_xi);
  }
  return count;
}

Int eo_stratum_dim(const FinalType& ft) {
  Int sum = 0;
  for (std::size_t i = 0; i < ft.nu.size(); ++i) {
    Int prev = i == 0 ? 0 : ft.nu[i - 1];
    if (ft.nu[i] < prev || ft.nu[i] > prev + 1 || ft.nu[i] > static_cast<Int>(i) + 1)
      throw std::invalid_argument("eo_stratum_dim: invalid final type");
    sum += ft.nu[i];
  }
  return sum;
}

StratumReport classify(const NewtonPolygon& np, Int g) {
  if (np.genus() != g) throw std::invalid_argument("classify: polygon height is not 2g");
  return report_from_dim(np_stratum_dim(np), g);
}

StratumReport classify(const FinalType& ft, Int g) {
  if (static_cast<Int>(ft.nu.size()) != g)
    throw std::invalid_argument("classify: final type length is not g");
  return report_from_dim(eo_stratum_dim(ft), g);
}

}  // namespace tricover

#include "tricover/theory.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tricover {

namespace {

Int floor_div(Int a, Int b) {
  // b > 0
  Int q = a / b;
  if (a % b != 0 && (a < 0)) --q;
  return q;
}

Int ceil_div(Int a, Int b) {
  // b > 0
  Int q = a / b;
  if (a % b != 0 && (a > 0)) ++q;
  return q;
}

Int inv_mod(Int a, Int n) {
  a %= n;
  if (a < 0) a += n;
  Int t = 0, newt = 1, r = n, newr = a;
  while (newr != 0) {
    Int q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (r != 1) throw std::invalid_argument("inv_mod: not invertible");
  return t < 0 ? t + n : t;
}

// Symbol table for a fixed odd prime: values -1, 0, 1 indexed by residue.
std::vector<signed char> legendre_table(Int ell) {
  if (ell < 3 || ell % 2 == 0 || !is_prime(ell))
    throw std::invalid_argument("legendre_table: ell must be an odd prime");
  std::vector<signed char> t(static_cast<std::size_t>(ell), -1);
  t[0] = 0;
  for (Int x = 1; x < ell; ++x) t[static_cast<std::size_t>(x * x % ell)] = 1;
  return t;
}

bool in_open(Int j, Int lo_num, Int lo_den, Int hi_num, Int hi_den) {
  // lo_num/lo_den < j < hi_num/hi_den, all denominators positive
  return static_cast<__int128>(j) * lo_den > lo_num &&
         static_cast<__int128>(j) * hi_den < hi_num;
}

}  // namespace

Int quadratic_excess(Rat a, Rat b, Int ell) {
  if (static_cast<__int128>(a.num) * b.den >= static_cast<__int128>(b.num) * a.den)
    throw std::invalid_argument("quadratic_excess: need a < b");
  auto table = legendre_table(ell);
  Int lo = floor_div(a.num, a.den) + 1;  // least integer > a
  Int hi = ceil_div(b.num, b.den) - 1;   // greatest integer < b
  Int sum = 0;
  for (Int t = lo; t <= hi; ++t) {
    Int r = t % ell;
    if (r < 0) r += ell;
    sum += table[static_cast<std::size_t>(r)];
  }
  return sum;
}

bool verify_lemma42(Int ell, Int n, Int r) {
  if (ell <= 3 || !is_prime(ell)) throw std::invalid_argument("verify_lemma42: ell must be a prime > 3");
  if (n < 1 || r < 1 || r > n) throw std::invalid_argument("verify_lemma42: need 1 <= r <= n");
  Int lhs = legendre(-1, ell) * quadratic_excess(make_rat(ell * r, 4 * n),
                                                 make_rat(4 * ell * r, 4 * n), ell);
  Int rhs = 0;
  for (Int i = 1; i <= 3; ++i)
    rhs += quadratic_excess(make_rat(ell * (i * n - r), 4 * n), make_rat(i * ell * n, 4 * n), ell);
  return lhs == rhs;
}

ConstructionParams make_construction(Int ell, Int n) {
  if (ell <= 3 || !is_prime(ell))
    throw std::invalid_argument("make_construction: ell must be a prime > 3");
  if (n < 1 || std::gcd(n, ell) != 1)
    throw std::invalid_argument("make_construction: need n >= 1 coprime to ell");
  Int k = n == 1 ? 0 : (n - 3 % n * inv_mod(ell, n) % n) % n;
  ConstructionParams p{ell, n, k, (ell - 1) / 2};
  if ((p.k * ell + 3) % n != 0) throw std::logic_error("make_construction: k * ell + 3 != 0 mod n");
  return p;
}

Cover construct_cover(const ConstructionParams& params) {
  const Int m = params.n * params.ell;
  AbelianGroup group = make_group(m);
  GroupElement a0{1, 0};
  GroupElement a1{(params.n - params.k) * params.ell - 4, 0};
  GroupElement ainf{params.k * params.ell + 3, 0};
  Cover cover = cover_from_inertia(group, a0, a1, ainf);
  if (cover.ram != RamificationType{m, m, params.ell, 1})
    throw std::logic_error("construct_cover: unexpected ramification type");
  if (cover.genus != params.n * params.g)
    throw std::logic_error("construct_cover: genus is not n * (ell-1)/2");
  return cover;
}

SlopePrediction predicted_slopes(Int ell) {
  if (ell <= 3 || !is_prime(ell))
    throw std::invalid_argument("predicted_slopes: ell must be a prime > 3");
  auto table = legendre_table(ell);
  Int alpha = 0;
  for (Int t = 1; t < ell; ++t) {
    if (table[static_cast<std::size_t>(t)] != 1) continue;
    bool inside = (4 * t < ell) || (3 * t > ell && 2 * t < ell) || (3 * t > 2 * ell && 4 * t < 3 * ell);
    if (inside) ++alpha;
  }
  return SlopePrediction{alpha, (ell - 1) / 2};
}

std::pair<Int, Int> signature_interval(int i, const ConstructionParams& params) {
  const Int ell = params.ell;
  if (i < 0 || i >= 6 * params.n) throw std::invalid_argument("signature_interval: bad index");
  if (i % 2 == 0) {
    Int u = i / 2;
    Int lo = floor_div(ell * u, 3) + 1;
    Int hi = floor_div(ell * (u + ceil_div(i + 1, 6)), 4);
    return {lo, hi};
  }
  Int u = (i - 1) / 2;
  Int lo = floor_div(ell * (u + ceil_div(i, 6)), 4) + 1;
  Int hi = floor_div(ell * (u + 1), 3);
  // the top interval formally reaches n*ell; the partitioned domain stops at
  // n*ell - 1
  hi = std::min(hi, params.n * ell - 1);
  return {lo, hi};
}

int closed_form_signature(Int j, const ConstructionParams& params) {
  const Int n = params.n;
  if (j < 1 || j >= n * params.ell || j % params.ell == 0)
    throw std::invalid_argument("closed_form_signature: need 1 <= j < n*ell with ell not dividing j");
  int i = -1;
  for (int t = 0; t < 6 * n; ++t) {
    auto [lo, hi] = signature_interval(t, params);
    if (j >= lo && j <= hi) {
      i = t;
      break;
    }
  }
  if (i < 0) throw std::logic_error("closed_form_signature: j not covered by the partition");
  Int f = ceil_div(j * params.k + (i + 2) / 2, n) - floor_div(j * params.k + (i + 1) / 2 + i / 6, n);
  if (f != 0 && f != 1) throw std::logic_error("closed_form_signature: value outside {0,1}");
  return static_cast<int>(f);
}

int interval_signature(Int j, const ConstructionParams& params) {
  const Int n = params.n, ell = params.ell;
  if (j < 1 || j >= n * ell || j % ell == 0)
    throw std::invalid_argument("interval_signature: need 1 <= j < n*ell with ell not dividing j");
  Int a = n == 1 ? 0 : (j % n) * inv_mod(ell, n) % n;
  bool in = false;
  if (3 * a <= n - 1) {
    in = in_open(j, 0, 1, 3 * a * ell, 4) || in_open(j, a * ell, 1, ell * (n + 3 * a), 4) ||
         in_open(j, ell * (n + 3 * a), 3, ell * (2 * n + 3 * a), 4) ||
         in_open(j, ell * (2 * n + 3 * a), 3, ell * (3 * n + 3 * a), 4);
  } else if (3 * a <= 2 * n - 1) {
    in = in_open(j, 0, 1, ell * (3 * a - n), 4) || in_open(j, ell * (3 * a - n), 3, 3 * ell * a, 4) ||
         in_open(j, a * ell, 1, ell * (n + 3 * a), 4) ||
         in_open(j, ell * (n + 3 * a), 3, ell * (2 * n + 3 * a), 4);
  } else {
    in = in_open(j, 0, 1, ell * (3 * a - 2 * n), 4) ||
         in_open(j, ell * (3 * a - 2 * n), 3, ell * (3 * a - n), 4) ||
         in_open(j, ell * (3 * a - n), 3, 3 * ell * a, 4) ||
         in_open(j, a * ell, 1, ell * (n + 3 * a), 4);
  }
  return in ? 1 : 0;
}

Theorem15Class theorem15_hypotheses(Int ell, Int n, Int p) {
  if (ell <= 3 || !is_prime(ell))
    throw std::invalid_argument("theorem15_hypotheses: ell must be a prime > 3");
  if (n < 1 || std::gcd(n, ell) != 1)
    throw std::invalid_argument("theorem15_hypotheses: need n >= 1 coprime to ell");
  if (p < 2 || std::gcd(p, n * ell) != 1) return Theorem15Class::fails;
  const Int g = (ell - 1) / 2;
  if (std::gcd(mult_order(p, n), g) != 1) return Theorem15Class::fails;
  Int d = mult_order(p, ell);
  if (d == g) return Theorem15Class::order_g;
  if (d == 2 * g) return Theorem15Class::order_2g;
  return Theorem15Class::fails;
}

bool orbit_structure_check(Int ell, Int n, Int p) {
  if (theorem15_hypotheses(ell, n, p) != Theorem15Class::order_g)
    throw std::invalid_argument("orbit_structure_check: p does not have order (ell-1)/2 mod ell");
  const Int m = n * ell;
  auto table = legendre_table(ell);

  // one orbit per (orbit of multiplication by p on Z/n, Legendre symbol):
  // the g elements of each residue class with a fixed nonzero symbol fuse
  // with the g elements of every class the mod-n action reaches
  std::vector<std::vector<Int>> class_orbits;
  {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Int a = 0; a < n; ++a) {
      if (seen[static_cast<std::size_t>(a)]) continue;
      std::vector<Int> cycle;
      Int x = a;
      do {
        seen[static_cast<std::size_t>(x)] = true;
        cycle.push_back(x);
        x = x * p % n;
      } while (x != a);
      class_orbits.push_back(std::move(cycle));
    }
  }
  std::set<std::vector<Int>> expected;
  for (const auto& classes : class_orbits)
    for (int eps : {1, -1}) {
      std::vector<Int> orbit;
      for (Int j = 1; j < m; ++j)
        if (std::find(classes.begin(), classes.end(), j % n) != classes.end() &&
            table[static_cast<std::size_t>(j % ell)] == eps)
          orbit.push_back(j);
      expected.insert(std::move(orbit));
    }
  if (n > 1) {
    // multiples of ell move like the nonzero residues mod n
    for (const auto& o : frobenius_orbits(n, p % n)) {
      std::vector<Int> orbit;
      for (Int t : o.elements) orbit.push_back(ell * t);
      std::sort(orbit.begin(), orbit.end());
      expected.insert(std::move(orbit));
    }
  }

  std::set<std::vector<Int>> actual;
  for (const auto& o : frobenius_orbits(m, p % m)) {
    std::vector<Int> orbit = o.elements;
    std::sort(orbit.begin(), orbit.end());
    actual.insert(std::move(orbit));
  }
  return expected == actual;
}

namespace {

struct Bracket {
  BigRat lo, hi;
};

Bracket mul_pos(const Bracket& a, const Bracket& b) { return {a.lo * b.lo, a.hi * b.hi}; }

// 2*atanh(z) = 2*sum z^(2k+1)/(2k+1), bracketed by the geometric tail.
Bracket two_atanh(const BigRat& z, const BigRat& eps) {
  BigRat sum = 0;
  BigRat zpow = z;
  BigRat z2 = z * z;
  Int k = 0;
  for (;;) {
    sum += 2 * zpow / (2 * k + 1);
    zpow *= z2;
    BigRat tail = 2 * zpow / ((2 * k + 3) * (1 - z2));
    if (tail < eps) return {sum, sum + tail};
    ++k;
  }
}

Bracket log_bracket(Int x, const BigRat& eps) {
  // log(x) = e*log(2) + log(y) with y = x / 2^e in [1, 2)
  int e = 0;
  Int y = x;
  while (y >= 2) {
    y /= 2;
    ++e;
  }
  BigRat half_eps = eps / (2 * std::max(e, 1));
  Bracket log2 = two_atanh(BigRat(1, 3), half_eps);
  BigRat yy = BigRat(x, BigInt(1) << e);
  Bracket logy = two_atanh((yy - 1) / (yy + 1), half_eps);
  return {e * log2.lo + logy.lo, e * log2.hi + logy.hi};
}

Bracket sqrt_bracket(Int x, const BigRat& eps) {
  Int s = static_cast<Int>(std::sqrt(static_cast<double>(x)));
  while (s * s > x) --s;
  while ((s + 1) * (s + 1) <= x) ++s;
  BigRat hi = s + 1;  // Newton from above converges downward, staying above
  for (int i = 0; i < 64; ++i) {
    BigRat lo = x / hi;
    if (hi - lo < eps) return {lo, hi};
    hi = (hi + lo) / 2;
  }
  throw std::logic_error("sqrt_bracket: no convergence");
}

}  // namespace

Int threshold_floor(Int g) {
  if (g < 1) throw std::invalid_argument("threshold_floor: g must be positive");
  const Int ell = 2 * g + 1;
  const BigRat eps = BigRat(1, boost::multiprecision::pow(BigInt(10), 30));
  // g*f(g) = (g - 2 sqrt(ell) log(ell)) / 2
  Bracket prod = mul_pos(sqrt_bracket(ell, eps), log_bracket(ell, eps));
  BigRat lo = (BigRat(g) - 2 * prod.hi) / 2;
  BigRat hi = (BigRat(g) - 2 * prod.lo) / 2;
  BigInt flo = boost::multiprecision::numerator(lo) / boost::multiprecision::denominator(lo);
  if (lo < 0 && flo * boost::multiprecision::denominator(lo) != boost::multiprecision::numerator(lo)) --flo;
  BigInt fhi = boost::multiprecision::numerator(hi) / boost::multiprecision::denominator(hi);
  if (hi < 0 && fhi * boost::multiprecision::denominator(hi) != boost::multiprecision::numerator(hi)) --fhi;
  if (flo != fhi) throw std::logic_error("threshold_floor: bracket straddles an integer");
  return static_cast<Int>(flo);
}

DenominatorCertificate large_denominator_certificate(Int g, Int n) {
  if (!is_prime(g) || !is_prime(2 * g + 1))
    throw std::invalid_argument("large_denominator_certificate: g must be a Sophie Germain prime");
  if (g <= 363) throw std::invalid_argument("large_denominator_certificate: need g > 363");
  if (n < 1 || std::gcd(n, 2 * g + 1) != 1)
    throw std::invalid_argument("large_denominator_certificate: need n >= 1 coprime to 2g+1");

  DenominatorCertificate cert;
  cert.g = g;
  cert.n = n;
  cert.ell = 2 * g + 1;
  cert.alpha = predicted_slopes(cert.ell).alpha;
  cert.polygon = two_slope_polygon(cert.alpha, g, n * g);
  cert.report = classify(cert.polygon, n * g);
  cert.threshold = threshold_floor(g);
  cert.xi1_codim = (g + g * cert.threshold + cert.threshold - 1) / 2;

  Int a = std::min(cert.alpha, g - cert.alpha);
  if (a <= cert.threshold)
    throw std::logic_error("large_denominator_certificate: Polya-Vinogradov bound violated");
  if (cert.xi1_codim <= 3 * g - 3)
    throw std::logic_error("large_denominator_certificate: comparison polygon is not unlikely");
  if (!cert.report.unlikely)
    throw std::logic_error("large_denominator_certificate: stratum is not unlikely");
  return cert;
}

IEDensity inclusion_excl_density(std::vector<Int> primes, bool enforce) {
  std::sort(primes.begin(), primes.end());
  if (primes.empty()) throw std::invalid_argument("inclusion_excl_density: empty prime list");
  if (std::adjacent_find(primes.begin(), primes.end()) != primes.end())
    throw std::invalid_argument("inclusion_excl_density: primes must be distinct");
  for (Int g : primes) {
    if (g < 3 || g % 2 == 0 || !is_prime(g) || !is_prime(2 * g + 1))
      throw std::invalid_argument("inclusion_excl_density: " + std::to_string(g) +
                                  " is not an odd Sophie Germain prime");
  }
  IEDensity out;
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = 0; j < primes.size(); ++j) {
      if (i == j) continue;
      bool bad = primes[i] == 2 * primes[j] + 1 || (primes[j] - 1) % primes[i] == 0;
      if (bad)
        out.violations.emplace_back(std::min(primes[i], primes[j]),
                                    std::max(primes[i], primes[j]));
    }
  std::sort(out.violations.begin(), out.violations.end());
  out.violations.erase(std::unique(out.violations.begin(), out.violations.end()),
                       out.violations.end());
  if (enforce && !out.violations.empty())
    throw std::invalid_argument(
        "inclusion_excl_density: incompatible pair (" +
        std::to_string(out.violations[0].first) + ", " +
        std::to_string(out.violations[0].second) + ")");

  // Alternating inclusion-exclusion over independent congruence conditions
  // modulo the distinct primes 2g+1 collapses to 1 - prod(1 - (g-1)/2g).
  BigRat miss = 1;
  for (Int g : primes) miss *= BigRat(g + 1, 2 * g);
  out.value = 1 - miss;
  return out;
}

SSGenusSearch supersingular_genus_for_prime(Int p, Int bound) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::invalid_argument("supersingular_genus_for_prime: p must be an odd prime");
  SSGenusSearch res;
  for (Int ell = 4 * p + 1; ell <= bound; ell += 4 * p) {
    if (!is_prime(ell)) continue;
    Int g = (ell - 1) / 2;
    if (mult_order(p, ell) != g) {
      res.near_misses.push_back(ell);
      continue;
    }
    Cover cover = construct_cover(make_construction(ell, 1));
    if (!is_supersingular(newton_polygon(cover, p % ell)))
      throw std::logic_error("supersingular_genus_for_prime: constructed cover is not supersingular");
    res.found = true;
    res.ell = ell;
    res.genus = g;
    return res;
  }
  return res;
}

}  // namespace tricover

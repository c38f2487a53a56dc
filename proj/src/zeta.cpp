#include "tricover/zeta.hpp"

#include <algorithm>
#include <complex>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>

#include "tricover/covers.hpp"

namespace tricover {

namespace {

// F_{p^deg} as F_p[x]/(f) with a searched irreducible monic f.  Elements are
// coded as integers in [0, p^deg) via base-p digits.
class FiniteField {
 public:
  FiniteField(Int p, int deg, std::uint64_t seed) : p_(p), deg_(deg) {
    q_ = 1;
    for (int i = 0; i < deg; ++i) {
      if (q_ > kFieldBudget / p) throw std::invalid_argument("field size exceeds the brute-force budget");
      q_ *= p;
    }
    std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(p) << 24) ^ static_cast<std::uint64_t>(deg));
    modulus_.assign(static_cast<std::size_t>(deg) + 1, 0);
    modulus_[static_cast<std::size_t>(deg)] = 1;
    for (;;) {
      for (int i = 0; i < deg; ++i)
        modulus_[static_cast<std::size_t>(i)] = static_cast<Int>(rng() % static_cast<std::uint64_t>(p));
      if (deg == 1 || irreducible()) break;
    }
    build_dlog();
  }

  Int p() const { return p_; }
  int deg() const { return deg_; }
  Int q() const { return q_; }
  const std::vector<Int>& modulus() const { return modulus_; }

  Int one_minus(Int code) const {
    // 1 - x acts digit-wise: negate everything, add 1 to the constant term
    Int out = 0, pow = 1;
    for (int i = 0; i < deg_; ++i) {
      Int digit = code % p_;
      code /= p_;
      Int nd = (p_ - digit) % p_;
      if (i == 0) nd = (nd + 1) % p_;
      out += nd * pow;
      pow *= p_;
    }
    return out;
  }

  // discrete log base a fixed generator; defined for codes 1..q-1
  Int dlog(Int code) const { return dlog_[static_cast<std::size_t>(code)]; }

 private:
  using Poly = std::vector<Int>;  // coeffs mod p, low degree first

  Poly mul_mod(const Poly& a, const Poly& b) const {
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    }
    // reduce by the monic modulus
    for (std::size_t k = prod.size(); k-- > static_cast<std::size_t>(deg_);) {
      Int coef = prod[k];
      if (coef == 0) continue;
      prod[k] = 0;
      for (int i = 0; i < deg_; ++i) {
        std::size_t idx = k - static_cast<std::size_t>(deg_) + static_cast<std::size_t>(i);
        prod[idx] = (prod[idx] - coef * modulus_[static_cast<std::size_t>(i)] % p_ + p_ * p_) % p_;
      }
    }
    prod.resize(static_cast<std::size_t>(deg_), 0);
    return prod;
  }

  Poly frobenius(const Poly& a) const {
    // a^p by square-and-multiply
    Poly result{1};
    result.resize(static_cast<std::size_t>(deg_), 0);
    Poly base = a;
    Int e = p_;
    while (e > 0) {
      if (e & 1) result = mul_mod(result, base);
      base = mul_mod(base, base);
      e >>= 1;
    }
    return result;
  }

  bool irreducible() const {
    // x^{p^deg} = x mod f, and x^{p^{deg/r}} != x for prime r | deg
    Poly x(static_cast<std::size_t>(deg_), 0);
    if (deg_ > 1) x[1] = 1;
    Poly t = x;
    std::vector<Poly> iterates;  // t after k Frobenius twists
    for (int k = 0; k < deg_; ++k) {
      t = frobenius(t);
      iterates.push_back(t);
    }
    if (t != x) return false;
    for (int r = 2; r <= deg_; ++r) {
      if (deg_ % r != 0) continue;
      bool rprime = true;
      for (int s = 2; s * s <= r; ++s)
        if (r % s == 0) rprime = false;
      if (!rprime) continue;
      if (iterates[static_cast<std::size_t>(deg_ / r - 1)] == x) return false;
    }
    return true;
  }

  Int encode(const Poly& a) const {
    Int out = 0;
    for (std::size_t i = a.size(); i-- > 0;) out = out * p_ + a[i];
    return out;
  }

  void build_dlog() {
    // factor q-1, then search for a generator
    std::vector<Int> prime_factors;
    Int n = q_ - 1;
    for (Int f = 2; f * f <= n; ++f)
      if (n % f == 0) {
        prime_factors.push_back(f);
        while (n % f == 0) n /= f;
      }
    if (n > 1) prime_factors.push_back(n);

    auto pow_elem = [&](const Poly& a, Int e) {
      Poly result{1};
      result.resize(static_cast<std::size_t>(deg_), 0);
      Poly base = a;
      while (e > 0) {
        if (e & 1) result = mul_mod(result, base);
        base = mul_mod(base, base);
        e >>= 1;
      }
      return result;
    };
    Poly one{1};
    one.resize(static_cast<std::size_t>(deg_), 0);

    std::mt19937_64 rng(0x67656e ^ static_cast<std::uint64_t>(q_));
    Poly gen;
    for (;;) {
      Poly cand(static_cast<std::size_t>(deg_), 0);
      Int code = static_cast<Int>(rng() % static_cast<std::uint64_t>(q_ - 1)) + 1;
      for (int i = 0; i < deg_; ++i) {
        cand[static_cast<std::size_t>(i)] = code % p_;
        code /= p_;
      }
      bool ok = true;
      for (Int f : prime_factors)
        if (pow_elem(cand, (q_ - 1) / f) == one) {
          ok = false;
          break;
        }
      if (ok) {
        gen = cand;
        break;
      }
    }

    dlog_.assign(static_cast<std::size_t>(q_), 0);
    Poly cur = one;
    for (Int k = 0; k < q_ - 1; ++k) {
      dlog_[static_cast<std::size_t>(encode(cur))] = k;
      cur = mul_mod(cur, gen);
    }
  }

  Int p_;
  int deg_;
  Int q_;
  Poly modulus_;
  std::vector<Int> dlog_;
};

// Affine points with x outside {0,1}: y^m = x^{a0}(1-x)^{a1} has
// gcd(m, q-1) solutions in y exactly when the dlog of the right side is
// divisible by gcd(m, q-1).
Int affine_count(const FiniteField& F, Int m, Int a0, Int a1) {
  const Int q = F.q();
  const Int d = std::gcd(m, q - 1);
  Int count = 0;
  const Int one = 1;
  for (Int x = 0; x < q; ++x) {
    if (x == 0 || x == one) continue;
    Int omx = F.one_minus(x);
    Int dl = (a0 % (q - 1)) * F.dlog(x) % (q - 1) + (a1 % (q - 1)) * F.dlog(omx) % (q - 1);
    if (dl % d == 0) count += d;
  }
  return count;
}

// Rational points of t^d = c, c = 1 or -1, counted by scanning the field.
Int root_count(const FiniteField& F, Int d, bool negate) {
  const Int q = F.q();
  const Int target = negate ? F.dlog(F.p() - 1) : 0;  // p - 1 encodes the constant -1
  Int count = 0;
  for (Int t = 1; t < q; ++t)
    if ((d % (q - 1)) * F.dlog(t) % (q - 1) == target) ++count;
  return count;
}

std::vector<std::vector<Int>> partitions_of(Int d) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur;
  auto rec = [&](auto&& self, Int rest, Int maxPart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (Int part = std::min(rest, maxPart); part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

// Fixed points of sigma^i for a permutation with the given cycle type.
std::vector<Int> fix_vector(const std::vector<Int>& cycle_type, int upto) {
  std::vector<Int> fix(static_cast<std::size_t>(upto), 0);
  for (Int c : cycle_type)
    for (int i = 1; i <= upto; ++i)
      if (i % c == 0) fix[static_cast<std::size_t>(i - 1)] += c;
  return fix;
}

BigInt big_pow(Int base, Int e) {
  BigInt r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// Newton identities on the power sums S_1..S_g, completed by the functional
// equation; rejects any candidate failing integrality, the exact Weil bound
// S_j^2 <= (2g)^2 p^j out to 2g+6, count positivity, or the root screen.
std::optional<std::vector<BigInt>> assemble_l(const std::vector<BigInt>& S, Int p, Int g) {
  std::vector<BigInt> c(static_cast<std::size_t>(2 * g) + 1, 0);
  c[0] = 1;
  for (Int k = 1; k <= g; ++k) {
    BigInt acc = 0;
    for (Int i = 1; i <= k; ++i) acc += S[static_cast<std::size_t>(i - 1)] * c[static_cast<std::size_t>(k - i)];
    if (acc % k != 0) return std::nullopt;
    c[static_cast<std::size_t>(k)] = -acc / k;
  }
  for (Int k = g + 1; k <= 2 * g; ++k)
    c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(2 * g - k)] * big_pow(p, k - g);

  // extend the power sums and apply the exact screens
  const Int horizon = 2 * g + 6;
  std::vector<BigInt> ext(S.begin(), S.end());
  for (Int j = g + 1; j <= horizon; ++j) {
    BigInt s = 0;
    for (Int i = 1; i <= std::min(j - 1, 2 * g); ++i)
      s -= c[static_cast<std::size_t>(i)] * ext[static_cast<std::size_t>(j - i - 1)];
    if (j <= 2 * g) s -= j * c[static_cast<std::size_t>(j)];
    ext.push_back(s);
  }
  const BigInt weil = BigInt(2 * g) * (2 * g);
  for (Int j = 1; j <= horizon; ++j) {
    const BigInt& s = ext[static_cast<std::size_t>(j - 1)];
    if (s * s > weil * big_pow(p, j)) return std::nullopt;
    if (big_pow(p, j) + 1 - s < 0) return std::nullopt;
  }

  // root modulus screen: all reciprocal roots of L should sit near p^(1/2)
  const int degree = static_cast<int>(2 * g);
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i)
    roots[static_cast<std::size_t>(i)] = std::polar(1.0 / std::sqrt(static_cast<double>(p)) * (1.0 + 0.01 * i),
                                                    0.7 * i + 0.3);
  std::vector<std::complex<double>> cd(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) cd[i] = static_cast<double>(c[i]);
  auto eval = [&](std::complex<double> z) {
    std::complex<double> v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * z + cd[i];
    return v;
  };
  for (int iter = 0; iter < 400; ++iter) {
    for (int i = 0; i < degree; ++i) {
      std::complex<double> num = eval(roots[static_cast<std::size_t>(i)]) / cd.back();
      std::complex<double> den = 1;
      for (int j = 0; j < degree; ++j)
        if (j != i) den *= roots[static_cast<std::size_t>(i)] - roots[static_cast<std::size_t>(j)];
      roots[static_cast<std::size_t>(i)] -= num / den;
    }
  }
  const double want = 1.0 / std::sqrt(static_cast<double>(p));
  for (const auto& r : roots)
    if (std::abs(std::abs(r) - want) > 0.10 * want) return std::nullopt;
  return c;
}

struct ResolvedCurve {
  Int genus = 0;
  std::vector<Int> affine;  // A_1..A_g
  std::vector<Int> counts;  // N_1..N_g
  std::vector<BigInt> lcoeffs;
};

ResolvedCurve resolve_curve(Int m, Int a0, Int a1, Int p, std::uint64_t seed) {
  if (m < 2) throw std::invalid_argument("oracle: m must be >= 2");
  a0 = ((a0 % m) + m) % m;
  a1 = ((a1 % m) + m) % m;
  Int ainf = ((-(a0 + a1)) % m + m) % m;
  if (a0 == 0 || a1 == 0 || ainf == 0)
    throw std::invalid_argument("oracle: cover must be branched at all of 0, 1, oo");
  if (p < 2 || !is_prime(p) || m % p == 0)
    throw std::invalid_argument("oracle: p must be a prime not dividing m");
  Cover cover = cover_from_inertia(make_group(m), {a0, 0}, {a1, 0}, {ainf, 0});
  const Int g = cover.genus;
  if (g < 1) throw std::invalid_argument("oracle: genus must be positive");

  // The d_b points above each branch point carry explicit coordinates:
  // t0 = y^{m/d0} / x^{a0/d0} satisfies t0^{d0} = (1-x)^{a1}, so t0^{d0} = 1
  // at x = 0; symmetrically t1^{d1} = 1 at x = 1; and with u = 1/x,
  // s = y^{m/dinf} u^{(a0+a1)/dinf} satisfies s^{dinf} = (u-1)^{a1}, so
  // s^{dinf} = (-1)^{a1} at infinity.  The deck group moves each coordinate
  // simply transitively through the solution set, so rational points above a
  // branch point biject with rational solutions, which we count in the same
  // field as the affine scan.
  const Int d0 = std::gcd(a0, m), d1 = std::gcd(a1, m), dinf = std::gcd(ainf, m);
  ResolvedCurve res;
  res.genus = g;
  std::array<std::vector<Int>, 3> fibers;
  for (int i = 1; i <= g; ++i) {
    FiniteField F(p, i, seed);
    res.affine.push_back(affine_count(F, m, a0, a1));
    fibers[0].push_back(root_count(F, d0, false));
    fibers[1].push_back(root_count(F, d1, false));
    fibers[2].push_back(root_count(F, dinf, a1 % 2 == 1));
    res.counts.push_back(res.affine.back() + fibers[0].back() + fibers[1].back() +
                         fibers[2].back());
  }

  // Cross-check: each measured fiber-count sequence must be the fixed-point
  // sequence of an actual cycle type on d_b points, and the assembled
  // L-polynomial must pass every zeta-function screen.
  const Int db[3] = {d0, d1, dinf};
  for (int b = 0; b < 3; ++b) {
    std::set<std::vector<Int>> shapes;
    for (const auto& part : partitions_of(db[b]))
      shapes.insert(fix_vector(part, static_cast<int>(g)));
    if (!shapes.count(fibers[static_cast<std::size_t>(b)]))
      throw std::logic_error("oracle: fiber counts match no Frobenius cycle type");
  }
  std::vector<BigInt> S;
  for (Int i = 1; i <= g; ++i)
    S.push_back(big_pow(p, i) + 1 - res.counts[static_cast<std::size_t>(i - 1)]);
  auto c = assemble_l(S, p, g);
  if (!c) throw std::logic_error("oracle: counts fail the zeta-function invariants");
  res.lcoeffs = std::move(*c);
  return res;
}

int valuation(BigInt v, Int p) {
  int e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

}  // namespace

Int count_points(Int m, Int a0, Int a1, Int p, int i, std::uint64_t seed) {
  auto res = resolve_curve(m, a0, a1, p, seed);
  if (i < 1 || i > res.genus)
    throw std::invalid_argument("count_points: need 1 <= i <= genus; deeper counts come from L");
  return res.counts[static_cast<std::size_t>(i - 1)];
}

PointCounts count_curve(Int m, Int a0, Int a1, Int p, std::uint64_t seed) {
  auto res = resolve_curve(m, a0, a1, p, seed);
  return PointCounts{m, a0, a1, p, res.counts};
}

LPolynomial l_polynomial(const PointCounts& counts, Int g) {
  if (static_cast<Int>(counts.counts.size()) < g)
    throw std::invalid_argument("l_polynomial: need counts out to i = g");
  std::vector<BigInt> S;
  for (Int i = 1; i <= g; ++i)
    S.push_back(big_pow(counts.p, i) + 1 - counts.counts[static_cast<std::size_t>(i - 1)]);
  auto c = assemble_l(S, counts.p, g);
  if (!c) throw std::invalid_argument("l_polynomial: counts fail the zeta-function invariants");
  return LPolynomial{counts.p, *c};
}

NewtonPolygon np_from_lpoly(const LPolynomial& lpoly) {
  const Int p = lpoly.p;
  const auto& c = lpoly.coeffs;
  if (c.empty() || c[0] != 1) throw std::invalid_argument("np_from_lpoly: need c_0 = 1");
  // lower convex hull of (i, v_p(c_i)), skipping zero coefficients
  std::vector<std::pair<Int, Int>> pts;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    pts.emplace_back(static_cast<Int>(i), valuation(c[i], p));
  }
  std::vector<std::pair<Int, Int>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      auto& a = hull[hull.size() - 2];
      auto& b = hull[hull.size() - 1];
      // keep b only if it turns left: (b-a) x (pt-a) > 0
      __int128 cross = static_cast<__int128>(b.first - a.first) * (pt.second - a.second) -
                       static_cast<__int128>(b.second - a.second) * (pt.first - a.first);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }
  std::vector<std::array<Int, 3>> entries;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    Int run = hull[i].first - hull[i - 1].first;
    Int rise = hull[i].second - hull[i - 1].second;
    entries.push_back({rise, run, run});
  }
  return make_polygon(entries);
}

OracleReport run_oracle(Int m, Int a0, Int a1, Int p, int max_i, std::uint64_t seed) {
  auto res = resolve_curve(m, a0, a1, p, seed);
  OracleReport report;
  report.m = m;
  report.a0 = ((a0 % m) + m) % m;
  report.a1 = ((a1 % m) + m) % m;
  report.p = p;
  report.genus = res.genus;
  report.seed = seed;
  report.counts = PointCounts{m, report.a0, report.a1, p, res.counts};
  report.lpoly = LPolynomial{p, res.lcoeffs};
  report.np_counted = np_from_lpoly(report.lpoly);

  // deeper fields: the affine count is re-measured and the fiber part takes
  // the only values the L-polynomial leaves room for
  Int ainf = ((-(report.a0 + report.a1)) % m + m) % m;
  Int fiber_max = std::gcd(report.a0, m) + std::gcd(report.a1, m) + std::gcd(ainf, m);
  std::vector<BigInt> S;
  for (Int i = 1; i <= res.genus; ++i)
    S.push_back(big_pow(p, i) + 1 - res.counts[static_cast<std::size_t>(i - 1)]);
  for (Int j = res.genus + 1; j <= max_i; ++j) {
    BigInt s = 0;
    for (Int i = 1; i <= std::min(j - 1, 2 * res.genus); ++i)
      s -= res.lcoeffs[static_cast<std::size_t>(i)] * S[static_cast<std::size_t>(j - i - 1)];
    if (j <= 2 * res.genus) s -= j * res.lcoeffs[static_cast<std::size_t>(j)];
    S.push_back(s);
    BigInt n = big_pow(p, j) + 1 - s;
    FiniteField F(p, static_cast<int>(j), seed);
    Int aff = affine_count(F, m, report.a0, report.a1);
    BigInt fiber = n - aff;
    if (fiber < 0 || fiber > fiber_max)
      throw std::logic_error("oracle: derived count disagrees with the affine recount");
    report.derived_counts.push_back(static_cast<Int>(n));
  }

  Cover cover = cover_from_inertia(make_group(m), {report.a0, 0}, {report.a1, 0}, {ainf, 0});
  report.np_shimura_taniyama = newton_polygon(cover, p % m);
  report.match = report.np_counted == report.np_shimura_taniyama;
  return report;
}

}  // namespace tricover

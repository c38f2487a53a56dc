#include "tricover/density.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tricover {

namespace {

std::map<Int, int> factor_small(Int n) {
  std::map<Int, int> f;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  if (n > 1) ++f[n];
  return f;
}

BigInt phi_of(const std::map<Int, int>& fac) {
  BigInt phi = 1;
  for (const auto& [p, e] : fac) {
    phi *= p - 1;
    for (int i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

BigInt value_of(const std::map<Int, int>& fac) {
  BigInt v = 1;
  for (const auto& [p, e] : fac)
    for (int i = 0; i < e; ++i) v *= p;
  return v;
}

Int pow_int(Int p, int e) {
  Int v = 1;
  while (e-- > 0) v *= p;
  return v;
}

// Merges sets sharing a modulus, sorts residues, and drops empty sets.
std::vector<CongruenceSet> normalize(const std::vector<CongruenceSet>& sets) {
  std::map<Int, std::vector<Int>> merged;
  for (const auto& s : sets) {
    if (s.modulus < 1) throw std::invalid_argument("union_density: modulus must be >= 1");
    for (Int r : s.residues) {
      Int v = ((r % s.modulus) + s.modulus) % s.modulus;
      if (std::gcd(v, s.modulus) != 1)
        throw std::invalid_argument("union_density: residue not coprime to modulus");
      merged[s.modulus].push_back(v);
    }
  }
  std::vector<CongruenceSet> out;
  for (auto& [m, rs] : merged) {
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    out.push_back({m, std::move(rs)});
  }
  return out;
}

// Component-wise CRT traversal of the units mod lcm(moduli): fix one unit
// residue per prime power at a time; whenever all components of a set's
// modulus are fixed, its membership is decided for the whole subtree, so
// matching subtrees are counted in bulk and dead ones are skipped.
class UnionScanner {
 public:
  UnionScanner(const std::vector<CongruenceSet>& sets, const std::map<Int, int>& lfac) {
    for (const auto& [q, e] : lfac) comps_.push_back({q, pow_int(q, e)});
    // decide small components first so small-modulus sets resolve early
    std::sort(comps_.begin(), comps_.end(),
              [](const Comp& a, const Comp& b) { return a.Q < b.Q; });

    suffix_phi_.assign(comps_.size() + 1, 1);
    for (std::size_t j = comps_.size(); j-- > 0;)
      suffix_phi_[j] = suffix_phi_[j + 1] * phi_one(comps_[j]);

    touch_.resize(comps_.size());
    for (const auto& s : sets) {
      SetState st;
      st.modulus = s.modulus;
      st.member.assign(static_cast<std::size_t>(s.modulus), 0);
      for (Int r : s.residues) st.member[static_cast<std::size_t>(r)] = 1;
      int si = static_cast<int>(states_.size());
      auto fac = factor_small(s.modulus);
      st.remaining = static_cast<int>(fac.size());
      for (std::size_t j = 0; j < comps_.size(); ++j) {
        auto it = fac.find(comps_[j].q);
        if (it == fac.end()) continue;
        Int qpart = pow_int(it->first, it->second);
        // CRT idempotent: 1 mod qpart, 0 mod modulus/qpart
        Int rest = s.modulus / qpart;
        Int basis = 0;
        for (Int t = 0; t < qpart; ++t)
          if ((t * rest) % qpart == 1) {
            basis = t * rest;
            break;
          }
        touch_[j].push_back({si, qpart, basis});
      }
      states_.push_back(std::move(st));
    }
  }

  unsigned long long count_union() {
    count_ = 0;
    evals_ = 0;
    done_ = 0;
    matched_ = 0;
    for (auto& st : states_) {
      st.partial = 0;
      // a modulus-1 set would start determined; those are filtered earlier
    }
    descend(0);
    return count_;
  }

  unsigned long long evaluations() const { return evals_; }

 private:
  struct Comp {
    Int q, Q;
  };
  struct Touch {
    int set;
    Int qpart;
    Int basis;
  };
  struct SetState {
    Int modulus = 1;
    std::vector<std::uint8_t> member;
    Int partial = 0;
    int remaining = 0;
  };

  static unsigned long long phi_one(const Comp& c) {
    return static_cast<unsigned long long>(c.Q / c.q * (c.q - 1));
  }

  void descend(std::size_t depth) {
    if (depth == comps_.size()) return;  // leaf with no match
    const Comp& c = comps_[depth];
    for (Int x = 1; x < c.Q; ++x) {
      if (x % c.q == 0) continue;
      ++evals_;
      int new_matches = 0, new_done = 0;
      for (const auto& t : touch_[depth]) {
        auto& st = states_[static_cast<std::size_t>(t.set)];
        st.partial = (st.partial + (x % t.qpart) * t.basis) % st.modulus;
        if (--st.remaining == 0) {
          ++new_done;
          if (st.member[static_cast<std::size_t>(st.partial)]) ++new_matches;
        }
      }
      done_ += new_done;
      matched_ += new_matches;
      if (matched_ > 0)
        count_ += suffix_phi_[depth + 1];
      else if (done_ < static_cast<int>(states_.size()))
        descend(depth + 1);
      done_ -= new_done;
      matched_ -= new_matches;
      for (const auto& t : touch_[depth]) {
        auto& st = states_[static_cast<std::size_t>(t.set)];
        ++st.remaining;
        st.partial = ((st.partial - (x % t.qpart) * t.basis) % st.modulus + st.modulus) % st.modulus;
      }
    }
  }

  std::vector<Comp> comps_;
  std::vector<unsigned long long> suffix_phi_;
  std::vector<std::vector<Touch>> touch_;
  std::vector<SetState> states_;
  unsigned long long count_ = 0, evals_ = 0;
  int done_ = 0, matched_ = 0;
};

}  // namespace

CoverProperty property_from_name(const std::string& name) {
  if (name == "ordinary") return CoverProperty::ordinary;
  if (name == "ss") return CoverProperty::supersingular;
  if (name == "ssp") return CoverProperty::superspecial;
  if (name == "nu") return CoverProperty::unlikely_np;
  if (name == "eu") return CoverProperty::unlikely_eo;
  if (name == "2nu") return CoverProperty::two_unlikely_np;
  if (name == "2eu") return CoverProperty::two_unlikely_eo;
  throw std::invalid_argument("unknown property: " + name);
}

std::string property_name(CoverProperty p) {
  switch (p) {
    case CoverProperty::ordinary: return "ordinary";
    case CoverProperty::supersingular: return "ss";
    case CoverProperty::superspecial: return "ssp";
    case CoverProperty::unlikely_np: return "nu";
    case CoverProperty::unlikely_eo: return "eu";
    case CoverProperty::two_unlikely_np: return "2nu";
    case CoverProperty::two_unlikely_eo: return "2eu";
  }
  throw std::logic_error("property_name: bad enum");
}

CongruenceSet residues_where(const SignatureTable& table,
                             const std::function<bool(const SignatureTable&, Int)>& pred) {
  const Int e = table.exponent();
  if (e < 2) throw std::logic_error("residues_where: trivial exponent");
  CongruenceSet out;
  out.modulus = e;
  for (Int r = 1; r < e; ++r) {
    if (std::gcd(r, e) != 1) continue;
    if (pred(table, r)) out.residues.push_back(r);
  }
  return out;
}

CongruenceSet property_residues(const SignatureTable& table, CoverProperty prop) {
  const Int g = table.genus();
  return residues_where(table, [&](const SignatureTable& t, Int r) {
    switch (prop) {
      case CoverProperty::ordinary:
        return is_ordinary(newton_polygon(t, r));
      case CoverProperty::supersingular:
        return is_supersingular(newton_polygon(t, r));
      case CoverProperty::superspecial:
        return is_superspecial(final_type(dieudonne_maps(t, r)));
      case CoverProperty::unlikely_np:
        return classify(newton_polygon(t, r), g).unlikely;
      case CoverProperty::two_unlikely_np:
        return classify(newton_polygon(t, r), g).two_unlikely;
      case CoverProperty::unlikely_eo:
        return classify(final_type(dieudonne_maps(t, r)), g).unlikely;
      case CoverProperty::two_unlikely_eo:
        return classify(final_type(dieudonne_maps(t, r)), g).two_unlikely;
    }
    return false;
  });
}

CongruenceSet property_residues(const Cover& cover, CoverProperty prop) {
  return property_residues(SignatureTable(cover), prop);
}

DensityResult union_density(const std::vector<CongruenceSet>& sets, unsigned long long cap) {
  if (sets.empty()) throw std::invalid_argument("union_density: empty list of sets");
  Int min_modulus = sets[0].modulus;
  for (const auto& s : sets) min_modulus = std::min(min_modulus, s.modulus);
  if (cap < static_cast<unsigned long long>(min_modulus))
    throw std::invalid_argument("union_density: cap below the smallest modulus");

  auto norm = normalize(sets);
  if (norm.empty()) {
    // all property sets empty: the union has density zero, exactly
    return DensityResult{BigRat(0), DensityMode::exact, BigInt(1), 0, 0};
  }

  // Greedy selection in descending standalone density; a set fits if the
  // accumulated lcm still traverses within cap.  When everything fits the
  // result is the exact union.
  std::vector<double> standalone(norm.size());
  for (std::size_t i = 0; i < norm.size(); ++i)
    standalone[i] = static_cast<double>(norm[i].residues.size()) /
                    static_cast<double>(phi_of(factor_small(norm[i].modulus)));
  std::vector<std::size_t> order(norm.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return standalone[a] > standalone[b]; });

  std::map<Int, int> lfac;
  std::vector<CongruenceSet> selected;
  for (std::size_t i : order) {
    const auto& s = norm[i];
    std::map<Int, int> trial = lfac;
    for (const auto& [q, e] : factor_small(s.modulus))
      trial[q] = std::max(trial[q], e);
    if (phi_of(trial) <= cap) {
      lfac = std::move(trial);
      selected.push_back(s);
    }
  }
  if (selected.empty())
    throw std::invalid_argument("union_density: no congruence set fits within the cap");

  UnionScanner scanner(selected, lfac);
  unsigned long long hits = scanner.count_union();
  BigInt phi = phi_of(lfac);
  BigInt lval = value_of(lfac);

  // count the original inputs whose conditions are fully absorbed
  Int absorbed = 0;
  for (const auto& s : sets)
    if (!s.residues.empty() && lval % s.modulus == 0) ++absorbed;

  DensityResult result;
  result.value = BigRat(BigInt(hits), phi);
  result.mode = selected.size() == norm.size() ? DensityMode::exact : DensityMode::lower_bound;
  result.effective_modulus = lval;
  result.covers_used = absorbed;
  result.evaluations = scanner.evaluations();
  return result;
}

DensityResult density_from_covers(const std::vector<Cover>& covers, CoverProperty prop,
                                  unsigned long long cap) {
  std::vector<CongruenceSet> sets;
  for (const auto& c : covers) sets.push_back(property_residues(c, prop));
  return union_density(sets, cap);
}

DensityResult genus_density(Int g, CoverProperty prop, unsigned long long cap, int workers) {
  return density_from_covers(enumerate_covers(g, workers), prop, cap);
}

Conjecture13Report conjecture13_check(Int g, unsigned long long budget, int workers) {
  auto covers = enumerate_covers(g, workers);
  std::vector<CongruenceSet> nu_sets, eu_sets, one_sets;
  std::map<Int, int> lfac;
  std::vector<Int> exponents;
  for (const auto& c : covers) {
    SignatureTable table(c);
    nu_sets.push_back(property_residues(table, CoverProperty::unlikely_np));
    eu_sets.push_back(property_residues(table, CoverProperty::unlikely_eo));
    exponents.push_back(c.group.exponent());
    for (const auto& [q, e] : factor_small(c.group.exponent()))
      lfac[q] = std::max(lfac[q], e);
  }
  std::sort(exponents.begin(), exponents.end());
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
  for (Int e : exponents) one_sets.push_back({e, {1 % e}});

  Conjecture13Report report;
  report.genus = g;
  report.modulus = value_of(lfac);
  report.unit_classes = phi_of(lfac);

  // Three indicator families over the same traversal: r = 1 somewhere
  // (excluded from the scan), some unlikely NP, some unlikely EO.
  auto nu_n = normalize(nu_sets);
  auto eu_n = normalize(eu_sets);
  auto one_n = normalize(one_sets);

  std::vector<std::pair<Int, Int>> comps;  // (q, Q)
  for (const auto& [q, e] : lfac) comps.emplace_back(q, pow_int(q, e));
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });

  struct SetState {
    Int modulus;
    std::vector<std::uint8_t> member;
    Int partial = 0;
    int remaining = 0;
    int family = 0;
  };
  std::vector<SetState> states;
  std::vector<std::vector<std::array<Int, 3>>> touch(comps.size());  // set, qpart, basis
  auto add_family = [&](const std::vector<CongruenceSet>& fam, int id) {
    for (const auto& s : fam) {
      SetState st;
      st.modulus = s.modulus;
      st.family = id;
      st.member.assign(static_cast<std::size_t>(s.modulus), 0);
      for (Int r : s.residues) st.member[static_cast<std::size_t>(r)] = 1;
      auto fac = factor_small(s.modulus);
      st.remaining = static_cast<int>(fac.size());
      int si = static_cast<int>(states.size());
      for (std::size_t j = 0; j < comps.size(); ++j) {
        auto it = fac.find(comps[j].first);
        if (it == fac.end()) continue;
        Int qpart = pow_int(it->first, it->second);
        Int rest = s.modulus / qpart;
        Int basis = 0;
        for (Int t = 0; t < qpart; ++t)
          if ((t * rest) % qpart == 1) {
            basis = t * rest;
            break;
          }
        touch[j].push_back({si, qpart, basis});
      }
      states.push_back(std::move(st));
    }
  };
  add_family(one_n, 0);
  add_family(nu_n, 1);
  add_family(eu_n, 2);

  std::vector<unsigned long long> suffix_phi(comps.size() + 1, 1);
  for (std::size_t j = comps.size(); j-- > 0;)
    suffix_phi[j] = suffix_phi[j + 1] *
                    static_cast<unsigned long long>(comps[j].second / comps[j].first *
                                                    (comps[j].first - 1));

  int hit[3] = {0, 0, 0};
  unsigned long long evals = 0;
  std::vector<Int> assignment(comps.size(), 0);
  constexpr std::size_t kSampleCap = 1000;
  bool exhausted = false;

  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (exhausted) return;
    if (depth == comps.size()) {
      // full class decided: excluded if r = 1 somewhere, satisfied if both
      // an unlikely NP and an unlikely EO appear
      report.classes_decided += 1;
      if (hit[0] == 0 && !(hit[1] > 0 && hit[2] > 0)) {
        report.violating += 1;
        if (report.sample.size() < kSampleCap) {
          std::vector<Residue> parts;
          for (std::size_t j = 0; j < comps.size(); ++j)
            parts.emplace_back(BigInt(assignment[j]), BigInt(comps[j].second));
          report.sample.push_back(crt_lift(parts).value);
        }
      }
      return;
    }
    const auto& [q, Q] = comps[depth];
    for (Int x = 1; x < Q; ++x) {
      if (x % q == 0) continue;
      if (++evals > budget) {
        exhausted = true;
        return;
      }
      assignment[depth] = x;
      int new_hit[3] = {0, 0, 0};
      for (const auto& t : touch[depth]) {
        auto& st = states[static_cast<std::size_t>(t[0])];
        st.partial = (st.partial + (x % t[1]) * t[2]) % st.modulus;
        if (--st.remaining == 0 && st.member[static_cast<std::size_t>(st.partial)])
          ++new_hit[st.family];
      }
      for (int f = 0; f < 3; ++f) hit[f] += new_hit[f];
      if (hit[0] > 0 || (hit[1] > 0 && hit[2] > 0)) {
        // subtree has no violations either way
        report.classes_decided += suffix_phi[depth + 1];
      } else {
        rec(depth + 1);
      }
      for (int f = 0; f < 3; ++f) hit[f] -= new_hit[f];
      for (const auto& t : touch[depth]) {
        auto& st = states[static_cast<std::size_t>(t[0])];
        ++st.remaining;
        st.partial = ((st.partial - (x % t[1]) * t[2]) % st.modulus + st.modulus) % st.modulus;
      }
      if (exhausted) return;
    }
  };
  rec(0);
  report.partial = exhausted;
  return report;
}

}  // namespace tricover

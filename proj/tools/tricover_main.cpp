#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "tricover/json_io.hpp"

namespace {

using namespace tricover;

std::vector<Int> parse_int_list(const std::string& text, char sep) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  return out;
}

Cover parse_cover(const std::string& group_text, const std::string& inertia_text) {
  auto gparts = parse_int_list(group_text, ',');
  if (gparts.empty() || gparts.size() > 2)
    throw std::invalid_argument("--group expects c or c,d");
  AbelianGroup g = make_group(gparts[0], gparts.size() == 2 ? gparts[1] : 1);
  std::vector<GroupElement> elems;
  std::stringstream ss(inertia_text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto xy = parse_int_list(item, ',');
    if (xy.empty() || xy.size() > 2) throw std::invalid_argument("--inertia expects x[,y];x[,y];x[,y]");
    elems.push_back(reduce(g, xy[0], xy.size() == 2 ? xy[1] : 0));
  }
  if (elems.size() != 3) throw std::invalid_argument("--inertia expects three elements");
  return cover_from_inertia(g, elems[0], elems[1], elems[2]);
}

std::pair<Int, Int> parse_genus_range(const std::string& text) {
  auto dash = text.find('-');
  if (dash == std::string::npos) {
    Int g = std::stoll(text);
    return {g, g};
  }
  return {std::stoll(text.substr(0, dash)), std::stoll(text.substr(dash + 1))};
}

Int residue_for(const Cover& cover, Int residue, Int prime) {
  if (prime > 0) {
    if (!is_prime(prime)) throw std::invalid_argument("--prime must be prime");
    return prime % cover.group.exponent();
  }
  return residue;
}

std::vector<Int> least_primes_with(Int ell, Int n, Theorem15Class want, std::size_t how_many) {
  std::vector<Int> out;
  for (Int p = 2; out.size() < how_many; ++p) {
    if (!is_prime(p)) continue;
    if (p > 1'000'000) throw std::runtime_error("least_primes_with: search exhausted");
    if (theorem15_hypotheses(ell, n, p) == want) out.push_back(p);
  }
  return out;
}

// ---- reproduce targets ----------------------------------------------------

const std::vector<Int> kGermain49 = {
    3,    5,    29,   41,   53,   83,   89,   113,  131,  173,  179,  191,  233,
    239,  251,  281,  293,  359,  419,  431,  443,  491,  509,  593,  641,  653,
    659,  683,  719,  743,  761,  809,  911,  953,  1013, 1019, 1031, 1049, 1103,
    1223, 1229, 1289, 1409, 1439, 1451, 1481, 1499, 1511, 1559};

// The genus-5 superspecial congruence list: p = -1 mod 8, 11, 12, 15, 20,
// p = 11 mod 15, or p = 11 mod 20.
bool genus5_superspecial_listed(Int p) {
  return p % 8 == 7 || p % 11 == 10 || p % 12 == 11 || p % 15 == 14 || p % 20 == 19 ||
         p % 15 == 11 || p % 20 == 11;
}

Json reproduce_prop32() {
  Cover cover = parse_cover("20", "1;9;10");
  SignatureTable table(cover);

  std::vector<Int> f_ones;
  for (int i = 0; i < table.size(); ++i)
    if (table.f(i) == 1) f_ones.push_back(table.relevant()[static_cast<std::size_t>(i)].x);
  std::sort(f_ones.begin(), f_ones.end());

  Json orbits = Json::array();
  for (const auto& o : frobenius_orbits(20, 11)) orbits.push_back(o.elements);

  auto maps = dieudonne_maps(table, 11);
  FinalType ft = final_type(maps);
  CongruenceSet ssp = property_residues(table, CoverProperty::superspecial);

  // the published condition list, as congruence sets
  std::vector<CongruenceSet> listed = {{8, {7}},   {11, {10}}, {12, {11}}, {15, {14}},
                                       {20, {19}}, {15, {11}}, {20, {11}}};
  DensityResult listed_density = union_density(listed, kDefaultDensityCap);

  // the full genus-5 sweep against the list, over primes below 10^4
  auto covers = enumerate_covers(5);
  std::vector<std::pair<Int, CongruenceSet>> ssp_sets;
  Int order_lcm = 20;
  for (const auto& c : covers) {
    ssp_sets.emplace_back(c.group.exponent(), property_residues(c, CoverProperty::superspecial));
    order_lcm = std::lcm(order_lcm, c.group.order());
  }
  bool agree = true;
  Int primes_checked = 0;
  for (Int p = 2; p < 10'000; ++p) {
    if (!is_prime(p) || order_lcm % p == 0) continue;
    ++primes_checked;
    bool computed = false;
    for (const auto& [e, set] : ssp_sets)
      if (std::binary_search(set.residues.begin(), set.residues.end(), p % e)) {
        computed = true;
        break;
      }
    if (computed != genus5_superspecial_listed(p)) {
      agree = false;
      break;
    }
  }

  Json j;
  j["schema"] = kSchemaVersion;
  j["target"] = "prop32";
  j["cover"] = to_json(cover);
  j["signature_ones"] = f_ones;
  j["orbits_mod_20_at_11"] = orbits;
  j["final_type_at_11"] = ft.nu;
  j["words_at_11"] = eo_words(maps);
  j["superspecial_at_11"] = is_superspecial(ft);
  j["newton_at_11"] = to_json(newton_polygon(table, 11));
  j["superspecial_residues"] = to_json(ssp);
  j["listed_union_density"] = to_string(listed_density.value);
  j["genus5_covers"] = static_cast<Int>(covers.size());
  j["primes_below_10000_checked"] = primes_checked;
  j["list_agrees_with_computation"] = agree;
  return j;
}

Json reproduce_prop41() {
  Cover cover = parse_cover("35", "1;20;14");
  SignatureTable table(cover);
  std::vector<Int> f_ones;
  for (int i = 0; i < table.size(); ++i)
    if (table.f(i) == 1) f_ones.push_back(table.relevant()[static_cast<std::size_t>(i)].x);
  std::sort(f_ones.begin(), f_ones.end());

  Json orbits = Json::array();
  for (const auto& o : frobenius_orbits(35, 3)) orbits.push_back(o.elements);

  Json per_residue = Json::object();
  for (Int r : {3, 12, 17, 33}) per_residue[std::to_string(r)] = to_json(newton_polygon(table, r));
  Json per_prime = Json::object();
  for (Int p : {3, 47, 17, 103}) per_prime[std::to_string(p)] = to_json(newton_polygon(table, p % 35));

  Json j;
  j["schema"] = kSchemaVersion;
  j["target"] = "prop41";
  j["cover"] = to_json(cover);
  j["signature_ones"] = f_ones;
  j["orbits_mod_35_at_3"] = orbits;
  j["newton_by_residue"] = per_residue;
  j["newton_by_prime"] = per_prime;
  j["np_stratum_at_3"] = to_json(classify(newton_polygon(table, 3), cover.genus));
  return j;
}

Json reproduce_lemma42() {
  Int cases = 0;
  bool all_hold = true;
  for (Int ell = 5; ell <= 101; ++ell) {
    if (!is_prime(ell)) continue;
    for (Int n = 1; n <= 12; ++n) {
      if (std::gcd(n, ell) != 1) continue;
      for (Int r = 1; r <= n; ++r) {
        ++cases;
        if (!verify_lemma42(ell, n, r)) all_hold = false;
      }
    }
  }
  return Json{{"schema", kSchemaVersion}, {"target", "lemma42"}, {"ell_max", 101},
              {"n_max", 12},              {"cases", cases},      {"all_hold", all_hold}};
}

Json reproduce_thm15() {
  Json rows = Json::array();
  for (Int ell : {7, 11, 13, 17, 19, 23}) {
    for (Int n = 1; n <= 4; ++n) {
      if (std::gcd(n, ell) != 1) continue;
      auto params = make_construction(ell, n);
      Cover cover = construct_cover(params);
      SignatureTable table(cover);
      auto pred = predicted_slopes(ell);
      NewtonPolygon expect_g = two_slope_polygon(pred.alpha, pred.g, n * pred.g);
      NewtonPolygon expect_2g = supersingular_polygon(n * pred.g);

      Json row;
      row["ell"] = ell;
      row["n"] = n;
      row["alpha"] = pred.alpha;
      row["g"] = pred.g;
      row["cover"] = to_json(cover);
      bool ok_g = true, ok_2g = true;
      auto pg = least_primes_with(ell, n, Theorem15Class::order_g, 2);
      for (Int p : pg) ok_g = ok_g && newton_polygon(table, p % (n * ell)) == expect_g;
      auto p2g = least_primes_with(ell, n, Theorem15Class::order_2g, 2);
      for (Int p : p2g) ok_2g = ok_2g && newton_polygon(table, p % (n * ell)) == expect_2g;
      row["order_g_primes"] = pg;
      row["slopes_match"] = ok_g;
      row["order_2g_primes"] = p2g;
      row["supersingular_match"] = ok_2g;
      rows.push_back(row);
    }
  }
  return Json{{"schema", kSchemaVersion}, {"target", "thm15"}, {"rows", rows}};
}

Json reproduce_example52() {
  auto cert = large_denominator_certificate(419, 1);
  Json j = to_json(cert);
  j["schema"] = kSchemaVersion;
  j["target"] = "example52";
  return j;
}

Json reproduce_prop110() {
  auto single = inclusion_excl_density({5});
  auto full = inclusion_excl_density(kGermain49, /*enforce=*/false);
  Json violations = Json::array();
  for (const auto& [a, b] : full.violations) violations.push_back({a, b});
  return Json{{"schema", kSchemaVersion},
              {"target", "prop110"},
              {"single_prime_5", to_string(single.value)},
              {"set_size", static_cast<Int>(kGermain49.size())},
              {"value", to_string(full.value)},
              {"exceeds_0.9999", full.value > BigRat(9999, 10000)},
              {"incompatible_pairs", violations}};
}

Json reproduce_target(const std::string& target) {
  if (target == "prop32") return reproduce_prop32();
  if (target == "prop41") return reproduce_prop41();
  if (target == "lemma42") return reproduce_lemma42();
  if (target == "thm15") return reproduce_thm15();
  if (target == "example52") return reproduce_example52();
  if (target == "prop110") return reproduce_prop110();
  throw std::invalid_argument("unknown reproduce target: " + target);
}

bool json_diff(const Json& got, const Json& want, const std::string& path, std::string& report) {
  if (got == want) return true;
  if (got.type() != want.type() || !(got.is_object() || got.is_array())) {
    report = path + ": got " + got.dump() + ", expected " + want.dump();
    return false;
  }
  if (got.is_object()) {
    for (auto it = want.begin(); it != want.end(); ++it) {
      if (!got.contains(it.key())) {
        report = path + "." + it.key() + ": missing";
        return false;
      }
      if (!json_diff(got.at(it.key()), it.value(), path + "." + it.key(), report)) return false;
    }
    for (auto it = got.begin(); it != got.end(); ++it)
      if (!want.contains(it.key())) {
        report = path + "." + it.key() + ": unexpected";
        return false;
      }
    return true;
  }
  if (got.size() != want.size()) {
    report = path + ": length " + std::to_string(got.size()) + " vs " + std::to_string(want.size());
    return false;
  }
  for (std::size_t i = 0; i < got.size(); ++i)
    if (!json_diff(got.at(i), want.at(i), path + "[" + std::to_string(i) + "]", report)) return false;
  report = path + ": mismatch";
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton polygons, Ekedahl-Oort types, and prime densities of "
               "abelian covers of the line branched at three points"};
  app.require_subcommand(1);
  int workers = 0;
  app.add_option("--workers", workers, "worker threads (0 = hardware)");

  // enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "all covers of a genus, canonical order");
  Int enum_genus = 0;
  cmd_enum->add_option("--genus", enum_genus, "genus (>= 2)")->required();

  // invariants
  auto* cmd_inv = app.add_subcommand("invariants", "Newton polygon, EO type, and strata of one cover");
  std::string inv_group, inv_inertia;
  Int inv_residue = 0, inv_prime = 0;
  cmd_inv->add_option("--group", inv_group, "c or c,d")->required();
  cmd_inv->add_option("--inertia", inv_inertia, "x[,y];x[,y];x[,y]")->required();
  cmd_inv->add_option("--residue", inv_residue, "residue class mod the exponent");
  cmd_inv->add_option("--prime", inv_prime, "prime (reduced mod the exponent)");

  // density
  auto* cmd_den = app.add_subcommand("density", "natural density of primes with a property");
  std::string den_genus = "5", den_property = "ss", den_format = "json";
  unsigned long long den_cap = kDefaultDensityCap;
  cmd_den->add_option("--genus", den_genus, "genus or range g1-g2")->required();
  cmd_den->add_option("--property", den_property, "ss|ssp|nu|eu|2nu|2eu|ordinary")->required();
  cmd_den->add_option("--cap", den_cap, "max unit evaluations");
  cmd_den->add_option("--format", den_format, "json|csv");

  // construct
  auto* cmd_con = app.add_subcommand("construct", "the cover y^(n ell) = x (1-x)^((n-k) ell - 4)");
  Int con_ell = 0, con_n = 1, con_prime = 0;
  cmd_con->add_option("--ell", con_ell, "prime > 3")->required();
  cmd_con->add_option("--n", con_n, "n >= 1 coprime to ell");
  cmd_con->add_option("--prime", con_prime, "also report invariants at this prime");

  // predict
  auto* cmd_pre = app.add_subcommand("predict", "slope prediction from quadratic residues");
  Int pre_ell = 0;
  cmd_pre->add_option("--ell", pre_ell, "prime > 3")->required();

  // verify
  auto* cmd_ver = app.add_subcommand("verify", "exhaustive identity checks");
  bool ver_lemma42 = false, ver_conj13 = false;
  Int ver_ell_max = 101, ver_n_max = 12, ver_genus = 5;
  unsigned long long ver_budget = 10'000'000ULL;
  cmd_ver->add_flag("--lemma42", ver_lemma42, "sweep the quadratic-excess identity");
  cmd_ver->add_option("--ell-max", ver_ell_max, "largest prime in the sweep");
  cmd_ver->add_option("--n-max", ver_n_max, "largest n in the sweep");
  cmd_ver->add_flag("--conjecture13", ver_conj13, "scan classes for unlikely NP and EO covers");
  cmd_ver->add_option("--genus", ver_genus, "genus for --conjecture13");
  cmd_ver->add_option("--budget", ver_budget, "class budget for --conjecture13");

  // certify-denominator
  auto* cmd_cert = app.add_subcommand("certify-denominator", "unlikely two-slope polygon certificate");
  Int cert_g = 0, cert_n = 1;
  cmd_cert->add_option("--g", cert_g, "Sophie Germain prime > 363")->required();
  cmd_cert->add_option("--n", cert_n, "n >= 1 coprime to 2g+1");

  // ie-density
  auto* cmd_ie = app.add_subcommand("ie-density", "inclusion-exclusion density over Sophie Germain primes");
  std::string ie_primes;
  bool ie_allow = false;
  cmd_ie->add_option("--primes", ie_primes, "comma-separated list, or 'germain49'")->required();
  cmd_ie->add_flag("--allow-incompatible", ie_allow, "evaluate even if the pairwise conditions fail");

  // find-ss-genus
  auto* cmd_find = app.add_subcommand("find-ss-genus", "least ell giving a supersingular cover at p");
  Int find_p = 0, find_bound = 100000;
  cmd_find->add_option("--prime", find_p, "odd prime")->required();
  cmd_find->add_option("--bound", find_bound, "search bound for ell");

  // oracle
  auto* cmd_ora = app.add_subcommand("oracle", "brute-force point counts vs Shimura-Taniyama");
  Int ora_m = 0, ora_a0 = 1, ora_a1 = 1, ora_p = 0;
  int ora_maxi = 0;
  std::uint64_t ora_seed = kDefaultOracleSeed;
  cmd_ora->add_option("--m", ora_m, "degree of the cyclic cover")->required();
  cmd_ora->add_option("--a0", ora_a0, "exponent of x")->required();
  cmd_ora->add_option("--a1", ora_a1, "exponent of 1-x")->required();
  cmd_ora->add_option("--prime", ora_p, "prime not dividing m")->required();
  cmd_ora->add_option("--max-i", ora_maxi, "re-count and cross-check out to this field degree");
  cmd_ora->add_option("--seed", ora_seed, "seed for the irreducible-polynomial search");

  // reproduce
  auto* cmd_rep = app.add_subcommand("reproduce", "recompute a worked result and diff against a golden file");
  std::string rep_target, rep_dir = "goldens";
  bool rep_update = false;
  cmd_rep->add_option("target", rep_target, "prop32|prop41|lemma42|thm15|example52|prop110")->required();
  cmd_rep->add_option("--golden-dir", rep_dir, "directory of committed golden files");
  cmd_rep->add_flag("--update", rep_update, "rewrite the golden file instead of diffing");

  // lets global flags like --workers follow the subcommand
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*cmd_enum) {
      for (const auto& c : enumerate_covers(enum_genus, workers))
        std::cout << to_json(c).dump() << "\n";
    } else if (*cmd_inv) {
      Cover cover = parse_cover(inv_group, inv_inertia);
      Int r = residue_for(cover, inv_residue, inv_prime);
      Json j = invariants_json(cover, r);
      j["schema"] = kSchemaVersion;
      std::cout << j.dump(2) << "\n";
    } else if (*cmd_den) {
      auto [g1, g2] = parse_genus_range(den_genus);
      CoverProperty prop = property_from_name(den_property);
      if (den_format == "csv") std::cout << "genus,property,value,mode,modulus\n";
      for (Int g = g1; g <= g2; ++g) {
        DensityResult res = genus_density(g, prop, den_cap, workers);
        if (den_format == "csv") {
          std::cout << g << "," << den_property << "," << to_string(res.value) << ","
                    << (res.mode == DensityMode::exact ? "exact" : "lower_bound") << ","
                    << to_string(res.effective_modulus) << "\n";
        } else {
          Json j = to_json(res);
          j["schema"] = kSchemaVersion;
          j["genus"] = g;
          j["property"] = den_property;
          j["cap"] = den_cap;
          std::cout << j.dump(2) << "\n";
        }
      }
    } else if (*cmd_con) {
      auto params = make_construction(con_ell, con_n);
      Cover cover = construct_cover(params);
      Json j;
      j["schema"] = kSchemaVersion;
      j["k"] = params.k;
      j["cover"] = to_json(cover);
      if (con_prime > 0) j["invariants"] = invariants_json(cover, residue_for(cover, 0, con_prime));
      std::cout << j.dump(2) << "\n";
    } else if (*cmd_pre) {
      auto pred = predicted_slopes(pre_ell);
      Json j{{"schema", kSchemaVersion},
             {"ell", pre_ell},
             {"alpha", pred.alpha},
             {"g", pred.g},
             {"slopes", {{pred.alpha, pred.g}, {pred.g - pred.alpha, pred.g}}}};
      std::cout << j.dump(2) << "\n";
    } else if (*cmd_ver) {
      if (ver_lemma42 == ver_conj13)
        throw std::invalid_argument("verify: pass exactly one of --lemma42, --conjecture13");
      if (ver_lemma42) {
        Int cases = 0, failures = 0;
        for (Int ell = 5; ell <= ver_ell_max; ++ell) {
          if (!is_prime(ell)) continue;
          for (Int n = 1; n <= ver_n_max; ++n) {
            if (std::gcd(n, ell) != 1) continue;
            for (Int r = 1; r <= n; ++r) {
              ++cases;
              if (!verify_lemma42(ell, n, r)) ++failures;
            }
          }
        }
        Json j{{"schema", kSchemaVersion}, {"ell_max", ver_ell_max}, {"n_max", ver_n_max},
               {"cases", cases},           {"failures", failures},   {"all_hold", failures == 0}};
        std::cout << j.dump(2) << "\n";
        return failures == 0 ? 0 : 1;
      }
      auto report = conjecture13_check(ver_genus, ver_budget, workers);
      Json j = to_json(report);
      j["schema"] = kSchemaVersion;
      std::cout << j.dump(2) << "\n";
    } else if (*cmd_cert) {
      Json j = to_json(large_denominator_certificate(cert_g, cert_n));
      j["schema"] = kSchemaVersion;
      std::cout << j.dump(2) << "\n";
    } else if (*cmd_ie) {
      std::vector<Int> primes =
          ie_primes == "germain49" ? kGermain49 : parse_int_list(ie_primes, ',');
      auto res = inclusion_excl_density(primes, !ie_allow);
      Json violations = Json::array();
      for (const auto& [a, b] : res.violations) violations.push_back({a, b});
      Json j{{"schema", kSchemaVersion},
             {"primes", primes},
             {"value", to_string(res.value)},
             {"incompatible_pairs", violations}};
      std::cout << j.dump(2) << "\n";
    } else if (*cmd_find) {
      auto res = supersingular_genus_for_prime(find_p, find_bound);
      Json j{{"schema", kSchemaVersion}, {"prime", find_p},   {"bound", find_bound},
             {"found", res.found},       {"ell", res.ell},    {"genus", res.genus},
             {"near_misses", res.near_misses}};
      std::cout << j.dump(2) << "\n";
      return res.found ? 0 : 1;
    } else if (*cmd_ora) {
      auto report = run_oracle(ora_m, ora_a0, ora_a1, ora_p, ora_maxi, ora_seed);
      Json j = to_json(report);
      j["schema"] = kSchemaVersion;
      std::cout << j.dump(2) << "\n";
      return report.match ? 0 : 2;
    } else if (*cmd_rep) {
      Json computed = reproduce_target(rep_target);
      std::string path = rep_dir + "/" + rep_target + ".json";
      if (rep_update) {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << computed.dump(2) << "\n";
        std::cout << "wrote " << path << "\n";
        return 0;
      }
      std::ifstream in(path);
      if (!in) throw std::runtime_error("missing golden file " + path);
      Json golden = Json::parse(in);
      std::string diff;
      if (!json_diff(computed, golden, "$", diff)) {
        std::cerr << "reproduce " << rep_target << ": MISMATCH at " << diff << "\n";
        return 2;
      }
      std::cout << "reproduce " << rep_target << ": pass\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

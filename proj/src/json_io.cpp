#include "tricover/json_io.hpp"

#include <sstream>

namespace tricover {

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const BigRat& v) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(v) << "/" << boost::multiprecision::denominator(v);
  return os.str();
}

Json to_json(const Cover& cover) {
  Json j;
  j["group"] = {cover.group.c, cover.group.d};
  j["ram"] = {cover.ram.c0, cover.ram.c1, cover.ram.cinf, cover.ram.s};
  j["inertia"] = {{cover.inertia.a0.x, cover.inertia.a0.y},
                  {cover.inertia.a1.x, cover.inertia.a1.y},
                  {cover.inertia.ainf.x, cover.inertia.ainf.y}};
  j["genus"] = cover.genus;
  return j;
}

Cover cover_from_json(const Json& j) {
  AbelianGroup g = make_group(j.at("group").at(0).get<Int>(), j.at("group").at(1).get<Int>());
  const auto& in = j.at("inertia");
  auto elem = [&](int i) {
    return reduce(g, in.at(i).at(0).get<Int>(), in.at(i).at(1).get<Int>());
  };
  Cover cover = cover_from_inertia(g, elem(0), elem(1), elem(2));
  if (j.contains("ram")) {
    RamificationType ram{j.at("ram").at(0).get<Int>(), j.at("ram").at(1).get<Int>(),
                         j.at("ram").at(2).get<Int>(), j.at("ram").at(3).get<Int>()};
    if (ram != cover.ram) throw std::invalid_argument("cover_from_json: ramification mismatch");
  }
  if (j.contains("genus") && j.at("genus").get<Int>() != cover.genus)
    throw std::invalid_argument("cover_from_json: genus mismatch");
  return cover;
}

Json to_json(const NewtonPolygon& np) {
  Json slopes = Json::array();
  for (const auto& s : np.slopes) slopes.push_back({s[0], s[1], s[2]});
  return Json{{"genus", np.genus()}, {"slopes", slopes}};
}

Json to_json(const FinalType& ft) { return Json{{"final_type", ft.nu}}; }

Json to_json(const StratumReport& r) {
  return Json{{"genus", r.genus},     {"stratum_dim", r.stratum_dim},
              {"ambient_dim", r.ambient_dim}, {"codim", r.codim},
              {"mg_dim", r.mg_dim},   {"unlikely", r.unlikely},
              {"two_unlikely", r.two_unlikely}};
}

Json to_json(const CongruenceSet& set) {
  return Json{{"modulus", set.modulus}, {"residues", set.residues}};
}

Json to_json(const DensityResult& result) {
  return Json{{"value", to_string(result.value)},
              {"mode", result.mode == DensityMode::exact ? "exact" : "lower_bound"},
              {"modulus", to_string(result.effective_modulus)},
              {"covers_used", result.covers_used},
              {"evaluations", result.evaluations}};
}

Json to_json(const DenominatorCertificate& cert) {
  return Json{{"g", cert.g},
              {"n", cert.n},
              {"ell", cert.ell},
              {"alpha", cert.alpha},
              {"polygon", to_json(cert.polygon)},
              {"report", to_json(cert.report)},
              {"threshold_floor", cert.threshold},
              {"xi1_codim", cert.xi1_codim}};
}

Json to_json(const OracleReport& report) {
  Json coeffs = Json::array();
  for (const auto& c : report.lpoly.coeffs) coeffs.push_back(to_string(c));
  return Json{{"m", report.m},
              {"a0", report.a0},
              {"a1", report.a1},
              {"prime", report.p},
              {"genus", report.genus},
              {"seed", report.seed},
              {"counts", report.counts.counts},
              {"derived_counts", report.derived_counts},
              {"l_coefficients", coeffs},
              {"np_counted", to_json(report.np_counted)},
              {"np_shimura_taniyama", to_json(report.np_shimura_taniyama)},
              {"match", report.match}};
}

Json to_json(const Conjecture13Report& report) {
  Json sample = Json::array();
  for (const auto& v : report.sample) sample.push_back(to_string(v));
  return Json{{"genus", report.genus},
              {"modulus", to_string(report.modulus)},
              {"unit_classes", to_string(report.unit_classes)},
              {"partial", report.partial},
              {"classes_decided", report.classes_decided},
              {"violating", report.violating},
              {"sample", sample}};
}

Json signature_json(const SignatureTable& table) {
  Json relevant = Json::array();
  Json fvals = Json::array();
  for (int i = 0; i < table.size(); ++i) {
    const auto& tau = table.relevant()[static_cast<std::size_t>(i)];
    relevant.push_back({tau.x, tau.y});
    fvals.push_back(table.f(i));
  }
  return Json{{"relevant", relevant}, {"f", fvals}};
}

Json invariants_json(const Cover& cover, Int r) {
  SignatureTable table(cover);
  NewtonPolygon np = newton_polygon(table, r);
  auto maps = dieudonne_maps(table, r);
  FinalType ft = final_type(maps);
  Json j;
  j["cover"] = to_json(cover);
  j["residue"] = r;
  j["signature"] = signature_json(table);
  j["newton"] = to_json(np);
  j["supersingular"] = is_supersingular(np);
  j["ordinary"] = is_ordinary(np);
  j["eo"] = Json{{"final_type", ft.nu}, {"words", eo_words(maps)}};
  j["superspecial"] = is_superspecial(ft);
  j["np_stratum"] = to_json(classify(np, cover.genus));
  j["eo_stratum"] = to_json(classify(ft, cover.genus));
  return j;
}

}  // namespace tricover

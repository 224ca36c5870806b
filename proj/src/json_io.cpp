#include "cubealg/json_io.hpp"

namespace cubealg {

using nlohmann::json;

json monomial_to_json(const Monomial& m) {
  json out = json::array();
  const auto factors = m.factors();
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    out.push_back({{"subset", it->first.elements()}, {"exp", it->second}});
  }
  return out;
}

Monomial monomial_from_json(const json& j, int n) {
  if (!j.is_array()) throw ParseError("monomial JSON must be an array of factors");
  Monomial m(n);
  for (const json& factor : j) {
    const std::vector<int> elements = factor.at("subset").get<std::vector<int>>();
    m *= Monomial::variable(SubsetId::of(n, elements), factor.at("exp").get<int>());
  }
  return m;
}

json polynomial_to_json(const Polynomial& f) {
  json out = json::array();
  for (const Term& t : f.terms()) {
    out.push_back({{"coeff", to_string(t.coeff)}, {"mono", monomial_to_json(t.mono)}});
  }
  return out;
}

Polynomial polynomial_from_json(const json& j, int n) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array of terms");
  std::vector<Term> terms;
  for (const json& term : j) {
    terms.push_back({monomial_from_json(term.at("mono"), n),
                     rational_from_string(term.at("coeff").get<std::string>())});
  }
  return Polynomial::from_terms(n, std::move(terms));
}

namespace {

GeneratorLabel label_from_string(const std::string& s) {
  if (s == "toric") return GeneratorLabel::toric;
  if (s == "invariant") return GeneratorLabel::invariant;
  if (s == "combined") return GeneratorLabel::combined;
  if (s == "predicted-lt") return GeneratorLabel::predicted_lt;
  throw ParseError("unknown generator label: " + s);
}

}  // namespace

json generator_set_to_json(const GeneratorSet& gens) {
  json list = json::array();
  for (const Polynomial& g : gens.gens) list.push_back(polynomial_to_json(g));
  return {{"params", {{"r", gens.r}, {"n", gens.n}}},
          {"label", to_string(gens.label)},
          {"generators", list}};
}

GeneratorSet generator_set_from_json(const json& j) {
  GeneratorSet out;
  out.r = j.at("params").at("r").get<int>();
  out.n = j.at("params").at("n").get<int>();
  out.label = label_from_string(j.at("label").get<std::string>());
  for (const json& g : j.at("generators")) {
    out.gens.push_back(polynomial_from_json(g, out.n));
  }
  return out;
}

json predicted_lt_to_json(int r, int n, const std::vector<TaggedMonomial>& gens) {
  json list = json::array();
  for (const TaggedMonomial& g : gens) {
    list.push_back({{"family", g.family}, {"mono", monomial_to_json(g.mono)}});
  }
  return {{"params", {{"r", r}, {"n", n}}}, {"label", "predicted-lt"}, {"generators", list}};
}

json groebner_to_json(const GroebnerBasis& gb) {
  json list = json::array();
  for (const Polynomial& g : gb.basis) list.push_back(polynomial_to_json(g));
  return {{"params", {{"r", gb.r}, {"n", gb.n}}},
          {"basis", list},
          {"stats",
           {{"pairs_considered", gb.stats.pairs_considered},
            {"criterion1_skips", gb.stats.criterion1_skips},
            {"criterion2_skips", gb.stats.criterion2_skips},
            {"reductions_to_zero", gb.stats.reductions_to_zero}}}};
}

GroebnerBasis groebner_from_json(const json& j) {
  GroebnerBasis gb;
  gb.r = j.at("params").at("r").get<int>();
  gb.n = j.at("params").at("n").get<int>();
  for (const json& g : j.at("basis")) gb.basis.push_back(polynomial_from_json(g, gb.n));
  const json& stats = j.at("stats");
  gb.stats.pairs_considered = stats.at("pairs_considered").get<std::uint64_t>();
  gb.stats.criterion1_skips = stats.at("criterion1_skips").get<std::uint64_t>();
  gb.stats.criterion2_skips = stats.at("criterion2_skips").get<std::uint64_t>();
  gb.stats.reductions_to_zero = stats.at("reductions_to_zero").get<std::uint64_t>();
  return gb;
}

json report_to_json(const IdentityReport& report) {
  json mismatches = json::array();
  for (const Mismatch& m : report.mismatches) {
    mismatches.push_back(
        {{"t", m.t}, {"q", m.q}, {"lhs", to_string(m.lhs)}, {"rhs", to_string(m.rhs)}});
  }
  return {{"identity", report.kind == IdentityKind::carlitz ? "carlitz" : "bagno"},
          {"params", {{"r", report.r}, {"n", report.n}}},
          {"K", report.trunc},
          {"holds", report.holds},
          {"mismatches", mismatches}};
}

IdentityReport report_from_json(const json& j) {
  IdentityReport report;
  const std::string kind = j.at("identity").get<std::string>();
  if (kind == "carlitz") {
    report.kind = IdentityKind::carlitz;
  } else if (kind == "bagno") {
    report.kind = IdentityKind::bagno;
  } else {
    throw ParseError("unknown identity kind: " + kind);
  }
  report.r = j.at("params").at("r").get<int>();
  report.n = j.at("params").at("n").get<int>();
  report.trunc = j.at("K").get<int>();
  report.holds = j.at("holds").get<bool>();
  for (const json& m : j.at("mismatches")) {
    report.mismatches.push_back({m.at("t").get<int>(), m.at("q").get<int>(),
                                 rational_from_string(m.at("lhs").get<std::string>()),
                                 rational_from_string(m.at("rhs").get<std::string>())});
  }
  return report;
}

}  // namespace cubealg

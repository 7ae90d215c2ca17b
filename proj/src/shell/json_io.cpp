#include "bmw/json_io.hpp"

#include "bmw/errors.hpp"

namespace bmw {

namespace {

std::string form_name(CaseForm f) {
  switch (f) {
    case CaseForm::Member: return "member";
    case CaseForm::SixN: return "6n";
    case CaseForm::TwelveNMinusOne: return "12n-1";
    case CaseForm::ThirtyN: return "30n";
    case CaseForm::SixtyNMinusOne: return "60n-1";
    case CaseForm::Factorial: return "factorial";
  }
  return "?";
}

template <class E, class F>
E enum_from(const std::string& text, std::initializer_list<E> values, F name) {
  for (E v : values)
    if (name(v) == text) return v;
  throw ParseError("unknown value '" + text + "' in report");
}

BigInt big(const Json& j) { return parse_bigint(j.get<std::string>()); }

Json opt_big(const std::optional<BigInt>& v) { return v ? Json(to_string(*v)) : Json(nullptr); }

}  // namespace

Json to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(p.to_cycle_string());
  return {{"degree", g.degree()}, {"generators", gens}, {"order", to_string(g.order())}};
}

PermGroup perm_group_from_json(const Json& j) {
  const std::size_t degree = j.at("degree").get<std::size_t>();
  std::vector<Permutation> gens;
  for (const auto& s : j.at("generators")) gens.push_back(parse_permutation(s.get<std::string>(), degree));
  return PermGroup(degree, gens);
}

Json to_json(const LocalActionClass& c) {
  return {{"degree", to_string(c.degree)}, {"order", opt_big(c.order)}, {"label", to_string(c.label)}, {"socle", c.socle}};
}

LocalActionClass local_action_class_from_json(const Json& j) {
  LocalActionClass c;
  c.degree = big(j.at("degree"));
  if (!j.at("order").is_null()) c.order = big(j.at("order"));
  const auto label = label_from_string(j.at("label").get<std::string>());
  if (!label) throw ParseError("unknown label in report");
  c.label = *label;
  c.socle = j.at("socle").get<std::string>();
  return c;
}

Json to_json(const CaseMatch& m) {
  return {{"case", m.case_id()},     {"case_number", m.case_number}, {"d1", to_string(m.d1)},
          {"d2", to_string(m.d2)},   {"form", form_name(m.form)},     {"n", to_string(m.n)},
          {"expression", m.expression}, {"witness", m.witness}};
}

CaseMatch case_match_from_json(const Json& j) {
  CaseMatch m;
  m.case_number = j.at("case_number").get<int>();
  m.d1 = big(j.at("d1"));
  m.d2 = big(j.at("d2"));
  m.form = enum_from(j.at("form").get<std::string>(),
                     {CaseForm::Member, CaseForm::SixN, CaseForm::TwelveNMinusOne, CaseForm::ThirtyN,
                      CaseForm::SixtyNMinusOne, CaseForm::Factorial},
                     form_name);
  m.n = big(j.at("n"));
  m.expression = j.at("expression").get<std::string>();
  m.witness = j.at("witness").get<std::string>();
  return m;
}

Json to_json(const Verdict& v) {
  Json cases = Json::array();
  for (const auto& m : v.matched_cases) cases.push_back(to_json(m));
  return {{"status", to_string(v.status)}, {"by", to_string(v.by)}, {"matched_cases", cases}, {"reason", v.reason}};
}

Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.status = enum_from(j.at("status").get<std::string>(),
                       {VerdictStatus::Irreducible, VerdictStatus::ExceptionalCase, VerdictStatus::HypothesesNotMet,
                        VerdictStatus::NotApplicable},
                       [](VerdictStatus s) { return to_string(s); });
  v.by = enum_from(j.at("by").get<std::string>(), {VerdictBasis::Theorem12, VerdictBasis::Theorem11},
                   [](VerdictBasis b) { return to_string(b); });
  for (const auto& m : j.at("matched_cases")) v.matched_cases.push_back(case_match_from_json(m));
  v.reason = j.at("reason").get<std::string>();
  return v;
}

Json to_json(const DatumReport& r) {
  return {{"d1", r.d1},
          {"d2", r.d2},
          {"f1", to_json(r.f1)},
          {"f2", to_json(r.f2)},
          {"class1", to_json(r.class1)},
          {"class2", to_json(r.class2)},
          {"theorem12", to_json(r.theorem12)},
          {"theorem11", r.theorem11 ? Json(to_string(*r.theorem11)) : Json(nullptr)},
          {"hji", to_string(r.hji)}};
}

DatumReport datum_report_from_json(const Json& j) {
  DatumReport r;
  r.d1 = j.at("d1").get<std::size_t>();
  r.d2 = j.at("d2").get<std::size_t>();
  r.f1 = perm_group_from_json(j.at("f1"));
  r.f2 = perm_group_from_json(j.at("f2"));
  r.class1 = local_action_class_from_json(j.at("class1"));
  r.class2 = local_action_class_from_json(j.at("class2"));
  r.theorem12 = verdict_from_json(j.at("theorem12"));
  if (!j.at("theorem11").is_null()) {
    r.theorem11 = enum_from(j.at("theorem11").get<std::string>(), {BoundVerdict::Irreducible, BoundVerdict::Inconclusive},
                            [](BoundVerdict b) { return to_string(b); });
  }
  r.hji = enum_from(j.at("hji").get<std::string>(), {HjiStatus::HereditarilyJustInfinite, HjiStatus::Unknown},
                    [](HjiStatus s) { return to_string(s); });
  return r;
}

namespace {

Json perm12(const Perm12& p) { return Json(std::vector<int>(p.begin(), p.end())); }

}  // namespace

Json to_json(const SearchReport& r) {
  Json survivors = Json::array();
  for (const auto& s : r.survivors) survivors.push_back(perm12(s));
  Json parts = Json::array();
  for (const auto& p : r.per_partition) parts.push_back(p);
  return {{"total_candidates", r.total_candidates},
          {"c1", r.c1},
          {"c2", r.c2},
          {"c1_c2", r.c1_c2},
          {"c1_c2_c3", r.c1_c2_c3},
          {"per_partition", parts},
          {"survivors", survivors},
          {"wall_seconds", r.wall_seconds}};
}

SearchReport search_report_from_json(const Json& j) {
  SearchReport r;
  r.total_candidates = j.at("total_candidates").get<std::uint64_t>();
  r.c1 = j.at("c1").get<std::uint64_t>();
  r.c2 = j.at("c2").get<std::uint64_t>();
  r.c1_c2 = j.at("c1_c2").get<std::uint64_t>();
  r.c1_c2_c3 = j.at("c1_c2_c3").get<std::uint64_t>();
  for (const auto& p : j.at("per_partition")) r.per_partition.push_back(p.get<std::array<std::uint64_t, 5>>());
  for (const auto& s : j.at("survivors")) {
    const auto v = s.get<std::vector<int>>();
    if (v.size() != 12) throw ParseError("survivor must have 12 images");
    Perm12 p;
    for (std::size_t i = 0; i < 12; ++i) p[i] = static_cast<std::uint8_t>(v[i]);
    r.survivors.push_back(p);
  }
  r.wall_seconds = j.at("wall_seconds").get<double>();
  return r;
}

Json to_json(const ThompsonReport& r) {
  Json ce = r.counterexample ? Json({r.counterexample->first, r.counterexample->second}) : Json(nullptr);
  return {{"factors", r.factors},
          {"diagonals", r.diagonals},
          {"census", r.census()},
          {"pairs_tested", r.pairs_tested},
          {"trivial_intersection_pairs", r.trivial_intersection_pairs},
          {"fixed_point_mismatches", r.fixed_point_mismatches},
          {"counterexample", ce}};
}

Json to_json(const HypothesisReport& r) {
  Json hyp = Json::object();
  for (int i = 1; i <= 6; ++i) {
    hyp["hyp" + std::to_string(i)] = {{"holds", r.hyp[i].holds}, {"witness", r.hyp[i].witness}};
  }
  return {{"hypotheses", hyp},
          {"local_actions_admissible", r.local_actions_admissible},
          {"member_of_E", r.member_of_E},
          {"member_of_F", r.member_of_F},
          {"local1", to_json(r.local1)},
          {"local2", to_json(r.local2)}};
}

Json to_json(const std::vector<OrbitInfo>& orbits) {
  Json out = Json::array();
  for (const auto& o : orbits) {
    out.push_back({{"size", o.size},
                   {"stabilizer_order", to_string(o.stabilizer_order)},
                   {"representative", {o.representative.first, o.representative.second}}});
  }
  return out;
}

Json to_json(const BasicLemmaReport& r) {
  Json parts = Json::object();
  for (int i = 1; i <= 4; ++i) {
    parts[std::to_string(i)] = {
        {"applicable", r.part[i].applicable}, {"passed", r.part[i].passed}, {"witness", r.part[i].witness}};
  }
  return {{"x1", r.x1}, {"x2", r.x2}, {"parts", parts}, {"all_passed", r.all_passed()}};
}

bool same_presentation(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.generators() == b.generators();
}

bool same_report(const DatumReport& a, const DatumReport& b) {
  return a.d1 == b.d1 && a.d2 == b.d2 && same_presentation(a.f1, b.f1) && same_presentation(a.f2, b.f2) &&
         a.class1 == b.class1 && a.class2 == b.class2 && a.theorem12 == b.theorem12 && a.theorem11 == b.theorem11 &&
         a.hji == b.hji;
}

}  // namespace bmw

#pragma once

#include "json.hpp"

#include "bmw/desk_search.hpp"
#include "bmw/product_check.hpp"
#include "bmw/vh_datum.hpp"

namespace bmw {

using Json = nlohmann::json;

// Big integers are written as decimal strings, groups as a degree and a list
// of generators in cycle notation.
Json to_json(const PermGroup& g);
Json to_json(const LocalActionClass& c);
Json to_json(const CaseMatch& m);
Json to_json(const Verdict& v);
Json to_json(const DatumReport& r);
Json to_json(const SearchReport& r);
Json to_json(const ThompsonReport& r);
Json to_json(const HypothesisReport& r);
Json to_json(const std::vector<OrbitInfo>& orbits);
Json to_json(const BasicLemmaReport& r);

PermGroup perm_group_from_json(const Json& j);
LocalActionClass local_action_class_from_json(const Json& j);
CaseMatch case_match_from_json(const Json& j);
Verdict verdict_from_json(const Json& j);
DatumReport datum_report_from_json(const Json& j);
SearchReport search_report_from_json(const Json& j);

// Same degree and the same generator lists.
bool same_presentation(const PermGroup& a, const PermGroup& b);
bool same_report(const DatumReport& a, const DatumReport& b);

}  // namespace bmw

#include "bmw/shell.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "bmw/acceptance.hpp"
#include "bmw/class_tables.hpp"
#include "bmw/errors.hpp"
#include "bmw/instances.hpp"
#include "bmw/json_io.hpp"

namespace bmw {

namespace {

std::size_t positive_env(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  std::size_t pos = 0;
  unsigned long long x = 0;
  try {
    x = std::stoull(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != std::string(v).size() || x == 0) throw ParseError(std::string(name) + " must be a positive integer");
  return static_cast<std::size_t>(x);
}

void print_class(std::ostream& out, const char* name, const PermGroup* g, const LocalActionClass& c) {
  out << name << ": degree " << to_string(c.degree) << ", ";
  if (c.order) {
    const std::string digits = to_string(*c.order);
    if (digits.size() <= 40) {
      out << "order " << digits << ", ";
    } else {
      out << "order of " << digits.size() << " digits, ";
    }
  }
  out << to_string(c.label);
  if (!c.socle.empty()) out << ", socle " << c.socle;
  if (g) {
    out << ", generated by ";
    if (g->generators().empty()) out << "()";
    for (std::size_t i = 0; i < g->generators().size(); ++i) out << (i ? "," : "") << g->generators()[i].to_cycle_string();
  }
  out << '\n';
}

void print_verdict(std::ostream& out, const Verdict& v) {
  out << to_string(v.by) << ": " << to_string(v.status);
  for (const auto& m : v.matched_cases) out << " (" << m.case_id() << ")";
  out << '\n';
  for (const auto& m : v.matched_cases) out << "  case " << m.case_id() << ": " << m.witness << '\n';
  if (!v.reason.empty()) out << "  " << v.reason << '\n';
}

void print_report(std::ostream& out, const DatumReport& r) {
  out << "degrees: (" << r.d1 << ", " << r.d2 << ")\n";
  print_class(out, "F1", &r.f1, r.class1);
  print_class(out, "F2", &r.f2, r.class2);
  print_verdict(out, r.theorem12);
  out << "Theorem11: " << (r.theorem11 ? to_string(*r.theorem11) : std::string("not applicable")) << '\n';
  out << "HJI: " << to_string(r.hji) << '\n';
}

LocalActionClass class_from_argument(const std::string& degree_text, const std::string& text) {
  const BigInt d = parse_bigint(degree_text);
  if (text.find('(') == std::string::npos) return class_from_label(d, text);
  if (d > kMaxDegree) throw GroupTooLarge("degree " + degree_text + " is too large for explicit generators");
  const auto n = static_cast<std::size_t>(d);
  return classify(PermGroup(n, parse_permutation_list(text, n)));
}

void print_hypotheses(std::ostream& out, const HypothesisReport& h) {
  for (int i = 1; i <= 6; ++i) {
    out << "Hyp" << i << ": " << (h.hyp[i].holds ? "holds" : "fails");
    if (!h.hyp[i].witness.empty()) out << " (" << h.hyp[i].witness << ")";
    out << '\n';
  }
  print_class(out, "local action 1", nullptr, h.local1);
  print_class(out, "local action 2", nullptr, h.local2);
  out << "member of E: " << (h.member_of_E ? "yes" : "no") << ", member of F: " << (h.member_of_F ? "yes" : "no")
      << '\n';
}

void print_orbits(std::ostream& out, const std::string& name, const std::vector<OrbitInfo>& orbits) {
  out << name << ": " << orbits.size() << (orbits.size() == 1 ? " orbit" : " orbits") << '\n';
  for (const auto& o : orbits) {
    out << "  size " << o.size << ", stabilizer order " << to_string(o.stabilizer_order) << ", representative ("
        << o.representative.first << ", " << o.representative.second << ")\n";
  }
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const auto d = read_datum_file(cfg.inputs.at(0));
  const auto r = analyze(d);
  if (cfg.format == OutputFormat::Json) {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << "datum: " << cfg.inputs[0] << '\n';
    print_report(out, r);
  }
  return kExitOk;
}

int cmd_verdict(const RunConfig& cfg, std::ostream& out) {
  const auto c1 = class_from_argument(cfg.inputs.at(0), cfg.inputs.at(2));
  const auto c2 = class_from_argument(cfg.inputs.at(1), cfg.inputs.at(3));
  const auto v = theorem12_verdict(c1, c2);
  std::optional<BoundVerdict> bound;
  if (c1.degree >= 3 && c2.degree >= 3 && is_two_transitive(c1.label) && is_two_transitive(c2.label)) {
    bound = theorem11_verdict(c1.degree, c2.degree);
  }
  const auto hji = hji_verdict(c1, c2, v.status == VerdictStatus::Irreducible);
  if (cfg.format == OutputFormat::Json) {
    Json j = {{"f1", to_json(c1)}, {"f2", to_json(c2)}, {"theorem12", to_json(v)},
              {"theorem11", bound ? Json(to_string(*bound)) : Json(nullptr)}, {"hji", to_string(hji)}};
    out << j.dump(2) << '\n';
  } else {
    print_class(out, "F1", nullptr, c1);
    print_class(out, "F2", nullptr, c2);
    print_verdict(out, v);
    out << "Theorem11: " << (bound ? to_string(*bound) : std::string("not applicable")) << '\n';
    out << "HJI: " << to_string(hji) << '\n';
  }
  return kExitOk;
}

int cmd_tables(const RunConfig& cfg, std::ostream& out) {
  verify_tables();
  if (cfg.format == OutputFormat::Text) {
    out << render_tables_text();
    return kExitOk;
  }
  Json j;
  for (const auto& r : two_transitive_table()) {
    j["two_transitive"].push_back(
        {{"degree", r.degree}, {"group", r.name}, {"label", r.label}, {"order", r.order}, {"socle", r.socle}});
  }
  for (const auto& r : galois_exceptions()) j["galois"].push_back({{"q", r.q}, {"m", r.m}});
  for (const auto& r : simple_235()) j["simple235"].push_back({{"group", r.name}, {"order", r.order}});
  for (const auto& r : lps_exceptions()) {
    j["lps"].push_back({{"row", r.number}, {"n", r.n}, {"order", r.order}, {"m_cap_n", r.m_cap_n}});
  }
  j["checksum"] = tables_checksum();
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_search(const RunConfig& cfg, std::ostream& out, const std::string& method) {
  SearchOptions o;
  o.threads = cfg.threads;
  o.method = method == "cosets" ? SearchMethod::CosetCount : SearchMethod::ConjugateIntersection;
  const auto r = gap_replication_11_4(o);
  if (cfg.format == OutputFormat::Json) {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << "candidates: " << r.total_candidates << '\n'
        << "condition 1: " << r.c1 << '\n'
        << "condition 2: " << r.c2 << '\n'
        << "conditions 1 and 2: " << r.c1_c2 << '\n'
        << "all three: " << r.c1_c2_c3 << '\n';
    for (const auto& s : r.survivors) {
      out << "survivor:";
      for (auto x : s) out << ' ' << int(x);
      out << '\n';
    }
    out << "threads: " << cfg.threads << ", wall time " << r.wall_seconds << "s\n";
  }
  return r.survivors.empty() ? kExitOk : kExitVerificationFailed;
}

int cmd_verify_instance(const RunConfig& cfg, std::ostream& out) {
  const auto bundle = read_instance_bundle(cfg.inputs.at(0));
  const auto& inst = bundle.instance;
  const auto h = bundle.expect1 && bundle.expect2 ? check_hypotheses(inst, *bundle.expect1, *bundle.expect2, cfg.limits)
                                                  : check_structural_hypotheses(inst, cfg.limits);
  const auto orbits = product_orbit_report(inst, cfg.limits);
  std::optional<BasicLemmaReport> lemma;
  if (check_structural_hypotheses(inst, cfg.limits).member_of_E) lemma = basic_lemma_check(inst, 0, 0, cfg.limits);
  if (cfg.format == OutputFormat::Json) {
    Json j = {{"instance", inst.name()}, {"hypotheses", to_json(h)}, {"orbits", to_json(orbits)}};
    j["basic_lemma"] = lemma ? to_json(*lemma) : Json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "instance: " << (inst.name().empty() ? cfg.inputs[0] : inst.name()) << ", |G| = "
        << to_string(inst.group().order()) << '\n';
    print_hypotheses(out, h);
    print_orbits(out, "orbits on VX1 x VX2", orbits);
    if (lemma) {
      for (int i = 1; i <= 4; ++i) {
        out << "basic lemma (" << i << "): "
            << (!lemma->part[i].applicable ? "not applicable" : lemma->part[i].passed ? "passed" : "FAILED");
        if (!lemma->part[i].witness.empty()) out << " (" << lemma->part[i].witness << ")";
        out << '\n';
      }
    }
  }
  return !lemma || lemma->all_passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, const std::string& what, bool full, unsigned d) {
  const bool json = cfg.format == OutputFormat::Json;
  auto emit = [&](const std::vector<CriterionResult>& results) {
    bool ok = true;
    Json j = Json::array();
    for (const auto& r : results) {
      ok = ok && r.passed;
      if (json) {
        j.push_back({{"criterion", r.number}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail},
                     {"seconds", r.seconds}});
      } else {
        out << format_result(r) << '\n';
      }
    }
    if (json) out << j.dump(2) << '\n';
    return ok ? kExitOk : kExitVerificationFailed;
  };
  if (what == "all") return emit(run_acceptance(full));
  if (what == "thompson") {
    const auto r = thompson_check();
    if (json) {
      out << to_json(r).dump(2) << '\n';
    } else {
      out << "factors: " << r.factors << "\ndiagonals: " << r.diagonals << "\ncensus: " << r.census()
          << "\npairs tested: " << r.pairs_tested << "\ntrivial intersections: " << r.trivial_intersection_pairs
          << "\ncounterexample: " << (r.counterexample ? "found" : "none") << '\n';
    }
    return r.census() == 122 && !r.counterexample && r.fixed_point_mismatches == 0 ? kExitOk : kExitVerificationFailed;
  }
  if (what == "wreath-bound") {
    if (d < 3 || d > 12) throw PreconditionFailed("--d must lie in 3..12");
    const BigInt oracle = wreath_order_oracle(d);
    const BigInt bound = theorem11_bound(d);
    const std::string digits = to_string(bound);
    if (json) {
      out << Json{{"d", d}, {"exponent", to_string(theorem11_exponent(d))}, {"digits", digits.size()},
                  {"equal", oracle == bound}}
                 .dump(2)
          << '\n';
    } else {
      out << "d: " << d << "\nexponent: " << to_string(theorem11_exponent(d)) << "\ndecimal digits: " << digits.size()
          << '\n';
      if (digits.size() <= 400) out << "bound: " << digits << '\n';
      out << "wreath product order " << (oracle == bound ? "equals" : "DIFFERS FROM") << " the bound\n";
    }
    return oracle == bound ? kExitOk : kExitVerificationFailed;
  }
  if (what == "remark-small") {
    if (!json) {
      print_orbits(out, "theta(4) x cube under Sym(4) x C2", product_orbit_report(theta_cube_instance(), cfg.limits));
      print_orbits(out, "K6 x Petersen under Sym(5)", product_orbit_report(k6_petersen_instance(), cfg.limits));
      print_orbits(out, "K5 x Petersen under Sym(5)", product_orbit_report(k5_petersen_instance(), cfg.limits));
    }
    return emit({check_small_probes()});
  }
  if (what == "instance") return cmd_verify_instance(cfg, out);
  throw ParseError("unknown verification '" + what + "'");
}

}  // namespace

Limits limits_from_environment(Limits base) {
  base.element_cap = positive_env("BMW_ENUM_CAP", base.element_cap);
  base.graph_vertex_cap = positive_env("BMW_GRAPH_CAP", base.graph_vertex_cap);
  return base;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision procedures for lattices in products of two trees", "bmwcheck"};
  app.require_subcommand(1);
  RunConfig cfg;
  bool json = false;
  std::size_t element_cap = 0, graph_cap = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "JSON output");
    sub->add_option("--element-cap", element_cap, "element enumeration cap")->check(CLI::PositiveNumber);
    sub->add_option("--graph-cap", graph_cap, "graph size cap")->check(CLI::PositiveNumber);
  };

  std::string file;
  auto* analyze_cmd = app.add_subcommand("analyze", "analyze a square datum file");
  analyze_cmd->add_option("file", file, "datum file")->required();
  add_common(analyze_cmd);

  std::string d1, d2, f1, f2;
  auto* verdict_cmd = app.add_subcommand("verdict", "irreducibility verdict from degrees and local actions");
  verdict_cmd->add_option("--d1", d1, "first degree")->required();
  verdict_cmd->add_option("--d2", d2, "second degree")->required();
  verdict_cmd->add_option("--f1", f1, "Alt, Sym, a table label or generators in cycle notation")->required();
  verdict_cmd->add_option("--f2", f2, "same for the second factor")->required();
  add_common(verdict_cmd);

  auto* tables_cmd = app.add_subcommand("tables", "print the built-in tables");
  add_common(tables_cmd);

  std::string search_name, method = "conjugate";
  unsigned threads = 1;
  auto* search_cmd = app.add_subcommand("search", "desk-scale exhaustive searches");
  search_cmd->add_option("name", search_name, "search to run")->required()->check(CLI::IsMember({"gap-11-4"}));
  search_cmd->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
  search_cmd->add_option("--method", method, "condition route")->check(CLI::IsMember({"conjugate", "cosets"}));
  add_common(search_cmd);

  std::string what, instance_file;
  bool full = false;
  unsigned degree = 3;
  auto* verify_cmd = app.add_subcommand("verify", "bundled verification suite");
  verify_cmd->add_option("what", what, "all, thompson, wreath-bound, remark-small or instance")
      ->required()
      ->check(CLI::IsMember({"all", "thompson", "wreath-bound", "remark-small", "instance"}));
  verify_cmd->add_option("file", instance_file, "instance bundle for 'verify instance'");
  verify_cmd->add_flag("--full", full, "include the long searches");
  verify_cmd->add_option("--d", degree, "degree for wreath-bound");
  add_common(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    cfg.format = json ? OutputFormat::Json : OutputFormat::Text;
    cfg.limits = limits_from_environment();
    if (element_cap) cfg.limits.element_cap = element_cap;
    if (graph_cap) cfg.limits.graph_vertex_cap = graph_cap;
    cfg.threads = threads;
    if (analyze_cmd->parsed()) {
      cfg.command = "analyze";
      cfg.inputs = {file};
      return cmd_analyze(cfg, out);
    }
    if (verdict_cmd->parsed()) {
      cfg.command = "verdict";
      cfg.inputs = {d1, d2, f1, f2};
      return cmd_verdict(cfg, out);
    }
    if (tables_cmd->parsed()) {
      cfg.command = "tables";
      return cmd_tables(cfg, out);
    }
    if (search_cmd->parsed()) {
      cfg.command = "search";
      return cmd_search(cfg, out, method);
    }
    cfg.command = "verify";
    if (what == "instance") {
      if (instance_file.empty()) throw ParseError("'verify instance' needs a file");
      cfg.inputs = {instance_file};
    } else if (!instance_file.empty()) {
      throw ParseError("unexpected argument '" + instance_file + "'");
    }
    return cmd_verify(cfg, out, what, full, degree);
  } catch (const GroupTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const PreconditionFailed& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const InvariantViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}

}  // namespace bmw

#include "gml/completion.hpp"
#include "gml/graph_semantics.hpp"
#include "gml/minimal_model.hpp"
#include "gml/pair_io.hpp"
#include "gml/pair_semantics.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

using nlohmann::json;

namespace {

// Bad input on the command line or in a file; exits 2 like a usage error.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> pair_files;
  std::string env_file;
  std::uint32_t rank = 1;
  std::uint32_t k_m = gml::kDefaultMemberBound;
  std::optional<std::uint32_t> k_n;
  std::size_t max_index = 50;
  std::size_t budget = 1000;
  bool as_json = false;
  bool count_only = false;
  std::vector<std::string> positional;
};

gml::PartialPair load_pair(const std::string& path) {
  auto p = gml::pair_from_json(gml::read_json_file(path));
  return p;
}

gml::PartialPair load_valid_pair(const Options& o) {
  if (o.pair_files.size() != 1) throw InputError("expected exactly one --pair FILE");
  auto p = load_pair(o.pair_files[0]);
  if (!gml::validate(p).ok()) throw InputError(o.pair_files[0] + ": coding is not a valid partial pair");
  return p;
}

std::map<std::string, std::vector<std::string>> load_env(const Options& o) {
  if (o.env_file.empty()) return {};
  return gml::env_from_json(gml::read_json_file(o.env_file));
}

const std::string& arg(const Options& o, std::size_t i, const char* what) {
  if (i >= o.positional.size()) throw InputError(std::string("missing ") + what);
  return o.positional[i];
}

json labels_of(const gml::PartialPair& p, const gml::AtomSet& s) {
  json out = json::array();
  for (gml::Atom a : s) out.push_back(p.label(a));
  return out;
}

std::string braces(const std::vector<std::string>& items) {
  std::string s = "{";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? "," : "") + items[i];
  return s + "}";
}

struct Inequation {
  gml::Term lhs, rhs;
  bool equation;
};

Inequation parse_inequation(const std::string& text) {
  for (const char* op : {"<=", "="}) {
    auto at = text.find(op);
    if (at == std::string::npos) continue;
    return {gml::parse_term(text.substr(0, at)), gml::parse_term(text.substr(at + std::string(op).size())),
            std::string(op) == "="};
  }
  throw InputError("expected \"M <= N\" or \"M = N\"");
}

std::uint32_t nonmember_bound(const Options& o) { return o.k_n.value_or(o.k_m + gml::kDefaultNonmemberSlack); }

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.as_json)
    std::cout << j.dump() << "\n";
  else
    std::cout << text << "\n";
}

std::string verdict_text(const gml::Verdict& v, const gml::Completion& c) {
  std::string s = gml::to_string(v.lhs) + " <= " + gml::to_string(v.rhs) + ": ";
  if (!v.fails())
    return s + "holds up to member bound " + std::to_string(v.member_bound) + ", non-member bound " +
           std::to_string(v.nonmember_bound);
  return s + "fails with evidence " + c.format(*v.witness) + " (member at rank " + std::to_string(v.member_rank) +
         ", absent up to rank " + std::to_string(v.nonmember_bound) + ")";
}

// ---- subcommands ---------------------------------------------------------------

int cmd_parse(const Options& o) {
  auto t = gml::parse_term(arg(o, 0, "TERM"));
  json j{{"term", gml::to_string(t)},
         {"closed", t.is_closed()},
         {"size", t.size()},
         {"godel", gml::godel_encode(t).str()}};
  emit(o, j, gml::to_string(t));
  return 0;
}

int cmd_reduce(const Options& o) {
  auto r = gml::normalize(gml::parse_term(arg(o, 0, "TERM")), o.budget);
  bool nf = r.status == gml::ReductionResult::Status::NormalForm;
  json j{{"status", nf ? "normal_form" : "budget_exceeded"}, {"term", gml::to_string(r.term)}, {"steps", r.steps}};
  emit(o, j, gml::to_string(r.term) + (nf ? "" : "  (budget exceeded after " + std::to_string(r.steps) + " steps)"));
  return 0;
}

int cmd_interp(const Options& o) {
  auto p = load_valid_pair(o);
  auto t = gml::parse_term(arg(o, 0, "TERM"));
  gml::PairEnvironment env;
  for (auto& [var, names] : load_env(o))
    for (auto& n : names) {
      auto a = p.find(n);
      if (!a) throw InputError("environment names unknown atom '" + n + "'");
      env[var].push_back(*a);
    }
  auto s = gml::interpret(t, p, env);
  std::vector<std::string> names;
  for (gml::Atom a : s) names.push_back(p.label(a));
  emit(o, json{{"atoms", labels_of(p, s)}}, braces(names));
  return 0;
}

gml::CompletionEnvironment completion_env(const Options& o, const gml::Completion& c) {
  gml::CompletionEnvironment env;
  for (auto& [var, items] : load_env(o)) {
    std::vector<gml::Element> elems;
    for (auto& s : items) elems.push_back(c.parse(s));
    env[var] = gml::make_element_set(elems);
  }
  return env;
}

int cmd_complete(const Options& o) {
  gml::Completion c(load_valid_pair(o));
  if (o.count_only) {
    auto n = c.predicted_count(o.rank);
    std::string count = n ? n->str() : std::to_string(c.elements_up_to(o.rank).size());
    json j;
    j["count"] = n && *n <= std::numeric_limits<std::uint64_t>::max() ? json(n->convert_to<std::uint64_t>())
                                                                      : json(count);
    emit(o, j, count);
    return 0;
  }
  const auto& level = c.elements_up_to(o.rank);
  json elems = json::array();
  std::string text;
  for (auto e : level) {
    elems.push_back({{"element", c.format(e)}, {"rank", e.rank()}});
    text += c.format(e) + "\n";
  }
  if (!text.empty()) text.pop_back();
  emit(o, json{{"rank", o.rank}, {"count", level.size()}, {"elements", elems}}, text);
  return 0;
}

int cmd_member(const Options& o) {
  gml::Completion c(load_valid_pair(o));
  auto t = gml::parse_term(arg(o, 0, "TERM"));
  auto e = c.parse(arg(o, 1, "ELEMENT"));
  auto r = gml::member(t, c, e, o.rank, completion_env(o, c));
  json j{{"element", c.format(e)}, {"found", r.found}};
  j[r.found ? "rank" : "searched_up_to"] = r.rank;
  emit(o, j, r.found ? "found at rank " + std::to_string(r.rank) : "not found up to rank " + std::to_string(r.rank));
  return r.found ? 0 : 1;
}

int cmd_witness(const Options& o) {
  gml::Completion c(load_valid_pair(o));
  auto t = gml::parse_term(arg(o, 0, "TERM"));
  auto e = c.parse(arg(o, 1, "ELEMENT"));
  auto w = gml::extract_witness_subpair(t, c, e, o.rank, completion_env(o, c));
  auto pj = gml::pair_to_json(w.pair);
  emit(o, json{{"element", c.format(e)}, {"witness_subpair", pj}}, pj.dump(2));
  return 0;
}

int cmd_check(const Options& o) {
  gml::Completion c(load_valid_pair(o));
  auto q = parse_inequation(arg(o, 0, "INEQUATION"));
  auto kn = nonmember_bound(o);
  if (!q.equation) {
    auto v = gml::check_inequation(q.lhs, q.rhs, c, o.k_m, kn);
    emit(o, gml::verdict_to_json(v, c), verdict_text(v, c));
    return v.fails() ? 1 : 0;
  }
  auto [ab, ba] = gml::check_equation(q.lhs, q.rhs, c, o.k_m, kn);
  bool fails = ab.fails() || ba.fails();
  json j{{"equation", {{"lhs", gml::to_string(q.lhs)}, {"rhs", gml::to_string(q.rhs)}}},
         {"kind", fails ? "fails_with_evidence" : "holds_up_to"},
         {"directions", {gml::verdict_to_json(ab, c), gml::verdict_to_json(ba, c)}}};
  emit(o, j, verdict_text(ab, c) + "\n" + verdict_text(ba, c));
  return fails ? 1 : 0;
}

int cmd_minmodel_search(const Options& o) {
  auto q = parse_inequation(arg(o, 0, "INEQUATION"));
  auto kn = nonmember_bound(o);
  std::vector<std::pair<gml::Term, gml::Term>> directions{{q.lhs, q.rhs}};
  if (q.equation) directions.push_back({q.rhs, q.lhs});
  for (auto& [m, n] : directions) {
    auto out = gml::minmodel::search_counterexample(m, n, o.max_index, o.k_m, kn);
    for (auto k : out.skipped) std::cerr << "note: component " << k << " skipped (ceiling exceeded)\n";
    if (!out.hit) continue;
    auto& hit = *out.hit;
    json j{{"found", true},
           {"index", hit.index},
           {"component", gml::pair_to_json(hit.component->base())},
           {"verdict", gml::verdict_to_json(hit.verdict, *hit.component)}};
    emit(o, j, "component " + std::to_string(hit.index) + ": " + verdict_text(hit.verdict, *hit.component));
    return 1;
  }
  emit(o, json{{"found", false}, {"max_index", o.max_index}},
       "no counterexample in components 0.." + std::to_string(o.max_index));
  return 0;
}

int cmd_minmodel_pair(const Options& o) {
  std::size_t k = 0;
  try {
    k = std::stoull(arg(o, 0, "INDEX"));
  } catch (const std::logic_error&) {
    throw InputError("INDEX must be a natural number");
  }
  auto numbered = gml::minmodel::enumerate_pair(k);
  auto relocated = gml::minmodel::relocate(k);
  json j{{"index", k},
         {"prime", gml::nth_prime(k)},
         {"pair", gml::pair_to_json(numbered)},
         {"relocated", gml::pair_to_json(relocated)}};
  emit(o, j, "N_" + std::to_string(k) + " = " + gml::pair_to_json(numbered).dump() + "\nP_" + std::to_string(k) +
                 " = " + gml::pair_to_json(relocated).dump());
  return 0;
}

int cmd_pair_validate(const Options& o) {
  if (o.pair_files.size() != 1) throw InputError("expected exactly one --pair FILE");
  auto p = load_pair(o.pair_files[0]);
  auto report = gml::validate(p);
  json violations = json::array();
  std::string text = report.ok() ? "ok" : "";
  for (auto& v : report.violations) {
    const char* kind = v.kind == gml::Violation::Kind::NotInjective     ? "not_injective"
                       : v.kind == gml::Violation::Kind::AtomOutOfRange ? "atom_out_of_range"
                                                                        : "duplicate_label";
    violations.push_back({{"kind", kind}, {"detail", v.detail}});
    text += std::string(text.empty() ? "" : "\n") + kind + ": " + v.detail;
  }
  emit(o, json{{"ok", report.ok()}, {"violations", violations}}, text);
  return report.ok() ? 0 : 1;
}

int cmd_pair_auts(const Options& o) {
  auto p = load_valid_pair(o);
  json maps = json::array();
  std::string text;
  for (auto& f : gml::automorphisms(p)) {
    json m = json::object();
    std::vector<std::string> parts;
    for (gml::Atom a = 0; a < p.size(); ++a) {
      m[p.label(a)] = p.label(f(a));
      parts.push_back(p.label(a) + "->" + p.label(f(a)));
    }
    maps.push_back(m);
    text += braces(parts) + "\n";
  }
  if (!text.empty()) text.pop_back();
  emit(o, json{{"automorphisms", maps}}, text);
  return 0;
}

int cmd_pair_orbits(const Options& o) {
  auto p = load_valid_pair(o);
  json blocks = json::array();
  std::string text;
  for (auto& block : gml::orbits(p)) {
    blocks.push_back(labels_of(p, block));
    std::vector<std::string> names;
    for (auto a : block) names.push_back(p.label(a));
    text += braces(names) + "\n";
  }
  if (!text.empty()) text.pop_back();
  emit(o, json{{"orbits", blocks}}, text);
  return 0;
}

int cmd_pair_union(const Options& o) {
  if (o.pair_files.size() != 2) throw InputError("union takes two --pair FILE options");
  auto a = load_pair(o.pair_files[0]), b = load_pair(o.pair_files[1]);
  for (auto* p : {&a, &b})
    if (!gml::validate(*p).ok()) throw InputError("union operands must be valid pairs");
  try {
    auto u = gml::pair_union(a, b);
    auto j = gml::pair_to_json(u);
    emit(o, j, j.dump());
    return 0;
  } catch (const gml::PairConflict& e) {
    emit(o, json{{"conflict", e.what()}}, std::string("conflict: ") + e.what());
    return 1;
  }
}

int cmd_enum_terms(const Options& o) {
  std::size_t n = 0;
  try {
    n = std::stoull(arg(o, 0, "LIMIT"));
  } catch (const std::logic_error&) {
    throw InputError("LIMIT must be a natural number");
  }
  json terms = json::array();
  std::string text;
  for (auto& t : gml::enumerate_closed_terms(n)) {
    terms.push_back({{"term", gml::to_string(t)}, {"godel", gml::godel_encode(t).str()}});
    text += gml::to_string(t) + "\n";
  }
  if (!text.empty()) text.pop_back();
  emit(o, json{{"terms", terms}}, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph-model semantics of the untyped lambda calculus"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* cmd, const std::string& positional) {
    cmd->add_flag("--json", o.as_json, "print JSON");
    if (!positional.empty()) cmd->add_option(positional, o.positional)->required();
    return cmd;
  };
  auto with_pair = [&](CLI::App* cmd) {
    cmd->add_option("--pair", o.pair_files, "pair file (repeat for union)")->required()->allow_extra_args(false);
    return cmd;
  };

  std::function<int(const Options&)> run;
  auto bind = [&](CLI::App* cmd, int (*fn)(const Options&)) { cmd->callback([&run, fn] { run = fn; }); };

  bind(common(app.add_subcommand("parse", "parse and print a term"), "TERM"), cmd_parse);

  auto reduce = common(app.add_subcommand("reduce", "leftmost-outermost normalization"), "TERM");
  reduce->add_option("--budget", o.budget, "step budget");
  bind(reduce, cmd_reduce);

  auto interp = with_pair(common(app.add_subcommand("interp", "interpretation in a finite pair"), "TERM"));
  interp->add_option("--env", o.env_file, "environment file");
  bind(interp, cmd_interp);

  auto complete = with_pair(common(app.add_subcommand("complete", "elements of the completion up to a rank"), ""));
  complete->add_option("--rank", o.rank, "rank bound");
  complete->add_flag("--count", o.count_only, "only print |E_k|");
  bind(complete, cmd_complete);

  for (auto [name, fn, help] : {std::tuple{"member", cmd_member, "bounded membership in the completion"},
                                std::tuple{"witness", cmd_witness, "finite witness subpair for a member"}}) {
    auto cmd = with_pair(common(app.add_subcommand(name, help), "term_and_element"));
    cmd->add_option("--rank", o.rank, "rank bound");
    cmd->add_option("--env", o.env_file, "environment file");
    bind(cmd, fn);
  }

  auto bounds = [&](CLI::App* cmd) {
    cmd->add_option("--kM", o.k_m, "rank bound for the left-hand side");
    cmd->add_option("--kN", o.k_n, "rank bound for the right-hand side (default kM + 2)");
  };
  auto check = with_pair(common(app.add_subcommand("check", "check M <= N or M = N in the completion"), "INEQUATION"));
  bounds(check);
  bind(check, cmd_check);

  auto minmodel = app.add_subcommand("minmodel", "the prime-coded minimum graph model");
  minmodel->require_subcommand(1);
  auto search = common(minmodel->add_subcommand("search", "least component refuting an inequation"), "INEQUATION");
  bounds(search);
  search->add_option("--max-index", o.max_index, "last component index to scan");
  bind(search, cmd_minmodel_search);
  bind(common(minmodel->add_subcommand("pair", "the k-th finite pair and its relocation"), "INDEX"),
       cmd_minmodel_pair);

  auto pair = app.add_subcommand("pair", "finite partial pairs");
  pair->require_subcommand(1);
  bind(with_pair(common(pair->add_subcommand("validate", "check injectivity and closure"), "")), cmd_pair_validate);
  bind(with_pair(common(pair->add_subcommand("auts", "automorphism group"), "")), cmd_pair_auts);
  bind(with_pair(common(pair->add_subcommand("orbits", "orbits of the automorphism group"), "")), cmd_pair_orbits);
  bind(with_pair(common(pair->add_subcommand("union", "union of two pairs"), "")), cmd_pair_union);

  bind(common(app.add_subcommand("enum-terms", "first closed terms in code order"), "LIMIT"), cmd_enum_terms);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return run(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const gml::ParseError& e) {
    std::cerr << "error: term syntax: " << e.what() << "\n";
  } catch (const gml::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    // limits and unmet preconditions: the input was well-formed
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

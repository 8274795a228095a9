#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "odplab/classes.hpp"
#include "odplab/corpus.hpp"
#include "odplab/delta.hpp"
#include "odplab/epexpr.hpp"
#include "odplab/epset.hpp"
#include "odplab/frink.hpp"
#include "odplab/io.hpp"

namespace {

using nlohmann::ordered_json;
using namespace odplab;

struct Options {
  std::size_t budget_nodes = 10'000'000;
  std::size_t max_elements = 512;
  unsigned fragment_bound = 16;
  std::string format = "text";
  std::string expect;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

Options opt;

ParsedInstance load(const std::string& path) {
  if (path == "-") return read_instance(std::cin);
  std::ifstream f(path);
  if (!f) throw StructuralError("cannot open " + path);
  return read_instance(f);
}

CheckOptions check_options() {
  CheckOptions c;
  c.max_elements = opt.max_elements;
  c.seed = opt.seed;
  c.jobs = (int)opt.jobs;
  return c;
}

EnumOptions enum_options() { return EnumOptions{opt.budget_nodes}; }

void flatten_into(const ordered_json& j, const std::string& prefix,
                  std::map<std::string, std::string>& out) {
  if (j.is_object()) {
    for (auto& [k, v] : j.items())
      flatten_into(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (auto& v : j) flatten_into(v, prefix + "." + std::to_string(i++), out);
  } else if (j.is_string()) {
    out[prefix] = j.get<std::string>();
  } else {
    out[prefix] = j.dump();
  }
}

/// Emits the report in the chosen format and applies --expect assertions.
int finish(const ordered_json& doc, const std::string& text, int code) {
  if (opt.format == "doc")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
  if (!opt.expect.empty()) {
    std::map<std::string, std::string> flat;
    flatten_into(doc, "", flat);
    std::stringstream ss(opt.expect);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      auto eq = item.find('=');
      if (eq == std::string::npos)
        throw StructuralError("expectation '" + item + "' is not key=value");
      std::string key = item.substr(0, eq), want = item.substr(eq + 1);
      auto it = flat.find(key);
      if (it == flat.end()) {
        std::cerr << "error: expectation " << key << ": no such field\n";
        code = code == 0 ? 1 : code;
      } else if (it->second != want) {
        std::cerr << "error: expectation " << key << ": expected '" << want
                  << "', got '" << it->second << "'\n";
        code = code == 0 ? 1 : code;
      }
    }
  }
  return code;
}

ordered_json violations_json(const ViolationReport& rep) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : rep.violations) {
    ordered_json e;
    e["axiom"] = v.axiom;
    e["witness"] = v.witness;
    if (!v.detail.empty()) e["detail"] = v.detail;
    arr.push_back(e);
  }
  return arr;
}

void violations_text(std::ostream& os, const std::string& name,
                     const ViolationReport& rep) {
  if (rep.ok()) {
    os << name << "=ok\n";
    return;
  }
  os << name << "=failed total=" << rep.total() << "\n";
  for (const auto& v : rep.violations) {
    os << "violation " << name << " axiom=" << v.axiom << " witness=(";
    for (std::size_t i = 0; i < v.witness.size(); ++i)
      os << (i ? "," : "") << v.witness[i];
    os << ")";
    if (!v.detail.empty()) os << " " << v.detail;
    os << "\n";
  }
}

int cmd_verify(const std::string& path) {
  ParsedInstance pi = load(path);
  CheckOptions copts = check_options();
  ordered_json doc;
  doc["elements"] = pi.poset.size();
  std::ostringstream text;
  text << "elements=" << pi.poset.size() << "\n";
  bool ok = true;

  auto run = [&](const std::string& name, const ViolationReport& rep) {
    ok = ok && rep.ok();
    doc["checks"][name]["ok"] = rep.ok();
    if (!rep.ok()) doc["checks"][name]["violations"] = violations_json(rep);
    if (rep.sampled) doc["checks"][name]["sampled"] = true;
    violations_text(text, name, rep);
  };

  run("orthoposet", verify_orthoposet(pi.poset, copts));
  run("orthomodular", check_orthomodularity(pi.poset, copts));
  if (pi.delta) {
    run("difference", verify_odp(pi.poset, *pi.delta, copts));
    auto ident = delta_identities_report(pi.poset, *pi.delta, copts);
    run("identities", ident.violations);
    doc["commutative"] = ident.commutative;
    text << "commutative=" << (ident.commutative ? "true" : "false") << "\n";
  } else {
    doc["difference"] = "absent";
    text << "difference=absent\n";
  }
  doc["ok"] = ok;
  text << "ok=" << (ok ? "true" : "false") << "\n";
  if (opt.format == "dot")
    return finish(doc, to_dot(pi.poset), ok ? 0 : 1);
  return finish(doc, text.str(), ok ? 0 : 1);
}

const char* tri_str(Tri t) { return tri_name(t); }

int cmd_classify(const std::string& path) {
  ParsedInstance pi = load(path);
  if (!pi.delta)
    throw StructuralError("classify needs a structure with a difference table");
  ClassReport rep = classify(pi.poset, *pi.delta, enum_options());
  ordered_json doc;
  doc["elements"] = pi.poset.size();
  doc["in_R"] = rep.in_r;
  if (rep.r_witness)
    doc["r_witness"] = {rep.r_witness->first, rep.r_witness->second};
  doc["in_S"] = tri_str(rep.in_s);
  if (rep.ideal_count) doc["ideal_count"] = *rep.ideal_count;
  if (rep.selective_count) doc["selective_count"] = *rep.selective_count;
  if (rep.s_witness_pair)
    doc["s_witness_pair"] = {rep.s_witness_pair->first,
                             rep.s_witness_pair->second};
  doc["in_T"] = rep.in_t;
  if (rep.t_witness)
    doc["t_witness"] = {rep.t_witness->first, rep.t_witness->second};
  doc["lattice"] = rep.lattice;
  doc["boolean"] = rep.boolean;

  std::ostringstream text;
  text << "elements=" << pi.poset.size() << "\n";
  auto pair_str = [](const std::optional<std::pair<int, int>>& w) {
    if (!w) return std::string();
    return " witness=(" + std::to_string(w->first) + "," +
           std::to_string(w->second) + ")";
  };
  text << "in_R=" << (rep.in_r ? "true" : "false") << pair_str(rep.r_witness)
       << "\n";
  text << "in_S=" << tri_str(rep.in_s);
  if (rep.ideal_count)
    text << " ideals=" << *rep.ideal_count
         << " selective=" << *rep.selective_count;
  text << pair_str(rep.s_witness_pair) << "\n";
  text << "in_T=" << (rep.in_t ? "true" : "false") << pair_str(rep.t_witness)
       << "\n";
  text << "lattice=" << (rep.lattice ? "true" : "false") << "\n";
  text << "boolean=" << (rep.boolean ? "true" : "false") << "\n";
  return finish(doc, text.str(), 0);
}

int cmd_ideals(const std::string& path) {
  ParsedInstance pi = load(path);
  auto ideals = enumerate_maximal_ideals(pi.poset, enum_options());
  ordered_json doc;
  doc["elements"] = pi.poset.size();
  doc["count"] = ideals.size();
  doc["ideals"] = ordered_json::array();
  std::ostringstream text;
  for (const auto& ideal : ideals) {
    bool sel = is_selective(pi.poset, ideal);
    ordered_json entry;
    entry["members"] = ordered_json::array();
    std::string members;
    for (std::size_t i = ideal.first(); i < ideal.universe();
         i = ideal.next(i + 1)) {
      entry["members"].push_back(pi.poset.label((int)i));
      if (!members.empty()) members += ",";
      members += pi.poset.label((int)i);
    }
    entry["selective"] = sel;
    doc["ideals"].push_back(entry);
    text << "ideal {" << members << "} selective=" << (sel ? "yes" : "no")
         << "\n";
  }
  return finish(doc, text.str(), 0);
}

int cmd_represent(const std::string& path) {
  ParsedInstance pi = load(path);
  if (!pi.delta)
    throw StructuralError(
        "represent needs a structure with a difference table");
  Representation rep = representation(pi.poset, *pi.delta, enum_options());
  ordered_json doc;
  doc["elements"] = pi.poset.size();
  doc["q"] = rep.ideals.size();
  doc["order_embedding"] = rep.order_embedding;
  doc["perp_ok"] = rep.perp_ok;
  doc["delta_ok"] = rep.delta_ok;
  doc["e"] = ordered_json::array();
  std::ostringstream text;
  text << "elements=" << pi.poset.size() << "\n";
  text << "q=" << rep.ideals.size() << "\n";
  text << "order_embedding=" << (rep.order_embedding ? "true" : "false")
       << "\n";
  text << "perp_ok=" << (rep.perp_ok ? "true" : "false") << "\n";
  text << "delta_ok=" << (rep.delta_ok ? "true" : "false") << "\n";
  for (int a = 0; a < pi.poset.size(); ++a) {
    std::string bits = rep.e.empty() ? "" : rep.e[(std::size_t)a].to_string();
    doc["e"].push_back(bits);
    text << "e " << pi.poset.label(a) << " = " << bits << "\n";
  }
  return finish(doc, text.str(), 0);
}

int emit_instance(const Instance& inst) {
  if (opt.format == "dot") {
    std::cout << to_dot(inst.poset);
    return 0;
  }
  write_instance(std::cout, inst.poset, &inst.delta);
  return 0;
}

int cmd_generate_corpus(const std::string& name) {
  const auto& corp = corpus();
  if (name.empty()) {
    std::ostringstream text;
    ordered_json doc = ordered_json::array();
    for (const auto& e : corp) {
      text << e.name << " elements=" << e.inst.poset.size() << "\n";
      ordered_json row;
      row["name"] = e.name;
      row["elements"] = e.inst.poset.size();
      doc.push_back(row);
    }
    return finish(doc, text.str(), 0);
  }
  for (const auto& e : corp)
    if (e.name == name) return emit_instance(e.inst);
  throw StructuralError("no corpus instance named '" + name + "'");
}

std::uint64_t parse_row_mask(const std::string& row, int n) {
  if ((int)row.size() != n)
    throw StructuralError("generator row '" + row + "' must have length " +
                          std::to_string(n));
  std::uint64_t mask = 0;
  for (int i = 0; i < n; ++i) {
    if (row[i] == '1')
      mask |= std::uint64_t{1} << i;
    else if (row[i] != '0')
      throw StructuralError("generator rows are 0/1 strings");
  }
  return mask;
}

const char* family_base_name(int i) {
  static const char* names[] = {"EMPTY",
                                "A1",
                                "A2",
                                "A3",
                                "complement(A1)",
                                "complement(A2)",
                                "complement(A3)",
                                "NAT"};
  return (i >= 0 && i < 8) ? names[i] : "?";
}

CosetFamily family_by_name(const std::string& name) {
  if (name == "R") return build_r_family();
  if (name == "T") return build_t_family();
  throw StructuralError("unknown family '" + name + "' (expected R or T)");
}

std::string finite_set_str(const EPSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto e : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

int cmd_epset_eval(const std::string& expr, std::int64_t trunc) {
  EPSet v = parse_epexpr(expr);
  ordered_json doc;
  doc["value"] = v.literal();
  doc["period"] = v.period();
  doc["threshold"] = v.threshold();
  doc["finite"] = v.is_finite();
  std::ostringstream text;
  text << v.literal() << "\n";
  if (trunc >= 0) {
    std::string bits;
    for (bool b : v.truncate((std::uint64_t)trunc)) bits += b ? '1' : '0';
    doc["truncate"] = bits;
    text << "truncate=" << bits << "\n";
  }
  return finish(doc, text.str(), 0);
}

int cmd_epset_member(const std::string& family, const std::string& expr) {
  CosetFamily fam = family_by_name(family);
  EPSet x = parse_epexpr(expr);
  auto wit = family_contains(fam, x);
  ordered_json doc;
  std::ostringstream text;
  doc["member"] = wit.has_value();
  if (wit) {
    doc["base"] = family_base_name(wit->base_index);
    doc["exceptions"] = finite_set_str(wit->exceptions);
    text << "member=yes D=" << family_base_name(wit->base_index)
         << " F=" << finite_set_str(wit->exceptions) << "\n";
  } else {
    text << "member=no\n";
  }
  return finish(doc, text.str(), 0);
}

int cmd_epset_meets_zero(const std::string& family, const std::string& ea,
                         const std::string& eb) {
  CosetFamily fam = family_by_name(family);
  EPSet a = parse_epexpr(ea), b = parse_epexpr(eb);
  bool mz = meets_zero(fam, a, b);
  ordered_json doc;
  doc["meets_zero"] = mz;
  std::ostringstream text;
  text << "meets_zero=" << (mz ? "true" : "false") << "\n";
  return finish(doc, text.str(), 0);
}

int cmd_epset_witness_search(const std::string& family, unsigned bound,
                             const std::string& cls) {
  CosetFamily fam = family_by_name(family);
  FamilyClass fc;
  if (cls == "R")
    fc = FamilyClass::R;
  else if (cls == "T")
    fc = FamilyClass::T;
  else
    throw StructuralError("unknown class '" + cls + "' (expected R or T)");
  SearchOptions sopts;
  sopts.fragment_cap = opt.fragment_bound;
  auto wit = class_witness_search(fam, bound, fc, sopts);
  ordered_json doc;
  std::ostringstream text;
  doc["witness"] = wit.has_value();
  if (wit) {
    auto dump = [&](const char* tag, const FamilyMember& m) {
      EPSet v = member_value(fam, m);
      doc[tag]["base"] = family_base_name(m.base_index);
      doc[tag]["exceptions"] = finite_set_str(m.exceptions);
      doc[tag]["value"] = v.literal();
      text << tag << " D=" << family_base_name(m.base_index)
           << " F=" << finite_set_str(m.exceptions) << " value=" << v.literal()
           << "\n";
    };
    text << "witness=found\n";
    dump("a", wit->first);
    dump("b", wit->second);
  } else {
    text << "witness=none\n";
  }
  return finish(doc, text.str(), 0);
}

int cmd_epset_class_check(const std::string& family) {
  CosetFamily fam = family_by_name(family);
  RCheckResult res = class_R_check(fam);
  ordered_json doc;
  doc["verdict"] = verdict_name(res.verdict);
  std::ostringstream text;
  text << "verdict=" << verdict_name(res.verdict) << "\n";
  if (res.witness) {
    doc["a"] = res.witness->first.literal();
    doc["b"] = res.witness->second.literal();
    text << "a=" << res.witness->first.literal() << "\n";
    text << "b=" << res.witness->second.literal() << "\n";
  }
  return finish(doc, text.str(), 0);
}

int cmd_corpus_check() {
  if (opt.format == "doc") {
    auto results = run_acceptance(opt.jobs);
    ordered_json doc;
    doc["criteria"] = ordered_json::array();
    std::size_t passed = 0;
    for (const auto& r : results) {
      ordered_json row;
      row["id"] = r.id;
      row["pass"] = r.pass;
      row["detail"] = r.detail;
      doc["criteria"].push_back(row);
      passed += r.pass ? 1 : 0;
    }
    doc["passed"] = passed;
    doc["total"] = results.size();
    bool all = passed == results.size();
    return finish(doc, "", all ? 0 : 1);
  }
  bool ok = corpus_check(std::cout, opt.jobs, /*with_timings=*/false);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Finite orthocomplemented difference structures: axiom checking, "
      "Frink-ideal enumeration, classification, set representation, and "
      "eventually periodic set families."};
  app.require_subcommand(1);
  app.add_option("--budget-nodes", opt.budget_nodes,
                 "Node budget for ideal enumeration")
      ->envname("ODPLAB_BUDGET_NODES");
  app.add_option("--max-elements", opt.max_elements,
                 "Largest size for exhaustive cubic scans")
      ->envname("ODPLAB_MAX_ELEMENTS");
  app.add_option("--fragment-bound", opt.fragment_bound,
                 "Cap on supported points in a witness-search fragment")
      ->envname("ODPLAB_FRAGMENT_BOUND");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "doc", "dot"}))
      ->envname("ODPLAB_FORMAT");
  app.add_option("--expect", opt.expect,
                 "Comma-separated key=value assertions on the report")
      ->envname("ODPLAB_EXPECT");
  app.add_option("--seed", opt.seed, "Seed for sampled checks")
      ->envname("ODPLAB_SEED");
  app.add_option("--jobs", opt.jobs, "Worker threads for corpus runs")
      ->envname("ODPLAB_JOBS");

  int code = 0;
  std::string file = "-";

  auto* verify = app.add_subcommand("verify", "Check axioms of a structure");
  verify->add_option("file", file, "Structure file or - for stdin");
  verify->callback([&] { code = cmd_verify(file); });

  auto* classify_cmd =
      app.add_subcommand("classify", "Class membership and lattice flags");
  classify_cmd->add_option("file", file, "Structure file or - for stdin");
  classify_cmd->callback([&] { code = cmd_classify(file); });

  auto* ideals_cmd =
      app.add_subcommand("ideals", "Enumerate maximal Frink ideals");
  ideals_cmd->add_option("file", file, "Structure file or - for stdin");
  ideals_cmd->callback([&] { code = cmd_ideals(file); });

  auto* represent_cmd =
      app.add_subcommand("represent", "Set representation via selective ideals");
  represent_cmd->add_option("file", file, "Structure file or - for stdin");
  represent_cmd->callback([&] { code = cmd_represent(file); });

  auto* gen = app.add_subcommand("generate", "Emit a structure file");
  gen->require_subcommand(1);
  int gen_n = 1;
  auto* gp = gen->add_subcommand("powerset", "All subsets of an n-point set");
  gp->add_option("n", gen_n, "Universe size")->required();
  gp->callback([&] { code = emit_instance(powerset_odp(gen_n)); });
  auto* ge = gen->add_subcommand("even", "Even-cardinality subsets");
  ge->add_option("n", gen_n, "Universe size (even)")->required();
  ge->callback([&] { code = emit_instance(even_sets_odp(gen_n)); });
  std::string prod_a, prod_b;
  auto* gprod = gen->add_subcommand("product", "Componentwise product");
  gprod->add_option("a", prod_a, "First structure file")->required();
  gprod->add_option("b", prod_b, "Second structure file")->required();
  gprod->callback([&] {
    ParsedInstance a = load(prod_a), b = load(prod_b);
    if (!a.delta || !b.delta)
      throw StructuralError("product needs difference tables on both inputs");
    code = emit_instance(
        product_odp({a.poset, *a.delta}, {b.poset, *b.delta}));
  });
  std::vector<std::string> gen_rows;
  auto* gdc = gen->add_subcommand(
      "delta-closure", "Closure of generator sets under symmetric difference");
  gdc->add_option("n", gen_n, "Universe size")->required();
  gdc->add_option("rows", gen_rows, "Generator sets as 0/1 rows");
  gdc->callback([&] {
    std::vector<std::uint64_t> gens;
    for (const auto& r : gen_rows) gens.push_back(parse_row_mask(r, gen_n));
    code = emit_instance(family_instance(delta_closure_family(gen_n, gens)));
  });
  std::string corpus_name;
  auto* gc = gen->add_subcommand("corpus", "Frozen corpus manifest or member");
  gc->add_option("name", corpus_name, "Instance name (omit for the manifest)");
  gc->callback([&] { code = cmd_generate_corpus(corpus_name); });

  auto* ep = app.add_subcommand("epset", "Eventually periodic set toolkit");
  ep->require_subcommand(1);
  std::string ep_family = "R", ep_expr, ep_expr_b, ep_class = "R";
  std::int64_t ep_trunc = -1;
  unsigned ep_bound = 12;
  auto* ee = ep->add_subcommand("eval", "Evaluate an expression");
  ee->add_option("expr", ep_expr, "Set expression")->required();
  ee->add_option("--truncate", ep_trunc, "Also print the first N bits");
  ee->callback([&] { code = cmd_epset_eval(ep_expr, ep_trunc); });
  auto* em = ep->add_subcommand("member", "Membership in a coset family");
  em->add_option("expr", ep_expr, "Set expression")->required();
  em->add_option("--family", ep_family, "Family name (R or T)");
  em->callback([&] { code = cmd_epset_member(ep_family, ep_expr); });
  auto* ez = ep->add_subcommand("meets-zero",
                                "Do two members meet only at zero?");
  ez->add_option("a", ep_expr, "First member expression")->required();
  ez->add_option("b", ep_expr_b, "Second member expression")->required();
  ez->add_option("--family", ep_family, "Family name (R or T)");
  ez->callback(
      [&] { code = cmd_epset_meets_zero(ep_family, ep_expr, ep_expr_b); });
  auto* ew = ep->add_subcommand("witness-search",
                                "Search a fragment for a class violation");
  ew->add_option("--family", ep_family, "Family name (R or T)");
  ew->add_option("--bound", ep_bound, "Exception sets live below this bound");
  ew->add_option("--class", ep_class, "Class law to test (R or T)");
  ew->callback(
      [&] { code = cmd_epset_witness_search(ep_family, ep_bound, ep_class); });
  auto* ec = ep->add_subcommand("class-check",
                                "Decide the disjointness law for a family");
  ec->add_option("--family", ep_family, "Family name (R or T)");
  ec->callback([&] { code = cmd_epset_class_check(ep_family); });

  auto* cc = app.add_subcommand("corpus-check",
                                "Run the acceptance suite over the corpus");
  cc->callback([&] { code = cmd_corpus_check(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "hopf/algebra.hpp"
#include "hopf/cancel.hpp"
#include "hopf/canonical.hpp"
#include "hopf/decompose.hpp"
#include "hopf/errors.hpp"
#include "hopf/families.hpp"
#include "hopf/forest.hpp"
#include "hopf/interval.hpp"
#include "hopf/json_io.hpp"

using nlohmann::json;
using namespace hopf;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInvalidInput = 3;
constexpr int kExitInternal = 4;

std::string to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

// FNV-1a over the structural key; stable across runs.
std::string input_digest(const Interval& P) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : P.raw_key()) h = (h ^ c) * 1099511628211ull;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json monomial_json(const Monomial& m, const ClassRegistry& reg) {
  json a = json::array();
  for (ClassId id : m.factors) a.push_back(reg.name(id));
  return a;
}

json element_json(const HopfElement& e, const ClassRegistry& reg) {
  json terms = json::array();
  for (auto& [m, c] : e.terms)
    terms.push_back({{"monomial", monomial_json(m, reg)}, {"coeff", c.str()}});
  return terms;
}

json registry_json(const ClassRegistry& reg) {
  json r = json::object();
  for (ClassId id = 0; id < reg.count(); ++id)
    r[reg.name(id)] = {{"size", reg.representative(id).size()},
                       {"certificate", to_hex(reg.certificate(id))}};
  return r;
}

json names_json(const Interval& P, const std::vector<ElementId>& v) {
  json a = json::array();
  for (ElementId x : v) a.push_back(P.name(x));
  return a;
}

void emit(const json& out, bool text, const std::string& text_body) {
  if (text)
    std::cout << text_body << "\n";
  else
    std::cout << out.dump(2) << "\n";
}

// Registration order is documented: the 2-chain is always X1.
ClassRegistry make_registry() {
  ClassRegistry reg;
  reg.register_class(chain_lattice(1));
  return reg;
}

struct Options {
  std::string input;
  std::vector<std::string> inputs;
  std::string engine = "chains";
  std::string registry_out;
  bool poset = false;
  bool trace = false;
  bool text = false;
};

int run_antipode(const Options& opt) {
  Interval P = interval_from_file(opt.input);
  ClassRegistry reg = make_registry();
  json out = {{"command", "antipode"},
              {"engine", opt.engine},
              {"input_digest", input_digest(P)}};
  HopfElement chains_result, forests_result;
  bool ran_chains = opt.engine == "chains" || opt.engine == "both";
  bool ran_forests = opt.engine == "forests" || opt.engine == "both";
  if (ran_chains) chains_result = antipode_chains(P, reg);
  if (ran_forests)
    forests_result =
        opt.poset ? antipode_forests_poset(P, reg) : antipode_forests(P, reg);
  const HopfElement& result = ran_chains ? chains_result : forests_result;
  if (opt.engine == "both") {
    out["chain_terms"] = chains_result.terms.size();
    out["forest_terms"] = forests_result.terms.size();
    out["engines_agree"] = chains_result == forests_result;
    if (chains_result != forests_result) {
      std::cout << out.dump(2) << "\n";
      std::cerr << "error: engines disagree\n";
      return kExitInternal;
    }
  }
  out["result"] = {{"terms", element_json(result, reg)},
                   {"expression", result.to_string(reg)}};
  if (opt.trace && ran_forests) {
    json tr = json::array();
    if (P.size() > 1 && is_lattice(P) && !opt.poset) {
      for (const Forest& F : enumerate_forests_lattice(P, reg))
        tr.push_back({{"nodes", names_json(P, F.nodes)},
                      {"sign", sign_degree(F) % 2 == 0 ? 1 : -1},
                      {"theta", monomial_json(theta(P, F, reg), reg)}});
    } else if (P.size() > 1) {
      for (const PosetForest& F : enumerate_forests_poset(P, reg))
        tr.push_back({{"nodes", names_json(P, F.forest.nodes)},
                      {"sign", sign_degree(F.forest) % 2 == 0 ? 1 : -1},
                      {"theta", monomial_json(theta(P, F, reg), reg)}});
    }
    out["forests"] = tr;
  }
  out["registry"] = registry_json(reg);
  if (!opt.registry_out.empty())
    std::ofstream(opt.registry_out) << registry_json(reg).dump(2) << "\n";
  emit(out, opt.text, "chi = " + result.to_string(reg));
  return 0;
}

int run_mobius(const Options& opt) {
  Interval P = interval_from_file(opt.input);
  Int chains = evaluate_mobius(P);
  Int rec = mobius_recursive(P);
  if (chains != rec) {
    std::cerr << "error: mobius engines disagree\n";
    return kExitInternal;
  }
  json out = {{"command", "mobius"},
              {"input_digest", input_digest(P)},
              {"result", {{"mobius", chains.str()}}}};
  emit(out, opt.text, "mu = " + chains.str());
  return 0;
}

int run_forests(const Options& opt) {
  Interval P = interval_from_file(opt.input);
  ClassRegistry reg = make_registry();
  json out = {{"command", "forests"},
              {"poset", opt.poset},
              {"input_digest", input_digest(P)}};
  json list = json::array();
  std::string text;
  if (P.size() == 1) {
    // Singleton: the antipode is 1 and the forest machinery is bypassed.
  } else if (!opt.poset && is_lattice(P)) {
    for (const Forest& F : enumerate_forests_lattice(P, reg)) {
      list.push_back({{"nodes", names_json(P, F.nodes)}});
      text += "{";
      for (size_t i = 0; i < F.nodes.size(); ++i)
        text += (i ? "," : "") + P.name(F.nodes[i]);
      text += "}\n";
    }
  } else {
    for (const PosetForest& F : enumerate_forests_poset(P, reg)) {
      json jm = json::object();
      for (auto& [A, v] : F.jmap.on_antichains) {
        std::string key = "{";
        for (size_t i = 0; i < A.size(); ++i)
          key += (i ? "," : "") + P.name(A[i]);
        jm[key + "}"] = P.name(v);
      }
      list.push_back(
          {{"nodes", names_json(P, F.forest.nodes)}, {"jmap", jm}});
    }
  }
  out["result"] = {{"count", list.size()}, {"forests", list}};
  emit(out, opt.text,
       text.empty() ? std::to_string(list.size()) + " forests" : text);
  return 0;
}

int run_center(const Options& opt) {
  Interval P = interval_from_file(opt.input);
  ClassRegistry reg = make_registry();
  json out = {{"command", "center"}, {"input_digest", input_digest(P)}};
  out["result"] = {{"center", names_json(P, center(P, reg))},
                   {"prime_center", names_json(P, prime_center(P, reg))},
                   {"decomposable", is_decomposable(P, reg)}};
  emit(out, opt.text, out["result"].dump(2));
  return 0;
}

int run_factor(const Options& opt) {
  Interval P = interval_from_file(opt.input);
  ClassRegistry reg = make_registry();
  Factorization f = factor_indecomposable(P, reg);
  json factors = json::array();
  for (auto& [id, a] : f.factors)
    factors.push_back({{"class", reg.name(id)}, {"witness", P.name(a)}});
  json out = {{"command", "factor"},
              {"input_digest", input_digest(P)},
              {"result",
               {{"factors", factors},
                {"complete", f.complete},
                {"monomial", monomial_json(class_monomial(P, reg), reg)}}},
              {"registry", registry_json(reg)}};
  emit(out, opt.text, class_monomial(P, reg).to_string(reg));
  return 0;
}

int run_check(const std::string& what, const Options& opt) {
  ClassRegistry reg = make_registry();
  if (what == "family") {
    std::vector<Interval> gens;
    json inputs = json::array();
    for (const auto& path : opt.inputs) {
      gens.push_back(interval_from_file(path));
      inputs.push_back(input_digest(gens.back()));
    }
    bool ok = family_upper_indecomposable(gens, reg);
    json out = {{"command", "check family"},
                {"inputs", inputs},
                {"note",
                 "verdict covers only the subinterval closure of the given "
                 "generators"},
                {"result", {{"upper_indecomposable", ok}}}};
    emit(out, opt.text,
         std::string("family upper-indecomposable: ") + (ok ? "yes" : "no"));
    return 0;
  }
  Interval P = interval_from_file(opt.input);
  if (what == "sui") {
    bool ok = is_sui(P, reg);
    json out = {{"command", "check sui"},
                {"input_digest", input_digest(P)},
                {"result", {{"sui", ok}}}};
    emit(out, opt.text, std::string("s.u.i.: ") + (ok ? "yes" : "no"));
    return 0;
  }
  // cancellation
  CancellationReport rep = cancellation_report(P, reg);
  json pairs = json::array();
  for (auto& [f1, f2] : rep.canceling_pairs)
    pairs.push_back({names_json(P, f1.nodes), names_json(P, f2.nodes)});
  json out = {{"command", "check cancellation"},
              {"input_digest", input_digest(P)},
              {"result",
               {{"cancellation_free", rep.is_cancellation_free},
                {"canceling_pairs", pairs}}}};
  if (opt.trace) {
    json groups = json::array();
    ClassRegistry& r = reg;
    for (auto& [m, g] : rep.groups) {
      json members = json::array();
      for (auto& [F, sign] : g)
        members.push_back({{"nodes", names_json(P, F.nodes)}, {"sign", sign}});
      groups.push_back(
          {{"theta", monomial_json(m, r)}, {"forests", members}});
    }
    out["result"]["groups"] = groups;
  }
  emit(out, opt.text,
       std::string("cancellation-free: ") +
           (rep.is_cancellation_free ? "yes" : "no"));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"antipodes of incidence Hopf algebras of finite intervals"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;

  auto* antipode = app.add_subcommand("antipode", "chain/forest antipode");
  antipode->add_option("--input", opt.input)->required();
  antipode->add_option("--engine", opt.engine)
      ->check(CLI::IsMember({"chains", "forests", "both"}));
  antipode->add_flag("--poset", opt.poset);
  antipode->add_flag("--trace", opt.trace);
  antipode->add_option("--registry", opt.registry_out);

  auto* mobius = app.add_subcommand("mobius", "Mobius function mu(0,1)");
  mobius->add_option("--input", opt.input)->required();

  auto* forests = app.add_subcommand("forests", "list forests");
  forests->add_option("--input", opt.input)->required();
  forests->add_flag("--poset", opt.poset);

  auto* center_cmd = app.add_subcommand("center", "center and prime center");
  center_cmd->add_option("--input", opt.input)->required();

  auto* factor = app.add_subcommand("factor", "indecomposable factorization");
  factor->add_option("--input", opt.input)->required();

  auto* check = app.add_subcommand("check", "structural checks");
  check->require_subcommand(1);
  auto* sui = check->add_subcommand("sui", "super-upper-indecomposability");
  sui->add_option("--input", opt.input)->required();
  auto* canc = check->add_subcommand("cancellation", "cancellation report");
  canc->add_option("--input", opt.input)->required();
  canc->add_flag("--trace", opt.trace);
  auto* fam = check->add_subcommand("family", "family-level check");
  fam->add_option("--inputs", opt.inputs)->required()->expected(-1);

  auto* family = app.add_subcommand("family", "builtin family builders");
  family->require_subcommand(1);
  int n = 3, which = 1, top_color = 1, max_size = 8;
  std::uint64_t seed = 1;
  std::vector<int> counts;
  auto* f_part = family->add_subcommand("partition", "partition lattice");
  f_part->add_option("--n", n)->required();
  auto* f_bool = family->add_subcommand("boolean", "boolean lattice");
  f_bool->add_option("--n", n)->required();
  auto* f_chain = family->add_subcommand("chain", "chain lattice");
  f_chain->add_option("--n", n)->required();
  auto* f_col = family->add_subcommand("colored", "colored partition poset");
  f_col->add_option("--counts", counts)->required()->delimiter(',');
  f_col->add_option("--top-color", top_color);
  auto* f_fig = family->add_subcommand("figure", "worked example lattices");
  f_fig->add_option("--which", which)->required();
  auto* f_ide = family->add_subcommand("ideals", "order-ideal lattice");
  f_ide->add_option("--input", opt.input)->required();
  auto* f_rand = family->add_subcommand("random", "seeded random interval");
  f_rand->add_option("--seed", seed);
  f_rand->add_option("--max-size", max_size);

  app.add_flag("--text", opt.text);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  auto started = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (antipode->parsed()) rc = run_antipode(opt);
    else if (mobius->parsed()) rc = run_mobius(opt);
    else if (forests->parsed()) rc = run_forests(opt);
    else if (center_cmd->parsed()) rc = run_center(opt);
    else if (factor->parsed()) rc = run_factor(opt);
    else if (check->parsed()) {
      if (sui->parsed()) rc = run_check("sui", opt);
      else if (canc->parsed()) rc = run_check("cancellation", opt);
      else rc = run_check("family", opt);
    } else if (family->parsed()) {
      Interval P = f_part->parsed()  ? partition_lattice(n)
                   : f_bool->parsed() ? boolean_lattice(n)
                   : f_chain->parsed() ? chain_lattice(n)
                   : f_col->parsed()
                       ? colored_partition_poset(counts, top_color)
                   : f_fig->parsed() ? figure_lattice(which)
                   : f_ide->parsed()
                       ? [&] {
                           RawPoset q = poset_from_json(
                               json_from_file(opt.input));
                           return distributive_lattice_of_ideals(
                               q.n, q.covers, q.names);
                         }()
                       : random_interval(seed, max_size);
      std::cout << interval_to_json(P).dump(2) << "\n";
    }
  } catch (const InternalInvariant& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const HopfError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  std::cerr << "elapsed_ms=" << elapsed << "\n";
  return rc;
}

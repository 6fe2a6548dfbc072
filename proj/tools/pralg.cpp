// pralg: batch CLI over the description-term library.
//
// Exit codes: 0 success; 1 domain errors (parse, arity, fuel, schema);
// 2 refutations / check violations; 3 budget exhaustion (Unknown);
// 64 usage errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <pralg/pralg.hpp>

namespace {

using namespace pralg;

// A term argument is a file path if such a file exists, otherwise inline
// text. Content starting with '{' is JSON, anything else is the DSL.
Term load_term(const std::string& arg) {
  std::string text = arg;
  std::ifstream in(arg);
  if (in.good()) {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return from_json(text);
  return parse(text);
}

Tuple parse_input(const std::string& csv) {
  Tuple out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    out.emplace_back(cur);
    cur.clear();
  };
  for (char c : csv) {
    if (c == ',' || c == ' ') flush();
    else if (c >= '0' && c <= '9') cur += c;
    else throw Error(std::string("--input: unexpected character '") + c + "'");
  }
  flush();
  return out;
}

std::string tuple_str(const Tuple& t) { return show_tuple(t); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pralg: primitive-recursive description terms, rewriting, and Rdepth"};
  app.require_subcommand(1);

  std::string term_text, left_text, right_text, input_csv, proof_path, name;
  std::string groups_text = "I,II,Defn";
  std::int64_t fuel = kDefaultFuel;
  std::size_t budget = 10000, samples = 100;
  std::uint64_t seed = 0, max_value = 50;
  int n = 1, max_n = 4, trials = 1000, max_depth = 7;
  bool grz = false, list_rules = false;

  auto* c_check = app.add_subcommand("check", "type-check a term, print its arity");
  c_check->add_option("--term", term_text)->required();

  auto* c_eval = app.add_subcommand("eval", "evaluate a term on a tuple");
  c_eval->add_option("--term", term_text)->required();
  c_eval->add_option("--input", input_csv, "comma-separated naturals");
  c_eval->add_option("--fuel", fuel);

  auto* c_print = app.add_subcommand("print", "parse and reprint canonically");
  c_print->add_option("--term", term_text)->required();

  auto* c_dot = app.add_subcommand("dot", "emit the tree as DOT");
  c_dot->add_option("--term", term_text)->required();

  auto* c_json = app.add_subcommand("json", "emit the term as JSON");
  c_json->add_option("--term", term_text)->required();

  auto* c_prune = app.add_subcommand("prune", "remove group-I waste");
  c_prune->add_option("--term", term_text)->required();

  auto* c_simp = app.add_subcommand("simplify", "normalize with the oriented subset");
  c_simp->add_option("--term", term_text)->required();

  auto* c_rw = app.add_subcommand("rewrite", "rule catalog utilities");
  c_rw->add_flag("--list", list_rules, "list the rule catalog");

  auto* c_equiv = app.add_subcommand("equiv", "prove or refute equivalence");
  c_equiv->add_option("--left", left_text)->required();
  c_equiv->add_option("--right", right_text)->required();
  c_equiv->add_option("--budget", budget);
  c_equiv->add_option("--groups", groups_text, "any of I,II,III,Defn,Derived");
  c_equiv->add_option("--seed", seed);

  auto* c_replay = app.add_subcommand("replay", "replay a proof certificate");
  c_replay->add_option("--start", term_text)->required();
  c_replay->add_option("--proof", proof_path, "JSON step list (file or inline)")->required();

  auto* c_rd = app.add_subcommand("rdepth", "recursion nesting depth");
  c_rd->add_option("--term", term_text)->required();
  c_rd->add_flag("--grz", grz, "also print the Grzegorczyk class");

  auto* c_min = app.add_subcommand("min-rdepth", "search for a lower-Rdepth equivalent");
  c_min->add_option("--term", term_text)->required();
  c_min->add_option("--budget", budget);
  c_min->add_option("--groups", groups_text);

  auto* c_t2 = app.add_subcommand("theorem2", "Rdepth behaviour under single steps");
  c_t2->add_option("--trials", trials);
  c_t2->add_option("--max-depth", max_depth);
  c_t2->add_option("--seed", seed);

  auto* c_scheme = app.add_subcommand("scheme", "emit one scheme member");
  c_scheme->add_option("--name", name)->required();
  c_scheme->add_option("--n", n)->required();

  auto* c_prof = app.add_subcommand("profile", "rdepth profile of a scheme, as CSV");
  c_prof->add_option("--name", name)->required();
  c_prof->add_option("--max-n", max_n)->required();

  auto* c_ext = app.add_subcommand("exteq", "randomized extensional equality");
  c_ext->add_option("--left", left_text)->required();
  c_ext->add_option("--right", right_text)->required();
  c_ext->add_option("--samples", samples);
  c_ext->add_option("--max-value", max_value);
  c_ext->add_option("--seed", seed);
  c_ext->add_option("--fuel", fuel);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 64;
  }

  try {
    if (c_check->parsed()) {
      Term t = load_term(term_text);
      std::cout << t.src().k << " -> " << t.dst().k << "\n";
    } else if (c_eval->parsed()) {
      Term t = load_term(term_text);
      std::cout << tuple_str(eval(t, parse_input(input_csv), fuel)) << "\n";
    } else if (c_print->parsed()) {
      std::cout << print(load_term(term_text)) << "\n";
    } else if (c_dot->parsed()) {
      std::cout << to_dot(load_term(term_text));
    } else if (c_json->parsed()) {
      std::cout << to_json(load_term(term_text)) << "\n";
    } else if (c_prune->parsed()) {
      std::cout << print(prune(load_term(term_text))) << "\n";
    } else if (c_simp->parsed()) {
      std::cout << print(simplify(load_term(term_text))) << "\n";
    } else if (c_rw->parsed()) {
      if (!list_rules) {
        std::cerr << "rewrite: nothing to do (try --list)\n";
        return 64;
      }
      for (const Rule& r : rule_catalog())
        std::cout << r.name << "\t" << group_name(r.group) << "\t"
                  << (r.bidirectional ? "bidirectional" : "oriented") << "\t" << r.equation
                  << "\n";
    } else if (c_equiv->parsed()) {
      Term l = load_term(left_text), r = load_term(right_text);
      EquivResult res = equiv(l, r, budget, parse_groups(groups_text), seed);
      if (auto* p = std::get_if<Proved>(&res)) {
        std::cout << proof_to_json(p->proof).dump() << "\n";
      } else if (auto* q = std::get_if<Refuted>(&res)) {
        std::cout << "refuted: witness=(" << tuple_str(q->witness) << ") left=("
                  << tuple_str(q->left) << ") right=(" << tuple_str(q->right) << ")\n";
        return 2;
      } else {
        std::cout << "unknown: states=" << std::get<Unknown>(res).states_explored << "\n";
        return 3;
      }
    } else if (c_replay->parsed()) {
      Term start = load_term(term_text);
      std::string text = proof_path;
      std::ifstream in(proof_path);
      if (in.good()) {
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
      }
      nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
      if (j.is_discarded()) throw SchemaError("$: proof is not valid JSON");
      std::cout << print(replay(start, steps_from_json(j))) << "\n";
    } else if (c_rd->parsed()) {
      Term t = load_term(term_text);
      std::cout << rdepth(t) << "\n";
      if (grz) std::cout << "E^" << grz_bound(t).index << "\n";
    } else if (c_min->parsed()) {
      auto res = min_rdepth(load_term(term_text), budget, parse_groups(groups_text));
      std::cout << "bound=" << res.bound << "\n";
      std::cout << "witness=" << print(res.witness) << "\n";
    } else if (c_t2->parsed()) {
      auto rep = theorem2_check(trials, max_depth, seed);
      std::cout << "trials=" << rep.trials << " max-depth=" << max_depth << " seed=" << seed
                << "\n";
      std::cout << "group II: steps=" << rep.group2_steps
                << " violations=" << rep.group2_violations << "\n";
      std::cout << "group I: steps=" << rep.group1_steps
                << " violations=" << rep.group1_violations << "\n";
      if (!rep.ok()) {
        std::cout << "counterexample: " << rep.counterexample << "\n";
        return 2;
      }
    } else if (c_scheme->parsed()) {
      auto s = scheme_by_name(name);
      if (!s) throw Error("unknown scheme '" + name + "'");
      std::cout << print(s->generate(n)) << "\n";
    } else if (c_prof->parsed()) {
      auto s = scheme_by_name(name);
      if (!s) throw Error("unknown scheme '" + name + "'");
      auto prof = scheme_profile(*s, max_n);
      std::cout << "n,rdepth\n";
      for (auto [i, d] : prof.values) std::cout << i << "," << d << "\n";
    } else if (c_ext->parsed()) {
      Term l = load_term(left_text), r = load_term(right_text);
      Verdict v = ext_equal(l, r, samples, max_value, seed, fuel);
      if (auto* e = std::get_if<Equal>(&v)) {
        std::cout << "equal: samples=" << e->samples << "\n";
      } else {
        auto& ne = std::get<NotEqual>(v);
        std::cout << "not-equal: witness=(" << tuple_str(ne.witness) << ") left=("
                  << tuple_str(ne.left) << ") right=(" << tuple_str(ne.right) << ")\n";
        return 2;
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

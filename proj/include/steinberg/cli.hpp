#ifndef STEINBERG_CLI_HPP_
#define STEINBERG_CLI_HPP_

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "config.hpp"
#include "congruence.hpp"
#include "cylinder.hpp"
#include "error.hpp"
#include "finite_algebra.hpp"
#include "graph.hpp"
#include "groupoid.hpp"
#include "lpa.hpp"
#include "parse.hpp"
#include "verify.hpp"

namespace steinberg::cli {

  enum ExitCode { ok = 0, usage = 1, out_of_scope = 2 };

  // Text or key=value lines.
  class Report {
   public:
    Report(std::ostream& out, bool machine) : _out(out), _machine(machine) {}

    void fact(std::string const& key, std::string const& label, std::string const& value) {
      if (_machine) {
        _out << key << '=' << value << '\n';
      } else {
        _out << label << ": " << value << '\n';
      }
    }
    void text(std::string const& line) {
      if (!_machine) {
        _out << line << '\n';
      }
    }
    bool machine() const {
      return _machine;
    }

   private:
    std::ostream& _out;
    bool          _machine;
  };

  inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ValidationError("cannot read file " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  // A graph file, or one of the built-in names E2, E4, R1, R2, Romega.
  inline std::shared_ptr<Graph const> load_graph(std::string const& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
      return std::make_shared<Graph const>(parse_graph(read_file(arg)));
    }
    for (auto name : {"E2", "E4", "R1", "R2", "Romega"}) {
      if (arg == name) {
        return builtin_graph(name);
      }
    }
    throw ValidationError("no graph file or built-in graph named " + arg);
  }

  inline char const* yes_no(bool b) {
    return b ? "YES" : "NO";
  }
  inline char const* bool_str(bool b) {
    return b ? "true" : "false";
  }

  inline void analyze(Graph const& g, Limits const& limits, Report& r) {
    std::vector<vertex_type> order(g.num_vertices());
    for (vertex_type v = 0; v < order.size(); ++v) {
      order[v] = v;
    }
    std::sort(order.begin(), order.end(), [&](auto a, auto b) {
      return g.vertex_id(a) < g.vertex_id(b);
    });
    r.fact("vertices", "vertices", std::to_string(g.num_vertices()));
    for (auto v : order) {
      r.fact("vertex." + g.vertex_id(v), "vertex " + g.vertex_id(v),
             to_string(g.classify(v)));
    }
    r.fact("row_finite", "row-finite", bool_str(g.is_row_finite()));
    std::string cycles;
    for (auto const& c : enumerate_cycles(g)) {
      cycles += (cycles.empty() ? "" : ";") + to_string(g, c.path)
                + (c.infinite_family ? "[infinite family]" : "");
    }
    r.fact("cycles", "cycles", cycles.empty() ? "none" : cycles);
    r.fact("condition_L", "condition (L)", bool_str(condition_L(g)));
    if (g.num_vertices() <= limits.max_vertices) {
      std::string hs;
      for (auto const& h : all_hereditary_saturated(g, limits)) {
        hs += (hs.empty() ? "" : ",") + to_string(g, h);
      }
      r.fact("hs", "hereditary saturated sets", hs);
    } else {
      r.fact("hs", "hereditary saturated sets", "skipped (over max_vertices)");
    }
    r.fact("trivial_hs", "only trivial hereditary saturated sets", bool_str(only_trivial_hs(g)));
    for (auto name : {"B", "Q", "N"}) {
      auto const d   = steinberg_simple_decision(g, instantiate_semiring(name));
      auto const tag = std::string(name);
      if (r.machine()) {
        r.fact("simple." + tag, "", bool_str(d.simple));
        r.fact("reason." + tag, "", d.reason());
      } else {
        auto const label = tag == "B"   ? std::string("congruence-simple over B")
                           : tag == "Q" ? std::string("congruence-simple over a field (Q)")
                                        : std::string("congruence-simple over N");
        r.fact("", label, std::string(yes_no(d.simple)) + " (" + d.to_string() + ")");
      }
    }
  }

  inline FiniteAlgebra builtin_algebra(std::string const& name, Limits const& limits) {
    auto number = [&](std::size_t from) -> std::size_t {
      auto const digits = name.substr(from);
      if (digits.empty() || digits.size() > 3
          || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
        throw ValidationError("unknown algebra " + name);
      }
      return std::stoul(digits);
    };
    if (name == "B") {
      return function_algebra(1, limits);
    }
    if (name.rfind("fun", 0) == 0) {
      return function_algebra(number(3), limits);
    }
    if (name.rfind("BZ", 0) == 0) {
      return group_semiring(cyclic_group(number(2)), limits);
    }
    if (name.rfind("M", 0) == 0) {
      return matrix_semiring(number(1), limits);
    }
    if (name.rfind("steinberg:", 0) == 0) {
      return steinberg_finite(build_groupoid(name.substr(10), limits), limits);
    }
    throw ValidationError("unknown algebra " + name
                          + " (expected B, fun<n>, M<n>, BZ<n>, steinberg:<groupoid>)");
  }

  inline void congruences(FiniteAlgebra const& alg, Report& r) {
    r.fact("size", "carrier size", std::to_string(alg.size()));
    r.fact("additively_idempotent", "additively idempotent",
           bool_str(alg.additively_idempotent()));
    if (auto bad = check_hemiring_axioms(alg)) {
      r.fact("hemiring", "hemiring axioms", "violated: " + *bad);
      return;
    }
    if (alg.size() <= 64) {
      r.fact("congruences", "congruences", std::to_string(all_congruences(alg).size()));
    } else {
      r.fact("congruences", "congruences", "not enumerated (carrier over 64)");
    }
    if (alg.size() < 2) {
      r.fact("simple", "congruence-simple", "undefined (zero hemiring)");
      return;
    }
    auto const v = is_congruence_simple(alg);
    r.fact("simple", "congruence-simple", bool_str(v.simple));
    if (v.witness) {
      r.fact("witness_pair", "witness pair",
             std::to_string(v.witness_pair->first) + "," + std::to_string(v.witness_pair->second));
      r.fact("witness", "witness congruence (block of each index)", to_string(*v.witness));
    }
  }

  inline int print_suite(SuiteResult const& s, Report& r) {
    r.fact("suite." + s.name, s.name,
           std::string(s.passed() ? "PASS" : "FAIL") + " (" + std::to_string(s.cases)
               + " cases, " + std::to_string(s.failures) + " failures)");
    for (auto const& n : s.notes) {
      r.text("  " + n);
    }
    return s.passed() ? 0 : 1;
  }

  // Runs one command line (without the program name).
  inline int run_command(std::vector<std::string> const& args,
                         std::ostream&                   out,
                         std::ostream&                   err) {
    CLI::App app{"Steinberg algebras over B: graph groupoids, cylinder sets and Leavitt path algebras",
                 "steinberg"};
    app.require_subcommand(1);
    Limits limits;
    try {
      limits = Limits::from_env();
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    }
    bool machine = false;
    app.add_option("--max-carrier", limits.max_carrier, "largest explicit algebra");
    app.add_option("--max-vertices", limits.max_vertices, "largest vertex set for subset enumeration");
    app.add_option("--seed", limits.seed, "seed for randomized runs");
    app.add_flag("--machine", machine, "key=value output");
    app.fallthrough();

    std::string graph_arg, expr1, expr2, poly, algebra, file, suite = "all", demo_name;
    std::vector<std::string> seed_vertices;
    std::size_t              cycle_index = 0, pairs = 20, triples = 100;

    auto* c_analyze = app.add_subcommand("analyze", "vertex classes, cycles, Condition (L), H&S sets, simpleness");
    c_analyze->add_option("graph", graph_arg, "graph file or built-in name")->required();

    auto* c_closure = app.add_subcommand("closure", "hereditary saturated closure of vertices");
    c_closure->add_option("graph", graph_arg)->required();
    c_closure->add_option("vertices", seed_vertices)->required();

    auto* c_cycles = app.add_subcommand("cycles", "list cycles");
    c_cycles->add_option("graph", graph_arg)->required();

    auto* c_eval = app.add_subcommand("eval", "canonical form of an expression, or p(c) with --poly");
    c_eval->add_option("graph", graph_arg)->required();
    c_eval->add_option("expr", expr1);
    c_eval->add_option("--poly", poly, "Laurent polynomial such as '1 + x + x^-2'");
    c_eval->add_option("--cycle", cycle_index, "index into the cycle list");

    auto* c_eq = app.add_subcommand("eq", "equality of two expressions");
    c_eq->add_option("graph", graph_arg)->required();
    c_eq->add_option("lhs", expr1)->required();
    c_eq->add_option("rhs", expr2)->required();

    auto* c_image = app.add_subcommand("image", "is the element in the image of pi_E");
    c_image->add_option("graph", graph_arg)->required();
    c_image->add_option("expr", expr1)->required();

    auto* c_cong = app.add_subcommand("congruences", "congruences of a finite algebra");
    c_cong->add_option("algebra", algebra, "B, fun<n>, M<n>, BZ<n>, steinberg:<groupoid>");
    c_cong->add_option("--file", file, "algebra table file");

    auto* c_verify = app.add_subcommand("verify", "run the oracle suites");
    c_verify->add_option("suite", suite, "theorem, decision, oracle, laws or all");
    c_verify->add_option("--pairs", pairs, "random pairs per graph for the oracle suite");
    c_verify->add_option("--triples", triples, "random triples per graph for the law suite");

    auto* c_demo = app.add_subcommand("demo", "worked examples");
    c_demo->add_option("name", demo_name, "rose-omega")->required();

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? ok : usage;
    }

    Report r(out, machine);
    try {
      if (c_analyze->parsed()) {
        analyze(*load_graph(graph_arg), limits, r);
      } else if (c_closure->parsed()) {
        auto const g = load_graph(graph_arg);
        VertexSet  seed(g->num_vertices(), false);
        for (auto const& id : seed_vertices) {
          seed[g->vertex(id)] = true;
        }
        r.fact("closure", "closure", to_string(*g, hs_closure(*g, seed)));
      } else if (c_cycles->parsed()) {
        auto const g = load_graph(graph_arg);
        auto const cs = enumerate_cycles(*g);
        r.fact("count", "cycles", std::to_string(cs.size()));
        for (std::size_t i = 0; i < cs.size(); ++i) {
          r.fact("cycle." + std::to_string(i), "cycle " + std::to_string(i),
                 to_string(*g, cs[i].path) + " base=" + g->vertex_id(cs[i].path.start)
                     + " exit=" + bool_str(cycle_has_exit(*g, cs[i]))
                     + (cs[i].infinite_family ? " infinite-family" : ""));
        }
      } else if (c_eval->parsed()) {
        auto const g = load_graph(graph_arg);
        if (!poly.empty()) {
          auto const cs = enumerate_cycles(*g);
          if (cycle_index >= cs.size()) {
            throw ValidationError("graph has no cycle with index " + std::to_string(cycle_index));
          }
          auto const t = eval_cycle_poly(g, parse_laurent(poly), cs[cycle_index]);
          r.fact("term", "term", to_string(t));
          r.fact("pi_E", "pi_E", to_string(pi_E(t)));
        } else {
          if (expr1.empty()) {
            throw ValidationError("eval needs an expression or --poly");
          }
          auto const x = parse_element_expr(g, expr1);
          if (auto const* t = std::get_if<LpaTerm>(&x)) {
            r.fact("term", "term", to_string(*t));
            r.fact("pi_E", "pi_E", to_string(pi_E(*t)));
          } else {
            r.fact("element", "element", to_string(x));
          }
        }
      } else if (c_eq->parsed()) {
        auto const g = load_graph(graph_arg);
        auto const a = parse_element_expr(g, expr1);
        auto const b = parse_element_expr(g, expr2);
        bool       equal;
        if (std::holds_alternative<LpaTerm>(a) && std::holds_alternative<LpaTerm>(b)) {
          equal = lpa_equals(std::get<LpaTerm>(a), std::get<LpaTerm>(b));
        } else {
          equal = equals(as_steinberg(a), as_steinberg(b));
        }
        if (machine) {
          out << "equal=" << bool_str(equal) << '\n';
        } else {
          out << bool_str(equal) << '\n';
        }
      } else if (c_image->parsed()) {
        auto const g = load_graph(graph_arg);
        auto const x = as_steinberg(parse_element_expr(g, expr1));
        r.fact("element", "element", to_string(x));
        r.fact("in_image", "in image of pi_E", bool_str(in_pi_image(x)));
      } else if (c_cong->parsed()) {
        if (file.empty() == algebra.empty()) {
          throw ValidationError("congruences needs exactly one of an algebra name or --file");
        }
        auto const alg = file.empty() ? builtin_algebra(algebra, limits)
                                      : parse_algebra(read_file(file));
        if (alg.size() > limits.max_carrier) {
          throw BoundExceeded("carrier over max_carrier=" + std::to_string(limits.max_carrier));
        }
        congruences(alg, r);
      } else if (c_verify->parsed()) {
        int  status = 0;
        bool known  = false;
        if (suite == "theorem" || suite == "all") {
          known = true;
          status |= print_suite(verify_theorem_suite(limits), r);
        }
        if (suite == "decision" || suite == "all") {
          known = true;
          status |= print_suite(verify_decision_suite(limits), r);
        }
        if (suite == "oracle" || suite == "all") {
          known = true;
          status |= print_suite(verify_oracle_suite(limits.seed, pairs), r);
        }
        if (suite == "laws" || suite == "all") {
          known = true;
          for (auto name : {"E2", "R1", "R2", "Romega"}) {
            auto s = verify_laws_suite(builtin_graph(name), limits.seed, triples);
            s.name += " " + std::string(name);
            status |= print_suite(s, r);
          }
        }
        if (!known) {
          throw ValidationError("unknown suite " + suite);
        }
        return status;
      } else if (c_demo->parsed()) {
        if (demo_name != "rose-omega") {
          throw ValidationError("unknown demo " + demo_name + " (available: rose-omega)");
        }
        out << rose_omega_demo();
      }
    } catch (OutOfScope const& e) {
      err << "out of scope: " << e.what() << '\n';
      return out_of_scope;
    } catch (BoundExceeded const& e) {
      err << "bound exceeded: " << e.what() << '\n';
      return out_of_scope;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    }
    return ok;
  }

}  // namespace steinberg::cli

#endif  // STEINBERG_CLI_HPP_

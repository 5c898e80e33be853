#ifndef STEINBERG_VERIFY_HPP_
#define STEINBERG_VERIFY_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "congruence.hpp"
#include "cylinder.hpp"
#include "graph.hpp"
#include "groupoid.hpp"
#include "lpa.hpp"

namespace steinberg {

  struct SuiteResult {
    std::string              name;
    std::size_t              cases    = 0;
    std::size_t              failures = 0;
    std::vector<std::string> notes;  // first few failures

    bool passed() const {
      return failures == 0;
    }
    void fail(std::string what) {
      ++failures;
      if (notes.size() < 5) {
        notes.push_back(std::move(what));
      }
    }
  };

  // Every graph on vertices a, b, c (first k of them) whose edge multiset
  // has at most max_edges edges and no cycles; edges are named e0, e1, ...
  inline std::vector<std::shared_ptr<Graph const>>
  acyclic_family(std::size_t max_vertices = 3, std::size_t max_edges = 3) {
    std::vector<std::shared_ptr<Graph const>> out;
    for (std::size_t n = 1; n <= max_vertices; ++n) {
      std::vector<std::pair<std::size_t, std::size_t>> arcs;
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t r = 0; r < n; ++r) {
          if (s != r) {
            arcs.emplace_back(s, r);
          }
        }
      }
      // Non-decreasing index sequences enumerate multisets.
      std::vector<std::size_t> pick;
      auto rec = [&](auto&& self, std::size_t from) -> void {
        auto g = std::make_shared<Graph>();
        for (std::size_t v = 0; v < n; ++v) {
          g->add_vertex(std::string(1, static_cast<char>('a' + v)));
        }
        for (std::size_t i = 0; i < pick.size(); ++i) {
          auto [s, r] = arcs[pick[i]];
          g->add_edge("e" + std::to_string(i), g->vertex_id(static_cast<vertex_type>(s)),
                      g->vertex_id(static_cast<vertex_type>(r)));
        }
        if (is_acyclic_graph(*g)) {
          out.push_back(g);
        }
        if (pick.size() == max_edges) {
          return;
        }
        for (std::size_t a = from; a < arcs.size(); ++a) {
          pick.push_back(a);
          self(self, a);
          pick.pop_back();
        }
      };
      rec(rec, 0);
    }
    return out;
  }

  inline std::vector<std::pair<std::string, FiniteGroupoid>> groupoid_suite(Limits const& limits = {}) {
    std::vector<std::pair<std::string, FiniteGroupoid>> out;
    for (auto spec : {"pair1", "pair2", "pair3", "z2", "z3", "pair1+pair1", "pair2+pair1",
                      "pair1+pair1+pair1", "z2+pair1", "pair2+pair1+pair1", "pair2+z2",
                      "z3+z2+pair1", "z2+z2+z2", "pair1+z2+z3"}) {
      out.emplace_back(spec, build_groupoid(spec, limits));
    }
    return out;
  }

  // Table-based congruence-simpleness against minimal and effective.
  inline SuiteResult verify_theorem_suite(Limits const& limits = {}) {
    SuiteResult r{"groupoid theorem", 0, 0, {}};
    for (auto const& [name, g] : groupoid_suite(limits)) {
      ++r.cases;
      auto const rep = verify_simpleness_theorem(g, limits);
      if (!rep.agrees()) {
        r.fail(name + ": congruence-simple=" + (rep.congruence_simple ? "true" : "false")
               + " minimal&effective=" + (rep.minimal && rep.effective ? "true" : "false"));
      }
    }
    return r;
  }

  // The graph-level decision against the finite groupoid oracle.
  inline SuiteResult verify_decision_suite(Limits const& limits = {}) {
    SuiteResult r{"graph decision", 0, 0, {}};
    auto const  B = instantiate_semiring("B");
    for (auto const& g : acyclic_family()) {
      ++r.cases;
      auto const decided = steinberg_simple_decision(*g, B).simple;
      auto const gg      = graph_groupoid_finite(*g, limits);
      auto const oracle  = is_congruence_simple(steinberg_basis(gg.groupoid), limits);
      if (decided != oracle) {
        r.fail(write_graph(*g));
      }
    }
    return r;
  }

  // add, mul and star against union, set product and inverse in the finite
  // Steinberg algebra of the graph groupoid.
  inline SuiteResult verify_oracle_suite(std::uint64_t seed, std::size_t random_pairs) {
    SuiteResult     r{"cylinder oracle", 0, 0, {}};
    std::mt19937_64 rng(seed);
    for (auto const& g : acyclic_family()) {
      auto const gg    = graph_groupoid_finite(*g);
      auto const basis = steinberg_basis(gg.groupoid);
      auto inverse     = [&](mask_type m) {
        mask_type out = 0;
        for (; m; m &= m - 1) {
          out |= mask_type(1) << gg.groupoid.inverse[std::countr_zero(m)];
        }
        return out;
      };
      std::vector<SteinbergElt> elts;
      for (vertex_type v = 0; v < g->num_vertices(); ++v) {
        elts.push_back(indicator_vertex(g, v));
      }
      for (std::uint32_t f = 0; f < g->families().size(); ++f) {
        elts.push_back(indicator_edge(g, {f, 0}));
        elts.push_back(indicator_ghost(g, {f, 0}));
      }
      auto check = [&](SteinbergElt const& a, SteinbergElt const& b) {
        ++r.cases;
        auto const oa = to_finite_oracle(gg, a);
        auto const ob = to_finite_oracle(gg, b);
        if (to_finite_oracle(gg, add(a, b)) != (oa | ob)
            || to_finite_oracle(gg, mul(a, b)) != basis.mul(oa, ob)
            || to_finite_oracle(gg, star(a)) != inverse(oa)) {
          r.fail(write_graph(*g) + to_string(a) + " , " + to_string(b));
        }
      };
      for (auto const& a : elts) {
        for (auto const& b : elts) {
          check(a, b);
        }
      }
      for (std::size_t i = 0; i < random_pairs; ++i) {
        check(random_element(g, rng), random_element(g, rng));
      }
    }
    return r;
  }

  inline std::shared_ptr<Graph const> builtin_graph(std::string const& name) {
    auto g = std::make_shared<Graph>();
    if (name == "E2") {
      g->add_vertex("v");
      g->add_vertex("w");
      g->add_edge("e", "v", "w");
    } else if (name == "E4") {
      g->add_vertex("v");
      g->add_vertex("w");
      g->add_edge("e", "v", "w");
      g->add_edge("f", "v", "w");
    } else if (name == "R1") {
      g->add_vertex("v");
      g->add_edge("c", "v", "v");
    } else if (name == "R2") {
      g->add_vertex("v");
      g->add_edge("e", "v", "v");
      g->add_edge("f", "v", "v");
    } else if (name == "Romega") {
      return rose_omega();
    } else {
      throw ValidationError("unknown built-in graph " + name);
    }
    return g;
  }

  // Semiring and involution laws on random elements.
  inline SuiteResult verify_laws_suite(std::shared_ptr<Graph const> const& g,
                                       std::uint64_t                       seed,
                                       std::size_t                         triples) {
    SuiteResult     r{"semiring laws", 0, 0, {}};
    std::mt19937_64 rng(seed);
    auto const      one = unit_element(g);
    for (std::size_t i = 0; i < triples; ++i) {
      auto const a = random_element(g, rng);
      auto const b = random_element(g, rng);
      auto const c = random_element(g, rng);
      ++r.cases;
      bool ok = add(add(a, b), c) == add(a, add(b, c)) && add(a, b) == add(b, a)
                && mul(mul(a, b), c) == mul(a, mul(b, c))
                && mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
                && mul(add(a, b), c) == add(mul(a, c), mul(b, c)) && add(a, a) == a
                && add(a, zero(g)) == a && mul(a, zero(g)).is_zero()
                && star(add(a, b)) == add(star(a), star(b))
                && star(mul(a, b)) == mul(star(b), star(a)) && star(star(a)) == a
                && mul(one, a) == a && mul(a, one) == a;
      if (!ok) {
        r.fail(to_string(a) + " | " + to_string(b) + " | " + to_string(c));
      }
    }
    return r;
  }

}  // namespace steinberg

#endif  // STEINBERG_VERIFY_HPP_

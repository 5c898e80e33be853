#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace steinberg;

namespace {

  using G = std::shared_ptr<Graph const>;

  LpaTerm V(G const& g, std::string const& v) {
    return lpa_vertex(g, g->vertex(v));
  }
  LpaTerm E(G const& g, std::string const& e) {
    return lpa_edge(g, g->parse_edge(e));
  }
  LpaTerm Es(G const& g, std::string const& e) {
    return lpa_ghost(g, g->parse_edge(e));
  }

  LpaTerm random_term(G const& g, std::mt19937_64& rng) {
    std::set<Monomial> ms;
    std::uniform_int_distribution<int> count(0, 3);
    for (int i = count(rng); i > 0; --i) {
      auto const c = random_cylinder(*g, rng);
      ms.insert({c.alpha, c.beta});
    }
    return LpaTerm(g, ms);
  }

  Cycle only_cycle(Graph const& g) {
    auto const cs = enumerate_cycles(g);
    EXPECT_EQ(cs.size(), 1u);
    return cs.front();
  }

}  // namespace

TEST(Lpa, DefiningRelationsHold) {
  for (auto name : {"E2", "E4", "R1", "R2"}) {
    auto const g  = builtin_graph(name);
    auto const nv = g->num_vertices();
    for (vertex_type v = 0; v < nv; ++v) {
      for (vertex_type w = 0; w < nv; ++w) {
        auto const p = lpa_mul(lpa_vertex(g, v), lpa_vertex(g, w));
        EXPECT_TRUE(lpa_equals(p, v == w ? lpa_vertex(g, v) : LpaTerm(g)));
      }
    }
    for (std::uint32_t f = 0; f < g->families().size(); ++f) {
      auto const e  = lpa_edge(g, {f, 0});
      auto const es = lpa_ghost(g, {f, 0});
      auto const s  = lpa_vertex(g, g->family(f).source);
      auto const r  = lpa_vertex(g, g->family(f).range);
      EXPECT_TRUE(lpa_equals(lpa_mul(s, e), e));
      EXPECT_TRUE(lpa_equals(lpa_mul(e, r), e));
      EXPECT_TRUE(lpa_equals(lpa_mul(r, es), es));
      EXPECT_TRUE(lpa_equals(lpa_mul(es, s), es));
      for (std::uint32_t f2 = 0; f2 < g->families().size(); ++f2) {
        auto const p = lpa_mul(es, lpa_edge(g, {f2, 0}));
        EXPECT_TRUE(lpa_equals(p, f == f2 ? r : LpaTerm(g)));
      }
    }
    for (vertex_type v = 0; v < nv; ++v) {
      if (g->classify(v) != VertexKind::regular) {
        continue;
      }
      LpaTerm sum(g);
      for (auto f : g->out_families(v)) {
        sum = lpa_add(sum, lpa_mul(lpa_edge(g, {f, 0}), lpa_ghost(g, {f, 0})));
      }
      EXPECT_TRUE(lpa_equals(sum, lpa_vertex(g, v))) << name;
    }
  }
}

TEST(Lpa, EqualityGoesThroughRelationFour) {
  auto const r2 = builtin_graph("R2");
  auto const rhs = lpa_add(lpa_mul(E(r2, "e"), Es(r2, "e")), lpa_mul(E(r2, "f"), Es(r2, "f")));
  EXPECT_FALSE(V(r2, "v") == rhs);
  EXPECT_TRUE(lpa_equals(V(r2, "v"), rhs));
  EXPECT_FALSE(lpa_equals(V(r2, "v"), lpa_mul(E(r2, "e"), Es(r2, "e"))));
  EXPECT_TRUE(lpa_equals(lpa_mul(Es(r2, "e"), E(r2, "f")), LpaTerm(r2)));
}

TEST(Lpa, MonomialProducts) {
  auto const r2 = builtin_graph("R2");
  auto const g  = *r2;
  // (e f*)(f e) = e e
  auto const a = lpa_monomial(r2, parse_path(g, "e"), parse_path(g, "f"));
  auto const b = lpa_monomial(r2, parse_path(g, "f.e"), parse_path(g, "v"));
  EXPECT_EQ(lpa_mul(a, b), lpa_monomial(r2, parse_path(g, "e.e"), parse_path(g, "v")));
  // (e*)(e f f*) = f f*
  EXPECT_EQ(lpa_mul(Es(r2, "e"), lpa_monomial(r2, parse_path(g, "e.f"), parse_path(g, "f"))),
            lpa_monomial(r2, parse_path(g, "f"), parse_path(g, "f")));
  EXPECT_TRUE(lpa_mul(Es(r2, "e"), E(r2, "f")).is_zero());
  EXPECT_THROW(lpa_monomial(builtin_graph("E2"), parse_path(*builtin_graph("E2"), "v"),
                            parse_path(*builtin_graph("E2"), "w")),
               ValidationError);
}

TEST(Lpa, PiEIsAStarHomomorphism) {
  for (auto name : {"E2", "E4", "R1", "R2", "Romega"}) {
    auto const      g = builtin_graph(name);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
      auto const a = random_term(g, rng);
      auto const b = random_term(g, rng);
      ASSERT_EQ(pi_E(lpa_add(a, b)), add(pi_E(a), pi_E(b))) << name;
      ASSERT_EQ(pi_E(lpa_mul(a, b)), mul(pi_E(a), pi_E(b)))
          << name << ": " << to_string(a) << " | " << to_string(b);
      ASSERT_EQ(pi_E(lpa_star(a)), star(pi_E(a)));
      ASSERT_TRUE(in_pi_image(pi_E(a)));
    }
  }
}

TEST(Lpa, PiEOnGenerators) {
  auto const r2 = builtin_graph("R2");
  auto const e  = r2->parse_edge("e");
  EXPECT_EQ(pi_E(V(r2, "v")), indicator_vertex(r2, 0));
  EXPECT_EQ(pi_E(E(r2, "e")), indicator_edge(r2, e));
  EXPECT_EQ(pi_E(Es(r2, "e")), indicator_ghost(r2, e));
  EXPECT_EQ(to_string(pi_E(Es(r2, "e"))), "Z(v; e)");
}

TEST(Lpa, LaurentParsing) {
  EXPECT_EQ(parse_laurent("1 + x + x^-2"), (LaurentPolyB{-2, 0, 1}));
  EXPECT_EQ(parse_laurent("0"), LaurentPolyB{});
  EXPECT_EQ(parse_laurent("x + x"), LaurentPolyB{1});
  EXPECT_EQ(to_string(parse_laurent("x^3 + 1")), "1 + x^3");
  try {
    parse_laurent("1 + y");
    FAIL();
  } catch (ParseError const& e) {
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(parse_laurent("x^"), ParseError);
  EXPECT_THROW(parse_laurent("1 x"), ParseError);
}

TEST(Lpa, CyclePolynomialExamples) {
  auto const r1 = builtin_graph("R1");
  auto const c  = only_cycle(*r1);
  EXPECT_TRUE(lpa_equals(eval_cycle_poly(r1, parse_laurent("1 + x"), c),
                         lpa_add(V(r1, "v"), E(r1, "c"))));
  EXPECT_TRUE(lpa_equals(eval_cycle_poly(r1, parse_laurent("x^-1"), c), Es(r1, "c")));
  EXPECT_TRUE(lpa_equals(eval_cycle_poly(r1, parse_laurent("x^2"), c),
                         lpa_mul(E(r1, "c"), E(r1, "c"))));
  EXPECT_TRUE(eval_cycle_poly(r1, parse_laurent("0"), c).is_zero());
  Cycle bad{Path::vertex(0)};
  EXPECT_THROW(eval_cycle_poly(r1, {0}, bad), ValidationError);
}

TEST(Lpa, CyclePolynomialsMultiply) {
  auto const r1 = builtin_graph("R1");
  auto const c  = only_cycle(*r1);
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> bit(0, 1);
  auto random_poly = [&] {
    LaurentPolyB p;
    for (int i = -2; i <= 2; ++i) {
      if (bit(rng)) {
        p.insert(i);
      }
    }
    return p;
  };
  for (int t = 0; t < 100; ++t) {
    auto const p = random_poly();
    auto const q = random_poly();
    LaurentPolyB pq, sum = p;
    for (int i : p) {
      for (int j : q) {
        pq.insert(i + j);
      }
    }
    sum.insert(q.begin(), q.end());
    EXPECT_TRUE(lpa_equals(eval_cycle_poly(r1, pq, c),
                           lpa_mul(eval_cycle_poly(r1, p, c), eval_cycle_poly(r1, q, c))));
    EXPECT_TRUE(lpa_equals(eval_cycle_poly(r1, sum, c),
                           lpa_add(eval_cycle_poly(r1, p, c), eval_cycle_poly(r1, q, c))));
    // Distinct polynomials stay distinct: the cycle has no exit.
    EXPECT_EQ(lpa_equals(eval_cycle_poly(r1, p, c), eval_cycle_poly(r1, q, c)), p == q);
  }
}

TEST(Lpa, GradedUniquenessOnPiE) {
  for (auto name : {"E2", "E4", "R1", "R2"}) {
    auto const g = builtin_graph(name);
    auto const r = graded_uniqueness_check(*g, pi_E_hom(g));
    EXPECT_EQ(r.kind, UniquenessVerdict::Kind::injective) << name << ": " << r.reason;
    EXPECT_EQ(r.verdict(), "injective");
  }
}

TEST(Lpa, RoseWithAllOnesIsNotInjective) {
  auto const r1 = builtin_graph("R1");
  auto const b  = function_algebra(1);
  auto const h  = finite_hom(b, {1}, {1}, {1});
  EXPECT_NO_THROW(validate_hom(*r1, h));
  auto const r = graded_uniqueness_check(*r1, h);
  EXPECT_EQ(r.kind, UniquenessVerdict::Kind::not_injective);
  ASSERT_TRUE(r.powers);
  EXPECT_EQ(*r.powers, std::make_pair(0, 1));
  EXPECT_LT(r.powers->first, r.powers->second);
  EXPECT_LE(r.powers->second, 2);
  // The witness is real: the two polynomials differ but their images agree.
  ASSERT_TRUE(r.cycle);
  auto const a = eval_cycle_poly(r1, {r.powers->first}, *r.cycle);
  auto const c = eval_cycle_poly(r1, {r.powers->second}, *r.cycle);
  EXPECT_FALSE(lpa_equals(a, c));
  EXPECT_EQ(h.image(a), h.image(c));
}

TEST(Lpa, ZeroVertexFailsConditionOne) {
  auto const r2 = builtin_graph("R2");
  auto const b  = function_algebra(1);
  auto const h  = finite_hom(b, {0}, {0, 0}, {0, 0});
  auto const r  = graded_uniqueness_check(*r2, h);
  EXPECT_EQ(r.kind, UniquenessVerdict::Kind::not_injective);
  ASSERT_TRUE(r.zero_vertex);
  EXPECT_EQ(*r.zero_vertex, 0u);
  EXPECT_NE(r.reason.find("condition (1)"), std::string::npos);
}

TEST(Lpa, InvalidSpecsAreRejected) {
  auto const r2 = builtin_graph("R2");
  auto const b  = function_algebra(1);
  // e* f = 1 breaks relation (3).
  try {
    validate_hom(*r2, finite_hom(b, {1}, {1, 1}, {1, 1}));
    FAIL();
  } catch (ValidationError const& e) {
    EXPECT_NE(std::string(e.what()).find("not a homomorphism: relation (3)"), std::string::npos);
  }
  EXPECT_THROW(finite_hom(b, {2}, {0, 0}, {0, 0}), ValidationError);
  EXPECT_THROW(validate_hom(*r2, finite_hom(b, {1}, {1}, {1})), ValidationError);
}

TEST(Lpa, CuntzKriegerUniqueness) {
  auto const r1 = builtin_graph("R1");
  auto const b  = function_algebra(1);
  EXPECT_THROW(ck_uniqueness_check(*r1, finite_hom(b, {1}, {1}, {1})), ValidationError);

  auto const e2 = builtin_graph("E2");
  auto const m2 = matrix_semiring(2);
  auto const h  = finite_hom(m2, {matrix_index({{1, 0}, {0, 0}}), matrix_index({{0, 0}, {0, 1}})},
                             {matrix_index({{0, 1}, {0, 0}})}, {matrix_index({{0, 0}, {1, 0}})});
  auto const r  = ck_uniqueness_check(*e2, h);
  EXPECT_EQ(r.kind, UniquenessVerdict::Kind::injective);
  EXPECT_EQ(graded_uniqueness_check(*e2, h).kind, UniquenessVerdict::Kind::injective);
  // Injectivity, brute force on spanning monomials.
  std::set<index_type> seen;
  std::vector<std::pair<std::string, std::string>> ms{{"v", "v"}, {"w", "w"}, {"e", "w"},
                                                      {"w", "e"}, {"e", "e"}};
  for (auto const& [p, q] : ms) {
    seen.insert(h.image(lpa_monomial(e2, parse_path(*e2, p), parse_path(*e2, q))));
  }
  EXPECT_EQ(seen.size(), 4u);  // v = e e*
}

TEST(Lpa, RoseOmegaIsOutOfScope) {
  auto const ro = builtin_graph("Romega");
  EXPECT_THROW(lpa_equals(V(ro, "v"), V(ro, "v")), OutOfScope);
  EXPECT_THROW(validate_hom(*ro, pi_E_hom(ro)), OutOfScope);
  try {
    lpa_equals(V(ro, "v"), V(ro, "v"));
  } catch (OutOfScope const& e) {
    EXPECT_NE(std::string(e.what()).find("not row-finite"), std::string::npos);
  }
}

TEST(Lpa, RoseOmegaDemo) {
  auto const text = rose_omega_demo();
  EXPECT_NE(text.find("v: infinite-emitter"), std::string::npos) << text;
  EXPECT_NE(text.find("row-finite: false"), std::string::npos);
  EXPECT_NE(text.find("pi_E(v) = Z(v; v); in image: true"), std::string::npos);
  EXPECT_NE(text.find("Z(v; v; ~es[0]); in image: false"), std::string::npos);
  EXPECT_NE(text.find("L_B(E) ≅ A_B(G_E): no"), std::string::npos);
  EXPECT_NE(text.find("open question"), std::string::npos);
}

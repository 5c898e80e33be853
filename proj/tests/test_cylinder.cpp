#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace steinberg;

namespace {

  using G = std::shared_ptr<Graph const>;

  Path P(G const& g, std::string const& text) {
    return parse_path(*g, text);
  }

  SteinbergElt Z(G const& g, std::string const& a, std::string const& b,
                 std::vector<std::string> const& excluded = {}) {
    std::vector<EdgeRef> f;
    for (auto const& e : excluded) {
      f.push_back(g->parse_edge(e));
    }
    return indicator_cylinder(g, P(g, a), P(g, b), f);
  }

  Cylinder C(G const& g, std::string const& a, std::string const& b,
             std::vector<std::string> const& excluded = {}) {
    std::vector<EdgeRef> f;
    for (auto const& e : excluded) {
      f.push_back(g->parse_edge(e));
    }
    std::sort(f.begin(), f.end());
    return {P(g, a), P(g, b), f};
  }

  // A graph with nested emitters and a sink:
  //   u -(bundle xs)-> v -(bundle ys)-> v,  v -(edge d)-> w (sink)
  G nested() {
    return std::make_shared<Graph const>(
        parse_graph("vertex u\nvertex v\nvertex w\nbundle xs u v\nbundle ys v v\nedge d v w\n"));
  }

  std::size_t max_len(SteinbergElt const& x) {
    std::size_t d = 0;
    for (auto const& c : x.cylinders()) {
      d = std::max({d, c.alpha.length(), c.beta.length()});
    }
    return d;
  }

}  // namespace

TEST(Cylinder, CanonicalizeExamples) {
  auto const r2 = builtin_graph("R2");
  EXPECT_EQ(add(Z(r2, "e", "e"), Z(r2, "f", "f")), Z(r2, "v", "v"));
  EXPECT_EQ(canonicalize(r2, {C(r2, "v", "v"), C(r2, "e", "e")}), Z(r2, "v", "v"));
  auto const ro = builtin_graph("Romega");
  EXPECT_EQ(canonicalize(ro, {C(ro, "v", "v", {"es[0]"}), C(ro, "es[0]", "es[0]")}),
            Z(ro, "v", "v"));
  EXPECT_EQ(to_string(Z(ro, "v", "v", {"es[0]"})), "Z(v; v; ~es[0])");
}

TEST(Cylinder, CompareExamples) {
  auto const r2 = builtin_graph("R2");
  EXPECT_EQ(cylinder_compare(r2, C(r2, "e", "e"), C(r2, "v", "v")), SetRelation::subset);
  EXPECT_EQ(cylinder_compare(r2, C(r2, "e", "e"), C(r2, "f", "f")), SetRelation::disjoint);
  EXPECT_EQ(cylinder_compare(r2, C(r2, "e", "v"), C(r2, "v", "e")), SetRelation::disjoint);
  EXPECT_EQ(compare(Z(r2, "v", "v"), add(Z(r2, "e", "e"), Z(r2, "f", "f"))), SetRelation::equal);
  EXPECT_EQ(compare(Z(r2, "v", "v"), Z(r2, "e", "e")), SetRelation::superset);
}

TEST(Cylinder, IndicatorsAndProducts) {
  auto const r2 = builtin_graph("R2");
  auto const e  = r2->parse_edge("e");
  auto const f  = r2->parse_edge("f");
  EXPECT_EQ(indicator_vertex(r2, 0), Z(r2, "v", "v"));
  EXPECT_EQ(indicator_edge(r2, e), Z(r2, "e", "v"));
  EXPECT_EQ(indicator_pair(r2, P(r2, "e"), P(r2, "f")), Z(r2, "e", "f"));
  EXPECT_EQ(mul(Z(r2, "e", "v"), Z(r2, "v", "f")), Z(r2, "e", "f"));
  EXPECT_TRUE(mul(Z(r2, "v", "e"), Z(r2, "f", "v")).is_zero());
  EXPECT_EQ(mul(Z(r2, "v", "e"), Z(r2, "e", "v")), Z(r2, "v", "v"));
  EXPECT_EQ(star(Z(r2, "e", "v")), Z(r2, "v", "e"));
  EXPECT_EQ(indicator_ghost(r2, f), Z(r2, "v", "f"));
  EXPECT_NE(Z(r2, "e", "e"), Z(r2, "v", "v"));
  EXPECT_EQ(zero(r2), zero(r2));
}

TEST(Cylinder, Units) {
  auto const r2 = builtin_graph("R2");
  EXPECT_EQ(unit_element(r2), Z(r2, "v", "v"));
  auto const e2 = builtin_graph("E2");
  EXPECT_EQ(to_string(unit_element(e2)), "Z(v; v) + Z(w; w)");
  EXPECT_EQ(mul(unit_element(r2), Z(r2, "e", "f")), Z(r2, "e", "f"));
}

TEST(Cylinder, AddIsIdempotentWithZero) {
  auto const r2 = builtin_graph("R2");
  auto const a  = add(Z(r2, "e.f", "v"), Z(r2, "v", "e"));
  EXPECT_EQ(add(a, zero(r2)), a);
  EXPECT_EQ(add(a, a), a);
}

TEST(Cylinder, RangeMismatchIsRejected) {
  auto const e2 = builtin_graph("E2");
  EXPECT_THROW(Z(e2, "v", "e"), ValidationError);
  // Excluded sets only make sense at infinite emitters.
  auto const r2 = builtin_graph("R2");
  EXPECT_EQ(Z(r2, "v", "v", {"e"}), Z(r2, "f", "f"));
  EXPECT_THROW(Z(e2, "w", "w", {"e"}), ValidationError);
}

TEST(Cylinder, FiniteOracleExamples) {
  auto const g  = builtin_graph("E2");
  auto const gg = graph_groupoid_finite(*g);
  auto const v  = to_finite_oracle(gg, indicator_vertex(g, g->vertex("v")));
  ASSERT_EQ(std::popcount(v), 1);
  auto const m = gg.morphism[std::countr_zero(v)];
  EXPECT_EQ(to_string(*g, gg.boundary[m.first]), "e");
  EXPECT_EQ(to_string(*g, gg.boundary[m.second]), "e");
  auto const w = to_finite_oracle(gg, indicator_vertex(g, g->vertex("w")));
  auto const mw = gg.morphism[std::countr_zero(w)];
  EXPECT_EQ(to_string(*g, gg.boundary[mw.first]), "w");
  EXPECT_EQ(std::popcount(to_finite_oracle(gg, unit_element(g))), 2);
}

// Acyclic graphs: boundary points are finite, so the point model is exact.
TEST(Cylinder, AcyclicFamilyAgainstPointModel) {
  std::mt19937_64 rng(101);
  for (auto const& g : acyclic_family()) {
    oracle::PointModel model(*g, g->families().size() + 1, 1);
    auto const         gg = graph_groupoid_finite(*g);
    for (int i = 0; i < 40; ++i) {
      auto const a = random_element(g, rng);
      auto const b = random_element(g, rng);
      auto const A = model.arrows(a);
      auto const B = model.arrows(b);
      ASSERT_EQ(model.arrows(add(a, b)), [&] {
        auto u = A;
        u.insert(B.begin(), B.end());
        return u;
      }());
      ASSERT_EQ(model.arrows(mul(a, b)), oracle::compose(A, B)) << write_graph(*g);
      ASSERT_EQ(model.arrows(star(a)), oracle::invert(A));
      // The library oracle sees the same number of morphisms.
      ASSERT_EQ(static_cast<std::size_t>(std::popcount(to_finite_oracle(gg, a))), A.size());
    }
  }
}

TEST(Cylinder, AcyclicFamilyAgainstFiniteAlgebra) {
  auto const r = verify_oracle_suite(20240607, 50);
  EXPECT_TRUE(r.passed()) << (r.notes.empty() ? "" : r.notes.front());
  EXPECT_GT(r.cases, 1000u);
}

// Every vertex of the rose is an infinite emitter; finite paths are dense.
TEST(Cylinder, RoseOmegaAgainstPointModel) {
  auto const        g = builtin_graph("Romega");
  RandomShape const shape{2, 2, 2, 3};
  std::mt19937_64   rng(202);
  for (int i = 0; i < 150; ++i) {
    auto const a = random_element(g, rng, shape);
    auto const b = random_element(g, rng, shape);
    auto const p = mul(a, b);
    std::size_t const small = std::max({max_len(a), max_len(b), max_len(p)}) + 1;
    oracle::PointModel lo(*g, small, 4);
    // The middle point of a composable pair is at most this much longer.
    oracle::PointModel hi(*g, small + std::max(max_len(a), max_len(b)), 4);
    ASSERT_EQ(lo.arrows(add(a, b)), [&] {
      auto u = lo.arrows(a);
      auto v = lo.arrows(b);
      u.insert(v.begin(), v.end());
      return u;
    }());
    ASSERT_EQ(lo.arrows(p), oracle::truncate(oracle::compose(hi.arrows(a), hi.arrows(b)), small))
        << to_string(a) << " | " << to_string(b);
    ASSERT_EQ(lo.arrows(star(a)), oracle::invert(lo.arrows(a)));
    ASSERT_EQ(lo.arrows(difference(a, b)), [&] {
      oracle::ArrowSet out;
      auto const       v = lo.arrows(b);
      for (auto const& x : lo.arrows(a)) {
        if (!v.count(x)) {
          out.insert(x);
        }
      }
      return out;
    }());
  }
}

TEST(Cylinder, NestedEmittersAgainstPointModel) {
  auto const        g = nested();
  RandomShape const shape{2, 2, 2, 3};
  std::mt19937_64   rng(303);
  for (int i = 0; i < 150; ++i) {
    auto const a = random_element(g, rng, shape);
    auto const b = random_element(g, rng, shape);
    auto const p = mul(a, b);
    std::size_t const small = std::max({max_len(a), max_len(b), max_len(p)}) + 1;
    oracle::PointModel lo(*g, small, 3);
    oracle::PointModel hi(*g, small + std::max(max_len(a), max_len(b)), 3);
    ASSERT_EQ(lo.arrows(p), oracle::truncate(oracle::compose(hi.arrows(a), hi.arrows(b)), small))
        << to_string(a) << " | " << to_string(b);
    ASSERT_EQ(lo.arrows(intersect(a, b)), [&] {
      oracle::ArrowSet out;
      auto const       v = lo.arrows(b);
      for (auto const& x : lo.arrows(a)) {
        if (v.count(x)) {
          out.insert(x);
        }
      }
      return out;
    }());
  }
}

// Graphs with only regular vertices: compare refinements at a common depth.
TEST(Cylinder, RegularGraphsAgainstRefinementModel) {
  for (auto name : {"R1", "R2"}) {
    auto const           g = builtin_graph(name);
    oracle::RegularModel model{g.get()};
    std::mt19937_64      rng(404);
    for (int i = 0; i < 150; ++i) {
      auto const a = random_element(g, rng);
      auto const b = random_element(g, rng);
      auto       both = a.cylinders();
      both.insert(both.end(), b.cylinders().begin(), b.cylinders().end());
      ASSERT_TRUE(model.same_set(add(a, b).cylinders(), both));
      ASSERT_TRUE(model.same_set(mul(a, b).cylinders(), model.product(a.cylinders(), b.cylinders())))
          << name << ": " << to_string(a) << " | " << to_string(b);
      std::vector<Cylinder> flipped;
      for (auto const& c : a.cylinders()) {
        flipped.push_back({c.beta, c.alpha, c.excluded});
      }
      ASSERT_TRUE(model.same_set(star(a).cylinders(), flipped));
    }
  }
}

TEST(Cylinder, CanonicalizeIsIdempotentAndOrderInsensitive) {
  for (auto name : {"E2", "R1", "R2", "Romega"}) {
    auto const      g = builtin_graph(name);
    std::mt19937_64 rng(505);
    for (int i = 0; i < 300; ++i) {
      std::vector<Cylinder> cs;
      for (int k = 0; k < 4; ++k) {
        cs.push_back(random_cylinder(*g, rng));
      }
      auto const x = canonicalize(g, cs);
      EXPECT_EQ(canonicalize(g, x.cylinders()), x);
      std::shuffle(cs.begin(), cs.end(), rng);
      EXPECT_EQ(canonicalize(g, cs), x);
      EXPECT_TRUE(std::is_sorted(x.cylinders().begin(), x.cylinders().end()));
    }
  }
}

TEST(Cylinder, CanonicalFormsAreDisjoint) {
  for (auto name : {"R2", "Romega"}) {
    auto const      g = builtin_graph(name);
    std::mt19937_64 rng(606);
    for (int i = 0; i < 200; ++i) {
      auto const  x  = random_element(g, rng);
      auto const& cs = x.cylinders();
      for (std::size_t p = 0; p < cs.size(); ++p) {
        for (std::size_t q = p + 1; q < cs.size(); ++q) {
          EXPECT_EQ(cylinder_compare(g, cs[p], cs[q]), SetRelation::disjoint);
        }
      }
    }
  }
}

TEST(Cylinder, SemiringAndInvolutionLaws) {
  for (auto name : {"E2", "R1", "R2", "Romega"}) {
    auto const r = verify_laws_suite(builtin_graph(name), 99, 200);
    EXPECT_TRUE(r.passed()) << name << ": " << (r.notes.empty() ? "" : r.notes.front());
  }
}

TEST(Cylinder, VertexIndicatorsAreLocalUnits) {
  for (auto name : {"E2", "E4", "R2"}) {
    auto const      g = builtin_graph(name);
    std::mt19937_64 rng(707);
    for (int i = 0; i < 100; ++i) {
      auto const a = random_element(g, rng);
      for (vertex_type v = 0; v < g->num_vertices(); ++v) {
        std::vector<Cylinder> left, right;
        for (auto const& c : a.cylinders()) {
          if (c.alpha.start == v) {
            left.push_back(c);
          }
          if (c.beta.start == v) {
            right.push_back(c);
          }
        }
        EXPECT_EQ(mul(indicator_vertex(g, v), a), canonicalize(g, left));
        EXPECT_EQ(mul(a, indicator_vertex(g, v)), canonicalize(g, right));
      }
      EXPECT_EQ(mul(unit_element(g), a), a);
    }
  }
}

TEST(Cylinder, BisectionInverseLaw) {
  for (auto name : {"R2", "Romega", "E4"}) {
    auto const      g = builtin_graph(name);
    std::mt19937_64 rng(808);
    for (int i = 0; i < 200; ++i) {
      auto const u = canonicalize(g, {random_cylinder(*g, rng)});
      EXPECT_EQ(mul(u, mul(star(u), u)), u) << to_string(u);
    }
  }
}

TEST(Cylinder, PiImage) {
  auto const ro = builtin_graph("Romega");
  EXPECT_TRUE(in_pi_image(indicator_vertex(ro, 0)));
  EXPECT_FALSE(in_pi_image(Z(ro, "v", "v", {"es[0]"})));
  for (auto name : {"E2", "R1", "R2"}) {
    auto const      g = builtin_graph(name);
    std::mt19937_64 rng(909);
    for (int i = 0; i < 200; ++i) {
      EXPECT_TRUE(in_pi_image(random_element(g, rng)));
    }
  }
}

TEST(Cylinder, PointSplitAndMergeRoundTrip) {
  auto const      g = builtin_graph("Romega");
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<std::uint64_t> member(0, 5);
  for (int i = 0; i < 200; ++i) {
    auto const c = random_cylinder(*g, rng);
    // Z(a,b,F) = Z(a,b,F+{e}) + Z(ae,be) for e not in F.
    EdgeRef e{0, member(rng)};
    if (std::find(c.excluded.begin(), c.excluded.end(), e) != c.excluded.end()) {
      continue;
    }
    auto f = c.excluded;
    f.push_back(e);
    std::sort(f.begin(), f.end());
    auto const split = canonicalize(
        g, {{c.alpha, c.beta, f}, {extend(*g, c.alpha, e), extend(*g, c.beta, e), {}}});
    EXPECT_EQ(split, canonicalize(g, {c}));
  }
}

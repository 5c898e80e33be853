#ifndef STEINBERG_LPA_HPP_
#define STEINBERG_LPA_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cylinder.hpp"
#include "error.hpp"
#include "finite_algebra.hpp"
#include "graph.hpp"

namespace steinberg {

  // p q* with r(p) = r(q).
  struct Monomial {
    Path p;
    Path q;

    auto operator<=>(Monomial const& that) const {
      return std::tie(p, q) <=> std::tie(that.p, that.q);
    }
    bool operator==(Monomial const&) const = default;
  };

  // A finite B-linear combination of monomials. No Cuntz-Krieger rewriting
  // happens here; equality goes through pi_E.
  class LpaTerm {
   public:
    using graph_ptr = std::shared_ptr<Graph const>;

    LpaTerm() = default;
    explicit LpaTerm(graph_ptr g) : _graph(std::move(g)) {}
    LpaTerm(graph_ptr g, std::set<Monomial> ms) : _graph(std::move(g)), _monomials(std::move(ms)) {
      for (auto const& m : _monomials) {
        if (m.p.finish != m.q.finish) {
          throw ValidationError("range mismatch in monomial");
        }
      }
    }

    graph_ptr const& graph_handle() const noexcept {
      return _graph;
    }
    Graph const& graph() const {
      if (!_graph) {
        throw ValidationError("term is not attached to a graph");
      }
      return *_graph;
    }
    std::set<Monomial> const& monomials() const noexcept {
      return _monomials;
    }
    bool is_zero() const noexcept {
      return _monomials.empty();
    }
    bool operator==(LpaTerm const& that) const {
      return _monomials == that._monomials;
    }

   private:
    graph_ptr          _graph;
    std::set<Monomial> _monomials;
  };

  inline LpaTerm lpa_vertex(LpaTerm::graph_ptr const& g, vertex_type v) {
    return LpaTerm(g, {{Path::vertex(v), Path::vertex(v)}});
  }

  inline LpaTerm lpa_edge(LpaTerm::graph_ptr const& g, EdgeRef e) {
    return LpaTerm(g, {{make_path(*g, {e}), Path::vertex(g->range(e))}});
  }

  inline LpaTerm lpa_ghost(LpaTerm::graph_ptr const& g, EdgeRef e) {
    return LpaTerm(g, {{Path::vertex(g->range(e)), make_path(*g, {e})}});
  }

  inline LpaTerm lpa_monomial(LpaTerm::graph_ptr const& g, Path p, Path q) {
    return LpaTerm(g, {{std::move(p), std::move(q)}});
  }

  namespace detail {
    inline void same_graph(LpaTerm const& a, LpaTerm const& b) {
      if (a.graph_handle() != b.graph_handle() && !(a.graph() == b.graph())) {
        throw ValidationError("terms live over different graphs");
      }
    }

    // (p q*)(c d*) by comparing q with c.
    inline std::optional<Monomial> reduce(Monomial const& x, Monomial const& y) {
      if (auto eps = strip_prefix(x.q, y.p)) {
        return Monomial{concat(x.p, *eps), y.q};
      }
      if (auto eps = strip_prefix(y.p, x.q)) {
        return Monomial{x.p, concat(y.q, *eps)};
      }
      return std::nullopt;
    }
  }  // namespace detail

  inline LpaTerm lpa_add(LpaTerm const& a, LpaTerm const& b) {
    detail::same_graph(a, b);
    auto ms = a.monomials();
    ms.insert(b.monomials().begin(), b.monomials().end());
    return LpaTerm(a.graph_handle(), std::move(ms));
  }

  inline LpaTerm lpa_mul(LpaTerm const& a, LpaTerm const& b) {
    detail::same_graph(a, b);
    std::set<Monomial> ms;
    for (auto const& x : a.monomials()) {
      for (auto const& y : b.monomials()) {
        if (auto z = detail::reduce(x, y)) {
          ms.insert(std::move(*z));
        }
      }
    }
    return LpaTerm(a.graph_handle(), std::move(ms));
  }

  inline LpaTerm lpa_star(LpaTerm const& a) {
    std::set<Monomial> ms;
    for (auto const& m : a.monomials()) {
      ms.insert({m.q, m.p});
    }
    return LpaTerm(a.graph_handle(), std::move(ms));
  }

  inline std::string to_string(Graph const& g, Monomial const& m) {
    std::vector<std::string> parts;
    for (auto e : m.p.edges) {
      parts.push_back(g.edge_label(e));
    }
    for (auto it = m.q.edges.rbegin(); it != m.q.edges.rend(); ++it) {
      parts.push_back(g.edge_label(*it) + "*");
    }
    if (parts.empty()) {
      return g.vertex_id(m.p.start);
    }
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      s += (i ? "." : "") + parts[i];
    }
    return s;
  }

  inline std::string to_string(LpaTerm const& t) {
    if (t.is_zero()) {
      return "0";
    }
    std::string s;
    bool        first = true;
    for (auto const& m : t.monomials()) {
      s += (first ? "" : " + ") + to_string(t.graph(), m);
      first = false;
    }
    return s;
  }

  // The natural homomorphism: p q* goes to the indicator of Z(p, q).
  inline SteinbergElt pi_E(LpaTerm const& t) {
    std::vector<Cylinder> cs;
    for (auto const& m : t.monomials()) {
      cs.push_back({m.p, m.q, {}});
    }
    return canonicalize(t.graph_handle(), cs);
  }

  // Decided through pi_E, which is injective exactly for row-finite graphs.
  inline bool lpa_equals(LpaTerm const& a, LpaTerm const& b) {
    detail::same_graph(a, b);
    if (!a.graph().is_row_finite()) {
      throw OutOfScope("equality undecided in scope; π_E not injective-certified here "
                       "(graph is not row-finite)");
    }
    return pi_E(a) == pi_E(b);
  }

  ////////////////////////////////////////////////////////////////////////
  // Laurent polynomials at cycles
  ////////////////////////////////////////////////////////////////////////

  // The exponents with coefficient 1.
  using LaurentPolyB = std::set<int>;

  inline std::string to_string(LaurentPolyB const& p) {
    if (p.empty()) {
      return "0";
    }
    std::string s;
    bool        first = true;
    for (int i : p) {
      s += first ? "" : " + ";
      first = false;
      if (i == 0) {
        s += "1";
      } else if (i == 1) {
        s += "x";
      } else {
        s += "x^" + std::to_string(i);
      }
    }
    return s;
  }

  // "1 + x + x^-2"; "0" is the zero polynomial.
  inline LaurentPolyB parse_laurent(std::string const& text) {
    LaurentPolyB p;
    std::size_t  i    = 0;
    auto         skip = [&] {
      while (i < text.size() && text[i] == ' ') {
        ++i;
      }
    };
    auto fail = [&](std::string const& what) {
      throw ParseError(what, 0, i + 1);
    };
    skip();
    if (text.substr(i) == "0") {
      return p;
    }
    while (true) {
      skip();
      if (i < text.size() && text[i] == '1') {
        p.insert(0);
        ++i;
      } else if (i < text.size() && text[i] == 'x') {
        ++i;
        int exponent = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          std::size_t start = i;
          if (i < text.size() && text[i] == '-') {
            ++i;
          }
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
          }
          if (i == start || (i == start + 1 && text[start] == '-') || i - start > 9) {
            fail("expected an exponent");
          }
          exponent = std::stoi(text.substr(start, i - start));
        }
        p.insert(exponent);
      } else {
        fail("expected '1' or 'x'");
      }
      skip();
      if (i == text.size()) {
        return p;
      }
      if (text[i] != '+') {
        fail("expected '+'");
      }
      ++i;
    }
  }

  // p(c) with c^0 = s(c) and c^-n = (c*)^n.
  inline LpaTerm eval_cycle_poly(LpaTerm::graph_ptr const& g,
                                 LaurentPolyB const&       p,
                                 Cycle const&              c) {
    auto const v = c.path.start;
    if (c.path.length() == 0 || c.path.finish != v) {
      throw ValidationError("not a cycle");
    }
    std::set<Monomial> ms;
    for (int i : p) {
      Path power = Path::vertex(v);
      for (int k = 0; k < std::abs(i); ++k) {
        power = concat(power, c.path);
      }
      if (i >= 0) {
        ms.insert({power, Path::vertex(v)});
      } else {
        ms.insert({Path::vertex(v), power});
      }
    }
    return LpaTerm(g, std::move(ms));
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms out of L_B(E) and the uniqueness checkers
  ////////////////////////////////////////////////////////////////////////

  // Targets provide value_type, zero, add, mul, equal and describe.
  struct FiniteTarget {
    using value_type = index_type;
    FiniteAlgebra const* algebra;

    value_type zero() const {
      return algebra->zero();
    }
    value_type add(value_type a, value_type b) const {
      return algebra->add(a, b);
    }
    value_type mul(value_type a, value_type b) const {
      return algebra->mul(a, b);
    }
    bool equal(value_type a, value_type b) const {
      return a == b;
    }
    std::string describe(value_type a) const {
      return algebra->label(a);
    }
    bool finite() const {
      return true;
    }
  };

  struct SteinbergTarget {
    using value_type = SteinbergElt;
    SteinbergElt::graph_ptr graph;

    value_type zero() const {
      return SteinbergElt(graph);
    }
    value_type add(value_type const& a, value_type const& b) const {
      return steinberg::add(a, b);
    }
    value_type mul(value_type const& a, value_type const& b) const {
      return steinberg::mul(a, b);
    }
    bool equal(value_type const& a, value_type const& b) const {
      return a == b;
    }
    std::string describe(value_type const& a) const {
      return to_string(a);
    }
    bool finite() const {
      return false;
    }
  };

  // Images of v, e and e* for every vertex and edge of a row-finite graph.
  template <typename Target>
  struct HomSpec {
    using value_type = typename Target::value_type;

    Target                  target;
    std::vector<value_type> vertex;  // by vertex index
    std::vector<value_type> edge;    // by family index
    std::vector<value_type> ghost;   // by family index

    // phi(p q*) = phi(p) phi(q)*.
    value_type image(Graph const& g, Monomial const& m) const {
      value_type x = vertex.at(m.p.start);
      for (auto e : m.p.edges) {
        x = target.mul(x, edge.at(e.family));
      }
      for (auto it = m.q.edges.rbegin(); it != m.q.edges.rend(); ++it) {
        x = target.mul(x, ghost.at(it->family));
      }
      (void) g;
      return x;
    }

    value_type image(LpaTerm const& t) const {
      value_type x = target.zero();
      for (auto const& m : t.monomials()) {
        x = target.add(x, image(t.graph(), m));
      }
      return x;
    }
  };

  inline HomSpec<FiniteTarget> finite_hom(FiniteAlgebra const&           alg,
                                          std::vector<index_type> const& vertex,
                                          std::vector<index_type> const& edge,
                                          std::vector<index_type> const& ghost) {
    for (auto const* xs : {&vertex, &edge, &ghost}) {
      for (auto x : *xs) {
        if (x >= alg.size()) {
          throw ValidationError("generator image out of range");
        }
      }
    }
    return {FiniteTarget{&alg}, vertex, edge, ghost};
  }

  inline HomSpec<SteinbergTarget> pi_E_hom(SteinbergElt::graph_ptr const& g) {
    HomSpec<SteinbergTarget> h{SteinbergTarget{g}, {}, {}, {}};
    for (vertex_type v = 0; v < g->num_vertices(); ++v) {
      h.vertex.push_back(indicator_vertex(g, v));
    }
    for (std::uint32_t f = 0; f < g->families().size(); ++f) {
      h.edge.push_back(indicator_edge(g, {f, 0}));
      h.ghost.push_back(indicator_ghost(g, {f, 0}));
    }
    return h;
  }

  // Checks relations (1)-(4) on generators; throws "not a homomorphism"
  // naming the first failure.
  template <typename Target>
  void validate_hom(Graph const& g, HomSpec<Target> const& h) {
    if (!g.is_row_finite()) {
      throw OutOfScope("homomorphism specs need a row-finite graph");
    }
    auto const nv = g.num_vertices();
    auto const nf = g.families().size();
    if (h.vertex.size() != nv || h.edge.size() != nf || h.ghost.size() != nf) {
      throw ValidationError("homomorphism spec must give an image for every v, e and e*");
    }
    auto const& T    = h.target;
    auto        fail = [](char const* rel, std::string const& where) {
      throw ValidationError(std::string("not a homomorphism: relation ") + rel
                            + " fails at " + where);
    };
    for (vertex_type v = 0; v < nv; ++v) {
      for (vertex_type w = 0; w < nv; ++w) {
        auto const want = v == w ? h.vertex[v] : T.zero();
        if (!T.equal(T.mul(h.vertex[v], h.vertex[w]), want)) {
          fail("(1)", g.vertex_id(v) + "." + g.vertex_id(w));
        }
      }
    }
    for (std::uint32_t f = 0; f < nf; ++f) {
      auto const& fam = g.family(f);
      auto const& e   = h.edge[f];
      auto const& es  = h.ghost[f];
      if (!T.equal(T.mul(h.vertex[fam.source], e), e)
          || !T.equal(T.mul(e, h.vertex[fam.range]), e)) {
        fail("(2)", fam.id);
      }
      if (!T.equal(T.mul(h.vertex[fam.range], es), es)
          || !T.equal(T.mul(es, h.vertex[fam.source]), es)) {
        fail("(2)", fam.id + "*");
      }
    }
    for (std::uint32_t f1 = 0; f1 < nf; ++f1) {
      for (std::uint32_t f2 = 0; f2 < nf; ++f2) {
        auto const want = f1 == f2 ? h.vertex[g.family(f1).range] : T.zero();
        if (!T.equal(T.mul(h.ghost[f1], h.edge[f2]), want)) {
          fail("(3)", g.family(f1).id + "*." + g.family(f2).id);
        }
      }
    }
    for (vertex_type v = 0; v < nv; ++v) {
      if (g.classify(v) != VertexKind::regular) {
        continue;
      }
      auto sum = T.zero();
      for (auto f : g.out_families(v)) {
        sum = T.add(sum, T.mul(h.edge[f], h.ghost[f]));
      }
      if (!T.equal(sum, h.vertex[v])) {
        fail("(4)", g.vertex_id(v));
      }
    }
  }

  struct UniquenessVerdict {
    enum class Kind { injective, not_injective, undecided };
    Kind        kind = Kind::undecided;
    std::string reason;
    // Condition (1) failure: a vertex sent to 0.
    std::optional<vertex_type> zero_vertex;
    // Condition (2) failure: phi(x^k (c)) = phi(x^l (c)) with k < l.
    std::optional<std::pair<int, int>> powers;
    std::optional<Cycle>               cycle;

    std::string verdict() const {
      switch (kind) {
        case Kind::injective:
          return "injective";
        case Kind::not_injective:
          return "not injective";
        default:
          return "undecided";
      }
    }
  };

  namespace detail {
    template <typename Target>
    std::optional<UniquenessVerdict> check_vertices(Graph const& g, HomSpec<Target> const& h) {
      for (vertex_type v = 0; v < g.num_vertices(); ++v) {
        if (h.target.equal(h.vertex[v], h.target.zero())) {
          UniquenessVerdict r;
          r.kind        = UniquenessVerdict::Kind::not_injective;
          r.zero_vertex = v;
          r.reason      = "condition (1) fails: phi(" + g.vertex_id(v) + ") = 0";
          return r;
        }
      }
      return std::nullopt;
    }

    inline std::optional<std::int64_t> homogeneous_degree(SteinbergElt const& a) {
      if (a.is_zero()) {
        return std::nullopt;
      }
      auto const d = a.cylinders().front().degree();
      for (auto const& c : a.cylinders()) {
        if (c.degree() != d) {
          return std::nullopt;
        }
      }
      return d;
    }
  }  // namespace detail

  // Graded uniqueness: phi is injective iff every phi(v) is nonzero and, for
  // each cycle without exits, p(c) -> phi(p(c)) is injective on Laurent
  // polynomials. Over a finite target some powers of phi(c) repeat, which
  // gives the witness pair (x^k, x^l).
  template <typename Target>
  UniquenessVerdict graded_uniqueness_check(Graph const&           g,
                                            HomSpec<Target> const& h,
                                            std::size_t            max_power = 64) {
    validate_hom(g, h);
    if (auto r = detail::check_vertices(g, h)) {
      return *r;
    }
    auto const& T = h.target;
    bool        undecided = false;
    for (auto const& c : enumerate_cycles(g)) {
      if (cycle_has_exit(g, c)) {
        continue;
      }
      auto const v   = c.path.start;
      Monomial   one{c.path, Path::vertex(v)};
      auto const phi = h.image(g, one);
      if constexpr (std::is_same_v<Target, SteinbergTarget>) {
        Monomial   back{Path::vertex(v), c.path};
        auto const d  = detail::homogeneous_degree(phi);
        auto const db = detail::homogeneous_degree(h.image(g, back));
        auto const d0 = detail::homogeneous_degree(h.vertex[v]);
        // Powers of phi(c) then sit in pairwise distinct degrees and are
        // nonzero (c* c = v), so distinct polynomials stay distinct.
        if (d && db && d0 && *d != 0 && *db == -*d && *d0 == 0) {
          continue;
        }
      }
      std::vector<typename Target::value_type> powers{h.vertex[v]};
      std::optional<std::pair<int, int>>       repeat;
      for (std::size_t l = 1; l <= max_power && !repeat; ++l) {
        powers.push_back(T.mul(powers.back(), phi));
        for (std::size_t k = 0; k < l; ++k) {
          if (T.equal(powers[k], powers[l])) {
            repeat = {static_cast<int>(k), static_cast<int>(l)};
            break;
          }
        }
      }
      if (repeat) {
        UniquenessVerdict r;
        r.kind   = UniquenessVerdict::Kind::not_injective;
        r.powers = repeat;
        r.cycle  = c;
        r.reason = "condition (2) fails at cycle " + to_string(g, c.path) + ": phi(x^"
                   + std::to_string(repeat->first) + ") = phi(x^"
                   + std::to_string(repeat->second) + ")";
        return r;
      }
      undecided = true;
    }
    UniquenessVerdict r;
    if (undecided) {
      r.kind   = UniquenessVerdict::Kind::undecided;
      r.reason = "no repetition among the first " + std::to_string(max_power)
                 + " powers of an exitless cycle";
    } else {
      r.kind   = UniquenessVerdict::Kind::injective;
      r.reason = "conditions (1) and (2) hold";
    }
    return r;
  }

  // Cuntz-Krieger uniqueness: under Condition (L) only the vertices matter.
  template <typename Target>
  UniquenessVerdict ck_uniqueness_check(Graph const& g, HomSpec<Target> const& h) {
    if (!condition_L(g)) {
      throw ValidationError("graph has a cycle without an exit; "
                            "use graded_uniqueness_check");
    }
    validate_hom(g, h);
    if (auto r = detail::check_vertices(g, h)) {
      return *r;
    }
    UniquenessVerdict r;
    r.kind   = UniquenessVerdict::Kind::injective;
    r.reason = "every phi(v) is nonzero and every cycle has an exit";
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // The infinite rose
  ////////////////////////////////////////////////////////////////////////

  inline std::shared_ptr<Graph const> rose_omega() {
    auto g = std::make_shared<Graph>();
    g->add_vertex("v");
    g->add_bundle("es", "v", "v");
    return g;
  }

  inline std::string rose_omega_demo() {
    auto const         g  = rose_omega();
    auto const         v  = g->vertex("v");
    auto const         e0 = g->parse_edge("es[0]");
    std::ostringstream out;
    auto const         pv  = indicator_vertex(g, v);
    auto const         gap = indicator_cylinder(g, Path::vertex(v), Path::vertex(v), {e0});
    auto const         decision = steinberg_simple_decision(*g, instantiate_semiring("B"));
    out << "graph: one vertex v with a bundle es of countably many loops\n";
    out << "v: " << to_string(g->classify(v)) << "\n";
    out << "row-finite: " << (g->is_row_finite() ? "true" : "false") << "\n";
    out << "pi_E(v) = " << to_string(pv) << "; in image: "
        << (in_pi_image(pv) ? "true" : "false") << "\n";
    out << to_string(gap) << "; in image: " << (in_pi_image(gap) ? "true" : "false")
        << "\n";
    out << "pi_E not surjective; witness Z(v,v,{e_0}) = " << to_string(gap) << "\n";
    out << "obstruction: the image of L_B(E) is spanned by the sets Z(p;q). The set\n"
           "  Z(v;v;~es[0]) contains the unit v, and the only Z(p;q) containing v is\n"
           "  Z(v;v) itself, which also contains Z(es[0];es[0]). So no finite union\n"
           "  of sets Z(p;q) equals it.\n";
    out << "Condition (L): " << (decision.every_cycle_exit ? "true" : "false")
        << "; only trivial hereditary saturated sets: "
        << (decision.trivial_hs ? "true" : "false") << "\n";
    out << "A_B(G_E) congruence-simple: " << (decision.simple ? "yes" : "no") << " ("
        << decision.to_string() << ")\n";
    out << "L_B(E) ≅ A_B(G_E): no\n";
    out << "L_B(E) congruence-simple: open question, not decided here\n";
    return out.str();
  }

}  // namespace steinberg

#endif  // STEINBERG_LPA_HPP_

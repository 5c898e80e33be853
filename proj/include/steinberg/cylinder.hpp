#ifndef STEINBERG_CYLINDER_HPP_
#define STEINBERG_CYLINDER_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "finite_algebra.hpp"
#include "graph.hpp"
#include "groupoid.hpp"

namespace steinberg {

  // Z(alpha, beta, F) = Z(alpha, beta) minus the Z(alpha e, beta e) for e in F.
  struct Cylinder {
    Path                 alpha;
    Path                 beta;
    std::vector<EdgeRef> excluded;  // sorted

    auto operator<=>(Cylinder const& that) const {
      return std::tie(alpha, beta, excluded)
             <=> std::tie(that.alpha, that.beta, that.excluded);
    }
    bool operator==(Cylinder const&) const = default;

    // |alpha| - |beta|.
    std::int64_t degree() const {
      return static_cast<std::int64_t>(alpha.length())
             - static_cast<std::int64_t>(beta.length());
    }
  };

  inline std::string to_string(Graph const& g, Cylinder const& c) {
    std::string s = "Z(" + to_string(g, c.alpha) + "; " + to_string(g, c.beta);
    if (!c.excluded.empty()) {
      s += "; ";
      for (std::size_t i = 0; i < c.excluded.size(); ++i) {
        s += (i ? ",~" : "~") + g.edge_label(c.excluded[i]);
      }
    }
    return s + ")";
  }

  namespace detail {

    // A compact open subset of the boundary paths leaving a vertex u.
    //  - sink: empty or full.
    //  - regular u: the children (by out-edge) that are nonempty; never all
    //    full (that is normalized to full).
    //  - infinite emitter u: with point set, u itself is in the set, the
    //    listed children are the ones that are not full, and unlisted
    //    children are full; without it, listed children are the nonempty
    //    ones and unlisted children are empty.
    struct Node {
      enum class Kind : std::uint8_t { empty, full, partial };
      Kind                 kind  = Kind::empty;
      bool                 point = false;
      std::vector<EdgeRef> keys;  // sorted
      std::vector<Node>    kids;

      static Node make_empty() {
        return {};
      }
      static Node make_full() {
        Node n;
        n.kind = Kind::full;
        return n;
      }
      bool is_empty() const {
        return kind == Kind::empty;
      }
      bool is_full() const {
        return kind == Kind::full;
      }
      bool operator==(Node const&) const = default;
    };

    enum class SetOp { unite, intersect, minus };

    inline bool apply(SetOp op, bool x, bool y) {
      switch (op) {
        case SetOp::unite:
          return x || y;
        case SetOp::intersect:
          return x && y;
        default:
          return x && !y;
      }
    }

    inline Node child(Graph const& g, vertex_type u, Node const& n, EdgeRef e) {
      if (n.kind != Node::Kind::partial) {
        return n;
      }
      auto it = std::lower_bound(n.keys.begin(), n.keys.end(), e);
      if (it != n.keys.end() && *it == e) {
        return n.kids[it - n.keys.begin()];
      }
      bool const emitter = g.classify(u) == VertexKind::infinite_emitter;
      return emitter && n.point ? Node::make_full() : Node::make_empty();
    }

    // Whether u itself (the finite boundary path) is in the set.
    inline bool has_point(Node const& n) {
      return n.is_full() || (n.kind == Node::Kind::partial && n.point);
    }

    // Builds a node from (key, child) pairs, dropping children equal to the
    // default and collapsing to empty or full when possible.
    inline Node assemble(Graph const&                            g,
                         vertex_type                             u,
                         bool                                    point,
                         std::vector<std::pair<EdgeRef, Node>>   entries) {
      auto const kind = g.classify(u);
      std::sort(entries.begin(), entries.end(), [](auto const& x, auto const& y) {
        return x.first < y.first;
      });
      Node n;
      n.kind = Node::Kind::partial;
      if (kind == VertexKind::regular) {
        std::size_t full = 0;
        for (auto& [e, c] : entries) {
          if (c.is_empty()) {
            continue;
          }
          full += c.is_full();
          n.keys.push_back(e);
          n.kids.push_back(std::move(c));
        }
        if (n.keys.empty()) {
          return Node::make_empty();
        }
        if (full == g.out_families(u).size()) {
          return Node::make_full();
        }
        return n;
      }
      if (kind == VertexKind::sink) {
        return point ? Node::make_full() : Node::make_empty();
      }
      n.point = point;
      for (auto& [e, c] : entries) {
        if (point ? c.is_full() : c.is_empty()) {
          continue;
        }
        n.keys.push_back(e);
        n.kids.push_back(std::move(c));
      }
      if (n.keys.empty()) {
        return point ? Node::make_full() : Node::make_empty();
      }
      return n;
    }

    inline Node combine(Graph const& g, vertex_type u, SetOp op, Node const& x, Node const& y) {
      switch (op) {
        case SetOp::unite:
          if (x.is_full() || y.is_empty()) {
            return x;
          }
          if (y.is_full() || x.is_empty()) {
            return y;
          }
          break;
        case SetOp::intersect:
          if (x.is_empty() || y.is_full()) {
            return x;
          }
          if (y.is_empty() || x.is_full()) {
            return y;
          }
          break;
        case SetOp::minus:
          if (x.is_empty() || y.is_full()) {
            return Node::make_empty();
          }
          if (y.is_empty()) {
            return x;
          }
          break;
      }
      std::vector<std::pair<EdgeRef, Node>> entries;
      auto const kind = g.classify(u);
      if (kind == VertexKind::regular) {
        for (auto f : g.out_families(u)) {
          EdgeRef e{f, 0};
          entries.emplace_back(
              e, combine(g, g.family(f).range, op, child(g, u, x, e), child(g, u, y, e)));
        }
        return assemble(g, u, false, std::move(entries));
      }
      // Infinite emitter: only the listed keys can differ from the default.
      std::vector<EdgeRef> keys;
      std::merge(x.keys.begin(), x.keys.end(), y.keys.begin(), y.keys.end(),
                 std::back_inserter(keys));
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      for (auto e : keys) {
        entries.emplace_back(
            e, combine(g, g.range(e), op, child(g, u, x, e), child(g, u, y, e)));
      }
      return assemble(g, u, apply(op, has_point(x), has_point(y)), std::move(entries));
    }

    // The set of boundary paths at u avoiding the first edges in F.
    inline Node leaf(Graph const& g, vertex_type u, std::vector<EdgeRef> const& excluded) {
      if (excluded.empty()) {
        return Node::make_full();
      }
      auto const kind = g.classify(u);
      std::vector<std::pair<EdgeRef, Node>> entries;
      if (kind == VertexKind::regular) {
        for (auto f : g.out_families(u)) {
          EdgeRef e{f, 0};
          if (!std::binary_search(excluded.begin(), excluded.end(), e)) {
            entries.emplace_back(e, Node::make_full());
          }
        }
        return assemble(g, u, false, std::move(entries));
      }
      for (auto e : excluded) {
        entries.emplace_back(e, Node::make_empty());
      }
      return assemble(g, u, true, std::move(entries));
    }

    // The node at s(mu) whose only content is mu followed by n.
    inline Node wrap(Graph const& g, std::vector<EdgeRef> const& mu, Node n) {
      for (auto it = mu.rbegin(); it != mu.rend(); ++it) {
        if (n.is_empty()) {
          return n;
        }
        std::vector<std::pair<EdgeRef, Node>> entries;
        entries.emplace_back(*it, std::move(n));
        n = assemble(g, g.source(*it), false, std::move(entries));
      }
      return n;
    }

    // Groupoid elements are partitioned by their stem: the pair (sigma,
    // tau) left after stripping common trailing edges from (alpha, beta).
    using Stem = std::pair<Path, Path>;

    inline Path truncate(Path const& p, std::size_t len, Graph const& g) {
      Path q{p.start, std::vector<EdgeRef>(p.edges.begin(), p.edges.begin() + len), p.start};
      q.finish = len == 0 ? p.start : g.range(q.edges.back());
      return q;
    }

    // Splits (alpha, beta) into its stem and the common suffix mu.
    inline std::pair<Stem, std::vector<EdgeRef>> stem_of(Graph const& g,
                                                         Path const&  alpha,
                                                         Path const&  beta) {
      std::size_t common = 0;
      while (common < alpha.length() && common < beta.length()
             && alpha.edges[alpha.length() - 1 - common]
                    == beta.edges[beta.length() - 1 - common]) {
        ++common;
      }
      std::vector<EdgeRef> mu(alpha.edges.end() - static_cast<std::ptrdiff_t>(common),
                              alpha.edges.end());
      return {{truncate(alpha, alpha.length() - common, g),
               truncate(beta, beta.length() - common, g)},
              std::move(mu)};
    }

    using Forest = std::map<Stem, Node>;

    inline void emit(Graph const&           g,
                     Stem const&            stem,
                     std::vector<EdgeRef>&  mu,
                     vertex_type            /*u*/,
                     Node const&            n,
                     std::vector<Cylinder>& out) {
      auto here = [&](std::vector<EdgeRef> excluded) {
        Path a = stem.first, b = stem.second;
        for (auto e : mu) {
          a = extend(g, std::move(a), e);
          b = extend(g, std::move(b), e);
        }
        out.push_back({std::move(a), std::move(b), std::move(excluded)});
      };
      if (n.is_empty()) {
        return;
      }
      if (n.is_full()) {
        here({});
        return;
      }
      if (n.point) {
        here(n.keys);
      }
      for (std::size_t i = 0; i < n.keys.size(); ++i) {
        if (n.kids[i].is_empty()) {
          continue;
        }
        mu.push_back(n.keys[i]);
        emit(g, stem, mu, g.range(n.keys[i]), n.kids[i], out);
        mu.pop_back();
      }
    }

    inline void validate(Graph const& g, Cylinder const& c) {
      auto check_path = [&](Path const& p) {
        vertex_type v = p.start;
        if (v >= g.num_vertices()) {
          throw ValidationError("vertex out of range");
        }
        for (auto e : p.edges) {
          if (e.family >= g.families().size() || g.source(e) != v) {
            throw ValidationError("path does not compose");
          }
          if (!g.family(e.family).infinite && e.member != 0) {
            throw ValidationError("member index on an ordinary edge");
          }
          v = g.range(e);
        }
        if (v != p.finish) {
          throw ValidationError("path range is stale");
        }
      };
      check_path(c.alpha);
      check_path(c.beta);
      if (c.alpha.finish != c.beta.finish) {
        throw ValidationError("range mismatch: r(" + to_string(g, c.alpha) + ") = "
                              + g.vertex_id(c.alpha.finish) + " but r("
                              + to_string(g, c.beta) + ") = "
                              + g.vertex_id(c.beta.finish));
      }
      for (auto e : c.excluded) {
        if (e.family >= g.families().size() || g.source(e) != c.alpha.finish) {
          throw ValidationError("excluded edge does not leave "
                                + g.vertex_id(c.alpha.finish));
        }
      }
    }

    inline void insert(Graph const& g, Forest& forest, Cylinder const& c) {
      validate(g, c);
      auto excluded = c.excluded;
      std::sort(excluded.begin(), excluded.end());
      excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
      auto [stem, mu] = stem_of(g, c.alpha, c.beta);
      auto node       = wrap(g, mu, leaf(g, c.alpha.finish, excluded));
      if (node.is_empty()) {
        return;
      }
      auto const w  = stem.first.finish;
      auto       it = forest.find(stem);
      if (it == forest.end()) {
        forest.emplace(std::move(stem), std::move(node));
      } else {
        it->second = combine(g, w, SetOp::unite, it->second, node);
      }
    }

    inline std::vector<Cylinder> flatten(Graph const& g, Forest const& forest) {
      std::vector<Cylinder> out;
      std::vector<EdgeRef>  mu;
      for (auto const& [stem, node] : forest) {
        emit(g, stem, mu, stem.first.finish, node, out);
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    inline Forest combine(Graph const& g, SetOp op, Forest const& x, Forest const& y) {
      Forest out;
      for (auto const& [stem, node] : x) {
        auto it = y.find(stem);
        auto r  = it == y.end() ? combine(g, stem.first.finish, op, node, Node::make_empty())
                                : combine(g, stem.first.finish, op, node, it->second);
        if (!r.is_empty()) {
          out.emplace(stem, std::move(r));
        }
      }
      for (auto const& [stem, node] : y) {
        if (x.count(stem)) {
          continue;
        }
        auto r = combine(g, stem.first.finish, op, Node::make_empty(), node);
        if (!r.is_empty()) {
          out.emplace(stem, std::move(r));
        }
      }
      return out;
    }

    inline std::vector<EdgeRef> set_union(std::vector<EdgeRef> const& a,
                                          std::vector<EdgeRef> const& b) {
      std::vector<EdgeRef> out;
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
      return out;
    }

    inline bool contains(std::vector<EdgeRef> const& f, EdgeRef e) {
      return std::binary_search(f.begin(), f.end(), e);
    }

    // Z(a, b, F) Z(c, d, H) as at most one cylinder.
    inline std::optional<Cylinder> product(Graph const& g, Cylinder const& x, Cylinder const& y) {
      if (x.beta == y.alpha) {
        return Cylinder{x.alpha, y.beta, set_union(x.excluded, y.excluded)};
      }
      if (auto eps = strip_prefix(x.beta, y.alpha); eps) {
        if (contains(x.excluded, eps->edges.front())) {
          return std::nullopt;
        }
        return Cylinder{concat(x.alpha, *eps), y.beta, y.excluded};
      }
      if (auto eps = strip_prefix(y.alpha, x.beta); eps) {
        if (contains(y.excluded, eps->edges.front())) {
          return std::nullopt;
        }
        return Cylinder{x.alpha, concat(y.beta, *eps), x.excluded};
      }
      (void) g;
      return std::nullopt;
    }
  }  // namespace detail

  // An element of A_B(G_E), i.e. a compact open subset of G_E, held in
  // canonical form: the sorted cylinders read off the normalized tree of
  // each stem. Equal sets have equal forms.
  class SteinbergElt {
   public:
    using graph_ptr = std::shared_ptr<Graph const>;

    SteinbergElt() = default;
    explicit SteinbergElt(graph_ptr g) : _graph(std::move(g)) {}

    graph_ptr const& graph_handle() const noexcept {
      return _graph;
    }
    Graph const& graph() const {
      if (!_graph) {
        throw ValidationError("element is not attached to a graph");
      }
      return *_graph;
    }
    std::vector<Cylinder> const& cylinders() const noexcept {
      return _cylinders;
    }
    bool is_zero() const noexcept {
      return _cylinders.empty();
    }
    bool operator==(SteinbergElt const& that) const {
      return _cylinders == that._cylinders;
    }

    static SteinbergElt from_forest(graph_ptr g, detail::Forest const& f) {
      SteinbergElt out(g);
      out._cylinders = detail::flatten(*g, f);
      return out;
    }

    detail::Forest forest() const {
      detail::Forest f;
      for (auto const& c : _cylinders) {
        detail::insert(graph(), f, c);
      }
      return f;
    }

   private:
    graph_ptr             _graph;
    std::vector<Cylinder> _cylinders;
  };

  namespace detail {
    inline void same_graph(SteinbergElt const& a, SteinbergElt const& b) {
      if (a.graph_handle() != b.graph_handle() && !(a.graph() == b.graph())) {
        throw ValidationError("elements live over different graphs");
      }
    }
  }  // namespace detail

  inline SteinbergElt canonicalize(SteinbergElt::graph_ptr const& g,
                                   std::vector<Cylinder> const&   cs) {
    detail::Forest f;
    for (auto const& c : cs) {
      detail::insert(*g, f, c);
    }
    return SteinbergElt::from_forest(g, f);
  }

  inline SteinbergElt add(SteinbergElt const& a, SteinbergElt const& b) {
    detail::same_graph(a, b);
    auto cs = a.cylinders();
    cs.insert(cs.end(), b.cylinders().begin(), b.cylinders().end());
    return canonicalize(a.graph_handle(), cs);
  }

  inline SteinbergElt intersect(SteinbergElt const& a, SteinbergElt const& b) {
    detail::same_graph(a, b);
    return SteinbergElt::from_forest(
        a.graph_handle(),
        detail::combine(a.graph(), detail::SetOp::intersect, a.forest(), b.forest()));
  }

  inline SteinbergElt difference(SteinbergElt const& a, SteinbergElt const& b) {
    detail::same_graph(a, b);
    return SteinbergElt::from_forest(
        a.graph_handle(),
        detail::combine(a.graph(), detail::SetOp::minus, a.forest(), b.forest()));
  }

  inline SteinbergElt mul(SteinbergElt const& a, SteinbergElt const& b) {
    detail::same_graph(a, b);
    std::vector<Cylinder> cs;
    for (auto const& x : a.cylinders()) {
      for (auto const& y : b.cylinders()) {
        if (auto z = detail::product(a.graph(), x, y)) {
          cs.push_back(std::move(*z));
        }
      }
    }
    return canonicalize(a.graph_handle(), cs);
  }

  inline SteinbergElt star(SteinbergElt const& a) {
    std::vector<Cylinder> cs;
    for (auto const& c : a.cylinders()) {
      cs.push_back({c.beta, c.alpha, c.excluded});
    }
    return canonicalize(a.graph_handle(), cs);
  }

  inline bool equals(SteinbergElt const& a, SteinbergElt const& b) {
    detail::same_graph(a, b);
    return a == b;
  }

  enum class SetRelation { disjoint, equal, subset, superset, overlap };

  inline char const* to_string(SetRelation r) {
    switch (r) {
      case SetRelation::disjoint:
        return "disjoint";
      case SetRelation::equal:
        return "equal";
      case SetRelation::subset:
        return "subset";
      case SetRelation::superset:
        return "superset";
      default:
        return "overlap";
    }
  }

  inline SetRelation compare(SteinbergElt const& a, SteinbergElt const& b) {
    if (intersect(a, b).is_zero()) {
      return SetRelation::disjoint;
    }
    if (a == b) {
      return SetRelation::equal;
    }
    if (difference(a, b).is_zero()) {
      return SetRelation::subset;
    }
    if (difference(b, a).is_zero()) {
      return SetRelation::superset;
    }
    return SetRelation::overlap;
  }

  inline SetRelation cylinder_compare(SteinbergElt::graph_ptr const& g,
                                      Cylinder const&                c1,
                                      Cylinder const&                c2) {
    return compare(canonicalize(g, {c1}), canonicalize(g, {c2}));
  }

  ////////////////////////////////////////////////////////////////////////
  // Generators
  ////////////////////////////////////////////////////////////////////////

  inline SteinbergElt zero(SteinbergElt::graph_ptr const& g) {
    return SteinbergElt(g);
  }

  inline SteinbergElt indicator_vertex(SteinbergElt::graph_ptr const& g, vertex_type v) {
    return canonicalize(g, {{Path::vertex(v), Path::vertex(v), {}}});
  }

  inline SteinbergElt indicator_edge(SteinbergElt::graph_ptr const& g, EdgeRef e) {
    return canonicalize(g, {{make_path(*g, {e}), Path::vertex(g->range(e)), {}}});
  }

  inline SteinbergElt indicator_ghost(SteinbergElt::graph_ptr const& g, EdgeRef e) {
    return canonicalize(g, {{Path::vertex(g->range(e)), make_path(*g, {e}), {}}});
  }

  inline SteinbergElt indicator_pair(SteinbergElt::graph_ptr const& g,
                                     Path const&                    p,
                                     Path const&                    q) {
    return canonicalize(g, {{p, q, {}}});
  }

  inline SteinbergElt indicator_cylinder(SteinbergElt::graph_ptr const& g,
                                         Path const&                    p,
                                         Path const&                    q,
                                         std::vector<EdgeRef>           excluded) {
    return canonicalize(g, {{p, q, std::move(excluded)}});
  }

  // The sum of all vertex indicators.
  inline SteinbergElt unit_element(SteinbergElt::graph_ptr const& g) {
    std::vector<Cylinder> cs;
    for (vertex_type v = 0; v < g->num_vertices(); ++v) {
      cs.push_back({Path::vertex(v), Path::vertex(v), {}});
    }
    return canonicalize(g, cs);
  }

  // True iff the canonical form needs no excluded sets, i.e. the element is
  // a sum of Z(p, q).
  inline bool in_pi_image(SteinbergElt const& a) {
    return std::all_of(a.cylinders().begin(), a.cylinders().end(), [](auto const& c) {
      return c.excluded.empty();
    });
  }

  inline std::string to_string(SteinbergElt const& a) {
    if (a.is_zero()) {
      return "0";
    }
    std::string s;
    for (std::size_t i = 0; i < a.cylinders().size(); ++i) {
      s += (i ? " + " : "") + to_string(a.graph(), a.cylinders()[i]);
    }
    return s;
  }

  // The morphisms of graph_groupoid_finite(g) lying in a, as a mask over
  // the morphism indices.
  inline mask_type to_finite_oracle(GraphGroupoid const& gg, SteinbergElt const& a) {
    auto const& g = a.graph();
    if (g.has_bundles() || !is_acyclic_graph(g)) {
      throw ValidationError("to_finite_oracle needs an acyclic graph without bundles");
    }
    if (gg.groupoid.n > 64) {
      throw BoundExceeded("oracle masks hold at most 64 morphisms");
    }
    std::map<Path, std::size_t> where;
    for (std::size_t i = 0; i < gg.boundary.size(); ++i) {
      where[gg.boundary[i]] = i;
    }
    mask_type out = 0;
    for (auto const& c : a.cylinders()) {
      for (std::size_t i = 0; i < gg.boundary.size(); ++i) {
        auto rest = strip_prefix(c.alpha, gg.boundary[i]);
        if (!rest || (!rest->edges.empty() && detail::contains(c.excluded, rest->edges.front()))) {
          continue;
        }
        auto const other = where.find(concat(c.beta, *rest));
        if (other == where.end()) {
          throw ValidationError("oracle graph does not match the element");
        }
        auto const m = gg.find(i, other->second);
        if (!m) {
          throw ValidationError("oracle graph does not match the element");
        }
        out |= mask_type(1) << *m;
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Random elements (property tests and the verify command)
  ////////////////////////////////////////////////////////////////////////

  struct RandomShape {
    std::size_t max_length     = 3;
    std::size_t max_member     = 3;
    std::size_t max_excluded   = 2;
    std::size_t max_cylinders  = 3;
  };

  namespace detail {
    template <typename Rng>
    std::size_t below(Rng& rng, std::size_t n) {
      return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    }

    template <typename Rng>
    EdgeRef random_member(Graph const& g, std::uint32_t f, Rng& rng, RandomShape const& s) {
      return {f, g.family(f).infinite ? below(rng, s.max_member + 1) : 0};
    }
  }  // namespace detail

  // A random cylinder: alpha by a forward walk, beta by a backward walk
  // from r(alpha), and a random excluded set when r(alpha) is an infinite
  // emitter.
  template <typename Rng>
  Cylinder random_cylinder(Graph const& g, Rng& rng, RandomShape const& s = {}) {
    using detail::below;
    if (g.num_vertices() == 0) {
      throw ValidationError("graph has no vertices");
    }
    Path        alpha = Path::vertex(static_cast<vertex_type>(below(rng, g.num_vertices())));
    std::size_t len   = below(rng, s.max_length + 1);
    for (std::size_t i = 0; i < len; ++i) {
      auto const& out = g.out_families(alpha.finish);
      if (out.empty()) {
        break;
      }
      alpha = extend(g, alpha, detail::random_member(g, out[below(rng, out.size())], rng, s));
    }
    std::vector<EdgeRef> back;
    vertex_type          at = alpha.finish;
    len                     = below(rng, s.max_length + 1);
    for (std::size_t i = 0; i < len; ++i) {
      std::vector<std::uint32_t> in;
      for (std::uint32_t f = 0; f < g.families().size(); ++f) {
        if (g.family(f).range == at) {
          in.push_back(f);
        }
      }
      if (in.empty()) {
        break;
      }
      auto e = detail::random_member(g, in[below(rng, in.size())], rng, s);
      back.push_back(e);
      at = g.source(e);
    }
    std::reverse(back.begin(), back.end());
    Path beta = make_path(g, at, back);
    std::vector<EdgeRef> excluded;
    if (g.classify(alpha.finish) == VertexKind::infinite_emitter) {
      auto const& out = g.out_families(alpha.finish);
      std::size_t k   = below(rng, s.max_excluded + 1);
      for (std::size_t i = 0; i < k; ++i) {
        excluded.push_back(detail::random_member(g, out[below(rng, out.size())], rng, s));
      }
      std::sort(excluded.begin(), excluded.end());
      excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
    }
    return {std::move(alpha), std::move(beta), std::move(excluded)};
  }

  template <typename Rng>
  SteinbergElt random_element(SteinbergElt::graph_ptr const& g, Rng& rng, RandomShape const& s = {}) {
    std::vector<Cylinder> cs;
    std::size_t const     k = detail::below(rng, s.max_cylinders + 1);
    for (std::size_t i = 0; i < k; ++i) {
      cs.push_back(random_cylinder(*g, rng, s));
    }
    return canonicalize(g, cs);
  }

}  // namespace steinberg

#endif  // STEINBERG_CYLINDER_HPP_

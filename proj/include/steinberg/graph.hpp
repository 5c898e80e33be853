#ifndef STEINBERG_GRAPH_HPP_
#define STEINBERG_GRAPH_HPP_

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "error.hpp"
#include "semiring.hpp"

namespace steinberg {

  using vertex_type = std::uint32_t;

  // An ordinary edge, or a bundle standing for countably many parallel
  // edges indexed by the naturals.
  struct EdgeFamily {
    std::string id;
    vertex_type source   = 0;
    vertex_type range    = 0;
    bool        infinite = false;
  };

  // An edge: member is the bundle index, and 0 for ordinary edges.
  struct EdgeRef {
    std::uint32_t family = 0;
    std::uint64_t member = 0;

    auto operator<=>(EdgeRef const&) const = default;
  };

  enum class VertexKind { sink, regular, infinite_emitter };

  inline char const* to_string(VertexKind k) {
    switch (k) {
      case VertexKind::sink:
        return "sink";
      case VertexKind::regular:
        return "regular";
      default:
        return "infinite-emitter";
    }
  }

  inline bool valid_identifier(std::string const& id) {
    if (id.empty() || !std::isalpha(static_cast<unsigned char>(id[0]))) {
      return false;
    }
    return std::all_of(id.begin(), id.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  }

  class Graph {
   public:
    vertex_type add_vertex(std::string const& id) {
      claim(id);
      _vertices.push_back(id);
      _vertex_index[id] = static_cast<vertex_type>(_vertices.size() - 1);
      _out.emplace_back();
      return static_cast<vertex_type>(_vertices.size() - 1);
    }

    std::uint32_t add_edge(std::string const& id,
                           std::string const& src,
                           std::string const& rng) {
      return add_family(id, src, rng, false);
    }

    std::uint32_t add_bundle(std::string const& id,
                             std::string const& src,
                             std::string const& rng) {
      return add_family(id, src, rng, true);
    }

    std::size_t num_vertices() const noexcept {
      return _vertices.size();
    }
    std::string const& vertex_id(vertex_type v) const {
      return _vertices.at(v);
    }
    std::optional<vertex_type> find_vertex(std::string const& id) const {
      auto it = _vertex_index.find(id);
      if (it == _vertex_index.end()) {
        return std::nullopt;
      }
      return it->second;
    }
    vertex_type vertex(std::string const& id) const {
      if (auto v = find_vertex(id)) {
        return *v;
      }
      throw ValidationError("unknown vertex " + id);
    }

    std::vector<EdgeFamily> const& families() const noexcept {
      return _families;
    }
    EdgeFamily const& family(std::uint32_t f) const {
      return _families.at(f);
    }
    std::optional<std::uint32_t> find_family(std::string const& id) const {
      auto it = _family_index.find(id);
      if (it == _family_index.end()) {
        return std::nullopt;
      }
      return it->second;
    }
    // Families leaving v, in declaration order.
    std::vector<std::uint32_t> const& out_families(vertex_type v) const {
      return _out.at(v);
    }

    vertex_type source(EdgeRef e) const {
      return _families.at(e.family).source;
    }
    vertex_type range(EdgeRef e) const {
      return _families.at(e.family).range;
    }

    VertexKind classify(vertex_type v) const {
      auto const& out = out_families(v);
      if (out.empty()) {
        return VertexKind::sink;
      }
      for (auto f : out) {
        if (_families[f].infinite) {
          return VertexKind::infinite_emitter;
        }
      }
      return VertexKind::regular;
    }

    bool is_row_finite() const {
      return std::none_of(_families.begin(), _families.end(), [](auto const& f) {
        return f.infinite;
      });
    }

    bool has_bundles() const {
      return !is_row_finite();
    }

    // Ordinary out-edges of a regular vertex (empty for other kinds).
    std::vector<EdgeRef> regular_out_edges(vertex_type v) const {
      std::vector<EdgeRef> out;
      if (classify(v) == VertexKind::regular) {
        for (auto f : out_families(v)) {
          out.push_back({f, 0});
        }
      }
      return out;
    }

    std::string edge_label(EdgeRef e) const {
      auto const& f = _families.at(e.family);
      return f.infinite ? f.id + "[" + std::to_string(e.member) + "]" : f.id;
    }

    // Accepts "e", "es[3]", and the shorthand "e3" for the member 3 of a
    // bundle named "e" or "es".
    EdgeRef parse_edge(std::string const& token) const {
      auto const br = token.find('[');
      if (br != std::string::npos) {
        if (token.back() != ']' || br + 2 > token.size() - 1) {
          throw ValidationError("malformed bundle member " + token);
        }
        auto const base = token.substr(0, br);
        auto const num  = token.substr(br + 1, token.size() - br - 2);
        auto const f    = find_family(base);
        if (!f || !_families[*f].infinite) {
          throw ValidationError("unknown bundle " + base);
        }
        return {*f, parse_member(num, token)};
      }
      if (auto f = find_family(token)) {
        if (_families[*f].infinite) {
          throw ValidationError("bundle " + token
                                + " needs a member index, e.g. " + token + "[0]");
        }
        return {*f, 0};
      }
      auto digits = token.size();
      while (digits > 0 && std::isdigit(static_cast<unsigned char>(token[digits - 1]))) {
        --digits;
      }
      if (digits > 0 && digits < token.size()) {
        auto const stem = token.substr(0, digits);
        for (auto const& name : {stem, stem + "s"}) {
          auto f = find_family(name);
          if (f && _families[*f].infinite) {
            return {*f, parse_member(token.substr(digits), token)};
          }
        }
      }
      throw ValidationError("unknown edge " + token);
    }

    bool operator==(Graph const& that) const {
      if (_vertices != that._vertices || _families.size() != that._families.size()) {
        return false;
      }
      for (std::size_t i = 0; i < _families.size(); ++i) {
        auto const& a = _families[i];
        auto const& b = that._families[i];
        if (a.id != b.id || a.source != b.source || a.range != b.range
            || a.infinite != b.infinite) {
          return false;
        }
      }
      return true;
    }

   private:
    static std::uint64_t parse_member(std::string const& num, std::string const& token) {
      if (num.empty() || num.size() > 18
          || !std::all_of(num.begin(), num.end(), [](char c) {
               return std::isdigit(static_cast<unsigned char>(c));
             })) {
        throw ValidationError("malformed bundle member " + token);
      }
      return std::stoull(num);
    }

    void claim(std::string const& id) {
      if (!valid_identifier(id)) {
        throw ValidationError("invalid identifier '" + id + "'");
      }
      if (_vertex_index.count(id) || _family_index.count(id)) {
        throw ValidationError("duplicate id " + id);
      }
    }

    std::uint32_t add_family(std::string const& id,
                             std::string const& src,
                             std::string const& rng,
                             bool               infinite) {
      claim(id);
      auto s = find_vertex(src);
      if (!s) {
        throw ValidationError("undeclared vertex " + src);
      }
      auto r = find_vertex(rng);
      if (!r) {
        throw ValidationError("undeclared vertex " + rng);
      }
      _families.push_back({id, *s, *r, infinite});
      auto const f      = static_cast<std::uint32_t>(_families.size() - 1);
      _family_index[id] = f;
      _out[*s].push_back(f);
      return f;
    }

    std::vector<std::string>                     _vertices;
    std::map<std::string, vertex_type>           _vertex_index;
    std::vector<EdgeFamily>                      _families;
    std::map<std::string, std::uint32_t>         _family_index;
    std::vector<std::vector<std::uint32_t>>      _out;
  };

  ////////////////////////////////////////////////////////////////////////
  // Paths
  ////////////////////////////////////////////////////////////////////////

  struct Path {
    vertex_type          start = 0;
    std::vector<EdgeRef> edges;
    vertex_type          finish = 0;

    static Path vertex(vertex_type v) {
      return Path{v, {}, v};
    }

    std::size_t length() const noexcept {
      return edges.size();
    }

    // Ordered by length first, then start, then edges.
    std::strong_ordering operator<=>(Path const& that) const {
      if (auto c = edges.size() <=> that.edges.size(); c != 0) {
        return c;
      }
      if (auto c = start <=> that.start; c != 0) {
        return c;
      }
      return edges <=> that.edges;
    }
    bool operator==(Path const& that) const {
      return start == that.start && edges == that.edges;
    }
  };

  inline Path make_path(Graph const& g, vertex_type start, std::vector<EdgeRef> edges) {
    Path p{start, std::move(edges), start};
    for (auto e : p.edges) {
      if (g.source(e) != p.finish) {
        throw ValidationError("edges do not compose: " + g.edge_label(e)
                              + " does not start at " + g.vertex_id(p.finish));
      }
      p.finish = g.range(e);
    }
    return p;
  }

  inline Path make_path(Graph const& g, std::vector<EdgeRef> edges) {
    if (edges.empty()) {
      throw ValidationError("an empty path needs a vertex");
    }
    auto const start = g.source(edges.front());
    return make_path(g, start, std::move(edges));
  }

  inline Path extend(Graph const& g, Path p, EdgeRef e) {
    if (g.source(e) != p.finish) {
      throw ValidationError("edges do not compose");
    }
    p.edges.push_back(e);
    p.finish = g.range(e);
    return p;
  }

  inline Path concat(Path const& p, Path const& q) {
    if (p.finish != q.start) {
      throw ValidationError("paths do not compose");
    }
    Path r = p;
    r.edges.insert(r.edges.end(), q.edges.begin(), q.edges.end());
    r.finish = q.finish;
    return r;
  }

  // If q = p.rest, returns rest.
  inline std::optional<Path> strip_prefix(Path const& p, Path const& q) {
    if (p.start != q.start || p.edges.size() > q.edges.size()
        || !std::equal(p.edges.begin(), p.edges.end(), q.edges.begin())) {
      return std::nullopt;
    }
    return Path{p.finish,
                std::vector<EdgeRef>(q.edges.begin() + p.edges.size(), q.edges.end()),
                q.finish};
  }

  inline std::string to_string(Graph const& g, Path const& p) {
    if (p.edges.empty()) {
      return g.vertex_id(p.start);
    }
    std::string s;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      s += (i ? "." : "") + g.edge_label(p.edges[i]);
    }
    return s;
  }

  // A vertex id, or dot-separated edges.
  inline Path parse_path(Graph const& g, std::string const& text) {
    if (auto v = g.find_vertex(text)) {
      return Path::vertex(*v);
    }
    std::vector<EdgeRef> edges;
    std::size_t          pos = 0;
    while (true) {
      auto const dot = text.find('.', pos);
      auto const tok = text.substr(pos, dot == std::string::npos ? dot : dot - pos);
      if (tok.empty()) {
        throw ValidationError("malformed path '" + text + "'");
      }
      edges.push_back(g.parse_edge(tok));
      if (dot == std::string::npos) {
        break;
      }
      pos = dot + 1;
    }
    return make_path(g, std::move(edges));
  }

  ////////////////////////////////////////////////////////////////////////
  // Graph files
  ////////////////////////////////////////////////////////////////////////

  inline Graph parse_graph(std::string const& text) {
    struct Line {
      std::size_t              number;
      std::vector<std::string> words;
    };
    std::vector<Line>  lines;
    std::istringstream in(text);
    std::string        raw;
    std::size_t        number = 0;
    while (std::getline(in, raw)) {
      ++number;
      if (auto hash = raw.find('#'); hash != std::string::npos) {
        raw.erase(hash);
      }
      std::istringstream       words(raw);
      std::vector<std::string> w;
      for (std::string x; words >> x;) {
        w.push_back(x);
      }
      if (w.empty()) {
        continue;
      }
      bool const ok = (w[0] == "vertex" && w.size() == 2)
                      || ((w[0] == "edge" || w[0] == "bundle") && w.size() == 4);
      if (!ok) {
        throw ParseError("expected 'vertex <id>', 'edge <id> <src> <rng>' or "
                         "'bundle <id> <src> <rng>'",
                         number,
                         raw.find(w[0]) + 1);
      }
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (!valid_identifier(w[i])) {
          throw ParseError("invalid identifier '" + w[i] + "'",
                           number,
                           raw.find(w[i]) + 1);
        }
      }
      lines.push_back({number, std::move(w)});
    }
    // Vertices first so edges may refer forward.
    Graph g;
    auto  run = [&](bool vertices) {
      for (auto const& l : lines) {
        if ((l.words[0] == "vertex") != vertices) {
          continue;
        }
        try {
          if (vertices) {
            g.add_vertex(l.words[1]);
          } else if (l.words[0] == "edge") {
            g.add_edge(l.words[1], l.words[2], l.words[3]);
          } else {
            g.add_bundle(l.words[1], l.words[2], l.words[3]);
          }
        } catch (ValidationError const& e) {
          throw ValidationError(std::string(e.what()) + " (line "
                                + std::to_string(l.number) + ")");
        }
      }
    };
    run(true);
    run(false);
    return g;
  }

  inline std::string write_graph(Graph const& g) {
    std::string out;
    for (vertex_type v = 0; v < g.num_vertices(); ++v) {
      out += "vertex " + g.vertex_id(v) + "\n";
    }
    for (auto const& f : g.families()) {
      out += (f.infinite ? "bundle " : "edge ") + f.id + " " + g.vertex_id(f.source)
             + " " + g.vertex_id(f.range) + "\n";
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cycles and Condition (L)
  ////////////////////////////////////////////////////////////////////////

  struct Cycle {
    Path path;
    // Set when the cycle runs through a bundle; the path then uses member 0
    // and stands for infinitely many parallel cycles.
    bool infinite_family = false;
  };

  namespace detail {
    // Vertex ranks by id, so results do not depend on declaration order.
    inline std::vector<std::size_t> id_ranks(Graph const& g) {
      std::vector<vertex_type> order(g.num_vertices());
      for (vertex_type v = 0; v < order.size(); ++v) {
        order[v] = v;
      }
      std::sort(order.begin(), order.end(), [&](auto a, auto b) {
        return g.vertex_id(a) < g.vertex_id(b);
      });
      std::vector<std::size_t> rank(order.size());
      for (std::size_t i = 0; i < order.size(); ++i) {
        rank[order[i]] = i;
      }
      return rank;
    }
  }  // namespace detail

  // Each cycle is reported once, based at its least vertex id.
  inline std::vector<Cycle> enumerate_cycles(Graph const& g) {
    auto const         rank = detail::id_ranks(g);
    std::vector<Cycle> out;
    std::vector<vertex_type> bases(g.num_vertices());
    for (vertex_type v = 0; v < bases.size(); ++v) {
      bases[rank[v]] = v;
    }
    std::vector<bool>    on_path(g.num_vertices(), false);
    std::vector<EdgeRef> stack;
    for (auto base : bases) {
      auto dfs = [&](auto&& self, vertex_type v) -> void {
        for (auto f : g.out_families(v)) {
          auto const& fam = g.family(f);
          EdgeRef     e{f, 0};
          if (fam.range == base) {
            stack.push_back(e);
            Cycle c{make_path(g, base, stack), false};
            for (auto x : stack) {
              c.infinite_family = c.infinite_family || g.family(x.family).infinite;
            }
            out.push_back(std::move(c));
            stack.pop_back();
          } else if (rank[fam.range] > rank[base] && !on_path[fam.range]) {
            on_path[fam.range] = true;
            stack.push_back(e);
            self(self, fam.range);
            stack.pop_back();
            on_path[fam.range] = false;
          }
        }
      };
      on_path[base] = true;
      dfs(dfs, base);
      on_path[base] = false;
    }
    return out;
  }

  // Some vertex on c emits an edge other than the cycle's edge there.
  inline bool cycle_has_exit(Graph const& g, Cycle const& c) {
    for (auto e : c.path.edges) {
      auto const& out = g.out_families(g.source(e));
      if (out.size() > 1 || g.family(e.family).infinite) {
        return true;
      }
    }
    return false;
  }

  // A cycle without an exit lies on vertices emitting exactly one ordinary
  // edge, where following that edge is a function; so look for a cycle of
  // that function.
  inline bool condition_L(Graph const& g) {
    auto const n = g.num_vertices();
    std::vector<std::optional<vertex_type>> next(n);
    for (vertex_type v = 0; v < n; ++v) {
      auto const& out = g.out_families(v);
      if (out.size() == 1 && !g.family(out[0]).infinite) {
        next[v] = g.family(out[0]).range;
      }
    }
    // 0 unvisited, 1 on the current walk, 2 done.
    std::vector<int> state(n, 0);
    for (vertex_type v = 0; v < n; ++v) {
      std::vector<vertex_type> walk;
      vertex_type              x = v;
      while (state[x] == 0) {
        state[x] = 1;
        walk.push_back(x);
        if (!next[x]) {
          break;
        }
        x = *next[x];
        if (state[x] == 1) {
          return false;
        }
      }
      for (auto w : walk) {
        state[w] = 2;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Hereditary and saturated sets
  ////////////////////////////////////////////////////////////////////////

  using VertexSet = std::vector<bool>;

  inline bool is_hereditary(Graph const& g, VertexSet const& h) {
    for (auto const& f : g.families()) {
      if (h[f.source] && !h[f.range]) {
        return false;
      }
    }
    return true;
  }

  inline bool is_saturated(Graph const& g, VertexSet const& h) {
    for (vertex_type v = 0; v < g.num_vertices(); ++v) {
      if (h[v] || g.classify(v) != VertexKind::regular) {
        continue;
      }
      bool all = true;
      for (auto f : g.out_families(v)) {
        all = all && h[g.family(f).range];
      }
      if (all) {
        return false;
      }
    }
    return true;
  }

  inline VertexSet hs_closure(Graph const& g, VertexSet seed) {
    if (seed.size() != g.num_vertices()) {
      throw ValidationError("seed does not match the vertex set");
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto const& f : g.families()) {
        if (seed[f.source] && !seed[f.range]) {
          seed[f.range] = true;
          changed       = true;
        }
      }
      for (vertex_type v = 0; v < g.num_vertices(); ++v) {
        if (seed[v] || g.classify(v) != VertexKind::regular) {
          continue;
        }
        bool all = true;
        for (auto f : g.out_families(v)) {
          all = all && seed[g.family(f).range];
        }
        if (all) {
          seed[v] = true;
          changed = true;
        }
      }
    }
    return seed;
  }

  inline VertexSet hs_closure(Graph const& g, std::vector<std::string> const& seed) {
    VertexSet s(g.num_vertices(), false);
    for (auto const& id : seed) {
      s[g.vertex(id)] = true;
    }
    return hs_closure(g, std::move(s));
  }

  // In increasing order of the bit mask over declaration indices.
  inline std::vector<VertexSet> all_hereditary_saturated(Graph const&  g,
                                                         Limits const& limits = {}) {
    auto const n = g.num_vertices();
    if (n > limits.max_vertices || n > 30) {
      throw BoundExceeded("graph has " + std::to_string(n)
                          + " vertices, over max_vertices="
                          + std::to_string(limits.max_vertices)
                          + "; use only_trivial_hs instead");
    }
    std::vector<VertexSet> out;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m) {
      VertexSet h(n);
      for (std::size_t i = 0; i < n; ++i) {
        h[i] = (m >> i) & 1;
      }
      if (is_hereditary(g, h) && is_saturated(g, h)) {
        out.push_back(std::move(h));
      }
    }
    return out;
  }

  // Every nonempty hereditary saturated set contains the closure of one of
  // its vertices, so singleton closures decide it.
  inline bool only_trivial_hs(Graph const& g) {
    for (vertex_type v = 0; v < g.num_vertices(); ++v) {
      VertexSet s(g.num_vertices(), false);
      s[v] = true;
      auto const h = hs_closure(g, std::move(s));
      if (std::find(h.begin(), h.end(), false) != h.end()) {
        return false;
      }
    }
    return true;
  }

  inline std::string to_string(Graph const& g, VertexSet const& h) {
    std::vector<std::string> ids;
    for (vertex_type v = 0; v < h.size(); ++v) {
      if (h[v]) {
        ids.push_back(g.vertex_id(v));
      }
    }
    std::sort(ids.begin(), ids.end());
    std::string s = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) {
      s += (i ? "," : "") + ids[i];
    }
    return s + "}";
  }

  struct SimplenessDecision {
    bool simple          = false;
    bool semiring_ok     = false;  // (1) field or Boolean
    bool trivial_hs      = false;  // (2) only trivial H&S sets
    bool every_cycle_exit = false;  // (3) Condition (L)
    bool empty_graph     = false;

    std::string reason() const {
      if (simple) {
        return "conditions(1,2,3)";
      }
      if (empty_graph) {
        return "empty-graph";
      }
      std::string s = "failed(";
      bool        first = true;
      for (auto [ok, tag] : {std::pair{semiring_ok, "1"},
                             std::pair{trivial_hs, "2"},
                             std::pair{every_cycle_exit, "3"}}) {
        if (!ok) {
          s += (first ? "" : ",") + std::string(tag);
          first = false;
        }
      }
      return s + ")";
    }

    std::string to_string() const {
      return std::string("simple=") + (simple ? "true" : "false")
             + " reason=" + reason();
    }
  };

  inline SimplenessDecision steinberg_simple_decision(Graph const&              g,
                                                      SemiringDescriptor const& s) {
    SimplenessDecision d;
    d.semiring_ok      = s.is_field || s.is_boolean;
    d.trivial_hs       = only_trivial_hs(g);
    d.every_cycle_exit = condition_L(g);
    // No vertices means the zero algebra, which is never simple.
    d.empty_graph = g.num_vertices() == 0;
    d.simple = !d.empty_graph && d.semiring_ok && d.trivial_hs && d.every_cycle_exit;
    return d;
  }

  inline bool is_acyclic(Graph const& g) {
    return enumerate_cycles(g).empty();
  }

}  // namespace steinberg

#endif  // STEINBERG_GRAPH_HPP_

#ifndef STEINBERG_GROUPOID_HPP_
#define STEINBERG_GROUPOID_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "congruence.hpp"
#include "error.hpp"
#include "finite_algebra.hpp"
#include "graph.hpp"

namespace steinberg {

  inline constexpr std::int32_t undefined = -1;

  // A finite discrete groupoid with morphisms 0..n-1. compose(a, b) is ab,
  // defined when r(b) = s(a).
  struct FiniteGroupoid {
    std::size_t               n = 0;
    std::vector<index_type>   units;
    std::vector<index_type>   source;
    std::vector<index_type>   range;
    std::vector<index_type>   inverse;
    std::vector<std::int32_t> table;  // n * n
    std::vector<std::string>  labels;

    std::int32_t compose(index_type a, index_type b) const {
      return table[a * n + b];
    }
    bool is_unit(index_type a) const {
      return source[a] == a && range[a] == a;
    }
    std::string label(index_type a) const {
      return a < labels.size() ? labels[a] : std::to_string(a);
    }
    bool same_structure(FiniteGroupoid const& that) const {
      return n == that.n && units == that.units && source == that.source
             && range == that.range && inverse == that.inverse && table == that.table;
    }
  };

  struct GroupoidReport {
    bool        ok = true;
    std::string failure;
  };

  inline GroupoidReport validate_groupoid(FiniteGroupoid const& g) {
    auto const n    = g.n;
    auto       fail = [](std::string s) { return GroupoidReport{false, std::move(s)}; };
    auto       t    = [](auto... xs) {
      std::string s = "(";
      bool        first = true;
      ((s += (first ? "" : ", ") + std::to_string(xs), first = false), ...);
      return s + ")";
    };
    if (g.source.size() != n || g.range.size() != n || g.inverse.size() != n
        || g.table.size() != n * n) {
      return fail("table sizes do not match the morphism count");
    }
    for (index_type a = 0; a < n; ++a) {
      if (g.source[a] >= n || g.range[a] >= n || g.inverse[a] >= n) {
        return fail("endpoint or inverse out of range at " + t(a));
      }
    }
    for (index_type a = 0; a < n; ++a) {
      for (index_type b = 0; b < n; ++b) {
        auto const c       = g.compose(a, b);
        bool const defined = g.range[b] == g.source[a];
        if ((c != undefined) != defined) {
          return fail("composition defined iff r(b) = s(a) fails at " + t(a, b));
        }
        if (c != undefined && (c < 0 || static_cast<std::size_t>(c) >= n)) {
          return fail("composition out of range at " + t(a, b));
        }
      }
    }
    for (index_type a = 0; a < n; ++a) {
      for (index_type b = 0; b < n; ++b) {
        auto const ab = g.compose(a, b);
        for (index_type c = 0; c < n; ++c) {
          auto const bc    = g.compose(b, c);
          auto const left  = ab == undefined ? undefined : g.compose(ab, c);
          auto const right = bc == undefined ? undefined : g.compose(a, bc);
          bool const both  = g.range[c] == g.source[b] && g.range[b] == g.source[a];
          if (both && left != right) {
            return fail("associativity fails at " + t(a, b, c));
          }
        }
      }
    }
    std::vector<index_type> units;
    for (index_type a = 0; a < n; ++a) {
      auto const s = g.source[a], r = g.range[a];
      if (g.compose(a, s) != static_cast<std::int32_t>(a)
          || g.compose(r, a) != static_cast<std::int32_t>(a)) {
        return fail("identity laws fail at " + t(a));
      }
      auto const inv = g.inverse[a];
      if (g.compose(a, inv) != static_cast<std::int32_t>(r)
          || g.compose(inv, a) != static_cast<std::int32_t>(s)) {
        return fail("inverse laws fail at " + t(a));
      }
      if (!g.is_unit(s) || !g.is_unit(r)) {
        return fail("source or range is not a unit at " + t(a));
      }
      if (g.is_unit(a)) {
        units.push_back(a);
      }
    }
    if (units != g.units) {
      return fail("unit list does not match the image of source and range");
    }
    return {};
  }

  namespace detail {
    inline void finish(FiniteGroupoid& g, Limits const& limits) {
      if (g.n > limits.max_morphisms) {
        throw BoundExceeded("groupoid has " + std::to_string(g.n)
                            + " morphisms, over max_morphisms="
                            + std::to_string(limits.max_morphisms));
      }
      g.units.clear();
      for (index_type a = 0; a < g.n; ++a) {
        if (g.is_unit(a)) {
          g.units.push_back(a);
        }
      }
    }
  }  // namespace detail

  // X x X with (x, y)(y, z) = (x, z); units (x, x) first, then pairs in
  // lexicographic order.
  inline FiniteGroupoid pair_groupoid(std::size_t k, Limits const& limits = {}) {
    if (k == 0) {
      throw ValidationError("pair groupoid needs a nonempty set");
    }
    if (k * k > limits.max_morphisms) {
      throw BoundExceeded("pair " + std::to_string(k) + " has " + std::to_string(k * k)
                          + " morphisms, over max_morphisms="
                          + std::to_string(limits.max_morphisms));
    }
    std::vector<std::pair<std::size_t, std::size_t>> mor;
    for (std::size_t x = 0; x < k; ++x) {
      mor.emplace_back(x, x);
    }
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        if (x != y) {
          mor.emplace_back(x, y);
        }
      }
    }
    std::map<std::pair<std::size_t, std::size_t>, index_type> index;
    for (index_type i = 0; i < mor.size(); ++i) {
      index[mor[i]] = i;
    }
    FiniteGroupoid g;
    g.n = mor.size();
    g.table.assign(g.n * g.n, undefined);
    for (index_type i = 0; i < g.n; ++i) {
      auto [x, y] = mor[i];
      g.source.push_back(index[{y, y}]);
      g.range.push_back(index[{x, x}]);
      g.inverse.push_back(index[{y, x}]);
      g.labels.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
      for (index_type j = 0; j < g.n; ++j) {
        if (mor[j].first == y) {
          g.table[i * g.n + j] = static_cast<std::int32_t>(index[{x, mor[j].second}]);
        }
      }
    }
    detail::finish(g, limits);
    return g;
  }

  // A group as a one-object groupoid, identity first.
  inline FiniteGroupoid group_groupoid(GroupTable const& grp, Limits const& limits = {}) {
    grp.validate();
    std::vector<index_type> order{grp.identity};
    for (index_type a = 0; a < grp.order; ++a) {
      if (a != grp.identity) {
        order.push_back(a);
      }
    }
    std::vector<index_type> pos(grp.order);
    for (index_type i = 0; i < grp.order; ++i) {
      pos[order[i]] = i;
    }
    FiniteGroupoid g;
    g.n = grp.order;
    g.source.assign(g.n, 0);
    g.range.assign(g.n, 0);
    g.table.resize(g.n * g.n);
    for (index_type i = 0; i < g.n; ++i) {
      g.inverse.push_back(pos[grp.inverse(order[i])]);
      g.labels.push_back(grp.label(order[i]));
      for (index_type j = 0; j < g.n; ++j) {
        g.table[i * g.n + j] = static_cast<std::int32_t>(pos[grp(order[i], order[j])]);
      }
    }
    detail::finish(g, limits);
    return g;
  }

  // Units of all parts first, then the non-units of each part in turn.
  inline FiniteGroupoid disjoint_union(std::vector<FiniteGroupoid> const& parts,
                                       Limits const&                      limits = {}) {
    std::vector<std::pair<std::size_t, index_type>> order;
    for (bool units : {true, false}) {
      for (std::size_t p = 0; p < parts.size(); ++p) {
        for (index_type a = 0; a < parts[p].n; ++a) {
          if (parts[p].is_unit(a) == units) {
            order.emplace_back(p, a);
          }
        }
      }
    }
    std::map<std::pair<std::size_t, index_type>, index_type> pos;
    for (index_type i = 0; i < order.size(); ++i) {
      pos[order[i]] = i;
    }
    FiniteGroupoid g;
    g.n = order.size();
    if (g.n > limits.max_morphisms) {
      throw BoundExceeded("groupoid has " + std::to_string(g.n)
                          + " morphisms, over max_morphisms="
                          + std::to_string(limits.max_morphisms));
    }
    g.table.assign(g.n * g.n, undefined);
    for (index_type i = 0; i < g.n; ++i) {
      auto const [p, a] = order[i];
      auto const& h     = parts[p];
      g.source.push_back(pos[{p, h.source[a]}]);
      g.range.push_back(pos[{p, h.range[a]}]);
      g.inverse.push_back(pos[{p, h.inverse[a]}]);
      g.labels.push_back(parts.size() > 1 ? std::to_string(p) + ":" + h.label(a)
                                          : h.label(a));
      for (index_type b = 0; b < h.n; ++b) {
        auto const c = h.compose(a, b);
        if (c != undefined) {
          g.table[i * g.n + pos[{p, b}]]
              = static_cast<std::int32_t>(pos[{p, static_cast<index_type>(c)}]);
        }
      }
    }
    detail::finish(g, limits);
    return g;
  }

  // Specs: "pair<k>", "z<k>" (cyclic group), joined by '+'.
  inline FiniteGroupoid build_groupoid(std::string const& spec, Limits const& limits = {}) {
    std::vector<FiniteGroupoid> parts;
    std::size_t                 pos = 0;
    while (pos <= spec.size()) {
      auto const plus = spec.find('+', pos);
      auto const item = spec.substr(pos, plus == std::string::npos ? plus : plus - pos);
      auto number     = [&](std::size_t from) -> std::size_t {
        auto const digits = item.substr(from);
        if (digits.empty() || digits.size() > 4
            || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
          throw ValidationError("invalid groupoid spec '" + item + "'");
        }
        return std::stoul(digits);
      };
      if (item.rfind("pair", 0) == 0) {
        parts.push_back(pair_groupoid(number(4), limits));
      } else if (item.rfind("z", 0) == 0 || item.rfind("Z", 0) == 0) {
        parts.push_back(group_groupoid(cyclic_group(number(1)), limits));
      } else {
        throw ValidationError("invalid groupoid spec '" + item
                              + "' (expected pair<k> or z<k>, joined by '+')");
      }
      if (plus == std::string::npos) {
        break;
      }
      pos = plus + 1;
    }
    return parts.size() == 1 ? parts.front() : disjoint_union(parts, limits);
  }

  inline std::string write_groupoid(FiniteGroupoid const& g) {
    std::ostringstream out;
    auto line = [&](char const* head, std::vector<index_type> const& xs) {
      out << head;
      for (auto x : xs) {
        out << ' ' << x;
      }
      out << '\n';
    };
    out << "groupoid size=" << g.n << '\n';
    line("units", g.units);
    line("source", g.source);
    line("range", g.range);
    line("inverse", g.inverse);
    out << "compose\n";
    for (index_type a = 0; a < g.n; ++a) {
      for (index_type b = 0; b < g.n; ++b) {
        auto const c = g.compose(a, b);
        out << (b ? " " : "");
        if (c == undefined) {
          out << '-';
        } else {
          out << c;
        }
      }
      out << '\n';
    }
    return out.str();
  }

  inline FiniteGroupoid parse_groupoid(std::string const& text) {
    std::istringstream in(text);
    std::string        line;
    std::size_t        lineno = 0;
    auto               next   = [&]() {
      while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
          line.pop_back();
        }
        if (!line.empty()) {
          return true;
        }
      }
      throw ParseError("unexpected end of input", lineno, 1);
    };
    auto words = [&]() {
      std::istringstream       ws(line);
      std::vector<std::string> w;
      for (std::string x; ws >> x;) {
        w.push_back(x);
      }
      return w;
    };
    auto number = [&](std::string const& tok) -> std::size_t {
      if (tok.empty() || tok.size() > 9
          || !std::all_of(tok.begin(), tok.end(), ::isdigit)) {
        throw ParseError("expected a number, got '" + tok + "'", lineno, 1);
      }
      return std::stoul(tok);
    };
    next();
    if (line.rfind("groupoid size=", 0) != 0) {
      throw ParseError("expected 'groupoid size=<n>'", lineno, 1);
    }
    FiniteGroupoid g;
    g.n = number(line.substr(14));
    auto list = [&](char const* head, bool exact) {
      next();
      auto w = words();
      if (w.empty() || w[0] != head || (exact && w.size() != g.n + 1)) {
        throw ParseError(std::string("expected '") + head + "' with "
                             + (exact ? std::to_string(g.n) + " entries" : "entries"),
                         lineno,
                         1);
      }
      std::vector<index_type> out;
      for (std::size_t i = 1; i < w.size(); ++i) {
        out.push_back(static_cast<index_type>(number(w[i])));
      }
      return out;
    };
    g.units   = list("units", false);
    g.source  = list("source", true);
    g.range   = list("range", true);
    g.inverse = list("inverse", true);
    next();
    if (line != "compose") {
      throw ParseError("expected 'compose'", lineno, 1);
    }
    for (std::size_t a = 0; a < g.n; ++a) {
      next();
      auto w = words();
      if (w.size() != g.n) {
        throw ParseError("composition row must have " + std::to_string(g.n)
                             + " entries",
                         lineno,
                         1);
      }
      for (auto const& x : w) {
        g.table.push_back(x == "-" ? undefined
                                   : static_cast<std::int32_t>(number(x)));
      }
    }
    return g;
  }

  // One orbit of units under u ~ v whenever some morphism goes u -> v.
  inline bool is_minimal(FiniteGroupoid const& g) {
    detail::UnionFind uf(g.n);
    for (index_type a = 0; a < g.n; ++a) {
      uf.unite(g.source[a], g.range[a]);
    }
    std::size_t orbits = 0;
    for (auto u : g.units) {
      orbits += uf.find(u) == u;
    }
    return orbits == 1;
  }

  // Isotropy consists of units only.
  inline bool is_effective(FiniteGroupoid const& g) {
    for (index_type a = 0; a < g.n; ++a) {
      if (g.source[a] == g.range[a] && !g.is_unit(a)) {
        return false;
      }
    }
    return true;
  }

  // A_B(g) on the basis g: a product of basis elements is their composite,
  // or 0 when undefined. Subsets of units are its local units.
  inline SubsetAlgebra steinberg_basis(FiniteGroupoid const& g) {
    if (g.n > 64) {
      throw BoundExceeded("subset algebra basis is limited to 64 morphisms");
    }
    std::vector<std::string> labels;
    for (index_type a = 0; a < g.n; ++a) {
      labels.push_back(g.label(a));
    }
    SubsetAlgebra alg("A_B(G)", std::move(labels));
    mask_type     unit_mask = 0;
    for (index_type a = 0; a < g.n; ++a) {
      if (g.is_unit(a)) {
        unit_mask |= mask_type(1) << a;
      }
      for (index_type b = 0; b < g.n; ++b) {
        auto const c = g.compose(a, b);
        if (c != undefined) {
          alg.set_basis_product(a, b, mask_type(1) << c);
        }
      }
    }
    alg.set_one(unit_mask);
    if (std::popcount(unit_mask) <= 12) {
      std::vector<mask_type> lu;
      for (mask_type m = unit_mask;; m = (m - 1) & unit_mask) {
        lu.push_back(m);
        if (m == 0) {
          break;
        }
      }
      std::sort(lu.begin(), lu.end());
      alg.set_local_units(std::move(lu));
    }
    return alg;
  }

  inline FiniteAlgebra steinberg_finite(FiniteGroupoid const& g, Limits const& limits = {}) {
    return steinberg_basis(g).materialize(limits);
  }

  ////////////////////////////////////////////////////////////////////////
  // Graph groupoids of finite acyclic graphs
  ////////////////////////////////////////////////////////////////////////

  struct GraphGroupoid {
    FiniteGroupoid groupoid;
    // Sink-ending paths in (length, start, edges) order.
    std::vector<Path> boundary;
    // Morphism (p, q) for boundary indices p, q with r(p) = r(q).
    std::map<std::pair<std::size_t, std::size_t>, index_type> index;
    std::vector<std::pair<std::size_t, std::size_t>>          morphism;

    std::optional<index_type> find(std::size_t p, std::size_t q) const {
      auto it = index.find({p, q});
      if (it == index.end()) {
        return std::nullopt;
      }
      return it->second;
    }
  };

  inline bool is_acyclic_graph(Graph const& g) {
    // Kahn's algorithm over all families.
    std::vector<std::size_t> indeg(g.num_vertices(), 0);
    for (auto const& f : g.families()) {
      ++indeg[f.range];
    }
    std::vector<vertex_type> ready;
    for (vertex_type v = 0; v < g.num_vertices(); ++v) {
      if (indeg[v] == 0) {
        ready.push_back(v);
      }
    }
    std::size_t seen = 0;
    while (!ready.empty()) {
      auto v = ready.back();
      ready.pop_back();
      ++seen;
      for (auto f : g.out_families(v)) {
        if (--indeg[g.family(f).range] == 0) {
          ready.push_back(g.family(f).range);
        }
      }
    }
    return seen == g.num_vertices();
  }

  // The boundary path space is the finite set of sink-ending paths, and a
  // morphism (px, |p| - |q|, qx) is determined by the pair (p, q).
  inline GraphGroupoid graph_groupoid_finite(Graph const& g, Limits const& limits = {}) {
    if (g.has_bundles() || !is_acyclic_graph(g)) {
      throw ValidationError("infinite unit space; use cylinder-calculus");
    }
    GraphGroupoid out;
    auto          grow = [&](auto&& self, Path const& p) -> void {
      if (out.boundary.size() > limits.max_morphisms) {
        throw BoundExceeded("more than max_morphisms="
                            + std::to_string(limits.max_morphisms)
                            + " boundary paths");
      }
      if (g.classify(p.finish) == VertexKind::sink) {
        out.boundary.push_back(p);
        return;
      }
      for (auto f : g.out_families(p.finish)) {
        self(self, extend(g, p, {f, 0}));
      }
    };
    for (vertex_type v = 0; v < g.num_vertices(); ++v) {
      grow(grow, Path::vertex(v));
    }
    std::sort(out.boundary.begin(), out.boundary.end());
    auto const k = out.boundary.size();
    for (std::size_t p = 0; p < k; ++p) {
      out.morphism.emplace_back(p, p);
    }
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t q = 0; q < k; ++q) {
        if (p != q && out.boundary[p].finish == out.boundary[q].finish) {
          out.morphism.emplace_back(p, q);
        }
      }
    }
    auto& gr = out.groupoid;
    gr.n     = out.morphism.size();
    if (gr.n > limits.max_morphisms) {
      throw BoundExceeded("graph groupoid has " + std::to_string(gr.n)
                          + " morphisms, over max_morphisms="
                          + std::to_string(limits.max_morphisms));
    }
    for (index_type i = 0; i < gr.n; ++i) {
      out.index[out.morphism[i]] = i;
    }
    gr.table.assign(gr.n * gr.n, undefined);
    for (index_type i = 0; i < gr.n; ++i) {
      auto const [p, q] = out.morphism[i];
      gr.source.push_back(out.index[{q, q}]);
      gr.range.push_back(out.index[{p, p}]);
      gr.inverse.push_back(out.index[{q, p}]);
      gr.labels.push_back("(" + to_string(g, out.boundary[p]) + ","
                          + to_string(g, out.boundary[q]) + ")");
      for (index_type j = 0; j < gr.n; ++j) {
        auto const [p2, q2] = out.morphism[j];
        if (p2 == q) {
          gr.table[i * gr.n + j] = static_cast<std::int32_t>(out.index[{p, q2}]);
        }
      }
    }
    detail::finish(gr, limits);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Semilattices
  ////////////////////////////////////////////////////////////////////////

  struct Semilattice {
    std::size_t             n = 0;
    std::vector<index_type> meet;  // n * n

    index_type operator()(index_type a, index_type b) const {
      return meet[a * n + b];
    }

    void validate() const {
      if (meet.size() != n * n) {
        throw ValidationError("meet table is not n x n");
      }
      for (index_type a = 0; a < n; ++a) {
        if ((*this)(a, a) != a) {
          throw ValidationError("meet is not idempotent at " + std::to_string(a));
        }
        for (index_type b = 0; b < n; ++b) {
          if ((*this)(a, b) >= n || (*this)(a, b) != (*this)(b, a)) {
            throw ValidationError("meet is not commutative");
          }
          for (index_type c = 0; c < n; ++c) {
            if ((*this)((*this)(a, b), c) != (*this)(a, (*this)(b, c))) {
              throw ValidationError("meet is not associative");
            }
          }
        }
      }
    }

    std::optional<index_type> greatest() const {
      for (index_type a = 0; a < n; ++a) {
        bool top = true;
        for (index_type b = 0; b < n && top; ++b) {
          top = (*this)(a, b) == b;
        }
        if (top) {
          return a;
        }
      }
      return std::nullopt;
    }
  };

  // 0 < 1 < ... < k-1.
  inline Semilattice chain(std::size_t k) {
    Semilattice e{k, std::vector<index_type>(k * k)};
    for (index_type a = 0; a < k; ++a) {
      for (index_type b = 0; b < k; ++b) {
        e.meet[a * k + b] = std::min(a, b);
      }
    }
    return e;
  }

  // B[E] with basis E and basis product the meet.
  inline SubsetAlgebra semigroup_algebra(Semilattice const& e) {
    e.validate();
    std::vector<std::string> labels;
    for (index_type a = 0; a < e.n; ++a) {
      labels.push_back("w" + std::to_string(a));
    }
    SubsetAlgebra alg("B[E]", std::move(labels));
    for (index_type a = 0; a < e.n; ++a) {
      for (index_type b = 0; b < e.n; ++b) {
        alg.set_basis_product(a, b, mask_type(1) << e(a, b));
      }
    }
    if (auto top = e.greatest()) {
      alg.set_one(mask_type(1) << *top);
    }
    return alg;
  }

  struct NonisoVerdict {
    bool          isomorphic = false;
    std::uint64_t examined   = 0;
  };

  // Tries every bijection between the carriers of B[E] and B^E.
  inline NonisoVerdict semilattice_check_noniso(Semilattice const& e,
                                                Limits const&      limits = {}) {
    if (e.n < 2) {
      throw ValidationError("semilattice must have at least 2 elements");
    }
    if (e.n > limits.max_semilattice) {
      throw BoundExceeded("semilattice has " + std::to_string(e.n)
                          + " elements, over max_semilattice="
                          + std::to_string(limits.max_semilattice));
    }
    auto const a = semigroup_algebra(e).materialize(limits);
    auto const b = function_algebra(e.n, limits);
    auto const m = static_cast<index_type>(a.size());
    std::vector<index_type> phi(m);
    std::iota(phi.begin(), phi.end(), index_type(0));
    NonisoVerdict v;
    do {
      ++v.examined;
      bool ok = phi[a.zero()] == b.zero();
      for (index_type x = 0; x < m && ok; ++x) {
        for (index_type y = 0; y < m && ok; ++y) {
          ok = phi[a.add(x, y)] == b.add(phi[x], phi[y])
               && phi[a.mul(x, y)] == b.mul(phi[x], phi[y]);
        }
      }
      if (ok) {
        v.isomorphic = true;
        return v;
      }
    } while (std::next_permutation(phi.begin(), phi.end()));
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Simpleness theorem at desk scale
  ////////////////////////////////////////////////////////////////////////

  struct TheoremReport {
    bool minimal         = false;
    bool effective       = false;
    bool congruence_simple = false;
    // Some (a, b) generating a proper nontrivial congruence, as masks.
    std::optional<std::pair<mask_type, mask_type>> witness;
    bool agrees() const {
      return congruence_simple == (minimal && effective);
    }
  };

  // Uses the tables when 2^|g| fits in max_carrier, and the basis-level
  // certificate otherwise.
  inline TheoremReport verify_simpleness_theorem(FiniteGroupoid const& g,
                                                 Limits const&         limits = {}) {
    TheoremReport r;
    r.minimal   = is_minimal(g);
    r.effective = is_effective(g);
    auto const basis = steinberg_basis(g);
    if (g.n < 32 && (std::size_t(1) << g.n) <= limits.max_carrier) {
      auto const v        = is_congruence_simple(basis.materialize(limits));
      r.congruence_simple = v.simple;
      if (v.witness_pair) {
        r.witness = std::pair<mask_type, mask_type>(v.witness_pair->first,
                                                    v.witness_pair->second);
      }
      return r;
    }
    auto const v = structural_simpleness(basis, limits);
    if (!v.simple) {
      throw BoundExceeded("groupoid with " + std::to_string(g.n)
                          + " morphisms is over max_carrier and the basis-level "
                            "certificate is inconclusive");
    }
    r.congruence_simple = *v.simple;
    r.witness           = v.witness_pair;
    return r;
  }

}  // namespace steinberg

#endif  // STEINBERG_GROUPOID_HPP_

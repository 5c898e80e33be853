#ifndef STEINBERG_CONGRUENCE_HPP_
#define STEINBERG_CONGRUENCE_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "error.hpp"
#include "finite_algebra.hpp"

namespace steinberg {

  // A partition of the carrier; block ids are the least index in each block.
  struct CongruenceRelation {
    std::vector<index_type> block;

    bool related(index_type a, index_type b) const {
      return block.at(a) == block.at(b);
    }
    std::size_t num_blocks() const {
      std::size_t k = 0;
      for (index_type i = 0; i < block.size(); ++i) {
        k += block[i] == i;
      }
      return k;
    }
    bool is_universal() const {
      return num_blocks() == 1;
    }
    bool is_diagonal() const {
      return num_blocks() == block.size();
    }
    bool operator==(CongruenceRelation const&) const = default;
  };

  inline std::string to_string(CongruenceRelation const& c) {
    std::string s;
    for (std::size_t i = 0; i < c.block.size(); ++i) {
      s += (i ? " " : "") + std::to_string(c.block[i]);
    }
    return s;
  }

  // Exhaustive check of the equivalence and compatibility conditions.
  inline bool is_congruence(FiniteAlgebra const& alg, CongruenceRelation const& c) {
    auto const n = static_cast<index_type>(alg.size());
    if (c.block.size() != n) {
      return false;
    }
    for (index_type a = 0; a < n; ++a) {
      if (c.block[a] > a || c.block[c.block[a]] != c.block[a]) {
        return false;
      }
    }
    for (index_type a = 0; a < n; ++a) {
      index_type const b = c.block[a];
      if (a == b) {
        continue;
      }
      // a ~ rep(a) suffices by transitivity.
      for (index_type s = 0; s < n; ++s) {
        if (!c.related(alg.add(s, a), alg.add(s, b))
            || !c.related(alg.mul(s, a), alg.mul(s, b))
            || !c.related(alg.mul(a, s), alg.mul(b, s))) {
          return false;
        }
      }
    }
    return true;
  }

  namespace detail {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n), _classes(n) {
        std::iota(_parent.begin(), _parent.end(), index_type(0));
      }
      index_type find(index_type x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }
      // Keeps the smaller root so roots are block minima.
      bool unite(index_type a, index_type b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        if (b < a) {
          std::swap(a, b);
        }
        _parent[b] = a;
        --_classes;
        return true;
      }
      std::size_t classes() const noexcept {
        return _classes;
      }

     private:
      std::vector<index_type> _parent;
      std::size_t             _classes;
    };

    inline index_type top_element(FiniteAlgebra const& alg) {
      index_type t = alg.zero();
      for (index_type a = 0; a < alg.size(); ++a) {
        t = alg.add(t, a);
      }
      return t;
    }

    // Saturates uf under translations. When stop_on_universal is set the
    // loop stops as soon as the relation is known to be universal; the
    // partition is then left incomplete and must not be reported.
    inline bool saturate(FiniteAlgebra const&                             alg,
                         std::vector<index_type> const&                   translators,
                         UnionFind&                                       uf,
                         std::vector<std::pair<index_type, index_type>>   work,
                         bool                                             stop_on_universal,
                         std::optional<index_type>                        top) {
      while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        if (!uf.unite(x, y)) {
          continue;
        }
        if (stop_on_universal
            && (uf.classes() == 1
                || (top && uf.find(alg.zero()) == uf.find(*top)))) {
          return true;
        }
        for (auto s : translators) {
          work.emplace_back(alg.add(s, x), alg.add(s, y));
          work.emplace_back(alg.mul(s, x), alg.mul(s, y));
          work.emplace_back(alg.mul(x, s), alg.mul(y, s));
        }
      }
      return uf.classes() == 1;
    }

    // Join-irreducible elements of (S, +, 0) for additively idempotent S:
    // nonzero j that is not the join of the elements strictly below it.
    inline std::vector<index_type> join_irreducibles(FiniteAlgebra const& alg) {
      auto const n = static_cast<index_type>(alg.size());
      auto leq     = [&](index_type a, index_type b) { return alg.add(a, b) == b; };
      std::vector<index_type> out;
      for (index_type j = 0; j < n; ++j) {
        if (j == alg.zero()) {
          continue;
        }
        index_type below = alg.zero();
        for (index_type a = 0; a < n; ++a) {
          if (a != j && leq(a, j)) {
            below = alg.add(below, a);
          }
        }
        if (below != j) {
          out.push_back(j);
        }
      }
      return out;
    }

    // Elements whose translations generate all others. In a finite
    // additively idempotent algebra every element is a sum of
    // join-irreducibles, and s -> s x, s -> s + x are additive in s, so
    // closure under the join-irreducible translations is enough.
    inline std::vector<index_type> translators(FiniteAlgebra const& alg) {
      if (alg.additively_idempotent()) {
        return join_irreducibles(alg);
      }
      std::vector<index_type> all(alg.size());
      std::iota(all.begin(), all.end(), index_type(0));
      return all;
    }

    inline CongruenceRelation to_relation(UnionFind& uf, std::size_t n) {
      CongruenceRelation c;
      c.block.resize(n);
      for (index_type i = 0; i < n; ++i) {
        c.block[i] = uf.find(i);
      }
      return c;
    }

    inline void check_index(FiniteAlgebra const& alg, index_type i) {
      if (i >= alg.size()) {
        throw ValidationError("carrier index " + std::to_string(i)
                              + " out of range for size "
                              + std::to_string(alg.size()));
      }
    }
  }  // namespace detail

  // The least congruence containing the seed pairs.
  inline CongruenceRelation
  congruence_closure(FiniteAlgebra const&                                  alg,
                     std::vector<std::pair<index_type, index_type>> const& seeds) {
    for (auto [a, b] : seeds) {
      detail::check_index(alg, a);
      detail::check_index(alg, b);
    }
    detail::UnionFind uf(alg.size());
    detail::saturate(alg, detail::translators(alg), uf, seeds, false, std::nullopt);
    return detail::to_relation(uf, alg.size());
  }

  struct SimplenessVerdict {
    bool simple = false;
    // For a non-simple algebra: a pair whose principal congruence is proper,
    // and (when the table was available) that congruence.
    std::optional<std::pair<index_type, index_type>> witness_pair;
    std::optional<CongruenceRelation>                witness;
    // Number of principal congruences computed.
    std::size_t closures = 0;
  };

  enum class SimplenessStrategy {
    // Uses the join-irreducible reduction for additively idempotent algebras
    // and falls back to all pairs otherwise.
    automatic,
    // Closure of every unordered pair.
    exhaustive
  };

  namespace detail {
    inline SimplenessVerdict
    check_pairs(FiniteAlgebra const&                                  alg,
                std::vector<std::pair<index_type, index_type>> const& pairs,
                std::optional<index_type>                             top) {
      SimplenessVerdict v;
      auto const        ts = translators(alg);
      for (auto const& p : pairs) {
        ++v.closures;
        UnionFind uf(alg.size());
        if (!saturate(alg, ts, uf, {p}, true, top)) {
          v.witness_pair = p;
          v.witness      = to_relation(uf, alg.size());
          return v;
        }
      }
      v.simple = true;
      return v;
    }
  }  // namespace detail

  inline SimplenessVerdict
  is_congruence_simple(FiniteAlgebra const& alg,
                       SimplenessStrategy   strategy = SimplenessStrategy::automatic) {
    auto const n = static_cast<index_type>(alg.size());
    if (n < 2) {
      throw ValidationError("simpleness undefined for zero hemiring");
    }
    std::vector<std::pair<index_type, index_type>> pairs;
    std::optional<index_type>                      top;
    if (alg.additively_idempotent()) {
      top = detail::top_element(alg);
    }
    if (strategy == SimplenessStrategy::automatic && top) {
      // Every nontrivial congruence contains some (a, a + j) with a + j != a
      // and j join-irreducible, so these principal congruences suffice.
      auto const irr = detail::join_irreducibles(alg);
      for (index_type a = 0; a < n; ++a) {
        for (auto j : irr) {
          if (alg.add(a, j) != a) {
            pairs.emplace_back(a, alg.add(a, j));
          }
        }
      }
    } else {
      for (index_type a = 0; a < n; ++a) {
        for (index_type b = a + 1; b < n; ++b) {
          pairs.emplace_back(a, b);
        }
      }
    }
    return detail::check_pairs(alg, pairs, top);
  }

  // Least ideal containing gens: closed under +, under multiplication on
  // either side by arbitrary elements, and containing 0.
  inline std::vector<index_type> ideal_closure(FiniteAlgebra const&           alg,
                                               std::vector<index_type> const& gens) {
    auto const        n = static_cast<index_type>(alg.size());
    std::vector<bool> in(n, false);
    std::vector<index_type> work{alg.zero()};
    std::vector<index_type> members;
    for (auto g : gens) {
      detail::check_index(alg, g);
      work.push_back(g);
    }
    auto push = [&](index_type x) {
      if (!in[x]) {
        work.push_back(x);
      }
    };
    while (!work.empty()) {
      index_type x = work.back();
      work.pop_back();
      if (in[x]) {
        continue;
      }
      in[x] = true;
      members.push_back(x);
      for (index_type s = 0; s < n; ++s) {
        push(alg.mul(s, x));
        push(alg.mul(x, s));
      }
      for (std::size_t i = 0; i < members.size(); ++i) {
        push(alg.add(members[i], x));
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  // A map between finite algebras, by carrier index.
  struct AlgebraHom {
    FiniteAlgebra const&    source;
    FiniteAlgebra const&    target;
    std::vector<index_type> map;
  };

  inline void validate_hom(AlgebraHom const& h) {
    auto const n = static_cast<index_type>(h.source.size());
    if (h.map.size() != n) {
      throw ValidationError("homomorphism map must be total on the source");
    }
    for (auto y : h.map) {
      if (y >= h.target.size()) {
        throw ValidationError("homomorphism image out of range");
      }
    }
    if (h.map[h.source.zero()] != h.target.zero()) {
      throw ValidationError("homomorphism does not preserve zero");
    }
    for (index_type a = 0; a < n; ++a) {
      for (index_type b = 0; b < n; ++b) {
        if (h.map[h.source.add(a, b)] != h.target.add(h.map[a], h.map[b])) {
          throw ValidationError("homomorphism does not preserve + at ("
                                + std::to_string(a) + ", " + std::to_string(b)
                                + ")");
        }
        if (h.map[h.source.mul(a, b)] != h.target.mul(h.map[a], h.map[b])) {
          throw ValidationError("homomorphism does not preserve * at ("
                                + std::to_string(a) + ", " + std::to_string(b)
                                + ")");
        }
      }
    }
  }

  struct KernelReport {
    CongruenceRelation kernel;
    bool               is_injective = false;
    bool               is_zero      = false;
  };

  inline KernelReport hom_kernel(AlgebraHom const& h) {
    validate_hom(h);
    auto const              n = static_cast<index_type>(h.source.size());
    std::vector<index_type> first(h.target.size(), n);
    KernelReport            r;
    r.kernel.block.resize(n);
    r.is_zero = true;
    for (index_type a = 0; a < n; ++a) {
      auto& f = first[h.map[a]];
      if (f == n) {
        f = a;
      }
      r.kernel.block[a] = f;
      r.is_zero         = r.is_zero && h.map[a] == h.target.zero();
    }
    r.is_injective = r.kernel.is_diagonal();
    return r;
  }

  // All congruences, as the join-closure of the principal ones. Quadratic in
  // the carrier for the principal congruences and exponential in the worst
  // case for the joins, hence the cap.
  inline std::vector<CongruenceRelation>
  all_congruences(FiniteAlgebra const& alg, std::size_t max_congruences = 4096) {
    auto const n = static_cast<index_type>(alg.size());
    if (n > 256) {
      throw BoundExceeded("congruence enumeration is limited to carriers of "
                          "size 256");
    }
    std::set<std::vector<index_type>> seen;
    std::vector<CongruenceRelation>   out;
    auto add = [&](CongruenceRelation c) {
      if (seen.insert(c.block).second) {
        if (out.size() == max_congruences) {
          throw BoundExceeded("more than " + std::to_string(max_congruences)
                              + " congruences");
        }
        out.push_back(std::move(c));
        return true;
      }
      return false;
    };
    CongruenceRelation diag;
    diag.block.resize(n);
    std::iota(diag.block.begin(), diag.block.end(), index_type(0));
    add(diag);
    std::vector<CongruenceRelation> principal;
    for (index_type a = 0; a < n; ++a) {
      for (index_type b = a + 1; b < n; ++b) {
        auto c = congruence_closure(alg, {{a, b}});
        if (add(c)) {
          principal.push_back(std::move(c));
        }
      }
    }
    // Join every known congruence with every principal one until stable.
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t p = 0; p < principal.size(); ++p) {
        detail::UnionFind uf(n);
        for (index_type x = 0; x < n; ++x) {
          uf.unite(x, out[i].block[x]);
          uf.unite(x, principal[p].block[x]);
        }
        add(detail::to_relation(uf, n));
      }
    }
    std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      auto const bx = x.num_blocks(), by = y.num_blocks();
      return bx != by ? bx > by : x.block < y.block;
    });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Basis-level routes for SubsetAlgebra
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Closure of the seed masks under left and right multiplication by
    // basis elements.
    inline std::set<mask_type> monomial_closure(SubsetAlgebra const&          alg,
                                                std::vector<mask_type> const& seeds,
                                                std::size_t                   cap) {
      std::set<mask_type>    seen;
      std::vector<mask_type> work;
      for (auto m : seeds) {
        if (m != 0 && seen.insert(m).second) {
          work.push_back(m);
        }
      }
      auto const k = alg.basis_size();
      while (!work.empty()) {
        mask_type m = work.back();
        work.pop_back();
        for (std::size_t b = 0; b < k; ++b) {
          for (mask_type y : {alg.mul(mask_type(1) << b, m),
                              alg.mul(m, mask_type(1) << b)}) {
            if (y != 0 && seen.insert(y).second) {
              if (seen.size() > cap) {
                throw BoundExceeded("monomial closure exceeds "
                                    + std::to_string(cap) + " masks");
              }
              work.push_back(y);
            }
          }
        }
      }
      return seen;
    }
  }  // namespace detail

  // Whether the ideal generated by gens is the whole algebra. The ideal is
  // the join-closure of the monomial closure of gens, and singletons are
  // join-irreducible, so it is everything iff every singleton occurs.
  inline bool ideal_is_whole(SubsetAlgebra const&          alg,
                             std::vector<mask_type> const& gens,
                             Limits const&                 limits = {}) {
    auto const m = detail::monomial_closure(alg, gens, limits.max_carrier * 16);
    for (std::size_t x = 0; x < alg.basis_size(); ++x) {
      if (!m.count(mask_type(1) << x)) {
        return false;
      }
    }
    return true;
  }

  // Join-closure of the monomial closure, as masks; only for small bases.
  inline std::vector<mask_type> ideal_closure(SubsetAlgebra const&          alg,
                                              std::vector<mask_type> const& gens,
                                              Limits const& limits = {}) {
    auto const              m = detail::monomial_closure(alg, gens, limits.max_carrier);
    std::set<mask_type>     ideal{0};
    for (auto x : m) {
      std::vector<mask_type> add;
      for (auto y : ideal) {
        add.push_back(x | y);
      }
      ideal.insert(add.begin(), add.end());
      if (ideal.size() > limits.max_carrier) {
        throw BoundExceeded("ideal exceeds max_carrier");
      }
    }
    return {ideal.begin(), ideal.end()};
  }

  struct StructuralVerdict {
    // Empty when the basis-level certificate is inconclusive.
    std::optional<bool> simple;
    // For non-simple: a pair (0, e_x) generating a proper congruence.
    std::optional<std::pair<mask_type, mask_type>> witness_pair;
  };

  // Basis-level decision without materializing 2^k elements.
  //  - If some basis element e_x generates a proper ideal, Cg(0, e_x) is the
  //    proper congruence {(a, b) : a + i = b + i' for i, i' in the ideal}.
  //  - If every e_x generates everything and, for each basis j, some
  //    y -> s y t (s, t basis or absent) kills all e_x with x != j but not
  //    e_j, then every Cg(a, a + e_j) contains (0, s e_j t), hence is
  //    universal.
  // Otherwise the answer is left open.
  inline StructuralVerdict structural_simpleness(SubsetAlgebra const& alg,
                                                 Limits const& limits = {}) {
    auto const k = alg.basis_size();
    if (k == 0) {
      throw ValidationError("simpleness undefined for zero hemiring");
    }
    StructuralVerdict v;
    for (std::size_t x = 0; x < k; ++x) {
      if (!ideal_is_whole(alg, {mask_type(1) << x}, limits)) {
        v.simple       = false;
        v.witness_pair = {0, mask_type(1) << x};
        return v;
      }
    }
    auto apply = [&](std::size_t s, std::size_t t, mask_type y) {
      if (s < k) {
        y = alg.mul(mask_type(1) << s, y);
      }
      if (t < k) {
        y = alg.mul(y, mask_type(1) << t);
      }
      return y;
    };
    for (std::size_t j = 0; j < k; ++j) {
      bool found = false;
      for (std::size_t s = 0; s <= k && !found; ++s) {
        for (std::size_t t = 0; t <= k && !found; ++t) {
          if (apply(s, t, mask_type(1) << j) == 0) {
            continue;
          }
          bool kills = true;
          for (std::size_t x = 0; x < k && kills; ++x) {
            kills = x == j || apply(s, t, mask_type(1) << x) == 0;
          }
          found = kills;
        }
      }
      if (!found) {
        return v;
      }
    }
    v.simple = true;
    return v;
  }

  // Decides simpleness of a subset algebra, materializing only when the
  // basis-level certificate is inconclusive.
  inline bool is_congruence_simple(SubsetAlgebra const& alg, Limits const& limits = {}) {
    auto const v = structural_simpleness(alg, limits);
    if (v.simple) {
      return *v.simple;
    }
    return is_congruence_simple(alg.materialize(limits)).simple;
  }

}  // namespace steinberg

#endif  // STEINBERG_CONGRUENCE_HPP_

#ifndef STEINBERG_FINITE_ALGEBRA_HPP_
#define STEINBERG_FINITE_ALGEBRA_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "error.hpp"

namespace steinberg {

  using index_type = std::uint32_t;

  // A finite hemiring given by explicit operation tables over the carrier
  // {0, ..., n-1}.
  class FiniteAlgebra {
   public:
    FiniteAlgebra() = default;

    FiniteAlgebra(std::string              name,
                  std::size_t              n,
                  std::vector<index_type>  add_table,
                  std::vector<index_type>  mul_table,
                  index_type               zero,
                  std::optional<index_type> one = std::nullopt)
        : _name(std::move(name)),
          _n(n),
          _add(std::move(add_table)),
          _mul(std::move(mul_table)),
          _zero(zero),
          _one(one) {
      if (_n == 0) {
        throw ValidationError("algebra carrier must be nonempty");
      }
      if (_add.size() != _n * _n || _mul.size() != _n * _n) {
        throw ValidationError("operation tables must be total (n*n entries)");
      }
      for (std::size_t i = 0; i < _n * _n; ++i) {
        if (_add[i] >= _n || _mul[i] >= _n) {
          throw ValidationError("operation table entry out of range at "
                                + std::to_string(i / _n) + ","
                                + std::to_string(i % _n));
        }
      }
      if (_zero >= _n || (_one && *_one >= _n)) {
        throw ValidationError("zero/one index out of range");
      }
    }

    std::string const& name() const noexcept {
      return _name;
    }
    std::size_t size() const noexcept {
      return _n;
    }
    index_type add(index_type a, index_type b) const {
      return _add[a * _n + b];
    }
    index_type mul(index_type a, index_type b) const {
      return _mul[a * _n + b];
    }
    index_type zero() const noexcept {
      return _zero;
    }
    std::optional<index_type> one() const noexcept {
      return _one;
    }

    std::string label(index_type i) const {
      return i < _labels.size() ? _labels[i] : std::to_string(i);
    }
    void set_labels(std::vector<std::string> labels) {
      if (!labels.empty() && labels.size() != _n) {
        throw ValidationError("label count does not match carrier size");
      }
      _labels = std::move(labels);
    }

    std::optional<std::vector<index_type>> const& local_units() const noexcept {
      return _local_units;
    }
    void set_local_units(std::vector<index_type> units) {
      _local_units = std::move(units);
    }

    std::vector<index_type> const& add_table() const noexcept {
      return _add;
    }
    std::vector<index_type> const& mul_table() const noexcept {
      return _mul;
    }

    bool additively_idempotent() const {
      for (index_type a = 0; a < _n; ++a) {
        if (add(a, a) != a) {
          return false;
        }
      }
      return true;
    }

    // Same tables (names and labels are not compared).
    bool same_tables(FiniteAlgebra const& that) const {
      return _n == that._n && _add == that._add && _mul == that._mul
             && _zero == that._zero && _one == that._one;
    }

   private:
    std::string                            _name;
    std::size_t                            _n = 0;
    std::vector<index_type>                _add;
    std::vector<index_type>                _mul;
    index_type                             _zero = 0;
    std::optional<index_type>              _one;
    std::vector<std::string>               _labels;
    std::optional<std::vector<index_type>> _local_units;
  };

  // Exhaustive hemiring axiom check over all triples; returns a description
  // of the first violation. O(n^3).
  inline std::optional<std::string> check_hemiring_axioms(FiniteAlgebra const& a) {
    auto const n = static_cast<index_type>(a.size());
    auto const z = a.zero();
    auto at      = [&](char const* law, index_type x, index_type y, index_type w) {
      return std::string(law) + " fails at (" + std::to_string(x) + ", "
             + std::to_string(y) + ", " + std::to_string(w) + ")";
    };
    for (index_type x = 0; x < n; ++x) {
      if (a.add(x, z) != x || a.add(z, x) != x) {
        return at("additive identity", x, z, z);
      }
      if (a.mul(x, z) != z || a.mul(z, x) != z) {
        return at("zero annihilation", x, z, z);
      }
      if (a.one() && (a.mul(x, *a.one()) != x || a.mul(*a.one(), x) != x)) {
        return at("multiplicative identity", x, *a.one(), *a.one());
      }
      for (index_type y = 0; y < n; ++y) {
        if (a.add(x, y) != a.add(y, x)) {
          return at("commutativity of +", x, y, y);
        }
        for (index_type w = 0; w < n; ++w) {
          if (a.add(a.add(x, y), w) != a.add(x, a.add(y, w))) {
            return at("associativity of +", x, y, w);
          }
          if (a.mul(a.mul(x, y), w) != a.mul(x, a.mul(y, w))) {
            return at("associativity of *", x, y, w);
          }
          if (a.mul(x, a.add(y, w)) != a.add(a.mul(x, y), a.mul(x, w))) {
            return at("left distributivity", x, y, w);
          }
          if (a.mul(a.add(y, w), x) != a.add(a.mul(y, x), a.mul(w, x))) {
            return at("right distributivity", x, y, w);
          }
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // SubsetAlgebra
  ////////////////////////////////////////////////////////////////////////

  using mask_type = std::uint64_t;

  // The B-algebra that is free as a B-semimodule on a finite basis of at most
  // 64 elements: elements are subsets of the basis (bit masks), addition is
  // union, and multiplication is the bilinear extension of a product of basis
  // elements (each product being a subset of the basis). Matrix semirings,
  // group semirings, B^n and finite Steinberg algebras over B are all of this
  // shape; materialize() turns one into table form.
  class SubsetAlgebra {
   public:
    // Largest basis whose full operation tables are built (2^13 = 8192
    // elements, 2 x 2^26 table entries).
    static constexpr std::size_t max_table_bits = 13;

    SubsetAlgebra() = default;

    SubsetAlgebra(std::string name, std::vector<std::string> basis_labels)
        : _name(std::move(name)),
          _labels(std::move(basis_labels)),
          _prod(_labels.size() * _labels.size(), 0) {
      if (_labels.size() > 64) {
        throw BoundExceeded("subset algebra basis is limited to 64 elements");
      }
    }

    std::string const& name() const noexcept {
      return _name;
    }
    std::size_t basis_size() const noexcept {
      return _labels.size();
    }
    std::string const& basis_label(std::size_t i) const {
      return _labels[i];
    }
    mask_type full() const noexcept {
      return _labels.size() == 64 ? ~mask_type(0)
                                  : (mask_type(1) << _labels.size()) - 1;
    }

    void set_basis_product(std::size_t i, std::size_t j, mask_type value) {
      _prod[i * basis_size() + j] = value;
    }
    mask_type basis_product(std::size_t i, std::size_t j) const {
      return _prod[i * basis_size() + j];
    }

    void set_one(mask_type one) {
      _one = one;
    }
    std::optional<mask_type> one() const noexcept {
      return _one;
    }
    void set_local_units(std::vector<mask_type> units) {
      _local_units = std::move(units);
    }
    std::optional<std::vector<mask_type>> const& local_units() const noexcept {
      return _local_units;
    }

    static mask_type add(mask_type a, mask_type b) noexcept {
      return a | b;
    }

    mask_type mul(mask_type a, mask_type b) const {
      mask_type out = 0;
      for (mask_type x = a; x != 0; x &= x - 1) {
        auto const i = static_cast<std::size_t>(std::countr_zero(x));
        for (mask_type y = b; y != 0; y &= y - 1) {
          out |= basis_product(i, static_cast<std::size_t>(std::countr_zero(y)));
        }
      }
      return out;
    }

    std::string element_label(mask_type a) const {
      std::string s = "{";
      bool        first = true;
      for (mask_type x = a; x != 0; x &= x - 1) {
        s += (first ? "" : ",") + _labels[std::countr_zero(x)];
        first = false;
      }
      return s + "}";
    }

    // Table form; the carrier index of an element is its mask.
    FiniteAlgebra materialize(Limits const& limits = {}) const {
      std::size_t const m = basis_size();
      if (m >= 32 || (std::size_t(1) << m) > limits.max_carrier) {
        throw BoundExceeded("carrier 2^" + std::to_string(m)
                            + " exceeds max_carrier="
                            + std::to_string(limits.max_carrier));
      }
      if (m > max_table_bits) {
        throw BoundExceeded("carrier 2^" + std::to_string(m)
                            + " needs two tables of 2^" + std::to_string(2 * m)
                            + " entries; work on the basis instead (structural "
                              "simpleness, ideal closure)");
      }
      std::size_t const       n = std::size_t(1) << m;
      std::vector<index_type> add(n * n), mul(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          add[a * n + b] = static_cast<index_type>(a | b);
        }
      }
      // left[i][b] = e_i * b, built by peeling the lowest bit of b.
      std::vector<index_type> left(m * n, 0);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t b = 1; b < n; ++b) {
          auto const low = static_cast<std::size_t>(std::countr_zero(b));
          left[i * n + b] = left[i * n + (b & (b - 1))]
                            | static_cast<index_type>(basis_product(i, low));
        }
      }
      for (std::size_t a = 1; a < n; ++a) {
        auto const low  = static_cast<std::size_t>(std::countr_zero(a));
        auto const rest = a & (a - 1);
        for (std::size_t b = 0; b < n; ++b) {
          mul[a * n + b] = mul[rest * n + b] | left[low * n + b];
        }
      }
      std::optional<index_type> one;
      if (_one) {
        one = static_cast<index_type>(*_one);
      }
      FiniteAlgebra alg(_name, n, std::move(add), std::move(mul), 0, one);
      std::vector<std::string> labels(n);
      for (std::size_t a = 0; a < n; ++a) {
        labels[a] = element_label(a);
      }
      alg.set_labels(std::move(labels));
      if (_local_units) {
        std::vector<index_type> lu(_local_units->begin(), _local_units->end());
        alg.set_local_units(std::move(lu));
      }
      return alg;
    }

   private:
    std::string              _name;
    std::vector<std::string> _labels;
    std::vector<mask_type>   _prod;
    std::optional<mask_type> _one;
    std::optional<std::vector<mask_type>> _local_units;
  };

  ////////////////////////////////////////////////////////////////////////
  // Groups
  ////////////////////////////////////////////////////////////////////////

  // A finite group by its multiplication table.
  struct GroupTable {
    std::size_t              order = 0;
    std::vector<index_type>  mul;  // order * order
    index_type               identity = 0;
    std::vector<std::string> labels;

    index_type operator()(index_type a, index_type b) const {
      return mul[a * order + b];
    }

    std::string label(index_type i) const {
      return i < labels.size() ? labels[i] : "g" + std::to_string(i);
    }

    // Throws ValidationError naming the first failed axiom.
    void validate() const {
      if (order == 0) {
        throw ValidationError("group axiom failed: empty carrier");
      }
      if (mul.size() != order * order) {
        throw ValidationError("group axiom failed: table is not order x order");
      }
      for (auto x : mul) {
        if (x >= order) {
          throw ValidationError("group axiom failed: closure");
        }
      }
      if (identity >= order) {
        throw ValidationError("group axiom failed: identity out of range");
      }
      for (index_type a = 0; a < order; ++a) {
        if ((*this)(identity, a) != a || (*this)(a, identity) != a) {
          throw ValidationError("group axiom failed: identity");
        }
      }
      for (index_type a = 0; a < order; ++a) {
        for (index_type b = 0; b < order; ++b) {
          for (index_type c = 0; c < order; ++c) {
            if ((*this)((*this)(a, b), c) != (*this)(a, (*this)(b, c))) {
              throw ValidationError("group axiom failed: associativity");
            }
          }
        }
      }
      for (index_type a = 0; a < order; ++a) {
        bool found = false;
        for (index_type b = 0; b < order && !found; ++b) {
          found = (*this)(a, b) == identity && (*this)(b, a) == identity;
        }
        if (!found) {
          throw ValidationError("group axiom failed: inverses");
        }
      }
    }

    index_type inverse(index_type a) const {
      for (index_type b = 0; b < order; ++b) {
        if ((*this)(a, b) == identity) {
          return b;
        }
      }
      throw ValidationError("group axiom failed: inverses");
    }
  };

  inline GroupTable cyclic_group(std::size_t n) {
    if (n == 0) {
      throw ValidationError("cyclic group order must be positive");
    }
    GroupTable g;
    g.order = n;
    g.mul.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      g.labels.push_back(a == 0 ? "e" : (n == 2 ? "g" : "g" + std::to_string(a)));
      for (std::size_t b = 0; b < n; ++b) {
        g.mul[a * n + b] = static_cast<index_type>((a + b) % n);
      }
    }
    return g;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructors
  ////////////////////////////////////////////////////////////////////////

  // M_n(B) with basis the matrix units E_ij (bit i*n + j).
  inline SubsetAlgebra matrix_semiring_basis(std::size_t n) {
    if (n == 0) {
      throw ValidationError("matrix size must be positive");
    }
    if (n * n > 64) {
      throw BoundExceeded("matrix semiring basis limited to 64 matrix units");
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      }
    }
    SubsetAlgebra alg("M" + std::to_string(n) + "(B)", std::move(labels));
    mask_type one = 0;
    for (std::size_t i = 0; i < n; ++i) {
      one |= mask_type(1) << (i * n + i);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          // E_ij E_jk = E_ik
          alg.set_basis_product(i * n + j, j * n + k, mask_type(1) << (i * n + k));
        }
      }
    }
    alg.set_one(one);
    return alg;
  }

  inline FiniteAlgebra matrix_semiring(std::size_t n, Limits const& limits = {}) {
    if (n == 0) {
      throw ValidationError("matrix size must be positive");
    }
    if (n * n >= 32 || (std::size_t(1) << (n * n)) > limits.max_carrier) {
      throw BoundExceeded("M_" + std::to_string(n) + "(B) has carrier 2^"
                          + std::to_string(n * n) + " exceeding max_carrier="
                          + std::to_string(limits.max_carrier));
    }
    return matrix_semiring_basis(n).materialize(limits);
  }

  // Matrix element as a carrier index of matrix_semiring(n): bit i*n + j is
  // entry (i, j).
  inline index_type matrix_index(std::vector<std::vector<int>> const& rows) {
    index_type  out = 0;
    std::size_t n   = rows.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (rows[i][j] != 0) {
          out |= index_type(1) << (i * n + j);
        }
      }
    }
    return out;
  }

  inline SubsetAlgebra group_semiring_basis(GroupTable const& g) {
    g.validate();
    std::vector<std::string> labels;
    for (index_type a = 0; a < g.order; ++a) {
      labels.push_back(g.label(a));
    }
    SubsetAlgebra alg("B[G]", std::move(labels));
    for (index_type a = 0; a < g.order; ++a) {
      for (index_type b = 0; b < g.order; ++b) {
        alg.set_basis_product(a, b, mask_type(1) << g(a, b));
      }
    }
    alg.set_one(mask_type(1) << g.identity);
    return alg;
  }

  // B[G]: subsets of G with union and setwise product.
  inline FiniteAlgebra group_semiring(GroupTable const& g, Limits const& limits = {}) {
    return group_semiring_basis(g).materialize(limits);
  }

  inline SubsetAlgebra function_algebra_basis(std::size_t n) {
    if (n == 0) {
      throw ValidationError("function algebra needs a positive dimension");
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back("e" + std::to_string(i + 1));
    }
    SubsetAlgebra alg("B^" + std::to_string(n), std::move(labels));
    for (std::size_t i = 0; i < n; ++i) {
      alg.set_basis_product(i, i, mask_type(1) << i);
    }
    alg.set_one(alg.full());
    return alg;
  }

  // B^n with pointwise operations; coordinate i is bit i of the index.
  inline FiniteAlgebra function_algebra(std::size_t n, Limits const& limits = {}) {
    return function_algebra_basis(n).materialize(limits);
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  inline std::string write_algebra(FiniteAlgebra const& a) {
    std::ostringstream out;
    auto const         n = a.size();
    out << "algebra " << (a.name().empty() ? "A" : a.name()) << " size=" << n
        << "\n";
    auto block = [&](char const* head, std::vector<index_type> const& t) {
      out << head << "\n";
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          out << (j ? " " : "") << t[i * n + j];
        }
        out << "\n";
      }
    };
    block("add", a.add_table());
    block("mul", a.mul_table());
    out << "zero=" << a.zero() << "\n";
    if (a.one()) {
      out << "one=" << *a.one() << "\n";
    }
    return out.str();
  }

  inline FiniteAlgebra parse_algebra(std::string const& text) {
    std::istringstream in(text);
    std::string        line;
    std::size_t        lineno = 0;
    auto next              = [&]() -> bool {
      while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
          line.pop_back();
        }
        if (!line.empty()) {
          return true;
        }
      }
      return false;
    };
    auto expect_prefix = [&](std::string const& p) {
      if (!next() || line.rfind(p, 0) != 0) {
        throw ParseError("expected '" + p + "'", lineno, 1);
      }
      return line.substr(p.size());
    };
    auto to_index = [&](std::string const& tok, std::size_t col) -> index_type {
      std::size_t pos = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(tok, &pos);
      } catch (std::exception const&) {
        pos = 0;
      }
      if (pos != tok.size() || tok.empty()) {
        throw ParseError("expected an index, got '" + tok + "'", lineno, col);
      }
      return static_cast<index_type>(v);
    };

    std::string const header = expect_prefix("algebra ");
    auto const        sp     = header.rfind(" size=");
    if (sp == std::string::npos || sp == 0) {
      throw ParseError("header must be 'algebra <name> size=<n>'", lineno, 1);
    }
    std::string const name = header.substr(0, sp);
    if (name.find(' ') != std::string::npos) {
      throw ParseError("algebra name must not contain spaces", lineno, 9);
    }
    std::size_t const n = to_index(header.substr(sp + 6), sp + 15);
    if (n == 0) {
      throw ParseError("size must be positive", lineno, sp + 15);
    }

    auto read_block = [&](std::string const& head) {
      if (expect_prefix(head) != "") {
        throw ParseError("unexpected text after '" + head + "'", lineno, 1);
      }
      std::vector<index_type> t;
      t.reserve(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        if (!next()) {
          throw ParseError("table '" + head + "' is truncated", lineno, 1);
        }
        std::istringstream row(line);
        std::string        tok;
        std::size_t        count = 0;
        while (row >> tok) {
          t.push_back(to_index(tok, 1));
          ++count;
        }
        if (count != n) {
          throw ParseError("row of '" + head + "' must have " + std::to_string(n)
                               + " entries",
                           lineno,
                           1);
        }
      }
      return t;
    };
    auto add = read_block("add");
    auto mul = read_block("mul");
    auto const zero = to_index(expect_prefix("zero="), 6);
    std::optional<index_type> one;
    if (next()) {
      if (line.rfind("one=", 0) != 0) {
        throw ParseError("expected 'one=<i>' or end of input", lineno, 1);
      }
      one = to_index(line.substr(4), 5);
      if (next()) {
        throw ParseError("trailing input", lineno, 1);
      }
    }
    try {
      return FiniteAlgebra(name, n, std::move(add), std::move(mul), zero, one);
    } catch (ValidationError const& e) {
      throw ParseError(e.what(), 0, 0);
    }
  }

}  // namespace steinberg

#endif  // STEINBERG_FINITE_ALGEBRA_HPP_

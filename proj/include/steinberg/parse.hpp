#ifndef STEINBERG_PARSE_HPP_
#define STEINBERG_PARSE_HPP_

#include <cctype>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cylinder.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "lpa.hpp"

namespace steinberg {

  // LPA expressions stay terms; anything involving a Z(...) literal becomes
  // an element of the Steinberg algebra, with LPA parts sent through pi_E.
  using ParsedElement = std::variant<LpaTerm, SteinbergElt>;

  inline SteinbergElt as_steinberg(ParsedElement const& x) {
    if (auto const* t = std::get_if<LpaTerm>(&x)) {
      return pi_E(*t);
    }
    return std::get<SteinbergElt>(x);
  }

  inline std::string to_string(ParsedElement const& x) {
    return std::visit([](auto const& v) { return to_string(v); }, x);
  }

  namespace detail {
    // expr   := term ('+' term)*
    // term   := factor (('.' | juxtaposition) factor)*
    // factor := atom '*'?
    // atom   := '0' | id | id '[' n ']' | 'Z(' ... ')' | '(' expr ')'
    class ExprParser {
     public:
      ExprParser(std::shared_ptr<Graph const> g, std::string const& text)
          : _g(std::move(g)), _s(text) {}

      ParsedElement parse() {
        skip();
        if (_i == _s.size()) {
          throw ParseError("empty expression", 0, 1);
        }
        auto x = expr();
        skip();
        if (_i != _s.size()) {
          throw ParseError(std::string("unexpected '") + _s[_i] + "'", 0, _i + 1);
        }
        return x;
      }

     private:
      void skip() {
        while (_i < _s.size() && std::isspace(static_cast<unsigned char>(_s[_i]))) {
          ++_i;
        }
      }

      bool starts_factor() {
        skip();
        if (_i == _s.size()) {
          return false;
        }
        char const c = _s[_i];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
      }

      ParsedElement expr() {
        auto x = term();
        while (true) {
          skip();
          if (_i < _s.size() && _s[_i] == '+') {
            std::size_t const op = _i++;
            if (!starts_factor()) {
              throw ParseError("expected a term after '+'", 0, op + 1);
            }
            x = combine(x, term(), true);
          } else {
            return x;
          }
        }
      }

      ParsedElement term() {
        auto x = factor();
        while (true) {
          skip();
          if (_i < _s.size() && _s[_i] == '.') {
            std::size_t const op = _i++;
            if (!starts_factor()) {
              throw ParseError("expected a factor after '.'", 0, op + 1);
            }
            x = combine(x, factor(), false);
          } else if (starts_factor()) {
            x = combine(x, factor(), false);
          } else {
            return x;
          }
        }
      }

      ParsedElement factor() {
        auto x = atom();
        skip();
        while (_i < _s.size() && _s[_i] == '*') {
          ++_i;
          x = std::visit(
              [](auto const& v) -> ParsedElement {
                if constexpr (std::is_same_v<std::decay_t<decltype(v)>, LpaTerm>) {
                  return lpa_star(v);
                } else {
                  return star(v);
                }
              },
              x);
          skip();
        }
        return x;
      }

      ParsedElement atom() {
        skip();
        std::size_t const at = _i;
        if (_i == _s.size()) {
          throw ParseError("unexpected end of expression", 0, _i + 1);
        }
        char const c = _s[_i];
        if (c == '(') {
          ++_i;
          auto x = expr();
          skip();
          if (_i == _s.size() || _s[_i] != ')') {
            throw ParseError("expected ')'", 0, _i + 1);
          }
          ++_i;
          return x;
        }
        if (c == '0' && (_i + 1 == _s.size() || !std::isalnum(static_cast<unsigned char>(_s[_i + 1])))) {
          ++_i;
          return LpaTerm(_g);
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) {
          throw ParseError(std::string("unexpected '") + c + "'", 0, _i + 1);
        }
        std::string id;
        while (_i < _s.size()
               && (std::isalnum(static_cast<unsigned char>(_s[_i])) || _s[_i] == '_')) {
          id += _s[_i++];
        }
        if (id == "Z" && _i < _s.size() && _s[_i] == '(' && !_g->find_vertex("Z")
            && !_g->find_family("Z")) {
          return z_literal(at);
        }
        if (_i < _s.size() && _s[_i] == '[') {
          while (_i < _s.size() && _s[_i] != ']') {
            id += _s[_i++];
          }
          if (_i == _s.size()) {
            throw ParseError("expected ']'", 0, _i + 1);
          }
          id += _s[_i++];
        }
        if (auto v = _g->find_vertex(id)) {
          return lpa_vertex(_g, *v);
        }
        try {
          return lpa_edge(_g, _g->parse_edge(id));
        } catch (ValidationError const&) {
          throw ParseError("unknown identifier '" + id + "'", 0, at + 1);
        }
      }

      // Z(alpha; beta) or Z(alpha; beta; ~e1,~e2).
      ParsedElement z_literal(std::size_t at) {
        ++_i;  // '('
        auto const close = _s.find(')', _i);
        if (close == std::string::npos) {
          throw ParseError("expected ')' closing Z(", 0, _s.size() + 1);
        }
        auto const                inner = _s.substr(_i, close - _i);
        std::vector<std::string>  parts;
        std::size_t               pos = 0;
        while (true) {
          auto const semi = inner.find(';', pos);
          parts.push_back(trim(inner.substr(pos, semi == std::string::npos ? semi : semi - pos)));
          if (semi == std::string::npos) {
            break;
          }
          pos = semi + 1;
        }
        if (parts.size() < 2 || parts.size() > 3) {
          throw ParseError("Z(...) takes two paths and an optional excluded list", 0, at + 1);
        }
        _i = close + 1;
        try {
          auto const alpha = parse_path(*_g, parts[0]);
          auto const beta  = parse_path(*_g, parts[1]);
          std::vector<EdgeRef> excluded;
          if (parts.size() == 3) {
            std::size_t p = 0;
            while (true) {
              auto const comma = parts[2].find(',', p);
              auto item = trim(parts[2].substr(p, comma == std::string::npos ? comma : comma - p));
              if (!item.empty() && item[0] == '~') {
                item = trim(item.substr(1));
              }
              if (item.empty()) {
                throw ValidationError("empty excluded edge");
              }
              excluded.push_back(_g->parse_edge(item));
              if (comma == std::string::npos) {
                break;
              }
              p = comma + 1;
            }
          }
          return indicator_cylinder(_g, alpha, beta, std::move(excluded));
        } catch (ValidationError const& e) {
          throw ParseError(e.what(), 0, at + 1);
        }
      }

      static std::string trim(std::string s) {
        auto const b = s.find_first_not_of(" \t");
        if (b == std::string::npos) {
          return "";
        }
        auto const e = s.find_last_not_of(" \t");
        return s.substr(b, e - b + 1);
      }

      ParsedElement combine(ParsedElement const& x, ParsedElement const& y, bool sum) {
        auto const* a = std::get_if<LpaTerm>(&x);
        auto const* b = std::get_if<LpaTerm>(&y);
        if (a && b) {
          return sum ? lpa_add(*a, *b) : lpa_mul(*a, *b);
        }
        auto const u = as_steinberg(x);
        auto const v = as_steinberg(y);
        return sum ? add(u, v) : mul(u, v);
      }

      std::shared_ptr<Graph const> _g;
      std::string                  _s;
      std::size_t                  _i = 0;
    };
  }  // namespace detail

  inline ParsedElement parse_element_expr(std::shared_ptr<Graph const> const& g,
                                          std::string const&                  text) {
    return detail::ExprParser(g, text).parse();
  }

}  // namespace steinberg

#endif  // STEINBERG_PARSE_HPP_

#ifndef STEINBERG_ERROR_HPP_
#define STEINBERG_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace steinberg {

  // Base class for everything the library throws.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A precondition on the shape of an input was violated (bad table, invalid
  // groupoid, dangling id, ...).
  class ValidationError : public Error {
   public:
    using Error::Error;
  };

  // An exhaustive search would exceed a configured size bound.
  class BoundExceeded : public Error {
   public:
    using Error::Error;
  };

  // The question is well-posed but no decision procedure in this library
  // covers it (for example equality in L_B(E) for non-row-finite E).
  class OutOfScope : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line, std::size_t column)
        : Error(format(msg, line, column)), _line(line), _column(column) {}

    // 0 when not applicable (single-line inputs).
    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    static std::string format(std::string const& msg,
                              std::size_t        line,
                              std::size_t        column) {
      std::string out = "syntax error";
      if (line != 0) {
        out += " at line " + std::to_string(line);
      }
      if (column != 0) {
        out += (line != 0 ? ", column " : " at column ") + std::to_string(column);
      }
      return out + ": " + msg;
    }

    std::size_t _line;
    std::size_t _column;
  };

}  // namespace steinberg

#endif  // STEINBERG_ERROR_HPP_

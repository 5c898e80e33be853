#ifndef STEINBERG_CONFIG_HPP_
#define STEINBERG_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "error.hpp"

namespace steinberg {

  // Size bounds guarding the exhaustive searches. Every constructor or
  // decision procedure that enumerates something takes a Limits and throws
  // BoundExceeded (naming the bound) instead of running away.
  struct Limits {
    // Largest carrier a FiniteAlgebra may have (M_3(B) = 512 fits; M_4(B) =
    // 65536 must be opted into).
    std::size_t max_carrier = 4096;
    // Largest vertex set for which all 2^n subsets are enumerated.
    std::size_t max_vertices = 16;
    // Largest explicit groupoid.
    std::size_t max_morphisms = 64;
    // Largest semilattice for the bijection search (3! ... (2^3)! = 40320).
    std::size_t max_semilattice = 3;
    // Seed for randomized property runs.
    std::uint64_t seed = 20240607;

    // Reads STEINBERG_MAX_CARRIER, STEINBERG_MAX_VERTICES and STEINBERG_SEED
    // on top of the defaults.
    static Limits from_env() {
      Limits l;
      l.max_carrier  = read("STEINBERG_MAX_CARRIER", l.max_carrier);
      l.max_vertices = read("STEINBERG_MAX_VERTICES", l.max_vertices);
      l.seed         = read("STEINBERG_SEED", l.seed);
      return l;
    }

   private:
    template <typename T>
    static T read(char const* name, T fallback) {
      char const* raw = std::getenv(name);
      if (raw == nullptr || *raw == '\0') {
        return fallback;
      }
      char*              end = nullptr;
      unsigned long long v   = std::strtoull(raw, &end, 10);
      if (end == nullptr || *end != '\0') {
        throw ValidationError(std::string("environment variable ") + name
                              + " is not a non-negative integer: " + raw);
      }
      return static_cast<T>(v);
    }
  };

}  // namespace steinberg

#endif  // STEINBERG_CONFIG_HPP_

#ifndef STEINBERG_SEMIRING_HPP_
#define STEINBERG_SEMIRING_HPP_

#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace steinberg {

  using BigInt   = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  // An element of the tropical semifield: an exact rational or -infinity.
  struct Tropical {
    bool     neg_inf = true;
    Rational value   = 0;

    static Tropical minus_infinity() {
      return Tropical{};
    }
    static Tropical finite(Rational q) {
      return Tropical{false, std::move(q)};
    }

    bool operator==(Tropical const& that) const {
      return neg_inf == that.neg_inf && (neg_inf || value == that.value);
    }
  };

  // bool for B, BigInt for N and Z, Tropical for T, Rational for Q.
  using Scalar = std::variant<bool, BigInt, Tropical, Rational>;

  enum class Domain {
    boolean,
    natural,
    tropical_rational,
    integer_ring,
    rational_field
  };

  struct SemiringDescriptor {
    std::string                                    name;
    Domain                                         domain;
    Scalar                                         zero;
    Scalar                                         one;
    std::function<Scalar(Scalar const&, Scalar const&)> add;
    std::function<Scalar(Scalar const&, Scalar const&)> mul;
    bool additively_idempotent = false;
    bool is_field              = false;
    bool is_boolean            = false;
  };

  inline std::string to_string(Scalar const& x) {
    return std::visit(
        [](auto const& v) -> std::string {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, bool>) {
            return v ? "1" : "0";
          } else if constexpr (std::is_same_v<T, Tropical>) {
            return v.neg_inf ? "-inf" : v.value.str();
          } else {
            return v.str();
          }
        },
        x);
  }

  namespace detail {
    template <typename T>
    T const& as(Scalar const& x, char const* semiring) {
      if (auto const* p = std::get_if<T>(&x)) {
        return *p;
      }
      throw ValidationError(std::string("element ") + to_string(x)
                            + " does not belong to " + semiring);
    }
  }  // namespace detail

  // B, N, T, Z, plus the rational field Q (the simpleness criterion for
  // graph Steinberg algebras needs a field instance to report on).
  inline SemiringDescriptor instantiate_semiring(std::string const& name) {
    using detail::as;
    SemiringDescriptor d;
    d.name = name;
    if (name == "B") {
      d.domain = Domain::boolean;
      d.zero   = false;
      d.one    = true;
      d.add    = [](Scalar const& a, Scalar const& b) -> Scalar {
        return as<bool>(a, "B") || as<bool>(b, "B");
      };
      d.mul = [](Scalar const& a, Scalar const& b) -> Scalar {
        return as<bool>(a, "B") && as<bool>(b, "B");
      };
      d.additively_idempotent = true;
      d.is_boolean            = true;
    } else if (name == "N") {
      d.domain = Domain::natural;
      d.zero   = BigInt(0);
      d.one    = BigInt(1);
      d.add    = [](Scalar const& a, Scalar const& b) -> Scalar {
        return BigInt(as<BigInt>(a, "N") + as<BigInt>(b, "N"));
      };
      d.mul = [](Scalar const& a, Scalar const& b) -> Scalar {
        return BigInt(as<BigInt>(a, "N") * as<BigInt>(b, "N"));
      };
    } else if (name == "Z") {
      d.domain = Domain::integer_ring;
      d.zero   = BigInt(0);
      d.one    = BigInt(1);
      d.add    = [](Scalar const& a, Scalar const& b) -> Scalar {
        return BigInt(as<BigInt>(a, "Z") + as<BigInt>(b, "Z"));
      };
      d.mul = [](Scalar const& a, Scalar const& b) -> Scalar {
        return BigInt(as<BigInt>(a, "Z") * as<BigInt>(b, "Z"));
      };
    } else if (name == "Q") {
      d.domain = Domain::rational_field;
      d.zero   = Rational(0);
      d.one    = Rational(1);
      d.add    = [](Scalar const& a, Scalar const& b) -> Scalar {
        return Rational(as<Rational>(a, "Q") + as<Rational>(b, "Q"));
      };
      d.mul = [](Scalar const& a, Scalar const& b) -> Scalar {
        return Rational(as<Rational>(a, "Q") * as<Rational>(b, "Q"));
      };
      d.is_field = true;
    } else if (name == "T") {
      d.domain = Domain::tropical_rational;
      d.zero   = Tropical::minus_infinity();
      d.one    = Tropical::finite(0);
      // (max, +) with -inf as the additive identity.
      d.add = [](Scalar const& a, Scalar const& b) -> Scalar {
        auto const& x = as<Tropical>(a, "T");
        auto const& y = as<Tropical>(b, "T");
        if (x.neg_inf) {
          return y;
        }
        if (y.neg_inf) {
          return x;
        }
        return Tropical::finite(x.value < y.value ? y.value : x.value);
      };
      d.mul = [](Scalar const& a, Scalar const& b) -> Scalar {
        auto const& x = as<Tropical>(a, "T");
        auto const& y = as<Tropical>(b, "T");
        if (x.neg_inf || y.neg_inf) {
          return Tropical::minus_infinity();
        }
        return Tropical::finite(x.value + y.value);
      };
      d.additively_idempotent = true;
    } else {
      throw ValidationError("unsupported semiring: " + name);
    }
    return d;
  }

  // Outcome of a sampled check: either no violation, or the first one found.
  struct CheckReport {
    bool        ok = true;
    std::string violation;

    std::string message() const {
      return ok ? "no violation found" : violation;
    }
  };

  // Sampled semiring axioms (the element domain is infinite for N, Z, T, Q).
  inline CheckReport check_semiring_axioms(SemiringDescriptor const& d,
                                           std::vector<Scalar> const& samples) {
    auto fail = [](std::string what, std::vector<Scalar> const& xs) {
      std::string s = what + " fails at (";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        s += (i ? ", " : "") + to_string(xs[i]);
      }
      return CheckReport{false, s + ")"};
    };
    for (auto const& a : samples) {
      if (!(d.add(a, d.zero) == a)) {
        return fail("additive identity", {a});
      }
      if (!(d.mul(a, d.one) == a) || !(d.mul(d.one, a) == a)) {
        return fail("multiplicative identity", {a});
      }
      if (!(d.mul(a, d.zero) == d.zero) || !(d.mul(d.zero, a) == d.zero)) {
        return fail("zero annihilation", {a});
      }
      if (d.additively_idempotent && !(d.add(a, a) == a)) {
        return fail("additive idempotency", {a});
      }
      for (auto const& b : samples) {
        if (!(d.add(a, b) == d.add(b, a))) {
          return fail("commutativity of +", {a, b});
        }
        for (auto const& c : samples) {
          if (!(d.add(d.add(a, b), c) == d.add(a, d.add(b, c)))) {
            return fail("associativity of +", {a, b, c});
          }
          if (!(d.mul(d.mul(a, b), c) == d.mul(a, d.mul(b, c)))) {
            return fail("associativity of *", {a, b, c});
          }
          if (!(d.mul(a, d.add(b, c)) == d.add(d.mul(a, b), d.mul(a, c)))) {
            return fail("left distributivity", {a, b, c});
          }
          if (!(d.mul(d.add(b, c), a) == d.add(d.mul(b, a), d.mul(c, a)))) {
            return fail("right distributivity", {a, b, c});
          }
        }
      }
    }
    if (!d.additively_idempotent) {
      // The flag claims a + a != a somewhere; some sample must witness it.
      bool witnessed = false;
      for (auto const& a : samples) {
        witnessed = witnessed || !(d.add(a, a) == a);
      }
      if (!witnessed && samples.size() > 2) {
        return CheckReport{false,
                           "additively_idempotent=false but a + a = a on all "
                           "samples"};
      }
    }
    return {};
  }

  using Relation = std::function<bool(Scalar const&, Scalar const&)>;

  // Reflexivity, symmetry and transitivity on the samples, and closure of the
  // relation under s + _, s * _ and _ * s for related sample pairs.
  inline CheckReport check_congruence_axioms(SemiringDescriptor const& d,
                                             Relation const&           rel,
                                             std::vector<Scalar> const& samples) {
    if (samples.empty()) {
      throw ValidationError("check_congruence_axioms needs at least one sample");
    }
    auto fail = [](std::string what, std::vector<Scalar> const& xs) {
      std::string s = what + " violated at (";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        s += (i ? ", " : "") + to_string(xs[i]);
      }
      return CheckReport{false, s + ")"};
    };
    for (auto const& a : samples) {
      if (!rel(a, a)) {
        return fail("reflexivity", {a});
      }
    }
    for (auto const& a : samples) {
      for (auto const& b : samples) {
        bool const ab = rel(a, b);
        if (ab != rel(b, a)) {
          return fail("symmetry", {a, b});
        }
        if (!ab) {
          continue;
        }
        for (auto const& c : samples) {
          if (rel(b, c) && !rel(a, c)) {
            return fail("transitivity", {a, b, c});
          }
          if (!rel(d.add(c, a), d.add(c, b))) {
            return fail("closure under s + _", {a, b, c});
          }
          if (!rel(d.mul(c, a), d.mul(c, b))) {
            return fail("closure under s * _", {a, b, c});
          }
          if (!rel(d.mul(a, c), d.mul(b, c))) {
            return fail("closure under _ * s", {a, b, c});
          }
        }
      }
    }
    return {};
  }

  // The proper congruence on T relating x and y when x = y or both are
  // finite, i.e. when their tropical product x * y (ordinary sum) is not
  // -infinity.
  inline bool tropical_finite_relation(Scalar const& a, Scalar const& b) {
    auto const& x = detail::as<Tropical>(a, "T");
    auto const& y = detail::as<Tropical>(b, "T");
    return x == y || (!x.neg_inf && !y.neg_inf);
  }

}  // namespace steinberg

#endif  // STEINBERG_SEMIRING_HPP_

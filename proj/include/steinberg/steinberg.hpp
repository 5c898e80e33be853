#ifndef STEINBERG_STEINBERG_HPP_
#define STEINBERG_STEINBERG_HPP_

#include "config.hpp"
#include "congruence.hpp"
#include "cylinder.hpp"
#include "error.hpp"
#include "finite_algebra.hpp"
#include "graph.hpp"
#include "groupoid.hpp"
#include "lpa.hpp"
#include "parse.hpp"
#include "semiring.hpp"
#include "verify.hpp"

#endif  // STEINBERG_STEINBERG_HPP_

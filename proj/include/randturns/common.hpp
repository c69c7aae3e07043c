#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>

namespace randturns {

// Counts (n!, tableau numbers, walk configurations) overflow 64 bits quickly,
// so every counting routine returns an arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;

// An input failed a precondition: malformed permutation, unbalanced step
// word, inadmissible diagram, argument outside a supported range.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured enumeration or quadrature cap would be exceeded.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A quadrature value failed its integer-recovery residual check, which
// signals an undersized grid or accumulation error.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Work limits for the exponential-cost routines. `unlimited` corresponds to
// the CLI --force flag (or WALKS_CAP_OVERRIDE in the environment) and
// disables every check.
struct Caps {
  int syt_enum_max_weight = 12;  // enumerate_syt
  int bruteforce_max_n = 8;      // f_np_bruteforce
  int walk_max_steps = 12;       // enumerate_walks, bound on 2n
  int quad_max_n = 8;            // integral evaluators
  int quad_max_p = 4;
  bool unlimited = false;
};

namespace rng {

// SplitMix64 step; used to derive independent per-stream seeds.
std::uint64_t splitmix64(std::uint64_t state);

// Unbiased draw from [0, bound) by rejection. uniform_int_distribution is
// implementation-defined, so it cannot back reproducible fixtures.
std::uint64_t uniform_index(std::mt19937_64& gen, std::uint64_t bound);

// Uniform double in [0, 1) with 53 random bits.
double canonical(std::mt19937_64& gen);

}  // namespace rng

}  // namespace randturns

#include "randturns/common.hpp"

namespace randturns::rng {

std::uint64_t splitmix64(std::uint64_t state) {
  state += 0x9e3779b97f4a7c15ull;
  state = (state ^ (state >> 30)) * 0xbf58476d1ce4e5b9ull;
  state = (state ^ (state >> 27)) * 0x94d049bb133111ebull;
  return state ^ (state >> 31);
}

std::uint64_t uniform_index(std::mt19937_64& gen, std::uint64_t bound) {
  if (bound < 2) return 0;
  // Reject the tail that would bias the modulus.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = gen();
  } while (draw >= limit);
  return draw % bound;
}

double canonical(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace randturns::rng

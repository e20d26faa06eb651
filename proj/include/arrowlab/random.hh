#ifndef ARROWLAB_GUARD_ARROWLAB_RANDOM_HH
#define ARROWLAB_GUARD_ARROWLAB_RANDOM_HH 1

#include <cstdint>
#include <initializer_list>
#include <random>

namespace arrowlab
{
    // std::mt19937_64 is fully specified by the standard; the distributions are
    // not, so sampling goes through the helpers below to stay reproducible
    // across standard libraries.
    using Rng = std::mt19937_64;

    [[nodiscard]] auto splitmix64(std::uint64_t x) -> std::uint64_t;

    /// Mixes a base seed with a key path, e.g. (seed, n, p_index, trial).
    [[nodiscard]] auto derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) -> std::uint64_t;

    /// Uniform integer in [0, bound), bound >= 1.
    [[nodiscard]] auto uniform_below(Rng & rng, std::uint64_t bound) -> std::uint64_t;

    /// True with probability p; p <= 0 never, p >= 1 always.
    [[nodiscard]] auto bernoulli(Rng & rng, double p) -> bool;
}

#endif

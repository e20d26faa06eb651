#include <arrowlab/random.hh>

#include <cmath>
#include <limits>

namespace arrowlab
{
    auto splitmix64(std::uint64_t x) -> std::uint64_t
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    auto derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) -> std::uint64_t
    {
        std::uint64_t h = splitmix64(seed);
        for (auto k : keys)
            h = splitmix64(h ^ splitmix64(k + 0x632be59bd9b4e019ULL));
        return h;
    }

    auto uniform_below(Rng & rng, std::uint64_t bound) -> std::uint64_t
    {
        // Rejection sampling keeps the result exactly uniform.
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do
            x = rng();
        while (x >= limit);
        return x % bound;
    }

    auto bernoulli(Rng & rng, double p) -> bool
    {
        if (p <= 0.0)
            return false;
        if (p >= 1.0)
            return true;
        // Compare the top 53 bits against p scaled to the same grid.
        auto threshold = static_cast<std::uint64_t>(std::ldexp(p, 53));
        return (rng() >> 11) < threshold;
    }
}

#ifndef DCG_RNG_HPP
#define DCG_RNG_HPP

#include <cmath>
#include <cstdint>
#include <vector>

namespace dcg {

// Deterministic 64-bit generator (splitmix64). Every randomized suite
// derives one stream per instance from (suite seed, instance index), so
// results do not depend on thread count or evaluation order.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in (lo, hi)
    double next_uniform(double lo, double hi) {
        double u = next_double();
        return lo + (hi - lo) * u;
    }

private:
    std::uint64_t state_;
};

inline std::uint64_t derive_seed(std::uint64_t suite_seed, std::uint64_t index) {
    SplitMix64 mix(suite_seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
    return mix.next_u64();
}

// Symmetric Dirichlet(1) sample: exponential spacings, normalized.
// Almost surely strictly positive.
inline std::vector<double> random_simplex_point(SplitMix64& rng, std::size_t n) {
    std::vector<double> w(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double u = rng.next_double();
        if (u <= 0.0) u = 0x1.0p-53;
        w[i] = -std::log(u);
        total += w[i];
    }
    for (auto& x : w) x /= total;
    return w;
}

// Strictly positive density against the uniform weights: f = exp(u),
// u iid uniform(-1,1), normalized so the weighted mean is 1.
inline std::vector<double> random_positive_density(SplitMix64& rng, std::size_t n) {
    std::vector<double> f(n);
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        f[i] = std::exp(rng.next_uniform(-1.0, 1.0));
        mean += f[i];
    }
    mean /= static_cast<double>(n);
    for (auto& x : f) x /= mean;
    return f;
}

} // namespace dcg

#endif

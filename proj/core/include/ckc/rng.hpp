#ifndef CKC_RNG_HPP
#define CKC_RNG_HPP

#include <cstdint>
#include <random>

namespace ckc {

// splitmix64 step; used to derive independent stream seeds from a base
// seed so batches can be generated out of order yet reproducibly.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// mt19937_64 with a fixed double conversion. The engine sequence is
// pinned by the standard; converting via the top 53 bits keeps output
// identical across standard library implementations.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0, 1)
    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    // uniform in [lo, hi]; degenerate intervals return lo
    double uniform(double lo, double hi) {
        double v = lo + (hi - lo) * uniform01();
        return v < lo ? lo : (v > hi ? hi : v);
    }

    // uniform in {0, 1, ..., m-1} by rejection, bias-free
    std::uint64_t below(std::uint64_t m) {
        std::uint64_t threshold = (0 - m) % m;
        for (;;) {
            std::uint64_t r = eng_();
            if (r >= threshold) return r % m;
        }
    }

private:
    std::mt19937_64 eng_;
};

} // namespace ckc

#endif // CKC_RNG_HPP

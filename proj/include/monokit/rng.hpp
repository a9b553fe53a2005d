#pragma once

#include <cstdint>

namespace monokit {

// Small deterministic generator (splitmix64). Scans derive one stream per
// (seed, domain, index) so reductions are schedule-independent and results
// are byte-reproducible for a fixed seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

private:
    std::uint64_t state_;
};

// Stream keyed by (seed, domain, index); domain separates e.g. point scans
// from pair scans run under the same seed.
inline SplitMix64 stream_for(std::uint64_t seed, std::uint64_t domain, std::uint64_t index) {
    SplitMix64 mixer(seed ^ (domain * 0xD1B54A32D192ED03ULL));
    std::uint64_t s = mixer.next();
    SplitMix64 mixer2(s + index * 0x2545F4914F6CDD1DULL);
    return SplitMix64(mixer2.next());
}

} // namespace monokit

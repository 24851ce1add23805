#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace cgkit {

// mt19937_64 with explicit output mappings so that seeded runs reproduce
// exactly; distribution adapters in the standard library leave the mapping
// implementation-defined
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }  // [0, 1)

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // magnitude in [lo, hi) with a fair sign
    double signed_uniform(double lo, double hi) {
        double sign = uniform() < 0.5 ? -1.0 : 1.0;
        return sign * uniform(lo, hi);
    }

    int uniform_int(int n) {  // {0, ..., n-1}
        int v = static_cast<int>(uniform() * n);
        return v < n ? v : n - 1;
    }

    bool bernoulli(double p) { return uniform() < p; }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

  private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace cgkit

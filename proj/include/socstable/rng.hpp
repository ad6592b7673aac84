#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace socstable {

// All randomized generation in this library draws from std::mt19937_64,
// whose output sequence is fixed by the standard, through the two helpers
// below. Standard-library distributions are avoided because their mappings
// are implementation-defined; with these helpers, identical seeds give
// identical artifacts on every platform.

// Uniform in [0, 1): the top 53 bits of one engine draw.
inline double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Fisher-Yates shuffle; one engine draw per step, index by modulo.
template <typename T>
void shuffle_draws(std::vector<T>& values, std::mt19937_64& rng) {
    for (size_t i = values.size(); i > 1; --i) {
        const size_t j = static_cast<size_t>(rng() % i);
        std::swap(values[i - 1], values[j]);
    }
}

} // namespace socstable

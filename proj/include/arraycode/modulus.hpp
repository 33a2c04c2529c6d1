#pragma once

#include <cstdint>
#include <stdexcept>

namespace arraycode {

// Deterministic trial-division primality test, adequate for desk-scale moduli.
bool is_prime(std::uint64_t n);

/// Odd prime modulus sizing each circulant permutation block.
class Modulus {
public:
    explicit Modulus(std::uint32_t q) : q_(q) {
        if (q < 3 || q % 2 == 0 || !is_prime(q)) {
            throw std::invalid_argument("modulus must be an odd prime >= 3");
        }
    }

    std::uint32_t value() const { return q_; }

    friend bool operator==(const Modulus& a, const Modulus& b) { return a.q_ == b.q_; }

private:
    std::uint32_t q_;
};

}  // namespace arraycode

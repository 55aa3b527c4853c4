#pragma once

#include <cstdint>
#include <stdexcept>

namespace grassbal {

using Residue = std::uint32_t;

/// Arithmetic in Z/pZ for a prime p < 2^31. Elements are canonical residues
/// in [0, p).
class PrimeField {
public:
    static constexpr std::uint32_t kGeneralModulus = 1009;

    explicit PrimeField(std::uint32_t p = kGeneralModulus);

    std::uint32_t modulus() const { return p_; }
    std::uint32_t characteristic() const { return p_; }

    Residue reduce(std::int64_t x) const {
        const std::int64_t r = x % static_cast<std::int64_t>(p_);
        return static_cast<Residue>(r < 0 ? r + p_ : r);
    }
    Residue add(Residue x, Residue y) const {
        const std::uint32_t s = x + y;
        return s >= p_ ? s - p_ : s;
    }
    Residue sub(Residue x, Residue y) const { return x >= y ? x - y : x + p_ - y; }
    Residue neg(Residue x) const { return x == 0 ? 0 : p_ - x; }
    Residue mul(Residue x, Residue y) const {
        return static_cast<Residue>(static_cast<std::uint64_t>(x) * y % p_);
    }
    Residue pow(Residue x, std::uint64_t e) const;
    /// Multiplicative inverse; throws std::domain_error on zero.
    Residue inv(Residue x) const;
    /// Maps a signed integer representative in (-p/2, p/2] for display.
    std::int64_t centered(Residue x) const {
        return x > p_ / 2 ? static_cast<std::int64_t>(x) - p_ : x;
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace grassbal

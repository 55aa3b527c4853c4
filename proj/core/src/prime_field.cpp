#include "grassbal/prime_field.hpp"

#include <string>

namespace grassbal {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p)) {
        throw std::invalid_argument("modulus " + std::to_string(p) +
                                    " is not a prime below 2^31");
    }
}

Residue PrimeField::pow(Residue x, std::uint64_t e) const {
    Residue result = 1 % p_;
    while (e) {
        if (e & 1) result = mul(result, x);
        x = mul(x, x);
        e >>= 1;
    }
    return result;
}

Residue PrimeField::inv(Residue x) const {
    if (x % p_ == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
    return pow(x, p_ - 2);
}

}  // namespace grassbal

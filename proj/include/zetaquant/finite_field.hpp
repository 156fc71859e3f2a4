#pragma once

// F_{p^k} with elements encoded as integers whose base-p digits are the
// coefficients of a polynomial modulo a fixed irreducible modulus.
// Multiplication goes through discrete log / antilog tables.

#include <cstdint>
#include <vector>

namespace zetaquant {

bool is_prime(std::uint64_t n);

class FiniteField {
public:
    using Elem = std::uint32_t;

    static constexpr std::uint64_t kDefaultBound = std::uint64_t{1} << 14;

    /// First monic irreducible modulus of degree k in lexicographic order of
    /// its lower coefficients (constant term least significant).
    FiniteField(std::uint32_t p, std::uint32_t k, std::uint64_t bound = kDefaultBound);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t k() const noexcept { return k_; }
    std::uint32_t q() const noexcept { return q_; }
    /// Coefficients of the modulus, constant term first; size k + 1, monic.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    /// Generator of the multiplicative group.
    Elem primitive() const noexcept { return exp_[1 % exp_.size()]; }

    /// Integer n read in the prime subfield.
    Elem from_int(long long n) const noexcept;

    Elem add(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept;
    Elem inv(Elem a) const;  ///< DomainError at 0
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    Elem frobenius(Elem a) const noexcept { return pow(a, p_); }

private:
    Elem slow_mul(Elem a, Elem b) const;

    std::uint32_t p_;
    std::uint32_t k_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<Elem> exp_;           ///< exp_[i] = g^i, i < q - 1
    std::vector<std::uint32_t> log_;  ///< log_[exp_[i]] = i
};

} // namespace zetaquant

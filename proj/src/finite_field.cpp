#include <zetaquant/finite_field.hpp>

#include <zetaquant/errors.hpp>

#include <string>

namespace zetaquant {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients mod p, constant term first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // p is prime: a^{p-2}
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1u) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

/// Remainder of a modulo a nonzero b.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * b[i]) % p);
        }
        trim(a);
    }
    return a;
}

Poly digits(std::uint64_t code, std::uint32_t p, std::uint32_t len) {
    Poly out(len);
    for (std::uint32_t i = 0; i < len; ++i) {
        out[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    return out;
}

bool irreducible(const Poly& f, std::uint32_t p) {
    const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g = digits(code, p, d);
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t k, std::uint64_t bound) : p_(p), k_(k) {
    if (!is_prime(p)) throw DomainError("field: " + std::to_string(p) + " is not prime");
    if (k < 1) throw DomainError("field: degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > bound) throw DomainError("field: p^k exceeds the enumeration bound " + std::to_string(bound));
    }
    q_ = static_cast<std::uint32_t>(q);

    std::uint64_t lower = 1;
    for (std::uint32_t i = 0; i < k; ++i) lower *= p;
    for (std::uint64_t code = 0; code < lower; ++code) {
        Poly f = digits(code, p, k);
        f.push_back(1);
        if (irreducible(f, p)) {
            modulus_ = std::move(f);
            break;
        }
    }
    if (modulus_.empty()) throw Error("field: no irreducible modulus found");

    log_.assign(q_, 0);
    for (Elem g = 1; g < q_; ++g) {
        std::vector<Elem> powers{1};
        Elem x = g;
        while (x != 1) {
            powers.push_back(x);
            x = slow_mul(x, g);
        }
        if (powers.size() == q_ - 1) {
            exp_ = std::move(powers);
            break;
        }
    }
    if (exp_.empty()) throw Error("field: no primitive element found");
    for (std::uint32_t i = 0; i < exp_.size(); ++i) log_[exp_[i]] = i;
}

FiniteField::Elem FiniteField::slow_mul(Elem a, Elem b) const {
    const Poly pa = digits(a, p_, k_);
    const Poly pb = digits(b, p_, k_);
    Poly prod(2 * k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
        for (std::uint32_t j = 0; j < k_; ++j) {
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p_);
        }
    }
    const Poly r = poly_mod(prod, modulus_, p_);
    Elem out = 0;
    for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
    return out;
}

FiniteField::Elem FiniteField::from_int(long long n) const noexcept {
    const long long r = n % static_cast<long long>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const noexcept {
    if (p_ == 2) return a ^ b;
    Elem out = 0;
    Elem place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        out += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return out;
}

FiniteField::Elem FiniteField::neg(Elem a) const noexcept {
    if (p_ == 2) return a;
    Elem out = 0;
    Elem place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        out += ((p_ - a % p_) % p_) * place;
        a /= p_;
        place *= p_;
    }
    return out;
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    const std::uint32_t n = q_ - 1;
    std::uint32_t e = log_[a] + log_[b];
    if (e >= n) e -= n;
    return exp_[e];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
    if (a == 0) throw DomainError("field: 0 has no inverse");
    const std::uint32_t n = q_ - 1;
    return exp_[(n - log_[a]) % n];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t n = q_ - 1;
    return exp_[static_cast<std::size_t>(log_[a] * (e % n) % n)];
}

} // namespace zetaquant

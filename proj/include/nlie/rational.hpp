#pragma once

#include <gmp.h>

#include <string>
#include <string_view>
#include <vector>

namespace nlie {

/// Arbitrary-precision rational number with value semantics, backed by GMP.
/// Always held in canonical form: gcd(num, den) = 1 and den > 0.
class Rat {
public:
    Rat() { mpq_init(q_); }
    Rat(long n) {
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }
    Rat(long n, long d);
    Rat(const Rat& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rat(Rat&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rat& operator=(const Rat& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rat() { mpq_clear(q_); }

    /// Parses "p" or "p/q" (optional leading '-' or '+').
    /// Throws std::invalid_argument on malformed input, std::domain_error on q = 0.
    static Rat from_string(std::string_view s);

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    int sgn() const { return mpq_sgn(q_); }

    Rat& operator+=(const Rat& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    /// Division by zero throws std::domain_error.
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    Rat operator-() const {
        Rat r(*this);
        mpq_neg(r.q_, r.q_);
        return r;
    }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Rat inv() const;
    Rat abs() const {
        Rat r(*this);
        mpq_abs(r.q_, r.q_);
        return r;
    }
    /// Integer power; negative exponents invert (throw on zero base).
    Rat pow(long e) const;

    Rat numerator() const;
    Rat denominator() const;

    /// True when the value is the square of a rational; if so and root != nullptr,
    /// stores the non-negative square root.
    bool is_square(Rat* root = nullptr) const;

    /// Canonical decimal string, "p" or "p/q".
    std::string str() const;

private:
    mpq_t q_;
};

inline Rat operator*(long a, const Rat& b) { return Rat(a) * b; }

}  // namespace nlie

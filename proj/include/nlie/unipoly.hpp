#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nlie/rational.hpp"

namespace nlie {

/// Dense univariate polynomial over Rat in a named formal variable.
/// Coefficients are stored lowest degree first with the top entry nonzero;
/// the zero polynomial has an empty coefficient list and degree() == -1.
class UniPoly {
public:
    UniPoly() : var_("t") {}
    explicit UniPoly(std::string var) : var_(std::move(var)) {}
    UniPoly(long c) : var_("t") {
        if (c != 0) c_ = {Rat(c)};
    }
    UniPoly(const Rat& c) : var_("t") {
        if (!c.is_zero()) c_ = {c};
    }

    static UniPoly constant(const Rat& c, std::string var = "t");
    static UniPoly variable(std::string var = "t");
    /// Coefficients lowest degree first.
    static UniPoly from_coeffs(std::vector<Rat> coeffs, std::string var = "t");

    const std::string& var() const { return var_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rat coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rat(0); }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    /// Constant value; throws std::domain_error if degree > 0.
    Rat as_rat() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    friend UniPoly operator*(const Rat& c, const UniPoly& p);

    friend bool operator==(const UniPoly& a, const UniPoly& b);
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Euclidean division by a nonzero divisor: returns (quotient, remainder)
    /// with deg(remainder) < deg(divisor). Throws std::domain_error on zero divisor.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
    /// Division asserting exactness; throws std::domain_error on a nonzero remainder.
    UniPoly exact_div(const UniPoly& divisor) const;

    UniPoly monic() const;
    UniPoly derivative() const;
    UniPoly pow(unsigned e) const;
    Rat eval(const Rat& x) const;
    /// Multiplicity of x as a root (0 when p(x) != 0); throws on the zero polynomial.
    int root_multiplicity(const Rat& x) const;

    /// Human-readable form such as "t^2-4"; "0" for the zero polynomial.
    std::string str() const;

private:
    void trim();
    /// Resolves the variable for an operation mixing *this and o; constants are
    /// var-agnostic, otherwise names must agree.
    std::string merged_var(const UniPoly& o) const;

    std::string var_;
    std::vector<Rat> c_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
UniPoly poly_gcd(UniPoly a, UniPoly b);

/// Quotient of univariate polynomials, kept reduced with a monic denominator.
class RatFunc {
public:
    RatFunc() : num_(), den_(UniPoly::constant(Rat(1))) {}
    RatFunc(const Rat& c) : num_(UniPoly::constant(c)), den_(UniPoly::constant(Rat(1))) {}
    RatFunc(UniPoly num) : num_(std::move(num)), den_(UniPoly::constant(Rat(1), num_.var())) {}
    /// Throws std::domain_error when den is zero.
    RatFunc(UniPoly num, UniPoly den);

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat as_rat() const;
    /// Polynomial value; throws std::domain_error when the denominator is non-constant.
    UniPoly as_poly() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    RatFunc inv() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    bool finite_at(const Rat& x) const { return den_.eval(x) != Rat(0); }
    /// Throws std::domain_error when evaluated at a pole.
    Rat value_at(const Rat& x) const;
    /// Pole order at x: multiplicity of x in the reduced denominator (0 when finite).
    int pole_order_at(const Rat& x) const;

    std::string str() const;

private:
    void reduce();

    UniPoly num_, den_;
};

}  // namespace nlie

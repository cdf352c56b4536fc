#pragma once

#include <map>
#include <string>
#include <vector>

#include "nlie/rational.hpp"

namespace nlie {

// Multivariate polynomial over Rat with a fixed number of variables.
// Terms are kept in a map from exponent vector to nonzero coefficient,
// so the zero polynomial is the empty map and equality is structural.
class MultiPoly {
  public:
    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
    static MultiPoly constant(int nvars, const Rat& c);
    static MultiPoly variable(int nvars, int i);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat as_rat() const;
    Rat coeff(const std::vector<unsigned>& exps) const;
    const std::map<std::vector<unsigned>, Rat>& terms() const { return terms_; }
    int total_degree() const;
    int degree_in(int i) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rat& c, const MultiPoly& p);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(unsigned e) const;
    // Partial derivative with respect to variable i.
    MultiPoly partial(int i) const;
    // Substitute x_i -> x_i + a.
    MultiPoly shift_var(int i, const Rat& a) const;
    // Substitute x_i -> a, keeping the variable count.
    MultiPoly subst_var(int i, const Rat& a) const;
    Rat eval(const std::vector<Rat>& xs) const;

    // Default names are x1, x2, ... unless overridden.
    std::string str(const std::vector<std::string>& names = {}) const;

  private:
    void add_term(const std::vector<unsigned>& exps, const Rat& c);
    void check_compatible(const MultiPoly& o) const;

    int nvars_;
    std::map<std::vector<unsigned>, Rat> terms_;
};

}  // namespace nlie

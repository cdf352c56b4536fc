#include "nlie/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace nlie {

UniPoly UniPoly::constant(const Rat& c, std::string var) {
    UniPoly p(std::move(var));
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

UniPoly UniPoly::variable(std::string var) {
    UniPoly p(std::move(var));
    p.c_ = {Rat(0), Rat(1)};
    return p;
}

UniPoly UniPoly::from_coeffs(std::vector<Rat> coeffs, std::string var) {
    UniPoly p(std::move(var));
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

Rat UniPoly::as_rat() const {
    if (!is_constant()) throw std::domain_error("UniPoly: not a constant: " + str());
    return coeff(0);
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::string UniPoly::merged_var(const UniPoly& o) const {
    if (is_constant()) return o.is_constant() ? var_ : o.var_;
    if (o.is_constant()) return var_;
    if (var_ != o.var_)
        throw std::invalid_argument("UniPoly: mixed variables '" + var_ + "' and '" + o.var_ + "'");
    return var_;
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r(a.merged_var(b));
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r(a.merged_var(b));
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

UniPoly operator*(const Rat& c, const UniPoly& p) {
    UniPoly r(p);
    for (auto& x : r.c_) x *= c;
    r.trim();
    return r;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    if (!a.is_constant() && !b.is_constant() && a.var_ != b.var_) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
    std::string v = merged_var(divisor);
    UniPoly q(v), rem(*this);
    rem.var_ = v;
    int dd = divisor.degree();
    Rat lead_inv = divisor.leading().inv();
    if (rem.degree() >= dd) q.c_.assign(rem.degree() - dd + 1, Rat(0));
    while (rem.degree() >= dd) {
        int k = rem.degree() - dd;
        Rat f = rem.leading() * lead_inv;
        q.c_[k] = f;
        for (int i = 0; i <= dd; ++i) rem.c_[k + i] -= f * divisor.c_[i];
        rem.trim();
    }
    q.trim();
    return {q, rem};
}

UniPoly UniPoly::exact_div(const UniPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::domain_error("UniPoly: inexact division");
    return q;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return leading().inv() * *this;
}

UniPoly UniPoly::derivative() const {
    UniPoly r(var_);
    for (size_t i = 1; i < c_.size(); ++i) r.c_.push_back(Rat(static_cast<long>(i)) * c_[i]);
    r.trim();
    return r;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r = UniPoly::constant(Rat(1), var_);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

Rat UniPoly::eval(const Rat& x) const {
    Rat r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

int UniPoly::root_multiplicity(const Rat& x) const {
    if (is_zero()) throw std::domain_error("UniPoly: root multiplicity of zero polynomial");
    UniPoly lin = UniPoly::variable(var_) - UniPoly::constant(x, var_);
    UniPoly p(*this);
    int k = 0;
    while (true) {
        auto [q, r] = p.divmod(lin);
        if (!r.is_zero()) return k;
        p = q;
        ++k;
    }
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rat& a = c_[i];
        if (a.is_zero()) continue;
        Rat mag = a.abs();
        if (first) {
            if (a.sgn() < 0) os << "-";
            first = false;
        } else {
            os << (a.sgn() < 0 ? "-" : "+");
        }
        if (i == 0) {
            os << mag.str();
        } else {
            if (!mag.is_one()) os << mag.str() << "*";
            os << var_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = UniPoly::constant(Rat(1), den_.var());
        return;
    }
    UniPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    Rat lead = den_.leading();
    if (!lead.is_one()) {
        Rat li = lead.inv();
        num_ = li * num_;
        den_ = li * den_;
    }
}

Rat RatFunc::as_rat() const {
    if (!is_constant()) throw std::domain_error("RatFunc: not a constant: " + str());
    return num_.coeff(0);
}

UniPoly RatFunc::as_poly() const {
    if (!den_.is_constant()) throw std::domain_error("RatFunc: not a polynomial: " + str());
    return den_.coeff(0).inv() * num_;
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

Rat RatFunc::value_at(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("RatFunc: pole at " + x.str());
    return num_.eval(x) / d;
}

int RatFunc::pole_order_at(const Rat& x) const {
    if (is_zero()) return 0;
    return den_.root_multiplicity(x);
}

std::string RatFunc::str() const {
    if (den_.is_constant()) return as_poly().str();
    std::string n = num_.str();
    if (num_.degree() > 0) n = "(" + n + ")";
    return n + "/(" + den_.str() + ")";
}

}  // namespace nlie

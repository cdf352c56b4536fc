#include "nlie/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nlie {

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_[std::vector<unsigned>(nvars, 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::out_of_range("MultiPoly: variable index");
    MultiPoly p(nvars);
    std::vector<unsigned> e(nvars, 0);
    e[i] = 1;
    p.terms_[e] = Rat(1);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
}

Rat MultiPoly::as_rat() const {
    if (!is_constant()) throw std::domain_error("MultiPoly: not a constant: " + str());
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

Rat MultiPoly::coeff(const std::vector<unsigned>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rat(0) : it->second;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (unsigned k : e) s += static_cast<int>(k);
        d = std::max(d, s);
    }
    return d;
}

int MultiPoly::degree_in(int i) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[i]));
    return d;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
}

void MultiPoly::add_term(const std::vector<unsigned>& exps, const Rat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a);
    r += b;
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a);
    r -= b;
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.nvars_);
    std::vector<unsigned> e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly operator*(const Rat& c, const MultiPoly& p) {
    MultiPoly r(p.nvars_);
    if (c.is_zero()) return r;
    r = p;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = MultiPoly::constant(nvars_, Rat(1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

MultiPoly MultiPoly::partial(int i) const {
    if (i < 0 || i >= nvars_) throw std::out_of_range("MultiPoly: variable index");
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        std::vector<unsigned> f(e);
        f[i] -= 1;
        r.add_term(f, Rat(static_cast<long>(e[i])) * c);
    }
    return r;
}

MultiPoly MultiPoly::shift_var(int i, const Rat& a) const {
    if (i < 0 || i >= nvars_) throw std::out_of_range("MultiPoly: variable index");
    if (a.is_zero()) return *this;
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        // (x_i + a)^k expanded with binomial coefficients.
        unsigned k = e[i];
        Rat binom(1);
        Rat apow(1);
        for (unsigned j = 0; j <= k; ++j) {
            std::vector<unsigned> f(e);
            f[i] = k - j;
            r.add_term(f, c * binom * apow);
            binom *= Rat(static_cast<long>(k - j), static_cast<long>(j + 1));
            apow *= a;
        }
    }
    return r;
}

MultiPoly MultiPoly::subst_var(int i, const Rat& a) const {
    if (i < 0 || i >= nvars_) throw std::out_of_range("MultiPoly: variable index");
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Rat v = c * a.pow(static_cast<long>(e[i]));
        std::vector<unsigned> f(e);
        f[i] = 0;
        r.add_term(f, v);
    }
    return r;
}

Rat MultiPoly::eval(const std::vector<Rat>& xs) const {
    if (static_cast<int>(xs.size()) != nvars_)
        throw std::invalid_argument("MultiPoly: wrong number of evaluation points");
    Rat total(0);
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) term *= xs[i].pow(static_cast<long>(e[i]));
        total += term;
    }
    return total;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat mag = c.abs();
        if (first) {
            if (c.sgn() < 0) os << "-";
            first = false;
        } else {
            os << (c.sgn() < 0 ? "-" : "+");
        }
        bool any_var = false;
        std::ostringstream vars;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (any_var) vars << "*";
            any_var = true;
            if (static_cast<size_t>(i) < names.size())
                vars << names[i];
            else
                vars << "x" << (i + 1);
            if (e[i] > 1) vars << "^" << e[i];
        }
        if (!any_var) {
            os << mag.str();
        } else {
            if (!mag.is_one()) os << mag.str() << "*";
            os << vars.str();
        }
    }
    return os.str();
}

}  // namespace nlie

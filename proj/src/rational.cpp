#include "nlie/rational.hpp"

#include <cstring>
#include <stdexcept>

namespace nlie {

Rat::Rat(long n, long d) {
    mpq_init(q_);
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    mpq_set_si(q_, n, static_cast<unsigned long>(d));
    mpq_canonicalize(q_);
}

Rat Rat::from_string(std::string_view s) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
        return v;
    };
    s = trim(s);
    if (s.empty()) throw std::invalid_argument("Rat: empty string");

    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = trim(s.substr(0, slash));
        den = trim(s.substr(slash + 1));
        if (num.empty() || den.empty()) throw std::invalid_argument("Rat: malformed fraction");
        if (den.find('/') != std::string_view::npos)
            throw std::invalid_argument("Rat: multiple '/'");
    }

    Rat r;
    mpz_t zn, zd;
    mpz_init(zn);
    mpz_init(zd);
    std::string ns(num), ds(den);
    bool ok = mpz_set_str(zn, ns.c_str(), 10) == 0 && mpz_set_str(zd, ds.c_str(), 10) == 0;
    if (!ok) {
        mpz_clear(zn);
        mpz_clear(zd);
        throw std::invalid_argument("Rat: not a rational literal: '" + std::string(s) + "'");
    }
    if (mpz_sgn(zd) == 0) {
        mpz_clear(zn);
        mpz_clear(zd);
        throw std::domain_error("Rat: zero denominator");
    }
    mpq_set_num(r.q_, zn);
    mpq_set_den(r.q_, zd);
    mpq_canonicalize(r.q_);
    mpz_clear(zn);
    mpz_clear(zd);
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
}

Rat Rat::inv() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    Rat r;
    mpq_inv(r.q_, q_);
    return r;
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    Rat base = e > 0 ? *this : inv();
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), k);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), k);
    return r;
}

Rat Rat::numerator() const {
    Rat r;
    mpq_set_z(r.q_, mpq_numref(q_));
    return r;
}

Rat Rat::denominator() const {
    Rat r;
    mpq_set_z(r.q_, mpq_denref(q_));
    return r;
}

bool Rat::is_square(Rat* root) const {
    if (sgn() < 0) return false;
    if (mpz_perfect_square_p(mpq_numref(q_)) == 0 || mpz_perfect_square_p(mpq_denref(q_)) == 0)
        return false;
    if (root != nullptr) {
        Rat r;
        mpz_sqrt(mpq_numref(r.q_), mpq_numref(q_));
        mpz_sqrt(mpq_denref(r.q_), mpq_denref(q_));
        *root = r;
    }
    return true;
}

std::string Rat::str() const {
    char* cs = mpq_get_str(nullptr, 10, q_);
    std::string out(cs);
    void (*freer)(void*, size_t) = nullptr;
    mp_get_memory_functions(nullptr, nullptr, &freer);
    freer(cs, std::strlen(cs) + 1);
    return out;
}

}  // namespace nlie

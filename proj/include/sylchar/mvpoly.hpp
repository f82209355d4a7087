#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "sylchar/rational.hpp"

namespace sylchar {

// Sparse multivariate polynomial with rational coefficients.
// Monomials are exponent vectors; trailing zero exponents are trimmed so
// the same monomial always has one representation.
class MVPoly {
public:
    using Monomial = std::vector<std::uint8_t>;

    MVPoly() {}
    MVPoly(Rational c) {
        if (!c.is_zero()) terms_[Monomial{}] = c;
    }
    MVPoly(std::int64_t c) : MVPoly(Rational(c)) {}

    static MVPoly var(std::size_t i) {
        MVPoly p;
        Monomial m(i + 1, 0);
        m[i] = 1;
        p.terms_[std::move(m)] = Rational(1);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    friend MVPoly operator+(const MVPoly& a, const MVPoly& b) {
        MVPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend MVPoly operator-(const MVPoly& a, const MVPoly& b) {
        MVPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend MVPoly operator*(const MVPoly& a, const MVPoly& b) {
        MVPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(mul_mono(ma, mb), ca * cb);
        return r;
    }
    MVPoly operator-() const {
        MVPoly r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    MVPoly& operator+=(const MVPoly& o) { return *this = *this + o; }
    MVPoly& operator-=(const MVPoly& o) { return *this = *this - o; }
    MVPoly& operator*=(const MVPoly& o) { return *this = *this * o; }

    friend bool operator==(const MVPoly& a, const MVPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MVPoly& a, const MVPoly& b) { return !(a == b); }

    MVPoly pow(unsigned k) const {
        MVPoly r(1);
        for (unsigned i = 0; i < k; ++i) r *= *this;
        return r;
    }

    // Coefficient (itself a polynomial in the remaining variables) of var^e.
    MVPoly coeff_of(std::size_t var_idx, unsigned e) const {
        MVPoly r;
        for (const auto& [m, c] : terms_) {
            unsigned have = var_idx < m.size() ? m[var_idx] : 0;
            if (have != e) continue;
            Monomial m2 = m;
            if (var_idx < m2.size()) m2[var_idx] = 0;
            trim(m2);
            r.add_term(m2, c);
        }
        return r;
    }

    unsigned degree_in(std::size_t var_idx) const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_)
            if (var_idx < m.size() && m[var_idx] > d) d = m[var_idx];
        return d;
    }

    Rational eval(const std::vector<Rational>& xs) const {
        Rational r(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < m.size(); ++i)
                for (unsigned k = 0; k < m[i]; ++k) t *= xs.at(i);
            r += t;
        }
        return r;
    }

    // Evaluate modulo p with integer assignments (coefficients must be integers).
    std::int64_t eval_mod(const std::vector<std::int64_t>& xs, std::int64_t p) const {
        std::int64_t r = 0;
        for (const auto& [m, c] : terms_) {
            if (!c.is_integer()) throw std::domain_error("MVPoly::eval_mod: non-integer coefficient");
            std::int64_t t = ((c.num() % p) + p) % p;
            for (std::size_t i = 0; i < m.size(); ++i)
                for (unsigned k = 0; k < m[i]; ++k) t = (t * (xs.at(i) % p)) % p;
            r = (r + t) % p;
        }
        return r;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            std::string t = c.str();
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                t += "*" + (i < names.size() ? names[i] : "x" + std::to_string(i));
                if (m[i] > 1) t += "^" + std::to_string(m[i]);
            }
            if (!s.empty()) s += " + ";
            s += t;
        }
        return s;
    }

private:
    static void trim(Monomial& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }
    static Monomial mul_mono(const Monomial& a, const Monomial& b) {
        Monomial m(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            unsigned v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
            m[i] = (std::uint8_t)v;
        }
        trim(m);
        return m;
    }
    void add_term(Monomial m, Rational c) {
        trim(m);
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(std::move(m), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    std::map<Monomial, Rational> terms_;
};

} // namespace sylchar

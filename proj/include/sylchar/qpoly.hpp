#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "sylchar/rational.hpp"

namespace sylchar {

// Univariate polynomial in q with exact rational coefficients.
// Count polynomials need rationals: the p = 3 branches of the F4 table
// carry coefficients like 9/2 and 161/2.
class QPoly {
public:
    QPoly() {}
    QPoly(Rational c) { if (!c.is_zero()) coeff_ = {c}; }
    QPoly(std::int64_t c) : QPoly(Rational(c)) {}
    explicit QPoly(std::vector<Rational> coeff) : coeff_(std::move(coeff)) { trim(); }

    static QPoly q() { return monomial(1, 1); }
    static QPoly monomial(Rational c, std::size_t deg) {
        std::vector<Rational> v(deg + 1);
        v[deg] = c;
        return QPoly(std::move(v));
    }
    // q^k
    static QPoly q_pow(std::size_t k) { return monomial(1, k); }
    // (q-1)^k
    static QPoly qm1_pow(std::size_t k) {
        QPoly r(1), f = q() - QPoly(1);
        for (std::size_t i = 0; i < k; ++i) r = r * f;
        return r;
    }

    bool is_zero() const { return coeff_.empty(); }
    std::size_t degree() const { return coeff_.empty() ? 0 : coeff_.size() - 1; }
    Rational coeff(std::size_t i) const {
        return i < coeff_.size() ? coeff_[i] : Rational(0);
    }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<Rational> v(std::max(a.coeff_.size(), b.coeff_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return QPoly(std::move(v));
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) {
        std::vector<Rational> v(std::max(a.coeff_.size(), b.coeff_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
        return QPoly(std::move(v));
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly();
        std::vector<Rational> v(a.coeff_.size() + b.coeff_.size() - 1);
        for (std::size_t i = 0; i < a.coeff_.size(); ++i)
            for (std::size_t j = 0; j < b.coeff_.size(); ++j)
                v[i + j] += a.coeff_[i] * b.coeff_[j];
        return QPoly(std::move(v));
    }
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeff_ == b.coeff_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    Rational eval(Rational x) const {
        Rational r(0);
        for (std::size_t i = coeff_.size(); i-- > 0;) r = r * x + coeff_[i];
        return r;
    }

    // Coefficients after the substitution q = v + 1 (index i = coefficient of v^i).
    // The appendix tables print counts in v = q - 1.
    std::vector<Rational> v_coefficients() const {
        std::vector<Rational> out(coeff_.size());
        // v^0 row of Pascal's triangle upward: expand sum c_i (v+1)^i
        for (std::size_t i = 0; i < coeff_.size(); ++i) {
            Rational binom(1);
            for (std::size_t k = 0; k <= i; ++k) {
                out[k] += coeff_[i] * binom;
                binom = binom * Rational((std::int64_t)(i - k)) / Rational((std::int64_t)(k + 1));
            }
        }
        while (!out.empty() && out.back().is_zero()) out.pop_back();
        return out;
    }
    static QPoly from_v_coefficients(const std::vector<Rational>& vc) {
        QPoly v = q() - QPoly(1), r;
        QPoly pw(1);
        for (std::size_t i = 0; i < vc.size(); ++i) {
            r += QPoly(vc[i]) * pw;
            pw *= v;
        }
        return r;
    }

    std::string str(const char* var = "q") const {
        if (coeff_.empty()) return "0";
        std::string s;
        for (std::size_t i = coeff_.size(); i-- > 0;) {
            if (coeff_[i].is_zero()) continue;
            Rational c = coeff_[i];
            if (s.empty()) {
                if (c < Rational(0)) { s += "-"; c = -c; }
            } else {
                s += c < Rational(0) ? " - " : " + ";
                if (c < Rational(0)) c = -c;
            }
            if (i == 0) { s += c.str(); continue; }
            if (c != Rational(1)) s += c.str() + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.str(); }

private:
    void trim() {
        while (!coeff_.empty() && coeff_.back().is_zero()) coeff_.pop_back();
    }
    std::vector<Rational> coeff_;  // coeff_[i] multiplies q^i
};

} // namespace sylchar

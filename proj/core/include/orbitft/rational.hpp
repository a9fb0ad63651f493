#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace orbitft {

using Rational = mpq_class;

// z = re + im*i with exact rational parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long v) : re(v), im(0) {}
    GaussianRational(const Rational& r) : re(r), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_rational() const { return im == 0; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

// i^k for any integer k, exact.
inline GaussianRational i_power(long k) {
    long r = ((k % 4) + 4) % 4;
    switch (r) {
        case 0: return {Rational(1), Rational(0)};
        case 1: return {Rational(0), Rational(1)};
        case 2: return {Rational(-1), Rational(0)};
        default: return {Rational(0), Rational(-1)};
    }
}

inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) {
    return r.get_den() == 1;
}

// "a", "a+bi", "bi" forms; used by the JSON layer.
inline std::string gaussian_to_string(const GaussianRational& z) {
    if (z.im == 0) return rational_to_string(z.re);
    std::string im_part = rational_to_string(z.im) + "i";
    if (z.re == 0) return im_part;
    if (z.im > 0) return rational_to_string(z.re) + "+" + im_part;
    return rational_to_string(z.re) + im_part;
}

inline GaussianRational gaussian_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty coefficient literal");
    if (s.back() != 'i') return {rational_from_string(s), Rational(0)};
    std::string body = s.substr(0, s.size() - 1);
    // split at the last +/- that is not a leading sign and not inside "/"
    for (size_t pos = body.size(); pos-- > 1;) {
        char c = body[pos];
        if ((c == '+' || c == '-') && body[pos - 1] != '/') {
            Rational re = rational_from_string(body.substr(0, pos));
            std::string imtxt = body.substr(pos);
            if (imtxt == "+") imtxt = "1";
            else if (imtxt == "-") imtxt = "-1";
            return {re, rational_from_string(imtxt)};
        }
    }
    if (body.empty() || body == "+") return {Rational(0), Rational(1)};
    if (body == "-") return {Rational(0), Rational(-1)};
    return {Rational(0), rational_from_string(body)};
}

}

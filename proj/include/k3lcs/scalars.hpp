#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "k3lcs/error.hpp"

namespace k3lcs {

using Integer = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const Integer& n);
    Rational(const Integer& num, const Integer& den);

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// Requires is_integer(); throws otherwise.
    Integer to_integer() const;
    std::int64_t to_int64() const;

    double to_double() const { return value_.get_d(); }
    long double to_long_double() const;

    /// Canonical text: "p" for integers, "p/q" otherwise.
    std::string str() const { return value_.get_str(); }

    Rational floor() const;
    Rational abs() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class v);
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Element of Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re);  // NOLINT(google-explicit-constructor)
    GaussianRational(std::int64_t re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

    std::string str() const;

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// |x|^2 = re^2 + im^2.
Rational abs_sq(const GaussianRational& x);

/// Orders x against sqrt(p/q) without approximation: compares q*x^2 with p, guarded by the sign of x.
/// Throws ErrorKind::InvalidThreshold when q <= 0 or p < 0.
std::strong_ordering cmp_sq_threshold(const Rational& x, std::int64_t p, std::int64_t q);

}  // namespace k3lcs

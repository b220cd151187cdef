#include "k3lcs/scalars.hpp"

#include <limits>
#include <utility>

namespace k3lcs {

namespace {

mpq_class make_canonical(mpq_class q) {
    q.canonicalize();
    return q;
}

Integer parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) {
        throw Error(ErrorKind::Parse, "rational-syntax", "empty integer in rational '" + std::string(whole) + "'");
    }
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) {
        throw Error(ErrorKind::Parse, "rational-syntax", "malformed rational '" + std::string(whole) + "'");
    }
    for (std::size_t k = start; k < text.size(); ++k) {
        if (text[k] < '0' || text[k] > '9') {
            throw Error(ErrorKind::Parse, "rational-syntax", "malformed rational '" + std::string(whole) + "'");
        }
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return Integer(digits, 10);
}

}  // namespace

Rational::Rational(mpq_class v) : value_(make_canonical(std::move(v))) {}

Rational::Rational(std::int64_t n) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(n));
    value_ = mpq_class(z);
}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}

Rational::Rational(const Integer& n) : value_(n) {}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw Error(ErrorKind::DivisionByZero, "denominator>0", "rational with zero denominator");
    }
    value_ = make_canonical(mpq_class(num, den));
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
        throw Error(ErrorKind::Parse, "denominator>0", "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

Integer Rational::to_integer() const {
    if (!is_integer()) {
        throw Error(ErrorKind::NotInteger, "integral", "rational " + str() + " is not an integer");
    }
    return value_.get_num();
}

std::int64_t Rational::to_int64() const {
    Integer n = to_integer();
    if (!n.fits_slong_p()) {
        throw Error(ErrorKind::NotInteger, "fits-int64", "integer " + n.get_str() + " out of range");
    }
    return n.get_si();
}

long double Rational::to_long_double() const {
    // Split to keep ~64 bits of mantissa where double would only carry 53.
    mpz_class q = value_.get_num() / value_.get_den();
    mpq_class frac = value_ - mpq_class(q);
    return static_cast<long double>(q.get_d()) + static_cast<long double>(frac.get_d());
}

Rational Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return Rational(q);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "nonzero-divisor", "division of " + str() + " by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

GaussianRational::GaussianRational(Rational re) : re_(std::move(re)) {}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    Rational n = abs_sq(o);
    if (n.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "nonzero-divisor", "division of " + str() + " by zero");
    }
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string s = re_.is_zero() ? std::string() : re_.str();
    if (!re_.is_zero() && im_.sign() > 0) s += "+";
    return s + im_.str() + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

Rational abs_sq(const GaussianRational& x) { return x.re() * x.re() + x.im() * x.im(); }

std::strong_ordering cmp_sq_threshold(const Rational& x, std::int64_t p, std::int64_t q) {
    if (q <= 0 || p < 0) {
        throw Error(ErrorKind::InvalidThreshold, "q>0 and p>=0",
                    "threshold sqrt(" + std::to_string(p) + "/" + std::to_string(q) + ") is not defined");
    }
    if (x.sign() < 0) {
        return std::strong_ordering::less;
    }
    return Rational(q) * x * x <=> Rational(p);
}

}  // namespace k3lcs

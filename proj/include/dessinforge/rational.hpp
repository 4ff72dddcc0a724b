#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dforge::algebra {

using Int = mpz_class;

/// Arbitrary-precision rational, always reduced with positive denominator.
/// Zero is 0/1. Backed by GMP's mpq; the wrapper guarantees canonical form
/// on every construction path.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    template <class T, class U>
    Rational(const __gmp_expr<T, U>& e) : v_(Int(e)) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0)
            throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    /// Parses "n" or "n/d" with optional sign, decimal digits only.
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos)
            return Rational(Int(s), Int(1));
        return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational inverse() const {
        if (is_zero())
            throw std::domain_error("Rational: inverse of zero");
        return Rational(den(), num());
    }

    Rational pow(long e) const {
        if (e < 0)
            return inverse().pow(-e);
        Rational r(1), b(*this);
        while (e) {
            if (e & 1)
                r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    /// True iff this is the square of a rational (requires sign >= 0 and
    /// perfect-square numerator and denominator).
    bool is_square() const {
        if (sign() < 0)
            return false;
        return mpz_perfect_square_p(num().get_mpz_t()) &&
               mpz_perfect_square_p(den().get_mpz_t());
    }

    /// Nonnegative square root; caller must ensure is_square().
    Rational sqrt() const {
        if (!is_square())
            throw std::domain_error("Rational: sqrt of a non-square");
        Int n, d;
        mpz_sqrt(n.get_mpz_t(), num().get_mpz_t());
        mpz_sqrt(d.get_mpz_t(), den().get_mpz_t());
        return Rational(n, d);
    }

    std::string str() const {
        if (is_integer())
            return num().get_str();
        return num().get_str() + "/" + den().get_str();
    }

  private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Double factorial with 0!! = (-1)!! = 1.
inline Int double_factorial(long n) {
    if (n <= 0)
        return 1;
    Int r(1);
    for (long k = n; k > 1; k -= 2)
        r *= k;
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Generalized binomial C(alpha, k) = alpha(alpha-1)...(alpha-k+1)/k! for
/// integer alpha of either sign.
inline Rational binomial_general(long alpha, unsigned long k) {
    Rational r(1);
    for (unsigned long i = 0; i < k; ++i)
        r *= Rational(Int(alpha) - Int(i), Int(i) + 1);
    return r;
}

} // namespace dforge::algebra

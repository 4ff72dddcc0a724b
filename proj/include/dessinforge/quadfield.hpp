#pragma once

#include "dessinforge/rational.hpp"

#include <optional>
#include <string>

namespace dforge::algebra {

/// D = f^2 * d with d squarefree carrying the sign of D.
struct SquarefreeSplit {
    Int root;  // f > 0
    long d;    // squarefree, signed
};

/// Exact squarefree decomposition of a nonzero integer via trial division.
/// Certified for |D| < 10^18; throws beyond that.
SquarefreeSplit squarefree_split(const Int& D);

/// An element a + b*sqrt(d) of the quadratic field Q(sqrt(d)), d a squarefree
/// integer tag. d = 1 is plain Q and then b must be 0. Elements of different
/// fields never mix arithmetically; embedding a rational into another field
/// is an explicit operation.
class FieldElement {
  public:
    FieldElement() : a_(0), b_(0), d_(1) {}

    static FieldElement rational(const Rational& r) { return FieldElement(r, Rational(0), 1); }
    static FieldElement rational(long r) { return rational(Rational(r)); }

    static FieldElement make(const Rational& a, const Rational& b, long d) {
        if (d == 0)
            throw std::invalid_argument("FieldElement: d must be nonzero");
        if (d == 1 && !b.is_zero())
            throw std::invalid_argument("FieldElement: nonzero surd part over Q");
        return FieldElement(a, b, d);
    }

    /// sqrt(d) itself.
    static FieldElement surd(long d) { return make(Rational(0), Rational(1), d); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long disc() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }
    Rational as_rational() const {
        if (!is_rational())
            throw std::domain_error("FieldElement: not rational");
        return a_;
    }

    /// Re-tags a rational element into the field Q(sqrt(d)).
    FieldElement embedded(long d) const {
        if (d_ == d)
            return *this;
        if (!is_rational())
            throw std::invalid_argument("FieldElement: cannot embed a proper surd");
        if (d == 0)
            throw std::invalid_argument("FieldElement: d must be nonzero");
        return FieldElement(a_, Rational(0), d);
    }

    FieldElement conj() const { return FieldElement(a_, -b_, d_); }
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    FieldElement operator-() const { return FieldElement(-a_, -b_, d_); }

    friend FieldElement operator+(const FieldElement& x, const FieldElement& y) {
        long d = common_disc(x, y);
        return FieldElement(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend FieldElement operator-(const FieldElement& x, const FieldElement& y) {
        long d = common_disc(x, y);
        return FieldElement(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    friend FieldElement operator*(const FieldElement& x, const FieldElement& y) {
        long d = common_disc(x, y);
        return FieldElement(x.a_ * y.a_ + Rational(d) * x.b_ * y.b_,
                            x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend FieldElement operator/(const FieldElement& x, const FieldElement& y) {
        return x * y.inverse();
    }
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    FieldElement inverse() const {
        Rational n = norm();
        if (n.is_zero())
            throw std::domain_error("FieldElement: inverse of zero");
        return FieldElement(a_ / n, -b_ / n, d_);
    }

    FieldElement pow(long e) const {
        if (e < 0)
            return inverse().pow(-e);
        FieldElement r = FieldElement(Rational(1), Rational(0), d_);
        FieldElement b = *this;
        while (e) {
            if (e & 1)
                r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const FieldElement& x, const FieldElement& y) {
        if (x.d_ == y.d_)
            return x.a_ == y.a_ && x.b_ == y.b_;
        return x.is_rational() && y.is_rational() && x.a_ == y.a_;
    }
    friend bool operator!=(const FieldElement& x, const FieldElement& y) { return !(x == y); }

    /// Total order for deterministic output; meaningful within one field.
    friend bool operator<(const FieldElement& x, const FieldElement& y) {
        if (x.a_ != y.a_)
            return x.a_ < y.a_;
        return x.b_ < y.b_;
    }

    /// Square root inside the same field, if one exists there.
    std::optional<FieldElement> sqrt_in_field() const;

    std::string str() const;

  private:
    FieldElement(Rational a, Rational b, long d)
        : a_(std::move(a)), b_(std::move(b)), d_(d) {}

    static long common_disc(const FieldElement& x, const FieldElement& y) {
        if (x.d_ != y.d_)
            throw std::invalid_argument("FieldElement: mixed field tags d=" +
                                        std::to_string(x.d_) + " and d=" +
                                        std::to_string(y.d_));
        return x.d_;
    }

    Rational a_, b_;
    long d_;
};

} // namespace dforge::algebra

#include "dessinforge/quadfield.hpp"

namespace dforge::algebra {

SquarefreeSplit squarefree_split(const Int& D) {
    if (D == 0)
        throw std::invalid_argument("squarefree_split: zero input");
    Int n = abs(D);
    Int f = 1;
    Int d = 1;
    // Strip primes up to 10^6; the certified range then follows from the
    // remainder having at most two prime factors.
    for (Int p = 2; p * p <= n && p <= 1000000; p = (p == 2 ? Int(3) : p + 2)) {
        if (n % p != 0)
            continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2)
            f *= p;
        if (e % 2)
            d *= p;
    }
    if (n > 1) {
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            Int s;
            mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
            f *= s;
        } else if (n < Int("1000000000000000000")) {
            // No prime factor <= 10^6 and not a square: n is p or pq, squarefree.
            d *= n;
        } else {
            throw std::domain_error("squarefree_split: input exceeds certified range");
        }
    }
    if (!d.fits_slong_p())
        throw std::domain_error("squarefree_split: squarefree part exceeds long range");
    long dl = d.get_si();
    if (D < 0)
        dl = -dl;
    return SquarefreeSplit{f, dl};
}

std::optional<FieldElement> FieldElement::sqrt_in_field() const {
    const Rational& u = a_;
    const Rational& v = b_;
    if (is_zero())
        return FieldElement(Rational(0), Rational(0), d_);
    if (v.is_zero()) {
        // sqrt of a rational: either rational, or w*sqrt(d) with w rational.
        if (u.is_square())
            return FieldElement(u.sqrt(), Rational(0), d_);
        Rational q = u / Rational(d_);
        if (d_ != 1 && q.is_square())
            return FieldElement(Rational(0), q.sqrt(), d_);
        return std::nullopt;
    }
    // (x + y*sqrt(d))^2 = u + v*sqrt(d): x^2 is a root of t^2 - u t + d v^2/4.
    Rational N = u * u - Rational(d_) * v * v;
    if (!N.is_square())
        return std::nullopt;
    Rational m = N.sqrt();
    for (int sign : {+1, -1}) {
        Rational t = (u + (sign > 0 ? m : -m)) / Rational(2);
        if (t.sign() <= 0 || !t.is_square())
            continue;
        Rational x = t.sqrt();
        Rational y = v / (Rational(2) * x);
        FieldElement cand(x, y, d_);
        if (cand * cand == *this)
            return cand;
    }
    return std::nullopt;
}

std::string FieldElement::str() const {
    if (is_rational())
        return a_.str();
    std::string surd = "sqrt(" + std::to_string(d_) + ")";
    std::string bs;
    if (b_ == Rational(1))
        bs = surd;
    else if (b_ == Rational(-1))
        bs = "-" + surd;
    else
        bs = b_.str() + "*" + surd;
    if (a_.is_zero())
        return bs;
    if (b_.sign() > 0)
        return a_.str() + " + " + bs;
    return a_.str() + " - " + (-b_ == Rational(1) ? surd : (-b_).str() + "*" + surd);
}

} // namespace dforge::algebra

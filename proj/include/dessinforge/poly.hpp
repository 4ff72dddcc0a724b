#pragma once

#include "dessinforge/quadfield.hpp"

#include <json.hpp>
#include <utility>
#include <vector>

namespace dforge::algebra {

/// Dense univariate polynomial over Q(sqrt(d)), coefficients ascending.
/// All coefficients share one field tag; the zero polynomial has an empty
/// coefficient list and degree -1.
class Poly {
  public:
    explicit Poly(long d = 1) : d_(d) {}

    static Poly zero(long d) { return Poly(d); }
    static Poly constant(const FieldElement& c) {
        Poly p(c.disc());
        p.c_.push_back(c);
        p.trim();
        return p;
    }
    static Poly one(long d) { return constant(FieldElement::rational(1).embedded(d)); }
    static Poly x(long d) { return monomial(FieldElement::rational(1).embedded(d), 1); }
    static Poly monomial(const FieldElement& c, int k);
    static Poly from_coeffs(std::vector<FieldElement> coeffs, long d);
    static Poly from_rationals(const std::vector<Rational>& coeffs, long d = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    long field_disc() const { return d_; }

    const FieldElement& lc() const;
    FieldElement coeff(int i) const;
    void set_coeff(int i, const FieldElement& v);

    /// All coefficients rational (surd parts zero)?
    bool is_rational_poly() const;
    /// Re-tags a polynomial with all-rational coefficients into Q(sqrt(d)).
    Poly retagged(long d) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& p, const Poly& q);
    friend Poly operator-(const Poly& p, const Poly& q);
    friend Poly operator*(const Poly& p, const Poly& q);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const FieldElement& k) const;
    Poly pow(unsigned e) const;

    friend bool operator==(const Poly& p, const Poly& q);
    friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

    FieldElement eval(const FieldElement& x) const;
    Poly derivative() const;
    /// this(inner(x))
    Poly compose(const Poly& inner) const;
    Poly galois_conjugate() const;
    Poly monic() const;

    /// Field division: this = q*divisor + r with deg r < deg divisor.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    /// Division known to be exact; throws if a remainder appears.
    Poly exact_div(const Poly& divisor) const;

    std::string str(const std::string& var = "x") const;

    nlohmann::json to_json() const;
    static Poly from_json(const nlohmann::json& j);

  private:
    void trim();
    void check_same_field(const Poly& o) const;

    long d_;
    std::vector<FieldElement> c_;
};

/// Monic gcd over Q(sqrt(d)); errors if both inputs are zero.
Poly poly_gcd(const Poly& p, const Poly& q);

/// Yun's squarefree decomposition: p = lc * prod f_i^{m_i} with the f_i monic,
/// squarefree, pairwise coprime; returned with strictly increasing m_i.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

/// Product of the distinct monic squarefree factors.
Poly radical(const Poly& p);

/// Resultant via the subresultant PRS. Sign convention: the Sylvester
/// determinant with the rows of p first, i.e. res(p,q) = lc(p)^deg(q) *
/// prod q(alpha_i) over the roots of p; res(x-a, x-b) = a-b.
FieldElement resultant(const Poly& p, const Poly& q);

/// R(y) = Res_x(p(x) - y, p'(x)), computed by the same subresultant PRS with
/// the coefficients treated as polynomials in y. Degree deg(p) - 1 in y; its
/// distinct roots are the critical values of p. Requires deg p >= 2.
Poly bivariate_resultant_in_y(const Poly& p);

/// Res_x(p(x) - y, g(x)) for y-free g; used with g = radical(p') to reach the
/// squarefree part of the critical-value resultant cheaply.
Poly resultant_p_minus_y(const Poly& p, const Poly& g);

} // namespace dforge::algebra

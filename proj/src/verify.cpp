#include "dessinforge/verify.hpp"

#include <algorithm>
#include <numeric>

namespace dforge::verify {

using algebra::Int;
using algebra::Rational;

namespace {

Poly squarefree_part_of(const Poly& p) {
    Poly g = algebra::poly_gcd(p, p.derivative());
    return p.exact_div(g).monic();
}

// Exact roots of a monic polynomial of degree <= 2 over the input's field,
// allowing a quadratic extension of Q when the input is rational.
std::optional<std::vector<FieldElement>> solve_low_degree(const Poly& S, bool* extension) {
    const long d = S.field_disc();
    *extension = false;
    if (S.degree() == 1)
        return std::vector<FieldElement>{-S.coeff(0)};
    if (S.degree() != 2)
        return std::nullopt;
    FieldElement b = S.coeff(1), c = S.coeff(0);
    FieldElement disc = b * b - FieldElement::rational(4).embedded(d) * c;
    FieldElement two = FieldElement::rational(2).embedded(d);
    if (auto sq = disc.sqrt_in_field()) {
        std::vector<FieldElement> roots{(-b + *sq) / two, (-b - *sq) / two};
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    if (d == 1 && disc.is_rational()) {
        // Rational discriminant, not a square: roots live in Q(sqrt(e)).
        Rational q = disc.as_rational();
        auto split = algebra::squarefree_split(q.num() * q.den());
        long e = split.d;
        Rational surd_coeff(split.root, q.den());
        FieldElement half_b = FieldElement::rational(b.as_rational() / Rational(2)).embedded(e);
        FieldElement half_sq = FieldElement::make(Rational(0), surd_coeff / Rational(2), e);
        std::vector<FieldElement> roots{-half_b + half_sq, -half_b - half_sq};
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    *extension = true;
    return std::nullopt;
}

} // namespace

CriticalValues critical_values(const Poly& p) {
    if (p.degree() < 1)
        throw std::invalid_argument("critical_values: degree must be >= 1");
    CriticalValues out;
    if (p.degree() == 1) {
        out.values_known = true;
        out.squarefree_part = Poly::one(p.field_disc());
        return out;
    }
    // Radical of p' has the same distinct roots, so the squarefree part of
    // Res_x(p - y, radical(p')) matches that of Res_x(p - y, p') at a
    // fraction of the intermediate degree.
    Poly rad = algebra::radical(p.derivative());
    Poly R = algebra::resultant_p_minus_y(p, rad);
    Poly S = squarefree_part_of(R);
    out.squarefree_part = S;
    out.distinct_count = S.degree();
    if (S.degree() > 2) {
        out.values_known = false;
        return out;
    }
    bool ext = false;
    if (auto roots = solve_low_degree(S, &ext)) {
        out.values_known = true;
        out.values = std::move(*roots);
    } else {
        out.extension_required = ext;
    }
    return out;
}

std::vector<int> multiplicity_profile(const Poly& p, const FieldElement& c) {
    Poly shifted(1);
    if (c.disc() == p.field_disc())
        shifted = p - Poly::constant(c);
    else if (c.disc() == 1)
        shifted = p - Poly::constant(c.embedded(p.field_disc()));
    else if (p.is_rational_poly())
        shifted = p.retagged(c.disc()) - Poly::constant(c);
    else
        throw std::invalid_argument("multiplicity_profile: value lies in an incompatible field");
    std::vector<int> profile;
    for (const auto& [f, m] : algebra::squarefree_decomposition(shifted))
        for (int i = 0; i < f.degree(); ++i)
            profile.push_back(m);
    std::sort(profile.rbegin(), profile.rend());
    return profile;
}

ShabatReport shabat_report(const Poly& p) {
    ShabatReport rep;
    rep.field_disc = p.field_disc();
    rep.cv = critical_values(p);
    rep.is_shabat = rep.cv.distinct_count <= 2;
    rep.degenerate_single_value = rep.cv.distinct_count < 2;
    if (!rep.is_shabat || !rep.cv.values_known)
        return rep;
    if (rep.cv.distinct_count == 2) {
        rep.black_profile = multiplicity_profile(p, rep.cv.values[0]);
        rep.white_profile = multiplicity_profile(p, rep.cv.values[1]);
        rep.profiles_known = true;
    } else if (rep.cv.distinct_count == 1) {
        rep.black_profile = multiplicity_profile(p, rep.cv.values[0]);
        rep.white_profile.assign(p.degree(), 1);
        rep.profiles_known = true;
    }
    return rep;
}

dessins::Passport passport_from_poly(const Poly& p) {
    ShabatReport rep = shabat_report(p);
    if (!rep.is_shabat)
        throw std::domain_error("passport_from_poly: polynomial is not Shabat");
    if (rep.cv.distinct_count != 2)
        throw std::domain_error("passport_from_poly: needs exactly two finite critical values");
    if (!rep.profiles_known)
        throw std::domain_error("passport_from_poly: critical values not resolvable in a quadratic field");
    return dessins::Passport(rep.black_profile, rep.white_profile);
}

nlohmann::json ShabatReport::to_json() const {
    nlohmann::json j;
    j["is_shabat"] = is_shabat;
    j["degenerate_single_value"] = degenerate_single_value;
    j["distinct_critical_values"] = cv.distinct_count;
    if (cv.values_known) {
        nlohmann::json vals = nlohmann::json::array();
        for (const auto& v : cv.values)
            vals.push_back(v.str());
        j["critical_values"] = vals;
    } else if (cv.extension_required) {
        j["critical_values"] = "extension required";
    }
    if (profiles_known) {
        j["black_profile"] = dessins::partition_str(black_profile);
        j["white_profile"] = dessins::partition_str(white_profile);
    }
    j["field_disc"] = field_disc;
    return j;
}

namespace {

struct Normalized {
    Poly centered_monic;
    FieldElement shift; // p was evaluated at x + shift
    FieldElement lc;    // leading coefficient of the centered polynomial
};

Normalized center_and_monic(const Poly& p) {
    const long d = p.field_disc();
    const int n = p.degree();
    FieldElement shift = -(p.coeff(n - 1) /
                           (FieldElement::rational(n).embedded(d) * p.coeff(n)));
    Poly shifted = p.compose(Poly::x(d) + Poly::constant(shift));
    return {shifted.monic(), shift, shifted.lc()};
}

} // namespace

EquivalenceWitness equivalent(const Poly& p_in, const Poly& q_in) {
    if (p_in.degree() != q_in.degree())
        throw std::invalid_argument("equivalent: degree mismatch");
    if (p_in.degree() < 2)
        throw std::invalid_argument("equivalent: degree must be >= 2");
    Poly p = p_in, q = q_in;
    if (p.field_disc() != q.field_disc()) {
        if (p.is_rational_poly())
            p = p.retagged(q.field_disc());
        else if (q.is_rational_poly())
            q = q.retagged(p.field_disc());
        else
            throw std::invalid_argument("equivalent: polynomials over different quadratic fields");
    }
    const long d = p.field_disc();
    const int n = p.degree();
    EquivalenceWitness w;
    Normalized P = center_and_monic(p), Q = center_and_monic(q);

    // In centered monic form the relation collapses to Phat_i = Qhat_i *
    // a^(n-i) for 1 <= i <= n-2 (the constant term is absorbed by B). Solve
    // for a through the gcd of the exponents present.
    std::vector<std::pair<int, FieldElement>> constraints; // (n-i, ratio)
    for (int i = 1; i <= n - 2; ++i) {
        FieldElement pi = P.centered_monic.coeff(i), qi = Q.centered_monic.coeff(i);
        if (pi.is_zero() != qi.is_zero())
            return w;
        if (!pi.is_zero())
            constraints.emplace_back(n - i, pi / qi);
    }
    FieldElement one = FieldElement::rational(1).embedded(d);
    int g = 0;
    FieldElement tau = one;
    for (const auto& [m, rho] : constraints) {
        if (g == 0) {
            g = m;
            tau = rho;
            continue;
        }
        // Extended gcd fold: tau^x * rho^y with g*x + m*y = gcd(g, m).
        long a0 = g, b0 = m, x0 = 1, y0 = 0, x1 = 0, y1 = 1;
        while (b0) {
            long qq = a0 / b0;
            long tmp;
            tmp = a0 - qq * b0; a0 = b0; b0 = tmp;
            tmp = x0 - qq * x1; x0 = x1; x1 = tmp;
            tmp = y0 - qq * y1; y0 = y1; y1 = tmp;
        }
        g = static_cast<int>(a0);
        tau = tau.pow(x0) * rho.pow(y0);
    }
    if (g == 0) {
        // Only leading and constant coefficients present: any a works.
        w.equivalent = true;
        w.witness_in_field = true;
        w.a = one;
        g = 1;
        tau = one;
    } else {
        for (const auto& [m, rho] : constraints)
            if (tau.pow(m / g) != rho)
                return w;
        w.equivalent = true;
    }
    w.a_root_degree = g;
    w.a_power_target = tau;

    // Try to realize a in the working field.
    std::optional<FieldElement> a;
    if (g == 1)
        a = tau;
    else if (g == 2)
        a = tau.sqrt_in_field();
    else if (tau.is_rational()) {
        Rational tr = tau.as_rational();
        Int nr, dr;
        bool neg = tr.sign() < 0;
        Int absn = abs(tr.num());
        if (mpz_root(nr.get_mpz_t(), absn.get_mpz_t(), g) &&
            mpz_root(dr.get_mpz_t(), tr.den().get_mpz_t(), g)) {
            if (!neg)
                a = FieldElement::rational(Rational(nr, dr)).embedded(d);
            else if (g % 2 == 1)
                a = FieldElement::rational(Rational(-nr, dr)).embedded(d);
        }
    }
    if (a && !a->is_zero() && a->pow(g) == tau) {
        w.witness_in_field = true;
        w.a = *a;
        w.A = Q.lc / (P.lc * a->pow(n));
        w.b = P.shift - *a * Q.shift;
        // Constant term closes with B.
        Poly probe = p.compose(Poly::x(d).scaled(*a) + Poly::constant(w.b)).scaled(w.A);
        w.B = q.coeff(0) - probe.coeff(0);
        Poly check = probe + Poly::constant(w.B);
        if (check != q)
            throw std::logic_error("equivalent: witness reconstruction failed");
    }
    return w;
}

FieldDescription field_report(const Poly& p1, const Poly& p2) {
    FieldDescription out;
    bool surd = !p1.is_rational_poly() || !p2.is_rational_poly();
    if (!surd) {
        out.disc = 1;
        out.name = "Q";
        return out;
    }
    long d1 = p1.is_rational_poly() ? p2.field_disc() : p1.field_disc();
    out.disc = d1;
    out.name = "Q(sqrt(" + std::to_string(d1) + "))";
    return out;
}

} // namespace dforge::verify

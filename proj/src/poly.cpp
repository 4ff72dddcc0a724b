#include "dessinforge/poly.hpp"

#include <algorithm>

namespace dforge::algebra {

Poly Poly::monomial(const FieldElement& c, int k) {
    Poly p(c.disc());
    if (!c.is_zero()) {
        p.c_.assign(k + 1, FieldElement::rational(0).embedded(c.disc()));
        p.c_[k] = c;
    }
    return p;
}

Poly Poly::from_coeffs(std::vector<FieldElement> coeffs, long d) {
    Poly p(d);
    for (auto& c : coeffs)
        if (c.disc() != d)
            throw std::invalid_argument("Poly: coefficient field tag mismatch");
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

Poly Poly::from_rationals(const std::vector<Rational>& coeffs, long d) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (const auto& r : coeffs)
        c.push_back(FieldElement::rational(r).embedded(d));
    return from_coeffs(std::move(c), d);
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

void Poly::check_same_field(const Poly& o) const {
    if (d_ != o.d_)
        throw std::invalid_argument("Poly: mixed field tags d=" + std::to_string(d_) +
                                    " and d=" + std::to_string(o.d_));
}

const FieldElement& Poly::lc() const {
    if (is_zero())
        throw std::domain_error("Poly: leading coefficient of zero polynomial");
    return c_.back();
}

FieldElement Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return FieldElement::rational(0).embedded(d_);
    return c_[i];
}

void Poly::set_coeff(int i, const FieldElement& v) {
    if (v.disc() != d_ && !(v.is_rational() && v.disc() == 1))
        throw std::invalid_argument("Poly: coefficient field tag mismatch");
    if (i >= static_cast<int>(c_.size()))
        c_.resize(i + 1, FieldElement::rational(0).embedded(d_));
    c_[i] = v.disc() == d_ ? v : v.embedded(d_);
    trim();
}

bool Poly::is_rational_poly() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const FieldElement& c) { return c.is_rational(); });
}

Poly Poly::retagged(long d) const {
    if (!is_rational_poly())
        throw std::invalid_argument("Poly: cannot re-tag, surd coefficients present");
    std::vector<FieldElement> c;
    c.reserve(c_.size());
    for (const auto& e : c_)
        c.push_back(FieldElement::rational(e.a()).embedded(d));
    return from_coeffs(std::move(c), d);
}

Poly Poly::operator-() const {
    Poly r(d_);
    r.c_.reserve(c_.size());
    for (const auto& e : c_)
        r.c_.push_back(-e);
    return r;
}

Poly operator+(const Poly& p, const Poly& q) {
    p.check_same_field(q);
    Poly r(p.d_);
    r.c_.resize(std::max(p.c_.size(), q.c_.size()),
                FieldElement::rational(0).embedded(p.d_));
    for (size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = p.coeff(i) + q.coeff(i);
    r.trim();
    return r;
}

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly operator*(const Poly& p, const Poly& q) {
    p.check_same_field(q);
    Poly r(p.d_);
    if (p.is_zero() || q.is_zero())
        return r;
    r.c_.assign(p.c_.size() + q.c_.size() - 1, FieldElement::rational(0).embedded(p.d_));
    for (size_t i = 0; i < p.c_.size(); ++i) {
        if (p.c_[i].is_zero())
            continue;
        for (size_t j = 0; j < q.c_.size(); ++j)
            r.c_[i + j] += p.c_[i] * q.c_[j];
    }
    r.trim();
    return r;
}

Poly Poly::scaled(const FieldElement& k) const {
    FieldElement kk = k.disc() == d_ ? k : k.embedded(d_);
    Poly r(d_);
    if (kk.is_zero())
        return r;
    r.c_.reserve(c_.size());
    for (const auto& e : c_)
        r.c_.push_back(e * kk);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::one(d_);
    Poly b = *this;
    while (e) {
        if (e & 1)
            r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool operator==(const Poly& p, const Poly& q) {
    if (p.d_ != q.d_) {
        // Equal as polynomials over Q if both happen to be rational.
        if (!p.is_rational_poly() || !q.is_rational_poly())
            return false;
    }
    if (p.c_.size() != q.c_.size())
        return false;
    for (size_t i = 0; i < p.c_.size(); ++i)
        if (p.c_[i] != q.c_[i])
            return false;
    return true;
}

FieldElement Poly::eval(const FieldElement& x) const {
    FieldElement xx = x.disc() == d_ ? x : x.embedded(d_);
    FieldElement acc = FieldElement::rational(0).embedded(d_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * xx + *it;
    return acc;
}

Poly Poly::derivative() const {
    Poly r(d_);
    if (c_.size() <= 1)
        return r;
    r.c_.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(c_[i] * FieldElement::rational(static_cast<long>(i)).embedded(d_));
    r.trim();
    return r;
}

Poly Poly::compose(const Poly& inner) const {
    check_same_field(inner);
    Poly acc = Poly::zero(d_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * inner + Poly::constant(*it);
    return acc;
}

Poly Poly::galois_conjugate() const {
    Poly r(d_);
    r.c_.reserve(c_.size());
    for (const auto& e : c_)
        r.c_.push_back(e.conj());
    r.trim();
    return r;
}

Poly Poly::monic() const {
    if (is_zero())
        throw std::domain_error("Poly: monic of zero polynomial");
    return scaled(lc().inverse());
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    check_same_field(divisor);
    if (divisor.is_zero())
        throw std::domain_error("Poly: division by zero polynomial");
    Poly q(d_), r = *this;
    const FieldElement inv_lc = divisor.lc().inverse();
    const int dn = divisor.degree();
    while (!r.is_zero() && r.degree() >= dn) {
        FieldElement t = r.lc() * inv_lc;
        int k = r.degree() - dn;
        q.set_coeff(k, t);
        // r -= t*x^k * divisor, with the leading term cancelled exactly.
        for (int i = 0; i <= dn; ++i)
            r.c_[k + i] -= t * divisor.c_[i];
        r.trim();
    }
    return {q, r};
}

Poly Poly::exact_div(const Poly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero())
        throw std::domain_error("Poly: division expected to be exact");
    return q;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const FieldElement& c = c_[i];
        if (c.is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        std::string cs = c.str();
        if (cs.find_first_of("+- ") != std::string::npos && i > 0)
            cs = "(" + cs + ")";
        if (i == 0)
            out += cs;
        else if (cs == "1")
            out += var + (i > 1 ? "^" + std::to_string(i) : "");
        else
            out += cs + "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
}

nlohmann::json Poly::to_json() const {
    nlohmann::json j;
    j["d"] = d_;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : c_) {
        coeffs.push_back({c.a().num().get_str(), c.a().den().get_str(),
                          c.b().num().get_str(), c.b().den().get_str()});
    }
    j["coeffs"] = coeffs;
    return j;
}

Poly Poly::from_json(const nlohmann::json& j) {
    long d = j.at("d").get<long>();
    if (d == 0)
        throw std::invalid_argument("Poly: d must be nonzero");
    std::vector<FieldElement> coeffs;
    for (const auto& q : j.at("coeffs")) {
        if (!q.is_array() || q.size() != 4)
            throw std::invalid_argument("Poly: coefficient must be a quadruple");
        Rational a = Rational(Int(q[0].get<std::string>()), Int(q[1].get<std::string>()));
        Rational b = Rational(Int(q[2].get<std::string>()), Int(q[3].get<std::string>()));
        coeffs.push_back(FieldElement::make(a, b, d));
    }
    return from_coeffs(std::move(coeffs), d);
}

Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero())
        throw std::domain_error("poly_gcd: both inputs zero");
    Poly a = p, b = q;
    if (a.degree() < b.degree())
        std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        // Normalizing each remainder keeps the rational coefficients at
        // subresultant size instead of compounding.
        b = r.is_zero() ? r : r.monic();
    }
    return a.monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    if (p.is_zero())
        throw std::domain_error("squarefree_decomposition: zero input");
    std::vector<std::pair<Poly, int>> out;
    if (p.is_constant())
        return out;
    Poly g = poly_gcd(p, p.derivative());
    if (g.is_constant()) {
        out.emplace_back(p.monic(), 1);
        return out;
    }
    Poly w = p.exact_div(g);
    Poly y = p.derivative().exact_div(g);
    Poly z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        Poly a = z.is_zero() ? w.monic() : poly_gcd(w, z);
        if (a.degree() > 0)
            out.emplace_back(a, i);
        w = w.exact_div(a);
        y = z.is_zero() ? Poly::zero(p.field_disc()) : z.exact_div(a);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

Poly radical(const Poly& p) {
    auto parts = squarefree_decomposition(p);
    Poly r = Poly::one(p.field_disc());
    for (const auto& [f, m] : parts)
        r *= f;
    return r;
}

namespace {

// Subresultant PRS over an abstract coefficient ring (Cohen, Alg. 3.3.7).
// Elem must support ring arithmetic plus exact division.
template <typename Elem, typename Ops>
struct PrsEngine {
    using Vec = std::vector<Elem>;
    Ops ops;

    static int deg(const Vec& v) { return static_cast<int>(v.size()) - 1; }

    void trim(Vec& v) const {
        while (!v.empty() && ops.is_zero(v.back()))
            v.pop_back();
    }

    Elem pow(Elem base, int e) const {
        Elem r = ops.one();
        for (int i = 0; i < e; ++i)
            r = ops.mul(r, base);
        return r;
    }

    // Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B.
    Vec prem(Vec A, const Vec& B) const {
        const int db = deg(B);
        const Elem lb = B.back();
        int e = deg(A) - db + 1;
        while (!A.empty() && deg(A) >= db) {
            Elem la = A.back();
            Vec next(A.size() - 1, ops.zero());
            int shift = deg(A) - db;
            // next = lb*A - la*x^shift*B, top term cancels.
            for (int i = 0; i < deg(A); ++i) {
                Elem t = ops.mul(lb, A[i]);
                int j = i - shift;
                if (j >= 0 && j < db)
                    t = ops.sub(t, ops.mul(la, B[j]));
                next[i] = std::move(t);
            }
            trim(next);
            A = std::move(next);
            --e;
        }
        Elem mult = pow(lb, e);
        for (auto& a : A)
            a = ops.mul(a, mult);
        return A;
    }

    // Resultant of A and B, both nonzero.
    Elem resultant(Vec A, Vec B) const {
        trim(A);
        trim(B);
        if (A.empty() || B.empty())
            throw std::domain_error("resultant: zero input");
        bool negate = false;
        if (deg(A) < deg(B)) {
            if ((deg(A) & 1) && (deg(B) & 1))
                negate = true;
            std::swap(A, B);
        }
        if (deg(A) == 0)
            return ops.one(); // two nonzero constants
        if (deg(B) == 0) {
            Elem r = pow(B[0], deg(A));
            return negate ? ops.neg(r) : r;
        }
        Elem g = ops.one(), h = ops.one();
        while (true) {
            int da = deg(A), db = deg(B);
            int delta = da - db;
            if ((da & 1) && (db & 1))
                negate = !negate;
            Vec R = prem(A, B);
            if (R.empty())
                return ops.zero(); // common factor of positive degree
            A = std::move(B);
            Elem divisor = ops.mul(g, pow(h, delta));
            for (auto& r : R)
                r = ops.exact_div(r, divisor);
            B = std::move(R);
            g = A.back();
            if (delta > 0) {
                Elem gd = pow(g, delta);
                h = delta == 1 ? gd : ops.exact_div(gd, pow(h, delta - 1));
            }
            if (deg(B) == 0) {
                Elem num = pow(B[0], deg(A));
                Elem res = deg(A) == 1 ? num : ops.exact_div(num, pow(h, deg(A) - 1));
                return negate ? ops.neg(res) : res;
            }
        }
    }
};

struct FieldOps {
    long d;
    FieldElement zero() const { return FieldElement::rational(0).embedded(d); }
    FieldElement one() const { return FieldElement::rational(1).embedded(d); }
    bool is_zero(const FieldElement& x) const { return x.is_zero(); }
    FieldElement mul(const FieldElement& x, const FieldElement& y) const { return x * y; }
    FieldElement sub(const FieldElement& x, const FieldElement& y) const { return x - y; }
    FieldElement neg(const FieldElement& x) const { return -x; }
    FieldElement exact_div(const FieldElement& x, const FieldElement& y) const { return x / y; }
};

struct PolyRingOps {
    long d;
    Poly zero() const { return Poly::zero(d); }
    Poly one() const { return Poly::one(d); }
    bool is_zero(const Poly& x) const { return x.is_zero(); }
    Poly mul(const Poly& x, const Poly& y) const { return x * y; }
    Poly sub(const Poly& x, const Poly& y) const { return x - y; }
    Poly neg(const Poly& x) const { return -x; }
    Poly exact_div(const Poly& x, const Poly& y) const { return x.exact_div(y); }
};

} // namespace

FieldElement resultant(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero())
        throw std::domain_error("resultant: zero input");
    if (p.field_disc() != q.field_disc())
        throw std::invalid_argument("resultant: mixed field tags");
    PrsEngine<FieldElement, FieldOps> engine{FieldOps{p.field_disc()}};
    std::vector<FieldElement> A, B;
    for (int i = 0; i <= p.degree(); ++i)
        A.push_back(p.coeff(i));
    for (int i = 0; i <= q.degree(); ++i)
        B.push_back(q.coeff(i));
    return engine.resultant(std::move(A), std::move(B));
}

Poly bivariate_resultant_in_y(const Poly& p) {
    if (p.degree() < 2)
        throw std::invalid_argument("bivariate_resultant_in_y: degree must be >= 2");
    const long d = p.field_disc();
    PrsEngine<Poly, PolyRingOps> engine{PolyRingOps{d}};
    // A = p(x) - y with coefficients in Q(sqrt(d))[y]; only the constant
    // term is nonconstant in y.
    std::vector<Poly> A, B;
    Poly p0 = Poly::constant(p.coeff(0)) - Poly::x(d); // p_0 - y
    A.push_back(p0);
    for (int i = 1; i <= p.degree(); ++i)
        A.push_back(Poly::constant(p.coeff(i)));
    Poly dp = p.derivative();
    for (int i = 0; i <= dp.degree(); ++i)
        B.push_back(Poly::constant(dp.coeff(i)));
    return engine.resultant(std::move(A), std::move(B));
}

Poly resultant_p_minus_y(const Poly& p, const Poly& g) {
    if (p.is_zero() || g.is_zero())
        throw std::domain_error("resultant_p_minus_y: zero input");
    if (p.field_disc() != g.field_disc())
        throw std::invalid_argument("resultant_p_minus_y: mixed field tags");
    const long d = p.field_disc();
    if (g.is_constant())
        return Poly::constant(g.coeff(0).pow(std::max(p.degree(), 1)));
    PrsEngine<Poly, PolyRingOps> engine{PolyRingOps{d}};
    std::vector<Poly> A, B;
    A.push_back(Poly::constant(p.coeff(0)) - Poly::x(d));
    for (int i = 1; i <= p.degree(); ++i)
        A.push_back(Poly::constant(p.coeff(i)));
    for (int i = 0; i <= g.degree(); ++i)
        B.push_back(Poly::constant(g.coeff(i)));
    return engine.resultant(std::move(A), std::move(B));
}

} // namespace dforge::algebra

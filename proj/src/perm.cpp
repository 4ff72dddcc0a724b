#include "dessinforge/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dforge::dessins {

Perm::Perm(int n) : img_(n) {
    std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
            throw std::invalid_argument("Perm: image table is not a bijection");
        seen[v] = 1;
    }
}

Perm Perm::from_cycles(int n, std::initializer_list<std::vector<int>> cycles) {
    return from_cycles(n, std::vector<std::vector<int>>(cycles));
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> used(n, 0);
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i] - 1;
            int to = cyc[(i + 1) % cyc.size()] - 1;
            if (from < 0 || from >= n || to < 0 || to >= n || used[from])
                throw std::invalid_argument("Perm: bad cycle entry");
            used[from] = 1;
            img[from] = to;
        }
    }
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<int> inv(img_.size());
    for (size_t i = 0; i < img_.size(); ++i)
        inv[img_[i]] = static_cast<int>(i);
    return Perm(std::move(inv));
}

bool Perm::is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i))
            return false;
    return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (int s = 0; s < size(); ++s) {
        if (seen[s])
            continue;
        std::vector<int> cyc;
        int x = s;
        do {
            seen[x] = 1;
            cyc.push_back(x);
            x = img_[x];
        } while (x != s);
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<int> Perm::cycle_type() const {
    std::vector<int> type;
    for (const auto& c : cycles())
        type.push_back(static_cast<int>(c.size()));
    std::sort(type.rbegin(), type.rend());
    return type;
}

std::string Perm::str() const {
    std::ostringstream os;
    bool any = false;
    for (const auto& c : cycles()) {
        if (c.size() == 1)
            continue;
        any = true;
        os << "(";
        for (size_t i = 0; i < c.size(); ++i)
            os << (i ? "," : "") << c[i] + 1;
        os << ")";
    }
    if (!any)
        os << "()";
    return os.str();
}

Perm compose(const Perm& p, const Perm& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("compose: size mismatch");
    std::vector<int> img(p.size());
    for (int x = 0; x < p.size(); ++x)
        img[x] = q.of(p.of(x));
    return Perm(std::move(img));
}

Perm compose_rl(const Perm& p, const Perm& q) { return compose(q, p); }

Perm conjugate(const Perm& p, const Perm& t) {
    std::vector<int> img(p.size());
    for (int x = 0; x < p.size(); ++x)
        img[t.of(x)] = t.of(p.of(x));
    return Perm(std::move(img));
}

int cycle_count(const Perm& p) {
    return static_cast<int>(p.cycles().size());
}

Passport::Passport(std::vector<int> a, std::vector<int> b)
    : alpha(std::move(a)), beta(std::move(b)) {
    std::sort(alpha.rbegin(), alpha.rend());
    std::sort(beta.rbegin(), beta.rend());
    long sa = 0, sb = 0;
    for (int v : alpha) {
        if (v <= 0)
            throw std::invalid_argument("Passport: parts must be positive");
        sa += v;
    }
    for (int v : beta) {
        if (v <= 0)
            throw std::invalid_argument("Passport: parts must be positive");
        sb += v;
    }
    if (sa != sb)
        throw std::invalid_argument("Passport: partitions of different integers");
    n = static_cast<int>(sa);
}

namespace {

std::vector<int> parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto caret = tok.find('^');
        int mult = 1;
        int val;
        if (caret != std::string::npos) {
            val = std::stoi(tok.substr(0, caret));
            mult = std::stoi(tok.substr(caret + 1));
        } else {
            val = std::stoi(tok);
        }
        if (mult <= 0)
            throw std::invalid_argument("Passport: bad multiplicity");
        for (int i = 0; i < mult; ++i)
            parts.push_back(val);
    }
    return parts;
}

} // namespace

Passport Passport::parse(const std::string& s) {
    std::vector<std::string> comps;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';'))
        comps.push_back(tok);
    if (comps.size() != 2 && comps.size() != 3)
        throw std::invalid_argument("Passport: expected \"alpha;beta\" or \"alpha;beta;n\"");
    Passport p(parse_partition(comps[0]), parse_partition(comps[1]));
    if (comps.size() == 3 && std::stoi(comps[2]) != p.n)
        throw std::invalid_argument("Passport: stated degree disagrees with partitions");
    return p;
}

std::string partition_str(const std::vector<int>& parts) {
    std::string out;
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        if (!out.empty())
            out += ",";
        out += std::to_string(parts[i]);
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string Passport::str() const {
    return partition_str(alpha) + ";" + partition_str(beta) + ";" + std::to_string(n);
}

bool Passport::matches_up_to_swap(const Passport& other) const {
    if (n != other.n)
        return false;
    return (alpha == other.alpha && beta == other.beta) ||
           (alpha == other.beta && beta == other.alpha);
}

Dessin::Dessin(Perm sigma0, Perm sigma1) : s0_(std::move(sigma0)), s1_(std::move(sigma1)) {
    if (s0_.size() != s1_.size() || s0_.size() == 0)
        throw std::invalid_argument("Dessin: generator size mismatch");
    Perm prod = compose(s0_, s1_);
    if (cycle_count(prod) != 1)
        throw std::invalid_argument("Dessin: sigma0*sigma1 is not an n-cycle");
    if (cycle_count(s0_) + cycle_count(s1_) != s0_.size() + 1)
        throw std::invalid_argument("Dessin: not a genus-0 tree (Euler condition fails)");
}

Passport Dessin::passport() const {
    return Passport(s0_.cycle_type(), s1_.cycle_type());
}

Dessin Dessin::canonical() const {
    const int nn = n();
    Perm inf = sigma_infinity();
    // Relabel edges along the sigma-infinity cycle; the residual freedom is
    // the choice of starting point, i.e. the n rotations.
    std::vector<int> order(nn);
    int x = 0;
    for (int i = 0; i < nn; ++i) {
        order[i] = x;
        x = inf.of(x);
    }
    std::vector<int> best_s1, best_s0;
    for (int rot = 0; rot < nn; ++rot) {
        std::vector<int> relabel(nn); // old label -> new label
        for (int i = 0; i < nn; ++i)
            relabel[order[(rot + i) % nn]] = i;
        Perm t(relabel);
        Perm c1 = conjugate(s1_, t);
        if (best_s1.empty() || c1.images() < best_s1) {
            best_s1 = c1.images();
            best_s0 = conjugate(s0_, t).images();
        }
    }
    return Dessin(Perm(best_s0), Perm(best_s1));
}

Dessin Dessin::subdivided() const {
    const int nn = n();
    std::vector<int> s0(2 * nn), s1(2 * nn);
    // Black halves 2e keep the old black rotations; white halves 2e+1 carry
    // the old white rotations (those vertices turn black); midpoints give the
    // new sigma1 as (2e, 2e+1) transpositions.
    for (const auto& cyc : s0_.cycles())
        for (size_t i = 0; i < cyc.size(); ++i)
            s0[2 * cyc[i]] = 2 * cyc[(i + 1) % cyc.size()];
    for (const auto& cyc : s1_.cycles())
        for (size_t i = 0; i < cyc.size(); ++i)
            s0[2 * cyc[i] + 1] = 2 * cyc[(i + 1) % cyc.size()] + 1;
    for (int e = 0; e < nn; ++e) {
        s1[2 * e] = 2 * e + 1;
        s1[2 * e + 1] = 2 * e;
    }
    return Dessin(Perm(std::move(s0)), Perm(std::move(s1)));
}

nlohmann::json Dessin::to_json() const {
    nlohmann::json j;
    j["n"] = n();
    auto to1 = [](const Perm& p) {
        std::vector<int> v;
        v.reserve(p.size());
        for (int x : p.images())
            v.push_back(x + 1);
        return v;
    };
    j["sigma0"] = to1(s0_);
    j["sigma1"] = to1(s1_);
    return j;
}

Dessin Dessin::from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    auto from1 = [n](const nlohmann::json& arr) {
        std::vector<int> v;
        for (const auto& e : arr)
            v.push_back(e.get<int>() - 1);
        if (static_cast<int>(v.size()) != n)
            throw std::invalid_argument("Dessin: image list length disagrees with n");
        return Perm(std::move(v));
    };
    return Dessin(from1(j.at("sigma0")), from1(j.at("sigma1")));
}

} // namespace dforge::dessins

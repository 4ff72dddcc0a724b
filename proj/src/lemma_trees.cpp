#include "dessinforge/lemma_trees.hpp"

#include <algorithm>

namespace dforge {

FamilyId family_from_string(const std::string& s) {
    std::string u = s;
    std::transform(u.begin(), u.end(), u.begin(), ::toupper);
    for (int i = 0; i < 12; ++i) {
        FamilyId id = static_cast<FamilyId>(i);
        if (u == family_name(id))
            return id;
    }
    throw std::invalid_argument("unknown family \"" + s + "\" (expected F1..F12)");
}

std::string family_name(FamilyId id) {
    return "F" + std::to_string(static_cast<int>(id) + 1);
}

bool family_is_sporadic(FamilyId id) {
    return static_cast<int>(id) >= static_cast<int>(FamilyId::F7);
}

FamilyParams FamilyParams::make(FamilyId id, int r, int s, int t) {
    FamilyParams p{id, r, s, t};
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument(family_name(id) + ": " + why);
    };
    switch (id) {
    case FamilyId::F1:
        if (r < 1 || s < 1 || t < 1)
            fail("r,s,t must be positive");
        if (r == s || r == t || s == t)
            fail("r,s,t must be pairwise distinct (otherwise the family has one tree)");
        break;
    case FamilyId::F2:
        if (r < 1 || s < 1)
            fail("r,s must be positive");
        if (r >= s)
            fail("requires 1 <= r < s");
        break;
    case FamilyId::F3:
        if (r < 1 || s < 1)
            fail("r,s must be positive");
        if (r == s)
            fail("requires r != s");
        break;
    case FamilyId::F4:
        if (r < 1 || s < 1 || r >= s)
            fail("requires 1 <= r < s");
        break;
    case FamilyId::F5:
    case FamilyId::F6:
        if (r < 2)
            fail("requires r >= 2");
        break;
    default:
        if (r != 0 || s != 0 || t != 0)
            fail("sporadic families take no parameters");
        break;
    }
    return p;
}

int FamilyParams::degree() const {
    switch (id) {
    case FamilyId::F1: return r + s + t;
    case FamilyId::F2: return 2 * r + 2 * s;
    case FamilyId::F3: return 3 * r + 2 * s;
    case FamilyId::F4: return 3 * (r + s - 1);
    case FamilyId::F5: return 4 * (2 * r - 1);
    case FamilyId::F6: return 5 * (2 * r - 1);
    case FamilyId::F7: return 7;
    case FamilyId::F8: return 7;
    case FamilyId::F9: return 9;
    case FamilyId::F10: return 10;
    case FamilyId::F11: return 20;
    case FamilyId::F12: return 26;
    }
    return 0;
}

int FamilyParams::gcd_param() const {
    switch (id) {
    case FamilyId::F1: return std::gcd(std::gcd(r, s), t);
    case FamilyId::F2:
    case FamilyId::F3: return std::gcd(r, s);
    default: throw std::invalid_argument("gcd parameter undefined for " + family_name(id));
    }
}

int FamilyParams::p_param() const {
    switch (id) {
    case FamilyId::F4: return r + s - 1;
    case FamilyId::F5:
    case FamilyId::F6: return 2 * r - 1;
    default: throw std::invalid_argument("p parameter undefined for " + family_name(id));
    }
}

dessins::Passport FamilyParams::passport() const {
    using dessins::Passport;
    auto ones = [](std::vector<int> head, int count) {
        for (int i = 0; i < count; ++i)
            head.push_back(1);
        return head;
    };
    auto rep = [](int value, int count) { return std::vector<int>(count, value); };
    const int n = degree();
    switch (id) {
    case FamilyId::F1: return Passport({r, s, t}, ones({3}, n - 3));
    case FamilyId::F2: return Passport({r, r, s, s}, ones({4}, n - 4));
    case FamilyId::F3: return Passport({r, r, r, s, s}, ones({5}, n - 5));
    case FamilyId::F4: return Passport(ones({r, s}, n - r - s), rep(3, p_param()));
    case FamilyId::F5: return Passport(ones({r, r}, n - 2 * r), rep(4, p_param()));
    case FamilyId::F6: return Passport(ones({r, r}, n - 2 * r), rep(5, p_param()));
    case FamilyId::F7: return Passport({3, 3, 1}, {2, 2, 1, 1, 1});
    case FamilyId::F8: return Passport({3, 2, 2}, {2, 2, 1, 1, 1});
    case FamilyId::F9: return Passport({3, 3, 1, 1, 1}, {2, 2, 2, 2, 1});
    case FamilyId::F10: return Passport({3, 2, 2, 1, 1, 1}, rep(2, 5));
    case FamilyId::F11: return Passport(ones({4, 4, 4}, 8), rep(2, 10));
    case FamilyId::F12: return Passport(ones({5, 5, 5}, 11), rep(2, 13));
    }
    throw std::logic_error("unreachable");
}

std::string FamilyParams::str() const {
    std::string out = family_name(id);
    if (family_is_sporadic(id))
        return out;
    out += "(r=" + std::to_string(r);
    if (id != FamilyId::F5 && id != FamilyId::F6)
        out += ",s=" + std::to_string(s);
    if (id == FamilyId::F1)
        out += ",t=" + std::to_string(t);
    return out + ")";
}

} // namespace dforge

namespace dforge::dessins {

namespace {

// Consecutive cycle (from,...,to), 1-based inclusive.
std::vector<int> run(int from, int to) {
    std::vector<int> c;
    for (int x = from; x <= to; ++x)
        c.push_back(x);
    return c;
}

// Arithmetic progression, 1-based.
std::vector<int> ap(int first, int step, int count) {
    std::vector<int> c;
    for (int i = 0; i < count; ++i)
        c.push_back(first + i * step);
    return c;
}

Dessin finish(Perm s0, Perm s1) {
    Dessin d(std::move(s0), std::move(s1));
    const int n = d.n();
    Perm inf = d.sigma_infinity();
    bool canonical_cycle = true;
    for (int x = 0; x < n; ++x)
        if (inf.of(x) != (x + 1) % n) {
            canonical_cycle = false;
            break;
        }
    return canonical_cycle ? d : d.canonical();
}

} // namespace

Dessin lemma_generators(const FamilyParams& prm, int tree_index) {
    if (tree_index != 1 && tree_index != 2)
        throw std::invalid_argument("lemma_generators: tree_index must be 1 or 2");
    const int r = prm.r, s = prm.s;
    const int n = prm.degree();
    switch (prm.id) {
    case FamilyId::F1: {
        Perm s0 = Perm::from_cycles(n, {run(1, r), run(r + 1, r + s), run(r + s + 1, n)});
        Perm s1 = Perm::from_cycles(n, {{1, r + 1, r + s + 1}});
        return finish(s0, s1);
    }
    case FamilyId::F2: {
        Perm s0 = tree_index == 1
                      ? Perm::from_cycles(n, {run(1, r), run(r + 1, r + s),
                                              run(r + s + 1, 2 * r + s), run(2 * r + s + 1, n)})
                      : Perm::from_cycles(n, {run(1, r), run(r + 1, 2 * r),
                                              run(2 * r + 1, 2 * r + s), run(2 * r + s + 1, n)});
        Perm s1 = tree_index == 1
                      ? Perm::from_cycles(n, {{1, r + 1, r + s + 1, 2 * r + s + 1}})
                      : Perm::from_cycles(n, {{1, r + 1, 2 * r + 1, 2 * r + s + 1}});
        return finish(s0, s1);
    }
    case FamilyId::F3: {
        Perm s0 = tree_index == 1
                      ? Perm::from_cycles(n, {run(1, r), run(r + 1, 2 * r), run(2 * r + 1, 3 * r),
                                              run(3 * r + 1, 3 * r + s), run(3 * r + s + 1, n)})
                      : Perm::from_cycles(n, {run(1, r), run(r + 1, 2 * r),
                                              run(2 * r + 1, 2 * r + s),
                                              run(2 * r + s + 1, 2 * r + 2 * s),
                                              run(2 * r + 2 * s + 1, n)});
        Perm s1 = tree_index == 1
                      ? Perm::from_cycles(n, {{1, r + 1, 2 * r + 1, 3 * r + 1, 3 * r + s + 1}})
                      : Perm::from_cycles(n, {{1, r + 1, 2 * r + 1, 2 * r + s + 1,
                                               2 * r + 2 * s + 1}});
        return finish(s0, s1);
    }
    case FamilyId::F4: {
        std::vector<std::vector<int>> s0c;
        for (int i = 0; i < r - 1; ++i)
            s0c.push_back(run(3 * i + 1, 3 * i + 3));
        if (tree_index == 1) {
            s0c.push_back({3 * r - 2, n - 1, n});
            for (int x = 3 * r - 1; x + 2 <= n - 2; x += 3)
                s0c.push_back(run(x, x + 2));
        } else {
            s0c.push_back({3 * r - 2, 3 * r - 1, n});
            for (int x = 3 * r; x + 2 <= n - 1; x += 3)
                s0c.push_back(run(x, x + 2));
        }
        Perm s0 = Perm::from_cycles(n, s0c);
        Perm s1 = tree_index == 1
                      ? Perm::from_cycles(n, {ap(1, 3, r), ap(3 * r - 1, 3, s)})
                      : Perm::from_cycles(n, {ap(1, 3, r), ap(3 * r, 3, s)});
        return finish(s0, s1);
    }
    case FamilyId::F5: {
        // sigma0 second cycle: one short hop then steps of 4.
        std::vector<int> second{tree_index == 1 ? 4 * r - 1 : 4 * r - 2};
        for (int i = 0; i < r - 1; ++i)
            second.push_back(4 * r + 1 + 4 * i);
        Perm s0 = Perm::from_cycles(n, {ap(1, 4, r), second});
        std::vector<std::vector<int>> s1c;
        for (int b = 1; b <= n; b += 4)
            s1c.push_back(run(b, b + 3));
        Perm s1 = Perm::from_cycles(n, s1c);
        return finish(s0, s1);
    }
    case FamilyId::F6: {
        const int p = prm.p_param();
        std::vector<std::vector<int>> s0c;
        for (int i = 0; i < p; ++i)
            s0c.push_back(run(5 * i + 1, 5 * i + 5));
        Perm s0 = Perm::from_cycles(n, s0c);
        std::vector<int> second{tree_index == 1 ? 5 * r - 2 : 5 * r - 3};
        for (int i = 0; i < r - 1; ++i)
            second.push_back(5 * r + 1 + 5 * i);
        Perm s1 = Perm::from_cycles(n, {ap(1, 5, r), second});
        return finish(s0, s1);
    }
    default:
        throw std::invalid_argument("lemma_generators: explicit labelings exist for F1..F6 only");
    }
}

} // namespace dforge::dessins

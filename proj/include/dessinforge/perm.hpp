#pragma once

#include <json.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace dforge::dessins {

/// Permutation of {0..n-1} stored as an image table. The JSON wire format and
/// all user-facing text are 1-based; conversion happens only at that boundary.
class Perm {
  public:
    Perm() = default;
    explicit Perm(int n);
    explicit Perm(std::vector<int> images);

    static Perm identity(int n) { return Perm(n); }
    /// Builds from 1-based disjoint cycles, e.g. {{1,2,3},{4,5}} in S_n.
    static Perm from_cycles(int n, std::initializer_list<std::vector<int>> cycles);
    static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(img_.size()); }
    int of(int x) const { return img_[x]; }
    const std::vector<int>& images() const { return img_; }

    Perm inverse() const;
    bool is_identity() const;

    /// Disjoint cycles, each rotated to start at its least element, sorted.
    std::vector<std::vector<int>> cycles() const;
    /// Descending partition of n, fixed points included.
    std::vector<int> cycle_type() const;

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

    /// Cycle notation, 1-based.
    std::string str() const;

  private:
    std::vector<int> img_;
};

/// Left-to-right composition: (compose(p,q))(x) = q(p(x)). This is the
/// convention under which the F1 generators multiply to (1,2,...,n).
Perm compose(const Perm& p, const Perm& q);

/// Function composition p(q(x)), used by the group machinery.
Perm compose_rl(const Perm& p, const Perm& q);

/// Conjugate t^-1 * p * t in the left-to-right sense: maps t(x) -> t(p(x)).
Perm conjugate(const Perm& p, const Perm& t);

/// A passport [alpha; beta; n]: black and white degree partitions of n,
/// stored descending.
struct Passport {
    std::vector<int> alpha;
    std::vector<int> beta;
    int n = 0;

    Passport() = default;
    Passport(std::vector<int> a, std::vector<int> b);

    /// Parses "3,5,6;3,1^11;14" (the trailing degree component is optional
    /// and checked when present).
    static Passport parse(const std::string& s);
    std::string str() const;

    friend bool operator==(const Passport& a, const Passport& b) {
        return a.alpha == b.alpha && a.beta == b.beta && a.n == b.n;
    }
    /// Equality up to exchanging the two colors.
    bool matches_up_to_swap(const Passport& other) const;
};

std::string partition_str(const std::vector<int>& parts);

/// A validated plane-tree dessin: sigma0*sigma1 (left-to-right) is an n-cycle
/// and cycles(sigma0) + cycles(sigma1) = n + 1.
class Dessin {
  public:
    Dessin(Perm sigma0, Perm sigma1);

    const Perm& sigma0() const { return s0_; }
    const Perm& sigma1() const { return s1_; }
    int n() const { return s0_.size(); }
    Perm sigma_infinity() const { return compose(s0_, s1_); }

    Passport passport() const;

    /// Relabels so that sigma0*sigma1 = (1,2,...,n) and sigma1's image list
    /// is lexicographically least among the n rotations; a complete
    /// isomorphism invariant for tree dessins.
    Dessin canonical() const;

    /// Edge subdivision (composition with the 2-star): every edge gains a
    /// white midpoint and the old white vertices turn black.
    Dessin subdivided() const;

    friend bool operator==(const Dessin& a, const Dessin& b) {
        return a.s0_ == b.s0_ && a.s1_ == b.s1_;
    }

    nlohmann::json to_json() const;
    static Dessin from_json(const nlohmann::json& j);

  private:
    Perm s0_, s1_;
};

/// Cycle-count helper used by the validator.
int cycle_count(const Perm& p);

} // namespace dforge::dessins

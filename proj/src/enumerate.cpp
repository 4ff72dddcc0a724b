#include "dessinforge/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace dforge::dessins {

int enumeration_scale_limit() {
    if (const char* env = std::getenv("DESSIN_FORGE_MAX_N")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    return 16;
}

namespace {

// Fixes sigma_inf = (0,1,...,n-1) and searches sigma1 of cycle type beta;
// sigma0 is forced, one value per sigma1 assignment, and its cycles close
// incrementally against the alpha multiset.
class TreeSearch {
  public:
    TreeSearch(const Passport& p)
        : n_(p.n), s1_(p.n, -1), used_(p.n, 0), nxt_(p.n, -1), prv_(p.n, -1) {
        for (int v : p.alpha)
            ++alpha_remaining_[v];
        max_alpha_ = p.alpha.empty() ? 0 : p.alpha.front();
        for (int v : p.beta)
            ++beta_remaining_[v];
    }

    std::vector<Dessin> run() {
        extend(0);
        std::vector<Dessin> out;
        for (const auto& imgs : found_) {
            Perm s1(imgs);
            // sigma0(x) = sigma1^{-1}(x+1 mod n)
            Perm s1inv = s1.inverse();
            std::vector<int> s0(n_);
            for (int x = 0; x < n_; ++x)
                s0[x] = s1inv.of((x + 1) % n_);
            out.emplace_back(Perm(std::move(s0)), std::move(s1));
        }
        return out;
    }

  private:
    void extend(int assigned) {
        if (assigned == n_) {
            record();
            return;
        }
        int start = 0;
        while (used_[start])
            ++start;
        // The caller may still be holding a completed outer cycle.
        std::vector<int> saved;
        saved.swap(cycle_);
        // Branch over the distinct cycle lengths still owed to beta.
        for (auto& [len, cnt] : beta_remaining_) {
            if (cnt == 0)
                continue;
            --cnt;
            used_[start] = 1;
            cycle_.assign(1, start);
            grow_cycle(assigned + 1, len, start);
            used_[start] = 0;
            ++cnt;
        }
        cycle_.swap(saved);
    }

    void grow_cycle(int assigned, int len, int start) {
        if (static_cast<int>(cycle_.size()) == len) {
            if (link(cycle_.back(), start))
                extend(assigned);
            unlink(cycle_.back(), start);
            return;
        }
        for (int z = 0; z < n_; ++z) {
            if (used_[z])
                continue;
            int y = cycle_.back();
            if (!link(y, z)) {
                unlink(y, z);
                continue;
            }
            used_[z] = 1;
            cycle_.push_back(z);
            grow_cycle(assigned + 1, len, start);
            cycle_.pop_back();
            used_[z] = 0;
            unlink(y, z);
        }
    }

    // Commits sigma1(y) = z, forcing sigma0(z-1) = y. Returns false when the
    // forced sigma0 structure cannot reach cycle type alpha.
    bool link(int y, int z) {
        int u = (z - 1 + n_) % n_;
        s1_[y] = z;
        nxt_[u] = y;
        prv_[y] = u;
        // Does the chain through the new edge close a cycle?
        int x = y, fwd = 1;
        while (x != u && nxt_[x] != -1) {
            x = nxt_[x];
            ++fwd;
        }
        if (x == u) {
            auto it = alpha_remaining_.find(fwd);
            if (it == alpha_remaining_.end() || it->second == 0) {
                consumed_.push_back(0);
                return false;
            }
            --it->second;
            consumed_.push_back(fwd);
            return true;
        }
        consumed_.push_back(0);
        // Open chain: its node count already exceeds every alpha part?
        int back = 0;
        int w = u;
        while (prv_[w] != -1) {
            w = prv_[w];
            ++back;
        }
        return back + 1 + fwd <= max_alpha_;
    }

    void unlink(int y, int z) {
        int u = (z - 1 + n_) % n_;
        s1_[y] = -1;
        nxt_[u] = -1;
        prv_[y] = -1;
        int closed = consumed_.back();
        consumed_.pop_back();
        if (closed > 0)
            ++alpha_remaining_[closed];
    }

    void record() {
        // Quotient by conjugation with powers of the fixed n-cycle: shift all
        // labels and keep the lexicographically least image list.
        std::vector<int> best;
        for (int k = 0; k < n_; ++k) {
            std::vector<int> cand(n_);
            for (int x = 0; x < n_; ++x)
                cand[(x + k) % n_] = (s1_[x] + k) % n_;
            if (best.empty() || cand < best)
                best = std::move(cand);
        }
        found_.insert(best);
    }

    int n_;
    std::vector<int> s1_;
    std::vector<char> used_;
    std::vector<int> nxt_, prv_;
    std::vector<int> cycle_;
    std::vector<int> consumed_;
    std::map<int, int, std::greater<int>> alpha_remaining_;
    std::map<int, int, std::greater<int>> beta_remaining_;
    int max_alpha_ = 0;
    std::set<std::vector<int>> found_;
};

} // namespace

std::vector<Dessin> enumerate_trees(const Passport& p, bool force) {
    if (p.n > enumeration_scale_limit() && !force)
        throw std::length_error("enumerate_trees: passport degree " + std::to_string(p.n) +
                                " exceeds the scale guard (set --force or DESSIN_FORGE_MAX_N)");
    if (static_cast<int>(p.alpha.size() + p.beta.size()) != p.n + 1)
        return {}; // no genus-0 trees realize such a passport
    TreeSearch search(p);
    return search.run();
}

std::size_t count_trees(const Passport& p, bool force) {
    return enumerate_trees(p, force).size();
}

} // namespace dforge::dessins

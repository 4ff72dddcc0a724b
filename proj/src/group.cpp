#include "dessinforge/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dforge::monodromy {

using dessins::compose_rl;

PermGroup::PermGroup(std::vector<Perm> generators, int n) : n_(n), gens_(std::move(generators)) {
    if (gens_.empty())
        throw std::invalid_argument("PermGroup: no generators");
    for (const auto& g : gens_)
        if (g.size() != n_)
            throw std::invalid_argument("PermGroup: generator degree mismatch");
    for (const auto& g : gens_) {
        if (g.is_identity())
            continue;
        ensure_base_covers(g);
        strong_.push_back(g);
    }
    build();
}

// Appends a base point moved by g when g fixes the current base.
void PermGroup::ensure_base_covers(const Perm& g) {
    for (int b : base_)
        if (g.of(b) != b)
            return;
    for (int x = 0; x < n_; ++x)
        if (g.of(x) != x) {
            base_.push_back(x);
            levels_.emplace_back();
            return;
        }
}

bool PermGroup::fixes_prefix(const Perm& g, size_t upto) const {
    for (size_t j = 0; j < upto; ++j)
        if (g.of(base_[j]) != base_[j])
            return false;
    return true;
}

void PermGroup::rebuild_orbit(size_t level) {
    Level& lv = levels_[level];
    lv.orbit.clear();
    lv.transversal.assign(n_, std::nullopt);
    lv.orbit.push_back(base_[level]);
    lv.transversal[base_[level]] = Perm::identity(n_);
    for (size_t i = 0; i < lv.orbit.size(); ++i) {
        int x = lv.orbit[i];
        for (const auto& s : strong_) {
            if (!fixes_prefix(s, level))
                continue;
            int y = s.of(x);
            if (!lv.transversal[y]) {
                lv.transversal[y] = compose_rl(s, *lv.transversal[x]);
                lv.orbit.push_back(y);
            }
        }
    }
}

std::pair<Perm, size_t> PermGroup::sift_from(Perm g, size_t from) const {
    for (size_t l = from; l < levels_.size(); ++l) {
        if (g.is_identity())
            return {g, l};
        int img = g.of(base_[l]);
        const auto& rep = levels_[l].transversal[img];
        if (!rep)
            return {g, l};
        g = compose_rl(rep->inverse(), g);
    }
    return {g, levels_.size()};
}

// Bottom-up verification with descents on every new residue (the classic
// incremental construction): a level is clean when all of its Schreier
// generators sift to the identity through the deeper chain.
void PermGroup::build() {
    if (base_.empty())
        return; // trivial group
    for (size_t l = 0; l < levels_.size(); ++l)
        rebuild_orbit(l);
    int i = static_cast<int>(levels_.size()) - 1;
    while (i >= 0) {
        rebuild_orbit(i);
        bool clean = true;
        const std::vector<int> orbit_pts = levels_[i].orbit;
        for (size_t xi = 0; xi < orbit_pts.size() && clean; ++xi) {
            int x = orbit_pts[xi];
            for (size_t si = 0; si < strong_.size() && clean; ++si) {
                Perm s = strong_[si];
                if (!fixes_prefix(s, i))
                    continue;
                Perm tx = *levels_[i].transversal[x];
                Perm tsx = *levels_[i].transversal[s.of(x)];
                Perm schreier = compose_rl(tsx.inverse(), compose_rl(s, tx));
                auto [residue, at] = sift_from(schreier, i + 1);
                (void)at;
                if (!residue.is_identity()) {
                    ensure_base_covers(residue);
                    strong_.push_back(residue);
                    for (size_t l = i + 1; l < levels_.size(); ++l)
                        rebuild_orbit(l);
                    clean = false;
                    ++i; // verify the deeper chain first, then climb back
                }
            }
        }
        if (clean)
            --i;
        if (i >= static_cast<int>(levels_.size()))
            i = static_cast<int>(levels_.size()) - 1;
    }
}

Int PermGroup::order() const {
    Int o = 1;
    for (const auto& lv : levels_)
        o *= static_cast<long>(lv.orbit.size());
    return o;
}

bool PermGroup::contains(const Perm& g) const {
    if (g.size() != n_)
        return false;
    auto [residue, at] = sift_from(g, 0);
    (void)at;
    return residue.is_identity();
}

bool PermGroup::is_transitive() const {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& g : gens_) {
            int y = g.of(x);
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == n_;
}

namespace {

// Finest block system fusing the seed pair, by generator-closure of a
// union-find partition (Atkinson).
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i)
            parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (a > b)
            std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

std::vector<std::vector<int>> blocks_from(const PermGroup& g, const std::vector<int>& seed) {
    const int n = g.degree();
    UnionFind uf(n);
    std::vector<std::pair<int, int>> queue;
    for (size_t i = 1; i < seed.size(); ++i)
        if (uf.unite(seed[0], seed[i]))
            queue.emplace_back(seed[0], seed[i]);
    while (!queue.empty()) {
        auto [a, b] = queue.back();
        queue.pop_back();
        for (const auto& s : g.generators()) {
            int sa = s.of(a), sb = s.of(b);
            if (uf.unite(sa, sb))
                queue.emplace_back(sa, sb);
        }
    }
    std::map<int, std::vector<int>> classes;
    for (int x = 0; x < n; ++x)
        classes[uf.find(x)].push_back(x);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, members] : classes)
        blocks.push_back(std::move(members));
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

bool is_trivial_system(const std::vector<std::vector<int>>& blocks, int n) {
    return static_cast<int>(blocks.size()) == n || blocks.size() == 1;
}

bool refines(const std::vector<std::vector<int>>& fine,
             const std::vector<std::vector<int>>& coarse, int n) {
    std::vector<int> block_of(n);
    for (size_t i = 0; i < coarse.size(); ++i)
        for (int x : coarse[i])
            block_of[x] = static_cast<int>(i);
    for (const auto& b : fine) {
        for (int x : b)
            if (block_of[x] != block_of[b[0]])
                return false;
    }
    return true;
}

} // namespace

std::vector<std::vector<std::vector<int>>> minimal_block_systems(const PermGroup& g) {
    if (!g.is_transitive())
        throw std::invalid_argument("block systems: group must be transitive");
    const int n = g.degree();
    std::set<std::vector<std::vector<int>>> candidates;
    for (int i = 1; i < n; ++i) {
        auto blocks = blocks_from(g, {0, i});
        if (!is_trivial_system(blocks, n))
            candidates.insert(std::move(blocks));
    }
    std::vector<std::vector<std::vector<int>>> out;
    for (const auto& c : candidates) {
        bool minimal = true;
        for (const auto& other : candidates) {
            if (other == c)
                continue;
            if (refines(other, c, n)) {
                minimal = false;
                break;
            }
        }
        if (minimal)
            out.push_back(c);
    }
    return out;
}

std::vector<std::vector<std::vector<int>>> all_block_systems(const PermGroup& g) {
    const int n = g.degree();
    std::set<std::vector<std::vector<int>>> found;
    std::vector<std::vector<std::vector<int>>> stack;
    for (int i = 1; i < n; ++i) {
        auto blocks = blocks_from(g, {0, i});
        if (!is_trivial_system(blocks, n) && found.insert(blocks).second)
            stack.push_back(blocks);
    }
    // Coarser systems correspond to block systems of the quotient action.
    while (!stack.empty()) {
        auto sys = stack.back();
        stack.pop_back();
        const int m = static_cast<int>(sys.size());
        std::vector<int> block_of(n);
        for (int i = 0; i < m; ++i)
            for (int x : sys[i])
                block_of[x] = i;
        std::vector<Perm> qgens;
        for (const auto& s : g.generators()) {
            std::vector<int> img(m);
            for (int i = 0; i < m; ++i)
                img[i] = block_of[s.of(sys[i][0])];
            qgens.emplace_back(std::move(img));
        }
        PermGroup quotient(qgens, m);
        for (int i = 1; i < m; ++i) {
            auto qblocks = blocks_from(quotient, {0, i});
            if (static_cast<int>(qblocks.size()) == m || qblocks.size() == 1)
                continue;
            std::vector<std::vector<int>> lifted(qblocks.size());
            for (size_t b = 0; b < qblocks.size(); ++b)
                for (int qi : qblocks[b])
                    for (int x : sys[qi])
                        lifted[b].push_back(x);
            for (auto& b : lifted)
                std::sort(b.begin(), b.end());
            std::sort(lifted.begin(), lifted.end());
            if (found.insert(lifted).second)
                stack.push_back(lifted);
        }
    }
    return {found.begin(), found.end()};
}

bool has_block_of_size(const PermGroup& g, int block_size) {
    for (const auto& sys : all_block_systems(g))
        if (static_cast<int>(sys.front().size()) == block_size)
            return true;
    return false;
}

GroupReport report_for(const PermGroup& g) {
    GroupReport r;
    r.order = g.order();
    r.transitive = g.is_transitive();
    if (r.transitive) {
        r.minimal_blocks = minimal_block_systems(g);
        r.primitive = r.minimal_blocks.empty();
    }
    return r;
}

nlohmann::json GroupReport::to_json() const {
    nlohmann::json j;
    j["order"] = order.get_str();
    j["transitive"] = transitive;
    j["primitive"] = primitive;
    nlohmann::json systems = nlohmann::json::array();
    for (const auto& sys : minimal_blocks) {
        nlohmann::json blocks = nlohmann::json::array();
        for (const auto& b : sys) {
            std::vector<int> one_based;
            for (int x : b)
                one_based.push_back(x + 1);
            blocks.push_back(one_based);
        }
        systems.push_back(blocks);
    }
    j["minimal_blocks"] = systems;
    if (expected_order) {
        j["expected_order"] = expected_order->get_str();
        j["expected_provenance"] = expected_provenance;
        j["order_matches_expected"] = order_matches_expected;
        j["expectation_questionable"] = expectation_questionable;
    }
    if (!structure_label.empty())
        j["structure_label"] = structure_label;
    return j;
}

std::string GroupReport::table_row(const std::string& name) const {
    std::ostringstream os;
    os << name << "  order=" << order.get_str()
       << "  transitive=" << (transitive ? "yes" : "no")
       << "  primitive=" << (primitive ? "yes" : "no");
    if (!minimal_blocks.empty()) {
        os << "  min-block-sizes=";
        for (size_t i = 0; i < minimal_blocks.size(); ++i)
            os << (i ? "," : "") << minimal_blocks[i].front().size();
    }
    if (!structure_label.empty())
        os << "  claimed=" << structure_label;
    if (expected_order)
        os << "  expected=" << expected_order->get_str()
           << (order_matches_expected
                   ? " (match)"
                   : (expectation_questionable ? " (mismatch; claim flagged inconsistent)"
                                               : " (MISMATCH)"));
    return os.str();
}

} // namespace dforge::monodromy

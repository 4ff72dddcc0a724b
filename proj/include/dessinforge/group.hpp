#pragma once

#include "dessinforge/perm.hpp"
#include "dessinforge/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dforge::monodromy {

using dessins::Perm;
using algebra::Int;

/// Permutation group given by generators, with a stabilizer chain built by
/// the incremental (deterministic) Schreier-Sims procedure at construction.
/// Degrees in this project stay below 30, where the plain algorithm is
/// immediate and the Schreier-generator closure doubles as verification.
class PermGroup {
  public:
    PermGroup(std::vector<Perm> generators, int n);

    int degree() const { return n_; }
    const std::vector<Perm>& generators() const { return gens_; }

    Int order() const;
    bool contains(const Perm& g) const;
    bool is_transitive() const;

  private:
    struct Level {
        std::vector<int> orbit;                       // points in discovery order
        std::vector<std::optional<Perm>> transversal; // point -> coset rep
    };

    void ensure_base_covers(const Perm& g);
    bool fixes_prefix(const Perm& g, size_t upto) const;
    void rebuild_orbit(size_t level);
    std::pair<Perm, size_t> sift_from(Perm g, size_t from) const;
    void build();

    int n_;
    std::vector<Perm> gens_;    // the defining generators
    std::vector<Perm> strong_;  // strong generating set (grows during build)
    std::vector<int> base_;
    std::vector<Level> levels_;
};

/// Minimal nontrivial block systems (Atkinson's refinement seeded by the
/// pairs {1, i}); empty exactly when the group is primitive. Blocks are
/// sorted partitions of {0..n-1}.
std::vector<std::vector<std::vector<int>>> minimal_block_systems(const PermGroup& g);

/// Every nontrivial proper block system, found by closing the minimal ones
/// under quotient actions. Small for the groups in scope.
std::vector<std::vector<std::vector<int>>> all_block_systems(const PermGroup& g);

bool has_block_of_size(const PermGroup& g, int block_size);

struct GroupReport {
    Int order;
    bool transitive = false;
    bool primitive = false;
    std::vector<std::vector<std::vector<int>>> minimal_blocks;
    std::optional<Int> expected_order;
    std::string expected_provenance;  // lemma formula or table figure backing it
    std::string structure_label;      // the claimed abstract structure, verbatim
    bool order_matches_expected = true;
    bool expectation_questionable = false; // the claim itself is internally
                                           // inconsistent; computed order rules

    nlohmann::json to_json() const;
    std::string table_row(const std::string& name) const;
};

GroupReport report_for(const PermGroup& g);

} // namespace dforge::monodromy

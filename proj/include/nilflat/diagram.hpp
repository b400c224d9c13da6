#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilflat/matrix.hpp"

namespace nilflat {

// Arrow i -[j]-> k: the bracket of source i with label j hits target k.
struct Arrow {
    int source = 0;
    int label = 0;
    int target = 0;
    auto operator<=>(const Arrow&) const = default;
};

// One line of a validation report: condition name, verdict, witness text
// (empty when the condition passes).
struct ConditionReport {
    std::string condition;
    bool pass = true;
    std::string witness;
};

// Labeled diagram on nodes 1..n. Stored arrows are deduplicated and sorted
// by (source, label, target). Symmetric completion (adding j -[i]-> k for
// every i -[j]-> k) is applied by default; tests for the symmetry condition
// can opt out.
class NiceDiagram {
public:
    NiceDiagram(int nodes, std::vector<Arrow> arrows, bool complete_symmetric = true);

    int nodes() const { return nodes_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool has_arrow(int source, int label, int target) const;
    bool has_source_label(int source, int label) const;
    bool has_label_target(int label, int target) const;
    bool has_source_target(int source, int target) const;
    // Target of the bracket pair {i,j}, or 0 when the pair does not bracket.
    int bracket_target(int i, int j) const;

    // Per-condition report: acyclic, no-multi-arrow, N1..N4.
    std::vector<ConditionReport> validate() const;
    bool is_nice() const;
    // Throws domain_error carrying the first failing condition and witness.
    void require_nice() const;

    // One row per unordered bracket pair {i<j} -> k, entries -1,-1,+1 at i,j,k.
    // Rows ordered by (i,j).
    QMatrix root_matrix() const;

    std::string str() const;

    bool operator==(const NiceDiagram&) const = default;

private:
    int nodes_;
    std::vector<Arrow> arrows_;
};

// Linear factors attached to the diagram: one unordered pair {i<j} per
// bracket, one ordered pair (source, target) per arrow.
struct FactorSet {
    std::vector<std::pair<int, int>> p_factors;
    std::vector<std::pair<int, int>> q_factors;
};

FactorSet pq_factors(const NiceDiagram& d);

// Lexicographically least bijection phi on nodes with phi(arrows of a) a
// subset of arrows of b, or nullopt. Node counts must match and be <= 10.
std::optional<std::vector<int>> diagram_leq(const NiceDiagram& a, const NiceDiagram& b);

// All arrows (i<j, k) whose symmetric pair can be added while keeping every
// diagram condition. Sorted by (source, label, target). Existence of a Lie
// algebra with the extended diagram is not implied.
std::vector<Arrow> extension_candidates(const NiceDiagram& d);

// Text form: header "nodes: n", then one arrow per line "i -[j]-> k".
// Symmetric mates may be omitted on input; output always carries them.
NiceDiagram parse_diagram(const std::string& text);

} // namespace nilflat

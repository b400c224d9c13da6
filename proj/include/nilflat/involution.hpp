#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilflat/diagram.hpp"

namespace nilflat {

// order two permutation of the nodes {1..n}, kept as a sorted list of
// disjoint transpositions (a,b) with a < b
class Involution {
public:
    explicit Involution(int n, std::vector<std::pair<int, int>> transpositions = {});

    int n() const { return n_; }
    int k() const { return int(transpositions_.size()); }
    const std::vector<std::pair<int, int>>& transpositions() const { return transpositions_; }
    std::vector<int> fixed() const;
    int apply(int i) const;
    bool is_identity() const { return transpositions_.empty(); }

    // cycle notation "(2 5)(3 4)", or "id" for the identity
    std::string str() const;

    bool operator==(const Involution& o) const {
        return n_ == o.n_ && transpositions_ == o.transpositions_;
    }
    bool operator!=(const Involution& o) const { return !(*this == o); }

private:
    int n_;
    std::vector<std::pair<int, int>> transpositions_;
    std::vector<int> image_;
};

// accepts cycle notation with space or comma separators, and "id"
Involution parse_involution(const std::string& text, int n);

struct BreakViolation {
    Arrow arrow;    // arrow whose clause fails
    Arrow conflict; // arrow witnessing the failure
    std::string clause; // "incoming" or "outgoing"
};

// first violated clause of the arrow-breaking definition, if any
std::optional<BreakViolation> arrow_breaking_violation(const NiceDiagram& d, const Involution& s);
bool is_arrow_breaking(const NiceDiagram& d, const Involution& s);

// equivalent form: sigma maps no linear factor of the diagram polynomials to
// another factor
bool is_arrow_breaking_factors(const FactorSet& f, const Involution& s);

struct EnumerateOptions {
    std::optional<int> max_results;
    std::optional<int> require_fixed_count;
};

// all arrow-breaking involutions of the diagram, sorted by transposition
// count then lexicographically; partial assignments violating the factor
// criterion are pruned
std::vector<Involution> enumerate_arrow_breaking(const NiceDiagram& d,
                                                 const EnumerateOptions& opts = {});

// number of essential metric parameters: rank M - k + dim (ker M)^{-sigma}
int family_parameter_count(const NiceDiagram& d, const Involution& s);

// signature (p,q) of a sigma-diagonal metric; fixed_signs maps every fixed
// node to +1 or -1, each transposition contributes a hyperbolic plane
std::pair<int, int> metric_signature(const Involution& s, const std::map<int, int>& fixed_signs);

} // namespace nilflat

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilflat/diagram.hpp"
#include "nilflat/rational.hpp"

namespace nilflat {

struct BracketTerm {
    int target = 0;
    Rational coeff;
    bool operator==(const BracketTerm&) const = default;
};

// Lie algebra with exact structure constants relative to a fixed basis
// e_1..e_n. Brackets are keyed by unordered pairs i<j; antisymmetry is
// implicit. Construction normalizes (sorts terms, drops zero coefficients)
// and range-checks, but does not enforce Jacobi: check_jacobi is a query and
// parse_structure is the strict entry point for untrusted text.
class LieAlgebra {
public:
    using BracketMap = std::map<std::pair<int, int>, std::vector<BracketTerm>>;

    explicit LieAlgebra(int dim, BracketMap brackets = {}, std::string name = "");

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const BracketMap& brackets() const { return brackets_; }

    // c_{ijk}: coefficient of e_k in [e_i, e_j]; antisymmetric in i, j.
    Rational coeff(int i, int j, int k) const;
    // [e_i, e_j] as a dense coefficient vector (index k-1 holds c_{ijk}).
    std::vector<Rational> bracket(int i, int j) const;
    // bilinear extension to arbitrary coefficient vectors
    std::vector<Rational> bracket_vec(const std::vector<Rational>& u,
                                      const std::vector<Rational>& v) const;

    // sorted basis indices spanned by all brackets (targets of the diagram)
    std::vector<int> commutator_indices() const;

    // canonical differential notation "(0,0,e^{12},...)"
    std::string str() const;

    bool operator==(const LieAlgebra& o) const {
        return dim_ == o.dim_ && brackets_ == o.brackets_;
    }

private:
    int dim_;
    BracketMap brackets_;
    std::string name_;
};

struct JacobiWitness {
    int i = 0, j = 0, k = 0;
    std::vector<Rational> residual; // cyclic sum [[e_i,e_j],e_k]+...
};

// nullopt when the Jacobi identity holds exactly.
std::optional<JacobiWitness> check_jacobi(const LieAlgebra& a);

// Nice-basis extraction: succeeds iff every bracket has a single target and
// every contraction e_i -| de^k involves a single covector; then the diagram
// plus the coefficient per bracket pair fully describe the algebra.
struct NiceExtraction {
    std::optional<NiceDiagram> diagram;
    std::map<std::pair<int, int>, Rational> coeffs; // keyed i<j
    std::string witness;                            // set when extraction fails
};
NiceExtraction extract_nice_structure(const LieAlgebra& a);

// Lower central series data: lcs_dims = (dim g0, dim g1, ...) down to the
// last nonzero term; step = number of entries; center/complement split the
// dimension as s + r = n.
struct SeriesProfile {
    std::vector<int> lcs_dims;
    int center_dim = 0;
    int complement_dim = 0;
    int step = 0;
};
// Throws domain_error when the series stabilizes above zero (not nilpotent)
// or when some [g^i, g^j] escapes g^{i+j+1} (internal consistency check).
SeriesProfile series_profile(const LieAlgebra& a);

using ParamMap = std::map<std::string, Rational>;

// Selects how a '±' in structure text is read.
enum class SignVariant { none, plus, minus };

// Parses the differential notation "(0,0,e^{12},e^{13},...)": one entry per
// covector, each 0 or a signed sum of terms "coef e^{ij}" with rational or
// parenthesised parameter coefficients ((1-lambda), A, 1/2). Indices of ten
// or more use the comma form "e^{6,10}". Greek parameter letters are
// transliterated (lambda, mu). The bracket convention is da(x,y) = a([x,y]),
// so a term c*e^{ij} in de^k gives [e_i,e_j] = c*e_k. Jacobi is verified;
// failures throw domain_error with the witness triple.
LieAlgebra parse_structure(const std::string& text, const ParamMap& params = {},
                           SignVariant variant = SignVariant::none, std::string name = "");

} // namespace nilflat

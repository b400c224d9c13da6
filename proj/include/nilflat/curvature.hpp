#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "nilflat/involution.hpp"
#include "nilflat/laurent.hpp"
#include "nilflat/liealg.hpp"

namespace nilflat {

// metric <e_i, e_{sigma(j)}> = g_i delta_ij with g_{sigma(i)} = g_i; either
// one symbol per sigma-orbit (named after the smallest node) or concrete
// nonzero rational values
class SigmaMetric {
public:
    static SigmaMetric symbolic(const Involution& sigma);
    // values may be given per node or per orbit representative; paired nodes
    // must agree and every value must be nonzero
    static SigmaMetric numeric(const Involution& sigma, const std::map<int, Rational>& values);

    const Involution& sigma() const { return sigma_; }
    int n() const { return sigma_.n(); }
    bool symbolic_mode() const { return symbolic_; }

    int nvars() const { return int(var_names_.size()); }
    int var_of(int node) const;
    std::string var_name(int var) const { return var_names_.at(var); }
    std::function<std::string(int)> namer() const;

    LaurentPoly g_sym(int node) const; // symbolic coefficient as a monomial
    Rational g_num(int node) const;    // numeric coefficient

    // numeric values arranged per symbolic variable slot, for evaluating a
    // symbolic tensor at this metric's point
    std::vector<Rational> values_vector() const;

private:
    SigmaMetric(Involution s, bool symbolic) : sigma_(std::move(s)), symbolic_(symbolic) {}
    Involution sigma_;
    bool symbolic_;
    std::vector<int> var_of_node_;       // node -> variable slot, 1-based nodes
    std::vector<std::string> var_names_; // slot -> "g<minnode>"
    std::vector<Rational> values_;       // per node, numeric mode
};

// R(e_s,e_t)e_u = sum_k coeff * e_k under the convention
// R(u,v) = nabla_{[u,v]} - [nabla_u, nabla_v]
template <class S>
struct CurvatureData {
    std::map<std::tuple<int, int, int>, std::vector<std::pair<int, S>>> components;
    bool is_zero() const { return components.empty(); }
};
using CurvatureTensor = CurvatureData<LaurentPoly>;
using CurvatureTensorQ = CurvatureData<Rational>;

template <class S>
struct Sym2Data {
    std::map<std::pair<int, int>, S> entries; // keys i <= j, nonzero only
    bool is_zero() const { return entries.empty(); }
};
using SymTensor2 = Sym2Data<LaurentPoly>;
using SymTensor2Q = Sym2Data<Rational>;

// nabla_{e_s} e_t = sum_u coeff * e_u
template <class S>
struct ConnectionData {
    std::map<std::pair<int, int>, std::vector<std::pair<int, S>>> gamma;
};
using Connection = ConnectionData<LaurentPoly>;
using ConnectionQ = ConnectionData<Rational>;

enum class RiemannRoute { koszul, j_formula };

// ric(v,w) = 1/2 <dv_flat, dw_flat> - 1/2 <ad v, ad w>
SymTensor2 ricci_tensor(const LieAlgebra& a, const SigmaMetric& m);
SymTensor2Q ricci_tensor_numeric(const LieAlgebra& a, const SigmaMetric& m);

Connection levi_civita(const LieAlgebra& a, const SigmaMetric& m);
ConnectionQ levi_civita_numeric(const LieAlgebra& a, const SigmaMetric& m);

CurvatureTensor riemann_tensor(const LieAlgebra& a, const SigmaMetric& m,
                               RiemannRoute route = RiemannRoute::koszul);
CurvatureTensorQ riemann_tensor_numeric(const LieAlgebra& a, const SigmaMetric& m,
                                        RiemannRoute route = RiemannRoute::koszul);

// trace form: ric(u,v) = -sum_m e^m(R(e_m,u)v), the sign matching the
// curvature convention above
SymTensor2 ricci_from_riemann(const LieAlgebra& a, const SigmaMetric& m,
                              const CurvatureTensor& r);

// <R(u,v)u,v> for rational-coefficient vectors u,v
LaurentPoly sectional_component(const LieAlgebra& a, const SigmaMetric& m,
                                const CurvatureTensor& r, const std::vector<Rational>& u,
                                const std::vector<Rational>& v);

// closed form of <R(e_s,e_t)e_s,e_t> for a nice basis, driven by the bracket
// pattern around s and t
LaurentPoly sectional_nice(const LieAlgebra& a, const SigmaMetric& m, int s, int t);

enum class FlatnessVerdict { identically_flat, conditionally_flat, generically_nonflat };

struct RiemannEntry {
    int s, t, u, k;
    LaurentPoly poly;
};

struct FlatnessReport {
    FlatnessVerdict verdict;
    // deduplicated numerators whose common vanishing is exactly flatness
    std::vector<LaurentPoly> conditions;
    // component whose numerator is a monomial, hence never zero
    std::optional<RiemannEntry> witness;
};

FlatnessReport flatness_analysis(const CurvatureTensor& r);

struct NonflatWitness {
    int s, t;
    std::string criterion; // "C1" or "C2"
};

// diagram-level sufficient conditions for every sigma-diagonal metric to be
// nonflat; independent of structure constants
std::optional<NonflatWitness> nonflat_criteria(const NiceDiagram& d, const Involution& s);

// text renderers using the metric's variable names
std::string render_curvature(const CurvatureTensor& r, const SigmaMetric& m);
std::string render_sym2(const SymTensor2& t, const SigmaMetric& m);

} // namespace nilflat

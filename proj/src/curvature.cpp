#include "nilflat/curvature.hpp"

#include <algorithm>
#include <sstream>

#include "nilflat/error.hpp"

namespace nilflat {

namespace {

// orbit representatives in increasing node order define the variable layout
std::pair<std::vector<int>, std::vector<std::string>> orbit_layout(const Involution& s) {
    int n = s.n();
    std::vector<int> var_of(n + 1, -1);
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) {
        if (i <= s.apply(i)) {
            var_of[i] = int(names.size());
            names.push_back("g" + std::to_string(i));
        }
    }
    for (int i = 1; i <= n; ++i)
        if (var_of[i] < 0) var_of[i] = var_of[s.apply(i)];
    return {var_of, names};
}

} // namespace

SigmaMetric SigmaMetric::symbolic(const Involution& sigma) {
    SigmaMetric m(sigma, true);
    auto [vars, names] = orbit_layout(m.sigma_);
    m.var_of_node_ = std::move(vars);
    m.var_names_ = std::move(names);
    return m;
}

SigmaMetric SigmaMetric::numeric(const Involution& sigma, const std::map<int, Rational>& values) {
    SigmaMetric m(sigma, false);
    auto [vars, names] = orbit_layout(m.sigma_);
    m.var_of_node_ = std::move(vars);
    m.var_names_ = std::move(names);
    int n = m.sigma_.n();
    for (const auto& [node, val] : values) {
        if (node < 1 || node > n)
            throw domain_error("metric value for node " + std::to_string(node) + " out of range");
        if (val == 0)
            throw domain_error("metric coefficient g" + std::to_string(node) + " must be nonzero");
    }
    m.values_.assign(n + 1, Rational(0));
    for (int i = 1; i <= n; ++i) {
        auto own = values.find(i);
        auto partner = values.find(m.sigma_.apply(i));
        if (own == values.end() && partner == values.end())
            throw domain_error("no metric value for node " + std::to_string(i));
        if (own != values.end() && partner != values.end() && own->second != partner->second)
            throw domain_error("conflicting metric values on the orbit of node " + std::to_string(i));
        m.values_[i] = own != values.end() ? own->second : partner->second;
    }
    return m;
}

int SigmaMetric::var_of(int node) const {
    if (node < 1 || node > n())
        throw domain_error("node " + std::to_string(node) + " out of range");
    return var_of_node_[node];
}

std::function<std::string(int)> SigmaMetric::namer() const {
    return [names = var_names_](int v) { return names.at(v); };
}

LaurentPoly SigmaMetric::g_sym(int node) const {
    if (!symbolic_) throw domain_error("numeric metric has no symbolic coefficients");
    return LaurentPoly::variable(nvars(), var_of(node));
}

Rational SigmaMetric::g_num(int node) const {
    if (symbolic_) throw domain_error("symbolic metric has no numeric coefficients");
    if (node < 1 || node > n())
        throw domain_error("node " + std::to_string(node) + " out of range");
    return values_[node];
}

std::vector<Rational> SigmaMetric::values_vector() const {
    if (symbolic_) throw domain_error("symbolic metric has no numeric values");
    std::vector<Rational> out(nvars());
    for (int i = 1; i <= n(); ++i) out[var_of_node_[i]] = values_[i];
    return out;
}

namespace {

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<LaurentPoly> {
    static LaurentPoly zero(const SigmaMetric& m) { return LaurentPoly(m.nvars()); }
    static LaurentPoly lift(const SigmaMetric& m, const Rational& c) {
        return LaurentPoly::constant(m.nvars(), c);
    }
    static LaurentPoly g(const SigmaMetric& m, int node) {
        return LaurentPoly::variable(m.nvars(), m.var_of(node));
    }
    static LaurentPoly ginv(const SigmaMetric& m, int node) {
        return LaurentPoly::variable(m.nvars(), m.var_of(node), -1);
    }
    static bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
};

template <>
struct ScalarOps<Rational> {
    static Rational zero(const SigmaMetric&) { return Rational(0); }
    static Rational lift(const SigmaMetric&, const Rational& c) { return c; }
    static Rational g(const SigmaMetric& m, int node) { return m.g_num(node); }
    static Rational ginv(const SigmaMetric& m, int node) { return Rational(1) / m.g_num(node); }
    static bool is_zero(const Rational& x) { return x == 0; }
};

// Shared machinery for the symbolic and the numeric evaluation of the
// connection, curvature and Ricci tensors of a sigma-diagonal metric. All
// sums over i,j run over the basis indices spanning the commutator
// subalgebra; J_i vanishes elsewhere, so nothing is lost.
template <class S>
class CurvatureEngine {
public:
    using Ops = ScalarOps<S>;
    using Vec = std::vector<S>;

    CurvatureEngine(const LieAlgebra& a, const SigmaMetric& m) : a_(a), m_(m), n_(a.dim()) {
        if (m_.n() != n_)
            throw domain_error("metric involution acts on " + std::to_string(m_.n()) +
                               " nodes, algebra has dimension " + std::to_string(n_));
        comm_ = a_.commutator_indices();
        zero_ = Ops::zero(m_);
        g_.assign(n_ + 1, zero_);
        ginv_.assign(n_ + 1, zero_);
        for (int i = 1; i <= n_; ++i) {
            g_[i] = Ops::g(m_, i);
            ginv_[i] = Ops::ginv(m_, i);
        }
        // J_i e_s = sum_u c^i_{s,sigma(u)} / g_u e_u, from
        // <J_i u, v> = <[u,v], e_{sigma(i)}> / g_i and <e_a,e_b> = g_a delta_{a,sigma(b)}
        for (int i : comm_) {
            auto& cols = j_[i];
            cols.assign(n_ + 1, Vec());
            for (int s = 1; s <= n_; ++s) {
                Vec col(n_, zero_);
                for (int u = 1; u <= n_; ++u) {
                    Rational c = a_.coeff(s, sig(u), i);
                    if (c != 0) col[u - 1] = ginv_[u] * c;
                }
                cols[s] = std::move(col);
            }
        }
    }

    int sig(int i) const { return m_.sigma().apply(i); }
    bool isz(const S& x) const { return Ops::is_zero(x); }
    Vec zero_vec() const { return Vec(n_, zero_); }

    Vec basis(int s) const {
        Vec v = zero_vec();
        v[s - 1] = Ops::lift(m_, Rational(1));
        return v;
    }

    // <x, y> = sum_b g_b x_{sigma(b)} y_b
    S inner(const Vec& x, const Vec& y) const {
        S acc = zero_;
        for (int b = 1; b <= n_; ++b) {
            const S& xb = x[sig(b) - 1];
            const S& yb = y[b - 1];
            if (isz(xb) || isz(yb)) continue;
            acc += g_[b] * xb * yb;
        }
        return acc;
    }

    // <e_i, x> = g_i x_{sigma(i)}
    S pair_e(int i, const Vec& x) const { return g_[i] * x[sig(i) - 1]; }

    Vec bracket(const Vec& x, const Vec& y) const {
        Vec out = zero_vec();
        for (const auto& [pair, terms] : a_.brackets()) {
            S c = x[pair.first - 1] * y[pair.second - 1] - x[pair.second - 1] * y[pair.first - 1];
            if (isz(c)) continue;
            for (const auto& t : terms) out[t.target - 1] += c * t.coeff;
        }
        return out;
    }

    Vec apply_j(int i, const Vec& x) const {
        Vec out = zero_vec();
        auto it = j_.find(i);
        if (it == j_.end()) return out;
        for (int s = 1; s <= n_; ++s) {
            if (isz(x[s - 1])) continue;
            const Vec& col = it->second[s];
            for (int u = 0; u < n_; ++u)
                if (!isz(col[u])) out[u] += x[s - 1] * col[u];
        }
        return out;
    }

    void axpy(Vec& acc, const S& c, const Vec& x) const {
        if (isz(c)) return;
        for (int u = 0; u < n_; ++u)
            if (!isz(x[u])) acc[u] += c * x[u];
    }

    // 2 nabla_u v = sum_i (<J_i u,v> e_i - <e_i,v> J_i u - <e_i,u> J_i v),
    // specialized to u = e_s, v = e_t
    Vec nabla_basis(int s, int t) const {
        Vec out = zero_vec();
        Rational half(1, 2);
        std::vector<Rational> br = a_.bracket(s, t);
        for (int k = 1; k <= n_; ++k)
            if (br[k - 1] != 0) out[k - 1] += Ops::lift(m_, br[k - 1] * half);
        int st = sig(t);
        if (j_.count(st)) axpy(out, g_[st] * Rational(-1, 2), j_.at(st)[s]);
        int ss = sig(s);
        if (j_.count(ss)) axpy(out, g_[ss] * Rational(-1, 2), j_.at(ss)[t]);
        return out;
    }

    const std::vector<std::vector<Vec>>& gamma() {
        if (gamma_.empty()) {
            gamma_.assign(n_ + 1, {});
            for (int s = 1; s <= n_; ++s) {
                gamma_[s].assign(n_ + 1, Vec());
                for (int t = 1; t <= n_; ++t) gamma_[s][t] = nabla_basis(s, t);
            }
        }
        return gamma_;
    }

    Vec nabla_vec(int s, const Vec& y) {
        Vec out = zero_vec();
        const auto& gm = gamma();
        for (int t = 1; t <= n_; ++t)
            if (!isz(y[t - 1])) axpy(out, y[t - 1], gm[s][t]);
        return out;
    }

    // R(e_s,e_t)e_u = nabla_{[e_s,e_t]}e_u - nabla_{e_s}nabla_{e_t}e_u + nabla_{e_t}nabla_{e_s}e_u
    Vec riemann_koszul(int s, int t, int u) {
        const auto& gm = gamma();
        Vec out = zero_vec();
        std::vector<Rational> br = a_.bracket(s, t);
        for (int k = 1; k <= n_; ++k)
            if (br[k - 1] != 0) axpy(out, Ops::lift(m_, br[k - 1]), gm[k][u]);
        Vec down = nabla_vec(s, gm[t][u]);
        Vec up = nabla_vec(t, gm[s][u]);
        for (int k = 0; k < n_; ++k) out[k] += up[k] - down[k];
        return out;
    }

    // curvature expanded through the J operators, term group by term group
    Vec riemann_j(const Vec& u, const Vec& v, const Vec& w) {
        Rational q(1, 4), h(1, 2);
        Vec out = zero_vec();
        std::map<int, Vec> ju, jv, jw;
        for (int i : comm_) {
            ju[i] = apply_j(i, u);
            jv[i] = apply_j(i, v);
            jw[i] = apply_j(i, w);
        }
        // sum_{i,j} <e_i,e_j> (1/4 <J_i v,w> J_j u - 1/4 <J_i u,w> J_j v - 1/2 <J_i u,v> J_j w);
        // <e_i,e_j> = g_i delta_{i,sigma(j)}
        for (int j : comm_) {
            int i = sig(j);
            if (!j_.count(i)) continue;
            const S& gij = g_[i];
            S a = inner(jv.at(i), w);
            if (!isz(a)) axpy(out, gij * a * q, ju.at(j));
            S b = inner(ju.at(i), w);
            if (!isz(b)) axpy(out, gij * b * (-q), jv.at(j));
            S c = inner(ju.at(i), v);
            if (!isz(c)) axpy(out, gij * c * (-h), jw.at(j));
        }
        // 1/4 sum_{i,j} (<e_i,w><e_j,v> J_j J_i u - <e_i,w><e_j,u> J_j J_i v
        //                + <e_i,u><e_j,v> [J_j,J_i] w)
        for (int i : comm_) {
            S eiw = pair_e(i, w);
            S eiu = pair_e(i, u);
            if (isz(eiw) && isz(eiu)) continue;
            for (int j : comm_) {
                S ejv = pair_e(j, v);
                S eju = pair_e(j, u);
                if (!isz(eiw) && !isz(ejv)) axpy(out, eiw * ejv * q, apply_j(j, ju.at(i)));
                if (!isz(eiw) && !isz(eju)) axpy(out, eiw * eju * (-q), apply_j(j, jv.at(i)));
                if (!isz(eiu) && !isz(ejv)) {
                    Vec comm_w = apply_j(j, jw.at(i));
                    Vec other = apply_j(i, jw.at(j));
                    for (int k = 0; k < n_; ++k) comm_w[k] -= other[k];
                    axpy(out, eiu * ejv * q, comm_w);
                }
            }
        }
        // 1/4 sum_{i,j} (<e_i,w><[J_j,J_i]u,v> + <e_i,v><J_j u,J_i w> - <e_i,u><J_j v,J_i w>) e_j
        for (int j : comm_) {
            S coef = zero_;
            for (int i : comm_) {
                S eiw = pair_e(i, w);
                if (!isz(eiw)) {
                    Vec comm_u = apply_j(j, ju.at(i));
                    Vec other = apply_j(i, ju.at(j));
                    for (int k = 0; k < n_; ++k) comm_u[k] -= other[k];
                    coef += eiw * inner(comm_u, v) * q;
                }
                S eiv = pair_e(i, v);
                if (!isz(eiv)) coef += eiv * inner(ju.at(j), jw.at(i)) * q;
                S eiu = pair_e(i, u);
                if (!isz(eiu)) coef -= eiu * inner(jv.at(j), jw.at(i)) * q;
            }
            out[j - 1] += coef;
        }
        // -1/4 [w,[u,v]]
        Vec uv = bracket(u, v);
        Vec wuv = bracket(w, uv);
        for (int k = 0; k < n_; ++k) out[k] -= wuv[k] * q;
        // sum_j (-1/2 <w,e_j> J_j[u,v] + 1/4 <e_j,u> J_j[v,w] - 1/4 <v,e_j> J_j[u,w])
        Vec vw = bracket(v, w);
        Vec uw = bracket(u, w);
        for (int j : comm_) {
            S wj = pair_e(j, w);
            if (!isz(wj)) axpy(out, wj * (-h), apply_j(j, uv));
            S uj = pair_e(j, u);
            if (!isz(uj)) axpy(out, uj * q, apply_j(j, vw));
            S vj = pair_e(j, v);
            if (!isz(vj)) axpy(out, vj * (-q), apply_j(j, uw));
        }
        // -1/4 sum_j (<[v,e_j],w> + <[w,e_j],v>) J_j u
        // +1/4 sum_j (<[u,e_j],w> + <[w,e_j],u>) J_j v
        for (int j : comm_) {
            Vec ej = basis(j);
            S c1 = inner(bracket(v, ej), w) + inner(bracket(w, ej), v);
            if (!isz(c1)) axpy(out, c1 * (-q), ju.at(j));
            S c2 = inner(bracket(u, ej), w) + inner(bracket(w, ej), u);
            if (!isz(c2)) axpy(out, c2 * q, jv.at(j));
        }
        return out;
    }

    ConnectionData<S> connection() {
        ConnectionData<S> out;
        const auto& gm = gamma();
        for (int s = 1; s <= n_; ++s)
            for (int t = 1; t <= n_; ++t) {
                std::vector<std::pair<int, S>> entries;
                for (int k = 1; k <= n_; ++k)
                    if (!isz(gm[s][t][k - 1])) entries.emplace_back(k, gm[s][t][k - 1]);
                if (!entries.empty()) out.gamma[{s, t}] = std::move(entries);
            }
        return out;
    }

    CurvatureData<S> riemann(RiemannRoute route) {
        CurvatureData<S> out;
        for (int s = 1; s <= n_; ++s)
            for (int t = 1; t <= n_; ++t) {
                if (s == t) continue;
                for (int u = 1; u <= n_; ++u) {
                    Vec r = route == RiemannRoute::koszul
                                ? riemann_koszul(s, t, u)
                                : riemann_j(basis(s), basis(t), basis(u));
                    std::vector<std::pair<int, S>> entries;
                    for (int k = 1; k <= n_; ++k)
                        if (!isz(r[k - 1])) entries.emplace_back(k, r[k - 1]);
                    if (!entries.empty()) out.components[{s, t, u}] = std::move(entries);
                }
            }
        return out;
    }

    // dual pairing <e^i, e^r> = delta_{sigma(i),r} / g_i
    S dual_pair(int i, int r) const { return sig(i) == r ? ginv_[i] : zero_; }

    // ric(e_a,e_b) = 1/2 <d(e_a flat), d(e_b flat)> - 1/2 <ad e_a, ad e_b>;
    // e_a flat = g_a e^{sigma(a)} and de^k = sum_{i<j} c^k_{ij} e^i wedge e^j
    S ricci_entry(int a, int b) const {
        Rational half(1, 2);
        int sa = sig(a), sb = sig(b);
        S forms = zero_;
        for (const auto& [p1, terms1] : a_.brackets()) {
            Rational c1 = 0;
            for (const auto& t : terms1)
                if (t.target == sa) c1 = t.coeff;
            if (c1 == 0) continue;
            for (const auto& [p2, terms2] : a_.brackets()) {
                Rational c2 = 0;
                for (const auto& t : terms2)
                    if (t.target == sb) c2 = t.coeff;
                if (c2 == 0) continue;
                S plus = dual_pair(p1.first, p2.first) * dual_pair(p1.second, p2.second);
                S minus = dual_pair(p1.first, p2.second) * dual_pair(p1.second, p2.first);
                forms += (plus - minus) * (c1 * c2);
            }
        }
        forms = forms * g_[a] * g_[b] * half;
        // <ad u, ad v> = sum_t <e^t, e^{sigma(t)}> <[u,e_t], [v,e_{sigma(t)}]>
        S ad = zero_;
        for (int t = 1; t <= n_; ++t) {
            std::vector<Rational> x = a_.bracket(a, t);
            std::vector<Rational> y = a_.bracket(b, sig(t));
            S ip = zero_;
            for (int c = 1; c <= n_; ++c) {
                Rational prod = x[sig(c) - 1] * y[c - 1];
                if (prod != 0) ip += g_[c] * prod;
            }
            if (!isz(ip)) ad += ginv_[t] * ip;
        }
        return forms - ad * half;
    }

    Sym2Data<S> ricci() const {
        Sym2Data<S> out;
        for (int a = 1; a <= n_; ++a)
            for (int b = a; b <= n_; ++b) {
                S val = ricci_entry(a, b);
                if (!isz(val)) out.entries[{a, b}] = std::move(val);
            }
        return out;
    }

private:
    const LieAlgebra& a_;
    const SigmaMetric& m_;
    int n_;
    std::vector<int> comm_;
    S zero_;
    std::vector<S> g_, ginv_;
    std::map<int, std::vector<Vec>> j_;
    std::vector<std::vector<Vec>> gamma_;
};

void require_symbolic(const SigmaMetric& m) {
    if (!m.symbolic_mode()) throw domain_error("operation needs a symbolic metric");
}

void require_numeric(const SigmaMetric& m) {
    if (m.symbolic_mode()) throw domain_error("operation needs a numeric metric");
}

} // namespace

SymTensor2 ricci_tensor(const LieAlgebra& a, const SigmaMetric& m) {
    require_symbolic(m);
    return CurvatureEngine<LaurentPoly>(a, m).ricci();
}

SymTensor2Q ricci_tensor_numeric(const LieAlgebra& a, const SigmaMetric& m) {
    require_numeric(m);
    return CurvatureEngine<Rational>(a, m).ricci();
}

Connection levi_civita(const LieAlgebra& a, const SigmaMetric& m) {
    require_symbolic(m);
    return CurvatureEngine<LaurentPoly>(a, m).connection();
}

ConnectionQ levi_civita_numeric(const LieAlgebra& a, const SigmaMetric& m) {
    require_numeric(m);
    return CurvatureEngine<Rational>(a, m).connection();
}

CurvatureTensor riemann_tensor(const LieAlgebra& a, const SigmaMetric& m, RiemannRoute route) {
    require_symbolic(m);
    return CurvatureEngine<LaurentPoly>(a, m).riemann(route);
}

CurvatureTensorQ riemann_tensor_numeric(const LieAlgebra& a, const SigmaMetric& m,
                                        RiemannRoute route) {
    require_numeric(m);
    return CurvatureEngine<Rational>(a, m).riemann(route);
}

SymTensor2 ricci_from_riemann(const LieAlgebra& a, const SigmaMetric& m,
                              const CurvatureTensor& r) {
    int n = a.dim();
    SymTensor2 out;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            LaurentPoly acc(m.nvars());
            for (int k = 1; k <= n; ++k) {
                if (k == i) continue;
                auto it = r.components.find({k, i, j});
                if (it == r.components.end()) continue;
                for (const auto& [b, poly] : it->second)
                    if (b == k) acc -= poly;
            }
            if (!acc.is_zero()) out.entries[{i, j}] = std::move(acc);
        }
    return out;
}

LaurentPoly sectional_component(const LieAlgebra& a, const SigmaMetric& m,
                                const CurvatureTensor& r, const std::vector<Rational>& u,
                                const std::vector<Rational>& v) {
    require_symbolic(m);
    if (int(u.size()) != a.dim() || int(v.size()) != a.dim())
        throw domain_error("vector length does not match the algebra dimension");
    LaurentPoly out(m.nvars());
    for (const auto& [key, entries] : r.components) {
        auto [s, t, w] = key;
        Rational f = u[s - 1] * v[t - 1] * u[w - 1];
        if (f == 0) continue;
        for (const auto& [k, poly] : entries) {
            // <e_k, v> = g_k v_{sigma(k)}
            Rational vk = v[m.sigma().apply(k) - 1];
            if (vk == 0) continue;
            out += poly * m.g_sym(k) * (f * vk);
        }
    }
    return out;
}

LaurentPoly sectional_nice(const LieAlgebra& a, const SigmaMetric& m, int s, int t) {
    require_symbolic(m);
    int n = a.dim();
    if (m.n() != n) throw domain_error("metric size does not match the algebra");
    if (s < 1 || s > n || t < 1 || t > n)
        throw domain_error("basis index out of range");
    LaurentPoly out(m.nvars());
    if (s == t) return out;
    auto sig = [&](int i) { return m.sigma().apply(i); };
    // unique label k with [e_x, e_k] = c e_target, if any
    auto find_label = [&](int x, int target) -> std::optional<std::pair<int, Rational>> {
        std::optional<std::pair<int, Rational>> found;
        for (int k = 1; k <= n; ++k) {
            Rational c = a.coeff(x, k, target);
            if (c == 0) continue;
            if (found)
                throw domain_error("basis is not nice: two brackets of e" + std::to_string(x) +
                                   " reach e" + std::to_string(target));
            found = std::pair<int, Rational>{k, c};
        }
        return found;
    };
    std::optional<int> k1;
    Rational l1 = 0;
    for (int k = 1; k <= n; ++k) {
        Rational c = a.coeff(s, t, k);
        if (c == 0) continue;
        if (k1)
            throw domain_error("basis is not nice: [e" + std::to_string(s) + ",e" +
                               std::to_string(t) + "] has two terms");
        k1 = k;
        l1 = c;
    }
    auto p2 = find_label(s, sig(t));
    auto p3 = find_label(t, sig(s));
    auto p4 = find_label(s, sig(s));
    auto p5 = find_label(t, sig(t));
    auto g = [&](int i) { return m.g_sym(i); };
    auto ginv = [&](int i) { return LaurentPoly::variable(m.nvars(), m.var_of(i), -1); };
    // lambda_1^2 coefficient calibrated on the diagonal Heisenberg metric,
    // where the (e1,e2) plane has curvature -3/4 lambda^2 g_{k1}
    if (k1 && sig(*k1) == *k1) out += g(*k1) * (l1 * l1 * Rational(-3, 4));
    if (p2 && sig(p2->first) == p2->first)
        out += g(t) * g(t) * ginv(p2->first) * (p2->second * p2->second * Rational(1, 4));
    if (p3 && sig(p3->first) == p3->first)
        out += g(s) * g(s) * ginv(p3->first) * (p3->second * p3->second * Rational(1, 4));
    if (k1 && p2 && *k1 == p2->first) out += g(t) * (l1 * p2->second * Rational(-1, 2));
    if (k1 && p3 && *k1 == p3->first) out += g(s) * (l1 * p3->second * Rational(1, 2));
    if (p2 && p3 && p3->first == sig(p2->first))
        out += g(s) * g(t) * ginv(p2->first) * (p2->second * p3->second * Rational(1, 2));
    if (p4 && p5 && p5->first == sig(p4->first))
        out += g(s) * g(t) * ginv(p4->first) * (p4->second * p5->second * Rational(-1));
    return out;
}

FlatnessReport flatness_analysis(const CurvatureTensor& r) {
    FlatnessReport rep;
    if (r.is_zero()) {
        rep.verdict = FlatnessVerdict::identically_flat;
        return rep;
    }
    for (const auto& [key, entries] : r.components)
        for (const auto& [k, poly] : entries) {
            LaurentPoly num = poly.monic_primitive();
            if (num.is_monomial()) {
                // a monomial cannot vanish at invertible parameters
                rep.verdict = FlatnessVerdict::generically_nonflat;
                auto [s, t, u] = key;
                rep.witness = RiemannEntry{s, t, u, k, poly};
                rep.conditions.clear();
                return rep;
            }
            if (std::find(rep.conditions.begin(), rep.conditions.end(), num) ==
                rep.conditions.end())
                rep.conditions.push_back(num);
        }
    rep.verdict = FlatnessVerdict::conditionally_flat;
    std::sort(rep.conditions.begin(), rep.conditions.end(),
              [](const LaurentPoly& a, const LaurentPoly& b) { return a.str() < b.str(); });
    return rep;
}

std::optional<NonflatWitness> nonflat_criteria(const NiceDiagram& d, const Involution& sg) {
    if (sg.n() != d.nodes())
        throw domain_error("involution acts on " + std::to_string(sg.n()) +
                           " nodes, diagram has " + std::to_string(d.nodes()));
    int n = d.nodes();
    for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t) {
            if (s == t) continue;
            int ss = sg.apply(s), st = sg.apply(t);
            bool blocked = false;
            for (int k = 1; k <= n && !blocked; ++k)
                if (d.has_arrow(s, k, ss) && d.has_arrow(t, sg.apply(k), st)) blocked = true;
            if (blocked) continue;
            int k1 = d.bracket_target(s, t);
            if (k1 != 0 && sg.apply(k1) == k1 && !d.has_source_target(t, ss) &&
                !d.has_source_target(s, st))
                return NonflatWitness{s, t, "C1"};
            bool fixed_label = false;
            for (int k = 1; k <= n && !fixed_label; ++k)
                if (sg.apply(k) == k && d.has_arrow(s, k, st)) fixed_label = true;
            if (fixed_label && d.bracket_target(s, t) == 0 && !d.has_source_target(t, ss))
                return NonflatWitness{s, t, "C2"};
        }
    return std::nullopt;
}

std::string render_curvature(const CurvatureTensor& r, const SigmaMetric& m) {
    std::ostringstream os;
    auto name = m.namer();
    bool any = false;
    for (const auto& [key, entries] : r.components) {
        auto [s, t, u] = key;
        if (s > t) continue; // the skew partner carries the same information
        any = true;
        os << "R(e" << s << ",e" << t << ")e" << u << " =";
        bool first = true;
        for (const auto& [k, poly] : entries) {
            os << (first ? " " : " + ") << "(" << poly.str(name) << ")*e" << k;
            first = false;
        }
        os << "\n";
    }
    if (!any) os << "R = 0\n";
    return os.str();
}

std::string render_sym2(const SymTensor2& t, const SigmaMetric& m) {
    if (t.entries.empty()) return "0\n";
    std::ostringstream os;
    auto name = m.namer();
    for (const auto& [key, poly] : t.entries)
        os << "(e" << key.first << ",e" << key.second << "): " << poly.str(name) << "\n";
    return os.str();
}

} // namespace nilflat

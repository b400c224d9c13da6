#include "nilflat/constructions.hpp"

#include <algorithm>
#include <string>

#include "nilflat/error.hpp"
#include "nilflat/rational.hpp"

namespace nilflat {

namespace {

std::vector<int> vadd(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

std::vector<int> vsub(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

// ci*eps_i + cj*eps_j as a coordinate vector, 1-based positions
std::vector<int> eps_vec(int dim, int i, int ci, int j = 0, int cj = 0) {
    std::vector<int> v(dim, 0);
    v[i - 1] += ci;
    if (j != 0) v[j - 1] += cj;
    return v;
}

std::string type_str(RootType t) {
    switch (t) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::G2: return "G2";
    }
    return "?";
}

} // namespace

std::pair<LieAlgebra, Involution> heisenberg(int n) {
    if (n < 1) throw domain_error("heisenberg needs n >= 1");
    int dim = 2 * n + 1;
    LieAlgebra::BracketMap br;
    for (int i = 1; i <= n; ++i) br[{2 * i - 1, 2 * i}] = {{dim, Rational(-1)}};
    std::vector<std::pair<int, int>> pairs = {{1, dim}};
    for (int i = 1; i < n; ++i) pairs.push_back({2 * i, 2 * i + 1});
    return {LieAlgebra(dim, br, "heisenberg:" + std::to_string(n)), Involution(dim, pairs)};
}

std::pair<LieAlgebra, Involution> standard_filiform(int n) {
    if (n < 4) throw domain_error("standard filiform needs n >= 4");
    LieAlgebra::BracketMap br;
    for (int i = 2; i < n; ++i) br[{1, i}] = {{i + 1, Rational(1)}};
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; 2 * i < n + 1; ++i) pairs.push_back({i, n + 1 - i});
    return {LieAlgebra(n, br, "filiform:" + std::to_string(n)), Involution(n, pairs)};
}

Graph::Graph(int v, std::vector<std::pair<int, int>> e) : vertices(v), edges(std::move(e)) {
    if (vertices < 0) throw domain_error("negative vertex count");
    for (auto& [a, b] : edges) {
        if (a < 1 || b < 1 || a > vertices || b > vertices)
            throw domain_error("edge endpoint out of range");
        if (a == b) throw domain_error("graph has a loop");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw domain_error("duplicate edge");
}

Graph path_graph(int k) {
    if (k < 1) throw domain_error("path needs at least one vertex");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < k; ++i) e.push_back({i, i + 1});
    return Graph(k, std::move(e));
}

Graph cycle_graph(int k) {
    if (k < 3) throw domain_error("cycle needs at least three vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < k; ++i) e.push_back({i, i + 1});
    e.push_back({1, k});
    return Graph(k, std::move(e));
}

Graph star_graph(int k) {
    if (k < 1) throw domain_error("star needs at least one vertex");
    std::vector<std::pair<int, int>> e;
    for (int i = 2; i <= k; ++i) e.push_back({1, i});
    return Graph(k, std::move(e));
}

Graph complete_graph(int k) {
    if (k < 1) throw domain_error("complete graph needs at least one vertex");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) e.push_back({i, j});
    return Graph(k, std::move(e));
}

LieAlgebra graph_algebra(const Graph& g) {
    LieAlgebra::BracketMap br;
    int nv = g.vertices, ne = int(g.edges.size());
    for (int t = 0; t < ne; ++t)
        br[g.edges[t]] = {{nv + t + 1, Rational(1)}};
    std::string name =
        "graph(" + std::to_string(nv) + "v," + std::to_string(ne) + "e)";
    return LieAlgebra(nv + ne, br, name);
}

Involution graph_sigma(const Graph& g) {
    int nv = g.vertices, ne = int(g.edges.size());
    // connected components of the vertex set
    std::vector<std::vector<int>> adj(nv + 1);
    for (auto& [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> comp(nv + 1, -1);
    int ncomp = 0;
    for (int v = 1; v <= nv; ++v) {
        if (comp[v] >= 0) continue;
        std::vector<int> stack = {v};
        comp[v] = ncomp;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (comp[y] < 0) {
                    comp[y] = ncomp;
                    stack.push_back(y);
                }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> verts(ncomp), enodes(ncomp);
    for (int v = 1; v <= nv; ++v) verts[comp[v]].push_back(v);
    for (int t = 0; t < ne; ++t) enodes[comp[g.edges[t].first]].push_back(nv + t + 1);

    std::vector<std::pair<int, int>> tr;
    for (int c = 0; c < ncomp; ++c) {
        int r = int(verts[c].size()), s = int(enodes[c].size());
        // a connected component has at least r - 1 edges; when it is a tree
        // the last vertex stays fixed, otherwise every vertex gets an edge
        int paired = std::min(r, s);
        for (int i = 0; i < paired; ++i) tr.push_back({verts[c][i], enodes[c][i]});
    }
    return Involution(nv + ne, std::move(tr));
}

bool RootDatum::is_positive_root(const std::vector<int>& v) const {
    return std::find(positive.begin(), positive.end(), v) != positive.end();
}

std::vector<int> RootDatum::simple_coords(const std::vector<int>& v) const {
    std::vector<int> out(rank, 0);
    switch (type) {
    case RootType::A: {
        // alpha_l = eps_l - eps_{l+1}; the coefficient of alpha_l is the
        // partial sum of the first l coordinates
        int acc = 0;
        for (int l = 0; l < rank; ++l) {
            acc += v[l];
            out[l] = acc;
        }
        return out;
    }
    case RootType::B: {
        // short root alpha_n = eps_n
        int acc = 0;
        for (int l = 0; l + 1 < rank; ++l) {
            acc += v[l];
            out[l] = acc;
        }
        out[rank - 1] = acc + v[rank - 1];
        return out;
    }
    case RootType::C: {
        // long root alpha_n = 2 eps_n
        int acc = 0;
        for (int l = 0; l + 1 < rank; ++l) {
            acc += v[l];
            out[l] = acc;
        }
        int total = acc + v[rank - 1];
        if (total % 2 != 0) throw domain_error("vector is not in the root lattice");
        out[rank - 1] = total / 2;
        return out;
    }
    case RootType::G2:
        return v;
    }
    throw domain_error("unsupported root type");
}

int RootDatum::order(const std::vector<int>& v) const {
    auto m = simple_coords(v);
    int o = 0;
    for (int l = 0; l < rank; ++l)
        if (!std::binary_search(theta.begin(), theta.end(), l)) o += m[l];
    return o;
}

std::vector<std::vector<int>> RootDatum::nilradical_roots() const {
    std::vector<std::vector<int>> out;
    for (const auto& v : positive)
        if (order(v) > 0) out.push_back(v);
    std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        int oa = order(a), ob = order(b);
        if (oa != ob) return oa < ob;
        return a > b;
    });
    if (type == RootType::C && rank == 3 && theta == std::vector<int>{0}) {
        // pin the basis order of the rank three family so its structure
        // constants come out as (0,0,0,e^{12},-e^{23},2e^{14},e^{15}+e^{34},2e^{35})
        out = {{1, 0, -1}, {0, 0, 2}, {0, 1, -1}, {1, 0, 1},
               {0, 1, 1},  {2, 0, 0}, {1, 1, 0},  {0, 2, 0}};
    }
    return out;
}

RootDatum positive_roots(RootType t, int n) {
    RootDatum r;
    r.type = t;
    r.rank = n;
    switch (t) {
    case RootType::A: {
        if (n < 1) throw domain_error("type A needs rank >= 1");
        for (int i = 1; i <= n + 1; ++i)
            for (int j = i + 1; j <= n + 1; ++j)
                r.positive.push_back(eps_vec(n + 1, i, 1, j, -1));
        for (int l = 1; l <= n; ++l) r.simple.push_back(eps_vec(n + 1, l, 1, l + 1, -1));
        break;
    }
    case RootType::B: {
        if (n < 2) throw domain_error("type B needs rank >= 2");
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                r.positive.push_back(eps_vec(n, i, 1, j, -1));
                r.positive.push_back(eps_vec(n, i, 1, j, 1));
            }
        for (int i = 1; i <= n; ++i) r.positive.push_back(eps_vec(n, i, 1));
        for (int l = 1; l < n; ++l) r.simple.push_back(eps_vec(n, l, 1, l + 1, -1));
        r.simple.push_back(eps_vec(n, n, 1));
        break;
    }
    case RootType::C: {
        if (n < 2) throw domain_error("type C needs rank >= 2");
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                r.positive.push_back(eps_vec(n, i, 1, j, -1));
                r.positive.push_back(eps_vec(n, i, 1, j, 1));
            }
        for (int i = 1; i <= n; ++i) r.positive.push_back(eps_vec(n, i, 2));
        for (int l = 1; l < n; ++l) r.simple.push_back(eps_vec(n, l, 1, l + 1, -1));
        r.simple.push_back(eps_vec(n, n, 2));
        break;
    }
    case RootType::G2: {
        if (n != 2) throw domain_error("type G2 has rank 2");
        r.positive = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
        r.simple = {{1, 0}, {0, 1}};
        break;
    }
    }
    // list by height, descending lexicographic within each height
    std::stable_sort(r.positive.begin(), r.positive.end(),
                     [&](const auto& a, const auto& b) {
                         int ha = r.order(a), hb = r.order(b);
                         if (ha != hb) return ha < hb;
                         return a > b;
                     });
    return r;
}

RootDatum family_root_datum(RootType t, int n) {
    RootDatum r = positive_roots(t, n);
    switch (t) {
    case RootType::A:
        if (n < 3 || n % 2 == 0)
            throw domain_error("the type A family needs odd rank >= 3");
        for (int l = 1; l <= n - 2; l += 2) r.theta.push_back(l);
        break;
    case RootType::B:
    case RootType::C:
        for (int l = 0; l + 2 < n; ++l) r.theta.push_back(l);
        break;
    case RootType::G2:
        break;
    }
    return r;
}

namespace {

using Mat = std::vector<std::vector<Rational>>;

int matrix_size(RootType t, int n) {
    switch (t) {
    case RootType::A: return n + 1;
    case RootType::B: return 2 * n + 1;
    case RootType::C: return 2 * n;
    case RootType::G2: return 0;
    }
    return 0;
}

// standard root vector in the defining representation: strictly upper
// triangular for sl(n+1), split so(n,n+1), sp(2n,R)
Mat root_vector_matrix(RootType t, int n, const std::vector<int>& v) {
    int m = matrix_size(t, n);
    Mat M(m, std::vector<Rational>(m, Rational(0)));
    std::vector<std::pair<int, int>> nz; // (0-based position, coefficient)
    for (int p = 0; p < int(v.size()); ++p)
        if (v[p] != 0) nz.push_back({p, v[p]});
    if (t == RootType::A) {
        int i = nz[0].second > 0 ? nz[0].first : nz[1].first;
        int j = nz[0].second > 0 ? nz[1].first : nz[0].first;
        M[i][j] = Rational(1);
        return M;
    }
    if (t == RootType::B) {
        if (nz.size() == 1) { // eps_p
            int p = nz[0].first;
            M[p][2 * n] = Rational(1);
            M[2 * n][n + p] = Rational(-1);
        } else if (nz[0].second == 1 && nz[1].second == 1) { // eps_p + eps_q
            int p = nz[0].first, q = nz[1].first;
            M[p][n + q] = Rational(1);
            M[q][n + p] = Rational(-1);
        } else { // eps_p - eps_q
            int p = nz[0].second > 0 ? nz[0].first : nz[1].first;
            int q = nz[0].second > 0 ? nz[1].first : nz[0].first;
            M[p][q] = Rational(1);
            M[n + q][n + p] = Rational(-1);
        }
        return M;
    }
    // type C
    if (nz.size() == 1) { // 2 eps_p
        int p = nz[0].first;
        M[p][n + p] = Rational(1);
    } else if (nz[0].second == 1 && nz[1].second == 1) { // eps_p + eps_q
        int p = nz[0].first, q = nz[1].first;
        M[p][n + q] = Rational(1);
        M[q][n + p] = Rational(1);
    } else { // eps_p - eps_q
        int p = nz[0].second > 0 ? nz[0].first : nz[1].first;
        int q = nz[0].second > 0 ? nz[1].first : nz[0].first;
        M[p][q] = Rational(1);
        M[n + q][n + p] = Rational(-1);
    }
    return M;
}

Mat mat_comm(const Mat& a, const Mat& b) {
    int m = int(a.size());
    Mat c(m, std::vector<Rational>(m, Rational(0)));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            if (a[i][k] != Rational(0))
                for (int j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
            if (b[i][k] != Rational(0))
                for (int j = 0; j < m; ++j) c[i][j] -= b[i][k] * a[k][j];
        }
    return c;
}

bool mat_is_zero(const Mat& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (x != Rational(0)) return false;
    return true;
}

// exact multiple of target equal to c, or a domain_error if none exists
Rational proportionality(const Mat& c, const Mat& target) {
    int m = int(c.size());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (target[i][j] != Rational(0)) {
                Rational ratio = c[i][j] / target[i][j];
                for (int p = 0; p < m; ++p)
                    for (int q = 0; q < m; ++q)
                        if (c[p][q] != target[p][q] * ratio)
                            throw domain_error(
                                "commutator is not a multiple of the expected root vector");
                return ratio;
            }
    throw domain_error("zero root vector matrix");
}

} // namespace

Nilradical parabolic_nilradical(const RootDatum& r) {
    auto roots = r.nilradical_roots();
    int dim = int(roots.size());
    std::map<std::vector<int>, int> idx;
    for (int i = 0; i < dim; ++i) idx[roots[i]] = i + 1;

    LieAlgebra::BracketMap br;
    if (r.type == RootType::G2) {
        if (!r.theta.empty())
            throw domain_error("type G2 supports only the full nilpotent part");
        br = {{{1, 2}, {{3, Rational(-1)}}},
              {{1, 3}, {{4, Rational(1)}}},
              {{1, 4}, {{5, Rational(1)}}},
              {{2, 5}, {{6, Rational(1)}}},
              {{3, 4}, {{6, Rational(1)}}}};
    } else {
        std::vector<Mat> mats;
        mats.reserve(dim);
        for (const auto& v : roots) mats.push_back(root_vector_matrix(r.type, r.rank, v));
        for (int a = 0; a < dim; ++a)
            for (int b = a + 1; b < dim; ++b) {
                Mat c = mat_comm(mats[a], mats[b]);
                auto sum = vadd(roots[a], roots[b]);
                if (r.is_positive_root(sum)) {
                    Rational coeff = proportionality(c, mats[idx.at(sum) - 1]);
                    if (coeff == Rational(0))
                        throw domain_error("vanishing structure constant on a root sum");
                    br[{a + 1, b + 1}] = {{idx.at(sum), coeff}};
                } else if (!mat_is_zero(c)) {
                    throw domain_error("commutator leaves the nilpotent part");
                }
            }
    }
    std::string name = "parabolic:" + type_str(r.type);
    if (r.type != RootType::G2) name += ":" + std::to_string(r.rank);
    LieAlgebra alg(dim, std::move(br), name);
    auto ext = extract_nice_structure(alg);
    if (!ext.diagram) throw domain_error("nilradical basis is not nice: " + ext.witness);
    return {std::move(alg), *ext.diagram, std::move(roots), std::move(idx)};
}

namespace {

// depth-first completion of the fixed frame sigma(eps_i - eps_n) = eps_i for
// type B: process eps_n, then eps_i + eps_j with j < n in lexicographic
// order, then eps_i + eps_n; each element is first kept fixed, then paired
// with each later unprocessed element, backtracking whenever some pair of
// assigned roots has both a root sum mapping to a root sum or a difference in
// the nilpotent part mapping to one
struct sigma_search {
    const RootDatum& r;
    const std::vector<std::vector<int>>& roots;
    std::vector<int> img;   // 0-based image, -1 while unassigned
    std::vector<int> order; // processing order, 0-based indices

    bool nilroot(const std::vector<int>& v) const {
        return r.is_positive_root(v) && r.order(v) > 0;
    }

    bool pair_ok(int a, int b) const {
        if (a == b) return true;
        const auto &ga = roots[a], &gb = roots[b];
        const auto &sa = roots[img[a]], &sb = roots[img[b]];
        if (r.is_positive_root(vadd(ga, gb)) && r.is_positive_root(vadd(sa, sb)))
            return false;
        if (nilroot(vsub(gb, ga)) && nilroot(vsub(sb, sa))) return false;
        if (nilroot(vsub(ga, gb)) && nilroot(vsub(sa, sb))) return false;
        return true;
    }

    bool consistent(int a) const {
        for (int b = 0; b < int(roots.size()); ++b)
            if (img[b] >= 0 && !pair_ok(a, b)) return false;
        return true;
    }

    bool extend(int pos) {
        while (pos < int(order.size()) && img[order[pos]] >= 0) ++pos;
        if (pos == int(order.size())) return true;
        int a = order[pos];
        img[a] = a;
        if (consistent(a) && extend(pos + 1)) return true;
        img[a] = -1;
        for (int q = pos + 1; q < int(order.size()); ++q) {
            int b = order[q];
            if (img[b] >= 0) continue;
            img[a] = b;
            img[b] = a;
            if (consistent(a) && consistent(b) && extend(pos + 1)) return true;
            img[a] = img[b] = -1;
        }
        return false;
    }
};

} // namespace

Involution sigma_parabolic(RootType t, int n) {
    RootDatum r = family_root_datum(t, n);
    if (t == RootType::G2) {
        Involution s(6, {{1, 6}, {3, 5}});
        if (!arrow_breaking_roots(r, s)) throw domain_error("sigma is not arrow-breaking");
        return s;
    }
    auto roots = r.nilradical_roots();
    int dim = int(roots.size());
    std::map<std::vector<int>, int> idx;
    for (int i = 0; i < dim; ++i) idx[roots[i]] = i + 1;
    std::vector<int> img(dim + 1, 0); // 1-based image

    switch (t) {
    case RootType::A: {
        for (int a = 1; a <= dim; ++a) {
            const auto& v = roots[a - 1];
            int i = 0, j = 0;
            for (int p = 0; p < int(v.size()); ++p) {
                if (v[p] == 1) i = p + 1;
                if (v[p] == -1) j = p + 1;
            }
            // rows pair up as 2l <-> 2l+1 with the first row fixed; within a
            // row pair the column j with n + 1 + h(i) - j
            int h = (i % 2 == 1) ? i + 1 : i + 2;
            int ip = (i == 1) ? 1 : (i % 2 == 0 ? i + 1 : i - 1);
            int jp = n + 1 + h - j;
            img[a] = idx.at(eps_vec(n + 1, ip, 1, jp, -1));
        }
        break;
    }
    case RootType::C: {
        auto gamma_vec = [&](int j) {
            return j == n ? eps_vec(n, n, 2) : eps_vec(n, j, 1, n, 1);
        };
        auto delta_vec = [&](int j) {
            return j == n ? eps_vec(n, 1, 1, n, 1) : eps_vec(n, 1, 1, j, 1);
        };
        for (int a = 1; a <= dim; ++a) {
            const auto& v = roots[a - 1];
            std::vector<std::pair<int, int>> nz;
            for (int p = 0; p < n; ++p)
                if (v[p] != 0) nz.push_back({p, v[p]});
            if (nz.size() == 2 && nz[1].second == -1) {
                // eps_i - eps_n maps to 2 eps_{n-i}
                img[a] = idx.at(eps_vec(n, n - (nz[0].first + 1), 2));
            } else if (nz.size() == 1) {
                int p = nz[0].first;
                // 2 eps_n maps to eps_1 + eps_2, other 2 eps_i to eps_{n-i} - eps_n
                if (p == n - 1) img[a] = idx.at(delta_vec(2));
                else img[a] = idx.at(eps_vec(n, n - (p + 1), 1, n, -1));
            } else {
                int p = nz[0].first, q = nz[1].first;
                if (p == 0 && q == n - 1) img[a] = idx.at(gamma_vec(2));
                else if (q == n - 1) img[a] = idx.at(delta_vec(n - (p + 1) + 2));
                else if (p == 0) img[a] = idx.at(gamma_vec(n - (q + 1) + 2));
                else img[a] = a; // eps_i + eps_j away from both ends stays fixed
            }
        }
        break;
    }
    case RootType::B: {
        sigma_search search{r, roots, std::vector<int>(dim, -1), {}};
        for (int i = 1; i < n; ++i) {
            int a = idx.at(eps_vec(n, i, 1, n, -1)) - 1;
            int b = idx.at(eps_vec(n, i, 1)) - 1;
            search.img[a] = b;
            search.img[b] = a;
        }
        search.order.push_back(idx.at(eps_vec(n, n, 1)) - 1);
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                search.order.push_back(idx.at(eps_vec(n, i, 1, j, 1)) - 1);
        for (int i = 1; i < n; ++i)
            search.order.push_back(idx.at(eps_vec(n, i, 1, n, 1)) - 1);
        if (!search.extend(0))
            throw domain_error("no involution extends the type B frame");
        for (int a = 1; a <= dim; ++a) img[a] = search.img[a - 1] + 1;
        break;
    }
    case RootType::G2:
        break;
    }

    std::vector<std::pair<int, int>> tr;
    for (int a = 1; a <= dim; ++a) {
        if (img[a] == 0 || img[img[a]] != a)
            throw domain_error("sigma construction is not an involution");
        if (a < img[a]) tr.push_back({a, img[a]});
    }
    Involution s(dim, std::move(tr));
    if (!arrow_breaking_roots(r, s)) throw domain_error("sigma is not arrow-breaking");
    return s;
}

bool arrow_breaking_roots(const RootDatum& r, const Involution& s) {
    auto roots = r.nilradical_roots();
    int m = int(roots.size());
    if (s.n() != m)
        throw domain_error("involution acts on " + std::to_string(s.n()) +
                           " nodes, nilpotent part has " + std::to_string(m));
    auto nilroot = [&](const std::vector<int>& v) {
        return r.is_positive_root(v) && r.order(v) > 0;
    };
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            const auto &ga = roots[a], &gb = roots[b];
            const auto &sa = roots[s.apply(a + 1) - 1], &sb = roots[s.apply(b + 1) - 1];
            if (r.is_positive_root(vadd(ga, gb)) && r.is_positive_root(vadd(sa, sb)))
                return false;
            if (nilroot(vsub(gb, ga)) && nilroot(vsub(sb, sa))) return false;
            if (nilroot(vsub(ga, gb)) && nilroot(vsub(sa, sb))) return false;
        }
    return true;
}

namespace {

int parse_int(const std::string& s) {
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw parse_error("bad integer '" + s + "'");
    }
    if (pos != s.size()) throw parse_error("bad integer '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

Graph parse_graph_spec(const std::string& body) {
    if (body.rfind("edges=", 0) == 0) {
        std::vector<std::pair<int, int>> edges;
        int maxv = 0;
        for (const auto& item : split(body.substr(6), ',')) {
            auto ends = split(item, '-');
            if (ends.size() != 2) throw parse_error("bad edge '" + item + "'");
            int a = parse_int(ends[0]), b = parse_int(ends[1]);
            maxv = std::max({maxv, a, b});
            edges.push_back({a, b});
        }
        return Graph(maxv, std::move(edges));
    }
    static const std::pair<std::string, Graph (*)(int)> kinds[] = {
        {"path", path_graph},
        {"cycle", cycle_graph},
        {"star", star_graph},
        {"complete", complete_graph},
    };
    for (const auto& [prefix, fn] : kinds)
        if (body.rfind(prefix, 0) == 0) return fn(parse_int(body.substr(prefix.size())));
    throw parse_error("unknown graph '" + body + "'");
}

} // namespace

Generated generate(const std::string& spec) {
    auto parts = split(spec, ':');
    const std::string& head = parts[0];
    if (head == "heisenberg" && parts.size() == 2) {
        auto [a, s] = heisenberg(parse_int(parts[1]));
        return {std::move(a), std::move(s)};
    }
    if (head == "filiform" && parts.size() == 2) {
        auto [a, s] = standard_filiform(parse_int(parts[1]));
        return {std::move(a), std::move(s)};
    }
    if (head == "graph" && parts.size() == 2) {
        Graph g = parse_graph_spec(parts[1]);
        return {graph_algebra(g), graph_sigma(g)};
    }
    if (head == "parabolic" && parts.size() >= 2) {
        RootType t;
        int n = 2;
        if (parts[1] == "G2" && parts.size() == 2) {
            t = RootType::G2;
        } else if (parts.size() == 3 &&
                   (parts[1] == "A" || parts[1] == "B" || parts[1] == "C")) {
            t = parts[1] == "A" ? RootType::A
                                : (parts[1] == "B" ? RootType::B : RootType::C);
            n = parse_int(parts[2]);
        } else {
            throw parse_error("unknown generator '" + spec + "'");
        }
        auto nr = parabolic_nilradical(family_root_datum(t, n));
        return {std::move(nr.algebra), sigma_parabolic(t, n)};
    }
    throw parse_error("unknown generator '" + spec + "'");
}

} // namespace nilflat

#include "nilflat/liealg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "nilflat/matrix.hpp"

namespace nilflat {

LieAlgebra::LieAlgebra(int dim, BracketMap brackets, std::string name)
    : dim_(dim), name_(std::move(name)) {
    if (dim < 0)
        throw domain_error("negative dimension");
    for (auto& [pair, terms] : brackets) {
        auto [i, j] = pair;
        if (i < 1 || j <= i || j > dim)
            throw domain_error("bracket pair out of range or not ordered");
        std::map<int, Rational> merged;
        for (const auto& t : terms) {
            if (t.target < 1 || t.target > dim)
                throw domain_error("bracket target out of range");
            merged[t.target] += t.coeff;
        }
        std::vector<BracketTerm> norm;
        for (auto& [k, c] : merged)
            if (c != 0)
                norm.push_back({k, c});
        if (!norm.empty())
            brackets_[pair] = std::move(norm);
    }
}

Rational LieAlgebra::coeff(int i, int j, int k) const {
    if (i == j)
        return 0;
    Rational sign = 1;
    if (i > j) {
        std::swap(i, j);
        sign = -1;
    }
    auto it = brackets_.find({i, j});
    if (it == brackets_.end())
        return 0;
    for (const auto& t : it->second)
        if (t.target == k)
            return sign * t.coeff;
    return 0;
}

std::vector<Rational> LieAlgebra::bracket(int i, int j) const {
    std::vector<Rational> out(dim_, Rational(0));
    if (i == j)
        return out;
    Rational sign = 1;
    if (i > j) {
        std::swap(i, j);
        sign = -1;
    }
    auto it = brackets_.find({i, j});
    if (it != brackets_.end())
        for (const auto& t : it->second)
            out[t.target - 1] = sign * t.coeff;
    return out;
}

std::vector<Rational> LieAlgebra::bracket_vec(const std::vector<Rational>& u,
                                              const std::vector<Rational>& v) const {
    if (int(u.size()) != dim_ || int(v.size()) != dim_)
        throw domain_error("vector dimension mismatch");
    std::vector<Rational> out(dim_, Rational(0));
    for (const auto& [pair, terms] : brackets_) {
        auto [a, b] = pair;
        Rational c = u[a - 1] * v[b - 1] - u[b - 1] * v[a - 1];
        if (c == 0)
            continue;
        for (const auto& t : terms)
            out[t.target - 1] += c * t.coeff;
    }
    return out;
}

std::vector<int> LieAlgebra::commutator_indices() const {
    std::vector<int> idx;
    for (const auto& [pair, terms] : brackets_)
        for (const auto& t : terms)
            idx.push_back(t.target);
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
}

namespace {

std::string wedge_str(int i, int j) {
    std::ostringstream os;
    if (i >= 10 || j >= 10)
        os << "e^{" << i << "," << j << "}";
    else
        os << "e^{" << i << j << "}";
    return os.str();
}

std::string coeff_prefix(const Rational& c) {
    if (c == 1)
        return "";
    if (c == -1)
        return "-";
    return to_string(c);
}

} // namespace

std::string LieAlgebra::str() const {
    // invert to per-target term lists
    std::vector<std::vector<std::pair<std::pair<int, int>, Rational>>> by_target(dim_ + 1);
    for (const auto& [pair, terms] : brackets_)
        for (const auto& t : terms)
            by_target[t.target].push_back({pair, t.coeff});

    std::ostringstream os;
    os << "(";
    for (int k = 1; k <= dim_; ++k) {
        if (k > 1)
            os << ",";
        if (by_target[k].empty()) {
            os << "0";
            continue;
        }
        bool first = true;
        for (const auto& [pair, c] : by_target[k]) {
            if (!first)
                os << (c > 0 ? "+" : "-");
            os << coeff_prefix(first ? c : (c > 0 ? c : -c));
            os << wedge_str(pair.first, pair.second);
            first = false;
        }
    }
    os << ")";
    return os.str();
}

std::optional<JacobiWitness> check_jacobi(const LieAlgebra& a) {
    const int n = a.dim();
    auto unit = [n](int i) {
        std::vector<Rational> v(n, Rational(0));
        v[i - 1] = 1;
        return v;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                std::vector<Rational> r = a.bracket_vec(a.bracket(i, j), unit(k));
                std::vector<Rational> s = a.bracket_vec(a.bracket(j, k), unit(i));
                std::vector<Rational> t = a.bracket_vec(a.bracket(k, i), unit(j));
                bool zero = true;
                for (int m = 0; m < n; ++m) {
                    r[m] += s[m] + t[m];
                    if (r[m] != 0)
                        zero = false;
                }
                if (!zero)
                    return JacobiWitness{i, j, k, std::move(r)};
            }
    return std::nullopt;
}

NiceExtraction extract_nice_structure(const LieAlgebra& a) {
    NiceExtraction out;
    // single target per bracket
    for (const auto& [pair, terms] : a.brackets())
        if (terms.size() > 1) {
            std::ostringstream os;
            os << "bracket [e" << pair.first << ",e" << pair.second << "] hits "
               << terms.size() << " basis elements";
            out.witness = os.str();
            return out;
        }
    // single covector per contraction: for fixed source i and target k there
    // must be at most one label j with c_{ijk} != 0
    std::map<std::pair<int, int>, std::vector<int>> labels;
    for (const auto& [pair, terms] : a.brackets()) {
        auto [i, j] = pair;
        labels[{i, terms[0].target}].push_back(j);
        labels[{j, terms[0].target}].push_back(i);
    }
    for (const auto& [key, ls] : labels)
        if (ls.size() > 1) {
            std::ostringstream os;
            os << "contraction e" << key.first << " -| de^" << key.second << " spans e^"
               << ls[0] << " and e^" << ls[1];
            out.witness = os.str();
            return out;
        }

    std::vector<Arrow> arrows;
    for (const auto& [pair, terms] : a.brackets()) {
        arrows.push_back({pair.first, pair.second, terms[0].target});
        out.coeffs[pair] = terms[0].coeff;
    }
    out.diagram = NiceDiagram(a.dim(), std::move(arrows));
    return out;
}

SeriesProfile series_profile(const LieAlgebra& a) {
    const int n = a.dim();
    auto span_products = [&a, n](const std::vector<std::vector<Rational>>& s1,
                                 const std::vector<std::vector<Rational>>& s2) {
        std::vector<std::vector<Rational>> prods;
        for (const auto& u : s1)
            for (const auto& v : s2) {
                auto w = a.bracket_vec(u, v);
                if (std::any_of(w.begin(), w.end(), [](const Rational& x) { return x != 0; }))
                    prods.push_back(std::move(w));
            }
        QMatrix m(int(prods.size()), n);
        for (int r = 0; r < int(prods.size()); ++r)
            for (int c = 0; c < n; ++c)
                m.at(r, c) = prods[r][c];
        return row_basis(std::move(m));
    };

    std::vector<std::vector<std::vector<Rational>>> chain;
    std::vector<std::vector<Rational>> full;
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> e(n, Rational(0));
        e[i] = 1;
        full.push_back(std::move(e));
    }
    chain.push_back(full);
    while (!chain.back().empty()) {
        auto next = span_products(full, chain.back());
        if (next.size() == chain.back().size())
            throw domain_error("lower central series stabilizes above zero: not nilpotent");
        chain.push_back(std::move(next));
    }

    SeriesProfile out;
    for (const auto& s : chain)
        if (!s.empty())
            out.lcs_dims.push_back(int(s.size()));
    if (out.lcs_dims.empty())
        out.lcs_dims.push_back(0); // zero-dimensional algebra
    out.step = int(out.lcs_dims.size());

    // center = common kernel of all ad maps
    QMatrix ad(n * n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            auto w = a.bracket(i, j);
            for (int k = 0; k < n; ++k)
                ad.at((i - 1) * n + k, j - 1) = w[k];
        }
    out.center_dim = int(rank_and_kernel(std::move(ad)).kernel.size());
    out.complement_dim = n - out.center_dim;

    // grading self-check: [g^i, g^j] inside g^{i+j+1}
    for (size_t i = 0; i < chain.size(); ++i)
        for (size_t j = i; j < chain.size(); ++j) {
            auto prods = span_products(chain[i], chain[j]);
            if (prods.empty())
                continue;
            size_t t = i + j + 1;
            if (t >= chain.size())
                throw domain_error("series grading violated");
            auto joint = chain[t];
            joint.insert(joint.end(), prods.begin(), prods.end());
            QMatrix m(int(joint.size()), n);
            for (int r = 0; r < int(joint.size()); ++r)
                for (int c = 0; c < n; ++c)
                    m.at(r, c) = joint[r][c];
            if (row_basis(std::move(m)).size() != chain[t].size())
                throw domain_error("series grading violated");
        }

    return out;
}

namespace {

// cursor-based parser for the differential notation
class StructureParser {
public:
    StructureParser(const std::string& text, const ParamMap& params, SignVariant variant)
        : s_(text), params_(params), variant_(variant) {}

    LieAlgebra run(std::string name) {
        skip_ws();
        expect('(');
        int entry = 0;
        std::vector<std::vector<std::pair<std::pair<int, int>, Rational>>> per_entry;
        while (true) {
            ++entry;
            per_entry.push_back(parse_entry());
            skip_ws();
            if (eat(','))
                continue;
            expect(')');
            break;
        }
        skip_ws();
        if (pos_ != s_.size())
            fail("trailing characters");

        const int dim = entry;
        LieAlgebra::BracketMap map;
        for (int k = 1; k <= dim; ++k)
            for (auto& [pair, c] : per_entry[k - 1]) {
                auto [i, j] = pair;
                if (i > dim || j > dim)
                    fail("index exceeds dimension " + std::to_string(dim) + " in de^" +
                         std::to_string(k));
                map[{i, j}].push_back({k, c});
            }
        LieAlgebra a(dim, std::move(map), std::move(name));
        if (auto w = check_jacobi(a)) {
            std::ostringstream os;
            os << "Jacobi identity fails at (e" << w->i << ",e" << w->j << ",e" << w->k
               << "): residual";
            for (int m = 0; m < dim; ++m)
                if (w->residual[m] != 0)
                    os << " " << to_string(w->residual[m]) << "*e" << (m + 1);
            throw domain_error(os.str());
        }
        return a;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
    const ParamMap& params_;
    SignVariant variant_;

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' ||
                                    s_[pos_] == '\r'))
            ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what = nullptr) {
        if (!eat(c))
            fail(std::string("expected '") + c + "'" + (what ? std::string(" ") + what : ""));
    }

    bool at_pm() const {
        return pos_ + 1 < s_.size() && (unsigned char)s_[pos_] == 0xC2 &&
               (unsigned char)s_[pos_ + 1] == 0xB1;
    }
    Rational eat_pm_sign() {
        pos_ += 2;
        if (variant_ == SignVariant::none)
            fail("entry contains ± but no sign variant was selected");
        return variant_ == SignVariant::plus ? 1 : -1;
    }

    bool at_wedge() const { return peek() == 'e' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '^'; }

    bool at_name_char() const {
        char c = peek();
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (unsigned char)c >= 0x80;
    }

    std::string parse_name() {
        std::string raw;
        while (pos_ < s_.size()) {
            if (at_wedge() || at_pm())
                break;
            char c = s_[pos_];
            if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (unsigned char)c >= 0x80) {
                raw += c;
                ++pos_;
            } else
                break;
        }
        // transliterate the greek letters the notation uses
        auto replace_all = [](std::string& str, const std::string& from, const std::string& to) {
            size_t p = 0;
            while ((p = str.find(from, p)) != std::string::npos) {
                str.replace(p, from.size(), to);
                p += to.size();
            }
        };
        replace_all(raw, "λ", "lambda");
        replace_all(raw, "μ", "mu");
        replace_all(raw, "µ", "mu");
        return raw;
    }

    Rational parse_number() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_]))
            ++pos_;
        if (pos_ == start)
            fail("expected number");
        Integer num(s_.substr(start, pos_ - start));
        if (peek() == '/') {
            size_t slash = pos_;
            ++pos_;
            size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_]))
                ++pos_;
            if (pos_ == dstart) {
                pos_ = slash; // not a fraction
                return Rational(num);
            }
            Integer den(s_.substr(dstart, pos_ - dstart));
            if (den == 0)
                fail("zero denominator");
            return make_rational(num, den);
        }
        return Rational(num);
    }

    bool at_factor_start() const {
        return peek() == '(' || std::isdigit((unsigned char)peek()) ||
               (at_name_char() && !at_wedge());
    }

    Rational parse_coef_factor() {
        skip_ws();
        if (at_wedge())
            fail("expected coefficient");
        if (eat('(')) {
            Rational v = parse_coef_sum();
            skip_ws();
            expect(')');
            return v;
        }
        if (std::isdigit((unsigned char)peek()))
            return parse_number();
        if (at_name_char()) {
            size_t at = pos_;
            std::string name = parse_name();
            auto it = params_.find(name);
            if (it == params_.end()) {
                pos_ = at;
                fail("unknown parameter '" + name + "'");
            }
            return it->second;
        }
        fail("expected coefficient");
    }

    Rational parse_coef_product() {
        Rational v = parse_coef_factor();
        while (true) {
            skip_ws();
            if (eat('*')) {
                skip_ws();
                if (at_wedge())
                    return v; // separator between coefficient and wedge term
                v *= parse_coef_factor();
                continue;
            }
            if (eat('/')) {
                Rational d = parse_coef_factor();
                if (d == 0)
                    fail("division by zero");
                v /= d;
                continue;
            }
            if (at_factor_start() && !at_wedge()) {
                v *= parse_coef_factor();
                continue;
            }
            return v;
        }
    }

    Rational parse_coef_sum() {
        skip_ws();
        Rational sign = 1;
        if (eat('-'))
            sign = -1;
        else
            eat('+');
        Rational v = sign * parse_coef_product();
        while (true) {
            skip_ws();
            if (eat('+'))
                v += parse_coef_product();
            else if (eat('-'))
                v -= parse_coef_product();
            else
                return v;
        }
    }

    std::pair<int, int> parse_wedge() {
        expect('e');
        expect('^');
        expect('{');
        size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] != '}')
            ++pos_;
        if (pos_ == s_.size())
            fail("unterminated index braces");
        std::string body = s_.substr(start, pos_ - start);
        ++pos_; // consume '}'
        int i = 0, j = 0;
        size_t comma = body.find(',');
        try {
            if (comma != std::string::npos) {
                size_t u1 = 0, u2 = 0;
                i = std::stoi(body.substr(0, comma), &u1);
                j = std::stoi(body.substr(comma + 1), &u2);
                if (u1 != comma || u2 != body.size() - comma - 1)
                    fail("bad index pair '" + body + "'");
            } else {
                if (body.size() != 2 || !std::isdigit((unsigned char)body[0]) ||
                    !std::isdigit((unsigned char)body[1]))
                    fail("bad index pair '" + body + "' (use the comma form for indices over 9)");
                i = body[0] - '0';
                j = body[1] - '0';
            }
        } catch (const std::invalid_argument&) {
            fail("bad index pair '" + body + "'");
        } catch (const std::out_of_range&) {
            fail("bad index pair '" + body + "'");
        }
        if (i < 1 || j < 1)
            fail("covector index must be positive");
        if (i == j)
            fail("repeated index in e^{" + body + "}");
        return {i, j};
    }

    // one structure entry: 0 or a signed sum of coefficient-wedge terms;
    // returns bracket pairs (i<j) with accumulated coefficients
    std::vector<std::pair<std::pair<int, int>, Rational>> parse_entry() {
        skip_ws();
        std::map<std::pair<int, int>, Rational> acc;
        if (peek() == '0') {
            size_t save = pos_;
            ++pos_;
            skip_ws();
            if (peek() == ',' || peek() == ')')
                return {};
            pos_ = save;
        }
        Rational sign = 1;
        if (at_pm())
            sign = eat_pm_sign();
        else if (eat('-'))
            sign = -1;
        else
            eat('+');
        while (true) {
            skip_ws();
            Rational c = sign;
            if (!at_wedge())
                c *= parse_coef_product();
            skip_ws();
            eat('*');
            skip_ws();
            auto [i, j] = parse_wedge();
            if (i > j) {
                std::swap(i, j);
                c = -c;
            }
            acc[{i, j}] += c;
            skip_ws();
            if (at_pm())
                sign = eat_pm_sign();
            else if (eat('+'))
                sign = 1;
            else if (eat('-'))
                sign = -1;
            else
                break;
        }
        std::vector<std::pair<std::pair<int, int>, Rational>> out;
        for (auto& [pair, c] : acc)
            if (c != 0)
                out.push_back({pair, c});
        return out;
    }
};

} // namespace

LieAlgebra parse_structure(const std::string& text, const ParamMap& params, SignVariant variant,
                           std::string name) {
    return StructureParser(text, params, variant).run(std::move(name));
}

} // namespace nilflat

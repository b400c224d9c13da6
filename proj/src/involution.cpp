#include "nilflat/involution.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

#include "nilflat/error.hpp"
#include "nilflat/matrix.hpp"

namespace nilflat {

Involution::Involution(int n, std::vector<std::pair<int, int>> transpositions) : n_(n) {
    if (n < 0)
        throw domain_error("negative node count");
    image_.resize(n + 1);
    for (int i = 1; i <= n; ++i)
        image_[i] = i;
    for (auto& [a, b] : transpositions) {
        if (a > b)
            std::swap(a, b);
        if (a < 1 || b > n || a == b)
            throw domain_error("transposition out of range");
        if (image_[a] != a || image_[b] != b)
            throw domain_error("transpositions are not disjoint");
        image_[a] = b;
        image_[b] = a;
    }
    std::sort(transpositions.begin(), transpositions.end());
    transpositions_ = std::move(transpositions);
}

std::vector<int> Involution::fixed() const {
    std::vector<int> out;
    for (int i = 1; i <= n_; ++i)
        if (image_[i] == i)
            out.push_back(i);
    return out;
}

int Involution::apply(int i) const {
    if (i < 1 || i > n_)
        throw domain_error("node out of range");
    return image_[i];
}

std::string Involution::str() const {
    if (transpositions_.empty())
        return "id";
    std::ostringstream os;
    for (const auto& [a, b] : transpositions_)
        os << "(" << a << " " << b << ")";
    return os.str();
}

Involution parse_involution(const std::string& text, int n) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace((unsigned char)text[pos]))
            ++pos;
    };
    skip_ws();
    if (text.compare(pos, 2, "id") == 0) {
        pos += 2;
        skip_ws();
        if (pos != text.size())
            throw parse_error("trailing characters after 'id'", pos);
        return Involution(n);
    }
    std::vector<std::pair<int, int>> pairs;
    auto parse_int = [&] {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
            ++pos;
        if (pos == start)
            throw parse_error("expected node index", pos);
        try {
            return std::stoi(text.substr(start, pos - start));
        } catch (const std::out_of_range&) {
            throw parse_error("node index out of range", start);
        }
    };
    while (true) {
        skip_ws();
        if (pos == text.size())
            break;
        if (text[pos] != '(')
            throw parse_error("expected '('", pos);
        ++pos;
        int a = parse_int();
        skip_ws();
        if (pos < text.size() && text[pos] == ',')
            ++pos;
        int b = parse_int();
        skip_ws();
        if (pos == text.size() || text[pos] != ')')
            throw parse_error("expected ')'", pos);
        ++pos;
        pairs.push_back({a, b});
    }
    if (pairs.empty())
        throw parse_error("empty involution, write 'id' for the identity", 0);
    return Involution(n, std::move(pairs));
}

std::optional<BreakViolation> arrow_breaking_violation(const NiceDiagram& d, const Involution& s) {
    if (s.n() != d.nodes())
        throw domain_error("involution size does not match diagram");
    for (const Arrow& a : d.arrows()) {
        int si = s.apply(a.source), sj = s.apply(a.label), sk = s.apply(a.target);
        for (const Arrow& c : d.arrows()) {
            if (c.label == sj && c.target == sk)
                return BreakViolation{a, c, "incoming"};
            if (c.source == si && c.label == sj)
                return BreakViolation{a, c, "outgoing"};
        }
    }
    return std::nullopt;
}

bool is_arrow_breaking(const NiceDiagram& d, const Involution& s) {
    return !arrow_breaking_violation(d, s).has_value();
}

bool is_arrow_breaking_factors(const FactorSet& f, const Involution& s) {
    std::set<std::pair<int, int>> p(f.p_factors.begin(), f.p_factors.end());
    std::set<std::pair<int, int>> q(f.q_factors.begin(), f.q_factors.end());
    for (auto [i, j] : f.p_factors) {
        int a = s.apply(i), b = s.apply(j);
        if (p.count({std::min(a, b), std::max(a, b)}))
            return false;
    }
    for (auto [i, k] : f.q_factors)
        if (q.count({s.apply(i), s.apply(k)}))
            return false;
    return true;
}

std::vector<Involution> enumerate_arrow_breaking(const NiceDiagram& d,
                                                 const EnumerateOptions& opts) {
    const int n = d.nodes();
    FactorSet fs = pq_factors(d);
    std::set<std::pair<int, int>> p(fs.p_factors.begin(), fs.p_factors.end());
    std::set<std::pair<int, int>> q(fs.q_factors.begin(), fs.q_factors.end());

    std::vector<int> img(n + 1, 0);
    int fixed_count = 0;
    std::vector<Involution> results;

    // a partial assignment dies as soon as a fully-assigned factor maps to a
    // factor
    auto consistent = [&] {
        for (auto [i, j] : fs.p_factors) {
            if (!img[i] || !img[j])
                continue;
            int a = img[i], b = img[j];
            if (p.count({std::min(a, b), std::max(a, b)}))
                return false;
        }
        for (auto [i, k] : fs.q_factors)
            if (img[i] && img[k] && q.count({img[i], img[k]}))
                return false;
        return true;
    };

    std::function<bool(int)> rec = [&](int v) -> bool {
        while (v <= n && img[v])
            ++v;
        if (v > n) {
            if (opts.require_fixed_count && fixed_count != *opts.require_fixed_count)
                return true;
            std::vector<std::pair<int, int>> pairs;
            for (int i = 1; i <= n; ++i)
                if (img[i] > i)
                    pairs.push_back({i, img[i]});
            results.push_back(Involution(n, std::move(pairs)));
            return !(opts.max_results && int(results.size()) >= *opts.max_results);
        }
        img[v] = v;
        ++fixed_count;
        bool fixed_ok = !opts.require_fixed_count || fixed_count <= *opts.require_fixed_count;
        if (fixed_ok && consistent() && !rec(v + 1)) {
            img[v] = 0;
            --fixed_count;
            return false;
        }
        img[v] = 0;
        --fixed_count;
        for (int w = v + 1; w <= n; ++w) {
            if (img[w])
                continue;
            img[v] = w;
            img[w] = v;
            if (consistent() && !rec(v + 1)) {
                img[v] = img[w] = 0;
                return false;
            }
            img[v] = img[w] = 0;
        }
        return true;
    };
    rec(1);

    std::sort(results.begin(), results.end(), [](const Involution& a, const Involution& b) {
        if (a.k() != b.k())
            return a.k() < b.k();
        return a.transpositions() < b.transpositions();
    });
    return results;
}

int family_parameter_count(const NiceDiagram& d, const Involution& s) {
    if (s.n() != d.nodes())
        throw domain_error("involution size does not match diagram");
    RankKernel rk = rank_and_kernel(d.root_matrix());
    std::vector<int> sigma(d.nodes());
    for (int i = 1; i <= d.nodes(); ++i)
        sigma[i - 1] = s.apply(i) - 1;
    return rk.rank - s.k() + antiinvariant_dim(rk.kernel, sigma);
}

std::pair<int, int> metric_signature(const Involution& s, const std::map<int, int>& fixed_signs) {
    int p = s.k(), q = s.k();
    auto fix = s.fixed();
    std::set<int> fixed(fix.begin(), fix.end());
    for (auto [node, sign] : fixed_signs) {
        if (!fixed.count(node))
            throw domain_error("sign given for non-fixed node " + std::to_string(node));
        if (sign == 1)
            ++p;
        else if (sign == -1)
            ++q;
        else
            throw domain_error("sign must be +1 or -1");
    }
    if (int(fixed_signs.size()) != int(fixed.size())) {
        for (int f : fix)
            if (!fixed_signs.count(f))
                throw domain_error("missing sign for fixed node " + std::to_string(f));
    }
    return {p, q};
}

} // namespace nilflat

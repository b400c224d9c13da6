#include "nilflat/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace nilflat {

bool GrlexGreater::operator()(const ExpVec& a, const ExpVec& b) const {
    long ta = std::accumulate(a.begin(), a.end(), 0L);
    long tb = std::accumulate(b.begin(), b.end(), 0L);
    if (ta != tb)
        return ta > tb;
    return a > b; // lexicographic on the vectors themselves
}

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
    LaurentPoly p(nvars);
    p.add_term(ExpVec(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int var, int exp) {
    if (var < 0 || var >= nvars)
        throw domain_error("variable index out of range");
    ExpVec e(nvars, 0);
    e[var] = exp;
    LaurentPoly p(nvars);
    p.add_term(e, 1);
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, ExpVec e, const Rational& c) {
    if (int(e.size()) != nvars)
        throw domain_error("exponent vector length mismatch");
    LaurentPoly p(nvars);
    p.add_term(e, c);
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty())
        return true;
    if (terms_.size() > 1)
        return false;
    const ExpVec& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational LaurentPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const ExpVec& e, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_)
        throw domain_error("mixing polynomials over different variable counts");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly r(a.nvars_);
    ExpVec e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPoly LaurentPoly::div_by_monomial(const LaurentPoly& m) const {
    check_compatible(m);
    if (!m.is_monomial())
        throw domain_error("division only by a single-term polynomial");
    const auto& [me, mc] = *m.terms_.begin();
    LaurentPoly r(nvars_);
    ExpVec e(nvars_);
    for (const auto& [te, tc] : terms_) {
        for (int i = 0; i < nvars_; ++i)
            e[i] = te[i] - me[i];
        r.add_term(e, tc / mc);
    }
    return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k == 0)
        return constant(nvars_, 1);
    if (k < 0) {
        if (!is_monomial())
            throw domain_error("negative power of a non-monomial");
        const auto& [e, c] = *terms_.begin();
        ExpVec inv(nvars_);
        for (int i = 0; i < nvars_; ++i)
            inv[i] = -e[i];
        return monomial(nvars_, inv, Rational(1) / c).pow(-k);
    }
    LaurentPoly acc = constant(nvars_, 1);
    for (int i = 0; i < k; ++i)
        acc = acc * *this;
    return acc;
}

Rational LaurentPoly::evaluate(const std::vector<Rational>& values) const {
    if (int(values.size()) != nvars_)
        throw domain_error("evaluation point has wrong dimension");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < nvars_; ++i)
            if (e[i] < 0 && values[i] == 0)
                throw domain_error("zero value for variable with negative exponent");
        Rational t = c;
        for (int i = 0; i < nvars_ && t != 0; ++i) {
            if (e[i] == 0)
                continue;
            Rational p = 1;
            int k = e[i] > 0 ? e[i] : -e[i];
            for (int j = 0; j < k; ++j)
                p *= values[i];
            t *= e[i] > 0 ? p : Rational(1) / p;
        }
        sum += t;
    }
    return sum;
}

LaurentPoly LaurentPoly::substitute(int var, const LaurentPoly& replacement) const {
    check_compatible(replacement);
    if (var < 0 || var >= nvars_)
        throw domain_error("variable index out of range");
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        ExpVec rest = e;
        rest[var] = 0;
        LaurentPoly term = monomial(nvars_, rest, c);
        if (e[var] != 0)
            term = term * replacement.pow(e[var]);
        r += term;
    }
    return r;
}

ExpVec LaurentPoly::min_exponents() const {
    if (terms_.empty())
        return ExpVec(nvars_, 0);
    ExpVec m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nvars_; ++i)
            m[i] = std::min(m[i], e[i]);
    return m;
}

LaurentPoly LaurentPoly::monic_primitive() const {
    if (terms_.empty())
        return *this;
    LaurentPoly r = div_by_monomial(monomial(nvars_, min_exponents(), 1));
    r *= Rational(1) / r.terms_.begin()->second;
    return r;
}

std::string LaurentPoly::str(const std::function<std::string(int)>& var_name) const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += var_name(i);
            if (e[i] != 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            os << to_string(a);
        } else {
            if (a != 1)
                os << to_string(a) << "*";
            os << mono;
        }
    }
    return os.str();
}

std::string LaurentPoly::str() const {
    return str([](int i) { return "g" + std::to_string(i + 1); });
}

namespace {

// Recursive-descent parser for the Laurent expression grammar.
struct ExprParser {
    const std::string& s;
    size_t i = 0;
    int nvars;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw parse_error(what + " in expression '" + s + "'", i);
    }

    LaurentPoly parse() {
        LaurentPoly p = expr();
        skip();
        if (i != s.size())
            fail("trailing characters");
        return p;
    }

    LaurentPoly expr() {
        skip();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        LaurentPoly p = term();
        if (neg)
            p = -p;
        while (true) {
            skip();
            if (eat('+'))
                p += term();
            else if (eat('-'))
                p -= term();
            else
                return p;
        }
    }

    LaurentPoly term() {
        LaurentPoly p = factor();
        while (true) {
            skip();
            if (eat('*'))
                p = p * factor();
            else if (eat('/'))
                p = p.div_by_monomial(factor());
            else
                return p;
        }
    }

    LaurentPoly factor() {
        LaurentPoly b = base();
        skip();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            if (i == start)
                fail("expected exponent");
            int k = std::stoi(s.substr(start, i - start));
            b = b.pow(neg ? -k : k);
        }
        return b;
    }

    LaurentPoly base() {
        skip();
        if (eat('(')) {
            LaurentPoly p = expr();
            if (!eat(')'))
                fail("expected ')'");
            return p;
        }
        if (i < s.size() && s[i] == 'g') {
            ++i;
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            if (i == start)
                fail("expected variable index");
            int v = std::stoi(s.substr(start, i - start));
            if (v < 1 || v > nvars)
                fail("variable g" + std::to_string(v) + " out of range");
            return LaurentPoly::variable(nvars, v - 1);
        }
        size_t start = i;
        while (i < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
            ++i;
        if (i == start)
            fail("expected number, variable or '('");
        // A '/' directly after digits could be a rational "3/4" or division by
        // a monomial; treat it as part of the number only when digits follow.
        std::string num = s.substr(start, i - start);
        if (!num.empty() && num.back() == '/') {
            --i;
            num.pop_back();
        }
        return LaurentPoly::constant(nvars, parse_rational(num));
    }
};

} // namespace

LaurentPoly parse_laurent(const std::string& text, int nvars) {
    ExprParser p{text, 0, nvars};
    return p.parse();
}

} // namespace nilflat

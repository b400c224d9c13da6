#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nilflat/rational.hpp"

namespace nilflat {

// Exponent vector, one (possibly negative) entry per variable g1..gn.
using ExpVec = std::vector<int>;

// Graded lexicographic, descending: larger total degree first, ties broken by
// the lexicographically larger exponent vector. Iterating a term map in this
// order yields the canonical text form.
struct GrlexGreater {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Multivariate Laurent polynomial over the rationals. The term map never
// holds zero coefficients and all exponent vectors have length nvars, so
// equality of maps is equality of polynomials.
class LaurentPoly {
public:
    using TermMap = std::map<ExpVec, Rational, GrlexGreater>;

    explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}

    static LaurentPoly constant(int nvars, const Rational& c);
    static LaurentPoly variable(int nvars, int var, int exp = 1);
    static LaurentPoly monomial(int nvars, ExpVec e, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient of an exponent vector (zero when absent).
    Rational coeff(const ExpVec& e) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
    bool operator==(const LaurentPoly& o) const = default;

    // Division by a single-term polynomial; anything else throws domain_error.
    LaurentPoly div_by_monomial(const LaurentPoly& m) const;

    // Integer powers; negative k requires a monomial base.
    LaurentPoly pow(int k) const;

    // Full evaluation. A variable hit with a negative exponent must receive a
    // nonzero value.
    Rational evaluate(const std::vector<Rational>& values) const;

    // Substitute g_{var+1} := replacement. When var occurs with a negative
    // exponent the replacement must be a monomial (so its inverse is Laurent).
    LaurentPoly substitute(int var, const LaurentPoly& replacement) const;

    // Componentwise minimum of all exponent vectors; the monomial content.
    ExpVec min_exponents() const;

    // Divides out the monomial content and rescales so the leading (grlex
    // largest) coefficient is 1. Canonical representative of a flatness
    // condition up to units g^k and rational scale. Zero stays zero.
    LaurentPoly monic_primitive() const;

    std::string str(const std::function<std::string(int)>& var_name) const;
    std::string str() const; // variables named g1..gn

private:
    int nvars_;
    TermMap terms_;

    void add_term(const ExpVec& e, const Rational& c);
    void check_compatible(const LaurentPoly& o) const;
};

// Expression parser for Laurent polynomials: rationals, variables g1..gn,
// + - * / ^ and parentheses. '/' only by monomial denominators. Used for
// catalog relation right-hand sides and CLI input.
LaurentPoly parse_laurent(const std::string& text, int nvars);

} // namespace nilflat

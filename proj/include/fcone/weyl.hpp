#ifndef FCONE_WEYL_HPP
#define FCONE_WEYL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <vector>

#include "fcone/errors.hpp"

namespace fcone::weyl {

using Rational = boost::multiprecision::cpp_rational;
using Exponents = std::vector<unsigned>;

// Exact multivariate polynomial with rational coefficients. Zero
// coefficients are never stored; the term map is ordered by multi-index so
// equality of canonical forms is equality of maps.
class MultiPoly {
  public:
    explicit MultiPoly(unsigned nvars) : nvars_(nvars) {}

    static MultiPoly constant(unsigned nvars, const Rational& c);
    static MultiPoly variable(unsigned nvars, unsigned j); // x_j, 0-based
    static MultiPoly monomial(unsigned nvars, const Exponents& e,
                              const Rational& c);

    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned total_degree() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    MultiPoly operator-() const;
    bool operator==(const MultiPoly& o) const;

    MultiPoly derivative(unsigned j) const;
    MultiPoly pow(unsigned k) const;

    const std::map<Exponents, Rational>& terms() const { return terms_; }
    void add_term(const Exponents& e, const Rational& c);

  private:
    unsigned nvars_;
    std::map<Exponents, Rational> terms_;
};

// Signs (+1)^{n1} (-1)^{n2} of the quadratic form.
struct SignatureVec {
    std::vector<int> eps;
    unsigned n() const { return unsigned(eps.size()); }
    static SignatureVec split(unsigned n1, unsigned n2);
};

// Q(x) = sum eps_j x_j^2
MultiPoly quadratic_form(const SignatureVec& sig);

// Element of the Weyl algebra in normal form: sum of coeff(x) * d^alpha
// with all derivatives moved to the right.
class DiffOp {
  public:
    explicit DiffOp(unsigned nvars) : nvars_(nvars) {}

    static DiffOp identity(unsigned nvars);
    static DiffOp partial(unsigned nvars, unsigned j);
    static DiffOp mul_by(const MultiPoly& p);

    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }

    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const;
    DiffOp operator*(const DiffOp& o) const; // composition, canonicalized
    DiffOp operator*(const Rational& c) const;
    DiffOp operator-() const;
    bool operator==(const DiffOp& o) const;

    MultiPoly apply(const MultiPoly& u) const;

    const std::map<Exponents, MultiPoly>& terms() const { return terms_; }
    void add_term(const Exponents& deriv, const MultiPoly& coeff);

  private:
    unsigned nvars_;
    std::map<Exponents, MultiPoly> terms_;
};

DiffOp euler_operator(unsigned nvars);      // E = sum x_i d_i
DiffOp box_operator(const SignatureVec&);   // sum eps_j d_j^2

// P_j(b) = eps_j x_j box - (2E + n - 2b) d_j, j 0-based.
DiffOp build_pjb(unsigned j, const Rational& b, const SignatureVec& sig);

DiffOp commutator(const DiffOp& A, const DiffOp& B);

// sum_j eps_j P_j(1)^2 - Q box^2; contract: the zero operator.
DiffOp check_sum_squares(const SignatureVec& sig);

// P_j(b)(u Q^lambda) - (P_j(b-2 lambda) u) Q^lambda
//   + 4 lambda (lambda - b) eps_j x_j u Q^{lambda-1}; contract: zero.
MultiPoly check_key_identity(unsigned j, const Rational& b, unsigned lambda,
                             const MultiPoly& u, const SignatureVec& sig);

// X_{ij} = eps_i eps_j x_i d_j - x_j d_i.
DiffOp xij_field(unsigned i, unsigned j, const SignatureVec& sig);

// [P_i, x_j] - (factor X_{ij} - delta_ij (2E + n - 2)).
DiffOp bracket_px_residual(unsigned i, unsigned j, const SignatureVec& sig,
                           unsigned factor);

// Which factor in {1, 2} makes bracket_px_residual vanish for all i != j.
unsigned adjudicate_bracket_factor(const SignatureVec& sig);

} // namespace fcone::weyl

#endif

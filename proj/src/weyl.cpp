#include "fcone/weyl.hpp"

namespace fcone::weyl {

namespace {

Rational binom(unsigned n, unsigned k) {
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
    return r;
}

void check_arity(unsigned a, unsigned b) {
    if (a != b) throw ArityMismatch("weyl: nvars mismatch");
}

} // namespace

MultiPoly MultiPoly::constant(unsigned nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(unsigned nvars, unsigned j) {
    if (j >= nvars) throw IndexOutOfRange("MultiPoly::variable");
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e[j] = 1;
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::monomial(unsigned nvars, const Exponents& e,
                              const Rational& c) {
    if (e.size() != nvars) throw ArityMismatch("MultiPoly::monomial");
    MultiPoly p(nvars);
    p.add_term(e, c);
    return p;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned s = 0;
        for (unsigned v : e) s += v;
        d = std::max(d, s);
    }
    return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_arity(nvars_, o.nvars_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_arity(nvars_, o.nvars_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_arity(nvars_, o.nvars_);
    MultiPoly r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e = e1;
            for (unsigned v = 0; v < nvars_; ++v) e[v] += e2[v];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, cc] : terms_) r.add_term(e, cc * c);
    return r;
}

MultiPoly MultiPoly::operator-() const { return *this * Rational(-1); }

bool MultiPoly::operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::derivative(unsigned j) const {
    if (j >= nvars_) throw IndexOutOfRange("MultiPoly::derivative");
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[j] == 0) continue;
        Exponents d = e;
        d[j] -= 1;
        r.add_term(d, c * e[j]);
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly r = constant(nvars_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

SignatureVec SignatureVec::split(unsigned n1, unsigned n2) {
    SignatureVec s;
    s.eps.assign(n1, 1);
    s.eps.insert(s.eps.end(), n2, -1);
    return s;
}

MultiPoly quadratic_form(const SignatureVec& sig) {
    const unsigned n = sig.n();
    MultiPoly q(n);
    for (unsigned j = 0; j < n; ++j) {
        Exponents e(n, 0);
        e[j] = 2;
        q.add_term(e, sig.eps[j]);
    }
    return q;
}

DiffOp DiffOp::identity(unsigned nvars) {
    DiffOp d(nvars);
    d.add_term(Exponents(nvars, 0), MultiPoly::constant(nvars, 1));
    return d;
}

DiffOp DiffOp::partial(unsigned nvars, unsigned j) {
    if (j >= nvars) throw IndexOutOfRange("DiffOp::partial");
    DiffOp d(nvars);
    Exponents e(nvars, 0);
    e[j] = 1;
    d.add_term(e, MultiPoly::constant(nvars, 1));
    return d;
}

DiffOp DiffOp::mul_by(const MultiPoly& p) {
    DiffOp d(p.nvars());
    d.add_term(Exponents(p.nvars(), 0), p);
    return d;
}

void DiffOp::add_term(const Exponents& deriv, const MultiPoly& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(deriv);
    if (it == terms_.end()) {
        terms_.emplace(deriv, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    check_arity(nvars_, o.nvars_);
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
    check_arity(nvars_, o.nvars_);
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
    DiffOp r = *this;
    r += o;
    return r;
}

DiffOp DiffOp::operator-(const DiffOp& o) const {
    DiffOp r = *this;
    r -= o;
    return r;
}

DiffOp DiffOp::operator*(const Rational& c) const {
    DiffOp r(nvars_);
    if (c == 0) return r;
    for (const auto& [d, p] : terms_) r.add_term(d, p * c);
    return r;
}

DiffOp DiffOp::operator-() const { return *this * Rational(-1); }

bool DiffOp::operator==(const DiffOp& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

// Composition (c d^alpha)(e d^beta): move d^alpha through e by Leibniz,
//   d^alpha (e g) = sum_{gamma <= alpha} C(alpha, gamma)
//                   (d^{alpha-gamma} e) d^gamma g.
DiffOp DiffOp::operator*(const DiffOp& o) const {
    check_arity(nvars_, o.nvars_);
    DiffOp r(nvars_);
    for (const auto& [alpha, c] : terms_) {
        for (const auto& [beta, e] : o.terms_) {
            // enumerate gamma <= alpha componentwise
            Exponents gamma(nvars_, 0);
            while (true) {
                // coefficient polynomial: c * prod binom * d^{alpha-gamma} e
                MultiPoly de = e;
                Rational mult = 1;
                bool vanished = false;
                for (unsigned v = 0; v < nvars_ && !vanished; ++v) {
                    mult *= binom(alpha[v], gamma[v]);
                    for (unsigned k = gamma[v]; k < alpha[v]; ++k) {
                        de = de.derivative(v);
                        if (de.is_zero()) {
                            vanished = true;
                            break;
                        }
                    }
                }
                if (!vanished && mult != 0) {
                    Exponents dtot = gamma;
                    for (unsigned v = 0; v < nvars_; ++v) dtot[v] += beta[v];
                    r.add_term(dtot, (c * de) * mult);
                }
                // next gamma in the box [0, alpha]
                unsigned v = 0;
                for (; v < nvars_; ++v) {
                    if (gamma[v] < alpha[v]) {
                        ++gamma[v];
                        break;
                    }
                    gamma[v] = 0;
                }
                if (v == nvars_) break;
            }
        }
    }
    return r;
}

MultiPoly DiffOp::apply(const MultiPoly& u) const {
    check_arity(nvars_, u.nvars());
    MultiPoly r(nvars_);
    for (const auto& [deriv, coeff] : terms_) {
        MultiPoly du = u;
        bool vanished = false;
        for (unsigned v = 0; v < nvars_ && !vanished; ++v)
            for (unsigned k = 0; k < deriv[v]; ++k) {
                du = du.derivative(v);
                if (du.is_zero()) {
                    vanished = true;
                    break;
                }
            }
        if (!vanished) r += coeff * du;
    }
    return r;
}

DiffOp euler_operator(unsigned nvars) {
    DiffOp e(nvars);
    for (unsigned j = 0; j < nvars; ++j)
        e += DiffOp::mul_by(MultiPoly::variable(nvars, j)) *
             DiffOp::partial(nvars, j);
    return e;
}

DiffOp box_operator(const SignatureVec& sig) {
    const unsigned n = sig.n();
    DiffOp b(n);
    for (unsigned j = 0; j < n; ++j) {
        Exponents e(n, 0);
        e[j] = 2;
        b.add_term(e, MultiPoly::constant(n, sig.eps[j]));
    }
    return b;
}

DiffOp build_pjb(unsigned j, const Rational& b, const SignatureVec& sig) {
    const unsigned n = sig.n();
    if (j >= n) throw IndexOutOfRange("build_pjb");
    DiffOp xbox = DiffOp::mul_by(MultiPoly::variable(n, j) *
                                 Rational(sig.eps[j])) *
                  box_operator(sig);
    DiffOp scale = euler_operator(n) * Rational(2) +
                   DiffOp::identity(n) * (Rational(n) - 2 * b);
    return xbox - scale * DiffOp::partial(n, j);
}

DiffOp commutator(const DiffOp& A, const DiffOp& B) { return A * B - B * A; }

DiffOp check_sum_squares(const SignatureVec& sig) {
    const unsigned n = sig.n();
    DiffOp sum(n);
    for (unsigned j = 0; j < n; ++j) {
        DiffOp pj = build_pjb(j, 1, sig);
        sum += (pj * pj) * Rational(sig.eps[j]);
    }
    DiffOp box = box_operator(sig);
    return sum - DiffOp::mul_by(quadratic_form(sig)) * (box * box);
}

MultiPoly check_key_identity(unsigned j, const Rational& b, unsigned lambda,
                             const MultiPoly& u, const SignatureVec& sig) {
    if (lambda < 1) throw ParameterError("check_key_identity: lambda >= 1");
    const unsigned n = sig.n();
    const MultiPoly q = quadratic_form(sig);
    const MultiPoly qs = q.pow(lambda);
    const MultiPoly lhs = build_pjb(j, b, sig).apply(u * qs);
    const Rational lam(lambda);
    MultiPoly rhs = build_pjb(j, b - 2 * lam, sig).apply(u) * qs;
    rhs -= (MultiPoly::variable(n, j) * u * q.pow(lambda - 1)) *
           (4 * lam * (lam - b) * Rational(sig.eps[j]));
    return lhs - rhs;
}

DiffOp xij_field(unsigned i, unsigned j, const SignatureVec& sig) {
    const unsigned n = sig.n();
    DiffOp x(n);
    x += DiffOp::mul_by(MultiPoly::variable(n, i) *
                        Rational(sig.eps[i] * sig.eps[j])) *
         DiffOp::partial(n, j);
    x -= DiffOp::mul_by(MultiPoly::variable(n, j)) * DiffOp::partial(n, i);
    return x;
}

DiffOp bracket_px_residual(unsigned i, unsigned j, const SignatureVec& sig,
                           unsigned factor) {
    const unsigned n = sig.n();
    DiffOp pi = build_pjb(i, 1, sig);
    DiffOp xj = DiffOp::mul_by(MultiPoly::variable(n, j));
    DiffOp closed = xij_field(i, j, sig) * Rational(factor);
    if (i == j)
        closed -= euler_operator(n) * Rational(2) +
                  DiffOp::identity(n) * Rational(int(n) - 2);
    return commutator(pi, xj) - closed;
}

unsigned adjudicate_bracket_factor(const SignatureVec& sig) {
    const unsigned n = sig.n();
    for (unsigned factor : {1u, 2u}) {
        bool ok = true;
        for (unsigned i = 0; i < n && ok; ++i)
            for (unsigned j = 0; j < n && ok; ++j)
                if (i != j && !bracket_px_residual(i, j, sig, factor).is_zero())
                    ok = false;
        if (ok) return factor;
    }
    throw Error("adjudicate_bracket_factor: neither normalization is exact");
}

} // namespace fcone::weyl

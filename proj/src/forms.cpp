#include "edim/forms.hpp"

#include "edim/error.hpp"
#include "edim/linalg.hpp"

#include <random>
#include <utility>

namespace edim {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = QuaternionElement::scalar(1);
    return m;
}

QMatrix QMatrix::diagonal(const std::vector<QuaternionElement>& entries) {
    QMatrix m(entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) m(k, k) = entries[k];
    return m;
}

QMatrix QMatrix::unit(std::size_t n, std::size_t k, std::size_t l, const QuaternionElement& x) {
    QMatrix m(n);
    m(k, l) = x;
    return m;
}

bool QMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c)
            if (r != c && !(*this)(r, c).is_zero()) return false;
    return true;
}

bool QMatrix::is_zero() const {
    for (auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

QMatrix QMatrix::conj_transpose() const {
    QMatrix m(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) m(c, r) = canonical_involution((*this)(r, c));
    return m;
}

QMatrix QMatrix::scaled(const Rat& s) const {
    QMatrix m = *this;
    for (auto& x : m.data_) x *= s;
    return m;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    QMatrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
    return m;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    QMatrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
    return m;
}

QMatrix multiply(const QuaternionAlgebra& Q, const QMatrix& a, const QMatrix& b) {
    std::size_t n = a.size();
    QMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t t = 0; t < n; ++t) {
            const auto& x = a(r, t);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) {
                const auto& y = b(t, c);
                if (!y.is_zero()) m(r, c) += Q.mul(x, y);
            }
        }
    return m;
}

const char* involution_type_name(InvolutionType t) {
    return t == InvolutionType::Orthogonal ? "ORTHOGONAL" : "SYMPLECTIC";
}

InvolutionType involution_type_from_sym_dim(std::size_t sym_dim, std::size_t degree) {
    if (sym_dim == degree * (degree + 1) / 2) return InvolutionType::Orthogonal;
    if (sym_dim == degree * (degree - 1) / 2) return InvolutionType::Symplectic;
    throw AlgebraError(ErrorCode::TypeUndetermined,
                       "dim Sym = " + std::to_string(sym_dim) + " at degree " + std::to_string(degree));
}

bool is_invertible(const QuaternionAlgebra& Q, const QMatrix& m) {
    std::size_t n = m.size();
    RatMatrix lin(4 * n, 4 * n);
    for (std::size_t c = 0; c < n; ++c)
        for (int b = 0; b < 4; ++b) {
            QuaternionElement e;
            e.c[b] = 1;
            for (std::size_t r = 0; r < n; ++r) {
                if (m(r, c).is_zero()) continue;
                auto y = Q.mul(m(r, c), e);
                for (int t = 0; t < 4; ++t) lin(4 * r + t, 4 * c + b) = y.c[t];
            }
        }
    return rank(lin) == 4 * n;
}

HermitianForm::HermitianForm(QuaternionAlgebra Q, int epsilon, QMatrix gram, bool)
    : Q_(std::move(Q)), epsilon_(epsilon), gram_(std::move(gram)) {
    if (gram_.is_diagonal())
        for (std::size_t k = 0; k < gram_.size(); ++k) diag_.push_back(gram_(k, k));
}

HermitianForm::HermitianForm(QuaternionAlgebra Q, int epsilon, QMatrix gram)
    : HermitianForm(std::move(Q), epsilon, std::move(gram), true) {
    if (epsilon_ != 1 && epsilon_ != -1) throw AlgebraError(ErrorCode::InvalidInput, "epsilon must be +1 or -1");
    if (gram_.size() == 0) throw AlgebraError(ErrorCode::InvalidInput, "empty gram matrix");
    if (!(gram_.conj_transpose() == gram_.scaled(Rat(epsilon_))))
        throw AlgebraError(ErrorCode::InvalidInput, "gram matrix is not epsilon-hermitian");
    bool ok = true;
    if (is_diagonal()) {
        for (auto& d : diag_) ok = ok && Q_.is_invertible(d);
    } else {
        ok = edim::is_invertible(Q_, gram_);
    }
    if (!ok) throw AlgebraError(ErrorCode::DegenerateForm, "gram matrix is singular");
}

HermitianForm HermitianForm::diagonal(const QuaternionAlgebra& Q, int epsilon,
                                      const std::vector<QuaternionElement>& d) {
    return HermitianForm(Q, epsilon, QMatrix::diagonal(d));
}

HermitianForm HermitianForm::scaled(const Rat& s) const {
    if (s.is_zero()) throw AlgebraError(ErrorCode::DegenerateForm, "scaling by zero");
    return HermitianForm(Q_, epsilon_, gram_.scaled(s), true);
}

HermitianForm HermitianForm::congruent(const QMatrix& P) const {
    QMatrix g = multiply(Q_, multiply(Q_, P.conj_transpose(), gram_), P);
    return HermitianForm(Q_, epsilon_, std::move(g));
}

namespace {

// Working state for congruence steps on gamma(P)^T G P.
struct Congruence {
    const QuaternionAlgebra& Q;
    QMatrix G, P, P_inv;

    std::size_t n() const { return G.size(); }

    void swap(std::size_t a, std::size_t b) {
        for (std::size_t r = 0; r < n(); ++r) {
            std::swap(G(r, a), G(r, b));
            std::swap(P(r, a), P(r, b));
        }
        for (std::size_t c = 0; c < n(); ++c) {
            std::swap(G(a, c), G(b, c));
            std::swap(P_inv(a, c), P_inv(b, c));
        }
    }

    // e_a <- e_a + e_b lambda
    void add(std::size_t a, std::size_t b, const QuaternionElement& lambda) {
        if (lambda.is_zero()) return;
        auto lc = canonical_involution(lambda);
        for (std::size_t r = 0; r < n(); ++r) {
            if (!G(r, b).is_zero()) G(r, a) += Q.mul(G(r, b), lambda);
            if (!P(r, b).is_zero()) P(r, a) += Q.mul(P(r, b), lambda);
        }
        for (std::size_t c = 0; c < n(); ++c) {
            if (!G(b, c).is_zero()) G(a, c) += Q.mul(lc, G(b, c));
            if (!P_inv(a, c).is_zero()) P_inv(b, c) -= Q.mul(lambda, P_inv(a, c));
        }
    }

    QuaternionElement pivot_after(std::size_t k, std::size_t l, const QuaternionElement& lambda) const {
        auto lc = canonical_involution(lambda);
        return G(k, k) + Q.mul(G(k, l), lambda) + Q.mul(lc, G(l, k)) + Q.mul(lc, Q.mul(G(l, l), lambda));
    }
};

}  // namespace

Diagonalization diagonalize_form(const HermitianForm& h, std::uint64_t seed) {
    const auto& Q = h.algebra();
    std::size_t n = h.size();
    Congruence st{Q, h.gram(), QMatrix::identity(n), QMatrix::identity(n)};
    std::mt19937_64 rng(seed);
    int random_repairs = 0;

    const std::vector<QuaternionElement> sweep = {
        QuaternionElement::scalar(1), Q.i(), Q.j(), Q.k(), QuaternionElement{{1, 1, 0, 0}},
        QuaternionElement{{1, 0, 1, 0}}};

    for (std::size_t k = 0; k < n; ++k) {
        bool row_clear = true;
        for (std::size_t l = k + 1; l < n; ++l) row_clear = row_clear && st.G(k, l).is_zero();
        if (row_clear && Q.is_invertible(st.G(k, k))) continue;

        if (!Q.is_invertible(st.G(k, k))) {
            bool fixed = false;
            for (std::size_t l = k + 1; l < n && !fixed; ++l)
                if (Q.is_invertible(st.G(l, l))) {
                    st.swap(k, l);
                    fixed = true;
                }
            for (std::size_t l = k + 1; l < n && !fixed; ++l)
                for (auto& lambda : sweep)
                    if (Q.is_invertible(st.pivot_after(k, l, lambda))) {
                        st.add(k, l, lambda);
                        fixed = true;
                        break;
                    }
            for (int attempt = 0; attempt < 256 && !fixed && k + 1 < n; ++attempt) {
                std::size_t l = k + 1 + rng() % (n - k - 1);
                QuaternionElement lambda;
                for (auto& x : lambda.c) x = Rat(long(rng() % 7) - 3);
                ++random_repairs;
                if (Q.is_invertible(st.pivot_after(k, l, lambda))) {
                    st.add(k, l, lambda);
                    fixed = true;
                }
            }
            if (!fixed)
                throw AlgebraError(ErrorCode::ZeroDiagonalUnrepairable,
                                   "no invertible pivot at position " + std::to_string(k) + ", seed " +
                                       std::to_string(seed));
        }

        auto inv = Q.inverse(st.G(k, k));
        for (std::size_t l = k + 1; l < n; ++l) {
            if (st.G(k, l).is_zero()) continue;
            st.add(l, k, -Q.mul(inv, st.G(k, l)));
        }
    }
    HermitianForm diag(Q, h.epsilon(), st.G);
    return Diagonalization{std::move(diag), std::move(st.P), std::move(st.P_inv), seed, random_repairs};
}

AdjointInvolution::AdjointInvolution(HermitianForm h) : h_(std::move(h)) {
    const auto& Q = h_.algebra();
    if (h_.is_diagonal()) {
        std::vector<QuaternionElement> inv;
        for (auto& d : h_.entries()) inv.push_back(Q.inverse(d));
        gram_inv_ = QMatrix::diagonal(inv);
        return;
    }
    // G = gamma(P^{-1})^T D P^{-1}, so G^{-1} = P D^{-1} gamma(P)^T.
    auto dz = diagonalize_form(h_);
    std::vector<QuaternionElement> inv;
    for (auto& d : dz.form.entries()) inv.push_back(Q.inverse(d));
    gram_inv_ = multiply(Q, multiply(Q, dz.P, QMatrix::diagonal(inv)), dz.P.conj_transpose());
}

QMatrix AdjointInvolution::apply(const QMatrix& m) const {
    const auto& Q = h_.algebra();
    return multiply(Q, multiply(Q, gram_inv_, m.conj_transpose()), h_.gram());
}

QMatrix adjoint_apply(const AdjointInvolution& sigma, const QMatrix& m) { return sigma.apply(m); }

std::size_t adjoint_sym_dim(const HermitianForm& h) {
    if (!h.is_diagonal()) return adjoint_sym_dim(diagonalize_form(h).form);
    // sigma maps the (k,l) slot to the (l,k) slot: each off-diagonal pair
    // contributes 4, each diagonal slot the fixed space of
    // x -> d^{-1} gamma(x) d.
    const auto& Q = h.algebra();
    std::size_t n = h.size();
    std::size_t dim = 4 * n * (n - 1) / 2;
    for (auto& d : h.entries()) {
        auto dinv = Q.inverse(d);
        RatMatrix m(4, 4);
        for (int b = 0; b < 4; ++b) {
            QuaternionElement e;
            e.c[b] = 1;
            auto y = Q.mul(dinv, Q.mul(canonical_involution(e), d)) - e;
            for (int t = 0; t < 4; ++t) m(t, b) = y.c[t];
        }
        dim += 4 - rank(m);
    }
    return dim;
}

InvolutionType involution_type(const HermitianForm& h) {
    return involution_type_from_sym_dim(adjoint_sym_dim(h), 2 * h.size());
}

SquareClass disc_skew(const HermitianForm& h, const FactorBudget& budget) {
    if (h.epsilon() != -1) throw AlgebraError(ErrorCode::InvalidInput, "disc_skew needs a skew-hermitian form");
    if (!h.is_diagonal()) throw AlgebraError(ErrorCode::InvalidInput, "disc_skew needs a diagonal form");
    if (h.size() % 2 == 0) throw AlgebraError(ErrorCode::InvalidInput, "disc_skew needs odd size");
    Rat prod(1);
    for (auto& q : h.entries()) {
        Rat nrd = h.algebra().nrd(q);
        if (nrd.is_zero()) throw AlgebraError(ErrorCode::IsotropicEntry, "diagonal entry has zero norm");
        prod *= nrd;
    }
    return square_class(prod, budget);
}

}  // namespace edim

#include "edim/quadratic_field.hpp"

#include "edim/error.hpp"
#include "edim/field.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace edim {

std::string QuadraticPlace::str() const {
    std::string base = real ? std::string("inf") : p.get_str();
    if (branch > 0) return base + "+";
    if (branch < 0) return base + "-";
    return base;
}

std::strong_ordering operator<=>(const QuadraticPlace& a, const QuadraticPlace& b) {
    if (a.real != b.real) return a.real ? std::strong_ordering::greater : std::strong_ordering::less;
    if (int c = cmp(a.p, b.p); c != 0) return c <=> 0;
    return b.branch <=> a.branch;
}

Int sqrt_mod_prime(const Int& n_in, const Int& p) {
    Int n = n_in % p;
    if (n < 0) n += p;
    if (n == 0) return 0;
    if (mpz_legendre(n.get_mpz_t(), p.get_mpz_t()) != 1) return -1;
    // Tonelli-Shanks.
    Int q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    Int c, r, t, b;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    Int e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), n.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        Int tt = t;
        while (tt != 1) {
            tt = (tt * tt) % p;
            ++i;
        }
        b = c;
        for (unsigned long k = 0; k + i + 1 < m; ++k) b = (b * b) % p;
        r = (r * b) % p;
        c = (b * b) % p;
        t = (t * c) % p;
        m = i;
    }
    return r;
}

namespace {

long rat_valuation(const Rat& x, const Int& p) {
    return static_cast<long>(valuation(x.num(), p)) - static_cast<long>(valuation(x.den(), p));
}

long parity(long v) { return ((v % 2) + 2) % 2; }

// r mod m for a rational whose denominator is prime to m.
Int rat_mod(const Rat& r, const Int& m) {
    Int inv;
    Int den = r.den();
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::logic_error("rat_mod: denominator not invertible");
    Int out = (r.num() * inv) % m;
    if (out < 0) out += m;
    return out;
}

Int power(const Int& p, unsigned long k) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), k);
    return out;
}

// A nonzero element of Q_p written as p^v * unit, the unit known modulo p^3
// (enough for both the odd and the dyadic symbol formulas).
struct LocalValue {
    long v;
    Int unit;
};

int qp_symbol(const LocalValue& a, const LocalValue& b, const Int& p) {
    if (p == 2) {
        unsigned long um = mpz_fdiv_ui(a.unit.get_mpz_t(), 8);
        unsigned long wm = mpz_fdiv_ui(b.unit.get_mpz_t(), 8);
        unsigned long e = ((um - 1) / 2) * ((wm - 1) / 2) + parity(a.v) * (((wm * wm - 1) / 8) % 2) +
                          parity(b.v) * (((um * um - 1) / 8) % 2);
        return e % 2 == 0 ? 1 : -1;
    }
    int r = 1;
    if (parity(a.v) * parity(b.v) == 1 && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) r = -r;
    if (parity(b.v) == 1) r *= mpz_legendre(a.unit.get_mpz_t(), p.get_mpz_t());
    if (parity(a.v) == 1) r *= mpz_legendre(b.unit.get_mpz_t(), p.get_mpz_t());
    return r;
}

// p-adic root of d modulo p^k for a prime p that splits in Q(sqrt d).
Int split_root(const Int& d, const Int& p, unsigned long k, int branch) {
    Int modulus = power(p, k);
    Int s;
    if (p == 2) {
        s = 1;
        for (unsigned long j = 3; j <= k + 1; ++j) {
            Int m = power(Int(2), j + 1);
            Int r = (s * s - d) % m;
            if (r != 0) s += power(Int(2), j - 1);
        }
    } else {
        s = sqrt_mod_prime(d, p);
        if (s < 0) throw std::logic_error("split_root: non-residue");
        if (s > (p - 1) / 2) s = p - s;
        Int mod = p;
        while (mod < modulus) {
            Int next = mod * mod;
            if (next > modulus) next = modulus;
            Int two_s = (2 * s) % next, inv;
            mpz_invert(inv.get_mpz_t(), two_s.get_mpz_t(), next.get_mpz_t());
            s = (s - (s * s - d) * inv) % next;
            if (s < 0) s += next;
            mod = next;
        }
    }
    s %= modulus;
    if (branch < 0) s = modulus - s;
    if (s < 0) s += modulus;
    return s;
}

LocalValue embed_split(const EtaleElement& u, const Int& d, const Int& p, int branch) {
    Int den;
    Int xd = u.x.den(), yd = u.y.den();
    mpz_lcm(den.get_mpz_t(), xd.get_mpz_t(), yd.get_mpz_t());
    Int X = u.x.num() * (den / xd);
    Int Y = u.y.num() * (den / yd);
    Int norm = X * X - d * Y * Y;
    if (norm == 0) throw AlgebraError(ErrorCode::NotInvertible, "zero element in local symbol");
    unsigned long extra = 3;
    unsigned long k = valuation(norm, p) + extra + 1;
    Int modulus = power(p, k);
    Int s = split_root(d, p, k, branch);
    Int t = (X + Y * s) % modulus;
    if (t < 0) t += modulus;
    if (t == 0) throw std::logic_error("embed_split: precision too low");
    long vt = static_cast<long>(valuation(t, p));
    Int tu = t / power(p, static_cast<unsigned long>(vt));
    long vden = static_cast<long>(valuation(den, p));
    Int den_unit = den / power(p, static_cast<unsigned long>(vden));
    Int m = power(p, extra);
    Int inv;
    Int du = den_unit % m;
    mpz_invert(inv.get_mpz_t(), du.get_mpz_t(), m.get_mpz_t());
    Int unit = (tu * inv) % m;
    if (unit < 0) unit += m;
    return {vt - vden, unit};
}

// Valuation and residue norm for an odd inert prime.
std::pair<long, int> inert_data(const EtaleElement& u, const Int& d, const Int& p) {
    long v = 0;
    bool first = true;
    for (const Rat* c : {&u.x, &u.y}) {
        if (c->is_zero()) continue;
        long cv = rat_valuation(*c, p);
        if (first || cv < v) v = cv;
        first = false;
    }
    if (first) throw AlgebraError(ErrorCode::NotInvertible, "zero element in local symbol");
    Rat scale = pow(Rat(p), -v);
    Rat x = u.x * scale, y = u.y * scale;
    Int n = (rat_mod(x, p) * rat_mod(x, p) - d * rat_mod(y, p) * rat_mod(y, p)) % p;
    if (n < 0) n += p;
    int chi = mpz_legendre(n.get_mpz_t(), p.get_mpz_t());
    if (chi == 0) throw std::logic_error("inert_data: residue norm vanished");
    return {v, chi};
}

// Valuation (in the uniformizer sqrt d) and residue character for an odd
// ramified prime.
std::pair<long, int> ramified_data(const EtaleElement& u, const Int& d, const Int& p) {
    long v = 0;
    bool first = true;
    if (!u.x.is_zero()) {
        v = 2 * rat_valuation(u.x, p);
        first = false;
    }
    if (!u.y.is_zero()) {
        long cv = 2 * rat_valuation(u.y, p) + 1;
        if (first || cv < v) v = cv;
        first = false;
    }
    if (first) throw AlgebraError(ErrorCode::NotInvertible, "zero element in local symbol");
    long q = (v >= 0) ? v / 2 : -((-v + 1) / 2);
    long r = v - 2 * q;
    Rat scale = pow(Rat(d), -q);
    Rat x = u.x * scale, y = u.y * scale;
    if (r == 1) {
        Rat nx = y, ny = x / Rat(d);
        x = nx;
        y = ny;
    }
    Int res = rat_mod(x, p);
    int chi = mpz_legendre(res.get_mpz_t(), p.get_mpz_t());
    if (chi == 0) throw std::logic_error("ramified_data: residue vanished");
    return {v, chi};
}

int sign_at_real(const EtaleElement& u, const Int& d, int branch) {
    int sx = u.x.sign();
    int sy = u.y.sign() * branch;
    if (sx == 0) return sy;
    if (sy == 0 || sx == sy) return sx;
    Rat lhs = u.x * u.x, rhs = u.y * u.y * Rat(d);
    return lhs > rhs ? sx : sy;
}

}  // namespace

QuadraticField::QuadraticField(Int d) : d_(std::move(d)) {
    if (d_ == 0 || d_ == 1) throw AlgebraError(ErrorCode::InvalidInput, "quadratic field needs d != 0, 1");
}

QuadraticField QuadraticField::from_parameter(const Rat& e, Rat* scale, const FactorBudget& budget) {
    SquareClass c = square_class(e, budget);
    if (c.is_trivial()) throw AlgebraError(ErrorCode::InvalidInput, "parameter is a square; algebra is split");
    auto r = rational_sqrt(e / Rat(c.rep()));
    if (!r) throw std::logic_error("from_parameter: square class inconsistent");
    if (scale) *scale = *r;
    return QuadraticField(c.rep());
}

std::vector<QuadraticPlace> QuadraticField::places_over(const Int& p) const {
    if (p == 0) {
        if (d_ < 0) return {};
        return {{true, Int(0), 1}, {true, Int(0), -1}};
    }
    bool split;
    if (p == 2) {
        split = mpz_fdiv_ui(d_.get_mpz_t(), 8) == 1;
    } else {
        split = mpz_divisible_p(d_.get_mpz_t(), p.get_mpz_t()) == 0 &&
                mpz_legendre(d_.get_mpz_t(), p.get_mpz_t()) == 1;
    }
    if (split) return {{false, p, 1}, {false, p, -1}};
    return {{false, p, 0}};
}

int QuadraticField::hilbert_symbol(const EtaleElement& alpha, const EtaleElement& beta, const QuadraticPlace& v,
                                   const FactorBudget& budget) const {
    if (v.real) {
        if (d_ < 0) return 1;
        return (sign_at_real(alpha, d_, v.branch) < 0 && sign_at_real(beta, d_, v.branch) < 0) ? -1 : 1;
    }
    const Int& p = v.p;
    if (v.branch != 0) return qp_symbol(embed_split(alpha, d_, p, v.branch), embed_split(beta, d_, p, v.branch), p);
    if (p == 2) {
        auto ram = ramification(alpha, beta, budget);
        for (auto& w : ram)
            if (w == v) return -1;
        return 1;
    }
    if (mpz_divisible_p(d_.get_mpz_t(), p.get_mpz_t())) {
        auto [va, ca] = ramified_data(alpha, d_, p);
        auto [vb, cb] = ramified_data(beta, d_, p);
        int r = 1;
        if (parity(va) * parity(vb) == 1 && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) r = -r;
        if (parity(vb) == 1) r *= ca;
        if (parity(va) == 1) r *= cb;
        return r;
    }
    auto [va, ca] = inert_data(alpha, d_, p);
    auto [vb, cb] = inert_data(beta, d_, p);
    int r = 1;
    if (parity(vb) == 1) r *= ca;
    if (parity(va) == 1) r *= cb;
    return r;
}

std::vector<QuadraticPlace> QuadraticField::ramification(const EtaleElement& alpha, const EtaleElement& beta,
                                                         const FactorBudget& budget) const {
    auto norm = [&](const EtaleElement& u) { return u.x * u.x - Rat(d_) * u.y * u.y; };
    Rat na = norm(alpha), nb = norm(beta);
    if (na.is_zero() || nb.is_zero())
        throw AlgebraError(ErrorCode::NotInvertible, "quaternion symbol entries must be nonzero");

    std::set<Int> primes{Int(2)};
    auto collect = [&](const Int& n) {
        if (n == 0) return;
        for (auto& p : prime_divisors(n, budget)) primes.insert(p);
    };
    for (const Rat* r : std::initializer_list<const Rat*>{&alpha.x, &alpha.y, &beta.x, &beta.y, &na, &nb}) {
        collect(r->num());
        collect(r->den());
    }
    collect(d_);

    std::vector<QuadraticPlace> out;
    int product = 1;
    for (auto& w : places_over(Int(0))) {
        int s = hilbert_symbol(alpha, beta, w, budget);
        product *= s;
        if (s < 0) out.push_back(w);
    }
    std::vector<QuadraticPlace> dyadic = places_over(Int(2));
    for (auto& p : primes) {
        if (p == 2) continue;
        for (auto& w : places_over(p)) {
            int s = hilbert_symbol(alpha, beta, w, budget);
            product *= s;
            if (s < 0) out.push_back(w);
        }
    }
    if (dyadic.size() == 2) {
        for (auto& w : dyadic) {
            int s = hilbert_symbol(alpha, beta, w, budget);
            product *= s;
            if (s < 0) out.push_back(w);
        }
        if (product != 1) throw std::logic_error("quadratic Hilbert reciprocity violated");
    } else if (product < 0) {
        out.push_back(dyadic.front());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace edim

#pragma once

// Exact arithmetic in the cyclotomic field K = Q[v]/(phi_ell) and its
// integral subring Z[v]/(phi_ell), plus quantum integers, quantum binomials
// and the specialization v -> 1 onto Z/p.
//
// Elements are kept in canonical reduced form at all times: a coefficient
// vector of length deg(phi_ell) in ascending powers of zeta, so equality is
// plain coefficient comparison.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace smallq {

// ---------------------------------------------------------------------------
// Laurent polynomials over Z, canonical (no zero coefficients stored).

class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(mpz_class c, long e) {
        LaurentPoly p;
        if (c != 0) p.c_[e] = std::move(c);
        return p;
    }

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(1, 0); }

    // [r] = v^{r-1} + v^{r-3} + ... + v^{1-r} for r >= 0, and -[-r] for r < 0.
    static LaurentPoly qint(long r) {
        LaurentPoly p;
        long sign = 1;
        if (r < 0) {
            r = -r;
            sign = -1;
        }
        for (long k = 0; k < r; ++k) p.c_[r - 1 - 2 * k] = sign;
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    const std::map<long, mpz_class>& coeffs() const { return c_; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.c_) r.add_term(e, c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.c_) r.add_term(e, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : c_) r.c_[e] = -c;
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.c_ == b.c_;
    }

    // Exact quotient; throws if b does not divide *this in Z[v, v^-1].
    LaurentPoly divide_exact(const LaurentPoly& b) const {
        if (b.is_zero()) throw std::logic_error("LaurentPoly: division by zero");
        if (is_zero()) return LaurentPoly();
        // Shift both to ordinary polynomials and long-divide.
        long sa = c_.begin()->first, sb = b.c_.begin()->first;
        std::vector<mpz_class> num = dense_from(sa), den = b.dense_from(sb);
        const mpz_class& lead = den.back();
        if (lead != 1 && lead != -1)
            throw std::logic_error("LaurentPoly: non-unit leading coefficient");
        if (num.size() < den.size())
            throw std::logic_error("LaurentPoly: inexact division");
        std::vector<mpz_class> quo(num.size() - den.size() + 1);
        for (size_t k = quo.size(); k-- > 0;) {
            mpz_class q = num[k + den.size() - 1] * lead;  // lead^2 = 1
            quo[k] = q;
            if (q == 0) continue;
            for (size_t t = 0; t < den.size(); ++t) num[k + t] -= q * den[t];
        }
        for (const auto& c : num)
            if (c != 0) throw std::logic_error("LaurentPoly: inexact division");
        LaurentPoly r;
        for (size_t k = 0; k < quo.size(); ++k)
            if (quo[k] != 0) r.c_[static_cast<long>(k) + sa - sb] = quo[k];
        return r;
    }

private:
    void add_term(long e, const mpz_class& c) {
        if (c == 0) return;
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }

    // Coefficients of v^{-shift} * this as an ordinary polynomial.
    std::vector<mpz_class> dense_from(long shift) const {
        std::vector<mpz_class> d(c_.rbegin()->first - shift + 1);
        for (const auto& [e, c] : c_) d[e - shift] = c;
        return d;
    }

    std::map<long, mpz_class> c_;  // exponent -> coefficient
};

// ---------------------------------------------------------------------------
// The field context: phi_ell, reduction tables and powers of zeta.

namespace detail {

// Monic exact division of integer polynomials, used for phi_ell only.
inline std::vector<mpz_class> poly_divide_monic(std::vector<mpz_class> num,
                                                const std::vector<mpz_class>& den) {
    std::vector<mpz_class> quo(num.size() - den.size() + 1);
    for (size_t k = quo.size(); k-- > 0;) {
        mpz_class q = num[k + den.size() - 1];
        quo[k] = q;
        if (q == 0) continue;
        for (size_t t = 0; t < den.size(); ++t) num[k + t] -= q * den[t];
    }
    return quo;
}

inline std::vector<mpz_class> cyclotomic_poly(long n) {
    // v^n - 1 divided by phi_d for every proper divisor d of n.
    std::vector<mpz_class> f(n + 1);
    f[0] = -1;
    f[n] = 1;
    for (long d = 1; d < n; ++d)
        if (n % d == 0) f = poly_divide_monic(std::move(f), cyclotomic_poly(d));
    return f;
}

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace detail

class CycloField {
public:
    // Interned per ell; references stay valid for the program lifetime.
    static const CycloField& get(long ell) {
        static std::mutex mu;
        static std::map<long, std::unique_ptr<CycloField>> registry;
        std::lock_guard<std::mutex> lock(mu);
        auto it = registry.find(ell);
        if (it == registry.end())
            it = registry.emplace(ell, std::unique_ptr<CycloField>(new CycloField(ell))).first;
        return *it->second;
    }

    long ell() const { return ell_; }
    size_t degree() const { return deg_; }
    const std::vector<mpz_class>& phi() const { return phi_; }

    // zeta^k reduced, any integer k.
    const std::vector<mpq_class>& zeta_power(long k) const {
        return zpow_[((k % ell_) + ell_) % ell_];
    }

    CycloField(const CycloField&) = delete;
    CycloField& operator=(const CycloField&) = delete;

private:
    explicit CycloField(long ell) : ell_(ell) {
        if (ell < 3 || ell % 2 == 0)
            throw std::invalid_argument("CycloField: ell must be odd and >= 3");
        phi_ = detail::cyclotomic_poly(ell);
        deg_ = phi_.size() - 1;
        // zeta^k for k in [0, ell): repeated shift-and-reduce against the
        // monic phi (v^deg = -sum_{i<deg} phi_i v^i).
        zpow_.assign(ell_, std::vector<mpq_class>(deg_));
        zpow_[0][0] = 1;
        for (long k = 1; k < ell_; ++k) {
            const auto& prev = zpow_[k - 1];
            auto& cur = zpow_[k];
            mpq_class top = prev[deg_ - 1];
            for (size_t i = deg_ - 1; i > 0; --i) cur[i] = prev[i - 1];
            cur[0] = 0;
            if (top != 0)
                for (size_t i = 0; i < deg_; ++i) cur[i] -= top * phi_[i];
        }
    }

    long ell_;
    size_t deg_;
    std::vector<mpz_class> phi_;
    std::vector<std::vector<mpq_class>> zpow_;
};

// ---------------------------------------------------------------------------
// Field elements.

class CycloElem {
public:
    explicit CycloElem(const CycloField& F) : F_(&F), c_(F.degree()) {}

    CycloElem(const CycloField& F, long value) : CycloElem(F) { c_[0] = value; }

    CycloElem(const CycloField& F, std::vector<mpq_class> coeffs)
        : F_(&F), c_(std::move(coeffs)) {
        if (c_.size() != F.degree())
            throw std::invalid_argument("CycloElem: wrong coefficient count");
    }

    const CycloField& field() const { return *F_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    bool is_integral() const {
        for (const auto& x : c_)
            if (x.get_den() != 1) return false;
        return true;
    }

    CycloElem zero() const { return CycloElem(*F_); }
    CycloElem one() const { return CycloElem(*F_, 1); }

    friend CycloElem operator+(const CycloElem& a, const CycloElem& b) {
        a.check(b);
        CycloElem r = a;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }

    friend CycloElem operator-(const CycloElem& a, const CycloElem& b) {
        a.check(b);
        CycloElem r = a;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
        return r;
    }

    CycloElem operator-() const {
        CycloElem r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend CycloElem operator*(const CycloElem& a, const CycloElem& b) {
        a.check(b);
        const size_t d = a.c_.size();
        // Convolve, then fold degrees >= d with the zeta-power table.
        std::vector<mpq_class> conv(2 * d - 1);
        for (size_t i = 0; i < d; ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < d; ++j) {
                if (b.c_[j] == 0) continue;
                conv[i + j] += a.c_[i] * b.c_[j];
            }
        }
        CycloElem r(*a.F_);
        for (size_t i = 0; i < d; ++i) r.c_[i] = conv[i];
        for (size_t k = d; k < conv.size(); ++k) {
            if (conv[k] == 0) continue;
            const auto& zp = a.F_->zeta_power(static_cast<long>(k));
            for (size_t i = 0; i < d; ++i) r.c_[i] += conv[k] * zp[i];
        }
        return r;
    }

    CycloElem& operator+=(const CycloElem& b) { return *this = *this + b; }
    CycloElem& operator-=(const CycloElem& b) { return *this = *this - b; }
    CycloElem& operator*=(const CycloElem& b) { return *this = *this * b; }

    // Multiplicative inverse via extended Euclid in Q[v] against phi_ell.
    CycloElem inv() const {
        if (is_zero()) throw std::domain_error("division by zero");
        using Poly = std::vector<mpq_class>;
        auto deg = [](const Poly& p) {
            for (size_t i = p.size(); i-- > 0;)
                if (p[i] != 0) return static_cast<long>(i);
            return -1L;
        };
        Poly r0(F_->phi().size());
        for (size_t i = 0; i < r0.size(); ++i) r0[i] = F_->phi()[i];
        Poly r1(c_.begin(), c_.end());
        Poly s0{mpq_class(0)}, s1{mpq_class(1)};
        while (true) {
            long d1 = deg(r1);
            if (d1 <= 0) break;  // r1 constant: gcd reached (phi irreducible)
            long d0 = deg(r0);
            if (d0 < d1) {
                std::swap(r0, r1);
                std::swap(s0, s1);
                continue;
            }
            mpq_class q = r0[d0] / r1[d1];
            long shift = d0 - d1;
            for (long i = 0; i <= d1; ++i) r0[i + shift] -= q * r1[i];
            if (s0.size() < s1.size() + shift) s0.resize(s1.size() + shift);
            for (size_t i = 0; i < s1.size(); ++i) s0[i + shift] -= q * s1[i];
        }
        // r1 = const c, and s1 * this = c mod phi  =>  inverse = s1 / c.
        mpq_class c = r1[0];
        CycloElem out(*F_);
        for (size_t i = 0; i < s1.size(); ++i) {
            if (s1[i] == 0) continue;
            mpq_class q = s1[i] / c;
            const auto& zp = F_->zeta_power(static_cast<long>(i));
            std::vector<mpq_class> tc(zp.begin(), zp.end());
            for (auto& x : tc) x *= q;
            out += CycloElem(*F_, std::move(tc));
        }
        return out;
    }

    friend CycloElem operator/(const CycloElem& a, const CycloElem& b) {
        return a * b.inv();
    }

    friend bool operator==(const CycloElem& a, const CycloElem& b) {
        a.check(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (!s.empty()) s += ",";
            s += c_[i].get_str();
        }
        return "[" + s + "]";
    }

private:
    void check(const CycloElem& b) const {
        if (F_ != b.F_) throw std::invalid_argument("CycloElem: mixed fields");
    }

    const CycloField* F_;
    std::vector<mpq_class> c_;  // ascending powers of zeta, length deg(phi)
};

// zeta^k as a field element.
inline CycloElem zeta_pow(const CycloField& F, long k) {
    return CycloElem(F, std::vector<mpq_class>(F.zeta_power(k).begin(),
                                               F.zeta_power(k).end()));
}

// Quantum integer [r] at the ell-th root of unity. Depends only on r mod ell.
inline CycloElem qint(long r, const CycloField& F) {
    long rr = ((r % F.ell()) + F.ell()) % F.ell();
    CycloElem sum(F);
    for (long k = 0; k < rr; ++k) sum += zeta_pow(F, rr - 1 - 2 * k);
    return sum;
}

inline CycloElem qint(long r, long ell) { return qint(r, CycloField::get(ell)); }

// Specialization A -> K, v -> zeta (Laurent exponents folded mod ell).
inline CycloElem laurent_to_cyclo(const LaurentPoly& p, const CycloField& F) {
    CycloElem r(F);
    for (const auto& [e, c] : p.coeffs()) {
        const auto& zp = F.zeta_power(e);
        CycloElem term(F);
        // term = c * zeta^e
        std::vector<mpq_class> tc(zp.begin(), zp.end());
        for (auto& x : tc) x *= c;
        r += CycloElem(F, std::move(tc));
    }
    return r;
}

// Gaussian binomial [a; r]: computed in the Laurent ring, where the division
// by [r]! is exact, and specialized to K afterward. Naive quotients in K are
// ill-defined since [r]! vanishes there for r >= ell.
inline LaurentPoly qbinom_laurent(long a, long r) {
    if (r < 0) throw std::invalid_argument("qbinom: r must be >= 0");
    LaurentPoly num = LaurentPoly::one();
    for (long s = 0; s < r; ++s) num = num * LaurentPoly::qint(a - s);
    LaurentPoly den = LaurentPoly::one();
    for (long s = 1; s <= r; ++s) den = den * LaurentPoly::qint(s);
    return num.divide_exact(den);
}

inline CycloElem qbinom(long a, long r, const CycloField& F) {
    return laurent_to_cyclo(qbinom_laurent(a, r), F);
}

inline CycloElem qbinom(long a, long r, long ell) {
    return qbinom(a, r, CycloField::get(ell));
}

// ---------------------------------------------------------------------------
// Prime field Z/p.

class Fp {
public:
    Fp(long value, long p) : p_(p) {
        if (p < 2) throw std::invalid_argument("Fp: modulus must be >= 2");
        v_ = ((value % p) + p) % p;
    }

    long value() const { return v_; }
    long modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1, p_); }

    friend Fp operator+(Fp a, Fp b) { a.check(b); return Fp(a.v_ + b.v_, a.p_); }
    friend Fp operator-(Fp a, Fp b) { a.check(b); return Fp(a.v_ - b.v_, a.p_); }
    friend Fp operator*(Fp a, Fp b) { a.check(b); return Fp(a.v_ * b.v_, a.p_); }
    Fp operator-() const { return Fp(-v_, p_); }

    Fp inv() const {
        if (v_ == 0) throw std::domain_error("division by zero");
        long t = 0, nt = 1, r = p_, nr = v_;
        while (nr != 0) {
            long q = r / nr;
            t -= q * nt; std::swap(t, nt);
            r -= q * nr; std::swap(r, nr);
        }
        return Fp(t, p_);
    }

    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }

    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }

    friend bool operator==(Fp a, Fp b) { a.check(b); return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }

    std::string to_string() const { return std::to_string(v_); }

private:
    void check(const Fp& b) const {
        if (p_ != b.p_) throw std::invalid_argument("Fp: mixed moduli");
    }

    long v_;
    long p_;
};

// B/(v-1, p) = Z/p: evaluate the canonical representative at v = 1 and reduce
// mod p. Well-defined on Z[v]/(phi_p) because phi_p(1) = p.
inline Fp specialize_v1(const CycloElem& x, long p) {
    if (!detail::is_prime(p) || p % 2 == 0)
        throw std::invalid_argument("specialization requires prime ell");
    if (x.field().ell() != p)
        throw std::invalid_argument("specialization requires ell = p");
    if (!x.is_integral()) throw std::invalid_argument("not in B");
    mpz_class sum = 0;
    for (const auto& c : x.coeffs()) sum += c.get_num();
    mpz_class r = sum % p;
    if (r < 0) r += p;
    return Fp(r.get_si(), p);
}

}  // namespace smallq

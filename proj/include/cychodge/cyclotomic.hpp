#pragma once

#include "cychodge/numtheory.hpp"
#include "cychodge/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cychodge {

/// Element of the N-th cyclotomic field in the power basis
/// 1, z, ..., z^(phi(N)-1) modulo the N-th cyclotomic polynomial.
/// Equality is coefficient equality; elements of equal conductor only.
class Cyclotomic {
public:
    explicit Cyclotomic(long conductor)
        : n_(conductor), minpoly_(cyclotomic_polynomial(conductor)),
          c_(static_cast<size_t>(euler_phi(conductor))) {
        if (conductor <= 0) throw std::invalid_argument("Cyclotomic: conductor must be positive");
    }

    static Cyclotomic from_rational(long conductor, const Rat& r) {
        Cyclotomic x(conductor);
        x.c_[0] = r;
        return x;
    }

    /// zeta_N^k
    static Cyclotomic root_power(long conductor, long k) {
        Cyclotomic x(conductor);
        k %= conductor;
        if (k < 0) k += conductor;
        std::vector<Rat> raw(static_cast<size_t>(k) + 1);
        raw[static_cast<size_t>(k)] = Rat(1);
        x.c_ = x.reduce(raw);
        return x;
    }

    long conductor() const { return n_; }
    long degree() const { return static_cast<long>(c_.size()); }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    Rat rational_part() const { return c_[0]; }

    /// Set the coefficient of z^i (i < phi(N)).
    void set_coeff(size_t i, const Rat& v) { c_.at(i) = v; }

    /// Image under the automorphism zeta_N -> zeta_N^t, gcd(t,N) = 1.
    Cyclotomic galois(long t) const {
        t %= n_;
        if (t < 0) t += n_;
        if (gcd_long(t, n_) != 1)
            throw std::invalid_argument("galois: exponent not coprime to conductor");
        std::vector<Rat> raw(static_cast<size_t>(n_), Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            size_t e = static_cast<size_t>((static_cast<long>(i) * t) % n_);
            raw[e] += c_[i];
        }
        Cyclotomic r(n_);
        r.c_ = r.reduce(raw);
        return r;
    }

    /// Complex conjugation (zeta -> zeta^{-1}).
    Cyclotomic conj() const { return n_ == 1 ? *this : galois(n_ - 1); }

    /// Lift to the field of conductor M (N | M): zeta_N = zeta_M^{M/N}.
    Cyclotomic lift(long M) const {
        if (M % n_ != 0) throw std::invalid_argument("lift: old conductor must divide new");
        if (M == n_) return *this;
        long step = M / n_;
        std::vector<Rat> raw(static_cast<size_t>(M), Rat(0));
        for (size_t i = 0; i < c_.size(); ++i)
            raw[i * static_cast<size_t>(step)] = c_[i];
        Cyclotomic r(M);
        r.c_ = r.reduce(raw);
        return r;
    }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    Cyclotomic& operator+=(const Cyclotomic& o) {
        check(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) {
        check(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        a.check(b);
        std::vector<Rat> raw(a.c_.size() + b.c_.size(), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                raw[i + j] += a.c_[i] * b.c_[j];
            }
        }
        Cyclotomic r(a.n_);
        r.c_ = r.reduce(raw);
        return r;
    }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::string str() const {
        std::string s;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!first) s += " + ";
            s += c_[i].str();
            if (i >= 1) s += "*z" + std::to_string(n_) + (i > 1 ? "^" + std::to_string(i) : "");
            first = false;
        }
        return first ? "0" : s;
    }

private:
    void check(const Cyclotomic& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Cyclotomic: mixed conductors");
    }

    /// Reduce a raw coefficient vector modulo the cyclotomic polynomial.
    std::vector<Rat> reduce(std::vector<Rat> raw) const {
        const size_t deg = minpoly_.size() - 1;  // = phi(N)
        for (size_t i = raw.size(); i-- > deg;) {
            Rat c = raw[i];
            if (c.is_zero()) continue;
            for (size_t j = 0; j < minpoly_.size(); ++j)
                raw[i - deg + j] -= c * Rat(minpoly_[j]);
        }
        raw.resize(deg);
        return raw;
    }

    long n_;
    std::vector<Int> minpoly_;
    std::vector<Rat> c_;
};

/// Field automorphism zeta_N -> zeta_N^t applied to x.
inline Cyclotomic galois_conjugate(const Cyclotomic& x, long t) { return x.galois(t); }

}  // namespace cychodge

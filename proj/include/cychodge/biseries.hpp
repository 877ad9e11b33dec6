#pragma once

#include "cychodge/numtheory.hpp"
#include "cychodge/rational.hpp"

#include <stdexcept>
#include <vector>

namespace cychodge {

/// Truncated bivariate power series over Rat in variables y and z.
/// Truncation orders are fixed at construction; all arithmetic is closed
/// under the same truncation.
class BiSeries {
public:
    BiSeries(int max_y, int max_z)
        : max_y_(max_y), max_z_(max_z),
          c_(static_cast<size_t>(max_y + 1) * static_cast<size_t>(max_z + 1)) {
        if (max_y < 0 || max_z < 0)
            throw std::invalid_argument("BiSeries: truncation orders must be >= 0");
    }

    int max_y() const { return max_y_; }
    int max_z() const { return max_z_; }

    const Rat& coeff(int i, int j) const { return c_[idx(i, j)]; }
    void set_coeff(int i, int j, const Rat& v) { c_[idx(i, j)] = v; }

    static BiSeries one(int max_y, int max_z) {
        BiSeries s(max_y, max_z);
        s.set_coeff(0, 0, Rat(1));
        return s;
    }

    BiSeries& operator+=(const BiSeries& o) {
        check_orders(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    BiSeries& operator-=(const BiSeries& o) {
        check_orders(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }

    friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
        a.check_orders(b);
        BiSeries r(a.max_y_, a.max_z_);
        for (int i = 0; i <= a.max_y_; ++i)
            for (int j = 0; j <= a.max_z_; ++j) {
                if (a.coeff(i, j).is_zero()) continue;
                for (int k = 0; i + k <= a.max_y_; ++k)
                    for (int l = 0; j + l <= a.max_z_; ++l) {
                        if (b.coeff(k, l).is_zero()) continue;
                        r.c_[r.idx(i + k, j + l)] += a.coeff(i, j) * b.coeff(k, l);
                    }
            }
        return r;
    }
    BiSeries& operator*=(const BiSeries& o) { return *this = *this * o; }

    friend bool operator==(const BiSeries& a, const BiSeries& b) {
        return a.max_y_ == b.max_y_ && a.max_z_ == b.max_z_ && a.c_ == b.c_;
    }

private:
    size_t idx(int i, int j) const {
        if (i < 0 || i > max_y_ || j < 0 || j > max_z_)
            throw std::out_of_range("BiSeries: index outside truncation bounds");
        return static_cast<size_t>(i) * static_cast<size_t>(max_z_ + 1) + static_cast<size_t>(j);
    }
    void check_orders(const BiSeries& o) const {
        if (max_y_ != o.max_y_ || max_z_ != o.max_z_)
            throw std::invalid_argument("BiSeries: mixed truncation orders");
    }

    int max_y_, max_z_;
    std::vector<Rat> c_;
};

enum class BinomialBase { OnePlusYZ, OneMinusZ };

/// Formal expansion of (1+yz)^e or (1-z)^e for any integer exponent e,
/// via generalized binomial coefficients, truncated to the given orders.
inline BiSeries series_expand_binomial(BinomialBase base, const Int& exponent,
                                       int max_y, int max_z) {
    BiSeries s(max_y, max_z);
    if (base == BinomialBase::OnePlusYZ) {
        for (int a = 0; a <= std::min(max_y, max_z); ++a)
            s.set_coeff(a, a, Rat(binomial(exponent, a)));
    } else {
        for (int b = 0; b <= max_z; ++b) {
            Int c = binomial(exponent, b);
            s.set_coeff(0, b, Rat(b % 2 == 0 ? c : Int(-c)));
        }
    }
    return s;
}

inline BiSeries series_expand_binomial(BinomialBase base, long exponent,
                                       int max_y, int max_z) {
    return series_expand_binomial(base, Int(exponent), max_y, max_z);
}

}  // namespace cychodge

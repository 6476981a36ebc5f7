#pragma once

#include "adsum/errors.hpp"
#include "adsum/real.hpp"
#include "adsum/series/taylor.hpp"

#include <algorithm>
#include <vector>

namespace adsum {

// Truncated bivariate expansion sum c(i,j) (s-1)^i w^j, i <= S, j <= W.
template <class T>
class Jet2T {
public:
    Jet2T() : Jet2T(0, 0) {}
    Jet2T(int order_s, int order_w, T constant = T(0))
        : S_(order_s), W_(order_w), c_((order_s + 1) * (order_w + 1), T(0)) {
        c_[0] = constant;
    }

    static Jet2T var_s(int S, int W, T at = T(0)) {
        Jet2T r(S, W, at);
        if (S >= 1) r(1, 0) = T(1);
        return r;
    }
    static Jet2T var_w(int S, int W, T at = T(0)) {
        Jet2T r(S, W, at);
        if (W >= 1) r(0, 1) = T(1);
        return r;
    }
    // exp(a + b (s-1) + c w); p^{-s} = exp_linear(-log p, -log p, 0)
    static Jet2T exp_linear(int S, int W, const T& a, const T& b, const T& c) {
        Jet2T r(S, W);
        auto es = Series<T>::exp_linear(S, a, b);
        auto ew = Series<T>::exp_linear(W, T(0), c);
        for (int i = 0; i <= S; ++i)
            for (int j = 0; j <= W; ++j) r(i, j) = es[i] * ew[j];
        return r;
    }
    static Jet2T from_s(const Series<T>& f, int S, int W) {
        Jet2T r(S, W);
        for (int i = 0; i <= std::min(S, f.order()); ++i) r(i, 0) = f[i];
        return r;
    }
    static Jet2T from_w(const Series<T>& f, int S, int W) {
        Jet2T r(S, W);
        for (int j = 0; j <= std::min(W, f.order()); ++j) r(0, j) = f[j];
        return r;
    }
    // f(s-1) * g(w)
    static Jet2T outer(const Series<T>& f, const Series<T>& g, int S, int W) {
        Jet2T r(S, W);
        for (int i = 0; i <= std::min(S, f.order()); ++i)
            for (int j = 0; j <= std::min(W, g.order()); ++j) r(i, j) = f[i] * g[j];
        return r;
    }

    int order_s() const { return S_; }
    int order_w() const { return W_; }
    T& operator()(int i, int j) { return c_[i * (W_ + 1) + j]; }
    const T& operator()(int i, int j) const { return c_[i * (W_ + 1) + j]; }
    const std::vector<T>& data() const { return c_; }

    // d^i/ds^i d^j/dw^j at (1,0)
    T partial(int i, int j) const {
        T f(1);
        for (int t = 2; t <= i; ++t) f *= t;
        for (int t = 2; t <= j; ++t) f *= t;
        return (*this)(i, j) * f;
    }

    Series<T> row(int i) const {
        Series<T> r(W_);
        for (int j = 0; j <= W_; ++j) r[j] = (*this)(i, j);
        return r;
    }
    void set_row(int i, const Series<T>& r) {
        for (int j = 0; j <= W_; ++j) (*this)(i, j) = j <= r.order() ? r[j] : T(0);
    }

    Jet2T& operator+=(const Jet2T& o) {
        check(o);
        for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += o.c_[n];
        return *this;
    }
    Jet2T& operator-=(const Jet2T& o) {
        check(o);
        for (std::size_t n = 0; n < c_.size(); ++n) c_[n] -= o.c_[n];
        return *this;
    }
    Jet2T& operator*=(const T& k) {
        for (auto& v : c_) v *= k;
        return *this;
    }
    Jet2T& operator+=(const T& k) {
        c_[0] += k;
        return *this;
    }

    friend Jet2T operator+(Jet2T a, const Jet2T& b) { return a += b; }
    friend Jet2T operator-(Jet2T a, const Jet2T& b) { return a -= b; }
    friend Jet2T operator*(Jet2T a, const T& k) { return a *= k; }
    friend Jet2T operator*(const T& k, Jet2T a) { return a *= k; }
    friend Jet2T operator+(Jet2T a, const T& k) { return a += k; }
    friend Jet2T operator+(const T& k, Jet2T a) { return a += k; }
    friend Jet2T operator-(const T& k, Jet2T a) {
        a *= T(-1);
        return a += k;
    }
    friend Jet2T operator-(Jet2T a) { return a *= T(-1); }

    friend Jet2T operator*(const Jet2T& a, const Jet2T& b) {
        a.check(b);
        Jet2T r(a.S_, a.W_);
        int S = a.S_, W = a.W_;
        for (int i1 = 0; i1 <= S; ++i1)
            for (int j1 = 0; j1 <= W; ++j1) {
                const T& x = a(i1, j1);
                if (x == 0) continue;
                for (int i2 = 0; i1 + i2 <= S; ++i2)
                    for (int j2 = 0; j1 + j2 <= W; ++j2) r(i1 + i2, j1 + j2) += x * b(i2, j2);
            }
        return r;
    }

    Jet2T inverse() const { return Jet2T(S_, W_, T(1)) / *this; }

    // direct recurrence, lexicographic in (i, j)
    friend Jet2T operator/(const Jet2T& a, const Jet2T& b) {
        a.check(b);
        if (b(0, 0) == 0) fail(ErrorKind::singularity, "jet division by zero constant term");
        int S = a.S_, W = a.W_;
        Jet2T r(S, W);
        T inv0 = T(1) / b(0, 0);
        for (int i = 0; i <= S; ++i)
            for (int j = 0; j <= W; ++j) {
                T acc = a(i, j);
                for (int i2 = 0; i2 <= i; ++i2)
                    for (int j2 = 0; j2 <= j; ++j2) {
                        if (i2 == 0 && j2 == 0) continue;
                        acc -= b(i2, j2) * r(i - i2, j - j2);
                    }
                r(i, j) = acc * inv0;
            }
        return r;
    }

    Jet2T pow_int(long e) const {
        if (e < 0) return inverse().pow_int(-e);
        Jet2T r(S_, W_, T(1)), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    // row recurrence in (s-1): i E_i = sum_t t F_t E_{i-t}
    Jet2T exp() const {
        Jet2T r(S_, W_);
        std::vector<Series<T>> F(S_ + 1), E(S_ + 1);
        for (int i = 0; i <= S_; ++i) F[i] = row(i);
        E[0] = F[0].exp_series();
        for (int i = 1; i <= S_; ++i) {
            Series<T> acc(W_);
            for (int t = 1; t <= i; ++t) acc += (F[t] * E[i - t]) * T(t);
            E[i] = acc * (T(1) / T(i));
        }
        for (int i = 0; i <= S_; ++i) r.set_row(i, E[i]);
        return r;
    }

    // i L_i = (i F_i - sum_{t<i} t L_t F_{i-t}) / F_0
    Jet2T log() const {
        if (!((*this)(0, 0) > 0)) fail(ErrorKind::singularity, "jet log of nonpositive constant term");
        Jet2T r(S_, W_);
        std::vector<Series<T>> F(S_ + 1), L(S_ + 1);
        for (int i = 0; i <= S_; ++i) F[i] = row(i);
        L[0] = F[0].log_series();
        for (int i = 1; i <= S_; ++i) {
            Series<T> acc = F[i] * T(i);
            for (int t = 1; t < i; ++t) acc -= (L[t] * F[i - t]) * T(t);
            L[i] = (acc / F[0]) * (T(1) / T(i));
        }
        for (int i = 0; i <= S_; ++i) r.set_row(i, L[i]);
        return r;
    }

    Jet2T truncated(int S, int W) const {
        Jet2T r(S, W);
        for (int i = 0; i <= std::min(S, S_); ++i)
            for (int j = 0; j <= std::min(W, W_); ++j) r(i, j) = (*this)(i, j);
        return r;
    }

    // value at (s-1, w) = (ds, dw) of the retained polynomial
    T evaluate(const T& ds, const T& dw) const {
        T total(0), pi(1);
        for (int i = 0; i <= S_; ++i) {
            T pj(1), rowv(0);
            for (int j = 0; j <= W_; ++j) {
                rowv += (*this)(i, j) * pj;
                pj *= dw;
            }
            total += rowv * pi;
            pi *= ds;
        }
        return total;
    }

private:
    void check(const Jet2T& o) const {
        if (o.S_ != S_ || o.W_ != W_) fail(ErrorKind::domain, "jet order mismatch");
    }

    int S_, W_;
    std::vector<T> c_;
};

using Jet2 = Jet2T<Real>;
using Taylor = Series<Real>;

template <class T>
Jet2T<T> exp(const Jet2T<T>& a) {
    return a.exp();
}
template <class T>
Jet2T<T> log(const Jet2T<T>& a) {
    return a.log();
}

}  // namespace adsum

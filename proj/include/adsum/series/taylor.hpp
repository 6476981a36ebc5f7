#pragma once

#include "adsum/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace adsum {

// Truncated univariate power series sum c[n] t^n, n <= order.
template <class T>
class Series {
public:
    Series() : c_(1, T(0)) {}
    explicit Series(int order, T constant = T(0)) : c_(order + 1, T(0)) { c_[0] = constant; }
    Series(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(T(0));
    }

    static Series variable(int order, T at = T(0)) {
        Series s(order, at);
        if (order >= 1) s.c_[1] = T(1);
        return s;
    }

    // exp(a + b t)
    static Series exp_linear(int order, const T& a, const T& b) {
        Series s(order);
        T term = exp(a);
        for (int n = 0; n <= order; ++n) {
            s.c_[n] = term;
            term = term * b / T(n + 1);
        }
        return s;
    }

    int order() const { return int(c_.size()) - 1; }
    const T& operator[](int n) const { return c_[n]; }
    T& operator[](int n) { return c_[n]; }
    const std::vector<T>& coeffs() const { return c_; }

    Series& operator+=(const Series& o) {
        for (int n = 0; n <= std::min(order(), o.order()); ++n) c_[n] += o.c_[n];
        return *this;
    }
    Series& operator-=(const Series& o) {
        for (int n = 0; n <= std::min(order(), o.order()); ++n) c_[n] -= o.c_[n];
        return *this;
    }
    Series& operator*=(const T& k) {
        for (auto& v : c_) v *= k;
        return *this;
    }
    Series& operator+=(const T& k) {
        c_[0] += k;
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const T& k) { return a *= k; }
    friend Series operator*(const T& k, Series a) { return a *= k; }
    friend Series operator+(Series a, const T& k) { return a += k; }
    friend Series operator-(Series a) { return a *= T(-1); }

    friend Series operator*(const Series& a, const Series& b) {
        int N = std::min(a.order(), b.order());
        Series r(N);
        for (int i = 0; i <= N; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; i + j <= N; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    Series inverse() const {
        if (c_[0] == 0) fail(ErrorKind::singularity, "series reciprocal of zero constant term");
        int N = order();
        Series r(N);
        T inv0 = T(1) / c_[0];
        r.c_[0] = inv0;
        for (int n = 1; n <= N; ++n) {
            T acc(0);
            for (int j = 1; j <= n; ++j) acc += c_[j] * r.c_[n - j];
            r.c_[n] = -acc * inv0;
        }
        return r;
    }

    friend Series operator/(const Series& a, const Series& b) {
        int N = std::min(a.order(), b.order());
        if (b.c_[0] == 0) fail(ErrorKind::singularity, "series division by zero constant term");
        Series r(N);
        T inv0 = T(1) / b.c_[0];
        for (int n = 0; n <= N; ++n) {
            T acc = a.c_[n];
            for (int j = 1; j <= n; ++j) acc -= b.c_[j] * r.c_[n - j];
            r.c_[n] = acc * inv0;
        }
        return r;
    }

    Series exp_series() const {
        int N = order();
        Series r(N);
        r.c_[0] = exp(c_[0]);
        for (int n = 1; n <= N; ++n) {
            T acc(0);
            for (int j = 1; j <= n; ++j) acc += T(j) * c_[j] * r.c_[n - j];
            r.c_[n] = acc / T(n);
        }
        return r;
    }

    Series log_series() const {
        if (!(c_[0] > 0)) fail(ErrorKind::singularity, "series log of nonpositive constant term");
        int N = order();
        Series r(N);
        r.c_[0] = log(c_[0]);
        for (int n = 1; n <= N; ++n) {
            T acc = T(n) * c_[n];
            for (int j = 1; j < n; ++j) acc -= T(j) * r.c_[j] * c_[n - j];
            r.c_[n] = acc / (T(n) * c_[0]);
        }
        return r;
    }

    Series pow_int(long e) const {
        if (e < 0) return inverse().pow_int(-e);
        Series r(order(), T(1)), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    // f(m t) for a scalar m
    Series scaled(const T& m) const {
        Series r = *this;
        T mk(1);
        for (auto& v : r.c_) {
            v *= mk;
            mk *= m;
        }
        return r;
    }

    Series truncated(int order) const {
        std::vector<T> v(order + 1, T(0));
        for (int n = 0; n <= std::min(order, this->order()); ++n) v[n] = c_[n];
        return Series(std::move(v));
    }

    // Taylor coefficient n times n!: the n-th derivative at the expansion point
    T derivative(int n) const {
        T f(1);
        for (int i = 2; i <= n; ++i) f *= i;
        return c_[n] * f;
    }

private:
    std::vector<T> c_;
};

}  // namespace adsum

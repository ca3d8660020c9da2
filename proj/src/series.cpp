#include "omu/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace omu {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    coeffs_.assign(order + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs) : TruncatedSeries(order) {
    const size_t n = std::min(coeffs.size(), coeffs_.size());
    for (size_t i = 0; i < n; ++i) coeffs_[i] = std::move(coeffs[i]);
}

TruncatedSeries::TruncatedSeries(int order, std::initializer_list<long> coeffs) : TruncatedSeries(order) {
    size_t i = 0;
    for (long c : coeffs) {
        if (i >= coeffs_.size()) break;
        coeffs_[i++] = Rational(c);
    }
}

TruncatedSeries TruncatedSeries::identity(int order) {
    TruncatedSeries t(order);
    if (order >= 1) t[1] = 1;
    return t;
}

TruncatedSeries TruncatedSeries::unit_poly(int q, int order) {
    if (q < 0) throw std::invalid_argument("unit_poly requires q >= 0");
    TruncatedSeries p(order);
    for (int k = 0; k <= q && k <= order; ++k) p[k] = 1;
    return p;
}

namespace {

int common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    return std::min(a.order(), b.order());
}

}  // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = common_order(a, b);
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) r[i] = a[i] + b[i];
    return r;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = common_order(a, b);
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) r[i] = a[i] - b[i];
    return r;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = common_order(a, b);
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b[0] == 0) throw std::invalid_argument("division by a series with zero constant term");
    const int n = common_order(a, b);
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) {
        Rational acc = a[i];
        for (int j = 0; j < i; ++j) {
            if (r[j] == 0 || b[i - j] == 0) continue;
            acc -= r[j] * b[i - j];
        }
        r[i] = acc / b[0];
    }
    return r;
}

TruncatedSeries scale(const TruncatedSeries& a, const Rational& factor) {
    TruncatedSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) r[i] = a[i] * factor;
    return r;
}

TruncatedSeries log(const TruncatedSeries& a) {
    if (a[0] != 1) throw std::invalid_argument("log requires constant term 1");
    const int n = a.order();
    TruncatedSeries r(n);
    // from a (log a)' = a': n a_n = sum_{k=1..n} k l_k a_{n-k}
    for (int m = 1; m <= n; ++m) {
        Rational acc = Rational(m) * a[m];
        for (int k = 1; k < m; ++k) {
            if (r[k] == 0 || a[m - k] == 0) continue;
            acc -= Rational(k) * r[k] * a[m - k];
        }
        r[m] = acc / m;
    }
    return r;
}

TruncatedSeries exp(const TruncatedSeries& a) {
    if (a[0] != 0) throw std::invalid_argument("exp requires constant term 0");
    const int n = a.order();
    TruncatedSeries r(n);
    r[0] = 1;
    // from e' = a' e: m e_m = sum_{k=1..m} k a_k e_{m-k}
    for (int m = 1; m <= n; ++m) {
        Rational acc(0);
        for (int k = 1; k <= m; ++k) {
            if (a[k] == 0 || r[m - k] == 0) continue;
            acc += Rational(k) * a[k] * r[m - k];
        }
        r[m] = acc / m;
    }
    return r;
}

TruncatedSeries pow_rational(const TruncatedSeries& a, const Rational& z) {
    if (a[0] != 1) throw std::invalid_argument("pow_rational requires constant term 1");
    const int n = a.order();
    TruncatedSeries r(n);
    r[0] = 1;
    // Miller recurrence from a p' = z a' p:
    //   m p_m = sum_{k=1..m} ((z+1)k - m) a_k p_{m-k}
    for (int m = 1; m <= n; ++m) {
        Rational acc(0);
        for (int k = 1; k <= m; ++k) {
            if (a[k] == 0 || r[m - k] == 0) continue;
            acc += ((z + 1) * k - m) * a[k] * r[m - k];
        }
        r[m] = acc / m;
    }
    return r;
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (g[0] != 0) throw std::invalid_argument("compose requires zero constant term in g");
    const int n = common_order(f, g);
    TruncatedSeries g_cut(n, g.coeffs());
    TruncatedSeries r(n);
    r[0] = f[n];
    for (int i = n - 1; i >= 0; --i) {
        r = mul(r, g_cut);
        r[0] += f[i];
    }
    return r;
}

TruncatedSeries revert(const TruncatedSeries& f) {
    if (f[0] != 0) throw std::invalid_argument("revert requires zero constant term");
    if (f.order() < 1 || f[1] == 0) throw std::invalid_argument("revert requires a nonzero linear coefficient");
    const int n = f.order();
    const TruncatedSeries ident = TruncatedSeries::identity(n);

    // f'(t)
    TruncatedSeries deriv(n);
    for (int k = 1; k <= n; ++k) deriv[k - 1] = Rational(k) * f[k];

    // Newton iteration g <- g - (f(g) - t)/f'(g); quadratic convergence
    // in the valuation of the residual.
    TruncatedSeries g = scale(ident, Rational(1) / f[1]);
    int guard = 0;
    while (true) {
        const TruncatedSeries residual = sub(compose(f, g), ident);
        bool done = true;
        for (int k = 0; k <= n; ++k) {
            if (residual[k] != 0) {
                done = false;
                break;
            }
        }
        if (done) break;
        if (++guard > n + 2) throw std::logic_error("series reversion failed to converge");
        g = sub(g, div(residual, compose(deriv, g)));
    }
    return g;
}

EvalResult eval_float(const TruncatedSeries& f, const BigFloat& t0) {
    const int n = f.order();
    BigFloat value;
    for (int i = n; i >= 0; --i) value = value * t0 + BigFloat(f[i]);
    BigFloat tn(1L);
    for (int i = 0; i < n; ++i) tn *= t0;
    return EvalResult{value, abs(BigFloat(f[n]) * tn)};
}

}  // namespace omu

#include "lapdiam/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace lapdiam {

LaplacianMatrix::LaplacianMatrix(const Graph& g) : n_(g.order()), entries_(n_ * n_, 0) {
    for (Vertex v = 0; v < n_; ++v) entries_[v * n_ + v] = static_cast<long>(g.degree(v));
    for (auto [u, v] : g.edges()) {
        entries_[u * n_ + v] = -1;
        entries_[v * n_ + u] = -1;
    }
}

long LaplacianMatrix::trace() const {
    long t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += entries_[i * n_ + i];
    return t;
}

SymmetricMatrix to_symmetric(const LaplacianMatrix& l) {
    SymmetricMatrix m{l.order(), std::vector<double>(l.order() * l.order())};
    for (std::size_t i = 0; i < m.n; ++i) {
        for (std::size_t j = 0; j < m.n; ++j) m(i, j) = static_cast<double>(l(i, j));
    }
    return m;
}

SymmetricMatrix delete_row_column(const SymmetricMatrix& m, std::size_t removed) {
    if (removed >= m.n || m.n < 2) throw std::out_of_range("row/column index out of range");
    SymmetricMatrix out{m.n - 1, std::vector<double>((m.n - 1) * (m.n - 1))};
    for (std::size_t i = 0, oi = 0; i < m.n; ++i) {
        if (i == removed) continue;
        for (std::size_t j = 0, oj = 0; j < m.n; ++j) {
            if (j == removed) continue;
            out(oi, oj++) = m(i, j);
        }
        ++oi;
    }
    return out;
}

Spectrum symmetric_eigenvalues(SymmetricMatrix a) {
    const auto n = a.n;
    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) s += a(i, j) * a(i, j);
            }
        }
        return std::sqrt(s);
    };
    double frob = 0.0;
    for (double x : a.entries) frob += x * x;
    frob = std::sqrt(frob);
    const double target = 1e-12 * (1.0 + frob);

    constexpr int kMaxSweeps = 100;
    double off = off_norm();
    for (int sweep = 0; sweep < kMaxSweeps && off >= target; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
        off = off_norm();
    }

    Spectrum out;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i);
    std::sort(out.values.begin(), out.values.end(), std::greater<>());
    // Weyl: each diagonal entry is within ||off-diagonal||_2 of an eigenvalue; add rounding slack.
    out.tolerance = off + 16.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon() * (1.0 + frob);
    return out;
}

Spectrum spectrum_float(const Graph& g) { return symmetric_eigenvalues(to_symmetric(LaplacianMatrix(g))); }

double path_eigenvalue(std::size_t n, std::size_t j) {
    if (j < 1 || j > n) throw std::out_of_range("path eigenvalue index must satisfy 1 <= j <= n");
    const double s = std::sin(static_cast<double>(n - j) * std::numbers::pi / (2.0 * static_cast<double>(n)));
    return 4.0 * s * s;
}

IntegerPolynomial characteristic_polynomial(const LaplacianMatrix& m) {
    const auto n = m.order();
    // Coefficients of det(xI - A_k) for the leading k x k block, highest degree first.
    std::vector<BigInt> p{1, -m(0, 0)};
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<BigInt> toeplitz(k + 2);
        toeplitz[0] = 1;
        toeplitz[1] = -m(k, k);
        std::vector<BigInt> w(k);
        for (std::size_t i = 0; i < k; ++i) w[i] = m(i, k);
        for (std::size_t step = 0; step < k; ++step) {
            BigInt dot = 0;
            for (std::size_t i = 0; i < k; ++i) dot += m(k, i) * w[i];
            toeplitz[step + 2] = -dot;
            if (step + 1 == k) break;
            std::vector<BigInt> next(k);
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j) {
                    if (const long e = m(i, j); e != 0) next[i] += e * w[j];
                }
            }
            w = std::move(next);
        }
        std::vector<BigInt> q(k + 2);
        for (std::size_t i = 0; i < k + 2; ++i) {
            for (std::size_t j = 0; j <= std::min(i, k); ++j) q[i] += toeplitz[i - j] * p[j];
        }
        p = std::move(q);
    }
    std::reverse(p.begin(), p.end());
    return IntegerPolynomial(std::move(p));
}

IntervalQuery::IntervalQuery(Rational lo_, bool lo_closed_, Rational hi_, bool hi_closed_)
    : lo(std::move(lo_)), lo_closed(lo_closed_), hi(std::move(hi_)), hi_closed(hi_closed_) {
    lo.canonicalize();
    hi.canonicalize();
    if (lo > hi) {
        throw std::invalid_argument("interval lower end " + format_rational(lo) + " exceeds upper end " +
                                    format_rational(hi));
    }
}

bool IntervalQuery::contains(double x) const {
    const double l = lo.get_d();
    const double h = hi.get_d();
    const bool above = lo_closed ? x >= l : x > l;
    const bool below = hi_closed ? x <= h : x < h;
    return above && below;
}

std::string IntervalQuery::to_string() const {
    return std::string(lo_closed ? "[" : "(") + format_rational(lo) + "," + format_rational(hi) + (hi_closed ? "]" : ")");
}

std::string to_string(RankComparison c) {
    switch (c) {
        case RankComparison::Less: return "less";
        case RankComparison::Equal: return "equal";
        case RankComparison::Greater: return "greater";
    }
    return "?";
}

ExactCounter::ExactCounter(const IntegerPolynomial& characteristic) : degree_(static_cast<std::size_t>(characteristic.degree())) {
    for (auto& f : square_free_decomposition(characteristic)) {
        SturmChain chain(f.factor);
        factors_.push_back(Factor{std::move(f.factor), std::move(chain), f.multiplicity});
    }
}

std::size_t ExactCounter::multiplicity_at(const Rational& x) const {
    std::size_t total = 0;
    for (const auto& f : factors_) {
        if (f.poly.sign_at(x) == 0) total += f.multiplicity;
    }
    return total;
}

std::size_t ExactCounter::count_above(const Rational& x) const {
    std::size_t total = 0;
    for (const auto& f : factors_) total += f.multiplicity * f.sturm.roots_above(x);
    return total;
}

std::size_t ExactCounter::count(const IntervalQuery& q) const {
    std::size_t total = 0;
    for (const auto& f : factors_) total += f.multiplicity * f.sturm.roots_in(q.lo, q.hi);
    // (lo, hi] so far: add lo when closed, drop hi when open.
    if (q.lo == q.hi) {
        return (q.lo_closed && q.hi_closed) ? multiplicity_at(q.lo) : 0;
    }
    if (q.lo_closed) total += multiplicity_at(q.lo);
    if (!q.hi_closed) total -= multiplicity_at(q.hi);
    return total;
}

RankComparison ExactCounter::rank_test(std::size_t j, const Rational& r) const {
    if (j < 1 || j > degree_) throw std::out_of_range("eigenvalue index must satisfy 1 <= j <= n");
    const auto greater = count_above(r);
    if (j <= greater) return RankComparison::Greater;
    if (j <= greater + multiplicity_at(r)) return RankComparison::Equal;
    return RankComparison::Less;
}

std::size_t count_interval_exact(const Graph& g, const IntervalQuery& q) { return ExactCounter(g).count(q); }

RankComparison eigenvalue_rank_test(const Graph& g, std::size_t j, const Rational& r) {
    if (j < 1 || j > g.order()) throw std::out_of_range("eigenvalue index must satisfy 1 <= j <= n");
    return ExactCounter(g).rank_test(j, r);
}

std::vector<std::int64_t> pendant_path_profile(std::size_t length) {
    std::vector<std::int64_t> out(length);
    for (std::size_t i = 1; i <= length; ++i) {
        const auto mag = static_cast<std::int64_t>(2 * i - 1);
        out[i - 1] = (i % 2 == 1) ? mag : -mag;
    }
    return out;
}

}  // namespace lapdiam

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lapdiam/graph.hpp"
#include "lapdiam/polynomial.hpp"
#include "lapdiam/rational.hpp"

namespace lapdiam {

/// Dense L(G) = D(G) - A(G), row-major.
class LaplacianMatrix {
public:
    explicit LaplacianMatrix(const Graph& g);

    std::size_t order() const { return n_; }
    long operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    long trace() const;

private:
    std::size_t n_;
    std::vector<long> entries_;
};

inline LaplacianMatrix laplacian(const Graph& g) { return LaplacianMatrix(g); }

/// Eigenvalues sorted non-increasing (values[0] = μ_1) and the absolute error bound
/// guaranteed by the solver's stopping rule.
struct Spectrum {
    std::vector<double> values;
    double tolerance = 0.0;

    /// 1-based μ_j.
    double mu(std::size_t j) const { return values.at(j - 1); }
};

/// Dense symmetric matrix of doubles for the Jacobi solver, row-major.
struct SymmetricMatrix {
    std::size_t n = 0;
    std::vector<double> entries;

    double& operator()(std::size_t i, std::size_t j) { return entries[i * n + j]; }
    double operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

SymmetricMatrix to_symmetric(const LaplacianMatrix& l);

/// Principal submatrix with row and column `removed` deleted.
SymmetricMatrix delete_row_column(const SymmetricMatrix& m, std::size_t removed);

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// 1e-12 * (1 + ||M||_F). Deterministic sweep order (p < q, row by row).
Spectrum symmetric_eigenvalues(SymmetricMatrix m);

Spectrum spectrum_float(const Graph& g);

/// μ_j(P_n) = 4 sin^2((n-j)π / 2n); throws std::out_of_range unless 1 <= j <= n.
double path_eigenvalue(std::size_t n, std::size_t j);

/// det(xI - M) via Berkowitz's division-free recurrence.
IntegerPolynomial characteristic_polynomial(const LaplacianMatrix& m);
inline IntegerPolynomial char_poly(const Graph& g) { return characteristic_polynomial(LaplacianMatrix(g)); }

/// An interval with rational endpoints and independent open/closed ends.
struct IntervalQuery {
    Rational lo;
    bool lo_closed = true;
    Rational hi;
    bool hi_closed = true;

    /// Throws std::invalid_argument when lo > hi.
    IntervalQuery(Rational lo, bool lo_closed, Rational hi, bool hi_closed);

    static IntervalQuery closed(Rational lo, Rational hi) { return {std::move(lo), true, std::move(hi), true}; }
    static IntervalQuery open_closed(Rational lo, Rational hi) { return {std::move(lo), false, std::move(hi), true}; }

    bool contains(double x) const;
    /// "[lo,hi]", "(lo,hi]" and so on.
    std::string to_string() const;
};

enum class RankComparison { Less, Equal, Greater };
std::string to_string(RankComparison c);

/// Exact eigenvalue counting for one characteristic polynomial: square-free
/// factors and their Sturm chains are computed once, queries are then cheap.
class ExactCounter {
public:
    explicit ExactCounter(const IntegerPolynomial& characteristic);
    explicit ExactCounter(const Graph& g) : ExactCounter(char_poly(g)) {}

    std::size_t degree() const { return degree_; }

    /// Number of roots in the interval, counted with multiplicity.
    std::size_t count(const IntervalQuery& q) const;
    std::size_t multiplicity_at(const Rational& x) const;
    std::size_t count_above(const Rational& x) const;
    std::size_t count_at_least(const Rational& x) const { return count_above(x) + multiplicity_at(x); }

    /// Compares the j-th largest root (1-based) with r.
    RankComparison rank_test(std::size_t j, const Rational& r) const;

private:
    struct Factor {
        IntegerPolynomial poly;
        SturmChain sturm;
        std::size_t multiplicity;
    };
    std::vector<Factor> factors_;
    std::size_t degree_;
};

std::size_t count_interval_exact(const Graph& g, const IntervalQuery& q);
RankComparison eigenvalue_rank_test(const Graph& g, std::size_t j, const Rational& r);

/// Coefficients a_i = (-1)^(i-1) (2i-1), i = 1..length: the shape an eigenvalue-4
/// eigenvector is forced to take along a pendant path, in units of its end entry.
std::vector<std::int64_t> pendant_path_profile(std::size_t length);

}  // namespace lapdiam

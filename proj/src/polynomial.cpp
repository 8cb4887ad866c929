#include "lapdiam/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace lapdiam {
namespace {

const BigInt kZero = 0;

int sign_of(const BigInt& v) { return sgn(v); }

// Divides by the positive content without touching the sign.
IntegerPolynomial strip_content(const IntegerPolynomial& p) {
    if (p.is_zero()) return p;
    const auto c = p.content();
    if (c == 1) return p;
    std::vector<BigInt> out(p.coefficients());
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    return IntegerPolynomial(std::move(out));
}

std::size_t count_variations(const std::vector<int>& signs) {
    std::size_t changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntegerPolynomial::IntegerPolynomial(std::initializer_list<long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

void IntegerPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntegerPolynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : kZero; }

IntegerPolynomial IntegerPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    return IntegerPolynomial(std::move(out));
}

BigInt IntegerPolynomial::content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntegerPolynomial IntegerPolynomial::primitive_part() const {
    auto p = strip_content(*this);
    return (!p.is_zero() && sign_of(p.leading()) < 0) ? -p : p;
}

std::size_t IntegerPolynomial::trailing_zeros() const {
    std::size_t k = 0;
    while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
    return k;
}

Rational IntegerPolynomial::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    acc.canonicalize();
    return acc;
}

int IntegerPolynomial::sign_at(const Rational& x) const {
    if (coeffs_.empty()) return 0;
    // b^deg p(a/b) = sum c_k a^k b^(deg-k); the denominator b is positive.
    const auto& a = x.get_num();
    const auto& b = x.get_den();
    BigInt acc = coeffs_.back();
    BigInt bpow = 1;
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
        bpow *= b;
        acc = acc * a + coeffs_[k] * bpow;
    }
    return sign_of(acc);
}

int IntegerPolynomial::sign_at_infinity(bool positive) const {
    if (coeffs_.empty()) return 0;
    const int s = sign_of(leading());
    return (positive || degree() % 2 == 0) ? s : -s;
}

IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) + b.coefficient(k);
    return IntegerPolynomial(std::move(out));
}

IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) - b.coefficient(k);
    return IntegerPolynomial(std::move(out));
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntegerPolynomial(std::move(out));
}

IntegerPolynomial IntegerPolynomial::operator-() const {
    std::vector<BigInt> out(coeffs_);
    for (auto& c : out) c = -c;
    return IntegerPolynomial(std::move(out));
}

IntegerPolynomial IntegerPolynomial::scaled(const BigInt& factor) const {
    std::vector<BigInt> out(coeffs_);
    for (auto& c : out) c *= factor;
    return IntegerPolynomial(std::move(out));
}

std::string IntegerPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const auto& c = coeffs_[k];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        if (mag != 1 || k == 0) os << mag.get_str();
        if (k >= 1) os << "x";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

IntegerPolynomial sign_preserving_remainder(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    std::vector<BigInt> r(a.coefficients());
    const auto& lb = b.leading();
    const BigInt scale = abs(lb);
    const int lb_sign = sgn(lb);
    const auto db = static_cast<std::size_t>(b.degree());
    while (!r.empty() && r.size() - 1 >= db) {
        const auto shift = r.size() - 1 - db;
        const BigInt lead = r.back();
        for (auto& c : r) c *= scale;
        for (std::size_t k = 0; k <= db; ++k) {
            if (lb_sign > 0) r[k + shift] -= lead * b.coefficient(k);
            else r[k + shift] += lead * b.coefficient(k);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return IntegerPolynomial(std::move(r));
}

IntegerPolynomial gcd(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    auto x = a.primitive_part();
    auto y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        auto r = sign_preserving_remainder(x, y).primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

IntegerPolynomial exact_divide(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (a.degree() < b.degree()) {
        if (a.is_zero()) return {};
        throw std::domain_error("inexact polynomial division");
    }
    std::vector<BigInt> r(a.coefficients());
    std::vector<BigInt> q(r.size() - b.coefficients().size() + 1);
    const auto db = static_cast<std::size_t>(b.degree());
    for (std::size_t shift = q.size(); shift-- > 0;) {
        const auto& lead = r[shift + db];
        if (lead == 0) continue;
        if (!mpz_divisible_p(lead.get_mpz_t(), b.leading().get_mpz_t())) {
            throw std::domain_error("inexact polynomial division");
        }
        BigInt t;
        mpz_divexact(t.get_mpz_t(), lead.get_mpz_t(), b.leading().get_mpz_t());
        for (std::size_t k = 0; k <= db; ++k) r[k + shift] -= t * b.coefficient(k);
        q[shift] = t;
    }
    for (const auto& c : r) {
        if (c != 0) throw std::domain_error("inexact polynomial division");
    }
    return IntegerPolynomial(std::move(q));
}

std::vector<SquareFreeFactor> square_free_decomposition(const IntegerPolynomial& p) {
    std::vector<SquareFreeFactor> out;
    const auto f = p.primitive_part();
    if (f.degree() < 1) return out;
    const auto df = f.derivative();
    const auto a0 = gcd(f, df);
    auto b = exact_divide(f, a0);
    auto c = exact_divide(df, a0);
    auto d = c - b.derivative();
    for (std::size_t k = 1; b.degree() > 0; ++k) {
        const auto a = gcd(b, d);
        if (a.degree() > 0) out.push_back({a, k});
        b = exact_divide(b, a);
        c = exact_divide(d, a);
        d = c - b.derivative();
    }
    return out;
}

SturmChain::SturmChain(const IntegerPolynomial& square_free) {
    if (square_free.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
    chain_.push_back(strip_content(square_free));
    if (square_free.degree() == 0) return;
    chain_.push_back(strip_content(square_free.derivative()));
    while (chain_.back().degree() > 0) {
        auto r = sign_preserving_remainder(chain_[chain_.size() - 2], chain_.back());
        if (r.is_zero()) break;
        chain_.push_back(strip_content(-r));
    }
}

std::size_t SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) signs.push_back(p.sign_at(x));
    return count_variations(signs);
}

std::size_t SturmChain::variations_at_infinity(bool positive) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) signs.push_back(p.sign_at_infinity(positive));
    return count_variations(signs);
}

std::size_t SturmChain::roots_in(const Rational& lo, const Rational& hi) const {
    if (lo > hi) throw std::domain_error("empty interval");
    return variations_at(lo) - variations_at(hi);
}

std::size_t SturmChain::roots_above(const Rational& x) const { return variations_at(x) - variations_at_infinity(true); }

}  // namespace lapdiam

#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace k33lab
{

using Integer = mpz_class;
using Rational = mpq_class;

// Coefficients of y^0, y^1, ... for one vertex count; trailing zeros are trimmed.
using EdgePoly = std::vector<Rational>;

// Truncated mixed exponential generating function
//
//     sum_{n <= nmax} sum_m g_{n,m} y^m x^n / n!
//
// exponential in the vertex variable x, ordinary in the edge variable y.
// What is stored is g_{n,m} itself; the n! normalisation lives in the
// product formulas. Every slice is a finite polynomial in y, with no
// implicit cap on its degree.
//
// The truncation order nmax says which slices are known exactly. Exact
// finite series (monomials, constants, Leg) carry nmax == kExact and are
// zero beyond their last stored slice. Operations propagate nmax from the
// x-valuations of their inputs, so x^5 * N^10 / 5! with N known to order k
// is known to order k + 5.
class BivarSeries
{
public:
    static constexpr int kExact = 1 << 28;

    struct Term {
        int n;
        int m;
        Rational coeff;
    };

    // Zero series known to order nmax.
    explicit BivarSeries(int nmax = kExact);

    // Exact finite series from (n, m, g_{n,m}) terms.
    static BivarSeries polynomial(std::initializer_list<Term> terms);
    static BivarSeries zero(int nmax = kExact)
    {
        return BivarSeries(nmax);
    }
    static BivarSeries one();
    // The single-vertex class X, x.
    static BivarSeries x();
    // The edge counter y at x^0.
    static BivarSeries y();

    int nmax() const noexcept
    {
        return nmax_;
    }
    bool is_exact() const noexcept
    {
        return nmax_ >= kExact;
    }
    // Highest n with a non-empty stored slice, -1 if none.
    int last_slice() const noexcept
    {
        return static_cast<int>(slices_.size()) - 1;
    }
    // Lowest n with a nonzero slice; nmax + 1 (or kExact) when everything known is zero.
    int valuation() const noexcept;

    const EdgePoly &slice(int n) const;
    const Rational &coeff(int n, int m) const;
    void set_coeff(int n, int m, const Rational &value);
    void add_to_coeff(int n, int m, const Rational &value);
    void set_slice(int n, EdgePoly poly);

    // Largest m with nonzero g_{n,m}, -1 for an empty slice.
    int edge_degree(int n) const;
    // g_n(1) = sum_m g_{n,m}.
    Rational total(int n) const;

    BivarSeries truncated(int nmax) const;

    bool has_integer_coefficients() const;
    bool has_nonnegative_coefficients() const;

    // Visits every nonzero coefficient in (n, m) order.
    void for_each_term(const std::function<void(int, int, const Rational &)> &f) const;

    BivarSeries &operator+=(const BivarSeries &other);
    BivarSeries &operator-=(const BivarSeries &other);
    BivarSeries operator-() const;

    // Coefficientwise equality up to the smaller truncation order.
    friend bool operator==(const BivarSeries &a, const BivarSeries &b);

private:
    void check_n(int n) const;
    void trim();

    int nmax_;
    std::vector<EdgePoly> slices_;
};

std::ostream &operator<<(std::ostream &os, const BivarSeries &s);

BivarSeries operator+(BivarSeries a, const BivarSeries &b);
BivarSeries operator-(BivarSeries a, const BivarSeries &b);
// EGF product: binomial convolution in n, ordinary convolution in m.
BivarSeries operator*(const BivarSeries &a, const BivarSeries &b);

BivarSeries add(const BivarSeries &a, const BivarSeries &b);
BivarSeries mul(const BivarSeries &a, const BivarSeries &b);
BivarSeries scale(const BivarSeries &a, const Rational &c);
BivarSeries pow(const BivarSeries &a, unsigned k);

// sum_k F^k / k!. F must have an empty x^0 slice, so each slice stays a
// polynomial in y; a nonzero y-part at x^0 is rejected.
BivarSeries exp(const BivarSeries &f);

BivarSeries deriv_y(const BivarSeries &f);
BivarSeries integrate_y(const BivarSeries &f);
// EGF shift: slice n of the result is slice n + 1 of f.
BivarSeries deriv_x(const BivarSeries &f);

// Ordinary multiplication by x^k.
BivarSeries mul_x_power(const BivarSeries &f, int k);
// Ordinary division by x^k; slices below k must vanish.
BivarSeries div_x_power(const BivarSeries &f, int k);

// H = F / G. G(0,0) must be nonzero. Without y_cap the x^0 slice of G must be
// a constant; with y_cap every slice of the result is cut at y-degree y_cap.
BivarSeries divide(const BivarSeries &f, const BivarSeries &g, std::optional<int> y_cap = std::nullopt);

// Memoised powers G^0, G^1, ... truncated to a fixed order, shared across
// repeated substitutions into the same inner series.
class PowerTable
{
public:
    PowerTable(const BivarSeries &base, int order);

    const BivarSeries &base() const noexcept
    {
        return powers_[1];
    }
    int order() const noexcept
    {
        return order_;
    }
    const BivarSeries &power(int k);

private:
    int order_;
    std::vector<BivarSeries> powers_;
};

// F(x, G(x,y)). G must vanish at (0,0).
BivarSeries compose_y(const BivarSeries &f, const BivarSeries &g);
BivarSeries compose_y(const BivarSeries &f, PowerTable &g_powers);

// F(G(x,y), y). G must have an empty x^0 slice.
BivarSeries compose_x(const BivarSeries &f, const BivarSeries &g);

const Integer &binomial(int n, int k);
const Integer &factorial(int n);

// Throws IntegralityError unless every coefficient is a non-negative integer.
void require_class_counts(const BivarSeries &s, std::string_view what);

} // namespace k33lab

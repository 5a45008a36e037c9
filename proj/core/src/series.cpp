#include <k33lab/series.hpp>

#include <algorithm>
#include <deque>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include <k33lab/errors.hpp>

namespace k33lab
{

namespace
{

const EdgePoly kEmptyPoly{};
const Rational kZero{0};

int sat_add(int a, int b)
{
    if (a >= BivarSeries::kExact || b >= BivarSeries::kExact) {
        return BivarSeries::kExact;
    }
    return std::min(a + b, BivarSeries::kExact);
}

int sat_mul(int a, int b)
{
    if (a == 0 || b == 0) {
        return 0;
    }
    if (a >= BivarSeries::kExact || b >= BivarSeries::kExact) {
        return BivarSeries::kExact;
    }
    const long long p = static_cast<long long>(a) * b;
    return p >= BivarSeries::kExact ? BivarSeries::kExact : static_cast<int>(p);
}

void trim_poly(EdgePoly &p)
{
    while (!p.empty() && sgn(p.back()) == 0) {
        p.pop_back();
    }
}

// out += s * a * b
void accumulate_product(EdgePoly &out, const EdgePoly &a, const EdgePoly &b, const Rational &s,
                        std::optional<int> y_cap = std::nullopt)
{
    if (a.empty() || b.empty() || sgn(s) == 0) {
        return;
    }
    std::size_t len = a.size() + b.size() - 1;
    if (y_cap) {
        len = std::min(len, static_cast<std::size_t>(*y_cap + 1));
    }
    if (out.size() < len) {
        out.resize(len);
    }
    Rational sa;
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (sgn(a[i]) == 0) {
            continue;
        }
        sa = a[i] * s;
        const std::size_t jmax = std::min(b.size(), len - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (sgn(b[j]) != 0) {
                out[i + j] += sa * b[j];
            }
        }
    }
}

void accumulate_scaled(EdgePoly &out, const EdgePoly &a, const Rational &s)
{
    if (a.empty() || sgn(s) == 0) {
        return;
    }
    if (out.size() < a.size()) {
        out.resize(a.size());
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0) {
            out[i] += s * a[i];
        }
    }
}

void check_order(int nmax)
{
    if (nmax < 0) {
        throw InputError("truncation order must be non-negative, got " + std::to_string(nmax));
    }
}

} // namespace

BivarSeries::BivarSeries(int nmax) : nmax_(std::min(nmax, kExact))
{
    check_order(nmax);
}

BivarSeries BivarSeries::polynomial(std::initializer_list<Term> terms)
{
    BivarSeries s;
    for (const auto &t : terms) {
        s.add_to_coeff(t.n, t.m, t.coeff);
    }
    return s;
}

BivarSeries BivarSeries::one()
{
    return polynomial({{0, 0, 1}});
}

BivarSeries BivarSeries::x()
{
    return polynomial({{1, 0, 1}});
}

BivarSeries BivarSeries::y()
{
    return polynomial({{0, 1, 1}});
}

int BivarSeries::valuation() const noexcept
{
    for (std::size_t n = 0; n < slices_.size(); ++n) {
        if (!slices_[n].empty()) {
            return static_cast<int>(n);
        }
    }
    return is_exact() ? kExact : nmax_ + 1;
}

void BivarSeries::check_n(int n) const
{
    if (n < 0 || n > nmax_) {
        throw InputError("slice n=" + std::to_string(n) + " is outside the truncation order "
                         + std::to_string(nmax_));
    }
}

const EdgePoly &BivarSeries::slice(int n) const
{
    check_n(n);
    return n < static_cast<int>(slices_.size()) ? slices_[n] : kEmptyPoly;
}

const Rational &BivarSeries::coeff(int n, int m) const
{
    const auto &p = slice(n);
    return m >= 0 && m < static_cast<int>(p.size()) ? p[m] : kZero;
}

void BivarSeries::set_coeff(int n, int m, const Rational &value)
{
    check_n(n);
    if (m < 0) {
        throw InputError("edge count must be non-negative");
    }
    if (n >= static_cast<int>(slices_.size())) {
        if (sgn(value) == 0) {
            return;
        }
        slices_.resize(n + 1);
    }
    auto &p = slices_[n];
    if (m >= static_cast<int>(p.size())) {
        if (sgn(value) == 0) {
            return;
        }
        p.resize(m + 1);
    }
    p[m] = value;
    trim_poly(p);
    trim();
}

void BivarSeries::add_to_coeff(int n, int m, const Rational &value)
{
    set_coeff(n, m, coeff(n, m) + value);
}

void BivarSeries::set_slice(int n, EdgePoly poly)
{
    check_n(n);
    trim_poly(poly);
    if (n >= static_cast<int>(slices_.size())) {
        if (poly.empty()) {
            return;
        }
        slices_.resize(n + 1);
    }
    slices_[n] = std::move(poly);
    trim();
}

void BivarSeries::trim()
{
    while (!slices_.empty() && slices_.back().empty()) {
        slices_.pop_back();
    }
}

int BivarSeries::edge_degree(int n) const
{
    return static_cast<int>(slice(n).size()) - 1;
}

Rational BivarSeries::total(int n) const
{
    Rational t = 0;
    for (const auto &c : slice(n)) {
        t += c;
    }
    return t;
}

BivarSeries BivarSeries::truncated(int nmax) const
{
    check_order(nmax);
    if (nmax > nmax_) {
        throw InputError("cannot extend a series known to order " + std::to_string(nmax_) + " to order "
                         + std::to_string(nmax));
    }
    BivarSeries r(nmax);
    r.slices_.assign(slices_.begin(), slices_.begin() + std::min<std::size_t>(slices_.size(), nmax + 1));
    r.trim();
    return r;
}

bool BivarSeries::has_integer_coefficients() const
{
    for (const auto &p : slices_) {
        for (const auto &c : p) {
            if (c.get_den() != 1) {
                return false;
            }
        }
    }
    return true;
}

bool BivarSeries::has_nonnegative_coefficients() const
{
    for (const auto &p : slices_) {
        for (const auto &c : p) {
            if (sgn(c) < 0) {
                return false;
            }
        }
    }
    return true;
}

void BivarSeries::for_each_term(const std::function<void(int, int, const Rational &)> &f) const
{
    for (std::size_t n = 0; n < slices_.size(); ++n) {
        for (std::size_t m = 0; m < slices_[n].size(); ++m) {
            if (sgn(slices_[n][m]) != 0) {
                f(static_cast<int>(n), static_cast<int>(m), slices_[n][m]);
            }
        }
    }
}

BivarSeries &BivarSeries::operator+=(const BivarSeries &other)
{
    nmax_ = std::min(nmax_, other.nmax_);
    if (static_cast<int>(slices_.size()) > nmax_ + 1) {
        slices_.resize(nmax_ + 1);
    }
    const int top = std::min(other.last_slice(), nmax_);
    if (top >= static_cast<int>(slices_.size())) {
        slices_.resize(top + 1);
    }
    for (int n = 0; n <= top; ++n) {
        accumulate_scaled(slices_[n], other.slices_[n], Rational(1));
        trim_poly(slices_[n]);
    }
    trim();
    return *this;
}

BivarSeries &BivarSeries::operator-=(const BivarSeries &other)
{
    return *this += -other;
}

BivarSeries BivarSeries::operator-() const
{
    BivarSeries r = *this;
    for (auto &p : r.slices_) {
        for (auto &c : p) {
            c = -c;
        }
    }
    return r;
}

bool operator==(const BivarSeries &a, const BivarSeries &b)
{
    const int top = std::min(a.nmax(), b.nmax());
    const int hi = std::min(top, std::max(a.last_slice(), b.last_slice()));
    for (int n = 0; n <= hi; ++n) {
        if (a.slice(n) != b.slice(n)) {
            return false;
        }
    }
    return true;
}

std::ostream &operator<<(std::ostream &os, const BivarSeries &s)
{
    bool first = true;
    s.for_each_term([&](int n, int m, const Rational &c) {
        os << (first ? "" : " + ") << c << "*y^" << m << "*x^" << n << "/" << n << "!";
        first = false;
    });
    if (first) {
        os << "0";
    }
    if (s.is_exact()) {
        os << " (exact)";
    } else {
        os << " + O(x^" << s.nmax() + 1 << ")";
    }
    return os;
}

BivarSeries operator+(BivarSeries a, const BivarSeries &b)
{
    a += b;
    return a;
}

BivarSeries operator-(BivarSeries a, const BivarSeries &b)
{
    a -= b;
    return a;
}

BivarSeries add(const BivarSeries &a, const BivarSeries &b)
{
    return a + b;
}

BivarSeries mul(const BivarSeries &a, const BivarSeries &b)
{
    const int va = a.valuation();
    const int vb = b.valuation();
    const int order = std::min(sat_add(a.nmax(), vb), sat_add(b.nmax(), va));
    BivarSeries r(order);
    if (va >= BivarSeries::kExact || vb >= BivarSeries::kExact) {
        return r;
    }
    const int hia = a.last_slice();
    const int hib = b.last_slice();
    const int top = std::min(order, hia + hib);
    for (int n = va + vb; n <= top; ++n) {
        EdgePoly acc;
        for (int k = std::max(va, n - hib); k <= std::min(n - vb, hia); ++k) {
            // Both indices lie inside the known range whenever n <= order.
            accumulate_product(acc, a.slice(k), b.slice(n - k), Rational(binomial(n, k)));
        }
        r.set_slice(n, std::move(acc));
    }
    return r;
}

BivarSeries operator*(const BivarSeries &a, const BivarSeries &b)
{
    return mul(a, b);
}

BivarSeries scale(const BivarSeries &a, const Rational &c)
{
    BivarSeries r(a.nmax());
    for (int n = 0; n <= a.last_slice(); ++n) {
        EdgePoly p;
        accumulate_scaled(p, a.slice(n), c);
        r.set_slice(n, std::move(p));
    }
    return r;
}

BivarSeries pow(const BivarSeries &a, unsigned k)
{
    BivarSeries result = BivarSeries::one();
    BivarSeries base = a;
    bool have = false;
    while (k > 0) {
        if (k & 1U) {
            result = have ? mul(result, base) : base;
            have = true;
        }
        k >>= 1U;
        if (k > 0) {
            base = mul(base, base);
        }
    }
    if (!have) {
        // a^0 is exactly one, but keep the caller's truncation.
        return a.is_exact() ? result : result.truncated(a.nmax());
    }
    return result;
}

BivarSeries exp(const BivarSeries &f)
{
    if (!f.slice(0).empty()) {
        throw InputError("exp: the x^0 slice of the argument must vanish");
    }
    const int v = f.valuation();
    if (v >= BivarSeries::kExact) {
        return BivarSeries::one();
    }
    if (f.is_exact()) {
        throw InputError("exp: the argument is exact and nonzero; truncate it first");
    }
    // H' = F' H in the x-direction: h_{n+1} = sum_k C(n,k) f_{k+1} h_{n-k}.
    const int order = f.nmax();
    std::vector<EdgePoly> h(order + 1);
    h[0] = EdgePoly{Rational(1)};
    for (int n = 0; n + 1 <= order; ++n) {
        EdgePoly acc;
        for (int k = 0; k <= n; ++k) {
            if (k + 1 > f.last_slice()) {
                break;
            }
            accumulate_product(acc, f.slice(k + 1), h[n - k], Rational(binomial(n, k)));
        }
        trim_poly(acc);
        h[n + 1] = std::move(acc);
    }
    BivarSeries r(order);
    for (int n = 0; n <= order; ++n) {
        r.set_slice(n, std::move(h[n]));
    }
    return r;
}

BivarSeries deriv_y(const BivarSeries &f)
{
    BivarSeries r(f.nmax());
    for (int n = 0; n <= f.last_slice(); ++n) {
        const auto &p = f.slice(n);
        EdgePoly q;
        for (std::size_t m = 1; m < p.size(); ++m) {
            q.push_back(p[m] * static_cast<long>(m));
        }
        r.set_slice(n, std::move(q));
    }
    return r;
}

BivarSeries integrate_y(const BivarSeries &f)
{
    BivarSeries r(f.nmax());
    for (int n = 0; n <= f.last_slice(); ++n) {
        const auto &p = f.slice(n);
        EdgePoly q;
        if (!p.empty()) {
            q.resize(p.size() + 1);
            for (std::size_t m = 0; m < p.size(); ++m) {
                q[m + 1] = p[m] / static_cast<long>(m + 1);
            }
        }
        r.set_slice(n, std::move(q));
    }
    return r;
}

BivarSeries deriv_x(const BivarSeries &f)
{
    if (f.nmax() < 1) {
        throw InputError("deriv_x needs a series known to order at least 1");
    }
    BivarSeries r(f.is_exact() ? BivarSeries::kExact : f.nmax() - 1);
    for (int n = 1; n <= f.last_slice(); ++n) {
        r.set_slice(n - 1, f.slice(n));
    }
    return r;
}

BivarSeries mul_x_power(const BivarSeries &f, int k)
{
    if (k < 0) {
        throw InputError("mul_x_power: negative exponent");
    }
    BivarSeries r(sat_add(f.nmax(), k));
    for (int n = 0; n <= f.last_slice(); ++n) {
        // x^k * x^n / n! = [(n+k)! / n!] x^{n+k} / (n+k)!
        EdgePoly p;
        accumulate_scaled(p, f.slice(n), Rational(factorial(n + k) / factorial(n)));
        r.set_slice(n + k, std::move(p));
    }
    return r;
}

BivarSeries div_x_power(const BivarSeries &f, int k)
{
    if (k < 0) {
        throw InputError("div_x_power: negative exponent");
    }
    if (f.nmax() < k) {
        throw InputError("div_x_power: series known only to order " + std::to_string(f.nmax()));
    }
    for (int n = 0; n < k && n <= f.last_slice(); ++n) {
        if (!f.slice(n).empty()) {
            throw InputError("div_x_power: slice x^" + std::to_string(n) + " does not vanish");
        }
    }
    BivarSeries r(f.is_exact() ? BivarSeries::kExact : f.nmax() - k);
    for (int n = k; n <= f.last_slice(); ++n) {
        EdgePoly p;
        Rational c(factorial(n - k), factorial(n));
        c.canonicalize();
        accumulate_scaled(p, f.slice(n), c);
        r.set_slice(n - k, std::move(p));
    }
    return r;
}

BivarSeries divide(const BivarSeries &f, const BivarSeries &g, std::optional<int> y_cap)
{
    const EdgePoly &g0 = g.slice(0);
    if (g0.empty() || sgn(g0[0]) == 0) {
        throw InputError("divide: the divisor has no constant term");
    }
    if (!y_cap && g0.size() > 1) {
        throw InputError("divide: the divisor's x^0 slice depends on y; an explicit y-degree cap is required");
    }
    if (y_cap && *y_cap < 0) {
        throw InputError("divide: negative y-degree cap");
    }
    const int vf = f.valuation();
    const int order = std::min(f.nmax(), sat_add(g.nmax(), vf));
    if (order >= BivarSeries::kExact) {
        if (vf >= BivarSeries::kExact) {
            return BivarSeries::zero();
        }
        throw InputError("divide: exact operands give an infinite quotient; truncate one of them");
    }

    // Inverse of g_0(y) modulo y^{cap+1}.
    EdgePoly inv0;
    if (!y_cap) {
        inv0 = EdgePoly{1 / g0[0]};
    } else {
        const int cap = *y_cap;
        inv0.assign(cap + 1, Rational(0));
        inv0[0] = 1 / g0[0];
        for (int i = 1; i <= cap; ++i) {
            Rational s = 0;
            for (int j = 1; j <= i && j < static_cast<int>(g0.size()); ++j) {
                s += g0[j] * inv0[i - j];
            }
            inv0[i] = -s * inv0[0];
        }
        trim_poly(inv0);
    }

    std::vector<EdgePoly> h(order + 1);
    for (int n = 0; n <= order; ++n) {
        EdgePoly acc;
        if (n <= f.last_slice()) {
            acc = f.slice(n);
            if (y_cap && static_cast<int>(acc.size()) > *y_cap + 1) {
                acc.resize(*y_cap + 1);
            }
        }
        for (int k = 0; k < n; ++k) {
            if (n - k <= g.last_slice()) {
                accumulate_product(acc, h[k], g.slice(n - k), Rational(-binomial(n, k)), y_cap);
            }
        }
        EdgePoly out;
        accumulate_product(out, acc, inv0, Rational(1), y_cap);
        trim_poly(out);
        h[n] = std::move(out);
    }
    BivarSeries r(order);
    for (int n = 0; n <= order; ++n) {
        r.set_slice(n, std::move(h[n]));
    }
    return r;
}

PowerTable::PowerTable(const BivarSeries &base, int order) : order_(order)
{
    powers_.push_back(BivarSeries::one().truncated(order));
    powers_.push_back(base.nmax() > order ? base.truncated(order) : base);
}

const BivarSeries &PowerTable::power(int k)
{
    while (static_cast<int>(powers_.size()) <= k) {
        BivarSeries next = mul(powers_.back(), powers_[1]);
        if (next.nmax() > order_) {
            next = next.truncated(order_);
        }
        powers_.push_back(std::move(next));
    }
    return powers_[k];
}

BivarSeries compose_y(const BivarSeries &f, PowerTable &g_powers)
{
    const BivarSeries &g = g_powers.base();
    if (sgn(g.coeff(0, 0)) != 0) {
        throw InputError("compose_y: the inner series must vanish at (0,0)");
    }
    const int vf = f.valuation();
    int order = std::min(f.nmax(), sat_add(g.nmax(), vf));
    if (vf >= BivarSeries::kExact) {
        return BivarSeries(order);
    }
    if (order > sat_add(g_powers.order(), vf)) {
        order = sat_add(g_powers.order(), vf);
    }
    BivarSeries r(order);
    std::vector<EdgePoly> acc;
    const int top_k = std::min(order, f.last_slice());
    for (int k = vf; k <= top_k; ++k) {
        const EdgePoly &fk = f.slice(k);
        for (std::size_t m = 0; m < fk.size(); ++m) {
            if (sgn(fk[m]) == 0) {
                continue;
            }
            const BivarSeries &gm = g_powers.power(static_cast<int>(m));
            const int jtop = std::min(gm.last_slice(), order - k);
            if (static_cast<int>(acc.size()) <= k + jtop) {
                acc.resize(k + jtop + 1);
            }
            for (int j = 0; j <= jtop; ++j) {
                accumulate_scaled(acc[k + j], gm.slice(j), Rational(fk[m] * binomial(k + j, k)));
            }
        }
    }
    for (std::size_t n = 0; n < acc.size(); ++n) {
        r.set_slice(static_cast<int>(n), std::move(acc[n]));
    }
    return r;
}

BivarSeries compose_y(const BivarSeries &f, const BivarSeries &g)
{
    const int vf = f.valuation();
    int order = std::min(f.nmax(), sat_add(g.nmax(), vf));
    if (order >= BivarSeries::kExact) {
        // Exact polynomial in; the result is exact and its span is bounded by the inputs.
        order = BivarSeries::kExact;
    }
    const int power_order = order >= BivarSeries::kExact ? BivarSeries::kExact : std::max(0, order - std::min(vf, order));
    PowerTable table(g, power_order);
    return compose_y(f, table);
}

BivarSeries compose_x(const BivarSeries &f, const BivarSeries &g)
{
    if (!g.slice(0).empty()) {
        throw InputError("compose_x: the inner series must have an empty x^0 slice");
    }
    const int vg = g.valuation();
    int order = f.nmax();
    for (int k = std::max(1, f.valuation()); k <= std::min(order, f.last_slice()); ++k) {
        if (!f.slice(k).empty()) {
            order = std::min(order, sat_add(g.nmax(), sat_mul(k - 1, vg)));
        }
    }
    BivarSeries r(order);
    if (f.last_slice() < 0) {
        return r;
    }
    r.set_slice(0, f.slice(0));
    if (vg >= BivarSeries::kExact) {
        return r;
    }
    const int g_order = std::min(g.nmax(), order);
    BivarSeries gk = BivarSeries::one();
    const BivarSeries gt = g.nmax() > g_order ? g.truncated(g_order) : g;
    std::vector<EdgePoly> acc;
    for (int k = 1; k <= std::min(order, f.last_slice()); ++k) {
        gk = mul(gk, gt);
        if (gk.nmax() > order) {
            gk = gk.truncated(order);
        }
        const EdgePoly &fk = f.slice(k);
        if (fk.empty()) {
            continue;
        }
        const Rational inv_fact(1, factorial(k));
        const int jtop = std::min(gk.last_slice(), order);
        if (static_cast<int>(acc.size()) <= jtop) {
            acc.resize(jtop + 1);
        }
        for (int j = 0; j <= jtop; ++j) {
            accumulate_product(acc[j], fk, gk.slice(j), inv_fact);
        }
    }
    for (std::size_t n = 0; n < acc.size(); ++n) {
        EdgePoly p = r.slice(static_cast<int>(n));
        accumulate_scaled(p, acc[n], Rational(1));
        r.set_slice(static_cast<int>(n), std::move(p));
    }
    return r;
}

const Integer &binomial(int n, int k)
{
    // deque: references handed out stay valid while the table grows.
    static std::mutex mu;
    static std::deque<std::deque<Integer>> rows;
    static const Integer zero = 0;
    if (n < 0 || k < 0 || k > n) {
        return zero;
    }
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(rows.size()) <= n) {
        const std::size_t r = rows.size();
        std::deque<Integer> row(r + 1);
        row[0] = 1;
        row[r] = 1;
        for (std::size_t i = 1; i < r; ++i) {
            row[i] = rows[r - 1][i - 1] + rows[r - 1][i];
        }
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

const Integer &factorial(int n)
{
    static std::mutex mu;
    static std::deque<Integer> table{Integer(1)};
    if (n < 0) {
        throw InputError("factorial of a negative number");
    }
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(table.size()) <= n) {
        table.push_back(table.back() * static_cast<unsigned long>(table.size()));
    }
    return table[n];
}

void require_class_counts(const BivarSeries &s, std::string_view what)
{
    s.for_each_term([&](int n, int m, const Rational &c) {
        if (c.get_den() != 1 || sgn(c) < 0) {
            std::ostringstream os;
            os << what << ": coefficient at (n=" << n << ", m=" << m << ") is " << c
               << ", not a non-negative integer";
            throw IntegralityError(os.str());
        }
    });
}

} // namespace k33lab

#include "longcycle/bounds.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>

namespace longcycle {

namespace mp = boost::multiprecision;

BigCount ExactPow::exact_integer() const {
    if (!integral()) throw std::logic_error("ExactPow: exponent is not a nonnegative integer");
    return coeff * bigpow(radicand, static_cast<unsigned>(num / den));
}

double ExactPow::to_double() const {
    double lc = mp::log(mp::cpp_bin_float_100(coeff)).convert_to<double>();
    double lr = mp::log(mp::cpp_bin_float_100(radicand)).convert_to<double>();
    return std::exp(lc + lr * static_cast<double>(num) / static_cast<double>(den));
}

std::string ExactPow::describe() const {
    return coeff.str() + " * " + radicand.str() + "^(" + std::to_string(num) + "/" +
           std::to_string(den) + ")";
}

ExactPow haythorpe_bound(long long n, int r) {
    if (r < 3 || n < 1) throw std::invalid_argument("haythorpe_bound: need r >= 3, n >= 1");
    ExactPow p;
    p.coeff = BigCount(r - 1) * (r - 1);
    p.radicand = factorial(r - 2);
    p.num = n;
    p.den = r + 1;
    return p;
}

ExactPow goedgebeur_bound(long long n, int r) {
    if (r < 5) throw std::invalid_argument("goedgebeur_bound: need r >= 5");
    ExactPow p;
    p.coeff = 2 * bigpow(factorial(r - 1), static_cast<unsigned>(r - 2));
    p.radicand = factorial(r - 2);
    p.num = n - static_cast<long long>(r) * r - r + 4;
    p.den = r + 1;
    return p;
}

BigCount new_base_radicand(int r) {
    return BigCount(2 * r - 8) * bigpow(factorial(r - 4), 2) * factorial(r - 1);
}

std::vector<BoundRow> comparison_table(int r_min, int r_max) {
    if (r_min < 5) throw std::invalid_argument("comparison_table: need r_min >= 5");
    std::vector<BoundRow> rows;
    for (int r = r_min; r <= r_max; ++r) {
        BoundRow row;
        row.r = r;
        row.old_radicand = factorial(r - 2);
        row.old_index = r + 1;
        row.new_radicand = new_base_radicand(r);
        row.new_index = 3 * r + 1;
        auto root = [](const BigCount& radicand, int index) {
            double lg = mp::log(mp::cpp_bin_float_100(radicand)).convert_to<double>();
            return std::exp(lg / index);
        };
        row.old_base = root(row.old_radicand, row.old_index);
        row.new_base = root(row.new_radicand, row.new_index);
        rows.push_back(std::move(row));
    }
    return rows;
}

bool verify_base_inequality(int r) {
    if (r < 5) throw std::invalid_argument("verify_base_inequality: need r >= 5");
    const unsigned rp1 = static_cast<unsigned>(r + 1);
    BigCount lhs = bigpow(BigCount(2 * r - 8), rp1) *
                   bigpow(factorial(r - 4), 2 * rp1) *
                   bigpow(BigCount(r - 1), rp1) *
                   bigpow(factorial(r - 2), rp1);
    BigCount rhs = bigpow(factorial(r - 2), static_cast<unsigned>(3 * r + 1));
    return lhs < rhs;
}

BigCount predicted_chain_count(const BigCount& c1, const BigCount& c2, const BigCount& c3,
                               int k) {
    if (k < 1) throw std::invalid_argument("predicted_chain_count: need k >= 1");
    return c1 * c2 * bigpow(c3, static_cast<unsigned>(k - 1));
}

bool float_matches_root(double approx, const BigCount& radicand, int index, double tol) {
    using Rational = mp::cpp_rational;
    auto to_rational = [](double x) {
        // decimal-exact conversion through a scaled integer
        long long scaled = static_cast<long long>(std::llround(x * 1e15));
        return Rational(scaled, 1000000000000000LL);
    };
    Rational lo = to_rational(approx - tol);
    Rational hi = to_rational(approx + tol);
    if (lo < 0) lo = 0;
    auto rational_pow = [](Rational base, int e) {
        Rational out = 1;
        for (int i = 0; i < e; ++i) out *= base;
        return out;
    };
    Rational target(radicand);
    return rational_pow(lo, index) < target && target < rational_pow(hi, index);
}

} // namespace longcycle

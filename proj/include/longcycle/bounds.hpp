#pragma once

#include <string>
#include <vector>

#include "longcycle/bigcount.hpp"

namespace longcycle {

/// Value of the form coeff * radicand^(num/den), kept exact.
struct ExactPow {
    BigCount coeff = 1;
    BigCount radicand = 1;
    long long num = 0;
    long long den = 1;

    /// Exact integer value when the exponent is a nonnegative integer.
    bool integral() const { return den != 0 && num % den == 0 && num / den >= 0; }
    BigCount exact_integer() const;
    double to_double() const;
    std::string describe() const;
};

/// Haythorpe's conjectured lower bound (r-1)^2 ((r-2)!)^(n/(r+1)).
ExactPow haythorpe_bound(long long n, int r);

/// Goedgebeur et al. upper bound 2((r-1)!)^(r-2) ((r-2)!)^((n-r^2-r+4)/(r+1)).
ExactPow goedgebeur_bound(long long n, int r);

/// One row of the old-versus-new asymptotic base comparison.
struct BoundRow {
    int r = 0;
    BigCount old_radicand;  // (r-2)!, index r+1
    int old_index = 0;
    BigCount new_radicand;  // (2r-8)((r-4)!)^2 (r-1)!, index 3r+1
    int new_index = 0;
    double old_base = 0.0;
    double new_base = 0.0;
};

std::vector<BoundRow> comparison_table(int r_min, int r_max);

/// Exact check that the new exponent base beats the old one:
/// (2r-8)^(r+1) ((r-4)!)^(2r+2) (r-1)^(r+1) ((r-2)!)^(r+1) < ((r-2)!)^(3r+1),
/// evaluated in integer arithmetic only.
bool verify_base_inequality(int r);

/// c1 * c2 * c3^(k-1).
BigCount predicted_chain_count(const BigCount& c1, const BigCount& c2, const BigCount& c3,
                               int k);

/// True when |approx - radicand^(1/index)| < tol, decided by integer
/// bracketing of the root (no floating-point roots).
bool float_matches_root(double approx, const BigCount& radicand, int index, double tol);

} // namespace longcycle

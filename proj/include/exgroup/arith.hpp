#pragma once

#include <string>
#include <vector>

#include "exgroup/error.hpp"

namespace exg {

// Deterministic trial-division arithmetic; adequate for the desk scale used
// here (n up to ~10^7).
bool is_prime(long long n);
bool is_prime_power(long long n);
bool is_perfect_power(long long n); // n = a^b with a >= 2, b >= 2

struct ClaimResult {
    bool ok = false;
    long long n = 0;
    std::string reason; // set when !ok
};

/// n = p(p-1)/6 must be odd, composite and not a perfect power.
/// Requires p prime with p = 7 (mod 12); errc::bad_prime otherwise.
ClaimResult order_claim_check(long long p);

struct QqResult {
    bool ok = false;
    long long offending_q = 0; // set when !ok
};

/// Excludes n = q(q-1)/2 with q a prime power, q = 3 (mod 4). Decided by
/// exact integer discriminant arithmetic on q^2 - q - 2n = 0.
QqResult qq_halves_exclusion(long long n);

/// True iff n avoids {31*5, 11*5, 23*11, 29*7, 59*29, 3*19*9, 15}.
bool sporadic_exclusion(long long n);

/// True iff the list has >= 2 entries, all equal and >= 3 (the direct-product
/// criterion for a non-B-group).
bool product_non_b_predicate(const std::vector<long long>& factor_orders);

enum class ArithVerdict { arithmetic_pass, not_established };

const char* arith_verdict_name(ArithVerdict v);

struct ObstructionReport {
    long long p = 0;
    long long n = 0;
    bool claim_ok = false;
    std::string claim_reason;
    bool qq_ok = false;
    long long offending_q = 0;
    bool sporadic_ok = false;
    ArithVerdict verdict = ArithVerdict::not_established;
};

/// Combines the three exclusion checks. The rendered report states that the
/// full B-group conclusion additionally relies on cited classification
/// results that this toolkit does not reprove.
ObstructionReport obstruction_report(long long p);

} // namespace exg

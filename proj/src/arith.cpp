#include "exgroup/arith.hpp"

#include <cmath>

namespace exg {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

bool is_prime_power(long long n) {
    if (n < 2) return false;
    long long f = 2;
    while (f * f <= n && n % f != 0) ++f;
    if (f * f > n) return true; // n itself prime
    while (n % f == 0) n /= f;
    return n == 1;
}

namespace {

long long integer_root(long long n, int b) {
    long long r = llround(std::pow(double(n), 1.0 / b));
    for (long long c = std::max(1LL, r - 2); c <= r + 2; ++c) {
        long long pw = 1;
        bool over = false;
        for (int i = 0; i < b && !over; ++i) {
            pw *= c;
            if (pw > n) over = true;
        }
        if (!over && pw == n) return c;
    }
    return -1;
}

} // namespace

bool is_perfect_power(long long n) {
    if (n < 4) return false;
    for (int b = 2; (1LL << b) <= n; ++b)
        if (integer_root(n, b) >= 2) return true;
    return false;
}

ClaimResult order_claim_check(long long p) {
    require(is_prime(p) && p % 12 == 7, errc::bad_prime,
            std::to_string(p) + " is not a prime congruent to 7 mod 12");
    ClaimResult out;
    out.n = p * (p - 1) / 6;
    if (out.n % 2 == 0) {
        out.reason = "n = " + std::to_string(out.n) + " is even";
        return out;
    }
    if (is_prime(out.n)) {
        out.reason = "n = " + std::to_string(out.n) + " is prime";
        return out;
    }
    if (out.n == 1) {
        out.reason = "n = 1";
        return out;
    }
    if (is_perfect_power(out.n)) {
        out.reason = "n = " + std::to_string(out.n) + " is a perfect power";
        return out;
    }
    out.ok = true;
    return out;
}

QqResult qq_halves_exclusion(long long n) {
    require(n >= 1, errc::invalid_parameters, "n must be positive");
    const long long disc = 1 + 8 * n;
    long long s = llround(std::sqrt(double(disc)));
    while (s * s > disc) --s;
    while ((s + 1) * (s + 1) <= disc) ++s;
    if (s * s != disc) return {true, 0};
    const long long q = (1 + s) / 2; // s is odd whenever s^2 = 1 + 8n
    if (q * (q - 1) / 2 != n) return {true, 0};
    if (is_prime_power(q) && q % 4 == 3) return {false, q};
    return {true, 0};
}

bool sporadic_exclusion(long long n) {
    static const long long sporadic[] = {31 * 5, 11 * 5, 23 * 11, 29 * 7, 59 * 29, 3 * 19 * 9, 15};
    for (long long s : sporadic)
        if (n == s) return false;
    return true;
}

bool product_non_b_predicate(const std::vector<long long>& factor_orders) {
    require(!factor_orders.empty(), errc::invalid_parameters, "need at least one factor order");
    if (factor_orders.size() < 2) return false;
    const long long first = factor_orders.front();
    if (first < 3) return false;
    for (long long v : factor_orders)
        if (v != first) return false;
    return true;
}

const char* arith_verdict_name(ArithVerdict v) {
    return v == ArithVerdict::arithmetic_pass ? "ARITHMETIC_PASS" : "NOT_ESTABLISHED";
}

ObstructionReport obstruction_report(long long p) {
    ObstructionReport out;
    out.p = p;
    const ClaimResult claim = order_claim_check(p); // validates p
    out.n = claim.n;
    out.claim_ok = claim.ok;
    out.claim_reason = claim.reason;
    const QqResult qq = qq_halves_exclusion(out.n);
    out.qq_ok = qq.ok;
    out.offending_q = qq.offending_q;
    out.sporadic_ok = sporadic_exclusion(out.n);
    out.verdict = (out.claim_ok && out.qq_ok && out.sporadic_ok) ? ArithVerdict::arithmetic_pass
                                                                 : ArithVerdict::not_established;
    return out;
}

} // namespace exg

#pragma once

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ivg/enumerator.hpp"

namespace ivg {

using BigInt = boost::multiprecision::cpp_int;

// Unnormalized exact fraction, den > 0.  Comparisons cross-multiply; nothing
// here ever rounds.
struct Rational {
    BigInt num;
    BigInt den = 1;
};

[[nodiscard]] auto leq(const Rational& r, const BigInt& x) -> bool;

[[nodiscard]] auto factorial(int n) -> BigInt;

// (2n-1)!! = (2n-1)(2n-3)...3*1, the number of endpoint matchings; empty
// product 1 at n = 0.
[[nodiscard]] auto double_factorial_odd(int n) -> BigInt;

// Checks (2n-1)!! = (2n)! / (2^n n!) and (2n-1)!! <= 2^n n! exactly for all
// 0 <= n <= n_max.
[[nodiscard]] auto verify_identities(int n_max) -> bool;

// k! / 3^(3k), the class-count floor at n = 3k.  k >= 1.
[[nodiscard]] auto lower_bound(int k) -> Rational;

// i_n <= 2^n n!, the coefficient bound behind the generating-series radius
// argument.
[[nodiscard]] auto coefficient_bound_holds(int n, std::uint64_t classes) -> bool;

// Verdict for one computed count: the class count must sit between k!/3^(3k)
// (when n = 3k, k >= 1) and (2n-1)!!.  The log columns are display-only; no
// floating value decides ok.
struct BoundReport {
    int n = 0;
    std::uint64_t classes = 0;
    bool lower_defined = false;
    Rational lower;
    BigInt upper;
    bool ok = false;
    double log_classes = 0.0;  // natural logs
    double log_lower = 0.0;
    double log_upper = 0.0;
    double ratio = 0.0;        // log(i_n) / (n log n), 0 below n = 2
};

[[nodiscard]] auto verify_sandwich(std::span<const CountsRecord> records) -> std::vector<BoundReport>;
[[nodiscard]] auto all_bounds_hold(std::span<const BoundReport> reports) -> bool;

// Natural log for display columns.
[[nodiscard]] auto log_of(const BigInt& x) -> double;

}  // namespace ivg

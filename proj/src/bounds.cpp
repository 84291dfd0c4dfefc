#include "ivg/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ivg {

auto leq(const Rational& r, const BigInt& x) -> bool { return r.num <= x * r.den; }

auto factorial(int n) -> BigInt {
    if (n < 0) throw std::invalid_argument("factorial of negative " + std::to_string(n));
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

auto double_factorial_odd(int n) -> BigInt {
    if (n < 0) throw std::invalid_argument("double factorial of negative index " + std::to_string(n));
    BigInt f = 1;
    for (int i = 3; i <= 2 * n - 1; i += 2) f *= i;
    return f;
}

auto verify_identities(int n_max) -> bool {
    if (n_max < 0) return false;
    BigInt odd = 1;        // (2n-1)!!
    BigInt full = 1;       // (2n)!
    BigInt fact = 1;       // n!
    BigInt two_pow = 1;    // 2^n
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) {
            odd *= 2 * n - 1;
            full *= 2 * n - 1;
            full *= 2 * n;
            fact *= n;
            two_pow <<= 1;
        }
        if (odd * two_pow * fact != full) return false;
        if (odd > two_pow * fact) return false;
    }
    return true;
}

auto lower_bound(int k) -> Rational {
    if (k < 1) throw std::invalid_argument("the lower bound needs k >= 1; got " + std::to_string(k));
    return {factorial(k), boost::multiprecision::pow(BigInt(3), 3 * k)};
}

auto coefficient_bound_holds(int n, std::uint64_t classes) -> bool {
    return BigInt(classes) <= (BigInt(1) << n) * factorial(n);
}

auto log_of(const BigInt& x) -> double {
    if (x <= 0) return 0.0;
    return std::log(x.convert_to<double>());
}

auto verify_sandwich(std::span<const CountsRecord> records) -> std::vector<BoundReport> {
    std::vector<BoundReport> out;
    out.reserve(records.size());
    for (const CountsRecord& rec : records) {
        BoundReport r;
        r.n = rec.n;
        r.classes = rec.classes;
        r.upper = double_factorial_odd(rec.n);
        r.ok = BigInt(rec.classes) <= r.upper;
        if (rec.n >= 3 && rec.n % 3 == 0) {
            r.lower_defined = true;
            r.lower = lower_bound(rec.n / 3);
            r.ok = r.ok && leq(r.lower, BigInt(rec.classes));
            r.log_lower = log_of(r.lower.num) - log_of(r.lower.den);
        }
        r.log_classes = rec.classes > 0 ? std::log(static_cast<double>(rec.classes)) : 0.0;
        r.log_upper = log_of(r.upper);
        if (rec.n >= 2) r.ratio = r.log_classes / (rec.n * std::log(static_cast<double>(rec.n)));
        out.push_back(std::move(r));
    }
    return out;
}

auto all_bounds_hold(std::span<const BoundReport> reports) -> bool {
    for (const BoundReport& r : reports)
        if (!r.ok) return false;
    return true;
}

}  // namespace ivg

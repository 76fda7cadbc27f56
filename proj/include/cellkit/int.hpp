// Exact integer arithmetic helpers shared by the whole library.
// All computations are over arbitrary-precision integers; nothing here
// may silently overflow or fall back to floating point.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace cellkit {

using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return abs_int(a / gcd_int(a, b) * b);
}

// Extended Euclid: returns g = gcd(a,b) and x, y with a*x + b*y = g, g >= 0.
inline Int exgcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int old_r = a, r = b;
    Int old_x = 1, xx = 0;
    Int old_y = 0, yy = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * xx; old_x = xx; xx = t;
        t = old_y - q * yy; old_y = yy; yy = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x;
    y = old_y;
    return old_r;
}

// Quotient q minimizing |a - q*b|, b != 0. Keeps remainders small during
// elimination, which is what keeps coefficient growth in check.
inline Int nearest_quotient(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (r != 0) {
        Int b2 = abs_int(b);
        if (2 * abs_int(r) > b2) q += (r > 0) == (b > 0) ? 1 : -1;
    }
    return q;
}

// Largest power of p dividing n (n > 0), as a number: p^v_p(n).
inline Int p_part(Int n, const Int& p) {
    if (n <= 0) throw std::invalid_argument("p_part: n must be positive");
    Int part = 1;
    while (n % p == 0) {
        n /= p;
        part *= p;
    }
    return part;
}

// Trial-division factorization; intended for the small orders this library
// works with (group orders, invariant factors of small homology groups).
inline std::map<Int, unsigned> factorize(Int n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
    std::map<Int, unsigned> out;
    for (Int d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; d += (d == 2 ? 1 : 2))
        if (n % d == 0) return false;
    return true;
}

// A set of primes, with a distinguished "all primes" value so torsion
// functors can be taken with respect to the full torsion subgroup.
class PrimeSet {
public:
    PrimeSet() = default;

    static PrimeSet all() {
        PrimeSet s;
        s.all_ = true;
        return s;
    }

    static PrimeSet of(std::vector<Int> primes) {
        PrimeSet s;
        for (auto& p : primes) {
            if (!is_prime(p)) throw std::invalid_argument("PrimeSet: not a prime");
            s.primes_.push_back(p);
        }
        std::sort(s.primes_.begin(), s.primes_.end());
        s.primes_.erase(std::unique(s.primes_.begin(), s.primes_.end()), s.primes_.end());
        return s;
    }

    static PrimeSet single(const Int& p) { return of({p}); }

    // Every prime except p.
    static PrimeSet complement_of(const Int& p) {
        if (!is_prime(p)) throw std::invalid_argument("PrimeSet: not a prime");
        PrimeSet s;
        s.all_ = true;
        s.excluded_.push_back(p);
        return s;
    }

    bool is_all() const { return all_ && excluded_.empty(); }
    bool empty() const { return !all_ && primes_.empty(); }

    bool contains(const Int& p) const {
        if (all_) {
            for (const auto& q : excluded_)
                if (q == p) return false;
            return true;
        }
        for (const auto& q : primes_)
            if (q == p) return true;
        return false;
    }

    // P-part of n > 0: the largest divisor supported on primes of this set.
    Int part_of(const Int& n) const {
        if (n <= 0) throw std::invalid_argument("PrimeSet::part_of: n must be positive");
        if (is_all()) return n;
        Int part = 1;
        Int rest = n;
        if (all_) {
            // all primes minus exclusions: strip excluded primes instead
            part = n;
            for (const auto& p : excluded_) {
                while (part % p == 0) part /= p;
            }
            return part;
        }
        for (const auto& p : primes_) {
            while (rest % p == 0) {
                rest /= p;
                part *= p;
            }
        }
        return part;
    }

    bool supports(const Int& n) const { return part_of(n) == n; }

private:
    bool all_ = false;
    std::vector<Int> primes_;    // used when !all_
    std::vector<Int> excluded_;  // used when all_
};

}  // namespace cellkit

#include "sumtable/cyclotomic.hpp"

#include "sumtable/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

namespace sumtable {

namespace {

class CyclotomicMemo {
public:
    Poly get(std::int64_t d) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = cache_.find(d); it != cache_.end()) return it->second;
        }
        // Computed outside the lock; a racing thread may do the same work, but
        // both arrive at the identical polynomial so either insert wins.
        Poly phi = compute(d);
        std::unique_lock lock(mutex_);
        return cache_.try_emplace(d, std::move(phi)).first->second;
    }

private:
    Poly compute(std::int64_t d) {
        Poly quotient = Poly::x_pow_minus_one(static_cast<std::size_t>(d));
        for (const auto e : divisors(d)) {
            if (e == d) break;
            quotient = poly_divexact(quotient, get(e));
        }
        return quotient;
    }

    std::shared_mutex mutex_;
    std::map<std::int64_t, Poly> cache_;
};

CyclotomicMemo& memo() {
    static CyclotomicMemo instance;
    return instance;
}

}  // namespace

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be >= 1, got " + std::to_string(n));
    std::vector<std::int64_t> small;
    std::vector<std::int64_t> large;
    for (std::int64_t k = 1; k * k <= n; ++k) {
        if (n % k != 0) continue;
        small.push_back(k);
        if (k != n / k) large.push_back(n / k);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Poly cyclotomic(std::int64_t d) {
    if (d < 1) throw std::invalid_argument("cyclotomic: index must be >= 1, got " + std::to_string(d));
    return memo().get(d);
}

Poly CyclotomicFactorization::product() const {
    Poly acc{1};
    for (const auto& f : factors) acc = poly_mul(acc, f.phi);
    return acc;
}

CyclotomicFactorization factorize_unity(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("factorize_unity: m must be >= 1, got " + std::to_string(m));
    CyclotomicFactorization out{m, {}};
    for (const auto d : divisors(m)) out.factors.push_back({d, cyclotomic(d)});
    if (out.product() != Poly::x_pow_minus_one(static_cast<std::size_t>(m))) {
        throw InvariantViolation("factorize_unity: product of Phi_d does not equal x^" + std::to_string(m) + " - 1");
    }
    return out;
}

CyclotomicFactorization factorize_c(std::int64_t m) {
    if (m < 2) throw std::invalid_argument("factorize_c: m must be >= 2, got " + std::to_string(m));
    auto out = factorize_unity(m);
    out.factors.erase(out.factors.begin());  // Phi_1 = x - 1
    std::vector<Poly::Coeff> ones(static_cast<std::size_t>(m), 1);
    if (out.product() != Poly(std::move(ones))) {
        throw InvariantViolation("factorize_c: product does not equal 1 + x + ... + x^" + std::to_string(m - 1));
    }
    return out;
}

}  // namespace sumtable

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>

namespace svoa {

// Positive rational kept as prime exponents, so long products of small
// factors (Weyl dimension formula, Weyl group orders) never overflow
// before cancellation.
class Factored {
public:
    Factored() = default;

    Factored& mul(std::int64_t n) { return add(n, +1); }
    Factored& div(std::int64_t n) { return add(n, -1); }

    Factored& mul(const Factored& o)
    {
        for (auto [p, e] : o.exp_)
            bump(p, e);
        return *this;
    }
    Factored& div(const Factored& o)
    {
        for (auto [p, e] : o.exp_)
            bump(p, -e);
        return *this;
    }

    Factored& mul_factorial(int n)
    {
        for (int i = 2; i <= n; ++i)
            mul(i);
        return *this;
    }

    bool is_integer() const
    {
        for (auto [p, e] : exp_)
            if (e < 0)
                return false;
        return true;
    }

    std::int64_t value() const
    {
        if (!is_integer())
            throw std::domain_error("factored value is not an integer");
        __int128 v = 1;
        for (auto [p, e] : exp_)
            for (int i = 0; i < e; ++i) {
                v *= p;
                if (v > INT64_MAX)
                    throw std::overflow_error("factored value exceeds int64");
            }
        return static_cast<std::int64_t>(v);
    }

private:
    std::map<std::int64_t, int> exp_;

    void bump(std::int64_t p, int e)
    {
        int& x = exp_[p];
        x += e;
        if (x == 0)
            exp_.erase(p);
    }

    Factored& add(std::int64_t n, int sign)
    {
        if (n <= 0)
            throw std::domain_error("Factored only holds positive values");
        for (std::int64_t p = 2; p * p <= n; ++p)
            while (n % p == 0) {
                bump(p, sign);
                n /= p;
            }
        if (n > 1)
            bump(n, sign);
        return *this;
    }
};

} // namespace svoa

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace folcris {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when an identity that is mathematically forced fails to verify;
// always indicates an implementation bug, never bad user input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

bool is_prime_u64(uint64_t x);

// Arithmetic context for Z/p^n with p an odd prime and p^n < 2^63.
// Elements are canonical representatives in [0, p^n) passed around as
// uint64_t; the Ring supplies all operations on them.
class Ring {
  public:
    Ring(int64_t p, int n);

    int64_t prime() const { return p_; }
    int exponent() const { return n_; }
    uint64_t modulus() const { return pn_; }

    bool operator==(const Ring& o) const { return p_ == o.p_ && n_ == o.n_; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    uint64_t reduce(int64_t x) const;
    uint64_t add(uint64_t a, uint64_t b) const;
    uint64_t sub(uint64_t a, uint64_t b) const;
    uint64_t neg(uint64_t a) const;
    uint64_t mul(uint64_t a, uint64_t b) const;
    uint64_t pow(uint64_t a, uint64_t e) const;

    // v(0) = n by convention.
    int valuation(uint64_t a) const;
    bool is_unit(uint64_t a) const { return a % static_cast<uint64_t>(p_) != 0; }

    // a = unit_part(a) * p^valuation(a); unit_part(0) = 1.
    uint64_t unit_part(uint64_t a) const;
    uint64_t inv(uint64_t a) const;

    // Exact division by p^e; requires valuation(a) >= e.
    uint64_t div_pow_exact(uint64_t a, int e) const;
    uint64_t pow_of_p(int e) const;

    // The quotient ring Z/p^m for m <= n.
    Ring quotient(int m) const;

    std::string describe() const;

  private:
    int64_t p_;
    int n_;
    uint64_t pn_;
};

}  // namespace folcris

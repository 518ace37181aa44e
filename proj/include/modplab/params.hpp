#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace modplab {

// Errors named after the conditions they report. Operations throw; the C API
// and the report runner translate these into error codes / failed records.
struct ModplabError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigError : ModplabError {
    using ModplabError::ModplabError;
};
struct NonIntegralExponent : ModplabError {
    using ModplabError::ModplabError;
};
struct TauNotInInjective : ModplabError {
    using ModplabError::ModplabError;
};
struct NotNewWeight : ModplabError {
    using ModplabError::ModplabError;
};
struct IncompatibleAt : ModplabError {
    using ModplabError::ModplabError;
};
struct NotGeneric : ModplabError {
    using ModplabError::ModplabError;
};
struct NotInD : ModplabError {
    using ModplabError::ModplabError;
};
struct Unreachable : ModplabError {
    using ModplabError::ModplabError;
};
struct CharacterCollision : ModplabError {
    using ModplabError::ModplabError;
};
struct InvalidCell : ModplabError {
    using ModplabError::ModplabError;
};
struct HypothesisViolated : ModplabError {
    using ModplabError::ModplabError;
};
struct NotTwoSided : ModplabError {
    using ModplabError::ModplabError;
};

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Base field / degree data. q = p^f stays well inside int64 for every
// parameter range the tool accepts (p <= 97, f <= 6).
struct Params {
    long p;
    int f;

    Params(long p_, int f_) : p(p_), f(f_) {
        if (!is_prime(p) || p < 5) throw ConfigError("p must be a prime >= 5, got " + std::to_string(p));
        if (f < 1 || f > 6) throw ConfigError("f must be in [1,6], got " + std::to_string(f));
        if (p > 97) throw ConfigError("p too large for exact enumeration, max 97");
    }

    long q() const {
        long r = 1;
        for (int i = 0; i < f; ++i) r *= p;
        return r;
    }
    long qm1() const { return q() - 1; }

    // p^i for 0 <= i < f
    long ppow(int i) const {
        long r = 1;
        for (int k = 0; k < i; ++k) r *= p;
        return r;
    }

    // cyclic index helper; the single place where the x_f = x_0 convention lives
    int cyc(int i) const {
        int m = i % f;
        return m < 0 ? m + f : m;
    }

    long mod_qm1(long v) const {
        long m = qm1();
        long r = v % m;
        return r < 0 ? r + m : r;
    }
};

}  // namespace modplab

#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qhsd/errors.hpp"
#include "qhsd/numeric.hpp"

namespace qhsd {

// Λ = Z[q, q^{-1}], exact integer coefficients, no stored zeros.
// The same type doubles as the extended ring Z[t, t^{-1}] under the
// substitution q = t^C (see embed_extended / restrict_extended).
class LaurentPoly {
  public:
    using TermMap = std::map<std::int64_t, Int>;

    LaurentPoly() = default;
    LaurentPoly(int c) { if (c != 0) terms_[0] = c; }          // NOLINT(google-explicit-constructor)
    LaurentPoly(Int c) { if (c != 0) terms_[0] = std::move(c); }  // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(std::int64_t exp, Int coeff) {
        LaurentPoly p;
        if (coeff != 0) p.terms_[exp] = std::move(coeff);
        return p;
    }
    static LaurentPoly q(std::int64_t exp = 1) { return monomial(exp, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1; }

    // Units of Λ are exactly ±q^r.
    bool is_unit() const {
        if (terms_.size() != 1) return false;
        const Int& c = terms_.begin()->second;
        return c == 1 || c == -1;
    }

    std::int64_t min_exp() const { return terms_.begin()->first; }
    std::int64_t max_exp() const { return terms_.rbegin()->first; }

    Int coefficient(std::int64_t exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void set_coefficient(std::int64_t exp, Int c) {
        if (c == 0)
            terms_.erase(exp);
        else
            terms_[exp] = std::move(c);
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) {
            auto it = terms_.find(e);
            if (it == terms_.end()) {
                terms_.emplace(e, c);
            } else {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) {
            auto it = terms_.find(e);
            if (it == terms_.end()) {
                terms_.emplace(e, -c);
            } else {
                it->second -= c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Int& slot = r.terms_[ea + eb];
                slot += ca * cb;
            }
        for (auto it = r.terms_.begin(); it != r.terms_.end();)
            it = (it->second == 0) ? r.terms_.erase(it) : std::next(it);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Exact division; throws if b does not divide exactly. Bareiss elimination
    // relies on this always succeeding for its intermediate quotients.
    static LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b, const char* context = "exact_div") {
        if (b.is_zero()) throw Error(std::string(context) + ": division by zero");
        if (a.is_zero()) return LaurentPoly();
        // Shift both to ordinary polynomials and long-divide from the top.
        const std::int64_t shift = a.min_exp() - b.min_exp();
        LaurentPoly rem = a;
        LaurentPoly quot;
        while (!rem.is_zero()) {
            std::int64_t e = rem.max_exp() - b.max_exp();
            const Int& lead_r = rem.terms_.rbegin()->second;
            const Int& lead_b = b.terms_.rbegin()->second;
            if (lead_r % lead_b != 0) throw Error(std::string(context) + ": inexact division");
            Int qc = lead_r / lead_b;
            LaurentPoly t = monomial(e, qc);
            quot += t;
            rem -= t * b;
            if (!rem.is_zero() && rem.max_exp() - b.max_exp() > e)
                throw Error(std::string(context) + ": non-terminating division");
            if (!rem.is_zero() && rem.min_exp() < b.min_exp() + shift)
                throw Error(std::string(context) + ": inexact division (low terms)");
        }
        return quot;
    }

    std::string str(const std::string& var = "q") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Int ac = c < 0 ? Int(-c) : c;
            if (e == 0) {
                os << ac.str();
            } else {
                if (ac != 1) os << ac.str() << "*";
                os << var;
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

  private:
    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

inline LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline bool laurent_is_unit(const LaurentPoly& a) { return a.is_unit(); }

// q = t^C embedding of Λ into the extended ring Z[t, t^{-1}] (deg t = 2).
inline LaurentPoly embed_extended(const LaurentPoly& p, int minimal_chern) {
    if (minimal_chern <= 0) throw InvalidInput("embed_extended: C must be positive");
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) r.set_coefficient(e * minimal_chern, c);
    return r;
}

// Inverse of the embedding; fails when a t-exponent is not a multiple of C.
inline LaurentPoly restrict_extended(const LaurentPoly& p, int minimal_chern) {
    if (minimal_chern <= 0) throw InvalidInput("restrict_extended: C must be positive");
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (e % minimal_chern != 0)
            throw InvalidInput("restrict_extended: exponent " + std::to_string(e) +
                               " not divisible by C = " + std::to_string(minimal_chern));
        r.set_coefficient(e / minimal_chern, c);
    }
    return r;
}

}  // namespace qhsd

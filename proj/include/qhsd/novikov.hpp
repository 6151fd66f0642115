#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "qhsd/errors.hpp"
#include "qhsd/laurent.hpp"
#include "qhsd/numeric.hpp"

namespace qhsd {

// Grading data for a quantum cohomology coefficient ring: deg(q) = 2C for the
// minimal Chern number C, and deg(t) = 2 for the extended-ring variable t with
// q = t^C.  The Novikov area variable T carries no cohomological degree (the
// Seidel element mixes T-powers within a single degree), but it enters the
// additive term weight below.
struct GradingSpec {
    int q_degree = 2;   // = 2C, even and positive
    int t_degree = 2;   // extended-ring t

    int minimal_chern() const { return q_degree / 2; }

    bool valid() const { return q_degree > 0 && q_degree % 2 == 0 && t_degree == 2; }
};

// A single monomial a * q^i T^s of the Novikov ring.
struct NovikovTerm {
    Rational t_exp;
    std::int64_t q_exp = 0;
    Int coeff;
};

// The ring A of formal series in q and T, truncated at a tExp cap.  Exponents
// of T are exact rationals (the general theory allows reals; every worked
// example is rational, and rationals keep equality decidable).  Terms are kept
// sorted lexicographically by (tExp, qExp), merged and zero-free, so equal
// elements have identical representations.
class NovikovElem {
  public:
    using Key = std::pair<Rational, std::int64_t>;  // (tExp, qExp)
    using TermMap = std::map<Key, Int>;

    NovikovElem() = default;
    NovikovElem(int c) { if (c != 0) terms_[{Rational(0), 0}] = c; }  // NOLINT(google-explicit-constructor)
    NovikovElem(Int c) { if (c != 0) terms_[{Rational(0), 0}] = std::move(c); }  // NOLINT(google-explicit-constructor)

    static NovikovElem monomial(std::int64_t q_exp, Rational t_exp, Int coeff) {
        NovikovElem x;
        if (coeff != 0) x.terms_[{std::move(t_exp), q_exp}] = std::move(coeff);
        return x;
    }
    static NovikovElem q(std::int64_t e = 1) { return monomial(e, Rational(0), 1); }
    static NovikovElem T(Rational e = Rational(1)) { return monomial(0, std::move(e), 1); }

    static NovikovElem from_laurent(const LaurentPoly& p) {
        NovikovElem x;
        for (const auto& [e, c] : p.terms()) x.terms_[{Rational(0), e}] = c;
        return x;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Key{Rational(0), 0} &&
               terms_.begin()->second == 1;
    }

    const std::optional<Rational>& cap() const { return cap_; }
    bool truncated() const { return truncated_; }
    void mark_truncated() { truncated_ = true; }

    Int coefficient(std::int64_t q_exp, const Rational& t_exp) const {
        auto it = terms_.find({t_exp, q_exp});
        return it == terms_.end() ? Int(0) : it->second;
    }

    // Lowest (tExp, qExp) term; the valuation-leading part of the series.
    std::optional<NovikovTerm> min_term() const {
        if (terms_.empty()) return std::nullopt;
        const auto& [k, c] = *terms_.begin();
        return NovikovTerm{k.first, k.second, c};
    }

    // All terms sharing the minimal tExp, as a Laurent polynomial in q.
    LaurentPoly min_t_layer() const {
        LaurentPoly layer;
        if (terms_.empty()) return layer;
        const Rational& t0 = terms_.begin()->first.first;
        for (const auto& [k, c] : terms_) {
            if (k.first != t0) break;
            layer.set_coefficient(k.second, c);
        }
        return layer;
    }

    // Drops terms with tExp > cap and records the truncation.
    NovikovElem truncate_to(const Rational& cap) const {
        NovikovElem r;
        r.cap_ = cap;
        r.truncated_ = truncated_;
        for (const auto& [k, c] : terms_) {
            if (k.first > cap)
                r.truncated_ = true;
            else
                r.terms_[k] = c;
        }
        return r;
    }

    NovikovElem& operator+=(const NovikovElem& o) {
        merge_caps(o);
        for (const auto& [k, c] : o.terms_) {
            if (cap_ && k.first > *cap_) { truncated_ = true; continue; }
            auto it = terms_.find(k);
            if (it == terms_.end()) {
                terms_.emplace(k, c);
            } else {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }
    NovikovElem& operator-=(const NovikovElem& o) { return *this += -o; }

    friend NovikovElem operator+(NovikovElem a, const NovikovElem& b) { a += b; return a; }
    friend NovikovElem operator-(NovikovElem a, const NovikovElem& b) { a -= b; return a; }
    friend NovikovElem operator-(const NovikovElem& a) {
        NovikovElem r;
        r.cap_ = a.cap_;
        r.truncated_ = a.truncated_;
        for (const auto& [k, c] : a.terms_) r.terms_[k] = -c;
        return r;
    }

    friend NovikovElem operator*(const NovikovElem& a, const NovikovElem& b) {
        NovikovElem r;
        // Terms of the product below cap_a + minT(b) (resp. cap_b + minT(a))
        // are unaffected by whatever was dropped from a (resp. b), so the
        // product stays trustworthy up to the smaller of the two.
        std::optional<Rational> cap_from_a, cap_from_b;
        if (a.cap_ && !b.terms_.empty()) cap_from_a = *a.cap_ + b.terms_.begin()->first.first;
        if (b.cap_ && !a.terms_.empty()) cap_from_b = *b.cap_ + a.terms_.begin()->first.first;
        r.cap_ = min_cap(cap_from_a, cap_from_b);
        r.truncated_ = a.truncated_ || b.truncated_;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                Rational t = ka.first + kb.first;
                if (r.cap_ && t > *r.cap_) { r.truncated_ = true; continue; }
                Int& slot = r.terms_[{std::move(t), ka.second + kb.second}];
                slot += ca * cb;
            }
        for (auto it = r.terms_.begin(); it != r.terms_.end();)
            it = (it->second == 0) ? r.terms_.erase(it) : std::next(it);
        return r;
    }
    NovikovElem& operator*=(const NovikovElem& o) { *this = *this * o; return *this; }

    // Equality ignores cap/truncation bookkeeping and compares the terms.
    friend bool operator==(const NovikovElem& a, const NovikovElem& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NovikovElem& a, const NovikovElem& b) { return !(a == b); }

    // Exact division of finite (untruncated) elements by long division on the
    // top (tExp, qExp) term; the lex order is multiplication-compatible, so an
    // exact quotient is found exactly when it exists.
    static NovikovElem exact_div(const NovikovElem& a, const NovikovElem& b, const char* context = "exact_div") {
        if (b.is_zero()) throw Error(std::string(context) + ": division by zero");
        if (a.truncated_ || b.truncated_) throw Error(std::string(context) + ": operands must be exact");
        NovikovElem rem = a;
        rem.cap_.reset();
        NovikovElem quot;
        const auto& [kb, cb] = *b.terms_.rbegin();
        while (!rem.is_zero()) {
            const auto& [ka, ca] = *rem.terms_.rbegin();
            if (ca % cb != 0) throw Error(std::string(context) + ": inexact division");
            NovikovElem t = monomial(ka.second - kb.second, ka.first - kb.first, ca / cb);
            quot += t;
            Key prev = ka;
            rem -= t * b;
            if (!rem.is_zero() && !(rem.terms_.rbegin()->first < prev))
                throw Error(std::string(context) + ": non-terminating division");
        }
        return quot;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Int ac = c < 0 ? Int(-c) : c;
            bool wrote = false;
            if (ac != 1 || (k.second == 0 && k.first == 0)) { os << ac.str(); wrote = true; }
            if (k.second != 0) {
                if (wrote) os << "*";
                os << "q";
                if (k.second != 1) os << "^" << k.second;
                wrote = true;
            }
            if (k.first != 0) {
                if (wrote) os << "*";
                os << "T";
                if (k.first != 1) os << "^" << to_string(k.first);
            }
        }
        if (truncated_ && cap_) os << "  (truncated at T^" << to_string(*cap_) << ")";
        return os.str();
    }

    static std::optional<Rational> min_cap(const std::optional<Rational>& a, const std::optional<Rational>& b) {
        if (!a) return b;
        if (!b) return a;
        return std::min(*a, *b);
    }

  private:
    void merge_caps(const NovikovElem& o) {
        cap_ = min_cap(cap_, o.cap_);
        truncated_ = truncated_ || o.truncated_;
        if (cap_) {
            for (auto it = terms_.begin(); it != terms_.end();) {
                if (it->first.first > *cap_) { truncated_ = true; it = terms_.erase(it); }
                else ++it;
            }
        }
    }

    TermMap terms_;
    std::optional<Rational> cap_;   // nullopt = untruncated (finite element)
    bool truncated_ = false;
};

inline std::ostream& operator<<(std::ostream& os, const NovikovElem& x) { return os << x.str(); }

inline NovikovElem novikov_mul(const NovikovElem& a, const NovikovElem& b, const Rational& cap) {
    if ((a.cap() && *a.cap() < cap) || (b.cap() && *b.cap() < cap))
        throw InvalidInput("novikov_mul: operand cap below requested cap");
    return (a * b).truncate_to(cap);
}

// Inverts a = c q^u T^v (1 - tail) by the Neumann series on the tail, valid
// whenever the minimal-tExp part is a single monomial with coefficient ±1.
// The result carries every term with tExp <= cap.
inline NovikovElem novikov_geometric_inverse(const NovikovElem& a, const Rational& cap) {
    auto lead = a.min_term();
    if (!lead)
        throw NotInvertibleLeadingTerm("zero element");
    {
        // Minimal tExp part must be a single monomial with unit coefficient.
        LaurentPoly layer = a.min_t_layer();
        if (layer.terms().size() != 1 || !(lead->coeff == 1 || lead->coeff == -1))
            throw NotInvertibleLeadingTerm("minimal-tExp part is not a monomial with coefficient +-1: " +
                                           layer.str());
    }
    const NovikovElem unit_inv =
        NovikovElem::monomial(-lead->q_exp, -lead->t_exp, lead->coeff);  // (c q^u T^v)^{-1}, c = ±1
    // a * unit_inv = 1 - r with every term of r at tExp > 0.
    NovikovElem r = NovikovElem(1) - a * unit_inv;
    const Rational series_cap = cap + lead->t_exp;  // accuracy needed before the final shift by T^{-v}
    r = r.truncate_to(std::max(series_cap, Rational(0)));

    NovikovElem sum(1);
    NovikovElem power(1);
    while (true) {
        power = (power * r).truncate_to(std::max(series_cap, Rational(0)));
        if (power.is_zero()) break;
        sum += power;
    }
    NovikovElem result = (unit_inv * sum).truncate_to(cap);
    return result;
}

// Additive term weight qExp*deg(q) + 2*tExp; additivity under multiplication
// is the grading sanity check of the exact-rings layer.  The cohomological
// degree of a Novikov coefficient is the qExp part alone.
inline Rational term_weight(const GradingSpec& g, std::int64_t q_exp, const Rational& t_exp) {
    return Rational(q_exp) * g.q_degree + 2 * t_exp * (Rational(g.t_degree) / 2);
}

inline std::optional<Rational> homogeneous_weight(const GradingSpec& g, const NovikovElem& x) {
    std::optional<Rational> w;
    for (const auto& [k, c] : x.terms()) {
        (void)c;
        Rational tw = term_weight(g, k.second, k.first);
        if (!w) w = tw;
        else if (*w != tw) return std::nullopt;
    }
    return w;
}

}  // namespace qhsd

#pragma once

#include "qschur/partition.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace qschur {

/// Exact Laurent polynomial in v with integer coefficients.
/// Stored as (exponent, coefficient) pairs, sorted by exponent, no zeros.
class VPoly {
public:
    using Terms = std::vector<std::pair<int, long long>>;

    VPoly() = default;
    static VPoly zero() { return VPoly{}; }
    static VPoly one() { return monomial(1, 0); }
    static VPoly monomial(long long c, int d) {
        VPoly p;
        if (c != 0) p.c_.emplace_back(d, c);
        return p;
    }

    const Terms& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long long coeff(int d) const {
        auto it = std::lower_bound(c_.begin(), c_.end(), d,
                                   [](const auto& t, int x) { return t.first < x; });
        return (it != c_.end() && it->first == d) ? it->second : 0;
    }
    int min_degree() const { return c_.front().first; }
    int max_degree() const { return c_.back().first; }

    friend bool operator==(const VPoly&, const VPoly&) = default;

    VPoly& operator+=(const VPoly& o) { return add_shifted(o, 0, 1); }
    VPoly& operator-=(const VPoly& o) { return add_shifted(o, 0, -1); }
    friend VPoly operator+(VPoly a, const VPoly& b) { return a += b; }
    friend VPoly operator-(VPoly a, const VPoly& b) { return a -= b; }
    friend VPoly operator*(const VPoly& a, const VPoly& b) {
        VPoly r;
        for (auto [d1, c1] : a.c_) {
            VPoly t;
            t.c_.reserve(b.c_.size());
            for (auto [d2, c2] : b.c_) t.c_.emplace_back(d1 + d2, c1 * c2);
            r += t;
        }
        return r;
    }

    /// this += v^k * scale * o  (the hot operation of the Fock action)
    VPoly& add_shifted(const VPoly& o, int k, long long scale) {
        if (o.c_.empty() || scale == 0) return *this;
        Terms merged;
        merged.reserve(c_.size() + o.c_.size());
        auto a = c_.begin();
        auto b = o.c_.begin();
        while (a != c_.end() || b != o.c_.end()) {
            if (b == o.c_.end() || (a != c_.end() && a->first < b->first + k)) {
                merged.push_back(*a++);
            } else if (a == c_.end() || a->first > b->first + k) {
                merged.emplace_back(b->first + k, scale * b->second);
                ++b;
            } else {
                long long c = a->second + scale * b->second;
                if (c != 0) merged.emplace_back(a->first, c);
                ++a;
                ++b;
            }
        }
        c_ = std::move(merged);
        return *this;
    }

    VPoly shifted(int k) const { // multiply by v^k
        VPoly r = *this;
        for (auto& [d, c] : r.c_) d += k;
        return r;
    }
    VPoly scaled(long long k) const {
        if (k == 0) return VPoly{};
        VPoly r = *this;
        for (auto& [d, c] : r.c_) c *= k;
        return r;
    }
    /// bar involution v -> v^{-1}
    VPoly bar() const {
        VPoly r;
        r.c_.reserve(c_.size());
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r.c_.emplace_back(-it->first, it->second);
        return r;
    }
    long long at_one() const {
        long long s = 0;
        for (auto [d, c] : c_) s += c;
        return s;
    }
    long long derivative_at_one() const {
        long long s = 0;
        for (auto [d, c] : c_) s += static_cast<long long>(d) * c;
        return s;
    }

    /// Exact division; throws inexact_division on nonzero remainder.
    VPoly div_exact(const VPoly& den) const {
        if (is_zero()) return VPoly{};
        if (den.is_zero()) throw inexact_division("division by zero polynomial");
        // shift both to ordinary polynomials so long division terminates
        int ns = min_degree(), ds = den.min_degree();
        VPoly num = shifted(-ns), d2 = den.shifted(-ds), q;
        int dmax = d2.max_degree();
        long long lead = d2.coeff(dmax);
        while (!num.is_zero() && num.max_degree() >= dmax) {
            int nmax = num.max_degree();
            long long c = num.coeff(nmax);
            if (c % lead != 0) throw inexact_division("non-divisible leading coefficient");
            q += VPoly::monomial(c / lead, nmax - dmax);
            num.add_shifted(d2, nmax - dmax, -(c / lead));
        }
        if (!num.is_zero()) throw inexact_division("nonzero remainder");
        return q.shifted(ns - ds);
    }

    bool in_positive_v() const { // in v*Z[v], i.e. all exponents >= 1
        return c_.empty() || min_degree() >= 1;
    }
    bool nonneg_coeffs() const {
        for (auto [d, c] : c_)
            if (c < 0) return false;
        return true;
    }
    /// All exponents congruent to parity mod 2 (vacuously true for 0).
    bool pure_parity(int parity) const {
        for (auto [d, c] : c_)
            if (mod(d, 2) != mod(parity, 2)) return false;
        return true;
    }

    /// Text form: descending exponents, "v^3+v", "2v", "1", "0", "v^-2".
    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            auto [d, c] = *it;
            std::string term;
            if (d == 0) {
                term = std::to_string(c);
            } else {
                std::string vs = (d == 1) ? "v" : "v^" + std::to_string(d);
                if (c == 1) term = vs;
                else if (c == -1) term = "-" + vs;
                else term = std::to_string(c) + vs;
            }
            if (!s.empty() && term[0] != '-') s += '+';
            s += term;
        }
        return s;
    }

private:
    Terms c_;
};

/// Quantum integer [a] = v^{a-1} + v^{a-3} + ... + v^{1-a}.
inline VPoly quantum_integer(int a) {
    VPoly p;
    for (int k = 0; k < a; ++k) p += VPoly::monomial(1, a - 1 - 2 * k);
    return p;
}

/// Quantum factorial [a]! = [1][2]...[a].
inline VPoly quantum_factorial(int a) {
    VPoly p = VPoly::one();
    for (int k = 2; k <= a; ++k) p = p * quantum_integer(k);
    return p;
}

/// Parse the sparse text form produced by VPoly::str().
inline VPoly parse_vpoly(const std::string& text) {
    if (text.empty()) throw malformed_text("empty polynomial text");
    if (text == "0") return VPoly::zero();
    VPoly out;
    std::size_t i = 0;
    while (i < text.size()) {
        long long sign = 1;
        if (text[i] == '+') ++i;
        else if (text[i] == '-') { sign = -1; ++i; }
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        bool has_coeff = j > i;
        long long coeff = has_coeff ? std::stoll(text.substr(i, j - i)) : 1;
        i = j;
        int deg = 0;
        if (i < text.size() && text[i] == 'v') {
            ++i;
            deg = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::size_t k = i;
                if (k < text.size() && text[k] == '-') ++k;
                while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
                if (k == i) throw malformed_text("missing exponent in '" + text + "'");
                deg = std::stoi(text.substr(i, k - i));
                i = k;
            }
        } else if (!has_coeff) {
            throw malformed_text("bad polynomial text '" + text + "'");
        }
        out += VPoly::monomial(sign * coeff, deg);
    }
    return out;
}

} // namespace qschur

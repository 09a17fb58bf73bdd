#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qschur {

// Errors thrown by the library. Catching qschur::error catches them all.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct malformed_text : error { using error::error; };
struct not_weakly_decreasing : error { using error::error; };
struct bad_e : error { using error::error; };
struct size_mismatch : error { using error::error; };
struct too_few_beads : error { using error::error; };
struct empty_partition_error : error { using error::error; };
struct not_enough_normal_nodes : error { using error::error; };
struct not_enough_conormal_nodes : error { using error::error; };
struct precondition_violated : error { using error::error; };
struct not_e_regular : error { using error::error; };
struct inexact_division : error { using error::error; };
struct non_positive_coefficient : error { using error::error; };
struct no_eligible_runner : error { using error::error; };
struct dot_f_undefined : error { using error::error; };
struct partition_not_in_pair : error { using error::error; };
struct non_integral_solution : error { using error::error; };

inline int mod(int a, int m) { return ((a % m) + m) % m; }

/// A partition: weakly decreasing sequence of positive integers.
/// Immutable value with structural equality; no trailing zeros stored.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw not_weakly_decreasing("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw not_weakly_decreasing("parts not weakly decreasing");
        }
    }

    static Partition empty() { return Partition{}; }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    bool is_empty() const { return parts_.empty(); }
    int part(int i) const { // 1-based, zero beyond the last row
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic on part sequences; the library iterates blocks in
    // descending lexicographic order throughout.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return std::lexicographical_compare_three_way(
            a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end());
    }

private:
    std::vector<int> parts_;
};

/// Parse "10,6,5,2,1,1"; the empty string is the empty partition.
/// Rejects unsorted input instead of sorting it.
inline Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    if (!text.empty()) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                          : comma - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw malformed_text("bad partition token: '" + tok + "'");
            parts.push_back(std::stoi(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return Partition(std::move(parts));
}

inline std::string to_string(const Partition& p) {
    std::string s;
    for (int i = 0; i < p.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.parts()[i]);
    }
    return s;
}

inline void require_e(int e) {
    if (e < 2) throw bad_e("e must be >= 2");
}

/// True iff no e consecutive equal (nonzero) parts.
inline bool is_e_regular(const Partition& lambda, int e) {
    require_e(e);
    int run = 1;
    for (int i = 1; i < lambda.length(); ++i) {
        if (lambda.parts()[i] == lambda.parts()[i - 1]) {
            if (++run >= e) return false;
        } else {
            run = 1;
        }
    }
    return true;
}

/// mu dominates lambda: partial sums of mu weakly exceed those of lambda.
inline bool dominates(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size())
        throw size_mismatch("dominance compares partitions of equal size");
    long s1 = 0, s2 = 0;
    int n = std::max(mu.length(), lambda.length());
    for (int i = 1; i <= n; ++i) {
        s1 += mu.part(i);
        s2 += lambda.part(i);
        if (s1 < s2) return false;
    }
    return true;
}

inline Partition row_removal(const Partition& nu) {
    if (nu.is_empty()) throw empty_partition_error("row_removal of empty partition");
    return Partition(std::vector<int>(nu.parts().begin() + 1, nu.parts().end()));
}

inline Partition column_removal(const Partition& nu) {
    if (nu.is_empty()) throw empty_partition_error("column_removal of empty partition");
    std::vector<int> out;
    for (int x : nu.parts())
        if (x > 1) out.push_back(x - 1);
    return Partition(std::move(out));
}

inline Partition conjugate(const Partition& p) {
    if (p.is_empty()) return p;
    std::vector<int> out(p.parts()[0]);
    for (int c = 1; c <= p.parts()[0]; ++c) {
        int cnt = 0;
        for (int x : p.parts())
            if (x >= c) ++cnt;
        out[c - 1] = cnt;
    }
    return Partition(std::move(out));
}

/// All partitions of n in descending lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxp) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int first = std::min(rem, maxp); first >= 1; --first) {
            cur.push_back(first);
            self(self, rem - first, first);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

} // namespace qschur

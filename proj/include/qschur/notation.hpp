#pragma once

#include "qschur/abacus.hpp"

#include <cctype>
#include <sstream>

namespace qschur {

// ASCII runner-notation grammar:
//   notation := "<" entries "|" counts ">"
//   entries  := entry ("," entry)* | ""      entry := INT [ "_" "{" items "}" ]
//   items    := item ("," item)*             item  := INT [ "^" INT ]
//   counts   := INT ("," INT)*               (run-length INT "^" INT allowed)
// Single-box shorthand "i" stands for i_{(1)}; "i_3" is accepted for i_{3}.
// Block labels "<b0,...,b_{e-1}>" reuse the counts grammar.

namespace detail {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }
    bool eat(char c) {
        if (peek() == c) { ++i; return true; }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw malformed_text("expected '" + std::string(1, c) + "' in '" + s + "'");
    }
    int integer() {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw malformed_text("expected integer in '" + s + "'");
        int v = std::stoi(s.substr(i, j - i));
        i = j;
        return v;
    }
};

inline std::vector<int> parse_items(Cursor& c, char stop) {
    std::vector<int> out;
    while (true) {
        int v = c.integer();
        int rep = 1;
        if (c.eat('^')) rep = c.integer();
        for (int k = 0; k < rep; ++k) out.push_back(v);
        if (!c.eat(',')) break;
    }
    if (c.peek() != stop)
        throw malformed_text("unexpected character in '" + c.s + "'");
    return out;
}

} // namespace detail

/// Parse "b0,b1,..." with run-length sugar ("4^2,6").
inline std::vector<int> parse_counts(const std::string& text) {
    detail::Cursor c{text};
    auto v = detail::parse_items(c, '\0');
    if (!c.done()) throw malformed_text("trailing characters in counts '" + text + "'");
    return v;
}

/// Parse a block label "<4^2,6>" into bead counts.
inline std::vector<int> parse_block_label(const std::string& text) {
    detail::Cursor c{text};
    c.expect('<');
    auto v = detail::parse_items(c, '>');
    c.expect('>');
    if (!c.done()) throw malformed_text("trailing characters in '" + text + "'");
    return v;
}

/// Parse full runner notation "<0_{1^2},2_{1^2}|2^5>".
inline RunnerNotation parse_notation(const std::string& text) {
    detail::Cursor c{text};
    c.expect('<');
    std::vector<std::pair<int, std::vector<int>>> entries;
    if (c.peek() != '|') {
        while (true) {
            int runner = c.integer();
            std::vector<int> items;
            if (c.eat('_')) {
                if (c.eat('{')) {
                    items = detail::parse_items(c, '}');
                    c.expect('}');
                } else {
                    // paper shorthand i_3 for i_{3}
                    int v = c.integer();
                    int rep = 1;
                    if (c.eat('^')) rep = c.integer();
                    items.assign(rep, v);
                }
            } else {
                items = {1};
            }
            entries.emplace_back(runner, std::move(items));
            if (!c.eat(',')) break;
        }
    }
    c.expect('|');
    auto counts = detail::parse_items(c, '>');
    c.expect('>');
    if (!c.done()) throw malformed_text("trailing characters in '" + text + "'");

    RunnerNotation rn;
    int e = static_cast<int>(counts.size());
    if (e < 2) throw bad_e("notation needs at least two runners");
    rn.bead_counts = counts;
    rn.quotient.assign(e, Partition{});
    for (auto& [runner, items] : entries) {
        if (runner < 0 || runner >= e) throw malformed_text("runner index out of range");
        std::sort(items.begin(), items.end(), std::greater<>());
        rn.quotient[runner] = Partition(items);
    }
    return rn;
}

inline Partition partition_from_notation(const std::string& text) {
    auto rn = parse_notation(text);
    return from_quotient(rn, static_cast<int>(rn.bead_counts.size()));
}

namespace detail {
inline void print_run_length(std::ostringstream& os, const std::vector<int>& xs) {
    for (std::size_t i = 0; i < xs.size();) {
        std::size_t j = i;
        while (j < xs.size() && xs[j] == xs[i]) ++j;
        if (i) os << ',';
        os << xs[i];
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
}
} // namespace detail

/// Print runner notation; empty runners omitted, single box printed as "i",
/// quotient parts and counts in run-length form.
inline std::string notation_string(const RunnerNotation& rn) {
    std::ostringstream os;
    os << '<';
    bool first = true;
    for (std::size_t i = 0; i < rn.quotient.size(); ++i) {
        const Partition& q = rn.quotient[i];
        if (q.is_empty()) continue;
        if (!first) os << ',';
        first = false;
        os << i;
        if (q.parts() == std::vector<int>{1}) continue;
        os << "_{";
        detail::print_run_length(os, q.parts());
        os << '}';
    }
    os << '|';
    detail::print_run_length(os, rn.bead_counts);
    os << '>';
    return os.str();
}

inline std::string block_label_string(const std::vector<int>& counts) {
    std::ostringstream os;
    os << '<';
    detail::print_run_length(os, counts);
    os << '>';
    return os.str();
}

} // namespace qschur

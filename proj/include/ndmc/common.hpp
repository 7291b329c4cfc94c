#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ndmc {

/// Bad input (malformed graphs, ill-typed formulas, violated preconditions).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An evaluation ran out of its node-visit budget. Distinct from a truth value.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error with 1-based position information.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " at " + std::to_string(line) + ":" + std::to_string(column)),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// A set of vertices, kept sorted and duplicate-free.
using VertexSet = std::vector<int>;

inline bool vs_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline void vs_insert(VertexSet& s, int v) {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it == s.end() || *it != v) s.insert(it, v);
}

inline void vs_erase(VertexSet& s, int v) {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it != s.end() && *it == v) s.erase(it);
}

inline VertexSet vs_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet vs_subtract(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet vs_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace ndmc

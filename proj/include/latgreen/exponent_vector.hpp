#ifndef LATGREEN_EXPONENT_VECTOR_HPP
#define LATGREEN_EXPONENT_VECTOR_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace latgreen {

/// A point of Z^n. Used both as a monomial exponent and as a lattice point;
/// the length is fixed at construction.
class ExponentVector {
public:
    explicit ExponentVector(std::size_t n) : entries_(n, 0) {}
    ExponentVector(std::initializer_list<int> entries) : entries_(entries) {}
    explicit ExponentVector(std::vector<int> entries) : entries_(std::move(entries)) {}

    static ExponentVector unit(std::size_t n, std::size_t i, int value = 1)
    {
        ExponentVector e(n);
        e.entries_[i] = value;
        return e;
    }

    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    int& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<int>& entries() const noexcept { return entries_; }

    long total_degree() const;
    bool is_zero() const;

    ExponentVector operator-() const;
    ExponentVector& operator+=(const ExponentVector& rhs);
    ExponentVector& operator-=(const ExponentVector& rhs);
    friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
    friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

    /// "(a,b,c)"
    std::string str() const;

private:
    std::vector<int> entries_;
};

/// Graded lexicographic order: total degree first, then lexicographic with
/// variable 0 most significant.
struct GradedLexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

/// Plain lexicographic order, variable 0 most significant.
struct LexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const
    {
        return a.entries() < b.entries();
    }
};

} // namespace latgreen

#endif // LATGREEN_EXPONENT_VECTOR_HPP

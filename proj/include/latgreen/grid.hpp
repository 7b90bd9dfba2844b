#ifndef LATGREEN_GRID_HPP
#define LATGREEN_GRID_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latgreen/exponent_vector.hpp"
#include "latgreen/rational.hpp"

namespace latgreen {

using LatticePoint = ExponentVector;

/// Finite window of Z^n with inclusive bounds in every coordinate.
class Box {
public:
    using Range = std::pair<int, int>;

    explicit Box(std::vector<Range> ranges);

    /// Parses "lo:hi[,lo:hi...]".
    static Box parse(std::string_view text);
    /// [-radius..radius]^n
    static Box cube(std::size_t n, int radius);

    std::size_t num_vars() const noexcept { return ranges_.size(); }
    const std::vector<Range>& ranges() const noexcept { return ranges_; }
    int lo(std::size_t i) const { return ranges_[i].first; }
    int hi(std::size_t i) const { return ranges_[i].second; }
    std::size_t width(std::size_t i) const { return static_cast<std::size_t>(hi(i) - lo(i) + 1); }
    /// Number of lattice points.
    std::size_t size() const;

    bool contains(const LatticePoint& m) const;
    bool contains(const Box& other) const;
    bool contains_origin() const;

    /// Row-major position of m (first coordinate slowest, i.e. lexicographic).
    std::size_t index_of(const LatticePoint& m) const;
    LatticePoint point_at(std::size_t index) const;
    /// All points in lexicographic order.
    std::vector<LatticePoint> points() const;

    /// "lo:hi,lo:hi"
    std::string str() const;

    friend bool operator==(const Box&, const Box&) = default;

private:
    std::vector<Range> ranges_;
};

/// Values of a function Z^n -> Q on every lattice point of a box.
class GridFunction {
public:
    /// All-zero grid.
    explicit GridFunction(Box box);
    GridFunction(Box box, std::vector<Rational> values);

    const Box& box() const noexcept { return box_; }
    std::size_t num_vars() const noexcept { return box_.num_vars(); }
    const std::vector<Rational>& values() const noexcept { return values_; }

    /// Raises IndexOutOfRange if m is outside the box.
    const Rational& at(const LatticePoint& m) const;
    void set(const LatticePoint& m, Rational value);

    /// Restriction to a sub-box (raises BoxMismatch if not contained).
    GridFunction restricted(const Box& sub) const;

    GridFunction& operator+=(const GridFunction& rhs);
    GridFunction& operator-=(const GridFunction& rhs);
    GridFunction& operator*=(const Rational& c);
    friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
    friend GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
    friend GridFunction operator*(const Rational& c, GridFunction a) { return a *= c; }

    friend bool operator==(const GridFunction&, const GridFunction&) = default;

private:
    Box box_;
    std::vector<Rational> values_;
};

} // namespace latgreen

#endif // LATGREEN_GRID_HPP

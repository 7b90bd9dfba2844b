#include "latgreen/grid.hpp"

#include <charconv>

#include "latgreen/error.hpp"

namespace latgreen {

namespace {

int parse_int(std::string_view s, std::string_view whole)
{
    int value = 0;
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (s.empty() || ec != std::errc() || ptr != end)
        raise(ErrorKind::InvalidArgument, "malformed box '" + std::string(whole) + "'");
    return value;
}

} // namespace

Box::Box(std::vector<Range> ranges) : ranges_(std::move(ranges))
{
    if (ranges_.empty())
        raise(ErrorKind::InvalidArity, "a box needs at least one coordinate range");
    for (const auto& [lo, hi] : ranges_)
        if (lo > hi)
            raise(ErrorKind::InvalidArgument, "box range " + std::to_string(lo) + ":" + std::to_string(hi)
                                                  + " has lo > hi");
}

Box Box::parse(std::string_view text)
{
    std::vector<Range> ranges;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto raw_part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                              : comma - start);
        auto part = raw_part;
        while (!part.empty() && part.front() == ' ')
            part.remove_prefix(1);
        // The separator is the first ':' or "..", searching after a leading sign.
        std::size_t sep = part.find(':', 1);
        std::size_t sep_len = 1;
        if (sep == std::string_view::npos) {
            sep = part.find("..", 1);
            sep_len = 2;
        }
        if (sep == std::string_view::npos)
            raise(ErrorKind::InvalidArgument, "malformed box '" + std::string(text) + "'");
        ranges.emplace_back(parse_int(part.substr(0, sep), text), parse_int(part.substr(sep + sep_len), text));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return Box(std::move(ranges));
}

Box Box::cube(std::size_t n, int radius)
{
    return Box(std::vector<Range>(n, Range{-radius, radius}));
}

std::size_t Box::size() const
{
    std::size_t s = 1;
    for (std::size_t i = 0; i < ranges_.size(); ++i)
        s *= width(i);
    return s;
}

bool Box::contains(const LatticePoint& m) const
{
    if (m.size() != ranges_.size())
        return false;
    for (std::size_t i = 0; i < ranges_.size(); ++i)
        if (m[i] < lo(i) || m[i] > hi(i))
            return false;
    return true;
}

bool Box::contains(const Box& other) const
{
    if (other.num_vars() != num_vars())
        return false;
    for (std::size_t i = 0; i < ranges_.size(); ++i)
        if (other.lo(i) < lo(i) || other.hi(i) > hi(i))
            return false;
    return true;
}

bool Box::contains_origin() const
{
    return contains(LatticePoint(num_vars()));
}

std::size_t Box::index_of(const LatticePoint& m) const
{
    if (!contains(m))
        raise(ErrorKind::IndexOutOfRange, "point " + m.str() + " outside box " + str());
    std::size_t index = 0;
    for (std::size_t i = 0; i < ranges_.size(); ++i)
        index = index * width(i) + static_cast<std::size_t>(m[i] - lo(i));
    return index;
}

LatticePoint Box::point_at(std::size_t index) const
{
    LatticePoint m(num_vars());
    for (std::size_t i = ranges_.size(); i-- > 0;) {
        m[i] = lo(i) + static_cast<int>(index % width(i));
        index /= width(i);
    }
    return m;
}

std::vector<LatticePoint> Box::points() const
{
    std::vector<LatticePoint> pts;
    const std::size_t count = size();
    pts.reserve(count);
    for (std::size_t k = 0; k < count; ++k)
        pts.push_back(point_at(k));
    return pts;
}

std::string Box::str() const
{
    std::string s;
    for (std::size_t i = 0; i < ranges_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(lo(i)) + ":" + std::to_string(hi(i));
    }
    return s;
}

GridFunction::GridFunction(Box box) : box_(std::move(box)), values_(box_.size()) {}

GridFunction::GridFunction(Box box, std::vector<Rational> values)
    : box_(std::move(box)), values_(std::move(values))
{
    if (values_.size() != box_.size())
        raise(ErrorKind::BoxMismatch, "grid has " + std::to_string(values_.size()) + " values for a box of "
                                          + std::to_string(box_.size()) + " points");
}

const Rational& GridFunction::at(const LatticePoint& m) const
{
    return values_[box_.index_of(m)];
}

void GridFunction::set(const LatticePoint& m, Rational value)
{
    values_[box_.index_of(m)] = std::move(value);
}

GridFunction GridFunction::restricted(const Box& sub) const
{
    if (!box_.contains(sub))
        raise(ErrorKind::BoxMismatch, "box " + sub.str() + " is not inside " + box_.str());
    GridFunction r(sub);
    for (std::size_t k = 0; k < sub.size(); ++k)
        r.values_[k] = at(sub.point_at(k));
    return r;
}

GridFunction& GridFunction::operator+=(const GridFunction& rhs)
{
    if (!(rhs.box_ == box_))
        raise(ErrorKind::BoxMismatch, "adding grids on " + box_.str() + " and " + rhs.box_.str());
    for (std::size_t k = 0; k < values_.size(); ++k)
        values_[k] += rhs.values_[k];
    return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& rhs)
{
    if (!(rhs.box_ == box_))
        raise(ErrorKind::BoxMismatch, "subtracting grids on " + box_.str() + " and " + rhs.box_.str());
    for (std::size_t k = 0; k < values_.size(); ++k)
        values_[k] -= rhs.values_[k];
    return *this;
}

GridFunction& GridFunction::operator*=(const Rational& c)
{
    for (auto& v : values_)
        v *= c;
    return *this;
}

} // namespace latgreen

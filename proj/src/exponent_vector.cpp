#include "latgreen/exponent_vector.hpp"

#include <algorithm>
#include <numeric>

namespace latgreen {

long ExponentVector::total_degree() const
{
    return std::accumulate(entries_.begin(), entries_.end(), 0L);
}

bool ExponentVector::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

ExponentVector ExponentVector::operator-() const
{
    ExponentVector r(*this);
    for (int& e : r.entries_)
        e = -e;
    return r;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& rhs)
{
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] += rhs.entries_[i];
    return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& rhs)
{
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] -= rhs.entries_[i];
    return *this;
}

std::string ExponentVector::str() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(entries_[i]);
    }
    return s + ")";
}

bool GradedLexLess::operator()(const ExponentVector& a, const ExponentVector& b) const
{
    const long da = a.total_degree();
    const long db = b.total_degree();
    if (da != db)
        return da < db;
    return a.entries() < b.entries();
}

} // namespace latgreen

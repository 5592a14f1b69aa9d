#include "addact/linalg.hpp"

#include <algorithm>

#include "addact/errors.hpp"

namespace addact {

std::size_t SpanBuilder::reduce(std::vector<Rational>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t p = pivots_[r];
        if (!v[p].is_zero()) {
            const Rational f = v[p];
            for (std::size_t c = p; c < width_; ++c) v[c] -= f * rows_[r][c];
        }
    }
    for (std::size_t c = 0; c < width_; ++c)
        if (!v[c].is_zero()) return c;
    return width_;
}

bool SpanBuilder::insert(std::vector<Rational> v) {
    if (v.size() != width_) throw ArityError("SpanBuilder: wrong vector width");
    const std::size_t p = reduce(v);
    if (p == width_) return false;

    const Rational lead = v[p];
    for (std::size_t c = p; c < width_; ++c) v[c] /= lead;

    // back-eliminate column p from the existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (!rows_[r][p].is_zero()) {
            const Rational f = rows_[r][p];
            for (std::size_t c = p; c < width_; ++c) rows_[r][c] -= f * v[c];
        }
    }

    const auto at = std::upper_bound(pivots_.begin(), pivots_.end(), p);
    const std::size_t idx = static_cast<std::size_t>(at - pivots_.begin());
    pivots_.insert(at, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
}

bool SpanBuilder::contains(std::span<const Rational> v) const {
    if (v.size() != width_) throw ArityError("SpanBuilder: wrong vector width");
    std::vector<Rational> copy(v.begin(), v.end());
    return reduce(copy) == width_;
}

}  // namespace addact

#pragma once

// Just enough exact rational linear algebra: an incremental row space with
// rank and membership queries, kept in reduced echelon form.

#include <cstddef>
#include <span>
#include <vector>

#include "addact/rational.hpp"

namespace addact {

class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t width) : width_(width) {}

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }

    // Adds v to the span; returns true when the rank grew.
    bool insert(std::vector<Rational> v);

    bool contains(std::span<const Rational> v) const;

    // Echelonized basis rows (each normalized to pivot 1, pivots strictly
    // increasing, fully back-eliminated).
    const std::vector<std::vector<Rational>>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

private:
    // Reduces v by the stored rows; returns the pivot column or width_ when
    // v reduces to zero.
    std::size_t reduce(std::vector<Rational>& v) const;

    std::size_t width_;
    std::vector<std::vector<Rational>> rows_;   // sorted by pivot column
    std::vector<std::size_t> pivots_;
};

}  // namespace addact

#pragma once

// Exception hierarchy. Every failure mode the library reports deliberately
// gets its own type so callers can distinguish bad input from broken math.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace addact {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands live over different polynomial rings (or algebras) and no
// embedding was requested.
struct RingMismatchError : Error {
    using Error::Error;
};

// A vector/tuple has the wrong length for the operation.
struct ArityError : Error {
    using Error::Error;
};

// The quotient by the ideal is not a finite-dimensional vector space.
struct InfiniteDimensionalError : Error {
    using Error::Error;
};

// The quotient algebra is not local (equivalently here: the generators'
// images are not nilpotent).
struct NotLocalError : Error {
    using Error::Error;
};

// The maximal ideal's powers never reach zero under the given table.
struct NotNilpotentError : Error {
    using Error::Error;
};

// exp() needs an element with zero unit coordinate.
struct NotInMaximalIdealError : Error {
    using Error::Error;
};

// log() needs an element with unit coordinate exactly 1.
struct NotUnipotentUnitError : Error {
    using Error::Error;
};

// A polynomial tuple is not of the shape (x1 + h1, ..., xn + hn) with each
// hi depending only on earlier variables.
struct NotTriangularError : Error {
    using Error::Error;
};

// The algebra basis is not compatible with the maximal-ideal filtration.
struct FiltrationError : Error {
    using Error::Error;
};

// Catalog lookup by an unknown name.
struct NotFoundError : Error {
    using Error::Error;
};

// The Buchberger loop exceeded its S-pair budget.
struct SPairLimitError : Error {
    using Error::Error;
};

// Text input rejected by a parser; carries a 1-based source position.
struct ParseError : Error {
    std::size_t line;
    std::size_t column;
    ParseError(const std::string& what, std::size_t line_, std::size_t column_)
        : Error(what + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

}  // namespace addact

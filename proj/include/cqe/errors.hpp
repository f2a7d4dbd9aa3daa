#pragma once

#include <stdexcept>
#include <string>

namespace cqe {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A construction degenerated (collinear points, coincident circles, ...).
struct degenerate_error : error {
    using error::error;
};

/// A point at infinity appeared where a finite point was required.
struct infinity_error : error {
    using error::error;
};

/// Input violates a precondition (non-finite value, wrong shape, ...).
struct domain_error : error {
    using error::error;
};

/// DSL / file parse failure; carries a position when known.
struct parse_error : error {
    std::size_t position;
    explicit parse_error(const std::string& msg, std::size_t pos = 0)
        : error(msg), position(pos) {}
};

/// A center is undefined at a particular triangle (zero denominator or
/// zero coordinate triple).  Samplers catch this and skip the sample.
struct undefined_center : error {
    using error::error;
};

} // namespace cqe

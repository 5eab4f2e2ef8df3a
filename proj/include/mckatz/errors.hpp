#ifndef MCKATZ_ERRORS_HPP
#define MCKATZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mckatz {

// Domain-level failure: the input was readable but violates a precondition
// of the requested operation.  The CLI maps these to exit code 2.
struct calc_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input could not be parsed at all (malformed JSON, bad rational literal,
// wrong shape).  The CLI maps these to exit code 3.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : calc_error {
    division_by_zero() : calc_error("division by zero") {}
};

// real_sign on a scalar that is not fixed by complex conjugation.
struct not_real_error : calc_error {
    explicit not_real_error(const std::string& what) : calc_error(what) {}
};

// jordan_data found an eigenvalue that is no root of unity in the working
// cyclotomic field; carries the leftover characteristic factor.
struct eigenvalue_outside_field : calc_error {
    explicit eigenvalue_outside_field(const std::string& what) : calc_error(what) {}
};

// levelt generator construction with colliding local eigenvalues.
struct resonance_error : calc_error {
    explicit resonance_error(const std::string& what) : calc_error(what) {}
};

struct precondition_error : calc_error {
    explicit precondition_error(const std::string& what) : calc_error(what) {}
};

// Scalar tuple multiplication whose scalars do not multiply to 1.
struct product_violation : calc_error {
    explicit product_violation(const std::string& what) : calc_error(what) {}
};

struct unsupported_parameter : calc_error {
    explicit unsupported_parameter(const std::string& what) : calc_error(what) {}
};

// Exact left division failed; names the term where it failed.
struct not_divisible : calc_error {
    explicit not_divisible(const std::string& what) : calc_error(what) {}
};

// An indicial polynomial has a non-rational root; carries the factor.
struct non_rational_exponent : calc_error {
    explicit non_rational_exponent(const std::string& what) : calc_error(what) {}
};

} // namespace mckatz

#endif

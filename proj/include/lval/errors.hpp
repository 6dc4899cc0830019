#pragma once

#include <stdexcept>

namespace lval {

/// An analysis precondition does not hold (theorem hypothesis violated,
/// enumeration bound exceeded, method not applicable to the input).
class inapplicable_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A closed form and the independent linear-algebra route disagree.
/// Always a bug or an erratum finding; never swallowed.
class oracle_mismatch_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace lval

#pragma once

#include <stdexcept>
#include <string>

namespace leonard {

/// Malformed or inconsistent input: unparseable literals, wrong shapes,
/// mixed fields, invalid moduli. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace leonard

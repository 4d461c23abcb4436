#pragma once

#include <stdexcept>
#include <string>

namespace univalence {

// A computation could not be carried out for mathematical reasons
// (vanishing derivative, singular quadrature sample, lost precision).
// Argument and precondition failures use std::invalid_argument instead.
class NumericError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace univalence

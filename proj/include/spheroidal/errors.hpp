#pragma once

#include <stdexcept>

namespace sph {

/// Basis index outside its admissible range.
class IndexError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// Operation not defined for the given spheroid regime or parameter.
class UnsupportedRegime : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

}  // namespace sph

#pragma once

#include <stdexcept>
#include <string>

namespace luroth {

/// Input is well formed but geometrically degenerate for the requested
/// construction (singular conic, wrong kernel dimension, coincident points...).
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The construction needs irrational (or repeated) roots.
class NotRationallySolvable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace luroth

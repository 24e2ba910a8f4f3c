#pragma once

#include <stdexcept>
#include <string>

namespace gpid {

struct InvalidParameters : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotA2RDF : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// P(n,1)- or P(n,2)-specific machinery applied to the wrong k.
struct WrongFamily : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace gpid

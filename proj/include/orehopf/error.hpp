#pragma once

#include <stdexcept>
#include <string>

namespace orehopf {

// All precondition and validation failures raise this type; the message is
// the user-facing diagnostic.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace orehopf

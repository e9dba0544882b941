//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DOCKAUDIT_ERROR_HPP
#define DOCKAUDIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dockaudit {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised by the file-format and SMILES parsers. Carries the 1-based line
/// number of the offending record when one is known (0 otherwise).
class ParseError : public Error {
public:
  ParseError(const std::string &format, int line, const std::string &detail)
      : Error(format + (line > 0 ? " line " + std::to_string(line) : "") +
              ": " + detail),
        line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

}  // namespace dockaudit

#endif  // DOCKAUDIT_ERROR_HPP

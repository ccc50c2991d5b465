// Copyright 2026 The SciKG Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCIKG_ERROR_H_
#define SCIKG_ERROR_H_

#include <stdexcept>
#include <string>

namespace scikg {

// All pipeline failures are reported as Error. Loaders prefix the message
// with "<path>:<line>: " so the offending location is always named.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Builds an error message for a location inside an input file.
inline Error LocatedError(const std::string &path, size_t line,
                          const std::string &what) {
  return Error(path + ":" + std::to_string(line) + ": " + what);
}

}  // namespace scikg

#endif  // SCIKG_ERROR_H_

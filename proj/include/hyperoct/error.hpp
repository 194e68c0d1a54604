/* Copyright 2026 The hyperoct Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#ifndef HYPEROCT_ERROR_HPP
#define HYPEROCT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hyperoct {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HYPEROCT_ERROR(Name)                                      \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

HYPEROCT_ERROR(SizeMismatch);
HYPEROCT_ERROR(FlavorMismatch);
HYPEROCT_ERROR(NotHomogeneous);
HYPEROCT_ERROR(EmptyWord);
HYPEROCT_ERROR(NotLyndon);
HYPEROCT_ERROR(SingleLetter);
HYPEROCT_ERROR(OutsideBasis);
HYPEROCT_ERROR(NotInAlphabet);
HYPEROCT_ERROR(StateSpaceTooLarge);
HYPEROCT_ERROR(HypothesesNotMet);
HYPEROCT_ERROR(BadIndices);
HYPEROCT_ERROR(FlavorUnsupported);
HYPEROCT_ERROR(ParseError);

#undef HYPEROCT_ERROR

}  // namespace hyperoct

#endif

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
#ifndef HYPEROCT_RATIONAL_HPP
#define HYPEROCT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace hyperoct {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" in lowest terms, or "p" when q = 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text);

// a^e for integer a and signed exponent e.
Rational rational_pow(long a, long e);

}  // namespace hyperoct

#endif

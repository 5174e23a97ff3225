/*
 * Copyright 2026 The semcn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace semcn::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column position by name; throws ValidationError when absent.
  std::size_t column(std::string_view name) const;
  friend bool operator==(const Table&, const Table&) = default;
};

/// Shortest decimal text that parses back to the same double. Non-finite
/// values print as inf, -inf and nan.
std::string format_number(double value);
double parse_number(std::string_view text);

/// RFC 4180 output with LF line ends. Fields holding a comma, quote or line
/// break are quoted.
void write(std::ostream& out, const Table& table);
std::string to_string(const Table& table);

/// Every row must have as many fields as the header.
Table read(std::istream& in);
Table parse(std::string_view text);

}  // namespace semcn::csv

/* Copyright 2026 The ufc Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef UFC_SPAN_HPP_
#define UFC_SPAN_HPP_

#include <cstdint>

namespace ufc {

/// Source location. Lines and columns are 1-based; a zero line marks a
/// synthesized node with no source position.
struct Span {
  std::uint32_t line = 0;
  std::uint32_t column = 0;
  std::uint32_t offset = 0;
  std::uint32_t length = 0;

  bool known() const { return line != 0; }
  std::uint32_t end() const { return offset + length; }
  bool contains(const Span& inner) const {
    return inner.offset >= offset && inner.end() <= end();
  }
  friend bool operator==(const Span&, const Span&) = default;
};

/// Smallest span covering both arguments.
inline Span cover(const Span& a, const Span& b) {
  if (!a.known()) return b;
  if (!b.known()) return a;
  const Span& first = a.offset <= b.offset ? a : b;
  std::uint32_t end = a.end() > b.end() ? a.end() : b.end();
  return Span{first.line, first.column, first.offset, end - first.offset};
}

}  // namespace ufc

#endif  // UFC_SPAN_HPP_

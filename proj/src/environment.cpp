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

#include "ufc/environment.hpp"

#include <stdexcept>

namespace ufc {

const Declaration* Environment::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &decls_[it->second];
}

void Environment::add(Declaration decl) {
  if (contains(decl.name)) throw std::logic_error("Environment::add: duplicate " + decl.name);
  index_.emplace(decl.name, decls_.size());
  decls_.push_back(std::move(decl));
}

}  // namespace ufc

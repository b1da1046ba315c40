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

#ifndef UFC_CORPUS_HPP_
#define UFC_CORPUS_HPP_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ufc/loader.hpp"

namespace ufc {

/// One row of `manifest.tsv`: name, file, anchor, expected-axioms.
struct ManifestEntry {
  std::string name;
  std::string file;
  std::string anchor;
  std::set<std::string> expected_axioms;
};

struct CorpusManifest {
  std::vector<ManifestEntry> entries;

  const ManifestEntry* find(std::string_view name) const;
};

/// Tab-separated, one header row, `#` comments; "-" means no axioms,
/// otherwise a comma-separated list.
CorpusManifest parse_manifest(std::string_view text);

struct CorpusItem {
  std::string name;
  std::string file;
  bool passed = false;
  std::set<std::string> axioms;
  std::optional<Diagnostic> diagnostic;
  std::string problem;  // why the item failed, empty when passed
};

struct CorpusReport {
  std::vector<CorpusItem> items;
  std::vector<std::string> drift;  // manifest/file mismatches
  LoadResult load;

  bool all_passed() const;
  const CorpusItem* find(std::string_view name) const;
};

/// `NN_<topic>.uf` files of a prelude directory in numeric order.
std::vector<std::string> prelude_files(const std::string& dir);

/// Checks every source in order and compares each declaration with its
/// manifest entry. Never aborts: failures are recorded per item.
CorpusReport verify_corpus(const std::vector<Source>& sources, const CorpusManifest& manifest,
                           KernelConfig config = {});

/// Reads `dir/manifest.tsv` and the prelude files, then verify_corpus.
CorpusReport verify_corpus_dir(const std::string& dir, KernelConfig config = {});

std::string format_report(const CorpusReport& report);

}  // namespace ufc

#endif  // UFC_CORPUS_HPP_

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

#include "ufc/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ufc {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string trim(std::string s) {
  auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && ws(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && ws(s[i])) ++i;
  return s.substr(i);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string join(const std::set<std::string>& s) {
  if (s.empty()) return "{}";
  std::string out = "{";
  for (const std::string& x : s) out += (out.size() > 1 ? ", " : "") + x;
  return out + "}";
}

}  // namespace

const ManifestEntry* CorpusManifest::find(std::string_view name) const {
  for (const ManifestEntry& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

CorpusManifest parse_manifest(std::string_view text) {
  CorpusManifest m;
  bool header = true;
  for (const std::string& raw : split(text, '\n')) {
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 4) throw std::runtime_error("manifest: expected 4 columns in: " + line);
    ManifestEntry e;
    e.name = trim(cols[0]);
    e.file = trim(cols[1]);
    e.anchor = trim(cols[2]);
    std::string axioms = trim(cols[3]);
    if (axioms != "-") {
      for (const std::string& a : split(axioms, ',')) {
        if (!trim(a).empty()) e.expected_axioms.insert(trim(a));
      }
    }
    m.entries.push_back(std::move(e));
  }
  return m;
}

bool CorpusReport::all_passed() const {
  if (!drift.empty() || !load.io_errors.empty()) return false;
  return std::all_of(items.begin(), items.end(), [](const CorpusItem& i) { return i.passed; });
}

const CorpusItem* CorpusReport::find(std::string_view name) const {
  for (const CorpusItem& i : items) {
    if (i.name == name) return &i;
  }
  return nullptr;
}

std::vector<std::string> prelude_files(const std::string& dir) {
  std::vector<std::string> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const fs::path& p = entry.path();
    std::string name = p.filename().string();
    if (p.extension() == ".uf" && name.size() > 3 && std::isdigit(static_cast<unsigned char>(name[0])) &&
        std::isdigit(static_cast<unsigned char>(name[1])) && name[2] == '_') {
      out.push_back(p.string());
    }
  }
  std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
    return fs::path(a).filename() < fs::path(b).filename();
  });
  return out;
}

CorpusReport verify_corpus(const std::vector<Source>& sources, const CorpusManifest& manifest,
                           KernelConfig config) {
  CorpusReport report;
  report.load = load_sources(sources, config);

  std::map<std::string, const DeclOutcome*> seen;
  for (const DeclOutcome& o : report.load.outcomes) {
    CorpusItem item;
    item.name = o.name;
    item.file = fs::path(o.file).filename().string();
    seen[o.name] = &o;

    if (o.state == DeclOutcome::State::Failed) {
      item.diagnostic = o.diagnostic;
      item.problem = o.diagnostic ? render(*o.diagnostic) : "failed";
    } else if (o.state == DeclOutcome::State::Skipped) {
      item.problem = "skipped: depends on failed '" + o.skipped_because + "'";
    } else {
      item.axioms = report.load.env.find(o.name)->axioms;
      const ManifestEntry* entry = manifest.find(o.name);
      if (entry == nullptr) {
        item.problem = "no manifest entry";
      } else if (entry->file != item.file) {
        item.problem = "manifest places it in " + entry->file;
      } else if (entry->expected_axioms != item.axioms) {
        item.problem = "axioms " + join(item.axioms) + ", manifest expects " +
                       join(entry->expected_axioms);
      }
      item.passed = item.problem.empty();
    }
    report.items.push_back(std::move(item));
  }

  for (const ManifestEntry& e : manifest.entries) {
    if (!seen.count(e.name)) report.drift.push_back("manifest entry '" + e.name + "' (" + e.file +
                                                    ") has no declaration");
  }
  for (const CorpusItem& i : report.items) {
    if (!manifest.find(i.name)) report.drift.push_back("declaration '" + i.name + "' (" + i.file +
                                                       ") has no manifest entry");
  }
  return report;
}

CorpusReport verify_corpus_dir(const std::string& dir, KernelConfig config) {
  CorpusManifest manifest = parse_manifest(read_file((fs::path(dir) / "manifest.tsv").string()));
  std::vector<Source> sources;
  for (const std::string& path : prelude_files(dir)) sources.push_back(Source{path, read_file(path)});
  return verify_corpus(sources, manifest, config);
}

std::string format_report(const CorpusReport& report) {
  std::ostringstream out;
  for (const CorpusItem& i : report.items) {
    out << (i.passed ? "PASS " : "FAIL ") << i.file << ' ' << i.name << ' ' << join(i.axioms);
    if (!i.problem.empty()) out << "  -- " << i.problem;
    out << '\n';
  }
  for (const Diagnostic& d : report.load.diagnostics) {
    if (d.kind == DiagnosticKind::Parse) out << "PARSE " << render(d) << '\n';
  }
  for (const std::string& d : report.drift) out << "DRIFT " << d << '\n';
  return out.str();
}

}  // namespace ufc

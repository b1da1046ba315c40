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

#include "ufc/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <iostream>

#include "ufc/checker.hpp"
#include "ufc/evaluator.hpp"
#include "ufc/loader.hpp"
#include "ufc/surface.hpp"

namespace ufc::cli {

namespace {

int load_exit_code(const LoadResult& r) {
  if (!r.io_errors.empty()) return kUsageError;
  if (r.has(DiagnosticKind::Parse)) return kParseError;
  if (r.has(DiagnosticKind::FuelExhausted)) return kFuelExhausted;
  if (!r.diagnostics.empty()) return kTypeError;
  return kOk;
}

int trace(const Environment& env, const Term& start, std::uint64_t fuel, std::ostream& out) {
  Evaluator eval(env, fuel);
  Term cur = start;
  std::uint64_t n = 0;
  out << "0: " << print(cur) << '\n';
  while (std::optional<Term> next = eval.step(cur)) {
    if (n >= fuel) throw FuelExhausted(fuel);
    cur = std::move(*next);
    ++n;
    if (n <= kTraceCap) out << n << ": " << print(cur) << '\n';
  }
  if (n > kTraceCap) {
    out << "... trace truncated after " << kTraceCap << " steps; normal form after " << n
        << " steps:\n";
    out << n << ": " << print(cur) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.files.empty()) {
    err << "ufc: no input files\n";
    return kUsageError;
  }
  if (config.command != Command::Check && !config.def_name) {
    err << "ufc: --def NAME is required for this command\n";
    return kUsageError;
  }
  if (config.max_level > 9) {
    err << "ufc: --max-level must be between 0 and 9\n";
    return kUsageError;
  }

  KernelConfig kernel{config.max_level, config.fuel};
  LoadResult loaded = load_files(config.files, kernel);
  for (const std::string& msg : loaded.io_errors) err << "ufc: " << msg << '\n';
  for (const Diagnostic& d : loaded.diagnostics) err << render(d, config.color) << '\n';
  if (int code = load_exit_code(loaded); code != kOk) return code;

  const Environment& env = loaded.env;
  if (config.command == Command::Check) {
    std::size_t postulates = 0;
    for (const Declaration& d : env.decls()) postulates += d.is_postulate() ? 1 : 0;
    out << "checked " << env.size() << " declarations (" << postulates << " postulates)\n";
    return kOk;
  }

  const Declaration* decl = env.find(*config.def_name);
  if (decl == nullptr) {
    err << "ufc: unknown definition '" << *config.def_name << "'\n";
    return kUsageError;
  }
  if (config.command == Command::Axioms) {
    for (const std::string& a : decl->axioms) out << a << '\n';
    return kOk;
  }
  if (decl->is_postulate()) {
    err << "ufc: '" << decl->name << "' is a postulate and has no body\n";
    return kUsageError;
  }
  try {
    if (config.command == Command::Norm) {
      Evaluator eval(env, config.fuel);
      out << print(eval.normalize(*decl->body)) << '\n';
      return kOk;
    }
    return trace(env, *decl->body, config.fuel, out);
  } catch (const FuelExhausted& f) {
    err << "ufc: FuelExhausted: " << f.what() << '\n';
    return kFuelExhausted;
  }
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"ufc: checker and normalizer for .uf proof files", "ufc"};
  app.require_subcommand(1);

  CliConfig config;
  bool no_color = false;
  std::string def_name;

  auto common = [&](CLI::App* sub, bool needs_def) {
    sub->add_option("files", config.files, "Input .uf files, loaded in order")->required();
    if (needs_def) sub->add_option("--def", def_name, "Definition to operate on")->required();
    sub->add_option("--max-level", config.max_level, "Largest universe level")
        ->check(CLI::Range(0, 9));
    sub->add_option("--fuel", config.fuel, "Reduction step budget");
    sub->add_flag("--no-color", no_color, "Disable colored diagnostics");
  };
  CLI::App* check_cmd = app.add_subcommand("check", "Type-check files");
  CLI::App* norm_cmd = app.add_subcommand("norm", "Print the normal form of a definition");
  CLI::App* trace_cmd = app.add_subcommand("trace", "Print each reduction step of a definition");
  CLI::App* axioms_cmd = app.add_subcommand("axioms", "Print the postulates a definition uses");
  common(check_cmd, false);
  common(norm_cmd, true);
  common(trace_cmd, true);
  common(axioms_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  if (check_cmd->parsed()) config.command = Command::Check;
  if (norm_cmd->parsed()) config.command = Command::Norm;
  if (trace_cmd->parsed()) config.command = Command::Trace;
  if (axioms_cmd->parsed()) config.command = Command::Axioms;
  if (!def_name.empty()) config.def_name = def_name;
  config.color = !no_color && &err == &std::cerr && ::isatty(STDERR_FILENO) != 0;
  return run(config, out, err);
}

}  // namespace ufc::cli

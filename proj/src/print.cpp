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

#include <algorithm>
#include <cctype>
#include <set>

#include "ufc/surface.hpp"

namespace ufc {

namespace {

enum Prec { kTerm = 0, kApp = 1, kAtom = 2 };

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  }
  return !is_keyword(s);
}

class Printer {
 public:
  Printer(const Term& root, const std::vector<std::string>& hints) {
    collect_globals(root, globals_);
    for (const std::string& h : hints) {
      std::string base = valid_identifier(h) ? h : std::string("x");
      names_.push_back(pick(base));
    }
  }

  std::string print(const Term& t, int prec) {
    switch (t.kind()) {
      case Kind::Var:
        if (t.index() < names_.size()) return names_[names_.size() - 1 - t.index()];
        return "free" + std::to_string(t.index() - names_.size());
      case Kind::Global:
        return t.name();
      case Kind::Universe:
        return "U" + std::to_string(t.level());
      case Kind::Lambda: {
        std::string name = pick(binder_base_name(t[0]));
        std::string out = "fun (" + name + " : " + print(t[0], kTerm) + ") => ";
        out += under(name, t[1], kTerm);
        return wrap(out, prec > kTerm);
      }
      case Kind::Pi: {
        if (!mentions_var(t[1], 0)) {
          std::string out = print(t[0], kApp) + " -> " + under("_", t[1], kTerm);
          return wrap(out, prec > kTerm);
        }
        std::string name = pick(binder_base_name(t[0]));
        std::string out = "(" + name + " : " + print(t[0], kTerm) + ") -> ";
        out += under(name, t[1], kTerm);
        return wrap(out, prec > kTerm);
      }
      case Kind::Sigma: {
        std::string name = pick(binder_base_name(t[0]));
        std::string out = "Sig (" + name + " : " + print(t[0], kTerm) + "), ";
        out += under(name, t[1], kTerm);
        return wrap(out, prec > kTerm);
      }
      case Kind::App:
        return wrap(print(t[0], kApp) + " " + print(t[1], kAtom), prec > kApp);
      case Kind::Zero:
      case Kind::Suc: {
        std::int64_t n = as_numeral(t);
        if (n >= 0 && n <= static_cast<std::int64_t>(kMaxNumeral)) return std::to_string(n);
        if (t.kind() == Kind::Zero) return "zero";
        break;
      }
      default:
        break;
    }
    // Saturated builtin forms.
    std::string out(keyword(t.kind()));
    if (t.children().empty()) return out;
    for (std::size_t i = 0; i < t.children().size(); ++i) {
      out += ' ';
      if (t.kind() == Kind::SigElim && i == 1) {
        std::string name = pick(binder_base_name(t[0]));
        out += "(fun (" + name + " : " + print(t[0], kTerm) + ") => " + under(name, t[1], kTerm) + ")";
      } else {
        out += print(t[i], kAtom);
      }
    }
    return wrap(out, prec > kApp);
  }

 private:
  static std::string wrap(std::string s, bool parens) { return parens ? "(" + s + ")" : s; }

  std::string under(const std::string& name, const Term& body, int prec) {
    names_.push_back(name);
    std::string out = print(body, prec);
    names_.pop_back();
    return out;
  }

  std::string pick(const std::string& base) {
    std::vector<std::string> taken(names_.begin(), names_.end());
    taken.insert(taken.end(), globals_.begin(), globals_.end());
    return fresh_name(base, taken);
  }

  std::set<std::string> globals_;
  std::vector<std::string> names_;
};

}  // namespace

std::string fresh_name(std::string base, const std::vector<std::string>& taken) {
  if (base.empty()) base = "x";
  while (is_keyword(base) || std::find(taken.begin(), taken.end(), base) != taken.end()) {
    base += '\'';
  }
  return base;
}

std::string binder_base_name(const Term& domain) {
  switch (domain.kind()) {
    case Kind::Universe: return "A";
    case Kind::Pi: return "f";
    case Kind::Id: return "e";
    default: return "x";
  }
}

std::string print(const Term& t, const std::vector<std::string>& names) {
  return Printer(t, names).print(t, kTerm);
}

}  // namespace ufc

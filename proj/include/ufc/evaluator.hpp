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

#ifndef UFC_EVALUATOR_HPP_
#define UFC_EVALUATOR_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "ufc/environment.hpp"
#include "ufc/term.hpp"

namespace ufc {

/// Raised when a reduction exceeds its step budget.
class FuelExhausted : public std::runtime_error {
 public:
  explicit FuelExhausted(std::uint64_t limit)
      : std::runtime_error("reduction exceeded " + std::to_string(limit) + " steps"),
        limit_(limit) {}
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
};

/// Definitional equality by δ (unfolding definitions), β, ι (eliminator on
/// constructor) and function η. Postulates never unfold. Every contraction
/// costs one unit of fuel; the budget is shared by all calls on one
/// Evaluator.
class Evaluator {
 public:
  explicit Evaluator(const Environment& env) : Evaluator(env, env.config().fuel) {}
  Evaluator(const Environment& env, std::uint64_t fuel) : env_(env), fuel_(fuel) {}

  Term whnf(const Term& t);
  Term normalize(const Term& t);
  bool equal(const Term& a, const Term& b);

  /// One leftmost-outermost δ/β/ι step, or nullopt when t is normal.
  std::optional<Term> step(const Term& t);

  std::uint64_t steps() const { return steps_; }
  std::uint64_t fuel() const { return fuel_; }

 private:
  void tick();
  std::optional<Term> contract(const Term& t);  // root redex only
  bool conv(const Term& a, const Term& b);

  const Environment& env_;
  std::uint64_t fuel_;
  std::uint64_t steps_ = 0;
};

// Convenience wrappers using the environment's configured fuel.
Term whnf(const Environment& env, const Term& t);
Term normalize(const Environment& env, const Term& t);
std::optional<Term> step(const Environment& env, const Term& t);
bool equal(const Environment& env, const Term& a, const Term& b);

}  // namespace ufc

#endif  // UFC_EVALUATOR_HPP_

/*
 * Copyright 2026 The riskcomb authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RISKCOMB_AXIOMS_HPP
#define RISKCOMB_AXIOMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "riskcomb/combinators.hpp"

namespace riskcomb {

/// Axioms the falsification search knows how to attack.  The first six apply
/// to combination functions, the risk-measure set swaps Additivity and
/// Boundedness for LawInvariance, ComonotonicAdditivity and the finite-space
/// Fatou surrogate (on a finite space pointwise and sup-norm convergence
/// coincide, so the Lipschitz bound |rho(X)-rho(Y)| <= ||X-Y||_inf implies
/// Fatou continuity).
enum class Axiom {
  Monotonicity,
  TranslationInvariance,
  PositiveHomogeneity,
  Convexity,
  Additivity,
  Boundedness,
  LawInvariance,
  ComonotonicAdditivity,
  FatouLipschitz,
};

std::string axiom_name(Axiom axiom);

struct CheckWitness {
  std::vector<double> first;   // profile R or position X
  std::vector<double> second;  // profile S or position Y (may be empty)
  double scalar = 0.0;         // lambda or the shift C
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Outcome of a seeded falsification search: pass means no counterexample
/// was found, never a proof.
struct CheckReport {
  std::string subject;
  std::string axiom;
  bool passed = false;
  std::size_t trials = 0;
  std::optional<CheckWitness> witness;
};

/// Randomized search over profile pairs and scalars (curated adversarial
/// corpus first, then seeded random trials).
CheckReport check_f_axiom(const CombinationSpec& f, Axiom axiom,
                          std::uint64_t seed, std::size_t trials = 10000);

/// Same search over position pairs for the composed risk measure.
CheckReport check_rho_axiom(const RiskBundle& rho, Axiom axiom,
                            std::uint64_t seed, std::size_t trials = 10000);

/// |rho(X) - rho(Y)| <= max_k |X_k - Y_k| over sampled pairs.
CheckReport lipschitz_check(const RiskBundle& rho, std::uint64_t seed,
                            std::size_t trials = 10000);

}  // namespace riskcomb

#endif  // RISKCOMB_AXIOMS_HPP

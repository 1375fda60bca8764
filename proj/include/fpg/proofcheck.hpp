// Copyright 2026 The fpg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FPG_PROOFCHECK_HPP
#define FPG_PROOFCHECK_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fpg/presentation.hpp"

namespace fpg {

/// A certificate factor: one conjugate of a relator or of an earlier step's
/// identity. Sources are either relator indices or indices of prior steps.
struct ProofSource {
  enum class Kind { relator, step } kind;
  std::size_t index;
};

struct ProofFactor {
  Word conjugator;
  ProofSource source;
  int exponent;  // +1 or -1
};

/// One derivation step: a claimed identity lhs = rhs together with an
/// explicit expression of lhs rhs^-1 as a product of conjugated sources.
struct ProofStep {
  std::string name;
  Word lhs;
  Word rhs;
  std::vector<ProofFactor> factors;

  /// lhs rhs^-1, the relator form of the identity.
  Word identity_word() const { return multiply(lhs, invert(rhs)); }
};

/// An ordered derivation over a fixed presentation. Steps may cite relators
/// (r1, r2, ... in presentation order) and earlier steps by name.
class ProofScript {
 public:
  ProofScript(Presentation presentation, std::vector<ProofStep> steps);

  const Presentation& presentation() const { return presentation_; }
  const std::vector<ProofStep>& steps() const { return steps_; }

 private:
  Presentation presentation_;
  std::vector<ProofStep> steps_;
};

// Proof text format (".proof"), one step per line, '#' comments:
//
//   step NAME: WORD = WORD via FACTOR {, FACTOR}
//   step NAME: WORD = WORD                      -- empty certificate
//   FACTOR := conj(WORD, SOURCE) ['^' '-' '1']
//   SOURCE := rK (1-based relator index) | NAME of an earlier step
//
// Words use the presentation grammar; 'step', 'via' and 'conj' are reserved
// words here, and step names may not look like relator references.
ProofScript parse_proof(std::string_view text, const Presentation& p);

std::string serialize_proof(const ProofScript& script);

struct StepVerdict {
  bool accepted = false;
  // residual = (certificate product)^-1 * lhs * rhs^-1; empty iff accepted
  Word residual;
};

/// The checker performs no search: it multiplies out the certificate and
/// compares free reductions. Prior steps contribute their claimed identity
/// words; their own verdicts are not consulted, so a bad certificate
/// invalidates exactly its own step.
StepVerdict check_step(const Presentation& p,
                       const std::vector<ProofStep>& established,
                       const ProofStep& step);

struct ScriptReport {
  std::vector<StepVerdict> verdicts;
  bool all_accepted = false;
  bool proves_trivial = false;  // accepted steps cover g = 1 for every generator
  std::string summary;
};

ScriptReport check_script(const ProofScript& script);

}  // namespace fpg

#endif  // FPG_PROOFCHECK_HPP

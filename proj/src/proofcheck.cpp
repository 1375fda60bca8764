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

#include "fpg/proofcheck.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lexer.hpp"

namespace fpg {

namespace {

bool looks_like_relator_ref(const std::string& name) {
  if (name.size() < 2 || name[0] != 'r') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

}  // namespace

ProofScript::ProofScript(Presentation presentation,
                         std::vector<ProofStep> steps)
    : presentation_(std::move(presentation)), steps_(std::move(steps)) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const ProofStep& s = steps_[i];
    if (!names.insert(s.name).second)
      throw error("duplicate step name '" + s.name + "'");
    for (const ProofFactor& f : s.factors) {
      if (f.source.kind == ProofSource::Kind::relator) {
        if (f.source.index >= presentation_.num_relators())
          throw error("step '" + s.name + "' cites a relator out of range");
      } else if (f.source.index >= i) {
        throw error("step '" + s.name + "' cites a step that is not earlier");
      }
    }
  }
}

ProofScript parse_proof(std::string_view text, const Presentation& p) {
  Lexer lex(text);
  std::vector<ProofStep> steps;
  std::map<std::string, std::size_t> step_index;
  const AlphabetPtr& alphabet = p.alphabet();

  while (lex.peek().kind != TokenKind::End) {
    Token kw = lex.expect(TokenKind::Ident, "'step'");
    if (kw.text != "step")
      throw parse_error("expected 'step'", kw.span);
    Token name = lex.expect(TokenKind::Ident, "step name");
    if (name.text == "step" || name.text == "via" || name.text == "conj")
      throw parse_error("'" + name.text + "' is reserved", name.span);
    if (looks_like_relator_ref(name.text))
      throw parse_error("step name '" + name.text +
                            "' would shadow a relator reference",
                        name.span);
    lex.expect(TokenKind::Colon, "':'");
    Word lhs = parse_word_at(lex, alphabet, "via");
    lex.expect(TokenKind::Equals, "'='");
    Word rhs = parse_word_at(lex, alphabet, "via");

    std::vector<ProofFactor> factors;
    if (lex.peek().kind == TokenKind::Ident && lex.peek().text == "via") {
      lex.next();
      for (;;) {
        Token c = lex.expect(TokenKind::Ident, "'conj'");
        if (c.text != "conj")
          throw parse_error("expected 'conj'", c.span);
        lex.expect(TokenKind::LParen, "'('");
        Word conjugator = parse_word_at(lex, alphabet, nullptr);
        lex.expect(TokenKind::Comma, "','");
        Token src = lex.expect(TokenKind::Ident, "source name");
        ProofSource source{};
        if (looks_like_relator_ref(src.text)) {
          std::size_t idx = std::stoull(src.text.substr(1));
          if (idx == 0 || idx > p.num_relators())
            throw parse_error("relator reference out of range", src.span);
          source = {ProofSource::Kind::relator, idx - 1};
        } else {
          auto it = step_index.find(src.text);
          if (it == step_index.end())
            throw parse_error("unknown source '" + src.text + "'", src.span);
          source = {ProofSource::Kind::step, it->second};
        }
        lex.expect(TokenKind::RParen, "')'");
        int exponent = 1;
        if (lex.peek().kind == TokenKind::Caret) {
          lex.next();
          Token minus = lex.expect(TokenKind::Minus, "'-1' exponent");
          (void)minus;
          Token one = lex.expect(TokenKind::Number, "'1'");
          if (one.text != "1")
            throw parse_error("only ^-1 is meaningful here", one.span);
          exponent = -1;
        }
        factors.push_back({std::move(conjugator), source, exponent});
        if (lex.peek().kind == TokenKind::Comma)
          lex.next();
        else
          break;
      }
    }
    step_index[name.text] = steps.size();
    steps.push_back({name.text, std::move(lhs), std::move(rhs),
                     std::move(factors)});
  }
  return ProofScript(p, std::move(steps));
}

std::string serialize_proof(const ProofScript& script) {
  std::string out;
  for (const ProofStep& s : script.steps()) {
    out += "step " + s.name + ": " + to_string(s.lhs) + " = " +
           to_string(s.rhs);
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
      const ProofFactor& f = s.factors[i];
      out += i == 0 ? " via " : ", ";
      out += "conj(" + to_string(f.conjugator) + ", ";
      if (f.source.kind == ProofSource::Kind::relator)
        out += "r" + std::to_string(f.source.index + 1);
      else
        out += script.steps()[f.source.index].name;
      out += ")";
      if (f.exponent < 0) out += "^-1";
    }
    out += "\n";
  }
  return out;
}

StepVerdict check_step(const Presentation& p,
                       const std::vector<ProofStep>& established,
                       const ProofStep& step) {
  Word product(p.alphabet());
  for (const ProofFactor& f : step.factors) {
    Word base = f.source.kind == ProofSource::Kind::relator
                    ? p.relator(f.source.index)
                    : established.at(f.source.index).identity_word();
    if (f.exponent < 0) base = invert(base);
    product = multiply(product, conjugate(f.conjugator, base));
  }
  Word residual = multiply(invert(product), step.identity_word());
  return {residual.empty(), std::move(residual)};
}

ScriptReport check_script(const ProofScript& script) {
  const Presentation& p = script.presentation();
  ScriptReport report;
  report.all_accepted = true;
  for (const ProofStep& s : script.steps()) {
    StepVerdict v = check_step(p, script.steps(), s);
    report.all_accepted = report.all_accepted && v.accepted;
    report.verdicts.push_back(std::move(v));
  }

  // Triviality: accepted steps of the form g = 1 must cover every generator.
  std::set<std::uint32_t> killed;
  for (std::size_t i = 0; i < script.steps().size(); ++i) {
    if (!report.verdicts[i].accepted) continue;
    const ProofStep& s = script.steps()[i];
    if (s.rhs.empty() && s.lhs.size() == 1 && s.lhs.letters()[0].sign == 1)
      killed.insert(s.lhs.letters()[0].gen);
  }
  report.proves_trivial =
      report.all_accepted && killed.size() == p.num_generators();

  std::size_t accepted =
      static_cast<std::size_t>(std::count_if(report.verdicts.begin(),
                                             report.verdicts.end(),
                                             [](const StepVerdict& v) {
                                               return v.accepted;
                                             }));
  report.summary = std::to_string(accepted) + "/" +
                   std::to_string(report.verdicts.size()) + " steps accepted";
  if (report.proves_trivial)
    report.summary += "; presentation proved trivial by certificate";
  return report;
}

}  // namespace fpg

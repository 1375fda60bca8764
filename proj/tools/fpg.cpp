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

// Command-line driver. Results go to stdout (one machine-readable RESULT
// line per command), diagnostics to stderr. Exit codes: 0 verified/success,
// 1 verification failure, 2 usage or parse error, 3 resource exhaustion.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "fpg/abelian.hpp"
#include "fpg/corpus.hpp"
#include "fpg/enumerator.hpp"
#include "fpg/parser.hpp"
#include "fpg/proofcheck.hpp"
#include "fpg/surgery.hpp"
#include "fpg/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;
constexpr int kExhausted = 3;

fpg::Presentation load_presentation(const std::string& path) {
  return fpg::parse_presentation(fpg::read_file(path));
}

int cmd_canon(const std::string& file) {
  std::cout << fpg::serialize_presentation(load_presentation(file)) << "\n";
  return kOk;
}

int cmd_parse(const std::string& file) {
  fpg::Presentation p = load_presentation(file);
  std::cout << fpg::serialize_presentation(p) << "\n";
  std::cout << "RESULT generators=" << p.num_generators()
            << " relators=" << p.num_relators() << "\n";
  return kOk;
}

int cmd_simplify(const std::string& file,
                 const std::vector<std::string>& eliminations, bool auto_mode,
                 const std::string& log_path) {
  fpg::Presentation p = load_presentation(file);
  fpg::TietzeLog log;

  if (auto_mode) {
    auto [simplified, moves] = fpg::auto_simplify(p);
    p = simplified;
    log = moves;
  }
  for (const std::string& spec : eliminations) {
    const auto eq = spec.find('=');
    const std::string gen_name = spec.substr(0, eq);
    auto gen = p.alphabet()->index(gen_name);
    if (!gen) {
      std::cerr << "error: no generator '" << gen_name << "' left\n";
      return kVerificationFailed;
    }
    auto def = fpg::find_definition(p, *gen);
    if (!def) {
      std::cerr << "error: no relator defines '" << gen_name << "'\n";
      return kVerificationFailed;
    }
    if (eq != std::string::npos) {
      fpg::Word wanted =
          fpg::parse_word(spec.substr(eq + 1), p.alphabet());
      if (!(def->second == wanted)) {
        std::cerr << "error: '" << gen_name << "' is defined as "
                  << fpg::to_string(def->second) << ", not "
                  << fpg::to_string(wanted) << "\n";
        return kVerificationFailed;
      }
    }
    auto [next, move] = fpg::eliminate_generator(p, *gen, def->first);
    p = std::move(next);
    log.push_back(std::move(move));
  }

  if (!log_path.empty()) {
    std::ofstream out(log_path);
    for (const fpg::TietzeMove& move : log) {
      if (const auto* e = std::get_if<fpg::TietzeEliminate>(&move))
        out << "eliminate " << e->generator << " = "
            << fpg::to_string(e->definition) << " (relator "
            << (e->relator_index + 1) << ")\n";
      else if (const auto* d = std::get_if<fpg::TietzeRemoveDuplicate>(&move))
        out << "remove-duplicate " << (d->index + 1) << "\n";
      else if (const auto* t = std::get_if<fpg::TietzeRemoveTrivial>(&move))
        out << "remove-trivial " << (t->index + 1) << "\n";
      else if (const auto* a = std::get_if<fpg::TietzeAddRelator>(&move))
        out << "add-relator " << fpg::to_string(a->relator) << "\n";
      else if (const auto* g = std::get_if<fpg::TietzeAddGenerator>(&move))
        out << "add-generator " << g->name << " = "
            << fpg::to_string(g->definition) << "\n";
    }
  }

  std::cout << fpg::serialize_presentation(p) << "\n";
  std::cout << "RESULT generators=" << p.num_generators()
            << " relators=" << p.num_relators() << " moves=" << log.size()
            << "\n";
  return kOk;
}

int cmd_enumerate(const std::string& file, std::size_t max_cosets,
                  const std::vector<std::string>& subgroup_words,
                  const std::string& dump_path) {
  fpg::Presentation p = load_presentation(file);
  std::vector<fpg::Word> subgroup;
  for (const std::string& w : subgroup_words)
    subgroup.push_back(fpg::parse_word(w, p.alphabet()));

  fpg::EnumerationLimits limits;
  limits.max_defined = max_cosets;
  limits.max_live = max_cosets;
  fpg::EnumerationResult r = fpg::enumerate(p, subgroup, limits);

  if (!r.completed) {
    std::cerr << "exhausted: " << r.live_cosets << " live / "
              << r.defined_cosets << " defined cosets\n";
    std::cout << "RESULT outcome=exhausted live=" << r.live_cosets
              << " defined=" << r.defined_cosets << "\n";
    return kExhausted;
  }

  fpg::TableVerification v = fpg::verify_table(r.table, p);
  if (!v.ok) {
    std::cerr << "internal table check failed: " << v.diagnostic << "\n";
    return kVerificationFailed;
  }
  if (!dump_path.empty()) {
    std::ofstream out(dump_path);
    out << r.table.dump(*p.alphabet());
  }
  std::cout << (subgroup.empty() ? "order " : "index ") << r.index << "\n";
  std::cout << "RESULT outcome=completed index=" << r.index
            << " defined=" << r.defined_cosets
            << " coincidences=" << r.stats.coincidences
            << " scans=" << r.stats.relator_scans << "\n";
  return kOk;
}

int cmd_abelianize(const std::string& file) {
  fpg::AbelianInvariants inv = fpg::abelianize(load_presentation(file));
  std::cout << fpg::to_string(inv) << "\n";
  std::cout << "RESULT torsion=";
  for (std::size_t i = 0; i < inv.torsion.size(); ++i)
    std::cout << (i ? "," : "") << inv.torsion[i].str();
  if (inv.torsion.empty()) std::cout << "none";
  std::cout << " free_rank=" << inv.free_rank << "\n";
  return kOk;
}

int cmd_check(const std::string& presentation_file,
              const std::string& proof_file) {
  fpg::Presentation p = load_presentation(presentation_file);
  fpg::ProofScript script =
      fpg::parse_proof(fpg::read_file(proof_file), p);
  fpg::ScriptReport report = fpg::check_script(script);
  for (std::size_t i = 0; i < script.steps().size(); ++i) {
    const auto& step = script.steps()[i];
    const auto& v = report.verdicts[i];
    std::cout << (v.accepted ? "accepted" : "REJECTED") << "  " << step.name
              << ": " << fpg::to_string(step.lhs) << " = "
              << fpg::to_string(step.rhs) << "\n";
    if (!v.accepted)
      std::cerr << "residual for '" << step.name
                << "': " << fpg::to_string(v.residual) << "\n";
  }
  std::cout << report.summary << "\n";
  std::cout << "RESULT accepted=" << (report.all_accepted ? "yes" : "no")
            << " trivial=" << (report.proves_trivial ? "yes" : "no") << "\n";
  return report.all_accepted ? kOk : kVerificationFailed;
}

int cmd_surgery(std::int64_t p) {
  fpg::GluingMatrix m = fpg::log_transform_matrix(p);
  std::cout << fpg::to_string(m) << "\n";
  std::cout << "RESULT p=" << p << " det=" << fpg::determinant(m)
            << " luttinger=" << (fpg::is_luttinger(p) ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_verify_paper(const std::string& corpus_dir) {
  std::vector<fpg::CriterionResult> results =
      fpg::run_paper_verification(corpus_dir);
  bool all = true;
  for (const fpg::CriterionResult& r : results) {
    all = all && r.passed;
    std::cout << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] "
              << r.name << (r.detail.empty() ? "" : " -- " + r.detail)
              << "\n";
  }
  std::cout << "RESULT criteria=" << results.size()
            << " passed=" << (all ? "all" : "not-all") << "\n";
  return all ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finitely presented group toolkit"};
  app.require_subcommand(1);

  std::string file, proof_file, log_path, dump_path;
  std::string corpus_dir = "corpus";
  std::vector<std::string> eliminations, subgroup_words;
  bool auto_mode = false;
  std::size_t max_cosets = 1'000'000;
  std::int64_t surgery_p = 1;

  auto* parse = app.add_subcommand("parse", "parse a .grp file and report");
  parse->add_option("file", file)->required();

  auto* canon =
      app.add_subcommand("canon", "canonical serialization of a .grp file");
  canon->add_option("file", file)->required();

  auto* simplify =
      app.add_subcommand("simplify", "eliminate generators / simplify");
  simplify->add_option("file", file)->required();
  simplify->add_option("--eliminate", eliminations,
                       "generator to eliminate, optionally g=WORD");
  simplify->add_flag("--auto", auto_mode, "greedy automatic simplification");
  simplify->add_option("--log", log_path, "write the move log to a file");

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "coset enumeration (group order)");
  enumerate_cmd->add_option("file", file)->required();
  enumerate_cmd->add_option("--max-cosets", max_cosets,
                            "defined-coset limit (default 1000000)");
  enumerate_cmd->add_option("--subgroup", subgroup_words,
                            "subgroup generator word (repeatable)");
  enumerate_cmd->add_option("--dump-table", dump_path,
                            "write the coset table to a file");

  auto* abelianize_cmd =
      app.add_subcommand("abelianize", "integer homology of the presentation");
  abelianize_cmd->add_option("file", file)->required();

  auto* check = app.add_subcommand("check", "check a .proof certificate");
  check->add_option("presentation", file)->required();
  check->add_option("proof", proof_file)->required();

  auto* surgery =
      app.add_subcommand("surgery", "log-transform gluing matrix on H1(T^3)");
  surgery->add_option("--p", surgery_p, "transform parameter")->required();

  auto* verify =
      app.add_subcommand("verify-paper", "run the full reproduction suite");
  verify->add_option("--corpus", corpus_dir,
                     "corpus directory (default ./corpus)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (parse->parsed()) return cmd_parse(file);
    if (canon->parsed()) return cmd_canon(file);
    if (simplify->parsed())
      return cmd_simplify(file, eliminations, auto_mode, log_path);
    if (enumerate_cmd->parsed())
      return cmd_enumerate(file, max_cosets, subgroup_words, dump_path);
    if (abelianize_cmd->parsed()) return cmd_abelianize(file);
    if (check->parsed()) return cmd_check(file, proof_file);
    if (surgery->parsed()) return cmd_surgery(surgery_p);
    if (verify->parsed()) return cmd_verify_paper(corpus_dir);
  } catch (const fpg::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const fpg::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

#include "hq/cli.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <optional>

#include <CLI11.hpp>

#include "hq/abelian.hpp"
#include "hq/dataset.hpp"
#include "hq/hangul.hpp"

namespace hq::cli {

namespace {

struct Flags {
  bool trace = false;
  bool machine = false;
  bool ascii = false;
  std::size_t max_rounds = SimplifyLimits{}.max_rounds;
  std::size_t max_relator_length = SimplifyLimits{}.max_relator_length;

  [[nodiscard]] Notation notation() const {
    return ascii ? Notation::ascii : Notation::unicode;
  }
  [[nodiscard]] SimplifyOptions options() const {
    return {{max_rounds, max_relator_length}, std::nullopt};
  }
};

// What each shipped corpus is published to reduce to. The report prints
// these next to the computed verdict; they never feed the computation.
struct Claim {
  std::string_view file;
  std::string_view language;
  std::optional<std::size_t> rank;  // nullopt: trivial
  std::string_view basis;
};

constexpr std::array<Claim, 3> kShipped = {{
    {"german.hq", "de", std::nullopt, ""},
    {"korean.hq", "ko", 2, "ㅏ ㅗ"},
    {"turkish.hq", "tr", 22, ""},
}};

std::string verdict_line(QuotientVerdict const& v, Alphabet const& alphabet,
                         std::size_t eliminated) {
  auto text = "verdict: " + describe(v, alphabet);
  if (std::holds_alternative<Trivial>(v)) {
    text += " (" + std::to_string(eliminated) + " generators eliminated)";
  }
  return text;
}

std::string provenance_ref(Provenance const& p) {
  return p.ref + " " + p.lhs_text + "=" + p.rhs_text;
}

void print_table(std::ostream& out, EliminationTrace const& trace,
                 Alphabet const& alphabet) {
  for (auto const& step : trace.steps) {
    auto const& pv = step.provenance;
    out << alphabet[step.generator].glyph << " | " << pv.lhs_text << " --- "
        << pv.rhs_text;
    if (!pv.gloss.empty()) {
      out << " (" << pv.gloss << ")";
    }
    out << "\n";
  }
  for (auto const& change : trace.basis_changes) {
    out << "basis: " << alphabet[change.introduced].glyph << " replaces "
        << alphabet[change.removed].glyph << " ("
        << alphabet[change.removed].glyph << " = "
        << to_string(change.removed_as) << ")\n";
  }
}

void print_machine(std::ostream& out, EliminationTrace const& trace,
                   Alphabet const& alphabet, Notation notation) {
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    auto const& step = trace.steps[i];
    out << i << '\t' << alphabet[step.generator].glyph << '\t'
        << to_string(step.solution, notation) << '\t' << step.relator_index
        << '\t' << provenance_ref(step.provenance) << "\n";
  }
  for (auto const& change : trace.basis_changes) {
    out << "basis\t" << alphabet[change.introduced].glyph << '\t'
        << alphabet[change.removed].glyph << '\t'
        << to_string(change.removed_as, notation) << "\n";
  }
}

int exit_code_for(QuotientVerdict const& v) {
  return std::holds_alternative<Unresolved>(v) ? kUnresolved : kSuccess;
}

std::string certificate_line(QuotientVerdict const& v,
                             AbelianInvariants const& inv) {
  std::string flag = consistent(v, inv) ? "yes" : "no";
  if (std::holds_alternative<Unresolved>(v)) {
    flag += " (unresolved)";
  }
  return "abelianization: " + to_string(inv) + "; consistent: " + flag;
}

int cmd_reduce(std::string const& dataset, std::string const& word,
               Flags const& flags, std::ostream& out) {
  auto d = load_dataset(dataset);
  auto alphabet = make_alphabet(d.language, d.alphabet);
  out << to_string(parse_word(alphabet, word), flags.notation()) << "\n";
  return kSuccess;
}

int cmd_simplify(std::string const& dataset, Flags const& flags,
                 std::ostream& out) {
  auto p = to_presentation(load_dataset(dataset));
  auto result = simplify(p, flags.options());
  if (flags.trace) {
    print_table(out, result.trace, *p.alphabet());
  }
  if (flags.machine) {
    print_machine(out, result.trace, *p.alphabet(), flags.notation());
  }
  out << verdict_line(result.verdict, *p.alphabet(), result.trace.steps.size())
      << "\n";
  return exit_code_for(result.verdict);
}

int cmd_certify(std::string const& dataset, Flags const& flags,
                std::ostream& out) {
  auto p = to_presentation(load_dataset(dataset));
  auto result = simplify(p, flags.options());
  auto inv = abelian_invariants(p);
  if (flags.trace) {
    print_table(out, result.trace, *p.alphabet());
  }
  if (flags.machine) {
    print_machine(out, result.trace, *p.alphabet(), flags.notation());
  }
  out << verdict_line(result.verdict, *p.alphabet(), result.trace.steps.size())
      << "\n"
      << certificate_line(result.verdict, inv) << "\n";
  if (!consistent(result.verdict, inv)) {
    return kInconsistent;
  }
  return exit_code_for(result.verdict);
}

int cmd_decompose(std::string const& input, std::ostream& out) {
  out << hangul::join(hangul::decompose_text(input)) << "\n";
  return kSuccess;
}

std::string claim_text(Claim const& c) {
  if (!c.rank) {
    return "trivial";
  }
  auto text = "free of rank " + std::to_string(*c.rank);
  if (!c.basis.empty()) {
    text += "; basis: " + std::string(c.basis);
  }
  return text;
}

bool agrees(Claim const& c, QuotientVerdict const& v,
            Alphabet const& alphabet) {
  if (!c.rank) {
    return std::holds_alternative<Trivial>(v);
  }
  auto const* f = std::get_if<FreeOfRank>(&v);
  if (f == nullptr || f->rank != *c.rank) {
    return false;
  }
  return c.basis.empty() || describe(v, alphabet) == claim_text(c);
}

int cmd_report(std::string const& directory, Flags const& flags,
               std::ostream& out) {
  namespace fs = std::filesystem;
  // Load everything first so a missing corpus fails before any output.
  std::vector<LanguageDataset> corpora;
  for (auto const& c : kShipped) {
    auto path = fs::path(directory) / c.file;
    if (!fs::exists(path)) {
      throw DatasetError(0, "missing corpus " + path.string());
    }
    corpora.push_back(load_dataset(path));
  }

  int code = kSuccess;
  for (std::size_t i = 0; i < kShipped.size(); ++i) {
    auto const& claim = kShipped[i];
    auto const& d = corpora[i];
    auto p = to_presentation(d);
    auto result = simplify(p, flags.options());
    auto inv = abelian_invariants(p);
    auto const& alphabet = *p.alphabet();

    out << "== " << d.language << " (" << claim.file << ") ==\n"
        << "alphabet size: " << alphabet.size() << "\n"
        << "relations: " << d.records.size() << "\n"
        << "relators: " << p.relators().size() << "\n"
        << verdict_line(result.verdict, alphabet, result.trace.steps.size())
        << "\n";
    if (flags.machine) {
      print_machine(out, result.trace, alphabet, flags.notation());
    } else {
      out << "elimination table:\n";
      print_table(out, result.trace, alphabet);
    }
    out << certificate_line(result.verdict, inv) << "\n"
        << "claimed: " << claim_text(claim)
        << "; computed: " << describe(result.verdict, alphabet)
        << "; agrees: " << (agrees(claim, result.verdict, alphabet) ? "yes" : "no")
        << "\n\n";

    int c = consistent(result.verdict, inv) ? exit_code_for(result.verdict)
                                            : int{kInconsistent};
    code = std::max(code, c);
  }
  return code;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Simplify group presentations built from homophone pairs"};
  app.require_subcommand(1);

  Flags flags;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--ascii", flags.ascii, "Write inverses as ^-1");
  };
  auto add_simplify = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_flag("--trace", flags.trace, "Print the elimination table");
    sub->add_flag("--machine", flags.machine,
                  "Print tab-separated trace lines");
    sub->add_option("--max-rounds", flags.max_rounds, "Elimination round cap");
    sub->add_option("--max-relator-len", flags.max_relator_length,
                    "Relator length cap");
  };

  std::string dataset;
  std::string word;
  std::string input;
  std::string directory;

  auto* reduce = app.add_subcommand("reduce", "Freely reduce a word");
  reduce->add_option("dataset", dataset, "Dataset supplying the alphabet")
      ->required();
  reduce->add_option("word", word, "Word, e.g. \"w a w^-1\"")->required();
  add_common(reduce);

  auto* simplify_cmd =
      app.add_subcommand("simplify", "Simplify a dataset's presentation");
  simplify_cmd->add_option("dataset", dataset)->required();
  add_simplify(simplify_cmd);

  auto* certify = app.add_subcommand(
      "certify", "Simplify and cross-check against the abelianization");
  certify->add_option("dataset", dataset)->required();
  add_simplify(certify);

  auto* decompose =
      app.add_subcommand("decompose", "Split Hangul syllables into jamo");
  decompose->add_option("text", input)->required();

  auto* report =
      app.add_subcommand("report", "Reproduce all shipped corpora");
  report->add_option("directory", directory)->required();
  add_simplify(report);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    auto code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*reduce) {
      return cmd_reduce(dataset, word, flags, out);
    }
    if (*simplify_cmd) {
      return cmd_simplify(dataset, flags, out);
    }
    if (*certify) {
      return cmd_certify(dataset, flags, out);
    }
    if (*decompose) {
      return cmd_decompose(input, out);
    }
    return cmd_report(directory, flags, out);
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace hq::cli

#include "hq/presentation.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "hq/error.hpp"

namespace hq {

struct PresentationAccess {
  static std::vector<Relator>& relators(Presentation& p) { return p.relators_; }
  static std::vector<bool>& live(Presentation& p) { return p.live_; }
  static std::vector<bool> const& live(Presentation const& p) {
    return p.live_;
  }
};

namespace {

std::vector<Letter> canonical_key(Word const& w) {
  std::vector<Letter> best(w.letters().begin(), w.letters().end());
  auto consider = [&](Word const& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      auto r = rotate(v, i);
      if (std::lexicographical_compare(r.letters().begin(), r.letters().end(),
                                       best.begin(), best.end())) {
        best.assign(r.letters().begin(), r.letters().end());
      }
    }
  };
  consider(w);
  consider(invert(w));
  return best;
}

Candidate greedy_choice(Presentation const& p,
                        std::vector<Candidate> const& candidates) {
  auto const& rels = p.relators();
  // Candidates arrive sorted by (relator, generator), so the first minimum
  // by length already honours both tie-breaks.
  return *std::min_element(candidates.begin(), candidates.end(),
                           [&](Candidate a, Candidate b) {
                             return rels[a.relator].word.size() <
                                    rels[b.relator].word.size();
                           });
}

}  // namespace

Word relator_from_relation(Relation const& rel) {
  return cyclic_reduce(concat(rel.lhs, invert(rel.rhs))).core;
}

Presentation::Presentation(AlphabetPtr alphabet)
    : alphabet_(std::move(alphabet)), live_(alphabet_->size(), true) {}

void Presentation::add_relator(Word const& w, Provenance provenance) {
  if (w.alphabet() && w.alphabet() != alphabet_) {
    throw AlphabetMismatch();
  }
  for (auto l : w.letters()) {
    if (!live_.at(l.generator)) {
      throw Error("relator mentions eliminated generator '" +
                  (*alphabet_)[l.generator].glyph + "'");
    }
  }
  auto core = cyclic_reduce(w).core;
  if (!core.empty()) {
    relators_.push_back({std::move(core), std::move(provenance)});
  }
}

std::vector<GeneratorId> Presentation::live_generators() const {
  std::vector<GeneratorId> out;
  for (GeneratorId g = 0; g < live_.size(); ++g) {
    if (live_[g]) {
      out.push_back(g);
    }
  }
  return out;
}

std::size_t Presentation::live_count() const noexcept {
  return static_cast<std::size_t>(std::count(live_.begin(), live_.end(), true));
}

void Presentation::deduplicate() {
  std::set<std::vector<Letter>> seen;
  std::vector<Relator> kept;
  for (auto& r : relators_) {
    if (r.word.empty()) {
      continue;
    }
    if (seen.insert(canonical_key(r.word)).second) {
      kept.push_back(std::move(r));
    }
  }
  relators_ = std::move(kept);
}

std::pair<Presentation, EliminationStep> eliminate(Presentation const& p,
                                                   GeneratorId g,
                                                   std::size_t r) {
  auto const& rels = p.relators();
  if (r >= rels.size()) {
    throw NotEliminable("relator index " + std::to_string(r) +
                        " out of range");
  }
  auto const& source = rels[r].word;
  auto const& glyph = (*p.alphabet())[g].glyph;
  if (occurrences(source, g) != 1) {
    throw NotEliminable("'" + glyph + "' occurs " +
                        std::to_string(occurrences(source, g)) +
                        " times in relator " + std::to_string(r));
  }

  auto letters = source.letters();
  auto pos = static_cast<std::size_t>(
      std::find_if(letters.begin(), letters.end(),
                   [g](Letter l) { return l.generator == g; }) -
      letters.begin());
  // Rotating g to the front gives g^s · rest = 1.
  auto rotated = rotate(source, pos);
  auto rest = free_reduce(p.alphabet(), rotated.letters().subspan(1));
  auto solution = letters[pos].sign > 0 ? invert(rest) : rest;

  Presentation next(p.alphabet());
  PresentationAccess::live(next) = PresentationAccess::live(p);
  PresentationAccess::live(next)[g] = false;
  auto& out = PresentationAccess::relators(next);
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (i == r) {
      continue;
    }
    auto core = cyclic_reduce(substitute(rels[i].word, g, solution)).core;
    if (!core.empty()) {
      out.push_back({std::move(core), rels[i].provenance});
    }
  }
  EliminationStep step{g, solution, r, rels[r].provenance};
  return {std::move(next), std::move(step)};
}

std::vector<Candidate> eliminable_candidates(Presentation const& p) {
  std::vector<Candidate> out;
  auto const& rels = p.relators();
  for (std::size_t r = 0; r < rels.size(); ++r) {
    std::vector<std::size_t> counts(p.alphabet()->size(), 0);
    for (auto l : rels[r].word.letters()) {
      ++counts[l.generator];
    }
    for (GeneratorId g = 0; g < counts.size(); ++g) {
      if (counts[g] == 1) {
        out.push_back({r, g});
      }
    }
  }
  return out;
}

QuotientVerdict verdict_of(Presentation const& p) {
  if (!p.relators().empty()) {
    return Unresolved{p};
  }
  auto live = p.live_generators();
  if (live.empty()) {
    return Trivial{};
  }
  return FreeOfRank{live.size(), std::move(live)};
}

bool same_isomorphism_type(QuotientVerdict const& a, QuotientVerdict const& b) {
  if (a.index() != b.index()) {
    return false;
  }
  if (auto const* fa = std::get_if<FreeOfRank>(&a)) {
    return fa->rank == std::get<FreeOfRank>(b).rank;
  }
  return true;
}

std::pair<Presentation, std::vector<BasisChange>> prefer_early_basis(
    Presentation const& free_result, std::vector<EliminationStep> const& steps) {
  if (!free_result.relators().empty()) {
    throw Error("basis exchange needs a presentation without relators");
  }
  auto const& alphabet = free_result.alphabet();
  auto const n = alphabet->size();

  // Image of every generator as a word in the current basis.
  std::vector<Word> image(n, Word(alphabet));
  auto live = PresentationAccess::live(free_result);
  for (GeneratorId g = 0; g < n; ++g) {
    if (live[g]) {
      image[g] = letter_word(alphabet, g);
    }
  }
  for (auto k = steps.size(); k-- > 0;) {
    auto w = steps[k].solution;
    for (std::size_t j = k + 1; j < steps.size(); ++j) {
      w = substitute(w, steps[j].generator, image[steps[j].generator]);
    }
    image[steps[k].generator] = std::move(w);
  }

  std::vector<BasisChange> changes;
  std::vector<bool> fixed(n, false);
  for (GeneratorId y = 0; y < n; ++y) {
    if (live[y]) {
      fixed[y] = true;
      continue;
    }
    auto const& w = image[y];
    std::optional<GeneratorId> swap_out;
    for (auto l : w.letters()) {
      if (live[l.generator] && !fixed[l.generator] &&
          occurrences(w, l.generator) == 1 &&
          (!swap_out || l.generator < *swap_out)) {
        swap_out = l.generator;
      }
    }
    if (!swap_out) {
      continue;
    }
    auto const x = *swap_out;
    // w = u·x^s·v, so x^s = u⁻¹·y·v⁻¹.
    auto letters = w.letters();
    auto pos = static_cast<std::size_t>(
        std::find_if(letters.begin(), letters.end(),
                     [x](Letter l) { return l.generator == x; }) -
        letters.begin());
    auto u = free_reduce(alphabet, letters.first(pos));
    auto v = free_reduce(alphabet, letters.subspan(pos + 1));
    auto x_power = concat(concat(invert(u), letter_word(alphabet, y)), invert(v));
    auto x_as = letters[pos].sign > 0 ? x_power : invert(x_power);
    for (auto& img : image) {
      img = substitute(img, x, x_as);
    }
    image[y] = letter_word(alphabet, y);
    live[x] = false;
    live[y] = true;
    fixed[y] = true;
    changes.push_back({y, x, x_as});
  }

  Presentation out(alphabet);
  PresentationAccess::live(out) = std::move(live);
  return {std::move(out), std::move(changes)};
}

SimplifyResult simplify(Presentation const& p, SimplifyOptions const& options) {
  auto current = p;
  current.deduplicate();
  std::optional<std::mt19937_64> rng;
  if (options.random_seed) {
    rng.emplace(*options.random_seed);
  }

  SimplifyResult result{Trivial{}, {}, false};
  for (std::size_t round = 0;; ++round) {
    auto candidates = eliminable_candidates(current);
    if (candidates.empty()) {
      break;
    }
    if (round >= options.limits.max_rounds) {
      result.limit_hit = true;
      break;
    }
    Candidate choice;
    if (rng) {
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      choice = candidates[pick(*rng)];
    } else {
      choice = greedy_choice(current, candidates);
    }
    auto [next, step] = eliminate(current, choice.generator, choice.relator);
    current = std::move(next);
    result.trace.steps.push_back(std::move(step));
    auto const& rels = current.relators();
    if (std::any_of(rels.begin(), rels.end(), [&](Relator const& r) {
          return r.word.size() > options.limits.max_relator_length;
        })) {
      result.limit_hit = true;
      break;
    }
    current.deduplicate();
  }
  if (current.relators().empty()) {
    auto [rebased, changes] = prefer_early_basis(current, result.trace.steps);
    current = std::move(rebased);
    result.trace.basis_changes = std::move(changes);
  }
  result.verdict = verdict_of(current);
  result.trace.final_presentation = std::move(current);
  return result;
}

QuotientVerdict replay(EliminationTrace const& trace, Presentation const& p) {
  auto current = p;
  current.deduplicate();
  std::set<GeneratorId> eliminated;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    auto const& step = trace.steps[i];
    if (step.generator >= p.alphabet()->size()) {
      throw TraceInvalid(i, "unknown generator");
    }
    if (!eliminated.insert(step.generator).second ||
        !current.is_live(step.generator)) {
      throw TraceInvalid(i, "generator already eliminated");
    }
    if (step.relator_index >= current.relators().size()) {
      throw TraceInvalid(i, "relator index out of range");
    }
    auto const& source = current.relators()[step.relator_index].word;
    if (occurrences(source, step.generator) != 1) {
      throw TraceInvalid(i, "generator does not occur exactly once");
    }
    auto [next, replayed] =
        eliminate(current, step.generator, step.relator_index);
    if (replayed.solution != step.solution) {
      throw TraceInvalid(i, "recorded solution differs");
    }
    current = std::move(next);
    current.deduplicate();
  }
  if (current.relators().empty()) {
    auto [rebased, changes] = prefer_early_basis(current, trace.steps);
    if (changes != trace.basis_changes) {
      throw TraceInvalid(trace.steps.size(), "recorded basis changes differ");
    }
    current = std::move(rebased);
  } else if (!trace.basis_changes.empty()) {
    throw TraceInvalid(trace.steps.size(),
                       "basis changes recorded for an unresolved result");
  }
  return verdict_of(current);
}

std::string describe(QuotientVerdict const& v, Alphabet const& alphabet) {
  if (std::holds_alternative<Trivial>(v)) {
    return "trivial";
  }
  if (auto const* f = std::get_if<FreeOfRank>(&v)) {
    std::string out = "free of rank " + std::to_string(f->rank) + "; basis:";
    for (auto g : f->basis) {
      out += " " + alphabet[g].glyph;
    }
    return out;
  }
  auto const& rest = std::get<Unresolved>(v).remaining;
  return "unresolved (" + std::to_string(rest.relators().size()) +
         " relators over " + std::to_string(rest.live_count()) +
         " generators)";
}

}  // namespace hq

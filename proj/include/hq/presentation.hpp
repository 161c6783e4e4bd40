#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hq/words.hpp"

namespace hq {

enum class RelationKind { word_pair, raw_identity };

// Where a relation came from: the two written forms, a gloss and a source
// reference.
struct Provenance {
  RelationKind kind = RelationKind::word_pair;
  std::string lhs_text;
  std::string rhs_text;
  std::string gloss;
  std::string ref;

  friend bool operator==(Provenance const&, Provenance const&) = default;
};

struct Relation {
  Word lhs;
  Word rhs;
  Provenance provenance;
};

// The cyclic core of lhs·rhs⁻¹. Empty when the relation is vacuous.
Word relator_from_relation(Relation const& rel);

struct Relator {
  Word word;
  Provenance provenance;
};

// A finitely presented group. Relators are nonempty, freely and cyclically
// reduced, and mention only live generators.
class Presentation {
 public:
  explicit Presentation(AlphabetPtr alphabet);

  // Reduces the word cyclically; empty cores are dropped. Throws
  // AlphabetMismatch or hq::Error if the word mentions a dead generator.
  void add_relator(Word const& w, Provenance provenance = {});

  [[nodiscard]] AlphabetPtr const& alphabet() const noexcept {
    return alphabet_;
  }
  [[nodiscard]] std::vector<Relator> const& relators() const noexcept {
    return relators_;
  }
  [[nodiscard]] bool is_live(GeneratorId g) const { return live_.at(g); }
  [[nodiscard]] std::vector<GeneratorId> live_generators() const;
  [[nodiscard]] std::size_t live_count() const noexcept;

  // Removes duplicate relators up to cyclic rotation and inversion, keeping
  // the first of each class.
  void deduplicate();

 private:
  friend struct PresentationAccess;

  AlphabetPtr alphabet_;
  std::vector<Relator> relators_;
  std::vector<bool> live_;
};

struct EliminationStep {
  GeneratorId generator = 0;
  Word solution;
  std::size_t relator_index = 0;
  Provenance provenance;
};

// Solves relator r for g, substitutes everywhere, re-reduces and drops empty
// relators. Throws NotEliminable unless g occurs exactly once in relator r.
std::pair<Presentation, EliminationStep> eliminate(Presentation const& p,
                                                   GeneratorId g,
                                                   std::size_t r);

// A Tietze exchange on a free result: `introduced` (eliminated earlier)
// becomes a basis generator and `removed` leaves the basis, with
// removed = removed_as.
struct BasisChange {
  GeneratorId introduced = 0;
  GeneratorId removed = 0;
  Word removed_as;

  friend bool operator==(BasisChange const&, BasisChange const&) = default;
};

struct EliminationTrace {
  std::vector<EliminationStep> steps;
  std::vector<BasisChange> basis_changes;
  std::optional<Presentation> final_presentation;
};

// Rewrites a free basis towards the earliest alphabet letters. Walking the
// alphabet in id order, each non-basis generator y whose image (in terms of
// the current basis) contains some later, not yet fixed basis generator x
// exactly once replaces x. Requires `free_result` to have no relators and
// `steps` to be the eliminations that produced it from a presentation on
// the same alphabet.
std::pair<Presentation, std::vector<BasisChange>> prefer_early_basis(
    Presentation const& free_result, std::vector<EliminationStep> const& steps);

struct Trivial {
  friend bool operator==(Trivial, Trivial) = default;
};
struct FreeOfRank {
  std::size_t rank = 0;
  std::vector<GeneratorId> basis;
  friend bool operator==(FreeOfRank const&, FreeOfRank const&) = default;
};
struct Unresolved {
  Presentation remaining;
};

using QuotientVerdict = std::variant<Trivial, FreeOfRank, Unresolved>;

// Trivial, FreeOfRank or Unresolved according to the current relators.
QuotientVerdict verdict_of(Presentation const& p);

// Equal kind and rank (the basis may differ between elimination orders).
bool same_isomorphism_type(QuotientVerdict const& a, QuotientVerdict const& b);

struct SimplifyLimits {
  std::size_t max_rounds = 10'000;
  std::size_t max_relator_length = 10'000;
};

// A choice of (relator index, generator) among the eligible pairs. Candidates
// are listed in relator-index order, then generator-id order.
struct Candidate {
  std::size_t relator = 0;
  GeneratorId generator = 0;
  friend bool operator==(Candidate, Candidate) = default;
};

std::vector<Candidate> eliminable_candidates(Presentation const& p);

struct SimplifyOptions {
  SimplifyLimits limits;
  // When set, each round picks uniformly among all eligible candidates
  // instead of the shortest-relator rule.
  std::optional<std::uint64_t> random_seed;
};

struct SimplifyResult {
  QuotientVerdict verdict;
  EliminationTrace trace;
  bool limit_hit = false;
};

// Greedy shortest-relator-first elimination; ties go to the lowest relator
// index, then the lowest generator id.
SimplifyResult simplify(Presentation const& p, SimplifyOptions const& options = {});

// Re-applies recorded steps verbatim. Throws TraceInvalid on the first step
// whose precondition fails or whose recorded solution disagrees.
QuotientVerdict replay(EliminationTrace const& trace, Presentation const& p);

std::string describe(QuotientVerdict const& v, Alphabet const& alphabet);

}  // namespace hq

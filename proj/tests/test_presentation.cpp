#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hq/abelian.hpp"
#include "hq/dataset.hpp"
#include "hq/error.hpp"
#include "hq/presentation.hpp"
#include "oracles.hpp"

using namespace hq;

namespace {

AlphabetPtr latin() {
  static auto const alphabet =
      make_alphabet("t", {"a", "b", "c", "e", "g", "ğ", "i", "k", "n", "w", "y"});
  return alphabet;
}

Word w(std::string_view text) { return parse_word(latin(), text); }

std::string show(Word const& x) { return to_string(x, Notation::ascii); }

Presentation presentation(std::vector<std::string_view> relators) {
  Presentation p(latin());
  for (auto r : relators) {
    p.add_relator(w(r));
  }
  return p;
}

GeneratorId id(std::string_view glyph) { return *latin()->find(glyph); }

Presentation shipped(std::string const& name) {
  return to_presentation(load_dataset(std::string(HQ_DATA_DIR) + "/" + name));
}

}  // namespace

TEST_CASE("relator_from_relation") {
  CHECK(show(relator_from_relation({w("waage"), w("wage"), {}})) == "a");
  CHECK(show(relator_from_relation({w("kaan"), w("kağan"), {}})) == "ğ^-1");
  CHECK(relator_from_relation({w("abc"), w("abc"), {}}).empty());
}

TEST_CASE("add_relator keeps only cyclic cores") {
  auto p = presentation({"w a w^-1", "a a^-1", "b"});
  REQUIRE(p.relators().size() == 2);
  CHECK(show(p.relators()[0].word) == "a");
  CHECK(show(p.relators()[1].word) == "b");
}

TEST_CASE("deduplicate works up to rotation and inversion") {
  auto p = presentation({"a b c", "b c a", "c^-1 b^-1 a^-1", "a b", "a c b"});
  p.deduplicate();
  REQUIRE(p.relators().size() == 3);
  CHECK(show(p.relators()[0].word) == "a·b·c");
  CHECK(show(p.relators()[1].word) == "a·b");
  CHECK(show(p.relators()[2].word) == "a·c·b");
}

TEST_CASE("eliminate") {
  SUBCASE("length-one relator") {
    auto alphabet = make_alphabet("x", {"a", "w"});
    Presentation p(alphabet);
    p.add_relator(parse_word(alphabet, "w a w^-1"));
    auto [q, step] = eliminate(p, 0, 0);
    CHECK(q.relators().empty());
    CHECK(q.live_generators() == std::vector<GeneratorId>{1});
    CHECK(step.solution.empty());
  }
  SUBCASE("ağabey/abi relator solved for y") {
    auto p = presentation({"a b e y e^-1 b^-1"});
    auto [q, step] = eliminate(p, id("y"), 0);
    CHECK(q.relators().empty());
    CHECK_FALSE(q.is_live(id("y")));
    CHECK(show(step.solution) == "e^-1·b^-1·a^-1·b·e");
    // Substituting back kills the source relator.
    CHECK(substitute(p.relators()[0].word, id("y"), step.solution).empty());
  }
  SUBCASE("inverse occurrence") {
    auto p = presentation({"a g^-1 b", "g c"});
    auto [q, step] = eliminate(p, id("g"), 0);
    CHECK(show(step.solution) == "b·a");
    REQUIRE(q.relators().size() == 1);
    CHECK(show(q.relators()[0].word) == "b·a·c");
  }
  SUBCASE("two occurrences") {
    auto p = presentation({"g g"});
    CHECK_THROWS_AS(eliminate(p, id("g"), 0), NotEliminable);
    CHECK_THROWS_AS(eliminate(p, id("a"), 0), NotEliminable);
    CHECK_THROWS_AS(eliminate(p, id("g"), 3), NotEliminable);
  }
}

TEST_CASE("simplify") {
  SUBCASE("no relators") {
    auto alphabet = make_alphabet("x", {"a", "b"});
    auto result = simplify(Presentation(alphabet));
    CHECK(std::get<FreeOfRank>(result.verdict) == FreeOfRank{2, {0, 1}});
    CHECK(result.trace.steps.empty());
  }
  SUBCASE("greedy picks the shortest relator, then index, then id") {
    auto p = presentation({"a b c", "b c", "c a"});
    auto result = simplify(p);
    REQUIRE_FALSE(result.trace.steps.empty());
    CHECK(result.trace.steps[0].relator_index == 1);
    CHECK(result.trace.steps[0].generator == id("b"));
  }
  SUBCASE("Z/2 is unresolved") {
    auto result = simplify(presentation({"a a"}));
    CHECK(std::holds_alternative<Unresolved>(result.verdict));
    CHECK_FALSE(result.limit_hit);
  }
  SUBCASE("round cap") {
    SimplifyOptions options;
    options.limits.max_rounds = 0;
    auto result = simplify(presentation({"a"}), options);
    CHECK(result.limit_hit);
    CHECK(std::holds_alternative<Unresolved>(result.verdict));
  }
  SUBCASE("relator length cap") {
    SimplifyOptions options;
    options.limits.max_relator_length = 5;
    // a = b³ turns the second relator into b³·c·b³·c·c.
    auto result =
        simplify(presentation({"a b^-1 b^-1 b^-1", "a c a c c"}), options);
    CHECK(result.limit_hit);
    CHECK(result.trace.steps.size() == 1);
    CHECK(std::holds_alternative<Unresolved>(result.verdict));
  }
  SUBCASE("basis exchange prefers early letters") {
    // Greedy solves for the lower id, leaving the later letter in the basis.
    auto p = presentation({"a b^-1"});
    auto result = simplify(p);
    auto const& free = std::get<FreeOfRank>(result.verdict);
    CHECK(std::find(free.basis.begin(), free.basis.end(), id("a")) !=
          free.basis.end());
    CHECK(free.rank == latin()->size() - 1);
    REQUIRE(result.trace.basis_changes.size() == 1);
    CHECK(result.trace.basis_changes[0].introduced == id("a"));
    CHECK(result.trace.basis_changes[0].removed == id("b"));
    CHECK(show(result.trace.basis_changes[0].removed_as) == "a");
  }
}

TEST_CASE("shipped corpora") {
  auto german = simplify(shipped("german.hq"));
  CHECK(std::holds_alternative<Trivial>(german.verdict));
  CHECK(german.trace.steps.size() == 30);

  auto korean_p = shipped("korean.hq");
  auto korean = simplify(korean_p);
  auto const& free = std::get<FreeOfRank>(korean.verdict);
  CHECK(free.rank == 2);
  CHECK(describe(korean.verdict, *korean_p.alphabet()) ==
        "free of rank 2; basis: ㅏ ㅗ");

  auto turkish = simplify(shipped("turkish.hq"));
  CHECK(std::get<FreeOfRank>(turkish.verdict).rank == 23);
}

TEST_CASE("replay") {
  SUBCASE("German trace replays") {
    auto p = shipped("german.hq");
    auto result = simplify(p);
    CHECK(std::holds_alternative<Trivial>(replay(result.trace, p)));
  }
  SUBCASE("Korean trace replays with its basis") {
    auto p = shipped("korean.hq");
    auto result = simplify(p);
    CHECK(std::get<FreeOfRank>(replay(result.trace, p)) ==
          std::get<FreeOfRank>(result.verdict));
  }
  SUBCASE("empty trace") {
    auto alphabet = make_alphabet("x", {"a"});
    CHECK(std::get<FreeOfRank>(replay({}, Presentation(alphabet))) ==
          FreeOfRank{1, {0}});
  }
  SUBCASE("tampering") {
    auto p = shipped("german.hq");
    auto trace = simplify(p).trace;
    auto wrong_index = trace;
    wrong_index.steps[3].relator_index = 999;
    CHECK_THROWS_AS(replay(wrong_index, p), TraceInvalid);
    try {
      replay(wrong_index, p);
    } catch (TraceInvalid const& e) {
      CHECK(e.step() == 3);
    }
    auto repeated = trace;
    repeated.steps[5].generator = repeated.steps[4].generator;
    CHECK_THROWS_AS(replay(repeated, p), TraceInvalid);
    auto wrong_solution = trace;
    wrong_solution.steps[0].solution = letter_word(p.alphabet(), 3);
    CHECK_THROWS_AS(replay(wrong_solution, p), TraceInvalid);
  }
}

TEST_CASE("determinism") {
  auto p = shipped("korean.hq");
  auto first = simplify(p);
  auto second = simplify(p);
  REQUIRE(first.trace.steps.size() == second.trace.steps.size());
  for (std::size_t i = 0; i < first.trace.steps.size(); ++i) {
    CHECK(first.trace.steps[i].generator == second.trace.steps[i].generator);
    CHECK(first.trace.steps[i].relator_index ==
          second.trace.steps[i].relator_index);
    CHECK(first.trace.steps[i].solution == second.trace.steps[i].solution);
  }
}

TEST_CASE("property: eliminations are sound and shrink the generator set") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = oracle::random_presentation(rng, 6, 6, 8);
    auto current = p;
    current.deduplicate();
    auto result = simplify(p);
    // Walk the recorded steps and check each against its source relator.
    for (auto const& step : result.trace.steps) {
      auto source = current.relators()[step.relator_index].word;
      CHECK(substitute(source, step.generator, step.solution).empty());
      CHECK(occurrences(step.solution, step.generator) == 0);
      auto before = current.live_count();
      current = eliminate(current, step.generator, step.relator_index).first;
      current.deduplicate();
      CHECK(current.live_count() == before - 1);
    }
    auto inv = abelian_invariants(p);
    CHECK(consistent(result.verdict, inv));
    if (auto const* f = std::get_if<FreeOfRank>(&result.verdict)) {
      CHECK(f->basis.size() == f->rank);
      CHECK(inv.free_rank == f->rank);
    }
  }
}

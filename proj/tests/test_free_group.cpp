#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "homcx/free_group.hpp"
#include "homcx/graph.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace homcx;

namespace {

Word w(std::initializer_list<int> letters) { return word_reduce(std::vector<int>(letters)); }

Word random_word(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> letters;
  for (int i = 0; i < len; ++i) letters.push_back(gen(rng) * (sign(rng) ? 1 : -1));
  return word_reduce(letters);
}

}  // namespace

TEST_CASE("word reduction, concatenation, inverse, commutation") {
  CHECK(w({1, -1}).empty());
  CHECK(w({1, 2, -2, -1}).empty());
  CHECK(w({1, 2, -2, 1}) == w({1, 1}));
  CHECK_THROWS_AS(word_reduce({1, 0}), InvalidInput);

  Word a = w({1, 2});
  CHECK(word_concat(a, word_inverse(a)).empty());
  CHECK(word_inverse(a) == w({-2, -1}));
  CHECK(word_concat(a, w({-2, 3})) == w({1, 3}));

  CHECK(commutes(w({1}), w({1, 1, 1})));
  CHECK(commutes(w({1, 2}), w({1, 2, 1, 2})));
  CHECK_FALSE(commutes(w({1}), w({2})));
  CHECK(commutes(Word{}, w({2})));

  CHECK(word_to_string(Word{}) == "1");
  CHECK(word_to_string(w({1, -2})) == "g1 g2^-1");
}

TEST_CASE("fundamental group presentations of standard graphs") {
  Pi1Presentation c5 = pi1_presentation(graphs::cycle(5), 0);
  CHECK(c5.rank() == 1);
  CHECK(c5.chords == std::vector<std::pair<int, int>>{{2, 3}});
  CHECK(c5.chord_parity == std::vector<int>{1});

  Pi1Presentation c6 = pi1_presentation(graphs::cycle(6), 0);
  CHECK(c6.rank() == 1);
  CHECK(c6.chords == std::vector<std::pair<int, int>>{{3, 4}});
  CHECK(c6.chord_parity == std::vector<int>{0});

  Pi1Presentation t222 = pi1_presentation(graphs::theta(2, 2, 2), 0);
  CHECK(t222.rank() == 2);
  CHECK(t222.chord_parity == std::vector<int>{0, 0});

  Pi1Presentation t333 = pi1_presentation(graphs::theta(3, 3, 3), 0);
  CHECK(t333.rank() == 2);
  CHECK(t333.chord_parity == std::vector<int>{0, 0});

  Pi1Presentation bow = pi1_presentation(testutil::bowtie(), 0);
  CHECK(bow.rank() == 2);
  CHECK(bow.chord_parity == std::vector<int>{1, 1});

  CHECK(pi1_presentation(graphs::path(4), 0).rank() == 0);
  // A loop edge is a chord of odd parity.
  Pi1Presentation i1 = pi1_presentation(graphs::interval(1), 0);
  CHECK(i1.rank() == 2);
  CHECK(i1.chord_parity == std::vector<int>{1, 1});

  CHECK_THROWS_AS(pi1_presentation(testutil::make_graph(3, {{0, 1}}), 0), InvalidInput);
  CHECK_THROWS_AS(pi1_presentation(graphs::cycle(3), 5), InvalidInput);
}

TEST_CASE("walks to words and back") {
  Pi1Presentation c5 = pi1_presentation(graphs::cycle(5), 0);
  CHECK(c5.walk_to_word({0, 1, 2, 3, 4, 0}) == w({1}));
  CHECK(c5.walk_to_word({0, 4, 3, 2, 1, 0}) == w({-1}));
  CHECK(c5.walk_to_word({0, 1, 2, 1, 0}).empty());
  CHECK(c5.walk_to_word({0}).empty());
  CHECK_THROWS_AS(c5.walk_to_word({0, 1, 2}), InvalidInput);
  CHECK_THROWS_AS(c5.walk_to_word({1, 2, 1}), InvalidInput);
  CHECK_THROWS_AS(c5.walk_to_word({0, 2, 0}), InvalidInput);

  std::mt19937 rng(20240819);
  for (const Graph& g : {graphs::cycle(5), graphs::theta(2, 2, 2), testutil::bowtie()}) {
    Pi1Presentation p = pi1_presentation(g, 0);
    for (int trial = 0; trial < 50; ++trial) {
      Word word = random_word(rng, p.rank(), trial % 7);
      Walk walk = p.word_to_walk(word);
      CHECK(is_walk(g, walk));
      CHECK(walk.front() == p.basepoint);
      CHECK(walk.back() == p.basepoint);
      CHECK(p.walk_to_word(walk) == word);
      CHECK(p.parity(word) == static_cast<int>(walk.size() - 1) % 2);
    }
  }
}

TEST_CASE("induced maps on fundamental groups") {
  Graph c6 = graphs::cycle(6);
  Graph k3 = graphs::complete(3);
  Pi1Presentation pg = pi1_presentation(c6, 0);
  Pi1Presentation ph = pi1_presentation(k3, 0);
  // Wind twice around the triangle.
  CHECK(induced_map({0, 1, 2, 0, 1, 2}, pg, ph) == std::vector<Word>{w({1, 1})});
  // Fold the hexagon onto one edge: trivial image.
  CHECK(induced_map({0, 1, 0, 1, 0, 1}, pg, ph) == std::vector<Word>{Word{}});
  CHECK_THROWS_AS(induced_map({1, 2, 0, 1, 2, 0}, pg, ph), InvalidInput);
}

TEST_CASE("Stallings folding: rank, membership, classification") {
  auto [cls0, sg0] = stallings_classify({}, 2);
  CHECK(cls0 == SubgroupClass::Trivial);
  CHECK(sg0.rank() == 0);
  CHECK(sg0.member(Word{}));
  CHECK_FALSE(sg0.member(w({1})));

  auto [cls1, sg1] = stallings_classify({w({1})}, 2);
  CHECK(cls1 == SubgroupClass::InfiniteCyclic);
  CHECK(sg1.member(w({1, 1, 1})));
  CHECK(sg1.member(w({-1})));
  CHECK_FALSE(sg1.member(w({2})));
  CHECK_FALSE(sg1.member(w({1, 2})));

  // <a^2, a^3> is all of <a>.
  auto [cls23, sg23] = stallings_classify({w({1, 1}), w({1, 1, 1})}, 1);
  CHECK(cls23 == SubgroupClass::InfiniteCyclic);
  CHECK(sg23.state_count() == 1);
  CHECK(sg23.member(w({1})));

  // A conjugate cyclic subgroup.
  auto [clsc, sgc] = stallings_classify({w({1, 2, -1}), w({1, 2, 2, -1})}, 2);
  CHECK(clsc == SubgroupClass::InfiniteCyclic);
  CHECK(sgc.member(w({1, 2, 2, 2, -1})));
  CHECK_FALSE(sgc.member(w({2})));

  auto [cls2, sg2] = stallings_classify({w({1}), w({2})}, 2);
  CHECK(cls2 == SubgroupClass::NonabelianFree);
  CHECK(sg2.state_count() == 1);
  CHECK(sg2.complete());
  CHECK(sg2.member(w({1, -2, 1, 1})));

  auto [clsf, sgf] = stallings_classify({w({1, 2, -1, -2})}, 2);
  CHECK(clsf == SubgroupClass::InfiniteCyclic);
  CHECK(sgf.member(w({1, 2, -1, -2, 1, 2, -1, -2})));
  CHECK(sgf.member(w({2, 1, -2, -1})));  // the inverse commutator
  CHECK_FALSE(sgf.member(w({1, 1})));
  CHECK_FALSE(sgf.member(w({1, 2, -1, 2})));

  // Nielsen moves leave the subgroup alone: <a, ab> = <a, b>.
  SubgroupGraph nb = stallings_graph({w({1}), w({1, 2})}, 2);
  CHECK(subgroups_equal(nb, {w({1}), w({1, 2})}, sg2, {w({1}), w({2})}));
  CHECK_FALSE(subgroups_equal(sg1, {w({1})}, sg2, {w({1}), w({2})}));
}

TEST_CASE("even-length subgroup via two-coset rewriting") {
  std::mt19937 rng(20240820);

  Pi1Presentation c5 = pi1_presentation(graphs::cycle(5), 0);
  std::vector<Word> even5 = even_part_generators(c5);
  CHECK(even5 == std::vector<Word>{w({1, 1})});

  Pi1Presentation k3 = pi1_presentation(graphs::complete(3), 0);
  CHECK(even_part_generators(k3) == std::vector<Word>{w({1, 1})});

  Pi1Presentation bow = pi1_presentation(testutil::bowtie(), 0);
  std::vector<Word> evenb = even_part_generators(bow);
  CHECK(evenb == std::vector<Word>{w({2, -1}), w({1, 1}), w({1, 2})});

  // All-even presentations keep every generator.
  Pi1Presentation c6 = pi1_presentation(graphs::cycle(6), 0);
  CHECK(even_part_generators(c6) == std::vector<Word>{w({1})});
  Pi1Presentation t333 = pi1_presentation(graphs::theta(3, 3, 3), 0);
  CHECK(even_part_generators(t333) == std::vector<Word>{w({1}), w({2})});

  // With an odd generator the subgroup has index two: its folded automaton
  // is complete on two states, has rank 2r - 1, and contains exactly the
  // even-parity words.
  for (const Graph& g : {graphs::cycle(5), testutil::bowtie(), graphs::complete(3)}) {
    Pi1Presentation p = pi1_presentation(g, 0);
    std::vector<Word> gens = even_part_generators(p);
    CHECK(static_cast<int>(gens.size()) == 2 * p.rank() - 1);
    SubgroupGraph sg = stallings_graph(gens, p.rank());
    CHECK(sg.state_count() == 2);
    CHECK(sg.complete());
    CHECK(sg.rank() == 2 * p.rank() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      Word word = random_word(rng, p.rank(), trial % 9);
      CAPTURE(word.letters);
      CHECK(sg.member(word) == (p.parity(word) == 0));
    }
  }
}

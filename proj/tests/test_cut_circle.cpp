#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shadow/cut_circle.hpp"
#include "shadow/enumerate.hpp"

using namespace shadow;

static EmbeddedShadow embed(const GaussWord& w) { return std::get<EmbeddedShadow>(check_realizable(w)); }

static std::multiset<std::string> classes(const GaussWord& w, int m) {
  const auto e = embed(w);
  std::multiset<std::string> out;
  for (const auto& c : find_cut_circles(e, m)) out.insert(pattern_class(c, e).signature);
  return out;
}

const std::string kReducing = "C2:0-4:1-5:2-7:3-6";

TEST_CASE("cut circle examples") {
  const auto tre = parse_word("1 2 3 1 2 3");
  CHECK_FALSE(find_cut_circles(embed(tre), 2).empty());
  CHECK(find_cut_circles(embed(parse_word("1 1")), 2).empty());
  CHECK(classes(tre, 2).count(kReducing) > 0);
  CHECK_THROWS(find_cut_circles(embed(tre), 4));
}

TEST_CASE("structural invariants") {
  for (int n = 3; n <= 7; ++n)
    for (const auto& w : enumerate_words_serial(n, Filters::prime_reduced())) {
      const auto e = embed(w);
      for (int m : {2, 3})
        for (const auto& c : find_cut_circles(e, m)) {
          REQUIRE(c.size() == m);
          std::set<int> on(c.vertices.begin(), c.vertices.end());
          CHECK(static_cast<int>(on.size()) == m);
          for (int i = 0; i < m; ++i) {
            const int prev = (i + m - 1) % m;
            CHECK(e.face_of({c.vertices[i], c.entry_slots[i]}) == c.faces[i]);
            CHECK(e.face_of({c.vertices[prev], (c.entry_slots[prev] + 2) % 4}) == c.faces[i]);
          }
          // circle vertices and the two sides partition the crossings
          std::set<int> all;
          for (int v : c.vertices) all.insert(w.labels()[v]);
          for (const auto& side : c.sides)
            for (int x : side) CHECK(all.insert(x).second);
          CHECK(static_cast<int>(all.size()) == n);
          for (int i = 0; i < m; ++i) {
            const auto s = side_separating_splice(c, e, i);
            CHECK((s == Splice::oriented || s == Splice::disoriented));
          }
        }
    }
}

TEST_CASE("pattern classes are invariant under relabeling, rotation and reversal") {
  for (int n = 4; n <= 7; ++n)
    for (const auto& w : enumerate_words_serial(n, Filters::prime_reduced())) {
      std::vector<int> l(w.letters().begin(), w.letters().end());
      std::rotate(l.begin(), l.begin() + 5, l.end());
      std::reverse(l.begin(), l.end());
      for (int& x : l) x = 50 - 2 * x;
      const GaussWord v(l);
      for (int m : {2, 3}) CHECK(classes(w, m) == classes(v, m));
    }
}

TEST_CASE("the reducing 2-point class occurs exactly on t = 1 shadows") {
  for (int n = 3; n <= 7; ++n)
    for (const auto& w : enumerate_words_serial(n, Filters::prime_reduced())) {
      const bool t1 = reductivity(w, ReductivityKind::t).value == 1;
      CHECK(t1 == (classes(w, 2).count(kReducing) > 0));
    }
}

TEST_CASE("circle support witnesses replay") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& w : enumerate_words_serial(n, Filters::prime_reduced())) {
      const auto e = embed(w);
      for (auto kind : {ReductivityKind::t, ReductivityKind::r, ReductivityKind::y, ReductivityKind::i})
        for (int m : {2, 3})
          for (const auto& c : find_cut_circles(e, m)) {
            const auto s = circle_support(c, e, kind, 2);
            if (!s.supported) continue;
            ReductivityCertificate cert;
            cert.kind = kind;
            cert.witness = s.witness;
            cert.sequence = s.sequence;
            cert.value = static_cast<int>(kind == ReductivityKind::r ? s.sequence.size() : s.witness.size());
            CHECK(replay_certificate(w, cert).ok);
            CHECK(cert.value <= 2);
          }
    }
}

#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "cartan/words.hpp"

using namespace cartan;

namespace {

// Independent brute force over ASCII spellings: s, g, f.
std::uint64_t oracle_degree(const std::string& w, std::uint64_t p) {
  std::uint64_t d = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it == 's') d = d + 1;
    if (*it == 'g') d = d * p;
    if (*it == 'f') d = d * p + 2;
  }
  return d;
}

bool oracle_admissible(const std::string& w) {
  if (w.empty()) return false;
  if (w.front() == 'g' || w.back() == 'g') return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 's') continue;
    if (std::count(w.begin() + static_cast<long>(i) + 1, w.end(), 's') % 2 != 0) return false;
  }
  return true;
}

std::set<std::string> brute_force_admissible(std::uint64_t p, std::uint64_t max_degree,
                                             std::size_t max_length) {
  std::set<std::string> out;
  std::vector<std::string> layer{""};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::string> next;
    for (const std::string& w : layer)
      for (char c : {'s', 'g', 'f'}) next.push_back(w + c);
    for (const std::string& w : next)
      if (oracle_admissible(w) && oracle_degree(w, p) <= max_degree) out.insert(w);
    layer = std::move(next);
  }
  return out;
}

std::string ascii(const Word& w) {
  std::string out;
  for (const Symbol& s : w.symbols()) out += "sgfy"[static_cast<int>(s.kind)];
  return out;
}

std::set<std::string> enumerated_admissible(std::uint64_t p, std::uint64_t max_degree) {
  std::set<std::string> out;
  for (const WordEntry& e : enumerate_words(p, 1, max_degree))
    if (std::none_of(e.word.symbols().begin(), e.word.symbols().end(),
                     [](const Symbol& s) { return s.kind == SymbolKind::Psi; }))
      out.insert(ascii(e.word));
  return out;
}

}  // namespace

TEST_CASE("degree follows the recursion") {
  CHECK(degree(parse_word("ss", 2)) == 2);
  CHECK(degree(parse_word("sgf", 2)) == 5);
  CHECK(degree(Word({}, 2)) == 0);
  CHECK(degree(parse_word("fgf", 2)) == 10);
  CHECK(degree(parse_word("sy", 3)) == 3);
  CHECK(degree(parse_word("sgf", 3)) == 7);
}

TEST_CASE("height counts sigma, phi and psi") {
  CHECK(height(parse_word("ss", 2)) == 2);
  CHECK(height(parse_word("sggf", 3)) == 2);
  CHECK(height(parse_word("g", 2)) == 0);
  CHECK(height(parse_word("sy", 2)) == 2);
}

TEST_CASE("admissibility") {
  CHECK(is_admissible(parse_word("ss", 2), 2));
  CHECK(is_admissible(parse_word("fgf", 2), 2));
  CHECK_FALSE(is_admissible(parse_word("gss", 2), 2));
  // k = 0 member of the sigma gamma^k phi family.
  CHECK(is_admissible(parse_word("sf", 2), 2));
  CHECK_FALSE(is_admissible(parse_word("fs", 2), 2));
  CHECK_FALSE(is_admissible(parse_word("sgs", 2), 2));
  CHECK_FALSE(is_admissible(Word({}, 2), 2));
  CHECK_FALSE(is_admissible(parse_word("sf", 3), 2));
  CHECK_THROWS_AS(is_admissible(parse_word("sy", 2), 2), AuxiliaryWordError);
}

TEST_CASE("word construction rejects malformed words") {
  CHECK_THROWS_AS(Word({Symbol::psi(2, 1), Symbol::sigma()}, 2), std::invalid_argument);
  CHECK_THROWS_AS(Word({Symbol::gamma(2), Symbol::phi(3)}, 2), std::invalid_argument);
  CHECK_THROWS_AS(Symbol::gamma(4), std::invalid_argument);
  CHECK_THROWS_AS(Symbol::psi(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("sx", 2), std::invalid_argument);
}

TEST_CASE("rendering") {
  CHECK(to_string(parse_word("sgf", 2)) == "σγ_2φ_2");
  CHECK(to_string(parse_word("sgf", 2), true) == "sg_2f_2");
  CHECK(to_string(auxiliary_word(3, 2, 2)) == "σψ_{3^2}");
}

TEST_CASE("enumeration examples") {
  auto height_two = [](std::uint64_t p, std::uint64_t D) {
    std::vector<std::string> out;
    for (const WordEntry& e : enumerate_words(p, 1, D))
      if (e.height == 2) out.push_back(ascii(e.word) + ":" + std::to_string(e.degree));
    return out;
  };
  CHECK(height_two(2, 3) == std::vector<std::string>{"ss:2", "sf:3", "sy:3"});
  CHECK(height_two(2, 1).empty());
  CHECK(height_two(3, 7) == std::vector<std::string>{"ss:2", "sf:3", "sy:3", "sgf:7"});

  // Degree 1 still admits the height-1 word sigma.
  auto low = enumerate_words(2, 1, 1);
  REQUIRE(low.size() == 1);
  CHECK(ascii(low[0].word) == "s");
  CHECK(enumerate_words(2, 1, 0).empty());
}

TEST_CASE("enumeration matches brute force") {
  for (std::uint64_t p : {2, 3, 5})
    for (std::uint64_t D : {0, 1, 2, 5, 9, 12}) {
      CAPTURE(p);
      CAPTURE(D);
      CHECK(enumerated_admissible(p, D) == brute_force_admissible(p, D, D));
    }
}

TEST_CASE("height-2 census") {
  for (std::uint64_t p : {2, 3, 5}) {
    const std::uint64_t D = 2 + 2 * p * p;
    std::set<std::pair<std::string, std::uint64_t>> expected{{"ss", 2}};
    std::uint64_t pk = 1;  // p^k
    for (std::size_t k = 0; 1 + 2 * pk <= D; ++k, pk *= p) {
      expected.insert({"s" + std::string(k, 'g') + "f", 1 + 2 * pk});
      if (2 + 2 * pk * p <= D) expected.insert({"f" + std::string(k, 'g') + "f", 2 + 2 * pk * p});
    }
    std::set<std::pair<std::string, std::uint64_t>> got;
    for (const WordEntry& e : enumerate_words(p, 1, D))
      if (e.height == 2 && ascii(e.word).find('y') == std::string::npos)
        got.insert({ascii(e.word), e.degree});
    CAPTURE(p);
    CHECK(got == expected);
  }
}

TEST_CASE("enumeration is sorted and duplicate free") {
  auto words = enumerate_words(2, 2, 20);
  for (std::size_t i = 1; i < words.size(); ++i) {
    const auto& a = words[i - 1];
    const auto& b = words[i];
    const bool ordered = a.degree < b.degree || (a.degree == b.degree && a.height < b.height) ||
                         (a.degree == b.degree && a.height == b.height &&
                          a.word.symbols() < b.word.symbols());
    CHECK(ordered);
  }
  for (const WordEntry& e : words) {
    CHECK(degree(e.word) == e.degree);
    CHECK(height(e.word) == e.height);
  }
}

TEST_CASE("degree recursion holds under prepending") {
  for (const WordEntry& e : enumerate_words(3, 1, 30)) {
    CHECK(degree(e.word.prepend(Symbol::sigma())) == e.degree + 1);
    if (e.word.symbols().back().kind == SymbolKind::Psi) continue;
    CHECK(degree(e.word.prepend(Symbol::gamma(3))) == 3 * e.degree);
    CHECK(degree(e.word.prepend(Symbol::phi(3))) == 3 * e.degree + 2);
  }
}

TEST_CASE("auxiliary words") {
  for (unsigned h = 1; h <= 10; ++h) {
    Word w = auxiliary_word(5, 3, h);
    CHECK(height(w) == h);
    CHECK(degree(w) == h + 1);
  }
  CHECK_THROWS(auxiliary_word(2, 1, 0));
}

#include <exbook/model/normalize.hpp>
#include <exbook/model/sampling.hpp>
#include <exbook/model/variants.hpp>

#include <doctest.h>

using namespace exbook::model;

TEST_CASE("policy-driven folds") {
  CHECK(normalize_text("École ", {false, false, true}) == "ecole");
  CHECK(normalize_text("passé", NormalizationPolicy::strict()) == "passé");
  CHECK(normalize_text("  Le   Chat\tnoir\n", {true, true, true}) == "Le Chat noir");
  CHECK(normalize_text("  Le   Chat ", {true, true, false}) == "  Le   Chat ");
  CHECK(normalize_text("ÉTÉ", {false, true, true}) == "été");
  CHECK(normalize_text("ÉTÉ", {true, false, true}) == "ETE");
}

TEST_CASE("composition unifies decomposed input") {
  const std::string decomposed = "e\xCC\x81"; // e + COMBINING ACUTE
  CHECK(normalize_text(decomposed, NormalizationPolicy::strict()) == "é");
  CHECK(composed_length(decomposed) == 1);
  CHECK(composed_length("été") == 3);
  CHECK(matches_any("e\xCC\x81te\xCC\x81", std::vector<std::string>{"été"}, NormalizationPolicy::strict()));
}

TEST_CASE("ill-formed UTF-8 becomes the replacement character") {
  CHECK(normalize_text("a\xFF" "b", NormalizationPolicy::strict()) == "a\xEF\xBF\xBD" "b");
}

TEST_CASE("matches_any honours diacritic strictness") {
  CHECK(matches_any("etait", {"était"}, {false, false, true}));
  CHECK_FALSE(matches_any("etait", {"était"}, {false, true, true}));
  CHECK(matches_any("ÉTAIT", {"était"}, {false, true, true}));
  CHECK_FALSE(matches_any("ÉTAIT", {"était"}, {true, true, true}));
}

namespace {

// Code points spanning ASCII, Latin-1, combining marks, Greek, CJK, spaces.
std::string random_unicode(SeededRng &rng) {
  static const std::vector<char32_t> pool = {
      U'a', U'B', U'z', U' ', U'\t', U'\n', U'É', U'é', U'ß', U'İ', U'ı', U'ǅ', U'Ω', U'ς', U'ﬁ', U'中',
      U'́', U'̧', U'̈', U' ', U' ', U'Å', U'Å', U'ǰ', U'ΐ', U'ẞ', U'1'};
  std::string out;
  const auto n = rng.below(12);
  for(std::uint64_t i = 0; i < n; ++i) {
    const char32_t c = pool[rng.below(pool.size())];
    if(c < 0x80) {
      out += static_cast<char>(c);
    } else if(c < 0x800) {
      out += static_cast<char>(0xC0 | (c >> 6));
      out += static_cast<char>(0x80 | (c & 0x3F));
    } else {
      out += static_cast<char>(0xE0 | (c >> 12));
      out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (c & 0x3F));
    }
  }
  return out;
}

} // namespace

TEST_CASE("normalization is idempotent over 1000 random strings per policy") {
  SeededRng rng(7);
  for(int i = 0; i < 1000; ++i) {
    const auto s = random_unicode(rng);
    for(int mask = 0; mask < 8; ++mask) {
      const NormalizationPolicy p{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
      const auto once = normalize_text(s, p);
      CHECK_MESSAGE(normalize_text(once, p) == once, "policy mask ", mask);
    }
  }
}

TEST_CASE("weaker policies never reject what stricter ones accept") {
  SeededRng rng(11);
  for(int i = 0; i < 500; ++i) {
    const auto accepted = random_word(rng);
    // a strict match is the word itself
    for(int mask = 0; mask < 8; ++mask) {
      const NormalizationPolicy p{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
      CHECK(matches_any(accepted, {accepted}, p));
    }
    // case-changed typing accepted case-insensitively stays accepted without diacritic sensitivity
    std::string upper = accepted;
    for(auto &c : upper) {
      if(c >= 'a' && c <= 'z') {
        c = static_cast<char>(c - 32);
      }
    }
    if(matches_any(upper, std::vector<std::string>{accepted}, {false, true, true})) {
      CHECK(matches_any(upper, std::vector<std::string>{accepted}, {false, false, true}));
    }
  }
}

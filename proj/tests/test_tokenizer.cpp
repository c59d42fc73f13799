#include <doctest.h>

#include <random>
#include <string>

#include "stance/tokenizer.hpp"

using stance::Token;
using stance::TokenKind;
using stance::TokenSequence;
using stance::tokenize;

TEST_SUITE_BEGIN("tokenizer");

TEST_CASE("hashtags, mentions, and words split into typed tokens") {
  const TokenSequence tokens = tokenize("#StopHillary2016 @HillaryClinton NO");
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[0].kind == TokenKind::Hashtag);
  CHECK(tokens[0].surface == "#StopHillary2016");
  CHECK(tokens[0].norm == "stophillary2016");
  CHECK(tokens[1].kind == TokenKind::Mention);
  CHECK(tokens[1].norm == "hillaryclinton");
  CHECK(tokens[2].kind == TokenKind::Word);
  CHECK(tokens[2].norm == "no");
}

TEST_CASE("contiguous punctuation becomes one token per character") {
  const TokenSequence tokens = tokenize("Hello!! How?");
  REQUIRE(tokens.size() == 5);
  CHECK(tokens[0].norm == "hello");
  CHECK(tokens[1].kind == TokenKind::Punct);
  CHECK(tokens[1].surface == "!");
  CHECK(tokens[2].surface == "!");
  CHECK(tokens[3].norm == "how");
  CHECK(tokens[4].surface == "?");
}

TEST_CASE("empty text yields an empty sequence") { CHECK(tokenize("").empty()); }

TEST_CASE("urls are single tokens and hide their internal punctuation") {
  const TokenSequence tokens = tokenize("see http://t.co/a.b?x=1 now.");
  REQUIRE(tokens.size() == 4);
  CHECK(tokens[0].norm == "see");
  CHECK(tokens[1].kind == TokenKind::Url);
  CHECK(tokens[1].surface == "http://t.co/a.b?x=1");
  CHECK(tokens[2].norm == "now");
  CHECK(tokens[3].kind == TokenKind::Punct);
  CHECK(tokens[3].surface == ".");
}

TEST_CASE("apostrophes stay inside words and expose the clitic stem") {
  const TokenSequence tokens = tokenize("She's here");
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[0].kind == TokenKind::Word);
  CHECK(tokens[0].norm == "she's");
  REQUIRE(tokens[0].clitic_stem().has_value());
  CHECK(*tokens[0].clitic_stem() == "she");
  CHECK_FALSE(tokens[1].clitic_stem().has_value());
}

TEST_CASE("curly apostrophes behave like ASCII ones for stems") {
  const TokenSequence tokens = tokenize("She\xE2\x80\x99s old");
  REQUIRE(tokens.size() == 2);
  REQUIRE(tokens[0].clitic_stem().has_value());
  CHECK(*tokens[0].clitic_stem() == "she");
}

TEST_CASE("trailing apostrophes are punctuation") {
  const TokenSequence tokens = tokenize("dogs' tails");
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[0].norm == "dogs");
  CHECK(tokens[1].kind == TokenKind::Punct);
  CHECK(tokens[2].norm == "tails");
}

TEST_CASE("digit runs are number tokens; embedded separators are punctuation") {
  const TokenSequence tokens = tokenize("3.5 in 2016");
  REQUIRE(tokens.size() == 5);
  CHECK(tokens[0].kind == TokenKind::Number);
  CHECK(tokens[0].surface == "3");
  CHECK(tokens[1].surface == ".");
  CHECK(tokens[2].surface == "5");
  CHECK(tokens[4].surface == "2016");
}

TEST_CASE("bare markers fall back to punctuation") {
  const TokenSequence tokens = tokenize("# @ #tag");
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[0].kind == TokenKind::Punct);
  CHECK(tokens[1].kind == TokenKind::Punct);
  CHECK(tokens[2].kind == TokenKind::Hashtag);
}

TEST_CASE("tag norms never contain the marker and are non-empty") {
  for (const Token& t : tokenize("#One @two_three #4you words @ok")) {
    if (t.kind == TokenKind::Hashtag) CHECK(t.surface[0] == '#');
    if (t.kind == TokenKind::Mention) CHECK(t.surface[0] == '@');
    if (t.kind == TokenKind::Word || t.kind == TokenKind::Hashtag ||
        t.kind == TokenKind::Mention) {
      CHECK_FALSE(t.norm.empty());
      CHECK(t.norm.find('#') == std::string::npos);
      CHECK(t.norm.find('@') == std::string::npos);
    }
  }
}

namespace {

std::string lowercase_ascii(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Random tweet-ish text with a known punctuation-character count. Words,
// hashtags, mentions, and URLs contribute no counted punctuation.
struct GeneratedText {
  std::string text;
  std::size_t punct_chars = 0;
};

GeneratedText generate_text(std::mt19937& rng) {
  static const char* words[] = {"vote",  "debate", "really", "she's", "tonight",
                                "crowd", "plan",   "Great",  "why",   "news"};
  static const char puncts[] = {'!', '?', '.', ',', ';', ':', '(', ')', '"'};
  GeneratedText out;
  std::uniform_int_distribution<int> pieces(1, 12);
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_int_distribution<int> word_pick(0, 9);
  std::uniform_int_distribution<int> punct_pick(0, 8);
  std::uniform_int_distribution<int> punct_run(1, 3);
  const int n = pieces(rng);
  for (int i = 0; i < n; ++i) {
    if (!out.text.empty()) out.text += ' ';
    switch (kind(rng)) {
      case 0: {
        static const char* tags[] = {"vote2016", "debate", "news", "GoTeam", "tag_x"};
        out.text += '#';
        out.text += tags[word_pick(rng) % 5];
        break;
      }
      case 1:
        out.text += "@user";
        out.text += std::to_string(word_pick(rng));
        break;
      case 2:
        out.text += "http://ex.am/p.le?q=1";
        break;
      case 3: {
        const int run = punct_run(rng);
        for (int k = 0; k < run; ++k) out.text += puncts[punct_pick(rng)];
        out.punct_chars += static_cast<std::size_t>(run);
        break;
      }
      default: {
        out.text += words[word_pick(rng)];
        if (kind(rng) == 4) {  // sentence-final mark glued to the word
          out.text += puncts[punct_pick(rng)];
          out.punct_chars += 1;
        }
        break;
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("property: normalization is idempotent") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    for (const Token& t : tokenize(generate_text(rng).text)) {
      CHECK(lowercase_ascii(t.norm) == t.norm);
      if (t.kind == TokenKind::Hashtag || t.kind == TokenKind::Mention) {
        CHECK(t.norm.find(t.surface[0]) == std::string::npos);
      }
    }
  }
}

TEST_CASE("property: PUNCT token count equals punctuation characters outside urls") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    const GeneratedText g = generate_text(rng);
    std::size_t punct_tokens = 0;
    for (const Token& t : tokenize(g.text)) {
      if (t.kind == TokenKind::Punct) ++punct_tokens;
    }
    CAPTURE(g.text);
    CHECK(punct_tokens == g.punct_chars);
  }
}

TEST_CASE("property: token counts add over whitespace concatenation") {
  std::mt19937 rng(13);
  for (int iter = 0; iter < 200; ++iter) {
    const std::string a = generate_text(rng).text;
    const std::string b = generate_text(rng).text;
    CHECK(tokenize(a + " " + b).size() == tokenize(a).size() + tokenize(b).size());
  }
}

TEST_SUITE_END();

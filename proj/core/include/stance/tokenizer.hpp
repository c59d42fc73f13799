#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stance {

enum class TokenKind { Word, Hashtag, Mention, Punct, Url, Number };

struct Token {
  TokenKind kind;
  std::string surface;  // as it appeared in the text
  std::string norm;     // lowercased; '#'/'@' marker stripped for tags

  /// Pre-apostrophe stem of a WORD norm ("she's" -> "she"), used when
  /// matching clitic forms against single-word entity lists. Empty for
  /// other token kinds and for words without an apostrophe.
  std::optional<std::string_view> clitic_stem() const;
};

bool operator==(const Token& a, const Token& b);

using TokenSequence = std::vector<Token>;

/// Splits tweet text into typed tokens.
///
/// Rules: '#'/'@' followed by an alphanumeric run forms a single
/// HASHTAG/MENTION token; a scheme:// prefix swallows everything up to the
/// next whitespace as one URL token; punctuation outside URLs is emitted as
/// one PUNCT token per character; apostrophes between word characters stay
/// inside WORD tokens; digit runs are NUMBER tokens. Bytes >= 0x80 are
/// treated as word characters, so multi-byte UTF-8 stays intact.
TokenSequence tokenize(std::string_view text);

}  // namespace stance

#include "stance/tokenizer.hpp"

#include <algorithm>
#include <cctype>

#include "text_util.hpp"

namespace stance {

namespace {

bool is_alpha(unsigned char c) { return std::isalpha(c) != 0; }
bool is_digit(unsigned char c) { return std::isdigit(c) != 0; }

// Bytes >= 0x80 (UTF-8 continuation and lead bytes) count as word material.
bool is_word_start(unsigned char c) { return is_alpha(c) || c >= 0x80; }
bool is_word_char(unsigned char c) {
  return is_alpha(c) || is_digit(c) || c == '_' || c >= 0x80;
}

// Hashtag/mention bodies: Twitter-style [A-Za-z0-9_] runs.
bool is_tag_char(unsigned char c) { return is_alpha(c) || is_digit(c) || c == '_'; }

bool is_scheme_char(unsigned char c) {
  return is_alpha(c) || is_digit(c) || c == '+' || c == '-' || c == '.';
}

// Returns one past the end of a URL starting at `start`, or 0 when the text
// there is not a scheme:// prefix. URLs run to the next whitespace.
std::size_t match_url(std::string_view text, std::size_t start) {
  std::size_t i = start;
  if (i >= text.size() || !is_alpha(static_cast<unsigned char>(text[i]))) return 0;
  while (i < text.size() && is_scheme_char(static_cast<unsigned char>(text[i]))) ++i;
  if (text.substr(i, 3) != "://") return 0;
  i += 3;
  while (i < text.size() && !detail::is_space(static_cast<unsigned char>(text[i]))) ++i;
  return i;
}

Token make_token(TokenKind kind, std::string_view surface, std::size_t marker_len) {
  Token t;
  t.kind = kind;
  t.surface = std::string(surface);
  t.norm = detail::to_lower(surface.substr(marker_len));
  return t;
}

}  // namespace

std::optional<std::string_view> Token::clitic_stem() const {
  if (kind != TokenKind::Word) return std::nullopt;
  std::size_t pos = norm.find('\'');
  std::size_t curly = norm.find("\xE2\x80\x99");  // U+2019 right single quote
  pos = std::min(pos, curly);
  if (pos == std::string::npos || pos == 0) return std::nullopt;
  return std::string_view(norm).substr(0, pos);
}

bool operator==(const Token& a, const Token& b) {
  return a.kind == b.kind && a.surface == b.surface && a.norm == b.norm;
}

TokenSequence tokenize(std::string_view text) {
  TokenSequence out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (detail::is_space(c)) {
      ++i;
      continue;
    }
    if ((c == '#' || c == '@') && i + 1 < n &&
        is_tag_char(static_cast<unsigned char>(text[i + 1]))) {
      std::size_t j = i + 1;
      while (j < n && is_tag_char(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back(make_token(c == '#' ? TokenKind::Hashtag : TokenKind::Mention,
                               text.substr(i, j - i), 1));
      i = j;
      continue;
    }
    if (is_word_start(c)) {
      if (is_alpha(c)) {
        if (std::size_t url_end = match_url(text, i)) {
          out.push_back(make_token(TokenKind::Url, text.substr(i, url_end - i), 0));
          i = url_end;
          continue;
        }
      }
      std::size_t j = i;
      while (j < n) {
        const unsigned char d = static_cast<unsigned char>(text[j]);
        if (is_word_char(d)) {
          ++j;
        } else if (d == '\'' && j + 1 < n &&
                   is_word_char(static_cast<unsigned char>(text[j + 1]))) {
          ++j;  // apostrophe between word characters stays in the word
        } else {
          break;
        }
      }
      out.push_back(make_token(TokenKind::Word, text.substr(i, j - i), 0));
      i = j;
      continue;
    }
    if (is_digit(c)) {
      std::size_t j = i;
      while (j < n && is_digit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back(make_token(TokenKind::Number, text.substr(i, j - i), 0));
      i = j;
      continue;
    }
    out.push_back(make_token(TokenKind::Punct, text.substr(i, 1), 0));
    ++i;
  }
  return out;
}

}  // namespace stance

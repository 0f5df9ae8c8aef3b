#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kea {

// One phrase line: a maximal token run not interrupted by punctuation,
// brackets, numbers or other boundary characters.
struct TokenLine {
  std::vector<std::string> tokens;
  std::size_t start_index = 0;  // index of tokens[0] in the document-wide stream
};

struct Document {
  std::vector<TokenLine> lines;
  std::size_t token_count = 0;
  std::string source_id;
};

namespace detail {

inline bool is_ascii_alnum(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return u < 128 && std::isalnum(u) != 0;
}

inline bool has_letter(std::string_view token) {
  for (char c : token) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u < 128 && std::isalpha(u)) return true;
  }
  return false;
}

}  // namespace detail

// Splits raw text into token lines. Tokens are runs of letters and digits;
// a period or hyphen directly between two alphanumerics is not a boundary
// (the period stays inside the token, the hyphen splits it in two).
// Apostrophes are dropped in place. Whitespace separates tokens within a
// line. Everything else, including tokens without a letter and non-ASCII
// bytes, ends the current line.
inline Document clean_text(std::string_view raw, std::string source_id = "") {
  Document doc;
  doc.source_id = std::move(source_id);
  TokenLine line;
  std::string token;

  auto finish_token = [&](bool* boundary) {
    if (token.empty()) return;
    if (detail::has_letter(token)) {
      if (line.tokens.empty()) line.start_index = doc.token_count;
      line.tokens.push_back(std::move(token));
      ++doc.token_count;
    } else {
      *boundary = true;  // standalone number
    }
    token.clear();
  };
  auto finish_line = [&] {
    if (!line.tokens.empty()) {
      doc.lines.push_back(std::move(line));
      line = TokenLine{};
    }
  };

  for (std::size_t i = 0; i < raw.size(); ++i) {
    char c = raw[i];
    bool boundary = false;
    if (detail::is_ascii_alnum(c)) {
      token.push_back(c);
    } else if (c == '\'') {
      // joins the surrounding letters: "don't" -> "dont"
    } else if ((c == '.' || c == '-') && !token.empty() &&
               detail::is_ascii_alnum(token.back()) && i + 1 < raw.size() &&
               detail::is_ascii_alnum(raw[i + 1])) {
      if (c == '.') {
        token.push_back('.');  // internal period: "C4.5"
      } else {
        finish_token(&boundary);  // hyphen splits, same line
      }
    } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
      finish_token(&boundary);
    } else {
      finish_token(&boundary);
      boundary = true;
    }
    if (boundary) finish_line();
  }
  bool boundary = false;
  finish_token(&boundary);
  finish_line();
  return doc;
}

// Rebuilds the document keeping only the first `keep` tokens.
inline Document truncate_document(const Document& doc, std::size_t keep) {
  Document out;
  out.source_id = doc.source_id;
  for (const TokenLine& line : doc.lines) {
    if (out.token_count >= keep) break;
    TokenLine copy;
    copy.start_index = line.start_index;
    for (const std::string& tok : line.tokens) {
      if (out.token_count >= keep) break;
      copy.tokens.push_back(tok);
      ++out.token_count;
    }
    if (!copy.tokens.empty()) out.lines.push_back(std::move(copy));
  }
  return out;
}

}  // namespace kea

#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mixcons/formula.hpp"

namespace mixcons {

/// Syntax error at a 1-based column, with the set of tokens that would
/// have been accepted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t column, std::string found, std::set<std::string> expected);

  std::size_t column() const { return column_; }
  const std::string& found() const { return found_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  std::size_t column_;
  std::string found_;
  std::set<std::string> expected_;
};

// Grammar:
//   formula := disj ;  disj := conj { "|" conj } ;  conj := unary { "&" unary } ;
//   unary   := "~" unary | atom | "(" formula ")" ;
//   atom    := "T" | "F" | "L" | IDENT            IDENT = [a-z][a-zA-Z0-9_]*
//   sequent := [ formula { "," formula } ] "=>" [ formula { "," formula } ] ;
Formula parse_formula(std::string_view text);
Inference parse_sequent(std::string_view text);

/// True if the text contains a "=>" token, i.e. should be read as a sequent.
bool looks_like_sequent(std::string_view text);

}  // namespace mixcons

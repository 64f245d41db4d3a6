#pragma once

// Pattern data model for partially ordered generalized patterns over k-ary
// words: letters carry a comparability class (written as prime marks) and a
// rank inside that class.  Classes are totally ordered internally; letters of
// different classes are incomparable unless the order mode or an explicit
// relation says otherwise.  Hyphens split a pattern into blocks; the letters
// of one block must match adjacent word positions.

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pogp/numeric.hpp"

namespace pogp {

struct Symbol {
  int cls = 0;   // 0 = unprimed, c = number of prime marks
  int rank = 0;  // value within the class, >= 1
  auto operator<=>(const Symbol&) const = default;
};

/// Renders a symbol in the pattern mini-language, e.g. (0,2) -> "2",
/// (1,1) -> "1'", (2,10) -> "(10)''".
std::string to_string(Symbol s);

/// Parses a single letter, the inverse of to_string(Symbol).
Symbol parse_symbol(std::string_view text);

using SymbolPair = std::pair<Symbol, Symbol>;

/// How cross-class order is derived when parsing pattern text.
enum class OrderMode {
  Incomparable,  // distinct classes are unrelated
  Shuffle,       // every unprimed letter is greater than every primed letter
  Explicit,      // caller supplies cross-class strict pairs
};

class Pogp {
 public:
  /// Parses the pattern mini-language: blocks of letters separated by '-',
  /// each letter a digit (or parenthesized number) followed by prime marks.
  /// In Shuffle mode the unprimed letters must be written strictly above
  /// every primed letter (e.g. "1'-2-1''"); `relations` is consulted only in
  /// Explicit mode.
  ///
  /// Throws std::invalid_argument on grammar errors, rank 0, non-contiguous
  /// ranks within a class, relations naming absent symbols, or cyclic order.
  static Pogp parse(std::string_view text, OrderMode mode = OrderMode::Incomparable,
                    std::span<const SymbolPair> relations = {});

  /// Builds a pattern from explicit blocks plus strict pairs (within-class
  /// pairs are implied by ranks and need not be listed).  The order relation
  /// is transitively closed; cycles are rejected.
  Pogp(std::vector<std::vector<Symbol>> blocks, std::vector<SymbolPair> strict_pairs);

  const std::vector<std::vector<Symbol>>& blocks() const { return blocks_; }
  /// Distinct symbols, ascending (class, rank).
  const std::vector<Symbol>& symbols() const { return symbols_; }

  int length() const { return length_; }  // total number of letters
  int block_count() const { return static_cast<int>(blocks_.size()); }
  bool hyphen_free() const { return blocks_.size() == 1; }

  bool less(Symbol a, Symbol b) const;
  bool incomparable(Symbol a, Symbol b) const;
  /// All strict pairs (a, b) with a < b, sorted; includes within-class pairs.
  std::vector<SymbolPair> strict_pairs() const;

  int symbol_index(Symbol s) const;  // -1 if the symbol does not occur
  bool less_by_index(int i, int j) const { return less_[i][j]; }

  std::string to_string() const;

  bool operator==(const Pogp& other) const;

 private:
  std::vector<std::vector<Symbol>> blocks_;
  std::vector<Symbol> symbols_;
  std::vector<std::vector<bool>> less_;
  int length_ = 0;
};

class Word {
 public:
  Word() = default;  // empty word over the empty alphabet
  /// Throws std::invalid_argument unless every letter is in 1..alphabet_size.
  Word(std::vector<int> letters, int alphabet_size);
  /// Digit string for alphabets up to 9, comma-separated integers otherwise.
  static Word parse(std::string_view text, int alphabet_size);

  const std::vector<int>& letters() const { return letters_; }
  int alphabet_size() const { return alphabet_; }
  int size() const { return static_cast<int>(letters_.size()); }
  int letter(int i) const { return letters_[i]; }

  std::string to_string() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<int> letters_;
  int alphabet_ = 0;
};

enum class PatternKind { Plain, Multi, Shuffle, Other };

struct PatternClass {
  PatternKind kind = PatternKind::Other;
  /// Number of hyphen-free constituent patterns: s+1 for multi and shuffle
  /// shapes, the plain block count otherwise.
  int block_count = 0;
  /// Sizes r_c of the comparability classes present, ascending class id.
  std::vector<int> class_sizes;
};

// ---- matcher -------------------------------------------------------------

/// All occurrences of `p` in `w` as tuples of 0-based word positions, one per
/// pattern letter; positions inside a block are consecutive, gaps appear only
/// at hyphens.  Lexicographically sorted and duplicate-free.
std::vector<std::vector<int>> occurrences(const Word& w, const Pogp& p);

bool contains(const Word& w, const Pogp& p);
bool avoids(const Word& w, const Pogp& p);

/// True iff `w` has exactly one occurrence of the hyphen-free pattern `p` and
/// that occurrence sits at the rightmost |p| positions.
bool quasi_avoids(const Word& w, const Pogp& p);

/// Maximum number of pairwise non-overlapping occurrences of the hyphen-free
/// pattern `p` in `w`; occurrences overlap when they share a position.
int mnd(const Word& w, const Pogp& p);

// ---- trivial bijections --------------------------------------------------

Word reverse(const Word& w);
Word complement(const Word& w);  // letter l -> k+1-l
Pogp reverse(const Pogp& p);     // reverses the block list and every block
Pogp complement(const Pogp& p);  // inverts every strict pair

// ---- expansion to ordinary generalized patterns --------------------------

/// The set of single-class generalized patterns with the same block structure
/// whose simultaneous avoidance is equivalent to avoiding `p`: one pattern per
/// order-preserving valuation of the symbols onto a contiguous range 1..m.
/// Sorted by pattern text, duplicate-free.
std::vector<Pogp> expand(const Pogp& p);

/// Number of patterns a two-class pattern with class sizes r1, r2 expands to:
/// sum over i of C(r1,i) C(r1+r2-i, r1), counting the ways the two rank
/// chains can merge into one totally ordered alphabet.  Symmetric; arguments
/// are swapped when given in ascending order.
BigInt expansion_count(int r1, int r2);

/// Length of the longest strict chain of distinct symbols.
int chain_height(const Pogp& p);

PatternClass classify(const Pogp& p);

std::string_view to_string(PatternKind k);

}  // namespace pogp

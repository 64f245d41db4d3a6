#include "pogp/pattern.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pogp {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt num = 1, den = 1;
  for (int i = 1; i <= k; ++i) {
    num *= n - k + i;
    den *= i;
  }
  return num / den;
}

std::string to_string(Symbol s) {
  std::string out;
  if (s.rank >= 10) {
    out += '(';
    out += std::to_string(s.rank);
    out += ')';
  } else {
    out += std::to_string(s.rank);
  }
  out.append(static_cast<size_t>(s.cls), '\'');
  return out;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& what) {
  throw std::invalid_argument("invalid pattern \"" + std::string(text) + "\": " + what);
}

// Reads one letter starting at text[i]; advances i past it.
Symbol read_letter(std::string_view text, size_t& i) {
  int rank = 0;
  if (text[i] == '(') {
    size_t close = text.find(')', i);
    if (close == std::string_view::npos) parse_fail(text, "missing ')'");
    if (close == i + 1) parse_fail(text, "empty parentheses");
    for (size_t j = i + 1; j < close; ++j) {
      if (text[j] < '0' || text[j] > '9') parse_fail(text, "non-digit inside parentheses");
      rank = rank * 10 + (text[j] - '0');
      if (rank > 1'000'000) parse_fail(text, "rank out of range");
    }
    i = close + 1;
  } else if (text[i] >= '0' && text[i] <= '9') {
    rank = text[i] - '0';
    ++i;
  } else {
    parse_fail(text, std::string("unexpected character '") + text[i] + "'");
  }
  if (rank == 0) parse_fail(text, "rank must be positive");
  int cls = 0;
  while (i < text.size() && text[i] == '\'') {
    ++cls;
    ++i;
  }
  return Symbol{cls, rank};
}

}  // namespace

Symbol parse_symbol(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty symbol");
  size_t i = 0;
  Symbol s = read_letter(text, i);
  if (i != text.size()) throw std::invalid_argument("trailing characters in symbol \"" + std::string(text) + "\"");
  return s;
}

Pogp Pogp::parse(std::string_view text, OrderMode mode, std::span<const SymbolPair> relations) {
  std::vector<std::vector<Symbol>> blocks(1);
  size_t i = 0;
  if (text.empty()) parse_fail(text, "empty pattern");
  while (i < text.size()) {
    if (text[i] == '-') {
      if (blocks.back().empty()) parse_fail(text, "empty block");
      blocks.emplace_back();
      ++i;
      continue;
    }
    blocks.back().push_back(read_letter(text, i));
  }
  if (blocks.back().empty()) parse_fail(text, "empty block");

  // Per-class rank extent, for the mode-specific placement rules.
  std::map<int, std::pair<int, int>> extent;  // cls -> (min, max)
  for (const auto& block : blocks)
    for (Symbol s : block) {
      auto it = extent.find(s.cls);
      if (it == extent.end())
        extent.emplace(s.cls, std::make_pair(s.rank, s.rank));
      else {
        it->second.first = std::min(it->second.first, s.rank);
        it->second.second = std::max(it->second.second, s.rank);
      }
    }
  int max_primed = 0;
  for (const auto& [cls, ext] : extent)
    if (cls > 0) {
      if (ext.first != 1) parse_fail(text, "class " + std::to_string(cls) + " ranks must start at 1");
      max_primed = std::max(max_primed, ext.second);
    }

  std::vector<SymbolPair> pairs;
  auto unprimed = extent.find(0);
  switch (mode) {
    case OrderMode::Incomparable:
      if (unprimed != extent.end() && unprimed->second.first != 1)
        parse_fail(text, "unprimed ranks must start at 1");
      break;
    case OrderMode::Shuffle: {
      // The unprimed letters dominate every primed class and are written
      // directly above the primed ranks, as in "1'-2-1''".
      if (unprimed != extent.end()) {
        if (unprimed->second.first != max_primed + 1)
          parse_fail(text, "in shuffle order the unprimed letters must be written directly above every primed letter");
        for (const auto& [cls, ext] : extent)
          if (cls > 0)
            for (int r = 1; r <= ext.second; ++r)
              for (int u = unprimed->second.first; u <= unprimed->second.second; ++u)
                pairs.push_back({Symbol{cls, r}, Symbol{0, u}});
      }
      break;
    }
    case OrderMode::Explicit:
      if (unprimed != extent.end() && unprimed->second.first != 1)
        parse_fail(text, "unprimed ranks must start at 1");
      pairs.assign(relations.begin(), relations.end());
      break;
  }
  return Pogp(std::move(blocks), std::move(pairs));
}

Pogp::Pogp(std::vector<std::vector<Symbol>> blocks, std::vector<SymbolPair> strict_pairs)
    : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw std::invalid_argument("pattern has no blocks");
  std::set<Symbol> seen;
  for (const auto& block : blocks_) {
    if (block.empty()) throw std::invalid_argument("pattern has an empty block");
    for (Symbol s : block) {
      if (s.rank < 1) throw std::invalid_argument("symbol rank must be positive");
      if (s.cls < 0) throw std::invalid_argument("symbol class must be nonnegative");
      seen.insert(s);
      ++length_;
    }
  }
  symbols_.assign(seen.begin(), seen.end());

  // Ranks inside each class must form a contiguous run; primed classes start
  // at 1, the unprimed class may sit anywhere (shuffle notation writes it
  // above the primed letters).
  std::map<int, std::vector<int>> by_class;
  for (Symbol s : symbols_) by_class[s.cls].push_back(s.rank);
  for (const auto& [cls, ranks] : by_class) {
    int lo = ranks.front(), hi = ranks.back();  // symbols_ is sorted
    if (hi - lo + 1 != static_cast<int>(ranks.size()))
      throw std::invalid_argument("class " + std::to_string(cls) + " ranks are not contiguous");
    if (cls > 0 && lo != 1)
      throw std::invalid_argument("class " + std::to_string(cls) + " ranks must start at 1");
  }

  const int m = static_cast<int>(symbols_.size());
  less_.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (symbols_[i].cls == symbols_[j].cls && symbols_[i].rank < symbols_[j].rank)
        less_[i][j] = true;
  for (const auto& [a, b] : strict_pairs) {
    int i = symbol_index(a), j = symbol_index(b);
    if (i < 0 || j < 0)
      throw std::invalid_argument("order relates symbol " + pogp::to_string(i < 0 ? a : b) +
                                  " that does not occur in the pattern");
    less_[i][j] = true;
  }
  // transitive closure
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      if (less_[i][k])
        for (int j = 0; j < m; ++j)
          if (less_[k][j]) less_[i][j] = true;
  for (int i = 0; i < m; ++i)
    if (less_[i][i]) throw std::invalid_argument("order specification creates a cycle");
}

int Pogp::symbol_index(Symbol s) const {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), s);
  if (it == symbols_.end() || *it != s) return -1;
  return static_cast<int>(it - symbols_.begin());
}

bool Pogp::less(Symbol a, Symbol b) const {
  int i = symbol_index(a), j = symbol_index(b);
  if (i < 0 || j < 0) return false;
  return less_[i][j];
}

bool Pogp::incomparable(Symbol a, Symbol b) const {
  return a != b && !less(a, b) && !less(b, a);
}

std::vector<SymbolPair> Pogp::strict_pairs() const {
  std::vector<SymbolPair> out;
  const int m = static_cast<int>(symbols_.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (less_[i][j]) out.push_back({symbols_[i], symbols_[j]});
  return out;
}

std::string Pogp::to_string() const {
  std::string out;
  for (size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += '-';
    for (Symbol s : blocks_[b]) out += pogp::to_string(s);
  }
  return out;
}

bool Pogp::operator==(const Pogp& other) const {
  return blocks_ == other.blocks_ && symbols_ == other.symbols_ && less_ == other.less_;
}

// ---- Word ----------------------------------------------------------------

Word::Word(std::vector<int> letters, int alphabet_size)
    : letters_(std::move(letters)), alphabet_(alphabet_size) {
  if (alphabet_ < 0) throw std::invalid_argument("alphabet size must be nonnegative");
  for (int l : letters_)
    if (l < 1 || l > alphabet_)
      throw std::invalid_argument("letter " + std::to_string(l) + " outside alphabet [" +
                                  std::to_string(alphabet_) + "]");
}

Word Word::parse(std::string_view text, int alphabet_size) {
  std::vector<int> letters;
  if (alphabet_size <= 9) {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("invalid word character '" + std::string(1, c) + "'");
      letters.push_back(c - '0');
    }
  } else if (!text.empty()) {
    std::stringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, ',')) {
      size_t pos = 0;
      int value = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument("invalid word letter \"" + item + "\"");
      letters.push_back(value);
    }
  }
  return Word(std::move(letters), alphabet_size);
}

std::string Word::to_string() const {
  std::string out;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (alphabet_ > 9 && i) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

// ---- matcher -------------------------------------------------------------

namespace {

enum class Rel : unsigned char { Free, Eq, Lt, Gt };

// Flattened pattern with a pairwise relation table, shared by every matcher
// entry point.  Enumerates block placements left to right, checking each new
// position against all earlier ones, and reports occurrences in lexicographic
// order of the position tuple.
struct Matcher {
  const Word& w;
  const Pogp& p;
  int n;
  std::vector<int> block_len;
  std::vector<int> block_first;  // flat index of each block's first letter
  std::vector<int> tail_len;     // letters in blocks b..end
  std::vector<Rel> rel;          // m*m, flat-position pairs
  std::vector<int> pos;          // chosen word position per flat index
  int m;

  Matcher(const Word& w_, const Pogp& p_) : w(w_), p(p_), n(w_.size()), m(p_.length()) {
    std::vector<int> sym;
    sym.reserve(m);
    for (const auto& block : p.blocks()) {
      block_first.push_back(static_cast<int>(sym.size()));
      block_len.push_back(static_cast<int>(block.size()));
      for (Symbol s : block) sym.push_back(p.symbol_index(s));
    }
    tail_len.assign(block_len.size() + 1, 0);
    for (int b = static_cast<int>(block_len.size()) - 1; b >= 0; --b)
      tail_len[b] = tail_len[b + 1] + block_len[b];
    rel.assign(static_cast<size_t>(m) * m, Rel::Free);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (sym[i] == sym[j])
          rel[i * m + j] = Rel::Eq;
        else if (p.less_by_index(sym[i], sym[j]))
          rel[i * m + j] = Rel::Lt;
        else if (p.less_by_index(sym[j], sym[i]))
          rel[i * m + j] = Rel::Gt;
      }
    pos.assign(m, 0);
  }

  bool placement_ok(int flat, int word_pos) const {
    int a = w.letter(word_pos);
    for (int j = 0; j < flat; ++j) {
      int b = w.letter(pos[j]);
      switch (rel[flat * m + j]) {
        case Rel::Free: break;
        case Rel::Eq:
          if (a != b) return false;
          break;
        case Rel::Lt:
          if (a >= b) return false;
          break;
        case Rel::Gt:
          if (a <= b) return false;
          break;
      }
    }
    return true;
  }

  // Visits occurrences until the callback returns false.
  template <typename F>
  bool visit(F&& cb) {
    if (m > n) return true;
    return place_block(0, 0, cb);
  }

  template <typename F>
  bool place_block(int b, int min_start, F&& cb) {
    if (b == static_cast<int>(block_len.size())) return cb(pos);
    for (int s = min_start; s + tail_len[b] <= n; ++s) {
      int flat = block_first[b];
      bool ok = true;
      for (int off = 0; off < block_len[b]; ++off) {
        if (!placement_ok(flat + off, s + off)) {
          ok = false;
          break;
        }
        pos[flat + off] = s + off;
      }
      if (ok && !place_block(b + 1, s + block_len[b], cb)) return false;
    }
    return true;
  }
};

void require_hyphen_free(const Pogp& p, const char* op) {
  if (!p.hyphen_free())
    throw std::invalid_argument(std::string(op) + " requires a hyphen-free pattern, got \"" +
                                p.to_string() + "\"");
}

}  // namespace

std::vector<std::vector<int>> occurrences(const Word& w, const Pogp& p) {
  std::vector<std::vector<int>> out;
  Matcher matcher(w, p);
  matcher.visit([&](const std::vector<int>& pos) {
    out.push_back(pos);
    return true;
  });
  return out;
}

bool contains(const Word& w, const Pogp& p) {
  Matcher matcher(w, p);
  return !matcher.visit([](const std::vector<int>&) { return false; });
}

bool avoids(const Word& w, const Pogp& p) { return !contains(w, p); }

bool quasi_avoids(const Word& w, const Pogp& p) {
  require_hyphen_free(p, "quasi_avoids");
  int count = 0;
  int first_start = -1;
  Matcher matcher(w, p);
  matcher.visit([&](const std::vector<int>& pos) {
    ++count;
    if (count == 1) first_start = pos[0];
    return count < 2;
  });
  return count == 1 && first_start == w.size() - p.length();
}

int mnd(const Word& w, const Pogp& p) {
  require_hyphen_free(p, "mnd");
  // Occurrences are intervals of length |p|; the greedy earliest-end sweep is
  // the standard interval-scheduling optimum.
  int taken = 0;
  int next_free = 0;
  const int len = p.length();
  Matcher matcher(w, p);
  matcher.visit([&](const std::vector<int>& pos) {
    if (pos[0] >= next_free) {
      ++taken;
      next_free = pos[0] + len;
    }
    return true;
  });
  return taken;
}

// ---- trivial bijections --------------------------------------------------

Word reverse(const Word& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  return Word(std::move(letters), w.alphabet_size());
}

Word complement(const Word& w) {
  std::vector<int> letters;
  letters.reserve(w.letters().size());
  for (int l : w.letters()) letters.push_back(w.alphabet_size() + 1 - l);
  return Word(std::move(letters), w.alphabet_size());
}

Pogp reverse(const Pogp& p) {
  std::vector<std::vector<Symbol>> blocks(p.blocks().rbegin(), p.blocks().rend());
  for (auto& block : blocks) std::reverse(block.begin(), block.end());
  return Pogp(std::move(blocks), p.strict_pairs());
}

Pogp complement(const Pogp& p) {
  // Flip every class's rank run, then invert each strict pair.
  std::map<int, std::pair<int, int>> extent;
  for (Symbol s : p.symbols()) {
    auto [it, fresh] = extent.emplace(s.cls, std::make_pair(s.rank, s.rank));
    if (!fresh) {
      it->second.first = std::min(it->second.first, s.rank);
      it->second.second = std::max(it->second.second, s.rank);
    }
  }
  auto flip = [&](Symbol s) {
    auto [lo, hi] = extent.at(s.cls);
    return Symbol{s.cls, lo + hi - s.rank};
  };
  std::vector<std::vector<Symbol>> blocks = p.blocks();
  for (auto& block : blocks)
    for (Symbol& s : block) s = flip(s);
  std::vector<SymbolPair> pairs;
  for (const auto& [a, b] : p.strict_pairs()) pairs.push_back({flip(b), flip(a)});
  return Pogp(std::move(blocks), std::move(pairs));
}

// ---- expansion -----------------------------------------------------------

std::vector<Pogp> expand(const Pogp& p) {
  const auto& syms = p.symbols();
  const int m = static_cast<int>(syms.size());
  std::vector<int> value(m, 0);
  std::set<std::string> seen;
  std::vector<Pogp> out;

  auto emit = [&]() {
    // compress the image onto 1..t
    std::vector<int> used(value.begin(), value.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::vector<std::vector<Symbol>> blocks;
    for (const auto& block : p.blocks()) {
      blocks.emplace_back();
      for (Symbol s : block) {
        int v = value[p.symbol_index(s)];
        int idx = static_cast<int>(std::lower_bound(used.begin(), used.end(), v) - used.begin());
        blocks.back().push_back(Symbol{0, idx + 1});
      }
    }
    Pogp q(std::move(blocks), {});
    if (seen.insert(q.to_string()).second) out.push_back(std::move(q));
  };

  // Depth-first over valuations, pruning on the first violated pair.
  auto assign = [&](auto&& self, int i) -> void {
    if (i == m) {
      emit();
      return;
    }
    for (int v = 1; v <= m; ++v) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (p.less_by_index(j, i) && !(value[j] < v)) ok = false;
        if (p.less_by_index(i, j) && !(v < value[j])) ok = false;
      }
      if (ok) {
        value[i] = v;
        self(self, i + 1);
      }
    }
  };
  assign(assign, 0);
  std::sort(out.begin(), out.end(),
            [](const Pogp& a, const Pogp& b) { return a.to_string() < b.to_string(); });
  return out;
}

BigInt expansion_count(int r1, int r2) {
  if (r1 < 1 || r2 < 1) throw std::invalid_argument("class sizes must be positive");
  if (r1 < r2) std::swap(r1, r2);
  // A merged pattern on t values is a pair of an r1-subset A and an r2-subset
  // B of [t] with A union B = [t]; with i shared values, t = r1+r2-i, A can be
  // chosen in C(t,r1) ways and its shared part in C(r1,i) ways, fixing B.
  BigInt total = 0;
  for (int i = 0; i <= r2; ++i)
    total += binomial(r1, i) * binomial(r1 + r2 - i, r1);
  return total;
}

int chain_height(const Pogp& p) {
  const int m = static_cast<int>(p.symbols().size());
  std::vector<int> height(m, 0);
  auto compute = [&](auto&& self, int i) -> int {
    if (height[i]) return height[i];
    int best = 1;
    for (int j = 0; j < m; ++j)
      if (p.less_by_index(i, j)) best = std::max(best, 1 + self(self, j));
    return height[i] = best;
  };
  int best = 0;
  for (int i = 0; i < m; ++i) best = std::max(best, compute(compute, i));
  return best;
}

PatternClass classify(const Pogp& p) {
  std::map<int, int> class_size;
  for (Symbol s : p.symbols()) ++class_size[s.cls];
  PatternClass result;
  result.block_count = p.block_count();
  for (const auto& [cls, size] : class_size) result.class_sizes.push_back(size);

  auto block_class = [&](const std::vector<Symbol>& block) -> int {
    int cls = block.front().cls;
    for (Symbol s : block)
      if (s.cls != cls) return -1;
    return cls;
  };
  auto order_matches = [&](auto&& expected_less) {
    const auto& syms = p.symbols();
    for (size_t i = 0; i < syms.size(); ++i)
      for (size_t j = 0; j < syms.size(); ++j)
        if (p.less_by_index(static_cast<int>(i), static_cast<int>(j)) !=
            expected_less(syms[i], syms[j]))
          return false;
    return true;
  };
  auto same_class_less = [](Symbol a, Symbol b) { return a.cls == b.cls && a.rank < b.rank; };

  if (class_size.size() == 1) {
    result.kind = PatternKind::Plain;
    return result;
  }

  const auto& blocks = p.blocks();
  const int nb = p.block_count();

  // shuffle: tau^0 - a_1 - tau^1 - ... - a_s - tau^s with every a_i above
  // every tau letter and the tau classes mutually incomparable
  if (nb >= 3 && nb % 2 == 1) {
    bool shape_ok = true;
    int top = -1;
    std::set<int> tau_classes;
    for (int b = 0; b < nb && shape_ok; ++b) {
      int cls = block_class(blocks[b]);
      if (cls < 0) {
        shape_ok = false;
        break;
      }
      if (b % 2 == 1) {
        if (blocks[b].size() != 1 || (top >= 0 && cls != top)) shape_ok = false;
        top = cls;
      } else {
        if (!tau_classes.insert(cls).second) shape_ok = false;
      }
    }
    if (shape_ok && top >= 0 && !tau_classes.contains(top)) {
      auto shuffle_less = [&](Symbol a, Symbol b) {
        if (a.cls == b.cls) return a.rank < b.rank;
        return b.cls == top && a.cls != top;
      };
      if (order_matches(shuffle_less)) {
        result.kind = PatternKind::Shuffle;
        result.block_count = (nb + 1) / 2;
        return result;
      }
    }
  }

  // multi: one class per block, all distinct, no cross-class order
  {
    std::set<int> used;
    bool shape_ok = true;
    for (const auto& block : blocks) {
      int cls = block_class(block);
      if (cls < 0 || !used.insert(cls).second) {
        shape_ok = false;
        break;
      }
    }
    if (shape_ok && order_matches(same_class_less)) {
      result.kind = PatternKind::Multi;
      return result;
    }
  }

  result.kind = PatternKind::Other;
  return result;
}

std::string_view to_string(PatternKind k) {
  switch (k) {
    case PatternKind::Plain: return "plain";
    case PatternKind::Multi: return "multi";
    case PatternKind::Shuffle: return "shuffle";
    case PatternKind::Other: return "other";
  }
  return "other";
}

}  // namespace pogp

#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace vsl {

/**
 * Braid-word alphabet.  A letter acts on the adjacent lanes (index, index+1),
 * 1-based.  SigmaPos/SigmaNeg are the positive/negative real crossings of a
 * virtual braid word; Tau is the virtual crossing; FlatCross is the flat
 * crossing of a flat braid word (an involution, like Tau).
 */
enum class LetterKind { SigmaPos, SigmaNeg, Tau, FlatCross };

struct Letter {
  LetterKind kind;
  int index;  // 1 <= index <= n-1
  bool operator==(const Letter&) const = default;
};

inline bool is_sigma_like(LetterKind k) {
  return k == LetterKind::SigmaPos || k == LetterKind::SigmaNeg || k == LetterKind::FlatCross;
}

inline Letter inverse_letter(Letter l) {
  if (l.kind == LetterKind::SigmaPos) return {LetterKind::SigmaNeg, l.index};
  if (l.kind == LetterKind::SigmaNeg) return {LetterKind::SigmaPos, l.index};
  return l;  // Tau and FlatCross are involutions
}

inline std::string to_string(const Letter& l) {
  switch (l.kind) {
    case LetterKind::SigmaPos:
      return "s" + std::to_string(l.index);
    case LetterKind::SigmaNeg:
      return "S" + std::to_string(l.index);
    case LetterKind::Tau:
      return "t" + std::to_string(l.index);
    case LetterKind::FlatCross:
      return "f" + std::to_string(l.index);
  }
  return "?";
}

/** Word over { s_i, S_i (inverse), t_i }.  Empty word is the identity braid. */
struct VirtualBraidWord {
  int n = 1;
  std::vector<Letter> letters;
  bool operator==(const VirtualBraidWord&) const = default;
};

/** Word over { f_i (flat crossing), t_i }. */
struct FlatBraidWord {
  int n = 1;
  std::vector<Letter> letters;
  bool operator==(const FlatBraidWord&) const = default;
};

inline bool word_allows(const VirtualBraidWord&, LetterKind k) { return k != LetterKind::FlatCross; }
inline bool word_allows(const FlatBraidWord&, LetterKind k) {
  return k == LetterKind::FlatCross || k == LetterKind::Tau;
}

class WordParseError : public std::runtime_error {
 public:
  WordParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at byte " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

// Shared token scanner.  `alphabet` lists the legal generator characters.
// Grammar: optional first token `n=<count>`, then whitespace-separated
// `<char><index>` tokens with index >= 1.
inline void parse_word_text(const std::string& text, const std::string& alphabet,
                            std::optional<int> n_hint, int& n_out, std::vector<Letter>& letters) {
  letters.clear();
  std::optional<int> header_n;
  int max_index = 0;
  std::size_t i = 0;
  bool first = true;
  auto read_number = [&](std::size_t at, std::size_t end, const char* what) {
    if (at == end) throw WordParseError(at, std::string("missing ") + what);
    long value = 0;
    for (std::size_t j = at; j < end; ++j) {
      if (!std::isdigit(static_cast<unsigned char>(text[j])))
        throw WordParseError(j, std::string("invalid character in ") + what);
      value = value * 10 + (text[j] - '0');
      if (value > 1000000) throw WordParseError(at, std::string(what) + " too large");
    }
    return static_cast<int>(value);
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (text.compare(start, 2, "n=") == 0) {
      if (!first) throw WordParseError(start, "strand-count header must be the first token");
      int count = read_number(start + 2, i, "strand count");
      if (count < 1) throw WordParseError(start + 2, "strand count must be at least 1");
      header_n = count;
      first = false;
      continue;
    }
    first = false;
    char c = text[start];
    if (alphabet.find(c) == std::string::npos)
      throw WordParseError(start, std::string("unknown generator '") + c + "'");
    int index = read_number(start + 1, i, "generator index");
    if (index < 1) throw WordParseError(start + 1, "generator index must be at least 1");
    LetterKind kind = c == 's'   ? LetterKind::SigmaPos
                      : c == 'S' ? LetterKind::SigmaNeg
                      : c == 't' ? LetterKind::Tau
                                 : LetterKind::FlatCross;
    std::optional<int> bound = header_n ? header_n : n_hint;
    if (bound && index + 1 > *bound)
      throw WordParseError(start, "generator index " + std::to_string(index) +
                                      " out of range for n=" + std::to_string(*bound));
    max_index = std::max(max_index, index);
    letters.push_back({kind, index});
  }
  n_out = header_n ? *header_n : n_hint ? std::max(*n_hint, max_index + 1) : std::max(1, max_index + 1);
}

}  // namespace detail

inline VirtualBraidWord parse_virtual_word(const std::string& text,
                                           std::optional<int> n_hint = std::nullopt) {
  VirtualBraidWord w;
  detail::parse_word_text(text, "sSt", n_hint, w.n, w.letters);
  return w;
}

inline FlatBraidWord parse_flat_word(const std::string& text,
                                     std::optional<int> n_hint = std::nullopt) {
  FlatBraidWord w;
  detail::parse_word_text(text, "ft", n_hint, w.n, w.letters);
  return w;
}

template <typename WordT>
std::string format_word(const WordT& w) {
  std::string out = "n=" + std::to_string(w.n);
  for (const Letter& l : w.letters) out += " " + to_string(l);
  return out;
}

// One-line permutation, 0-based: strand starting in lane i ends in lane pi[i].
// Matches the diagram of the word, whose first letter sits at the bottom: the
// lane walk processes letters last-to-first (see from_braid_word).
template <typename WordT>
std::vector<int> word_permutation(const WordT& w) {
  std::vector<int> occ(w.n);  // occ[lane] = strand currently in the lane
  for (int l = 0; l < w.n; ++l) occ[l] = l;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    std::swap(occ[it->index - 1], occ[it->index]);
  std::vector<int> pi(w.n);
  for (int lane = 0; lane < w.n; ++lane) pi[occ[lane]] = lane;
  return pi;
}

template <typename WordT>
WordT inverse_word(const WordT& w) {
  WordT out;
  out.n = w.n;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(inverse_letter(*it));
  return out;
}

template <typename WordT>
WordT rotate_word(const WordT& w, std::size_t k) {
  WordT out = w;
  if (w.letters.empty()) return out;
  k %= w.letters.size();
  out.letters.assign(w.letters.begin() + k, w.letters.end());
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + k);
  return out;
}

/**
 * Relation rewrites.  Every move preserves the braid-group element:
 *  - Commute: xy -> yx for letters with |index difference| >= 2;
 *  - BraidShift: aba -> bab for same-kind letters with adjacent indices;
 *  - MixedA: x_i t_{i+1} t_i <-> t_{i+1} t_i x_{i+1} (x any crossing letter);
 *  - MixedB: t_i t_{i+1} x_i <-> x_{i+1} t_i t_{i+1} (inverse form of MixedA);
 *  - CancelPair: x x^{-1} -> empty;  InsertPair: empty -> x x^{-1}.
 */
enum class MoveKind { Commute, BraidShift, MixedA, MixedB, CancelPair, InsertPair };

struct Move {
  MoveKind kind;
  std::size_t pos = 0;
  Letter inserted{LetterKind::Tau, 1};  // used by InsertPair only
  bool operator==(const Move&) const = default;
};

inline std::string to_string(const Move& m) {
  switch (m.kind) {
    case MoveKind::Commute:
      return "commute@" + std::to_string(m.pos);
    case MoveKind::BraidShift:
      return "braid@" + std::to_string(m.pos);
    case MoveKind::MixedA:
      return "mixedA@" + std::to_string(m.pos);
    case MoveKind::MixedB:
      return "mixedB@" + std::to_string(m.pos);
    case MoveKind::CancelPair:
      return "cancel@" + std::to_string(m.pos);
    case MoveKind::InsertPair:
      return "insert@" + std::to_string(m.pos) + ":" + to_string(m.inserted);
  }
  return "?";
}

namespace detail {

template <typename WordT>
std::optional<WordT> try_apply(const WordT& w, const Move& m) {
  const auto& L = w.letters;
  const std::size_t len = L.size();
  WordT out = w;
  switch (m.kind) {
    case MoveKind::Commute: {
      if (m.pos + 1 >= len) return std::nullopt;
      if (std::abs(L[m.pos].index - L[m.pos + 1].index) < 2) return std::nullopt;
      std::swap(out.letters[m.pos], out.letters[m.pos + 1]);
      return out;
    }
    case MoveKind::BraidShift: {
      if (m.pos + 2 >= len) return std::nullopt;
      const Letter &a = L[m.pos], &b = L[m.pos + 1], &c = L[m.pos + 2];
      if (!(a == c) || a.kind != b.kind || std::abs(a.index - b.index) != 1) return std::nullopt;
      out.letters[m.pos] = b;
      out.letters[m.pos + 1] = a;
      out.letters[m.pos + 2] = b;
      return out;
    }
    case MoveKind::MixedA: {
      if (m.pos + 2 >= len) return std::nullopt;
      const Letter &a = L[m.pos], &b = L[m.pos + 1], &c = L[m.pos + 2];
      if (is_sigma_like(a.kind) && b.kind == LetterKind::Tau && c.kind == LetterKind::Tau &&
          b.index == a.index + 1 && c.index == a.index) {
        // x_i t_{i+1} t_i -> t_{i+1} t_i x_{i+1}
        out.letters[m.pos] = b;
        out.letters[m.pos + 1] = c;
        out.letters[m.pos + 2] = {a.kind, a.index + 1};
        return out;
      }
      if (a.kind == LetterKind::Tau && b.kind == LetterKind::Tau && is_sigma_like(c.kind) &&
          a.index == b.index + 1 && c.index == b.index + 1) {
        // t_{i+1} t_i x_{i+1} -> x_i t_{i+1} t_i
        out.letters[m.pos] = {c.kind, b.index};
        out.letters[m.pos + 1] = a;
        out.letters[m.pos + 2] = b;
        return out;
      }
      return std::nullopt;
    }
    case MoveKind::MixedB: {
      if (m.pos + 2 >= len) return std::nullopt;
      const Letter &a = L[m.pos], &b = L[m.pos + 1], &c = L[m.pos + 2];
      if (a.kind == LetterKind::Tau && b.kind == LetterKind::Tau && is_sigma_like(c.kind) &&
          b.index == a.index + 1 && c.index == a.index) {
        // t_i t_{i+1} x_i -> x_{i+1} t_i t_{i+1}
        out.letters[m.pos] = {c.kind, a.index + 1};
        out.letters[m.pos + 1] = a;
        out.letters[m.pos + 2] = b;
        return out;
      }
      if (is_sigma_like(a.kind) && b.kind == LetterKind::Tau && c.kind == LetterKind::Tau &&
          a.index == b.index + 1 && c.index == b.index + 1) {
        // x_{i+1} t_i t_{i+1} -> t_i t_{i+1} x_i
        out.letters[m.pos] = b;
        out.letters[m.pos + 1] = c;
        out.letters[m.pos + 2] = {a.kind, b.index};
        return out;
      }
      return std::nullopt;
    }
    case MoveKind::CancelPair: {
      if (m.pos + 1 >= len) return std::nullopt;
      if (!(L[m.pos + 1] == inverse_letter(L[m.pos]))) return std::nullopt;
      out.letters.erase(out.letters.begin() + m.pos, out.letters.begin() + m.pos + 2);
      return out;
    }
    case MoveKind::InsertPair: {
      if (m.pos > len) return std::nullopt;
      if (!word_allows(w, m.inserted.kind)) return std::nullopt;
      if (m.inserted.index < 1 || m.inserted.index + 1 > w.n) return std::nullopt;
      out.letters.insert(out.letters.begin() + m.pos, {m.inserted, inverse_letter(m.inserted)});
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace detail

template <typename WordT>
WordT apply_relation(const WordT& w, const Move& m) {
  auto out = detail::try_apply(w, m);
  if (!out) throw std::invalid_argument("relation " + to_string(m) + " does not apply");
  return *out;
}

template <typename WordT>
std::vector<Move> enumerate_moves(const WordT& w, bool allow_insert = true) {
  std::vector<Move> moves;
  auto consider = [&](Move m) {
    if (detail::try_apply(w, m)) moves.push_back(m);
  };
  for (std::size_t p = 0; p + 1 < w.letters.size(); ++p) {
    consider({MoveKind::Commute, p});
    consider({MoveKind::CancelPair, p});
  }
  for (std::size_t p = 0; p + 2 < w.letters.size(); ++p) {
    consider({MoveKind::BraidShift, p});
    consider({MoveKind::MixedA, p});
    consider({MoveKind::MixedB, p});
  }
  if (allow_insert) {
    const LetterKind virtual_kinds[] = {LetterKind::SigmaPos, LetterKind::SigmaNeg,
                                        LetterKind::Tau};
    const LetterKind flat_kinds[] = {LetterKind::FlatCross, LetterKind::Tau};
    for (std::size_t p = 0; p <= w.letters.size(); ++p)
      for (int i = 1; i < w.n; ++i) {
        if (word_allows(w, LetterKind::SigmaPos))
          for (LetterKind k : virtual_kinds) consider({MoveKind::InsertPair, p, {k, i}});
        else
          for (LetterKind k : flat_kinds) consider({MoveKind::InsertPair, p, {k, i}});
      }
  }
  return moves;
}

/**
 * `steps` random relation rewrites, deterministic for a fixed seed.  If
 * `trace` is given, the applied moves are appended to it (a reproducer).
 * Insertions are suppressed once the word grows past a soft cap so that long
 * rewrite runs stay desk-sized.
 */
template <typename WordT>
WordT random_equivalent(const WordT& w, int steps, std::uint64_t seed,
                        std::vector<Move>* trace = nullptr) {
  std::mt19937_64 rng(seed);
  WordT cur = w;
  const std::size_t cap = std::max<std::size_t>(w.letters.size() + 8, 24);
  for (int k = 0; k < steps; ++k) {
    bool allow_insert = cur.letters.size() + 2 <= cap;
    auto moves = enumerate_moves(cur, allow_insert);
    if (moves.empty()) break;  // empty word with inserts disabled cannot happen
    const Move& m = moves[static_cast<std::size_t>(rng() % moves.size())];
    cur = apply_relation(cur, m);
    if (trace) trace->push_back(m);
  }
  return cur;
}

}  // namespace vsl

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bruhat/cartan.hpp"
#include "bruhat/error.hpp"
#include "bruhat/matrix.hpp"

namespace bruhat {

/// Element of W acting on the root lattice in the simple-root basis.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(Matrix<int> action) : action_(std::move(action)) {}

  static WeylElement identity(int rank) { return WeylElement(Matrix<int>::identity(rank)); }

  const Matrix<int>& action() const { return action_; }
  int rank() const { return static_cast<int>(action_.rows()); }
  bool is_identity() const { return action_.is_identity(); }

  Root apply(const Root& beta) const { return action_ * std::span<const int>(beta); }

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    return WeylElement(a.action_ * b.action_);
  }
  bool operator==(const WeylElement& o) const { return action_ == o.action_; }

 private:
  Matrix<int> action_;
};

/// s_i(alpha_j) = alpha_j - a_ij alpha_i.
inline WeylElement simple_reflection(const CartanMatrix& a, int i) {
  if (!a.valid_node(i)) throw InvalidInput("node " + std::to_string(i) + " out of range");
  Matrix<int> s = Matrix<int>::identity(a.rank());
  for (int j = 1; j <= a.rank(); ++j) s(i - 1, j - 1) -= a(i, j);
  return WeylElement(std::move(s));
}

/// A word in the alphabet of nodes, or of signed nodes for double words.
using Word = std::vector<int>;

inline std::string format_word(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
  return s;
}

/// Weyl group of a finite-type Cartan matrix, with the root data needed for
/// lengths and descents.
class WeylGroup {
 public:
  explicit WeylGroup(CartanMatrix a) : a_(std::move(a)), roots_(positive_roots(a_)) {
    for (int i = 1; i <= a_.rank(); ++i) reflections_.push_back(simple_reflection(a_, i));
  }

  const CartanMatrix& cartan() const { return a_; }
  const RootSystem& roots() const { return roots_; }
  int rank() const { return a_.rank(); }

  WeylElement identity() const { return WeylElement::identity(rank()); }
  const WeylElement& reflection(int i) const {
    check_node(i);
    return reflections_[i - 1];
  }

  /// s_{i_1} ... s_{i_m}; letters may carry signs, only |i| is used.
  WeylElement element(const Word& word) const {
    WeylElement w = identity();
    for (int letter : word) w = w * reflection(std::abs(letter));
    return w;
  }

  /// Number of positive roots sent to negative roots.
  int length(const WeylElement& w) const {
    int n = 0;
    for (const Root& beta : roots_.positive_roots)
      if (is_negative(w.apply(beta))) ++n;
    return n;
  }

  /// l(w s_i) < l(w), i.e. w(alpha_i) < 0.
  bool right_descent(const WeylElement& w, int i) const {
    check_node(i);
    bool any = false;
    for (int r = 0; r < rank(); ++r) {
      int c = w.action()(r, i - 1);
      if (c > 0) return false;
      any = any || c < 0;
    }
    return any;
  }

  /// l(s_i w) < l(w), i.e. w^{-1}(alpha_i) < 0, i.e. some positive root maps to -alpha_i.
  bool left_descent(const WeylElement& w, int i) const {
    check_node(i);
    Root target(rank(), 0);
    target[i - 1] = -1;
    for (const Root& beta : roots_.positive_roots)
      if (w.apply(beta) == target) return true;
    return false;
  }

  bool is_reduced(const Word& word) const {
    return length(element(word)) == static_cast<int>(word.size());
  }

  /// Greedy right multiplication by any length-increasing s_i, nodes tried in
  /// ascending order.
  WeylElement longest_element() const {
    WeylElement w = identity();
    for (bool grew = true; grew;) {
      grew = false;
      for (int i = 1; i <= rank(); ++i)
        if (!right_descent(w, i)) {
          w = w * reflection(i);
          grew = true;
          break;
        }
    }
    return w;
  }

  WeylElement inverse(const WeylElement& w) const {
    Word word = reduced_word(w);
    std::reverse(word.begin(), word.end());
    return element(word);
  }

  /// Lexicographically least reduced word (smallest left descent first).
  Word reduced_word(WeylElement w) const {
    Word out;
    while (!w.is_identity()) {
      int i = 1;
      while (!left_descent(w, i)) ++i;
      out.push_back(i);
      w = reflection(i) * w;
    }
    return out;
  }

  /// All reduced words of w in lexicographic order.
  std::vector<Word> reduced_words(const WeylElement& w, int max_length = 16) const {
    const int len = length(w);
    if (len > max_length)
      throw GuardExceeded("reduced-word enumeration guard: length " + std::to_string(len) +
                          " exceeds " + std::to_string(max_length));
    std::vector<Word> out;
    Word prefix;
    collect_words(w, len, prefix, out);
    return out;
  }

  /// Random reduced word: each step strips a uniformly chosen left descent.
  template <class Rng>
  Word random_reduced_word(WeylElement w, Rng& rng) const {
    Word out;
    std::vector<int> descents;
    while (!w.is_identity()) {
      descents.clear();
      for (int i = 1; i <= rank(); ++i)
        if (left_descent(w, i)) descents.push_back(i);
      std::uniform_int_distribution<std::size_t> pick(0, descents.size() - 1);
      int i = descents[pick(rng)];
      out.push_back(i);
      w = reflection(i) * w;
    }
    return out;
  }

  /// Action on a weight given in fundamental-weight coordinates:
  /// (s_i lambda)_j = lambda_j - lambda_i a_ji.
  std::vector<int> act_on_weight(const WeylElement& w, std::vector<int> lambda) const {
    Word word = reduced_word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) reflect_weight(*it, lambda);
    return lambda;
  }

  void reflect_weight(int i, std::vector<int>& lambda) const {
    const int li = lambda[i - 1];
    if (li == 0) return;
    for (int j = 1; j <= rank(); ++j) lambda[j - 1] -= li * a_(j, i);
  }

 private:
  static bool is_negative(const Root& r) {
    bool any = false;
    for (int c : r) {
      if (c > 0) return false;
      any = any || c < 0;
    }
    return any;
  }

  void check_node(int i) const {
    if (!a_.valid_node(i)) throw InvalidInput("node " + std::to_string(i) + " out of range");
  }

  void collect_words(const WeylElement& w, int len, Word& prefix, std::vector<Word>& out) const {
    if (len == 0) {
      out.push_back(prefix);
      return;
    }
    for (int i = 1; i <= rank(); ++i) {
      if (!left_descent(w, i)) continue;
      prefix.push_back(i);
      collect_words(reflection(i) * w, len - 1, prefix, out);
      prefix.pop_back();
    }
  }

  CartanMatrix a_;
  RootSystem roots_;
  std::vector<WeylElement> reflections_;
};

/// Free-function spellings of the WeylGroup queries.
inline WeylElement word_to_element(const WeylGroup& w, const Word& word) { return w.element(word); }
inline int length(const WeylGroup& w, const WeylElement& x) { return w.length(x); }
inline bool is_reduced(const WeylGroup& w, const Word& word) { return w.is_reduced(word); }
inline WeylElement longest_element(const WeylGroup& w) { return w.longest_element(); }
inline std::vector<Word> enumerate_reduced_words(const WeylGroup& w, const WeylElement& x,
                                                 int max_length = 16) {
  return w.reduced_words(x, max_length);
}

/// Word (i_1, ..., i_m) in the alphabet -Pi u Pi. Positions are 1-based.
class DoubleWord {
 public:
  DoubleWord() = default;
  explicit DoubleWord(Word letters) : letters_(std::move(letters)) {
    for (int l : letters_)
      if (l == 0) throw InvalidInput("double word letters must be nonzero");
  }

  int size() const { return static_cast<int>(letters_.size()); }
  const Word& letters() const { return letters_; }

  int letter(int k) const { return letters_.at(k - 1); }
  int node(int k) const { return std::abs(letter(k)); }
  /// epsilon(i_k)
  int sign(int k) const { return letter(k) > 0 ? 1 : -1; }

  /// Largest l < k with |i_l| = |i_k|, else 0.
  int l_minus(int k) const {
    for (int l = k - 1; l >= 1; --l)
      if (node(l) == node(k)) return l;
    return 0;
  }

  /// Smallest l > k with |i_l| = |i_k|, else m + 1.
  int k_plus(int k) const {
    for (int l = k + 1; l <= size(); ++l)
      if (node(l) == node(k)) return l;
    return size() + 1;
  }

  bool bounded(int k) const { return l_minus(k) > 0; }

  std::vector<int> bounded_indices() const {
    std::vector<int> out;
    for (int k = 1; k <= size(); ++k)
      if (bounded(k)) out.push_back(k);
    return out;
  }

  /// Unsigned subword of the letters with the given sign.
  Word subword(int sign_wanted) const {
    Word out;
    for (int l : letters_)
      if ((l > 0) == (sign_wanted > 0)) out.push_back(std::abs(l));
    return out;
  }

  std::string str() const { return format_word(letters_); }

  bool operator==(const DoubleWord& o) const { return letters_ == o.letters_; }
  bool operator<(const DoubleWord& o) const { return letters_ < o.letters_; }

 private:
  Word letters_;
};

/// Parses "-2,1,-3" or, for rank-2 types, "j,i,-j". Letters i and j mean
/// nodes 1 and 2.
inline DoubleWord parse_word(std::string_view text, int rank) {
  Word out;
  std::string token;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(),
                               [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token.empty()) throw InvalidInput("empty letter in word '" + std::string(text) + "'");
    int sign = 1;
    std::string body = token;
    if (body[0] == '-' || body[0] == '+') {
      sign = body[0] == '-' ? -1 : 1;
      body = body.substr(1);
    }
    int node = 0;
    if (body == "i" || body == "j") {
      if (rank != 2) throw InvalidInput("letters i/j are only available for rank-2 types");
      node = body == "i" ? 1 : 2;
    } else {
      if (body.empty() || !std::all_of(body.begin(), body.end(),
                                       [](unsigned char c) { return std::isdigit(c); }))
        throw InvalidInput("bad letter '" + token + "'");
      node = std::stoi(body);
    }
    if (node < 1 || node > rank)
      throw InvalidInput("letter '" + token + "' outside nodes 1.." + std::to_string(rank));
    out.push_back(sign * node);
  }
  if (out.empty() && !text.empty()) throw InvalidInput("empty word");
  return DoubleWord(std::move(out));
}

struct DoublePair {
  WeylElement u;
  WeylElement v;
};

/// Checks that both sign-subwords are reduced and returns (u, v).
inline DoublePair validate_double_reduced(const WeylGroup& w, const DoubleWord& d) {
  for (int k = 1; k <= d.size(); ++k)
    if (!w.cartan().valid_node(d.node(k)))
      throw InvalidInput("letter " + std::to_string(d.letter(k)) + " outside the Dynkin graph");
  const Word neg = d.subword(-1);
  const Word pos = d.subword(+1);
  if (!w.is_reduced(neg))
    throw InvalidInput("negative subword (" + format_word(neg) + ") is not reduced");
  if (!w.is_reduced(pos))
    throw InvalidInput("positive subword (" + format_word(pos) + ") is not reduced");
  return {w.element(neg), w.element(pos)};
}

inline int l_minus(const DoubleWord& d, int l) { return d.l_minus(l); }
inline int k_plus(const DoubleWord& d, int k) { return d.k_plus(k); }
inline std::vector<int> bounded_indices(const DoubleWord& d) { return d.bounded_indices(); }

/// Unsigned words whose products are u_{>=k} (negative letters, l = m..k
/// descending) and v_{<k} (positive letters, l = 1..k-1 ascending).
inline std::pair<Word, Word> prefix_suffix_words(const DoubleWord& d, int k) {
  if (k < 1 || k > d.size() + 1) throw InvalidInput("prefix/suffix index out of range");
  Word u_ge, v_lt;
  for (int l = d.size(); l >= k; --l)
    if (d.sign(l) < 0) u_ge.push_back(d.node(l));
  for (int l = 1; l < k; ++l)
    if (d.sign(l) > 0) v_lt.push_back(d.node(l));
  return {u_ge, v_lt};
}

inline DoublePair prefix_suffix(const WeylGroup& w, const DoubleWord& d, int k) {
  auto [u_ge, v_lt] = prefix_suffix_words(d, k);
  return {w.element(u_ge), w.element(v_lt)};
}

/// Fixed shuffle for (u, v): the lexicographically least reduced word of u
/// with negated letters, followed by that of v.
inline DoubleWord default_double_word(const WeylGroup& w, const WeylElement& u,
                                      const WeylElement& v) {
  Word letters;
  for (int i : w.reduced_word(u)) letters.push_back(-i);
  for (int i : w.reduced_word(v)) letters.push_back(i);
  return DoubleWord(std::move(letters));
}

/// Every element of R(u, v): all shuffles of every reduced word of u
/// (negated) with every reduced word of v, sorted.
inline std::vector<DoubleWord> double_reduced_words(const WeylGroup& w, const WeylElement& u,
                                                    const WeylElement& v, std::size_t limit,
                                                    int max_length = 16) {
  const auto us = w.reduced_words(u, max_length);
  const auto vs = w.reduced_words(v, max_length);
  std::vector<DoubleWord> out;
  Word buf;
  for (const Word& a : us)
    for (const Word& b : vs) {
      // Enumerate interleavings by recursion on (position in a, position in b).
      auto rec = [&](auto&& self, std::size_t ia, std::size_t ib) -> void {
        if (ia == a.size() && ib == b.size()) {
          if (out.size() >= limit)
            throw GuardExceeded("R(u,v) has more than " + std::to_string(limit) + " words");
          out.emplace_back(buf);
          return;
        }
        if (ia < a.size()) {
          buf.push_back(-a[ia]);
          self(self, ia + 1, ib);
          buf.pop_back();
        }
        if (ib < b.size()) {
          buf.push_back(b[ib]);
          self(self, ia, ib + 1);
          buf.pop_back();
        }
      };
      rec(rec, 0, 0);
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// A random element of R(u, v): random reduced words of u and v, randomly
/// interleaved.
template <class Rng>
DoubleWord random_double_word(const WeylGroup& w, const WeylElement& u, const WeylElement& v,
                              Rng& rng) {
  Word a = w.random_reduced_word(u, rng);
  Word b = w.random_reduced_word(v, rng);
  Word slots(a.size() + b.size(), 0);
  std::fill(slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(a.size()), -1);
  std::fill(slots.begin() + static_cast<std::ptrdiff_t>(a.size()), slots.end(), 1);
  std::shuffle(slots.begin(), slots.end(), rng);
  Word letters;
  std::size_t ia = 0, ib = 0;
  for (int s : slots) letters.push_back(s < 0 ? -a[ia++] : b[ib++]);
  return DoubleWord(std::move(letters));
}

/// Parses a (u, v) selector element: "e", "w0", or a word like "s1s2s1" /
/// "1.2.1". The word need not be reduced; the element is what matters.
inline WeylElement parse_element(const WeylGroup& w, std::string_view text) {
  std::string t(text);
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }),
          t.end());
  if (t == "e") return w.identity();
  if (t == "w0") return w.longest_element();
  Word word;
  std::string num;
  auto flush = [&] {
    if (!num.empty()) {
      word.push_back(std::stoi(num));
      num.clear();
    }
  };
  for (char c : t) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      num += c;
    } else if (c == 's' || c == '.') {
      flush();
    } else {
      throw InvalidInput("bad Weyl element '" + std::string(text) + "'");
    }
  }
  flush();
  if (word.empty()) throw InvalidInput("bad Weyl element '" + std::string(text) + "'");
  for (int i : word)
    if (!w.cartan().valid_node(i)) throw InvalidInput("node out of range in '" + t + "'");
  return w.element(word);
}

/// "u,v" selector, e.g. "e,w0" or "s1s2,w0".
inline DoublePair parse_uv(const WeylGroup& w, std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos)
    throw InvalidInput("--uv expects two elements separated by one comma, e.g. e,w0");
  return {parse_element(w, text.substr(0, comma)), parse_element(w, text.substr(comma + 1))};
}

}  // namespace bruhat

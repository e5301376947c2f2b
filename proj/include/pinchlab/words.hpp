#ifndef PINCHLAB_WORDS_HPP
#define PINCHLAB_WORDS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pinchlab/errors.hpp"

namespace pinchlab {

// Signed generator index: +g is the g-th generator, -g its inverse
// (g = 1, 2, ...).  Rendered as a/A, b/B, c/C.
using Letter = std::int8_t;

inline Letter letter_inverse(Letter v) { return static_cast<Letter>(-v); }

// Collation order a < A < b < B < ...: positive letter sorts before its
// inverse, lower generator index first.  Canonical forms and all sorted
// outputs use this order.
inline int letter_rank(Letter v) {
    const int g = v > 0 ? v : -v;
    return 2 * (g - 1) + (v < 0 ? 1 : 0);
}

// Reduced word over free-group generators; adjacent inverse pairs are
// cancelled on construction and on every push.
class Word {
  public:
    Word() = default;
    explicit Word(std::span<const Letter> letters);

    static Word parse(const std::string& text);  // "abA" etc., throws DomainError

    void push(Letter v);

    bool empty() const { return letters_.size() == 0; }
    std::size_t size() const { return letters_.size(); }
    Letter front() const { return letters_.front(); }
    Letter back() const { return letters_.back(); }
    std::span<const Letter> letters() const { return letters_; }

    Word inverse() const;
    Word operator*(const Word& rhs) const;  // concatenate, then reduce
    bool operator==(const Word& rhs) const { return letters_ == rhs.letters_; }
    bool operator<(const Word& rhs) const;  // length, then collation order

    std::string str() const;

  private:
    std::vector<Letter> letters_;
};

// Cyclic reduction: strips matching prefix/suffix inverse pairs.  The
// conjugator u (word == u * core * u^-1) is reported when asked for.
Word cyclic_reduce(const Word& w, Word* conjugator = nullptr);

// Lexicographically least word among all cyclic rotations of w and of
// w^-1; the canonical label of the unoriented conjugacy class.
// Expects w cyclically reduced.
Word canonical_class_word(const Word& w);

// Least rotation period of the cyclic word; w is a proper power iff the
// period is a strict divisor of its length.
std::size_t cyclic_period(const Word& w);
bool is_primitive_cyclic(const Word& w);

// Primitive root r and exponent k >= 1 with w = r^k as cyclic words.
Word primitive_root(const Word& w, int& power_out);

// Depth-first enumeration of all non-empty reduced words of length up to
// max_len over the given rank.  Letters are visited in collation order, so
// the visit order is deterministic.  The callback receives the current
// word; returning false prunes the subtree below it.
void for_each_reduced_word(int rank, int max_len,
                           const std::function<bool(const Word&)>& visit);

std::vector<Word> all_reduced_words(int rank, int max_len);

// Reduced words whose first letter is not +-excluded_gen, preceded by the
// identity: coset representatives of <g_excluded> \ F_rank.  Sorted by
// length then collation order.
std::vector<Word> coset_reps_excluding(int rank, int excluded_gen, int max_word_len);

}  // namespace pinchlab

#endif

#include "pinchlab/words.hpp"

#include <algorithm>

namespace pinchlab {

Word::Word(std::span<const Letter> letters) {
    letters_.reserve(letters.size());
    for (Letter v : letters) push(v);
}

Word Word::parse(const std::string& text) {
    Word w;
    for (char ch : text) {
        Letter v;
        if (ch >= 'a' && ch <= 'z')
            v = static_cast<Letter>(ch - 'a' + 1);
        else if (ch >= 'A' && ch <= 'Z')
            v = static_cast<Letter>(-(ch - 'A' + 1));
        else
            throw DomainError(std::string("Word::parse: bad letter '") + ch + "'");
        w.push(v);
    }
    return w;
}

void Word::push(Letter v) {
    if (v == 0) throw DomainError("Word::push: zero letter");
    if (!letters_.empty() && letters_.back() == letter_inverse(v))
        letters_.pop_back();
    else
        letters_.push_back(v);
}

Word Word::inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back(letter_inverse(*it));
    return w;
}

Word Word::operator*(const Word& rhs) const {
    Word w = *this;
    for (Letter v : rhs.letters_) w.push(v);
    return w;
}

bool Word::operator<(const Word& rhs) const {
    if (letters_.size() != rhs.letters_.size()) return letters_.size() < rhs.letters_.size();
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        const int lr = letter_rank(letters_[i]), rr = letter_rank(rhs.letters_[i]);
        if (lr != rr) return lr < rr;
    }
    return false;
}

std::string Word::str() const {
    if (letters_.empty()) return "e";
    std::string s;
    s.reserve(letters_.size());
    for (Letter v : letters_)
        s.push_back(v > 0 ? static_cast<char>('a' + v - 1) : static_cast<char>('A' - v - 1));
    return s;
}

Word cyclic_reduce(const Word& w, Word* conjugator) {
    std::span<const Letter> v = w.letters();
    std::size_t lo = 0, hi = v.size();
    while (hi - lo >= 2 && v[lo] == letter_inverse(v[hi - 1])) {
        ++lo;
        --hi;
    }
    if (conjugator) {
        Word u;
        for (std::size_t i = 0; i < lo; ++i) u.push(v[i]);
        *conjugator = u;
    }
    return Word(v.subspan(lo, hi - lo));
}

namespace {

// rotation(i) of the cyclic word compared against rotation(j) of possibly
// another buffer, in collation order.
int compare_rotation(std::span<const Letter> a, std::size_t i, std::span<const Letter> b,
                     std::size_t j) {
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        const int ra = letter_rank(a[(i + k) % n]);
        const int rb = letter_rank(b[(j + k) % n]);
        if (ra != rb) return ra < rb ? -1 : 1;
    }
    return 0;
}

}  // namespace

Word canonical_class_word(const Word& w) {
    if (w.empty()) return w;
    const std::span<const Letter> v = w.letters();
    const Word inv = w.inverse();
    const std::span<const Letter> iv = inv.letters();
    const std::size_t n = v.size();

    // Best rotation within each buffer, then across buffers.
    std::span<const Letter> best_buf = v;
    std::size_t best_i = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (compare_rotation(v, i, best_buf, best_i) < 0) best_i = i;
    for (std::size_t i = 0; i < n; ++i)
        if (compare_rotation(iv, i, best_buf, best_i) < 0) {
            best_buf = iv;
            best_i = i;
        }
    std::vector<Letter> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = best_buf[(best_i + k) % n];
    return Word(out);
}

std::size_t cyclic_period(const Word& w) {
    const std::span<const Letter> v = w.letters();
    const std::size_t n = v.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k) ok = v[k] == v[(k + p) % n];
        if (ok) return p;
    }
    return n;
}

bool is_primitive_cyclic(const Word& w) { return !w.empty() && cyclic_period(w) == w.size(); }

Word primitive_root(const Word& w, int& power_out) {
    const std::size_t p = cyclic_period(w);
    power_out = w.empty() ? 1 : static_cast<int>(w.size() / p);
    return Word(w.letters().subspan(0, p));
}

namespace {

void reduced_word_dfs(int rank, int max_len, Word& w,
                      const std::function<bool(const Word&)>& visit) {
    if (static_cast<int>(w.size()) >= max_len) return;
    for (int r = 0; r < 2 * rank; ++r) {
        // collation order: a, A, b, B, ...
        const int g = r / 2 + 1;
        const Letter v = static_cast<Letter>(r % 2 == 0 ? g : -g);
        if (!w.empty() && w.back() == letter_inverse(v)) continue;
        w.push(v);
        if (visit(w)) reduced_word_dfs(rank, max_len, w, visit);
        w.push(letter_inverse(v));  // pop via cancellation
    }
}

}  // namespace

void for_each_reduced_word(int rank, int max_len,
                           const std::function<bool(const Word&)>& visit) {
    if (rank < 1) throw DomainError("for_each_reduced_word: rank must be >= 1");
    Word w;
    reduced_word_dfs(rank, max_len, w, visit);
}

std::vector<Word> all_reduced_words(int rank, int max_len) {
    std::vector<Word> out;
    for_each_reduced_word(rank, max_len, [&](const Word& w) {
        out.push_back(w);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> coset_reps_excluding(int rank, int excluded_gen, int max_word_len) {
    if (excluded_gen < 1 || excluded_gen > rank)
        throw DomainError("coset_reps_excluding: bad generator index");
    std::vector<Word> out;
    out.emplace_back();  // identity coset
    for_each_reduced_word(rank, max_word_len, [&](const Word& w) {
        const int g = w.front() > 0 ? w.front() : -w.front();
        if (g == excluded_gen) return false;  // whole subtree shares the first letter
        out.push_back(w);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pinchlab

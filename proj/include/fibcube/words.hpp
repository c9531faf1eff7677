#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace fibcube {

// Fixed-length binary word over {0,1}. Positions are 1-based with position 1
// leftmost; the empty word (length 0) is valid and serializes to "".
class Word {
public:
    Word() = default;
    explicit Word(std::string bits);
    static Word zeros(int n);
    static Word unit(int n, int i);  // all zeros except a 1 at position i

    int length() const { return static_cast<int>(bits_.size()); }
    bool bit(int i) const;  // 1-based
    const std::string& str() const { return bits_; }

    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::string bits_;
};

// number of 1s
int weight(const Word& w);

// copy of w with bit i inverted; flip(flip(w, i), i) == w
Word flip(const Word& w, int i);

// 1s are pairwise at least p positions apart, and every maximal chain of 1s
// with consecutive gaps exactly p has at most r members. A trailing chain cut
// off by the end of the word needs no closing zeros.
bool is_o_word(const Word& w, int p, int r);

// maximal runs of 1s have length at most r, and distinct runs are separated
// by at least p zeros.
bool is_i_word(const Word& w, int p, int r);

enum class Family { O, I };

char family_letter(Family f);

struct CubeParams {
    Family family = Family::O;
    int p = 1;
    int r = 1;
    int n = 0;
};

// throws std::invalid_argument unless p >= 1, r >= 1, n >= 0
void validate(const CubeParams& params);

// all valid words of length n in ascending lexicographic order (0 < 1);
// exactly [empty word] for n = 0
std::vector<Word> enumerate_words(const CubeParams& params);

// O-family vertex set built from the prefix recurrence: each word is a
// block prefix (10^{p-1})^k 0, k = 0..r, followed by a shorter valid word,
// or the length-n cut of the block pattern when the prefix no longer fits.
// Agrees with enumerate_words({O, p, r, n}) on every input.
std::vector<Word> enumerate_recursive(int p, int r, int n);

// |enumerate_words(params)| without materializing the words
std::uint64_t count_words(const CubeParams& params);

}  // namespace fibcube

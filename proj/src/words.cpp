#include "fibcube/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace fibcube {

Word::Word(std::string bits) : bits_(std::move(bits)) {
    for (char c : bits_)
        if (c != '0' && c != '1')
            throw std::invalid_argument("word may contain only 0 and 1");
}

Word Word::zeros(int n) {
    if (n < 0) throw std::invalid_argument("negative word length");
    return Word(std::string(static_cast<size_t>(n), '0'));
}

Word Word::unit(int n, int i) { return flip(zeros(n), i); }

bool Word::bit(int i) const {
    if (i < 1 || i > length()) throw std::out_of_range("index out of bounds");
    return bits_[static_cast<size_t>(i - 1)] == '1';
}

int weight(const Word& w) {
    return static_cast<int>(std::count(w.str().begin(), w.str().end(), '1'));
}

Word flip(const Word& w, int i) {
    if (i < 1 || i > w.length()) throw std::out_of_range("index out of bounds");
    std::string s = w.str();
    s[i - 1] = s[i - 1] == '0' ? '1' : '0';
    return Word(std::move(s));
}

namespace {

// Incremental scanners consuming one bit at a time. A prefix rejected by a
// scanner has no valid extension, and a prefix it accepts is itself a valid
// word (appending zeros never violates either family condition), so the
// scanners drive both whole-word tests and pruned generation.

struct OScan {
    int p, r;
    bool any = false;  // a 1 has been seen
    int since = 0;     // zeros consumed after the last 1
    int chain = 0;     // 1s in the current exact-spacing chain
    bool consume(bool one) {
        if (!one) {
            if (any) ++since;
            return true;
        }
        if (any) {
            const int gap = since + 1;
            if (gap < p) return false;
            chain = gap == p ? chain + 1 : 1;
        } else {
            chain = 1;
        }
        if (chain > r) return false;
        any = true;
        since = 0;
        return true;
    }
};

struct IScan {
    int p, r;
    int run = 0, gap = 0;
    bool seen = false;
    bool consume(bool one) {
        if (one) {
            if (run == 0 && seen && gap < p) return false;
            if (++run > r) return false;
            seen = true;
            gap = 0;
        } else {
            run = 0;
            ++gap;
        }
        return true;
    }
};

template <class Scan>
bool scan_word(const std::string& s, Scan scan) {
    for (char c : s)
        if (!scan.consume(c == '1')) return false;
    return true;
}

template <class Scan>
void generate(std::string& buf, int pos, int n, const Scan& scan,
              std::vector<std::string>& out) {
    if (pos > n) {
        out.push_back(buf);
        return;
    }
    for (int bit = 0; bit <= 1; ++bit) {  // 0 first keeps lexicographic order
        Scan next = scan;
        if (!next.consume(bit == 1)) continue;
        buf[static_cast<size_t>(pos - 1)] = bit ? '1' : '0';
        generate(buf, pos + 1, n, next, out);
    }
}

bool word_ok(const std::string& s, const CubeParams& c) {
    return c.family == Family::O ? scan_word(s, OScan{c.p, c.r})
                                 : scan_word(s, IScan{c.p, c.r});
}

// brute-force filter up to this length, prefix-pruned generation above
constexpr int kFilterLimit = 20;

std::vector<std::string> enumerate_strings(const CubeParams& c) {
    const int n = c.n;
    std::vector<std::string> out;
    if (n <= kFilterLimit) {
        std::string buf(static_cast<size_t>(n), '0');
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            for (int i = 0; i < n; ++i)
                buf[static_cast<size_t>(i)] = (v >> (n - 1 - i)) & 1 ? '1' : '0';
            if (word_ok(buf, c)) out.push_back(buf);
        }
    } else {
        std::string buf(static_cast<size_t>(n), '0');
        if (c.family == Family::O)
            generate(buf, 1, n, OScan{c.p, c.r}, out);
        else
            generate(buf, 1, n, IScan{c.p, c.r}, out);
    }
    return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t sum = 0;
    if (__builtin_add_overflow(a, b, &sum))
        throw std::overflow_error("word count overflow");
    return sum;
}

std::uint64_t count_o_words(int p, int r, int n) {
    // c[m] sums the block-prefix branches that still fit plus the single
    // length-m cut of the block pattern contributed once r*p >= m.
    std::vector<std::uint64_t> c(static_cast<size_t>(n) + 1, 0);
    c[0] = 1;
    for (int m = 1; m <= n; ++m) {
        std::uint64_t total =
            static_cast<std::int64_t>(r) * p >= m ? 1u : 0u;
        for (int k = 0; k <= r; ++k) {
            const std::int64_t len = static_cast<std::int64_t>(k) * p + 1;
            if (len > m) break;
            total = checked_add(total, c[static_cast<size_t>(m - len)]);
        }
        c[static_cast<size_t>(m)] = total;
    }
    return c[static_cast<size_t>(n)];
}

std::uint64_t count_i_words(int p, int r, int n) {
    // states: 0 = no run yet; 1..r = inside a run of that length;
    // r+g (1 <= g <= p) = g zeros after a run, capped at p
    const int states = 1 + r + p;
    const auto run = [](int j) { return j; };
    const auto gap = [r](int g) { return r + g; };
    std::vector<std::uint64_t> cur(static_cast<size_t>(states), 0), next;
    cur[0] = 1;
    for (int step = 0; step < n; ++step) {
        next.assign(static_cast<size_t>(states), 0);
        const auto bump = [&next](int state, std::uint64_t by) {
            next[static_cast<size_t>(state)] =
                checked_add(next[static_cast<size_t>(state)], by);
        };
        bump(0, cur[0]);
        bump(run(1), cur[0]);
        for (int j = 1; j <= r; ++j) {
            const std::uint64_t from = cur[static_cast<size_t>(run(j))];
            bump(gap(1), from);
            if (j + 1 <= r) bump(run(j + 1), from);
        }
        for (int g = 1; g <= p; ++g) {
            const std::uint64_t from = cur[static_cast<size_t>(gap(g))];
            bump(gap(std::min(g + 1, p)), from);
            if (g >= p) bump(run(1), from);
        }
        cur.swap(next);
    }
    std::uint64_t total = 0;
    for (std::uint64_t v : cur) total = checked_add(total, v);
    return total;
}

}  // namespace

bool is_o_word(const Word& w, int p, int r) {
    if (p < 1 || r < 1) throw std::invalid_argument("p and r must be at least 1");
    return scan_word(w.str(), OScan{p, r});
}

bool is_i_word(const Word& w, int p, int r) {
    if (p < 1 || r < 1) throw std::invalid_argument("p and r must be at least 1");
    return scan_word(w.str(), IScan{p, r});
}

char family_letter(Family f) { return f == Family::O ? 'O' : 'I'; }

void validate(const CubeParams& params) {
    if (params.p < 1 || params.r < 1)
        throw std::invalid_argument("p and r must be at least 1");
    if (params.n < 0) throw std::invalid_argument("n must be nonnegative");
}

std::vector<Word> enumerate_words(const CubeParams& params) {
    validate(params);
    std::vector<Word> out;
    for (auto& s : enumerate_strings(params)) out.push_back(Word(std::move(s)));
    return out;
}

std::vector<Word> enumerate_recursive(int p, int r, int n) {
    validate(CubeParams{Family::O, p, r, n});
    const std::string block = "1" + std::string(static_cast<size_t>(p - 1), '0');
    // level[m] holds the valid words of length m, built bottom-up
    std::vector<std::vector<std::string>> level(static_cast<size_t>(n) + 1);
    level[0] = {""};
    for (int m = 1; m <= n; ++m) {
        std::vector<std::string> words;
        std::string prefix;  // (10^{p-1})^k with the separating 0 appended below
        for (int k = 0; k <= r; ++k) {
            const std::int64_t len = static_cast<std::int64_t>(k) * p + 1;
            if (len <= m) {
                const auto& tails = level[static_cast<size_t>(m - len)];
                for (const auto& tail : tails) words.push_back(prefix + "0" + tail);
            } else if (k >= 1) {
                // prefix no longer fits: keep the length-m cut of the block
                // pattern itself; identical for every larger k
                words.push_back(prefix.substr(0, static_cast<size_t>(m)));
                break;
            }
            prefix += block;
        }
        std::sort(words.begin(), words.end());
        words.erase(std::unique(words.begin(), words.end()), words.end());
        level[static_cast<size_t>(m)] = std::move(words);
    }
    std::vector<Word> out;
    for (auto& s : level[static_cast<size_t>(n)]) out.push_back(Word(std::move(s)));
    return out;
}

std::uint64_t count_words(const CubeParams& params) {
    validate(params);
    return params.family == Family::O ? count_o_words(params.p, params.r, params.n)
                                      : count_i_words(params.p, params.r, params.n);
}

}  // namespace fibcube

#pragma once

#include <stdexcept>
#include <string>

namespace horomax {

// Reduced words over {a, A, b, B}; the free group F2 with A = a^-1, B = b^-1.

inline bool is_group_letter(char c) {
    return c == 'a' || c == 'A' || c == 'b' || c == 'B';
}

inline char inverse_letter(char c) {
    switch (c) {
        case 'a': return 'A';
        case 'A': return 'a';
        case 'b': return 'B';
        case 'B': return 'b';
    }
    throw std::invalid_argument(std::string("bad group letter '") + c + "'");
}

inline std::string reduce_word(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (!is_group_letter(c)) throw std::invalid_argument(std::string("bad group letter '") + c + "'");
        if (!out.empty() && out.back() == inverse_letter(c))
            out.pop_back();
        else
            out.push_back(c);
    }
    return out;
}

class Word {
public:
    Word() = default;
    explicit Word(const std::string& s) : letters_(reduce_word(s)) {}

    static Word identity() { return Word(); }

    const std::string& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    char at(std::size_t i) const { return letters_.at(i); }
    char back() const { return letters_.back(); }

    Word inverse() const {
        std::string inv;
        inv.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            inv.push_back(inverse_letter(*it));
        Word w;
        w.letters_ = std::move(inv);
        return w;
    }

    friend Word operator*(const Word& lhs, const Word& rhs) {
        return Word(lhs.letters_ + rhs.letters_);
    }

    Word prefix(std::size_t n) const {
        Word w;
        w.letters_ = letters_.substr(0, n);
        return w;
    }

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    bool operator!=(const Word& o) const { return letters_ != o.letters_; }
    bool operator<(const Word& o) const { return letters_ < o.letters_; }

private:
    std::string letters_;  // always reduced
};

// First index where the two strings disagree; min(size) if one is a prefix
// of the other.
inline std::size_t first_disagreement(const std::string& u, const std::string& v) {
    std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i)
        if (u[i] != v[i]) return i;
    return n;
}

}  // namespace horomax

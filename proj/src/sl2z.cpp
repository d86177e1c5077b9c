#include "origami/sl2z.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace origami {
namespace sl2z {

Letter letter_inverse(Letter l) {
    switch (l) {
        case Letter::T: return Letter::Tinv;
        case Letter::Tinv: return Letter::T;
        case Letter::S: return Letter::Sinv;
        case Letter::Sinv: return Letter::S;
        case Letter::R: return Letter::Rinv;
        case Letter::Rinv: return Letter::R;
        case Letter::U: return Letter::Uinv;
        case Letter::Uinv: return Letter::U;
    }
    throw Error("letter_inverse: bad letter");
}

Mat2 letter_matrix(Letter l) {
    auto inv = [](Mat2 m) { return Mat2{m.d, -m.b, -m.c, m.a}; };
    switch (l) {
        case Letter::T: return mat_T();
        case Letter::Tinv: return inv(mat_T());
        case Letter::S: return mat_S();
        case Letter::Sinv: return inv(mat_S());
        case Letter::R: return mat_R();
        case Letter::Rinv: return inv(mat_R());
        case Letter::U: return mat_U();
        case Letter::Uinv: return inv(mat_U());
    }
    throw Error("letter_matrix: bad letter");
}

std::string letter_name(Letter l) {
    switch (l) {
        case Letter::T: return "T";
        case Letter::Tinv: return "T^-1";
        case Letter::S: return "S";
        case Letter::Sinv: return "S^-1";
        case Letter::R: return "R";
        case Letter::Rinv: return "R^-1";
        case Letter::U: return "U";
        case Letter::Uinv: return "U^-1";
    }
    return "?";
}

Mat2 SL2Word::matrix() const {
    Mat2 m = mat_identity();
    for (Letter l : letters) m = m * letter_matrix(l);
    return m;
}

SL2Word SL2Word::inverse() const {
    SL2Word w;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        w.letters.push_back(letter_inverse(*it));
    return w;
}

std::string SL2Word::to_string() const {
    if (letters.empty()) return "I";
    std::ostringstream os;
    size_t i = 0;
    while (i < letters.size()) {
        size_t j = i;
        while (j < letters.size() && letters[j] == letters[i]) ++j;
        int run = static_cast<int>(j - i);
        Letter base = letters[i];
        int exp = run;
        switch (base) {
            case Letter::Tinv: os << "T"; exp = -run; break;
            case Letter::Sinv: os << "S"; exp = -run; break;
            case Letter::Rinv: os << "R"; exp = -run; break;
            case Letter::Uinv: os << "U"; exp = -run; break;
            default: os << letter_name(base); break;
        }
        if (exp != 1) os << "^" << exp;
        i = j;
    }
    return os.str();
}

namespace {

std::vector<Letter> parse_group(const std::string& text, size_t& i);

std::vector<Letter> repeat_or_invert(std::vector<Letter> base, long exp) {
    std::vector<Letter> out;
    if (exp < 0) {
        std::reverse(base.begin(), base.end());
        for (Letter& l : base) l = letter_inverse(l);
        exp = -exp;
    }
    for (long k = 0; k < exp; ++k) out.insert(out.end(), base.begin(), base.end());
    return out;
}

long parse_exponent(const std::string& text, size_t& i) {
    if (i >= text.size() || text[i] != '^') return 1;
    ++i;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) throw ParseError("word exponent expected after '^': " + text);
    long v = std::stol(text.substr(i, j - i));
    i = j;
    return neg ? -v : v;
}

std::vector<Letter> parse_group(const std::string& text, size_t& i) {
    std::vector<Letter> out;
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (ch == ')') break;
        std::vector<Letter> unit;
        if (ch == '(') {
            ++i;
            unit = parse_group(text, i);
            if (i >= text.size() || text[i] != ')') throw ParseError("unbalanced '(': " + text);
            ++i;
        } else if (ch == 'T' || ch == 'S' || ch == 'R' || ch == 'U') {
            Letter base = ch == 'T'   ? Letter::T
                          : ch == 'S' ? Letter::S
                          : ch == 'R' ? Letter::R
                                      : Letter::U;
            unit = {base};
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + ch + "' in word: " + text);
        }
        long exp = parse_exponent(text, i);
        auto piece = repeat_or_invert(std::move(unit), exp);
        out.insert(out.end(), piece.begin(), piece.end());
    }
    return out;
}

} // namespace

SL2Word parse_word(const std::string& text) {
    size_t i = 0;
    SL2Word w{parse_group(text, i)};
    if (i != text.size()) throw ParseError("trailing characters in word: " + text);
    return w;
}

WordClass matrix_info(const Mat2& m) {
    WordClass wc;
    wc.matrix = m;
    wc.trace = m.trace();
    const bool is_id = m == mat_identity();
    const bool is_minus_id = m == Mat2{-1, 0, 0, -1};
    if (is_id) {
        wc.kind = WordKind::CentralIdentity;
        wc.order = 1;
    } else if (is_minus_id) {
        wc.kind = WordKind::CentralMinusIdentity;
        wc.order = 2;
    } else if (wc.trace == 2 || wc.trace == -2) {
        wc.kind = WordKind::Parabolic;
    } else if (wc.trace > -2 && wc.trace < 2) {
        wc.kind = WordKind::Elliptic;
        Mat2 p = m;
        int ord = 1;
        while (!(p == mat_identity())) {
            p = p * m;
            ++ord;
            if (ord > 12) throw Error("matrix_info: elliptic order exceeded 12 (not in SL2(Z)?)");
        }
        wc.order = ord;
    } else {
        wc.kind = WordKind::Hyperbolic;
    }
    return wc;
}

WordClass word_info(const SL2Word& w) { return matrix_info(w.matrix()); }

Origami apply_letter(Letter l, const Origami& x) {
    switch (l) {
        case Letter::T: return {x.h, compose(x.v, x.h.inverse())};
        case Letter::Tinv: return {x.h, compose(x.v, x.h)};
        case Letter::S: return {compose(x.h, x.v.inverse()), x.v};
        case Letter::Sinv: return {compose(x.h, x.v), x.v};
        case Letter::R:
            return apply_letter(Letter::Tinv,
                                apply_letter(Letter::S, apply_letter(Letter::Tinv, x)));
        case Letter::Rinv:
            return apply_letter(Letter::T, apply_letter(Letter::Sinv, apply_letter(Letter::T, x)));
        case Letter::U: return apply_letter(Letter::T, apply_letter(Letter::Sinv, x));
        case Letter::Uinv: return apply_letter(Letter::S, apply_letter(Letter::Tinv, x));
    }
    throw Error("apply_letter: bad letter");
}

Origami apply_word(const SL2Word& w, const Origami& x) {
    Origami y = x;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) y = apply_letter(*it, y);
    return y;
}

namespace {

bool freely_reduced(const std::vector<Letter>& ls) {
    for (size_t i = 0; i + 1 < ls.size(); ++i)
        if (ls[i + 1] == letter_inverse(ls[i])) return false;
    return true;
}

bool cyclically_reduced(const std::vector<Letter>& ls) {
    return ls.size() < 2 || ls.front() != letter_inverse(ls.back());
}

// Cyclic rotations of a cyclically reduced word and of its inverse; these are
// exactly the class members under "up to cyclic permutation and inversion".
std::vector<std::vector<Letter>> class_variants(const std::vector<Letter>& ls) {
    std::vector<std::vector<Letter>> out;
    auto add_rotations = [&](const std::vector<Letter>& w) {
        for (size_t r = 0; r < w.size(); ++r) {
            std::vector<Letter> rot;
            rot.insert(rot.end(), w.begin() + r, w.end());
            rot.insert(rot.end(), w.begin(), w.begin() + r);
            out.push_back(std::move(rot));
        }
    };
    add_rotations(ls);
    SL2Word inv = SL2Word{ls}.inverse();
    add_rotations(inv.letters);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

std::vector<ReducedWord> reduced_words(int max_len, Alphabet alphabet) {
    if (max_len < 1) throw BadParams("reduced_words: max_len must be >= 1");
    const std::vector<Letter> letters =
        alphabet == Alphabet::Parabolic
            ? std::vector<Letter>{Letter::T, Letter::Tinv, Letter::S, Letter::Sinv}
            : std::vector<Letter>{Letter::R, Letter::Rinv, Letter::U, Letter::Uinv};

    std::vector<ReducedWord> out;
    std::set<std::vector<Letter>> seen; // canonical (least) variant per class

    std::vector<Letter> word;
    std::function<void()> extend = [&]() {
        if (!word.empty()) {
            if (!freely_reduced(word)) return; // extensions stay unreduced
            // Words that are not cyclically reduced belong to the class of
            // their (shorter) cyclic reduction, which is enumerated anyway.
            if (cyclically_reduced(word)) {
                auto variants = class_variants(word);
                if (!seen.count(variants.front())) {
                    seen.insert(variants.front());
                    ReducedWord rw;
                    rw.word = SL2Word{word};
                    rw.info = word_info(rw.word);
                    for (auto& v : variants) rw.variants.push_back(SL2Word{std::move(v)});
                    out.push_back(std::move(rw));
                }
            }
        }
        if (static_cast<int>(word.size()) == max_len) return;
        for (Letter l : letters) {
            word.push_back(l);
            extend();
            word.pop_back();
        }
    };
    extend();
    return out;
}

bool class_contains_matrix(const ReducedWord& rw, const Mat2& m) {
    for (const SL2Word& v : rw.variants)
        if (v.matrix() == m) return true;
    return false;
}

SL2Word class_key(const SL2Word& w) {
    std::vector<Letter> ls = w.letters;
    for (size_t i = 0; i + 1 < ls.size(); ++i)
        if (ls[i + 1] == letter_inverse(ls[i]))
            throw BadParams("class_key: word is not freely reduced: " + w.to_string());
    while (ls.size() >= 2 && ls.front() == letter_inverse(ls.back())) {
        ls.erase(ls.begin());
        ls.pop_back();
    }
    if (ls.empty()) return SL2Word{};
    return SL2Word{class_variants(ls).front()};
}

} // namespace sl2z
} // namespace origami

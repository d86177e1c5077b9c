#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "origami/origami.hpp"

namespace origami {
namespace sl2z {

/// 2x2 integer matrix, row-major.
struct Mat2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    std::int64_t det() const { return a * d - b * c; }
    std::int64_t trace() const { return a + d; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator<(const Mat2& x, const Mat2& y) {
        return std::tie(x.a, x.b, x.c, x.d) < std::tie(y.a, y.b, y.c, y.d);
    }
};

inline Mat2 mat_identity() { return {1, 0, 0, 1}; }
inline Mat2 mat_T() { return {1, 1, 0, 1}; }
inline Mat2 mat_S() { return {1, 0, 1, 1}; }
inline Mat2 mat_R() { return {0, -1, 1, 0}; } // T^-1 S T^-1
inline Mat2 mat_U() { return {0, 1, -1, 1}; } // T S^-1

/// Generator letters. R and U are not elementary: they expand to the
/// parabolic letters for the origami action.
enum class Letter { T, Tinv, S, Sinv, R, Rinv, U, Uinv };

Letter letter_inverse(Letter l);
Mat2 letter_matrix(Letter l);
std::string letter_name(Letter l);

struct SL2Word {
    std::vector<Letter> letters; // leftmost letter acts last

    Mat2 matrix() const;
    SL2Word inverse() const;
    std::string to_string() const; // e.g. "ST^2" or "S^-1T"
    friend bool operator==(const SL2Word& a, const SL2Word& b) { return a.letters == b.letters; }
    friend bool operator<(const SL2Word& a, const SL2Word& b) { return a.letters < b.letters; }
};

/// Parses juxtaposed letters with optional ^exponents and parenthesized
/// groups, e.g. "S^2T^-1", "(TS)^-1ST". Case-sensitive.
SL2Word parse_word(const std::string& text);

enum class WordKind { CentralIdentity, CentralMinusIdentity, Elliptic, Parabolic, Hyperbolic };

struct WordClass {
    WordKind kind = WordKind::CentralIdentity;
    std::optional<int> order; // finite order when central/elliptic
    Mat2 matrix;
    std::int64_t trace = 2;
};

WordClass word_info(const SL2Word& w);
WordClass matrix_info(const Mat2& m);

/// Applies the word to an origami, leftmost letter last, with
/// T(h,v) = (h, v h^-1) and S(h,v) = (h v^-1, v).
Origami apply_word(const SL2Word& w, const Origami& x);
Origami apply_letter(Letter l, const Origami& x);

enum class Alphabet { Parabolic, Elliptic };

struct ReducedWord {
    SL2Word word; // class representative
    WordClass info;
    std::vector<SL2Word> variants; // all cyclic rotations of the word and its inverse
};

/// Freely-reduced words of length <= max_len over {T,S}^+- or {R,U}^+-,
/// deduplicated up to cyclic rotation and word inversion.
std::vector<ReducedWord> reduced_words(int max_len, Alphabet alphabet);

/// True iff some rotation of w or w^-1 has exactly this matrix.
bool class_contains_matrix(const ReducedWord& rw, const Mat2& m);

/// Canonical representative of a word's class under cyclic rotation and
/// inversion (after cyclic reduction): the lexicographically least variant.
/// Two words are in the same class iff their keys are equal.
SL2Word class_key(const SL2Word& w);

} // namespace sl2z
} // namespace origami

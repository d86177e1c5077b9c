#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "origami/errors.hpp"

namespace origami {

/// A permutation of {0, ..., n-1}. External text and JSON forms are 1-indexed;
/// the internal image table is 0-indexed.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// Cycles use 1-indexed symbols, e.g. {{2,3}} on degree 3 is the transposition (2,3).
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.images_ < b.images_;
    }

    /// Disjoint cycles on 1-indexed symbols, fixed points omitted, smallest
    /// symbol first within and across cycles.
    std::vector<std::vector<int>> cycles() const;

private:
    std::vector<int> images_;
};

/// compose(p, q) applies q first: (p*q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

/// q p q^-1.
Permutation conjugate(const Permutation& q, const Permutation& p);

enum class Parity { Even, Odd };

struct CycleData {
    std::vector<int> cycle_type; // ascending, includes fixed points, sums to n
    Parity parity = Parity::Even;
};

CycleData cycle_data(const Permutation& p);
Parity permutation_parity(const Permutation& p);

/// Group order as an exact 128-bit integer (fits every subgroup of Sym(n) for n <= 33).
using GroupOrder = unsigned __int128;
std::string group_order_to_string(GroupOrder v);

struct GroupDescription {
    std::vector<Permutation> generators;
    GroupOrder order = 1;
    bool transitive = false;
    bool primitive = false;
    /// Present iff transitive and imprimitive: a minimal nontrivial block
    /// system, as the sorted list of blocks of 1-indexed symbols.
    std::optional<std::vector<std::vector<int>>> minimal_blocks;
};

/// Exact order via a deterministic stabilizer chain with base 1,2,...,n;
/// primitivity by the minimal-block search seeded at every pair {1,k}.
GroupDescription group_describe(const std::vector<Permutation>& gens);

/// Transitivity plus the block search only — no stabilizer chain. Used by the
/// enumeration sweeps where the exact order is not needed.
bool generators_primitive(const std::vector<Permutation>& gens);

/// All sigma with sigma*a_i*sigma^-1 = b_i for both pair entries, sorted by
/// image sequence. Empty iff the pairs are not simultaneously conjugate.
std::vector<Permutation> pair_conjugators(const std::pair<Permutation, Permutation>& a,
                                          const std::pair<Permutation, Permutation>& b);

/// Text form "(2,3)(5,6)" with fixed points omitted; identity prints "()".
std::string format_cycles(const Permutation& p);
/// Parses the format_cycles form. Degree is max(symbol, min_degree).
Permutation parse_cycles(const std::string& text, int min_degree = 0);

} // namespace origami

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permposet/errors.hpp"

namespace permposet {

// Position subsets of a host permutation, one bit per position (bit i-1 is
// position i). The permutation size cap keeps every host within 32 bits.
using PosMask = std::uint32_t;

class Permutation;

// Packed one-line form (5 bits per value) plus the size; used as a hash key
// for pattern dedup and for (sigma, pi) memo tables.
struct PermKey {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::uint32_t n = 0;
    friend bool operator==(const PermKey&, const PermKey&) = default;
};

struct PermKeyHash {
    std::size_t operator()(const PermKey& k) const noexcept {
        std::uint64_t h = k.lo * 0x9e3779b97f4a7c15ULL;
        h ^= (k.hi + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
        h ^= (std::uint64_t(k.n) + 0x165667b19e3779f9ULL + (h << 6) + (h >> 2));
        return static_cast<std::size_t>(h);
    }
};

// A permutation of [n] in one-line notation. Values and positions are 1-based
// in the public API. Instances are immutable once constructed.
class Permutation {
public:
    Permutation() = default;  // empty placeholder; real permutations have n >= 1

    // Throws NotABijection if values is not a bijection of {1,...,n}, and
    // SizeCapExceeded if n exceeds the configured permutation cap.
    static Permutation from_one_line(std::span<const int> values);
    static Permutation from_one_line(std::initializer_list<int> values);
    static Permutation identity(int n);

    // Accepts comma-separated one-line notation ("4,1,6,2,7,3,8,5") and the
    // compact digit form for n <= 9 ("41627385").
    static Permutation parse(std::string_view text);

    int size() const noexcept { return static_cast<int>(vals_.size()); }
    bool empty() const noexcept { return vals_.empty(); }

    // Value at 1-based position i.
    int at(int i) const;
    int operator()(int i) const { return at(i); }

    std::vector<int> one_line() const;
    std::string to_string() const;  // compact for n <= 9, comma form otherwise
    PermKey key() const;
    static Permutation from_key(const PermKey& k);

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.vals_ == b.vals_;
    }
    // Lexicographic on the one-line form; sizes compare first so that strata
    // order deterministically.
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

    const std::vector<std::uint8_t>& raw() const noexcept { return vals_; }

private:
    explicit Permutation(std::vector<std::uint8_t> vals) : vals_(std::move(vals)) {}
    std::vector<std::uint8_t> vals_;
};

// --- symmetries -------------------------------------------------------------

enum class Symmetry { reverse, complement, reverse_complement, inverse };

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation reverse_complement(const Permutation& p);
Permutation inverse(const Permutation& p);
Permutation apply_symmetry(const Permutation& p, Symmetry kind);

// --- statistics -------------------------------------------------------------

// Number of positions i with p(i) > p(i+1).
int descent_count(const Permutation& p);

// Number of pairs i < j with p(i) = p(j) + 1.
int inverse_descent_count(const Permutation& p);

// Maximal run of consecutive positions carrying consecutive increasing
// values; every position lies in exactly one run.
struct PositionRun {
    int first = 0;
    int last = 0;  // inclusive
    int length() const { return last - first + 1; }
    friend bool operator==(const PositionRun&, const PositionRun&) = default;
};

std::vector<PositionRun> adjacencies(const Permutation& p);

// --- patterns ---------------------------------------------------------------

// Standardization of the subsequence of p at the given 1-based positions
// (relabeled to {1..k} preserving relative order). Throws EmptySet/OutOfRange.
Permutation pattern_at(const Permutation& p, std::span<const int> positions);
Permutation pattern_at(const Permutation& p, std::initializer_list<int> positions);
Permutation pattern_at(const Permutation& p, PosMask positions);

// --- t/b-word encoding of single-inverse-descent permutations ---------------

// Word over {t, b} marking top and bottom elements of a permutation with
// exactly one inverse descent. Words where every b precedes every t (in
// particular single-letter-kind words) decode to nothing.
class TBWord {
public:
    TBWord() = default;
    // Throws InvalidWord on characters outside {t, b} or an empty word.
    static TBWord from_letters(std::string_view letters);
    const std::string& letters() const noexcept { return letters_; }
    int size() const noexcept { return static_cast<int>(letters_.size()); }
    // True iff some t appears before some b, i.e. the word decodes.
    bool decodable() const noexcept;
    friend bool operator==(const TBWord&, const TBWord&) = default;

private:
    std::string letters_;
};

// Throws NotSingleInverseDescent unless ides(p) = 1.
TBWord tb_encode(const Permutation& p);

// Unique permutation with one inverse descent whose encoding is w.
// Throws InvalidWord when no such permutation exists.
Permutation tb_decode(const TBWord& w);

}  // namespace permposet

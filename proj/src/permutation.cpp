#include "permposet/permutation.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "permposet/config.hpp"

namespace permposet {

// --- construction -----------------------------------------------------------

Permutation Permutation::from_one_line(std::span<const int> values) {
    const int n = static_cast<int>(values.size());
    if (n == 0) throw NotABijection("empty value sequence");
    if (n > permutation_size_cap())
        throw SizeCapExceeded("permutation size " + std::to_string(n) +
                              " exceeds cap " + std::to_string(permutation_size_cap()));
    std::vector<std::uint8_t> vals(values.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int i = 0; i < n; ++i) {
        const int v = values[i];
        if (v < 1 || v > n)
            throw NotABijection("value " + std::to_string(v) + " out of range [1," +
                                std::to_string(n) + "]");
        if (seen[v]) throw NotABijection("duplicate value " + std::to_string(v));
        seen[v] = true;
        vals[i] = static_cast<std::uint8_t>(v);
    }
    return Permutation(std::move(vals));
}

Permutation Permutation::from_one_line(std::initializer_list<int> values) {
    return from_one_line(std::span<const int>(values.begin(), values.size()));
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw NotABijection("identity needs n >= 1");
    if (n > permutation_size_cap()) throw SizeCapExceeded("identity size exceeds cap");
    std::vector<std::uint8_t> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = static_cast<std::uint8_t>(i + 1);
    return Permutation(std::move(vals));
}

Permutation Permutation::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty permutation text");
    std::vector<int> values;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            std::string_view tok = text.substr(pos, next - pos);
            int v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size())
                throw ParseError("bad integer token '" + std::string(tok) + "'");
            values.push_back(v);
            pos = next + 1;
            if (next == text.size()) break;
        }
    } else {
        // compact digit form, one value per digit (n <= 9)
        if (text.size() > 9)
            throw ParseError("compact form limited to size 9; use comma-separated values");
        for (char c : text) {
            if (c < '1' || c > '9') throw ParseError(std::string("bad digit '") + c + "'");
            values.push_back(c - '0');
        }
    }
    try {
        return from_one_line(values);
    } catch (const NotABijection& e) {
        throw ParseError(std::string("not a permutation: ") + e.what());
    }
}

int Permutation::at(int i) const {
    if (i < 1 || i > size()) throw OutOfRange("position " + std::to_string(i));
    return vals_[i - 1];
}

std::vector<int> Permutation::one_line() const {
    return std::vector<int>(vals_.begin(), vals_.end());
}

std::string Permutation::to_string() const {
    std::string out;
    if (size() <= 9) {
        for (auto v : vals_) out.push_back(static_cast<char>('0' + v));
    } else {
        for (std::size_t i = 0; i < vals_.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(int(vals_[i]));
        }
    }
    return out;
}

PermKey Permutation::key() const {
    PermKey k;
    k.n = static_cast<std::uint32_t>(vals_.size());
    for (std::size_t i = 0; i < vals_.size(); ++i) {
        const std::uint64_t field = vals_[i] - 1;  // 5 bits, values <= 25
        if (i < 12)
            k.lo |= field << (5 * i);
        else
            k.hi |= field << (5 * (i - 12));
    }
    return k;
}

Permutation Permutation::from_key(const PermKey& k) {
    std::vector<std::uint8_t> vals(k.n);
    for (std::uint32_t i = 0; i < k.n; ++i) {
        const std::uint64_t word = i < 12 ? k.lo : k.hi;
        const unsigned shift = 5 * (i < 12 ? i : i - 12);
        vals[i] = static_cast<std::uint8_t>(((word >> shift) & 0x1f) + 1);
    }
    return Permutation(std::move(vals));
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.vals_.begin(), a.vals_.end(),
                                                  b.vals_.begin(), b.vals_.end());
}

// --- symmetries -------------------------------------------------------------

Permutation reverse(const Permutation& p) {
    std::vector<int> v = p.one_line();
    std::reverse(v.begin(), v.end());
    return Permutation::from_one_line(v);
}

Permutation complement(const Permutation& p) {
    const int n = p.size();
    std::vector<int> v = p.one_line();
    for (int& x : v) x = n + 1 - x;
    return Permutation::from_one_line(v);
}

Permutation reverse_complement(const Permutation& p) { return complement(reverse(p)); }

Permutation inverse(const Permutation& p) {
    const int n = p.size();
    std::vector<int> v(n);
    for (int i = 1; i <= n; ++i) v[p(i) - 1] = i;
    return Permutation::from_one_line(v);
}

Permutation apply_symmetry(const Permutation& p, Symmetry kind) {
    switch (kind) {
        case Symmetry::reverse: return reverse(p);
        case Symmetry::complement: return complement(p);
        case Symmetry::reverse_complement: return reverse_complement(p);
        case Symmetry::inverse: return inverse(p);
    }
    throw BadParam("unknown symmetry");
}

// --- statistics -------------------------------------------------------------

int descent_count(const Permutation& p) {
    int d = 0;
    for (int i = 1; i < p.size(); ++i)
        if (p(i) > p(i + 1)) ++d;
    return d;
}

int inverse_descent_count(const Permutation& p) {
    // pairs i < j with p(i) = p(j) + 1, i.e. value v+1 positioned before v
    const int n = p.size();
    std::vector<int> pos(n + 2, 0);
    for (int i = 1; i <= n; ++i) pos[p(i)] = i;
    int d = 0;
    for (int v = 1; v < n; ++v)
        if (pos[v + 1] < pos[v]) ++d;
    return d;
}

std::vector<PositionRun> adjacencies(const Permutation& p) {
    std::vector<PositionRun> runs;
    const int n = p.size();
    int start = 1;
    for (int i = 1; i <= n; ++i) {
        if (i == n || p(i + 1) != p(i) + 1) {
            runs.push_back({start, i});
            start = i + 1;
        }
    }
    return runs;
}

// --- patterns ---------------------------------------------------------------

Permutation pattern_at(const Permutation& p, PosMask positions) {
    if (positions == 0) throw EmptySet("empty position set");
    const int n = p.size();
    if (n < 32 && (positions >> n) != 0) throw OutOfRange("position beyond host size");
    int vals[32];
    int k = 0;
    for (PosMask m = positions; m; m &= m - 1)
        vals[k++] = p.raw()[std::countr_zero(m)];
    std::vector<int> ranks(k);
    for (int i = 0; i < k; ++i) {
        int r = 1;
        for (int j = 0; j < k; ++j)
            if (vals[j] < vals[i]) ++r;
        ranks[i] = r;
    }
    return Permutation::from_one_line(ranks);
}

Permutation pattern_at(const Permutation& p, std::span<const int> positions) {
    if (positions.empty()) throw EmptySet("empty position set");
    PosMask mask = 0;
    for (int pos : positions) {
        if (pos < 1 || pos > p.size()) throw OutOfRange("position " + std::to_string(pos));
        mask |= PosMask(1) << (pos - 1);
    }
    if (std::popcount(mask) != static_cast<int>(positions.size()))
        throw OutOfRange("duplicate position in set");
    return pattern_at(p, mask);
}

Permutation pattern_at(const Permutation& p, std::initializer_list<int> positions) {
    return pattern_at(p, std::span<const int>(positions.begin(), positions.size()));
}

// --- t/b words ---------------------------------------------------------------

TBWord TBWord::from_letters(std::string_view letters) {
    if (letters.empty()) throw InvalidWord("empty word");
    for (char c : letters)
        if (c != 't' && c != 'b')
            throw InvalidWord(std::string("letter '") + c + "' outside {t, b}");
    TBWord w;
    w.letters_.assign(letters);
    return w;
}

bool TBWord::decodable() const noexcept {
    // needs some t strictly before some b
    const std::size_t first_t = letters_.find('t');
    const std::size_t last_b = letters_.rfind('b');
    return first_t != std::string::npos && last_b != std::string::npos && first_t < last_b;
}

TBWord tb_encode(const Permutation& p) {
    if (inverse_descent_count(p) != 1)
        throw NotSingleInverseDescent("ides(p) = " +
                                      std::to_string(inverse_descent_count(p)));
    // locate the unique inverse descent: value v with pos(v+1) < pos(v);
    // bottoms are <= v, tops are > v
    const int n = p.size();
    std::vector<int> pos(n + 2, 0);
    for (int i = 1; i <= n; ++i) pos[p(i)] = i;
    int split = 0;
    for (int v = 1; v < n; ++v)
        if (pos[v + 1] < pos[v]) { split = v; break; }
    std::string letters(n, 'b');
    for (int i = 1; i <= n; ++i)
        if (p(i) > split) letters[i - 1] = 't';
    return TBWord::from_letters(letters);
}

Permutation tb_decode(const TBWord& w) {
    if (!w.decodable())
        throw InvalidWord("word '" + w.letters() + "' has no t before a b");
    // bottoms take 1..#b left to right, tops take #b+1..n left to right
    const int n = w.size();
    const int bottoms = static_cast<int>(std::count(w.letters().begin(), w.letters().end(), 'b'));
    std::vector<int> vals(n);
    int next_bottom = 1, next_top = bottoms + 1;
    for (int i = 0; i < n; ++i)
        vals[i] = w.letters()[i] == 'b' ? next_bottom++ : next_top++;
    return Permutation::from_one_line(vals);
}

}  // namespace permposet

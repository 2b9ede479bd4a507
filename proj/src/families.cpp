#include "permposet/families.hpp"

#include <charconv>
#include <vector>

#include "permposet/errors.hpp"

namespace permposet {

Permutation pi_family(int n) {
    if (n < 1) throw BadParam("pi family needs n >= 1");
    const int size = 2 * n + 2;
    std::vector<int> vals(size);
    vals[0] = n + 1;
    for (int i = 1; i <= n; ++i) vals[2 * i - 1] = i;          // positions 2,4,...,2n
    for (int i = 1; i <= n; ++i) vals[2 * i] = n + 2 + i;      // positions 3,5,...,2n+1
    vals[size - 1] = n + 2;
    return Permutation::from_one_line(vals);
}

Permutation kappa_family(int n) {
    if (n < 1) throw BadParam("kappa family needs n >= 1");
    std::vector<int> vals;
    vals.reserve(4 * n);
    for (int v = n + 1; v <= 3 * n - 1; v += 2) vals.push_back(v);
    for (int i = 1; i <= n; ++i) {
        vals.push_back(i);
        vals.push_back(3 * n + i);
    }
    for (int v = n + 2; v <= 3 * n; v += 2) vals.push_back(v);
    return Permutation::from_one_line(vals);
}

Permutation pi_nk_family(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw BadParam("pi_{n,k} needs 1 <= k <= n");
    const Permutation kappa = kappa_family(n);
    // the defining value set inside kappa_n
    std::vector<bool> wanted(4 * n + 1, false);
    for (int v = n + 1; v <= n + 2 * k - 1; v += 2) wanted[v] = true;
    for (int v = 1; v <= n; ++v) wanted[v] = true;
    for (int v = 3 * n + 1; v <= 4 * n; ++v) wanted[v] = true;
    for (int v = n + 2; v <= n + 2 * k; v += 2) wanted[v] = true;
    std::vector<int> positions;
    for (int i = 1; i <= kappa.size(); ++i)
        if (wanted[kappa(i)]) positions.push_back(i);
    return pattern_at(kappa, positions);
}

Permutation decreasing(int k) {
    if (k < 1) throw BadParam("decreasing permutation needs k >= 1");
    std::vector<int> vals(k);
    for (int i = 0; i < k; ++i) vals[i] = k - i;
    return Permutation::from_one_line(vals);
}

Permutation tb_alternating(int n) {
    if (n < 1) throw BadParam("tb-alternating family needs n >= 1");
    std::string letters;
    letters.reserve(2 * n);
    for (int i = 0; i < n; ++i) letters += "tb";
    return tb_decode(TBWord::from_letters(letters));
}

Int pi_family_mu_closed_form(int n) {
    if (n < 2) throw BadParam("closed form holds for n >= 2");
    return -binomial(n + 2, 7) - binomial(n + 1, 7) + 2 * binomial(n + 2, 5) -
           binomial(n + 2, 3) - binomial(n, 2) - 2 * n;
}

Int tb_alternating_mu_closed_form(int n) {
    if (n < 1) throw BadParam("closed form holds for n >= 1");
    return -binomial(n + 1, 2);
}

bool is_pi_family_member(const Permutation& host) {
    const int size = host.size();
    if (size < 4 || size % 2 != 0) return false;
    return host == pi_family((size - 2) / 2);
}

// --- FamilySpec --------------------------------------------------------------

namespace {

int parse_int(std::string_view tok) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("bad integer '" + std::string(tok) + "'");
    return v;
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("family spec needs the form name:params");
    const std::string_view name = text.substr(0, colon);
    const std::string_view params = text.substr(colon + 1);
    FamilySpec spec;
    if (name == "pi") spec.family = Family::pi;
    else if (name == "kappa") spec.family = Family::kappa;
    else if (name == "pink") spec.family = Family::pink;
    else if (name == "delta") spec.family = Family::delta;
    else if (name == "tbalt") spec.family = Family::tbalt;
    else throw ParseError("unknown family '" + std::string(name) + "'");

    const auto comma = params.find(',');
    if (spec.family == Family::pink) {
        if (comma == std::string_view::npos)
            throw ParseError("pink needs two parameters n,k");
        spec.n = parse_int(params.substr(0, comma));
        spec.k = parse_int(params.substr(comma + 1));
    } else {
        if (comma != std::string_view::npos)
            throw ParseError(std::string(name) + " takes a single parameter");
        spec.n = parse_int(params);
    }
    return spec;
}

Permutation FamilySpec::generate() const {
    switch (family) {
        case Family::pi: return pi_family(n);
        case Family::kappa: return kappa_family(n);
        case Family::pink: return pi_nk_family(n, k);
        case Family::delta: return decreasing(n);
        case Family::tbalt: return tb_alternating(n);
    }
    throw BadParam("unknown family");
}

std::string FamilySpec::to_string() const {
    switch (family) {
        case Family::pi: return "pi:" + std::to_string(n);
        case Family::kappa: return "kappa:" + std::to_string(n);
        case Family::pink: return "pink:" + std::to_string(n) + "," + std::to_string(k);
        case Family::delta: return "delta:" + std::to_string(n);
        case Family::tbalt: return "tbalt:" + std::to_string(n);
    }
    return {};
}

}  // namespace permposet

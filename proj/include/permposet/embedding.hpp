#pragma once

#include <vector>

#include "permposet/numeric.hpp"
#include "permposet/permutation.hpp"

namespace permposet {

// Image of an embedding of some pattern into a host: a strictly increasing
// set of 1-based host positions. The image alone determines the embedding and
// the embedded pattern.
struct EmbeddingImage {
    int host_size = 0;
    std::vector<int> positions;

    PosMask mask() const;
    static EmbeddingImage from_mask(int host_size, PosMask m);
    friend bool operator==(const EmbeddingImage&, const EmbeddingImage&) = default;
};

// All embeddings of sigma into pi, images in lexicographic order. Empty when
// |sigma| > |pi| or pi avoids sigma.
std::vector<EmbeddingImage> enumerate_embeddings(const Permutation& sigma,
                                                 const Permutation& pi);

// |E(sigma, pi)|, computed by the same backtracker with a counter; the image
// list is never materialized.
Int count_embeddings(const Permutation& sigma, const Permutation& pi);

// Embeddings whose image contains every non-initial position of every
// adjacency run of pi. When all adjacencies are singletons this equals
// count_embeddings.
Int count_normal_embeddings(const Permutation& sigma, const Permutation& pi);

// True iff E(sigma, pi) > 0; short-circuits on the first witness.
bool contains(const Permutation& sigma, const Permutation& pi);

// Positions every normal embedding must cover: the non-initial positions of
// each adjacency run of pi.
PosMask normal_required_mask(const Permutation& pi);

}  // namespace permposet

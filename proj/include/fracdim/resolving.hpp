#pragma once

#include "fracdim/graph.hpp"
#include "fracdim/products.hpp"

namespace fracdim {

// R_G{u,v}: vertices whose distance to u differs from their distance to v.
// kUnreachable compares equal only to itself, so a vertex unreachable from
// both u and v never resolves them. Always contains u and v.
std::vector<int> resolving_set(const DistanceMatrix& d, int u, int v);

// S_H{v1,v2} = {v1,v2} together with the symmetric difference of the open
// neighborhoods. Never empty.
std::vector<int> symmetric_set(const Graph& h, int v1, int v2);

enum class TwinType { kType1, kType2, kType3 };

// Partition of V(G) into twin-equivalence classes. Type 1 classes are
// singletons; type 2 classes are cliques with equal closed neighborhoods;
// type 3 classes are independent sets with equal open neighborhoods.
struct TwinDecomposition {
    std::vector<std::vector<int>> classes;  // each sorted ascending
    std::vector<TwinType> class_type;
    int m1 = 0;
    int m2 = 0;
    int m3 = 0;
};

// Classes come from union-find over pairwise twin tests, then each class
// is checked against the trichotomy; a class fitting none of the three
// shapes raises std::logic_error (it would contradict the equivalence-
// relation property the decomposition relies on).
TwinDecomposition twin_decomposition(const Graph& g);

// Structural prediction for an R-set of a product graph: either the exact
// member list, or a witness copy ^uH guaranteed to be contained in it.
struct PredictedRSet {
    bool is_copy_cover;
    std::vector<int> members;  // product indices, sorted; empty for copy covers
    int witness_u = -1;
};

// Corona products: same-copy pairs get the exact S-set image, all other
// pairs get a witness copy. Requires G connected with >= 2 vertices.
PredictedRSet predicted_corona_R(const ProductGraph& p, ProductVertex x, ProductVertex y);

// Lexicographic products: same-copy and twin pairs get exact sets, non-twin
// pairs get a witness copy. Requires G connected with >= 2 vertices.
PredictedRSet predicted_lex_R(const ProductGraph& p, ProductVertex x, ProductVertex y);

}  // namespace fracdim

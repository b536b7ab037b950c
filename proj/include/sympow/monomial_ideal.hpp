#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sympow/ideal.hpp"

namespace sympow {

// Monomial ideal held as its unique minimal generating antichain (no
// generator divides another), sorted descending in the ring order so the
// generator list coincides with the reduced Groebner basis.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    // Divisibility-minimalizes the given generators.
    static MonomialIdeal make(Ring r, std::vector<Monomial> gens);
    // Succeeds when every generator of I is a single term.
    static std::optional<MonomialIdeal> from_ideal(const Ideal& I);

    const Ring& ring() const { return ring_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool squarefree() const { return squarefree_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    bool contains(const Monomial& m) const; // some generator divides m

    Ideal to_ideal() const;
    std::string str() const;

private:
    Ring ring_;
    std::vector<Monomial> gens_;
    bool squarefree_ = true;
};

// Prime ideal generated by a set of variables, stored as a bitmask.
struct VarPrime {
    std::uint32_t mask = 0;

    int size() const { return std::popcount(mask); }
    bool has(int var) const { return (mask >> var) & 1u; }
    bool operator==(const VarPrime&) const = default;
    std::string str(const Ring& r) const; // "(x,y)"
};

// Intersection of monomial ideals: pairwise generator lcms, minimalized.
MonomialIdeal monomial_intersect(const MonomialIdeal& I, const MonomialIdeal& J);

// Minimal primes of a square-free monomial ideal: the minimal variable
// subsets meeting the support of every generator (minimal vertex covers of
// the generator hypergraph). Exhaustive subset sweep; needs <= 12 variables.
std::vector<VarPrime> minimal_primes(const MonomialIdeal& I);

// The n-th symbolic power of a square-free monomial ideal: the intersection
// of the n-th powers of its minimal primes.
MonomialIdeal monomial_symbolic_power(const MonomialIdeal& I, unsigned n);

// Image of I after sending every variable outside P to 1, re-minimalized.
// P must contain the support of a point of V(I), i.e. meet every generator.
MonomialIdeal localize_at_monomial_prime(const MonomialIdeal& I, const VarPrime& P);

// Height of a monomial ideal: smallest size of a variable cover.
int monomial_height(const MonomialIdeal& I);

// Complete intersection at every monomial prime in V(I) other than the
// irrelevant ideal; the witness is the first failing prime otherwise.
struct LocalCiResult {
    bool locally_ci = false;
    std::optional<VarPrime> witness;
};
LocalCiResult is_locally_ci(const MonomialIdeal& I);

// mu(I_P) <= |P| at every monomial prime of V(I), the irrelevant one
// included.
bool is_g_infinity(const MonomialIdeal& I);

// Isomorphism classes of graphs on four labeled vertices, named by the
// classifier below. Other covers the classes that cannot arise from an
// unmixed height-two input or are immediately excluded.
enum class GraphShape : std::uint8_t {
    Path4,
    Cycle4,
    TwoDisjointEdges,
    Paw,
    Diamond,
    TrianglePlusIsolated,
    K4,
    Other,
};
std::string graph_shape_str(GraphShape s);

// Result of the four-variable classifier: the graph with an edge {i,j}
// exactly when (x_i,x_j) is NOT a minimal prime of I, its isomorphism class,
// and the verdict. Only a path, a cycle, or two disjoint edges survive as
// candidates for the square-vs-symbolic-square rigidity pattern; everything
// else is excluded, with the specific precondition failure spelled out.
struct GraphClass {
    std::vector<std::pair<int, int>> edges; // 0-based vertex pairs, i < j
    GraphShape shape = GraphShape::Other;
    std::string name;           // precise class name ("path", "claw", ...)
    bool rigid_candidate = false;
    bool locally_ci = false;    // computed only when preconditions hold
    std::string verdict;        // "rigid-candidate" or "excluded: <why>"
    std::string edges_str() const; // "1-2 2-3 3-4" (1-based)
};

// Requires a proper nonzero square-free ideal in exactly four variables.
// Height/unmixedness failures do not throw; they land in the verdict.
GraphClass classify_graph(const MonomialIdeal& I);

} // namespace sympow

#ifndef CONTRACTAD_KOSZUL_HPP
#define CONTRACTAD_KOSZUL_HPP

#include "contractad/planeq.hpp"

#include <string>
#include <vector>

namespace contractad {

/// Chain complex of rational vector spaces with explicit bases.
/// differentials[d] maps degree d to degree d-1; entries are sparse
/// triplets. differentials[0] is empty.
struct RationalChainComplex {
    struct Entry {
        std::size_t row;  // index in the degree d-1 basis
        std::size_t col;  // index in the degree d basis
        Rational value;
    };

    std::vector<std::vector<std::string>> basis;        // per-degree labels
    std::vector<std::vector<Entry>> differentials;

    std::size_t degrees() const { return basis.size(); }
    std::size_t dim(std::size_t d) const { return d < basis.size() ? basis[d].size() : 0; }
    long long euler_characteristic() const;
    bool differential_squares_to_zero() const;
};

/// Koszul complex of the Hamiltonian-path contractad on g. Degree-d basis:
/// ordered splittings of realizable tuples into d+1 directed subpaths; the
/// differential merges neighbouring subpaths with alternating signs.
RationalChainComplex build_ham_koszul(const Graph& g, int limit = default_limits().koszul);

/// The subcomplex of splittings of one realizable tuple.
RationalChainComplex ham_koszul_component(const Graph& g, const DirectedSequence& tuple);

/// Koszul complex of the Hamiltonian-cycle module on g. Degree-d basis:
/// cyclic splittings (block rotation identified up to the sign
/// (-1)^((k-1)i)) of realizable cyclic tuples into d+1 directed subpaths.
RationalChainComplex build_cycham_koszul(const Graph& g, int limit = default_limits().koszul);

RationalChainComplex cycham_koszul_component(const Graph& g, const CyclicSequence& tuple);

/// Betti numbers b_0..b_top via exact rank computation. Throws
/// std::invalid_argument if the differential does not square to zero.
std::vector<long long> homology_ranks(const RationalChainComplex& complex);

/// Exact rank of one differential (rational Gaussian elimination).
std::size_t differential_rank(const RationalChainComplex& complex, std::size_t degree);

/// Plain-text dump: one "degree row col num/den" line per entry.
std::string dump_matrices(const RationalChainComplex& complex);

} // namespace contractad

#endif

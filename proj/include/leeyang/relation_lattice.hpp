#pragma once

#include <vector>

#include "leeyang/exact.hpp"

namespace leeyang {

/**
 * Q-linear relations among a tuple of exact reals omega_1..omega_s.
 *
 * relations spans R = {r in Q^s : <omega, r> = 0} and complement spans
 * L = R^perp. Both are given by primitive integer vectors with first nonzero
 * entry positive, listed in lexicographically decreasing order.
 */
struct RelationLattice {
    std::vector<IntVector> relations;
    std::vector<IntVector> complement;
    Eigen::Index ambient_dim = 0;
    Eigen::Index rank = 0;  // dim_Q of the tuple
};

/// Requires every entry to be certified positive.
RelationLattice relation_lattice(const std::vector<ExactReal>& omega);

/// Same computation without the positivity precondition.
RelationLattice relation_lattice_unsigned(const std::vector<ExactReal>& omega);

/// dim_Q span{omega_1, ..., omega_s}.
Eigen::Index dim_q(const std::vector<ExactReal>& omega);

}  // namespace leeyang

#include "leeyang/relation_lattice.hpp"

#include "leeyang/linalg.hpp"

namespace leeyang {

namespace {

std::vector<IntVector> canonical_basis(const RationalMatrix& columns_basis)
{
    std::vector<IntVector> out;
    for (Eigen::Index j = 0; j < columns_basis.cols(); ++j)
        out.push_back(canonical_line(primitive(RationalVector(columns_basis.col(j)))));
    sort_descending(out);
    return out;
}

}  // namespace

RelationLattice relation_lattice_unsigned(const std::vector<ExactReal>& omega)
{
    if (omega.empty()) throw std::invalid_argument("relation_lattice: empty tuple");
    const auto& ctx = omega.front().context();
    const auto s = static_cast<Eigen::Index>(omega.size());
    const auto b = static_cast<Eigen::Index>(ctx->size());

    // Column j holds the basis coordinates of omega_j. Since the basis is
    // Q-independent, <omega, r> = 0 exactly when coords * r = 0.
    RationalMatrix coords(b, s);
    for (Eigen::Index j = 0; j < s; ++j) {
        if (!omega[static_cast<std::size_t>(j)].context()->same_basis(*ctx))
            throw DimensionMismatch("relation_lattice: mixed bases");
        coords.col(j) = omega[static_cast<std::size_t>(j)].coords();
    }

    RelationLattice out;
    out.ambient_dim = s;
    const RationalMatrix rel = nullspace<Rational>(coords);
    out.relations = canonical_basis(rel);

    if (out.relations.empty()) {
        out.complement = canonical_basis(RationalMatrix::Identity(s, s));
    } else {
        RationalMatrix r(static_cast<Eigen::Index>(out.relations.size()), s);
        for (std::size_t i = 0; i < out.relations.size(); ++i)
            r.row(static_cast<Eigen::Index>(i)) = to_rational(out.relations[i]).transpose();
        out.complement = canonical_basis(nullspace<Rational>(r));
    }
    out.rank = static_cast<Eigen::Index>(out.complement.size());
    return out;
}

RelationLattice relation_lattice(const std::vector<ExactReal>& omega)
{
    for (std::size_t j = 0; j < omega.size(); ++j)
        if (sign_of(omega[j]) != Sign::Positive)
            throw std::invalid_argument("relation_lattice: entry " + std::to_string(j) +
                                        " (" + omega[j].str() + ") is not positive");
    return relation_lattice_unsigned(omega);
}

Eigen::Index dim_q(const std::vector<ExactReal>& omega) { return relation_lattice(omega).rank; }

}  // namespace leeyang

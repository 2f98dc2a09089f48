#pragma once

/**
 * @file algebra.hpp
 * @brief Finite-rank structure-constant algebras with involution.
 *
 * StructureAlgebra is the common carrier for S_n(R), M_m(R), M_m(R[C2])
 * (flattened over R), corner algebras, direct products and quotients.
 * Elements are coordinate vectors over the distinguished basis.
 */

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "censym/linalg.hpp"
#include "censym/report.hpp"
#include "censym/tensor.hpp"

namespace censym {

class StructureAlgebra {
 public:
  using ProductFn = std::function<Vector(std::size_t, std::size_t)>;

  /// `involution` is a rank x rank coordinate matrix (column u = i(b_u)).
  StructureAlgebra(Ring ring, std::vector<std::string> labels, StructureTensor tensor, Vector unit,
                   CoordMatrix involution);

  /// Builds the tensor from a function returning b_u * b_v in coordinates.
  static StructureAlgebra from_products(Ring ring, std::vector<std::string> labels, const ProductFn& product,
                                        Vector unit, CoordMatrix involution);

  const Ring& ring() const { return ring_; }
  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const StructureTensor& tensor() const { return tensor_; }
  const Vector& unit() const { return unit_; }
  const CoordMatrix& involution() const { return involution_; }

  Vector basis(std::size_t u) const { return unit_vector(ring_, rank(), u); }
  Vector zero() const { return zero_vector(ring_, rank()); }
  Vector multiply(const Vector& a, const Vector& b) const;
  Vector involute(const Vector& a) const { return involution_.apply(a); }

  /// True when every column of the involution matrix is +-1 times a basis
  /// vector and the columns are distinct.
  bool involution_is_signed_permutation() const;

  /// Labeled linear combination, e.g. `f1_1 + f1_3` or `2*f2_2`.
  std::string format(const Vector& v) const;

  /// labels, tensor as nested arrays of element literals, unit, involution
  nlohmann::json to_json() const;

 private:
  Ring ring_;
  std::vector<std::string> labels_;
  StructureTensor tensor_;
  Vector unit_;
  CoordMatrix involution_;
};

using AlgebraPtr = std::shared_ptr<const StructureAlgebra>;

/// Formats a linear combination over arbitrary labels.
std::string format_combination(const std::vector<std::string>& labels, const Vector& v);
nlohmann::json vector_json(const Vector& v);

/// Associativity and unit laws on all basis triples/elements; involution is
/// an anti-automorphism of order 2 on basis pairs.
Report audit(const StructureAlgebra& a);

/// S_n(R) on the canonical f-basis; involution = matrix transpose.
AlgebraPtr algebra_of_censym(const Ring& ring, std::size_t n);

/// M_m(R) on matrix units E_ij with the transpose as involution. m = 0
/// gives the zero algebra.
AlgebraPtr full_matrix_algebra(const Ring& ring, std::size_t m);

/// M_m(R[C2]) as an algebra over R: rank 2m^2 with basis E_ij, x*E_ij
/// (interleaved), transpose fixing coefficients as involution.
AlgebraPtr group_matrix_algebra(const Ring& base, std::size_t m);

/// R[C2] over `base` with basis labels `1`, `x` and identity involution.
AlgebraPtr group_algebra_c2(const Ring& base);

/// The rank-0 algebra.
AlgebraPtr zero_algebra(const Ring& ring);

/// A x B with basis (a-basis, b-basis) and componentwise involution.
AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b);

struct IdealBasis {
  AlgebraPtr algebra;
  std::vector<Vector> basis;
};

/// Smallest two-sided ideal containing `gens`, as a free basis in reduced
/// echelon form with unit pivots. Throws FreenessUndetermined when some
/// element of the ideal cannot be reduced with a unit pivot.
IdealBasis ideal_generated(const AlgebraPtr& algebra, const std::vector<Vector>& gens);

/// Claimed properties of a linear map between algebras or based modules.
enum class MapProperty {
  algebra_homomorphism,
  left_module_homomorphism,
  bimodule_homomorphism,
  bijective,
  involution_compatible,
};

std::string to_string(MapProperty p);

/// Linear map between two structure algebras, given by its coordinate
/// matrix (target.rank() x source.rank()).
struct LinearMapWitness {
  std::string name;
  AlgebraPtr source;
  AlgebraPtr target;
  CoordMatrix matrix;
  std::optional<CoordMatrix> inverse;
  std::set<MapProperty> claims;

  Vector apply(const Vector& v) const { return matrix.apply(v); }
  nlohmann::json to_json() const;
};

/// Map between two left submodules of one algebra, each given by a basis of
/// coordinate vectors; `matrix` is target_basis.size() x source_basis.size()
/// in module coordinates.
struct ModuleMapWitness {
  std::string name;
  AlgebraPtr algebra;
  std::vector<Vector> source_basis;
  std::vector<Vector> target_basis;
  CoordMatrix matrix;
  std::optional<CoordMatrix> inverse;
  std::set<MapProperty> claims;

  nlohmann::json to_json() const;
};

/// Checks every claimed property exhaustively on bases; the first failing
/// basis pair is reported as counterexample. A bijectivity claim without an
/// explicit inverse fails.
Report check_witness(const LinearMapWitness& w);
Report check_witness(const ModuleMapWitness& w);

struct Quotient {
  AlgebraPtr algebra;
  /// Surjective algebra homomorphism A -> A/J.
  LinearMapWitness projection;
  std::vector<Vector> complement;
};

/// A/J presented on a complement of J. Without `complement`, the basis
/// vectors at the non-pivot columns of J's echelon form are used. Throws
/// PreconditionError when J plus the complement is not a basis of A over the
/// ring. The involution is induced when i(J) = J, otherwise the quotient
/// carries the identity.
Quotient quotient_by_ideal(const AlgebraPtr& algebra, const IdealBasis& ideal,
                           std::optional<std::vector<Vector>> complement = std::nullopt);

/// Algebra presented on a basis of a subalgebra or corner e A e (vectors in
/// A's coordinates); products are re-expressed over that basis. Throws
/// PreconditionError if a product leaves the span.
AlgebraPtr subalgebra_on(const AlgebraPtr& algebra, const std::vector<Vector>& basis, std::vector<std::string> labels,
                         const Vector& unit_in_sub);

struct CentreResult {
  /// True when `basis` spans the whole centre (nullspace computed exactly).
  bool complete = false;
  std::vector<Vector> basis;
  Report report;
};

/// Centre of A. The commutation system z b_u - b_u z = 0 is solved exactly
/// whenever unit-pivot elimination succeeds (always over a field). In every
/// case the `candidates` are checked to be central and linearly independent;
/// when the system cannot be solved this containment certificate is the
/// whole result.
CentreResult centre(const StructureAlgebra& a, const std::vector<Vector>& candidates = {});

}  // namespace censym

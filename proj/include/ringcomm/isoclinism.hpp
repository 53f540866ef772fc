#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringcomm/abelian_group.hpp"
#include "ringcomm/fraction.hpp"
#include "ringcomm/ring.hpp"
#include "ringcomm/subgroup.hpp"

namespace ringcomm {

/// R / Z(R) as cosets of the center in (R, +).
struct QuotientGroup {
  AdditiveSubgroup center;
  /// Lexicographically smallest element of each coset, increasing; coset i is
  /// representatives[i] + Z(R).
  std::vector<ElementIndex> representatives;
  /// Coset number of every element of R.
  std::vector<std::uint32_t> coset_of;

  std::size_t size() const noexcept { return representatives.size(); }
  /// Group on coset numbers; references `ring` and this object.
  FiniteAbelianGroup as_group(const FiniteRing& ring) const;
};

/// Also checks that [x + z, y] = [x, y] for every x, y and central z (throws
/// InternalInconsistency otherwise), which makes the commutator a function of cosets.
QuotientGroup quotient_by_center(const FiniteRing& ring);

/// A Z-isoclinism (alpha, beta) between R1 and R2.
///   alpha: canonical coset representative of R1/Z(R1) -> representative of R2/Z(R2)
///   beta:  element of [R1, R1] -> element of [R2, R2]
/// Both lists are sorted by their left-hand sides.
struct IsoclinismWitness {
  std::vector<std::pair<RingElement, RingElement>> alpha;
  std::vector<std::pair<RingElement, RingElement>> beta;

  friend bool operator==(const IsoclinismWitness&, const IsoclinismWitness&) = default;
};

struct IsoclinismSearchOptions {
  std::size_t node_budget = 10'000'000;
  std::size_t max_quotient_order = 64;
  std::size_t max_commutator_subgroup_order = 64;
};

/// Decides Z-isoclinism of r1 and r2 by exhaustive search.
///
/// Quotients R/Z(R) and commutator subgroups must have equal invariant factors; otherwise
/// the answer is std::nullopt without searching. Then alpha is built by backtracking over
/// images of a greedy generating set of R1/Z(R1) (candidates in coset order), and for each
/// complete alpha the compatibility condition forces beta on realized commutators, which is
/// extended additively and checked for consistency and bijectivity.
///
/// Returns the first witness in that order, std::nullopt when the space is exhausted.
/// Throws SearchGateExceeded when R1's quotient or commutator subgroup is above the gate
/// and SearchBudgetExceeded when the node budget runs out.
std::optional<IsoclinismWitness> find_isoclinism(const FiniteRing& r1, const FiniteRing& r2,
                                                 const IsoclinismSearchOptions& options = {});

/// True iff alpha and beta are additive bijections between the right groups and
/// beta([x1, y1]) = [x2, y2] for every pair of cosets. Throws ShapeMismatch on elements of
/// the wrong rank.
bool verify_witness(const FiniteRing& r1, const FiniteRing& r2, const IsoclinismWitness& w);

/// Identity witness of R with itself.
IsoclinismWitness identity_witness(const FiniteRing& ring);

/// "alpha:" then "rep -> rep" lines, "beta:" then "elem -> elem" lines.
std::string serialize_witness(const IsoclinismWitness& w);

struct InvarianceRow {
  RingElement r;
  RingElement image;  // beta(r)
  Probability pr_r1;
  Probability pr_r2;
};

struct InvarianceReport {
  Fraction central_index_r1{0};  // |R1| / |Z(R1)|
  Fraction central_index_r2{0};
  /// |[s1, R1]| = |[s2, R2]| for every alpha-matched pair of cosets.
  bool image_sizes_match = false;
  std::vector<InvarianceRow> rows;  // one per r in [R1, R1]
  bool holds = false;
};

/// Pr_r(R1) = Pr_{beta(r)}(R2) for every r in [R1, R1], both sides by pair enumeration.
/// Throws WitnessInvalid if verify_witness fails.
InvarianceReport verify_invariance(const FiniteRing& r1, const FiniteRing& r2, const IsoclinismWitness& w);

}  // namespace ringcomm

#pragma once

#include "hspoly/fdeq.hpp"
#include "hspoly/roots.hpp"

#include <optional>
#include <vector>

namespace hspoly {

/* Certificate machinery for the uniqueness of polynomial solutions.
 *
 * Write g - h r = (x-a_0)...(x-a_m) and g = (x-b_0)...(x-b_m') (after
 * monic normalization; the leading ratio kappa is reported separately).
 * The three sufficient criteria, each checked exactly:
 *
 *   T1        some a_j has no b-root on its upward lattice {a_j + k h}.
 *   T1_REMARK some b_l has no a-root on its downward lattice {b_l - k h}.
 *   T2        some upward lattice {a_j + k h} carries strictly more
 *             a-roots than b-roots (counted from a_j on).
 *
 * Any verdict other than INCONCLUSIVE certifies that two linearly
 * independent polynomial solutions are impossible, whatever u is.
 * INCONCLUSIVE means the criteria are silent, never that a second
 * solution exists. */

enum class Verdict { T1, T1_REMARK, T2, INCONCLUSIVE };
enum class RootSource { G, G_MINUS_HR };
enum class LatticeDirection { UP, DOWN };

struct LatticeMember {
    Root root;
    RootSource source;
    Int offset;  // lattice position relative to the class anchor, in units of h
};

/* One equivalence class of the combined roots of g and g-hr modulo
 * translation by h. The anchor is the minimal member. */
struct LatticeClass {
    Root anchor;
    std::vector<LatticeMember> members;  // ascending offsets
};

struct UniquenessCertificate {
    Verdict verdict = Verdict::INCONCLUSIVE;
    std::optional<LatticeClass> witness;  // members from the witness root on
    LatticeDirection witness_direction = LatticeDirection::UP;
    Rational kappa;                      // lc(g - h r) / lc(g)
    RootList roots_g;
    RootList roots_g_minus_hr;
    std::vector<LatticeClass> collisions;  // all classes with two or more members
};

/* Partition the combined root multiset modulo h-translation. Membership
 * is decided exactly by the shifted-gcd test gcd(P(x), Q(x + k h)); the
 * per-root attribution uses the certified isolating intervals.
 * Requires g and g-hr to have only real simple roots. */
std::vector<LatticeClass> lattice_classes(const DifferenceEquation& eq);

UniquenessCertificate check_t1(const DifferenceEquation& eq);
UniquenessCertificate check_t1_remark(const DifferenceEquation& eq);
UniquenessCertificate check_t2(const DifferenceEquation& eq);

/// First verdict of T1, T1_REMARK, T2 in that order, else INCONCLUSIVE.
UniquenessCertificate certify(const DifferenceEquation& eq);

}  // namespace hspoly

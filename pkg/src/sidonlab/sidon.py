"""Sidon-set verification in finite abelian groups.

A set S is Sidon when every solution of x1 + x2 = x3 + x4 with all four in S
has x1 in {x3, x4}.  The quantifier ranges over S^4 with repetition, so two
distinct elements whose difference is 2-torsion already violate the condition
(x + x = y + y with x not in {y, y}); |S| <= 1 is always Sidon.

A set is *symmetric* Sidon with center a when S = a - S and every nontrivial
pair-sum collision happens at the sum value a.

Three verification routes, kept deliberately independent:
  * verify_sidon / verify_symmetric_sidon: pair-sum table, O(|S|^2) adds;
  * brute_force_sidon: the defining quadruple loop, O(|S|^4), |S| <= 64;
  * verify_sidon_by_oracle: no group arithmetic at all, just an equivalence
    oracle on unordered pairs (used for curves whose group law is never built).
"""

from dataclasses import dataclass, field
from typing import Optional

from .errors import DuplicateElementError, OracleError, SetTooLargeError

VIOLATION_CAP = 100
BRUTE_FORCE_CAP = 64
CENTER_SEARCH_CAP = 10**4


@dataclass
class SidonReport:
    set_size: int
    is_sidon: bool
    is_symmetric_sidon: Optional[bool] = None
    symmetric_center: Optional[str] = None
    collision_count: int = 0
    violations: list = field(default_factory=list)  # encoded quadruples, capped

    def to_dict(self):
        return {
            "set_size": self.set_size,
            "is_sidon": self.is_sidon,
            "is_symmetric_sidon": self.is_symmetric_sidon,
            "symmetric_center": self.symmetric_center,
            "collision_count": self.collision_count,
            "violations": [list(v) for v in self.violations],
        }


def _encoded(S, group):
    enc = [group.encode(x) for x in S]
    if len(set(enc)) != len(enc):
        raise DuplicateElementError("set elements must be distinct under encode")
    return enc


def _pair_sum_table(S, group):
    """Map encoded pair-sum -> list of index pairs (i <= j)."""
    sums = {}
    add, encode = group.add, group.encode
    for i in range(len(S)):
        si = S[i]
        for j in range(i, len(S)):
            key = encode(add(si, S[j]))
            sums.setdefault(key, []).append((i, j))
    return sums


def _collisions_from_table(S, enc, sums):
    """collision_count and capped violation quadruples from a pair-sum table.

    In a group, two distinct unordered pairs with equal sums are automatically
    disjoint (shared element cancels), so (x1, x2, x3, x4) taken in order is a
    genuine violation: x1 not in {x3, x4}.
    """
    collision_count = 0
    violations = []
    for key in sums:
        pairs = sums[key]
        k = len(pairs)
        if k < 2:
            continue
        collision_count += k * (k - 1) // 2
        if len(violations) < VIOLATION_CAP:
            for a in range(k):
                for b in range(a + 1, k):
                    if len(violations) >= VIOLATION_CAP:
                        break
                    (i, j), (s, t) = pairs[a], pairs[b]
                    violations.append((enc[i], enc[j], enc[s], enc[t]))
    return collision_count, violations


def verify_sidon(S, group):
    """Pair-sum verification; O(|S|^2) group additions."""
    S = list(S)
    enc = _encoded(S, group)
    sums = _pair_sum_table(S, group)
    collision_count, violations = _collisions_from_table(S, enc, sums)
    return SidonReport(
        set_size=len(S),
        is_sidon=collision_count == 0,
        collision_count=collision_count,
        violations=violations,
    )


def verify_symmetric_sidon(S, group, a):
    """Check S = a - S and that all pair-sum collisions happen at sum a."""
    S = list(S)
    enc = _encoded(S, group)
    enc_a = group.encode(a)
    reflected = {group.encode(group.sub(a, x)) for x in S}
    symmetric_set = reflected == set(enc)

    sums = _pair_sum_table(S, group)
    collision_count, violations = _collisions_from_table(S, enc, sums)
    collisions_only_at_center = all(
        len(pairs) < 2 or key == enc_a for key, pairs in sums.items()
    )
    return SidonReport(
        set_size=len(S),
        is_sidon=collision_count == 0,
        is_symmetric_sidon=symmetric_set and collisions_only_at_center,
        symmetric_center=enc_a,
        collision_count=collision_count,
        violations=violations,
    )


def find_symmetric_center(S, group, candidates):
    """First candidate a making S symmetric Sidon with center a, else None.

    Provided for searches over a full group enumeration; refuses more than
    10^4 candidates.
    """
    candidates = list(candidates)
    if len(candidates) > CENTER_SEARCH_CAP:
        raise SetTooLargeError(
            f"center search over {len(candidates)} candidates exceeds the cap"
        )
    enc_S = set(_encoded(list(S), group))
    for a in candidates:
        if {group.encode(group.sub(a, x)) for x in S} != enc_S:
            continue
        rep = verify_symmetric_sidon(S, group, a)
        if rep.is_symmetric_sidon:
            return a
    return None


def brute_force_sidon(S, group):
    """The defining quadruple loop, verbatim; |S| <= 64.

    Documents, among other things, that 2-torsion differences break Sidonness:
    S = {0, n/2} in even Z_n fails via 0 + 0 = n/2 + n/2.
    """
    S = list(S)
    n = len(S)
    if n > BRUTE_FORCE_CAP:
        raise SetTooLargeError(f"brute force capped at {BRUTE_FORCE_CAP} elements")
    enc = _encoded(S, group)
    add, encode = group.add, group.encode
    sums = [[encode(add(S[i], S[j])) for j in range(n)] for i in range(n)]
    violations = []
    is_sidon = True
    for i in range(n):
        sums_i = sums[i]
        ei = enc[i]
        for j in range(n):
            s = sums_i[j]
            for a in range(n):
                sums_a = sums[a]
                ea = enc[a]
                for b in range(n):
                    if s == sums_a[b] and ei != ea and ei != enc[b]:
                        is_sidon = False
                        if len(violations) < VIOLATION_CAP:
                            violations.append((ei, enc[j], ea, enc[b]))
    # collision count via the same pair-sum convention as verify_sidon
    table = _pair_sum_table(S, group)
    collision_count = sum(
        len(v) * (len(v) - 1) // 2 for v in table.values() if len(v) > 1
    )
    return SidonReport(
        set_size=n,
        is_sidon=is_sidon,
        collision_count=collision_count,
        violations=violations,
    )


def _violation_arrangement(pair1, pair2, encode):
    """Arrange two distinct sum-equivalent pairs as (x1, x2, x3, x4) with
    x1 + x2 = x3 + x4 and x1 not in {x3, x4}."""
    e1 = [encode(x) for x in pair1]
    e2 = [encode(x) for x in pair2]
    for idx in range(2):
        if e1[idx] not in e2:
            return (pair1[idx], pair1[1 - idx], pair2[0], pair2[1])
    for idx in range(2):
        if e2[idx] not in e1:
            return (pair2[idx], pair2[1 - idx], pair1[0], pair1[1])
    raise AssertionError("pairs are not distinct")


def verify_sidon_by_oracle(points, equiv, encode=repr):
    """Sidon verification over opaque points with an equivalence oracle.

    equiv(pair1, pair2) decides whether the two unordered point pairs have
    linearly/group-equivalent sums; no group elements are ever constructed.
    All O(n^4/8) distinct pair-pair comparisons are made.  Oracle exceptions
    propagate wrapped in OracleError with the offending pairs attached.
    """
    points = list(points)
    n = len(points)
    pairs = [(i, j) for i in range(n) for j in range(i, n)]

    def ask(pa, pb):
        try:
            return equiv(pa, pb)
        except Exception as exc:  # noqa: BLE001 - re-raised with context
            raise OracleError(f"oracle failed on {pa} vs {pb}", (pa, pb)) from exc

    # reflexivity / symmetry spot checks
    for i, j in pairs[: min(5, len(pairs))]:
        pp = (points[i], points[j])
        if ask(pp, pp) is not True:
            raise OracleError(f"oracle is not reflexive on {pp}", (pp, pp))
    if len(pairs) >= 2:
        pa = (points[pairs[0][0]], points[pairs[0][1]])
        pb = (points[pairs[-1][0]], points[pairs[-1][1]])
        if ask(pa, pb) != ask(pb, pa):
            raise OracleError("oracle is not symmetric", (pa, pb))

    collision_count = 0
    violations = []
    for a in range(len(pairs)):
        i, j = pairs[a]
        pa = (points[i], points[j])
        for b in range(a + 1, len(pairs)):
            s, t = pairs[b]
            pb = (points[s], points[t])
            if ask(pa, pb):
                collision_count += 1
                if len(violations) < VIOLATION_CAP:
                    x1, x2, x3, x4 = _violation_arrangement(pa, pb, encode)
                    violations.append(
                        (encode(x1), encode(x2), encode(x3), encode(x4))
                    )
    return SidonReport(
        set_size=n,
        is_sidon=collision_count == 0,
        collision_count=collision_count,
        violations=violations,
    )

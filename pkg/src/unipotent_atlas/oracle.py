"""Independent brute-force verifiers for the classification maps.

Each verifier enumerates raw descriptors or partitions and checks one
theorem-level claim exhaustively at desk scale, reporting counterexamples
instead of asserting.  Image computations iterate descriptors and apply
only the partition algebra and the block-table formulas, never the
right-inverse maps.
"""

from __future__ import annotations

import json
import time
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from .balacarter import (
    RegularSubgroupDescriptor,
    iter_parabolic_products,
    iter_regular_subgroups,
    phi1,
    phi2,
    psi1,
    psi2,
)
from .classes import (
    ClassParam,
    Char,
    Family,
    GroupSpec,
    distinguished_eps,
    combine,
    enumerate_classes,
    is_distinguished,
    is_valid_class,
    minimal_levi,
    splits_in_so,
)
from .decomp import decompose, has_bad_sequence, satisfies_difference_condition
from .errors import InputError
from .partitions import Partition, iter_partitions
from .richardson import regular_jordan_blocks


@dataclass
class VerificationReport:
    claim: str
    group: str | None
    bound: int
    outcome: str
    counterexamples: list[str] = field(default_factory=list)
    elapsed_seconds: float = 0.0

    def __post_init__(self) -> None:
        if self.outcome not in ("pass", "fail"):
            raise InputError(f"outcome must be 'pass' or 'fail', got {self.outcome!r}")
        if self.outcome == "fail" and not self.counterexamples:
            raise InputError("a failing report must record at least one counterexample")

    @property
    def passed(self) -> bool:
        return self.outcome == "pass"

    def to_json(self) -> dict:
        return {
            "schema": "unipotent-atlas/v1",
            "claim": self.claim,
            "group": self.group,
            "bound": self.bound,
            "outcome": self.outcome,
            "counterexamples": self.counterexamples,
            "elapsed_seconds": round(self.elapsed_seconds, 6),
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_json())


def _finish(claim: str, G: GroupSpec | None, bound: int, bad: list[str], t0: float) -> VerificationReport:
    return VerificationReport(
        claim=claim,
        group=G.describe() if G is not None else None,
        bound=bound,
        outcome="pass" if not bad else "fail",
        counterexamples=bad,
        elapsed_seconds=time.perf_counter() - t0,
    )


# -- surjectivity and right inverses -----------------------------------------------


def _class_keys(G: GroupSpec) -> set[tuple]:
    return {C.data_key() for C in enumerate_classes(G)}


def psi1_image(G: GroupSpec) -> set[tuple]:
    return {psi1(X, G).data_key() for X in iter_regular_subgroups(G)}


def psi2_image(G: GroupSpec) -> set[tuple]:
    return {psi2(P, G).data_key() for P in iter_parabolic_products(G)}


def verify_surjectivity(G: GroupSpec, which: str) -> VerificationReport:
    """Compare enumerate_classes(G) with the full image of psi1 or psi2."""
    t0 = time.perf_counter()
    if which not in ("psi1", "psi2"):
        raise InputError(f"which must be 'psi1' or 'psi2', got {which!r}")
    target = _class_keys(G)
    image = psi1_image(G) if which == "psi1" else psi2_image(G)
    bad = [f"class not reached: lambda={Partition(k[0])} eps={dict(k[1])}" for k in sorted(target - image)]
    bad += [f"image outside the class list: lambda={Partition(k[0])}" for k in sorted(image - target)]
    return _finish(f"{which}-surjective", G, G.dim, bad, t0)


def verify_right_inverse(G: GroupSpec, which: str) -> VerificationReport:
    """Check psi(phi(C)) == C for every class C of G."""
    t0 = time.perf_counter()
    if which not in ("phi1", "phi2"):
        raise InputError(f"which must be 'phi1' or 'phi2', got {which!r}")
    bad = []
    for C in enumerate_classes(G):
        if which == "phi1":
            back = psi1(phi1(C), G)
        else:
            back = psi2(phi2(C), G)
        if not back.same_class(C):
            bad.append(f"psi({which}({C.lam}, {C.eps})) gave ({back.lam}, {back.eps})")
    return _finish(f"{which}-right-inverse", G, G.dim, bad, t0)


def verify_psi2_restricted_injective(G: GroupSpec) -> VerificationReport:
    """psi2 restricted to at most one classical parabolic factor is injective."""
    t0 = time.perf_counter()
    seen: dict[tuple, object] = {}
    bad = []
    for P in iter_parabolic_products(G, max_factors=1):
        key = psi2(P, G).data_key()
        if key in seen and seen[key] != P:
            bad.append(f"{seen[key].describe()} and {P.describe()} both map to {Partition(key[0])}")
        seen[key] = P
    return _finish("psi2-injective-r<=1", G, G.dim, bad, t0)


def so_connected_only_psi1_image(G: GroupSpec) -> set[tuple]:
    """Image of the regular-element map over GL blocks and connected SO
    factors only (the p=2 orthogonal variant without full O factors);
    products landing outside the group's class list are skipped."""
    from .balacarter import _classical_dim_multisets

    if G.family is not Family.SO or not G.p2:
        raise InputError("the connected-only variant applies to SO at p=2")
    image: set[tuple] = set()
    for a in range(G.dim // 2 + 1):
        rest = G.dim - 2 * a
        for alpha in iter_partitions(a):
            for dims in _classical_dim_multisets(G, rest):
                classical = Partition()
                for m in dims:
                    blocks, _ = regular_jordan_blocks(GroupSpec(Family.SO, m, G.char))
                    classical = classical + blocks
                try:
                    C = combine(Partition(alpha), classical, distinguished_eps(G, classical), G)
                except InputError:
                    continue
                image.add(C.data_key())
    return image


# -- decomposition properties -------------------------------------------------------


def iter_admissible_beta(bound: int) -> Iterator[Partition]:
    """Partitions with at most one part 1, other parts even of multiplicity
    at most 2, and an even number of parts when no part equals 1."""
    for total in range(1, bound + 1):
        for ones in (0, 1):
            rest = total - ones
            if rest % 2 != 0:
                continue
            for halves in iter_partitions(rest // 2):
                if any(halves.count(v) > 2 for v in set(halves)):
                    continue
                parts = tuple(2 * p for p in halves) + ((1,) * ones)
                if ones == 0 and len(parts) % 2 != 0:
                    continue
                yield Partition(parts)


def _two_coloring_exists(beta: Partition) -> bool:
    parts = beta.parts
    for mask in range(1 << len(parts)):
        left = tuple(p for i, p in enumerate(parts) if mask >> i & 1)
        right = tuple(p for i, p in enumerate(parts) if not mask >> i & 1)
        if satisfies_difference_condition(Partition(left)) and satisfies_difference_condition(
            Partition(right)
        ):
            return True
    return False


def verify_proposition(bound: int = 30) -> VerificationReport:
    """Exhaustive check of the decomposition properties for admissible data:

      (i)   difference condition forces a single piece;
      (ii)  pieces without a part 1 have an even number of parts;
      (iii) every piece satisfies the difference condition;
      (iv)  the third piece vanishes iff some 2-coloring of the parts splits
            the data into two difference-condition partitions;
      (c)   the first-pass remainder has no bad sequence;
      plus multiset conservation of the pieces.
    """
    t0 = time.perf_counter()
    bad = []
    for beta in iter_admissible_beta(bound):
        G = GroupSpec(Family.SO, beta.total if beta.total >= 1 else 1, Char.TWO)
        dec = decompose(beta, G)
        pieces = dec.pieces()
        if (dec.beta1 + dec.beta2 + dec.beta3) != beta:
            bad.append(f"{beta}: pieces do not conserve the multiset")
            continue
        if satisfies_difference_condition(beta) and dec.beta1 != beta:
            bad.append(f"(i) {beta}: difference condition holds but beta1={dec.beta1}")
        for piece in pieces:
            if piece and piece.multiplicity(1) == 0 and len(piece) % 2 != 0:
                bad.append(f"(ii) {beta}: piece {piece} has an odd number of parts")
            if not satisfies_difference_condition(piece):
                bad.append(f"(iii) {beta}: piece {piece} violates the difference condition")
        if (not dec.beta3) != _two_coloring_exists(beta):
            bad.append(f"(iv) {beta}: beta3={dec.beta3} disagrees with the 2-coloring search")
        if has_bad_sequence(dec.trace1.zeros()):
            bad.append(f"(c) {beta}: first-pass remainder {dec.trace1.zeros()} has a bad sequence")
    return _finish("decomposition-properties", None, bound, bad, t0)


# -- extra classes ------------------------------------------------------------------


def count_extra_classes(G: GroupSpec) -> int:
    """Number of classes whose minimal-Levi remainder is not a Richardson class."""
    from .balacarter import is_extra_class

    return sum(1 for C in enumerate_classes(G) if C.split_tag != "II" and is_extra_class(C))


# -- minimal Levi splitting ----------------------------------------------------------


def _valid_splittings(C: ClassParam) -> list[tuple[Partition, Partition]]:
    """All (alpha, beta) with lam = double(alpha) + beta, beta of distinguished
    shape, and the eps data realized by the split."""
    G = C.group
    per_value: list[list[tuple[int, int]]] = []
    for x, m in C.lam.multiplicities().items():
        options = []
        cap = 1 if x == 1 else 2
        for take in range(0, min(m, cap) + 1):
            if (m - take) % 2 != 0:
                continue
            if G.p2:
                if x % 2 == 1 and x > 1 and take > 0:
                    continue
                if x % 2 == 0 and (take >= 1) != (C.eps[x] == 1):
                    continue
            options.append((x, take))
        per_value.append(options)
    out = []
    for picks in product(*per_value):
        beta_parts: list[int] = []
        alpha_parts: list[int] = []
        for x, take in picks:
            m = C.lam.multiplicity(x)
            beta_parts.extend([x] * take)
            alpha_parts.extend([x] * ((m - take) // 2))
        beta = Partition(tuple(beta_parts))
        if not G.p2 and any(beta.multiplicity(v) > 1 for v in beta.values()):
            continue
        out.append((Partition(tuple(alpha_parts)), beta))
    return out


def verify_minimal_levi(G: GroupSpec, preimage_max_dim: int = 16) -> VerificationReport:
    """Brute-force the splitting claims:

      - every class admits exactly one valid (alpha, beta) splitting, it is
        the one minimal_levi extracts, and beta is distinguished;
      - (Levi, distinguished class) pairs biject with classes, counting the
        split pairs twice;
      - (dim <= preimage_max_dim) among all regular-subgroup preimages of a
        class, the one with the most GL factors is unique and equals phi1.
    """
    t0 = time.perf_counter()
    bad = []
    classes = enumerate_classes(G)
    untagged = [C for C in classes if C.split_tag != "II"]
    if G.family is Family.GL:
        return _finish("minimal-levi", G, G.dim, bad, t0)
    for C in untagged:
        alpha, beta, eps_beta = minimal_levi(C)
        splittings = _valid_splittings(C)
        if len(splittings) != 1:
            bad.append(f"{C.lam}, {C.eps}: {len(splittings)} valid splittings")
            continue
        if splittings[0] != (alpha, beta):
            bad.append(f"{C.lam}: extraction {alpha}|{beta} vs brute force {splittings[0]}")
        if beta and not is_distinguished(G.classical_factor(beta.total), beta, eps_beta):
            bad.append(f"{C.lam}: extracted remainder {beta} is not distinguished")
        if not combine(alpha, beta, eps_beta, G).same_class(C):
            bad.append(f"{C.lam}: combine does not invert the extraction")
    # bijection of (Levi, distinguished class) pairs with classes
    seen: dict[tuple, tuple] = {}
    count = 0
    for a in range(G.dim // 2 + 1):
        rest = G.dim - 2 * a
        for alpha_parts in iter_partitions(a):
            alpha = Partition(alpha_parts)
            for beta_parts in iter_partitions(rest):
                beta = Partition(beta_parts)
                eps_beta = distinguished_eps(G, beta)
                if beta:
                    H = G.classical_factor(beta.total)
                    try:
                        if not is_valid_class(H, beta, eps_beta):
                            continue
                    except InputError:
                        continue
                    if not is_distinguished(H, beta, eps_beta):
                        continue
                C = combine(alpha, beta, eps_beta, G)
                key = C.data_key()
                pair = (alpha.parts, beta.parts)
                if key in seen and seen[key] != pair:
                    bad.append(f"pairs {seen[key]} and {pair} give the same class {C.lam}")
                seen[key] = pair
                doubled = G.family is Family.SO and splits_in_so(C.lam, C.eps, G.char)
                count += 2 if doubled else 1
    if count != len(classes):
        bad.append(f"(Levi, class) pairs count {count} != class count {len(classes)}")
    if set(seen) != {C.data_key() for C in untagged}:
        bad.append("(Levi, class) pairs miss some classes")
    # phi1 maximality among genuine preimages: phi1(C) attains the maximal
    # number of GL factors and, among those, the maximal number of classical
    # factors, and with that tiebreak it is unique.  (GL count alone does not
    # single it out: a remainder part m can also come from a larger factor
    # whose regular class has blocks (m, 1)-style, e.g. O_3 versus O_2 O_1.)
    if G.dim <= preimage_max_dim:
        by_class: dict[tuple, list[RegularSubgroupDescriptor]] = defaultdict(list)
        for X in iter_regular_subgroups(G):
            by_class[psi1(X, G).data_key()].append(X)
        for C in untagged:
            cands = by_class.get(C.data_key(), [])
            if not cands:
                bad.append(f"{C.lam}: no psi1 preimage")
                continue
            best = max((len(X.gl_parts), len(X.cl_parts)) for X in cands)
            top = [X for X in cands if (len(X.gl_parts), len(X.cl_parts)) == best]
            if len(top) != 1 or top[0] != phi1(C):
                bad.append(f"{C.lam}: factor-maximal preimage not unique or not phi1")
    return _finish("minimal-levi", G, G.dim, bad, t0)


# -- batch runner ---------------------------------------------------------------------


def _group_sweep(max_dim: int) -> list[GroupSpec]:
    specs = []
    for n in range(1, max_dim + 1):
        specs.append(GroupSpec(Family.GL, n, Char.GOOD))
        for char in (Char.TWO, Char.GOOD):
            if n % 2 == 0:
                specs.append(GroupSpec(Family.SP, n, char))
            specs.append(GroupSpec(Family.SO, n, char))
    return specs


def run_all(max_dim: int = 24, surjectivity_max_dim: int = 16, beta_bound: int = 30) -> list[VerificationReport]:
    """The release verification battery at the default bounds."""
    reports = []
    for G in _group_sweep(surjectivity_max_dim):
        reports.append(verify_surjectivity(G, "psi1"))
        reports.append(verify_surjectivity(G, "psi2"))
        reports.append(verify_psi2_restricted_injective(G))
    for G in _group_sweep(max_dim):
        reports.append(verify_right_inverse(G, "phi1"))
        reports.append(verify_right_inverse(G, "phi2"))
        reports.append(verify_minimal_levi(G))
    reports.append(verify_proposition(beta_bound))
    return reports

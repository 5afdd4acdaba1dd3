"""Recursive decomposition of distinguished Jordan data into Richardson pieces.

The orthogonal p=2 case runs a left-to-right scan ``f`` over the indexed
parts twice; the symplectic p=2 case splits off one copy of each repeated
part; in good characteristic the data is already a single piece.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classes import Family, GroupSpec
from .errors import InputError
from .partitions import Partition


@dataclass(frozen=True)
class FAssignment:
    """A 0/1 scan assignment over the indexed parts of a partition."""

    beta: Partition
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bits) != len(self.beta):
            raise InputError("assignment length does not match the partition")
        if any(b not in (0, 1) for b in self.bits):
            raise InputError("assignment bits must be 0 or 1")
        if self.bits and self.bits[0] != 1:
            raise InputError("the first part is always assigned 1")

    def ones(self) -> Partition:
        return Partition(tuple(p for p, b in zip(self.beta.parts, self.bits) if b == 1))

    def zeros(self) -> Partition:
        return Partition(tuple(p for p, b in zip(self.beta.parts, self.bits) if b == 0))


def apply_f(beta: Partition) -> FAssignment:
    """One scan pass: assign each part 0 or 1, left to right.

    State: ell = count assigned 1 so far, i = count assigned 0 so far,
    beta_k = value of the most recent part assigned 1.  The j-th part is
    assigned 0 iff one of the following holds (out-of-range parts read 0):

      (1) ell even and beta_k - beta_j <= 2
      (2) ell even, i odd, beta_{j+1} in {0, 1}
      (3) ell even, i odd, beta_{j+1} - beta_{j+3} <= 2,
          beta_{j+3} != 0, beta_j - beta_{j+3} >= 3

    and 1 otherwise.  Condition (1) is treated as false while ell = 0
    (beta_k undefined), which also forces the first part to 1.
    """
    bits: list[int] = []
    ell = 0
    i = 0
    beta_k = 0
    for j in range(1, len(beta) + 1):
        bj = beta.part(j)
        cond1 = ell % 2 == 0 and ell > 0 and beta_k - bj <= 2
        cond2 = ell % 2 == 0 and i % 2 == 1 and beta.part(j + 1) in (0, 1)
        cond3 = (
            ell % 2 == 0
            and i % 2 == 1
            and beta.part(j + 1) - beta.part(j + 3) <= 2
            and beta.part(j + 3) != 0
            and bj - beta.part(j + 3) >= 3
        )
        bit = 0 if (cond1 or cond2 or cond3) else 1
        if bit == 1:
            ell += 1
            beta_k = bj
        else:
            i += 1
        bits.append(bit)
    return FAssignment(beta, tuple(bits))


@dataclass(frozen=True)
class Decomposition:
    """beta = beta1 + beta2 + beta3 with the two scan traces that produced it."""

    beta1: Partition
    beta2: Partition
    beta3: Partition
    trace1: FAssignment
    trace2: FAssignment

    def __post_init__(self) -> None:
        if (self.beta1 + self.beta2 + self.beta3).parts != self.trace1.beta.parts:
            raise InputError("pieces do not reassemble the decomposed partition")
        if self.trace1.ones() != self.beta1 or self.trace1.zeros().parts != self.trace2.beta.parts:
            raise InputError("first trace inconsistent with the pieces")
        if self.trace2.ones() != self.beta2 or self.trace2.zeros() != self.beta3:
            raise InputError("second trace inconsistent with the pieces")

    def pieces(self) -> tuple[Partition, Partition, Partition]:
        return (self.beta1, self.beta2, self.beta3)

    def nonzero_pieces(self) -> tuple[Partition, ...]:
        return tuple(p for p in self.pieces() if p)


def validate_distinguished_shape(beta: Partition, G: GroupSpec) -> None:
    """Reject data outside the distinguished shape, naming the violated condition."""
    if G.family not in (Family.SP, Family.SO):
        raise InputError("decomposition requires a symplectic or special orthogonal group")
    mults = beta.multiplicities()
    if not G.p2:
        for x, m in mults.items():
            if m > 1:
                raise InputError(
                    f"part {x} has multiplicity {m}; distinct parts required in odd characteristic"
                )
            want_odd = G.family is Family.SO
            if (x % 2 == 1) != want_odd:
                parity = "odd" if want_odd else "even"
                raise InputError(f"part {x} is not {parity}, as the family requires")
        return
    if G.family is Family.SP:
        for x, m in mults.items():
            if x % 2 == 1:
                raise InputError(f"odd part {x} is not allowed in symplectic distinguished data")
            if m > 2:
                raise InputError(f"part {x} has multiplicity {m} > 2")
        return
    if mults.get(1, 0) > 1:
        raise InputError(f"more than one part equal to 1 (multiplicity {mults[1]})")
    for x, m in mults.items():
        if x == 1:
            continue
        if x % 2 == 1:
            raise InputError(f"odd part {x} greater than 1 is not allowed")
        if m > 2:
            raise InputError(f"part {x} has multiplicity {m} > 2")
    if mults.get(1, 0) == 0 and len(beta) % 2 != 0:
        raise InputError("without a part equal to 1 the number of parts must be even")


def decompose(beta: Partition, G: GroupSpec) -> Decomposition:
    """Split distinguished blocks into at most three Richardson pieces.

    Good characteristic: (beta, 0, 0).  Sp at p=2: beta2 takes one copy of
    each repeated part.  SO at p=2: two passes of the scan map.
    """
    validate_distinguished_shape(beta, G)
    if not G.p2:
        trace1 = FAssignment(beta, (1,) * len(beta))
        trace2 = FAssignment(Partition(), ())
        return Decomposition(beta, Partition(), Partition(), trace1, trace2)
    if G.family is Family.SP:
        seen: set[int] = set()
        bits = []
        for p in beta.parts:
            bits.append(1 if p not in seen else 0)
            seen.add(p)
        trace1 = FAssignment(beta, tuple(bits))
        beta2 = trace1.zeros()
        trace2 = FAssignment(beta2, (1,) * len(beta2))
        return Decomposition(trace1.ones(), beta2, Partition(), trace1, trace2)
    trace1 = apply_f(beta)
    delta = trace1.zeros()
    trace2 = apply_f(delta)
    return Decomposition(trace1.ones(), trace2.ones(), trace2.zeros(), trace1, trace2)


def satisfies_difference_condition(beta: Partition) -> bool:
    """For every even index i with beta_{i+1} >= 1, beta_i - beta_{i+1} >= 3."""
    for i in range(2, len(beta) + 1, 2):
        if beta.part(i + 1) >= 1 and beta.part(i) - beta.part(i + 1) < 3:
            return False
    return True


def has_bad_sequence(beta: Partition) -> bool:
    """An even index i with beta_i = beta_{i+1} > beta_{i+2} = beta_{i+3},
    gap exactly 2, and beta_{i+2} != 0."""
    for i in range(2, len(beta) + 1, 2):
        a, b, c, d = (beta.part(i + k) for k in range(4))
        if a == b > c == d and b - c == 2 and c != 0:
            return True
    return False


def render_trace(assignment: FAssignment, name: str = "beta") -> str:
    """Three-row array: parts mapped to 1, the partition, parts mapped to 0."""
    labels = ["map to 1:", f"{name}:", "map to 0:"]
    width = max(len(lbl) for lbl in labels)
    cells: list[list[str]] = [[], [], []]
    for p, b in zip(assignment.beta.parts, assignment.bits):
        s = str(p)
        blank = " " * len(s)
        cells[0].append(s if b == 1 else blank)
        cells[1].append(s)
        cells[2].append(s if b == 0 else blank)
    lines = []
    for lbl, row in zip(labels, cells):
        lines.append((f"{lbl:<{width}} " + " ".join(row)).rstrip())
    return "\n".join(lines)

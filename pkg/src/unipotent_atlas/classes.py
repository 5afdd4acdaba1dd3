"""Unipotent classes of classical groups as (Jordan blocks, epsilon) data.

A class of GL_n, Sp_n, SO_n, or O_n is recorded as a partition of n (the
Jordan block sizes) together with a map ``eps`` from part values to
{-1, 0, +1}.  In characteristic 2 the pair (blocks, eps) separates classes
that share block sizes; in good characteristic eps is redundant but stored
anyway so the data model is uniform.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from itertools import product

from .errors import InputError, ResourceLimitError
from .partitions import Partition, iter_partitions

#: Largest dimension enumerate_classes accepts unless the caller raises it.
DEFAULT_ENUM_BOUND = 40


class Family(str, Enum):
    GL = "gl"
    SP = "sp"
    SO = "so"
    O = "o"


class Char(str, Enum):
    """Characteristic regime: 2, or anything else ("odd" covers char 0 too)."""

    TWO = "2"
    GOOD = "odd"


@dataclass(frozen=True, order=True)
class GroupSpec:
    family: Family
    dim: int
    char: Char = Char.TWO

    def __post_init__(self) -> None:
        if not isinstance(self.dim, int) or self.dim < 1:
            raise InputError(f"group dimension must be a positive integer, got {self.dim!r}")
        if self.dim > 10_000:
            raise InputError(f"group dimension {self.dim} exceeds the supported bound")
        if self.family is Family.SP and self.dim % 2 != 0:
            raise InputError(f"Sp requires even dimension, got {self.dim}")

    @property
    def p2(self) -> bool:
        return self.char is Char.TWO

    @property
    def is_orthogonal(self) -> bool:
        return self.family in (Family.SO, Family.O)

    @property
    def delta(self) -> int:
        """+1 for Sp or orthogonal at p=2, -1 for orthogonal in good characteristic."""
        if self.family is Family.GL:
            return 0
        if self.family is Family.SP or self.p2:
            return 1
        return -1

    @property
    def rank(self) -> int:
        if self.family is Family.GL:
            return self.dim
        return self.dim // 2

    def classical_factor(self, dim: int) -> GroupSpec:
        """Spec of a classical factor of the same family/characteristic."""
        if self.family not in (Family.SP, Family.SO):
            raise InputError(f"no classical factor family for {self.family.value}")
        return GroupSpec(self.family, dim, self.char)

    def describe(self) -> str:
        name = {Family.GL: "GL", Family.SP: "Sp", Family.SO: "SO", Family.O: "O"}[self.family]
        suffix = "" if self.family is Family.GL else (" (p=2)" if self.p2 else " (p odd)")
        return f"{name}{self.dim}{suffix}"


@dataclass(frozen=True, order=True)
class EpsilonMap:
    """Map from part values to {-1, 0, +1}, keyed by value (not block index)."""

    items: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        items = tuple(sorted(((int(x), int(v)) for x, v in self.items), reverse=True))
        seen = set()
        for x, v in items:
            if x < 1:
                raise InputError(f"epsilon keyed by non-positive part {x}")
            if v not in (-1, 0, 1):
                raise InputError(f"epsilon value {v} for part {x} not in {{-1, 0, 1}}")
            if x in seen:
                raise InputError(f"duplicate epsilon entry for part {x}")
            seen.add(x)
        object.__setattr__(self, "items", items)

    @classmethod
    def from_dict(cls, mapping: dict[int, int]) -> EpsilonMap:
        return cls(tuple(mapping.items()))

    @classmethod
    def parse(cls, text: str) -> EpsilonMap:
        """Parse ``"8:1,4:1,2:0"`` syntax; empty string is the empty map."""
        s = text.strip()
        if not s:
            return cls()
        entries = []
        for chunk in s.split(","):
            try:
                x_s, v_s = chunk.split(":", 1)
                entries.append((int(x_s), int(v_s)))
            except ValueError as exc:
                raise InputError(f"cannot parse epsilon chunk {chunk!r} in {text!r}") from exc
        return cls(tuple(entries))

    def __str__(self) -> str:
        return ",".join(f"{x}:{v}" for x, v in self.items)

    def __getitem__(self, x: int) -> int:
        for key, value in self.items:
            if key == x:
                return value
        raise InputError(f"epsilon has no entry for part {x}")

    def get(self, x: int, default: int | None = None) -> int | None:
        for key, value in self.items:
            if key == x:
                return value
        return default

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(x for x, _ in self.items)

    def as_dict(self) -> dict[int, int]:
        return dict(self.items)

    def values_by_part(self) -> tuple[int, ...]:
        """Epsilon values listed by decreasing part value."""
        return tuple(v for _, v in self.items)


@dataclass(frozen=True)
class ClassParam:
    """A unipotent class: group, Jordan blocks, epsilon, optional split tag.

    The tag ("I"/"II") distinguishes the two SO-classes of an O-class that
    splits; it is attached by enumeration and by the O-vs-SO logic.  Values
    produced by the classification maps are tag-agnostic (tag None).
    """

    group: GroupSpec
    lam: Partition
    eps: EpsilonMap
    split_tag: str | None = None

    def __post_init__(self) -> None:
        if not is_valid_class(self.group, self.lam, self.eps):
            raise InputError(
                f"({self.lam}, {self.eps}) is not a valid class of {self.group.describe()}"
            )
        if self.split_tag is not None:
            if self.split_tag not in ("I", "II"):
                raise InputError(f"split tag must be 'I' or 'II', got {self.split_tag!r}")
            if self.group.family is not Family.SO or not splits_in_so(self.lam, self.eps, self.group.char):
                raise InputError("split tag on a class that does not split in SO")

    def untagged(self) -> ClassParam:
        return self if self.split_tag is None else replace(self, split_tag=None)

    def same_class(self, other: ClassParam) -> bool:
        """Equality of the (group, blocks, eps) data, ignoring split tags."""
        return self.group == other.group and self.lam == other.lam and self.eps == other.eps

    def key(self):
        """Canonical sort key: blocks lexicographically decreasing, then eps, then tag."""
        return (
            tuple(-p for p in self.lam.parts),
            self.eps.values_by_part(),
            self.split_tag or "",
        )

    def data_key(self):
        """Hashable (blocks, eps) identity used by the verifiers."""
        return (self.lam.parts, self.eps.items)

    def to_json(self) -> dict:
        return {
            "family": self.group.family.value,
            "dim": self.group.dim,
            "char": self.group.char.value,
            "lambda": list(self.lam.parts),
            "eps": {str(x): v for x, v in self.eps.items},
            "split": self.split_tag,
        }


# -- validity -----------------------------------------------------------------


def _lambda_admissible(G: GroupSpec, lam: Partition) -> bool:
    if G.family is Family.GL:
        return True
    mults = lam.multiplicities()
    if G.is_orthogonal and not G.p2:
        # good characteristic, orthogonal: every even part has even multiplicity
        if any(x % 2 == 0 and m % 2 != 0 for x, m in mults.items()):
            return False
    else:
        # symplectic (any char) or orthogonal at p=2: every odd part > 1 has even multiplicity
        if any(x % 2 == 1 and x > 1 and m % 2 != 0 for x, m in mults.items()):
            return False
    if G.family is Family.SO and G.p2 and G.dim % 2 == 0:
        # membership in SO rather than O: even number of Jordan blocks
        if len(lam) % 2 != 0:
            return False
    return True


def canonical_eps(G: GroupSpec, lam: Partition) -> EpsilonMap:
    """The forced eps values; free slots (p=2, even part of even multiplicity) get 0."""
    if G.family is Family.GL:
        return EpsilonMap(tuple((x, 0) for x in lam.values()))
    entries = []
    for x, m in lam.multiplicities().items():
        if not G.p2:
            entries.append((x, G.delta if x % 2 == 0 else -G.delta))
        elif x % 2 == 1:
            entries.append((x, -1))
        else:
            entries.append((x, 1 if m % 2 == 1 else 0))
    return EpsilonMap(tuple(entries))


def is_valid_class(G: GroupSpec, lam: Partition, eps: EpsilonMap) -> bool:
    """Whether (lam, eps) parameterizes a unipotent class of G.

    Raises InputError if |lam| != G.dim or the eps domain differs from the
    set of part values of lam.
    """
    if lam.total != G.dim:
        raise InputError(f"partition of {lam.total} does not match dimension {G.dim}")
    if eps.domain != frozenset(lam.values()):
        raise InputError(
            f"epsilon domain {sorted(eps.domain)} does not match part values {sorted(set(lam.values()))}"
        )
    if not _lambda_admissible(G, lam):
        return False
    if G.family is Family.GL:
        return all(v == 0 for _, v in eps.items)
    mults = lam.multiplicities()
    for x, m in mults.items():
        v = eps[x]
        if not G.p2:
            want = G.delta if x % 2 == 0 else -G.delta
            if v != want:
                return False
        else:
            if x % 2 == 1 and v != -1:
                return False
            if x % 2 == 0:
                if m % 2 == 1 and v != 1:
                    return False
                if m % 2 == 0 and v not in (0, 1):
                    return False
    return True


def splits_in_so(lam: Partition, eps: EpsilonMap, char: Char) -> bool:
    """Whether the O-class forms two SO-classes: every part even with eps != 1.

    In good characteristic this reduces to all parts and multiplicities even,
    since eps is then -1 on every even part of a valid orthogonal class.
    """
    del char  # the criterion reads the same in both regimes
    if not lam:
        return False
    return all(x % 2 == 0 for x in lam.values()) and all(v != 1 for _, v in eps.items)


def is_distinguished(G: GroupSpec, lam: Partition, eps: EpsilonMap) -> bool:
    """Whether the class meets no proper Levi subgroup of G."""
    if not is_valid_class(G, lam, eps):
        raise InputError(f"({lam}, {eps}) is not a valid class of {G.describe()}")
    if G.family is Family.GL:
        return len(lam) == 1
    mults = lam.multiplicities()
    if not G.p2:
        return all(m == 1 for m in mults.values())
    if mults.get(1, 0) > 1:
        return False
    return all(m <= 2 and eps[x] == 1 for x, m in mults.items() if x != 1)


# -- class enumeration -----------------------------------------------------------


def _eps_choices(G: GroupSpec, lam: Partition) -> list[EpsilonMap]:
    if G.family is Family.GL or not G.p2:
        return [canonical_eps(G, lam)]
    forced = []
    free = []
    for x, m in lam.multiplicities().items():
        if x % 2 == 1:
            forced.append((x, -1))
        elif m % 2 == 1:
            forced.append((x, 1))
        else:
            free.append(x)
    out = []
    for values in product((0, 1), repeat=len(free)):
        out.append(EpsilonMap(tuple(forced) + tuple(zip(free, values))))
    return out


def enumerate_classes(G: GroupSpec, max_dim: int = DEFAULT_ENUM_BOUND) -> list[ClassParam]:
    """All unipotent classes of G, canonically sorted.

    SO-classes that split appear twice, tagged "I" and "II" (tag "I" sorts
    first; the two classes carry identical (blocks, eps) data).
    """
    if G.dim > max_dim:
        raise ResourceLimitError(
            f"dimension {G.dim} exceeds the enumeration bound {max_dim}; raise max_dim explicitly"
        )
    out: list[ClassParam] = []
    for parts in iter_partitions(G.dim):
        lam = Partition(parts)
        if not _lambda_admissible(G, lam):
            continue
        for eps in _eps_choices(G, lam):
            if G.family is Family.SO and splits_in_so(lam, eps, G.char):
                out.append(ClassParam(G, lam, eps, "I"))
                out.append(ClassParam(G, lam, eps, "II"))
            else:
                out.append(ClassParam(G, lam, eps))
    out.sort(key=ClassParam.key)
    return out


# -- minimal Levi extraction and its inverse ------------------------------------


def minimal_levi(C: ClassParam) -> tuple[Partition, Partition, EpsilonMap]:
    """GL block sizes alpha and distinguished remainder (beta, eps_beta).

    The blocks satisfy lam = double(alpha) + beta, beta is distinguished in
    the classical factor of dimension |beta|, and alpha has the maximal
    number of parts among such splittings.  Extraction rules: in good
    characteristic beta takes one copy of each part of odd multiplicity; at
    p=2 beta takes two copies of each even part with eps 1 and even
    multiplicity, one copy of each even part of odd multiplicity, and one
    copy of the part 1 when its multiplicity is odd.
    """
    G = C.group
    if G.family is Family.O:
        raise InputError("minimal Levi extraction requires gl, sp, or so")
    if G.family is Family.GL:
        return C.lam, Partition(), EpsilonMap()
    alpha_parts: list[int] = []
    beta_parts: list[int] = []
    for x, m in C.lam.multiplicities().items():
        if not G.p2:
            take = m % 2
        elif x == 1:
            take = m % 2
        elif x % 2 == 1:
            take = 0
        elif C.eps[x] == 1:
            take = 1 if m % 2 == 1 else 2
        else:
            take = 0
        beta_parts.extend([x] * take)
        alpha_parts.extend([x] * ((m - take) // 2))
    beta = Partition(tuple(beta_parts))
    return Partition(tuple(alpha_parts)), beta, distinguished_eps(G, beta)


def distinguished_eps(G: GroupSpec, beta: Partition) -> EpsilonMap:
    """The eps carried by a distinguished class with blocks beta."""
    entries = []
    for x in beta.values():
        if not G.p2:
            entries.append((x, G.delta if x % 2 == 0 else -G.delta))
        else:
            entries.append((x, 1 if x % 2 == 0 else -1))
    return EpsilonMap(tuple(entries))


def combine(alpha: Partition, beta: Partition, eps_beta: EpsilonMap, G: GroupSpec) -> ClassParam:
    """Reassemble the class with blocks double(alpha) + beta.

    At p=2 a part value gets eps 1 exactly when beta carries it with
    eps_beta 1; parts contributed only by the GL blocks get eps 0.  The
    result is validated, so family parity violations raise InputError.
    """
    if G.family is Family.O:
        raise InputError("combine requires gl, sp, or so")
    if G.family is Family.GL:
        if beta:
            raise InputError("GL classes have no classical factor")
        if alpha.total != G.dim:
            raise InputError(f"GL blocks of {alpha.total} do not fill dimension {G.dim}")
        return ClassParam(G, alpha, canonical_eps(G, alpha))
    if 2 * alpha.total + beta.total != G.dim:
        raise InputError(
            f"2*{alpha.total} + {beta.total} does not match dimension {G.dim}"
        )
    if eps_beta.domain != frozenset(beta.values()):
        raise InputError("eps_beta domain does not match beta's part values")
    lam = alpha.double() + beta
    if not G.p2:
        eps = canonical_eps(G, lam)
    else:
        entries = []
        for x in lam.values():
            if x % 2 == 1:
                entries.append((x, -1))
            else:
                entries.append((x, 1 if (beta.multiplicity(x) > 0 and eps_beta[x] == 1) else 0))
        eps = EpsilonMap(tuple(entries))
    return ClassParam(G, lam, eps)

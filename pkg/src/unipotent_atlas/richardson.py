"""Jordan blocks of regular elements and of Richardson classes of distinguished parabolics.

A distinguished parabolic of a classical group of rank m is encoded by the
multiplicities c(1..N) of the GL blocks of its Levi and the rank m0 of the
semisimple classical remainder.  The Jordan blocks of its Richardson class
are computed through the dual partition: each block size i contributes an
exponent to lambda*, following the family/characteristic pattern below
(negative exponents mean the descriptor is not distinguished):

  GL_m                 exponent(i) = c(i), and lambda = dual
  Sp_2m  (m0 = 0)      exponent(i) = 2c(i)
  SO_2m+1, p odd       exponent(i) = 2c(i), plus 1 at i = 2m0+1
  SO_2m+1, p = 2       exponent(i) = 2c(i) - 2 (i odd <= 2m0), 2c(i) + 2
                       (i even <= 2m0), 2c(i) at i = 2m0+1; lambda gains
                       a final part 1
  SO_2m,   p odd       exponent(i) = 2c(i), plus 1 at i = 2m0
  SO_2m,   p = 2       exponent(i) = 2c(i) - 2 (i odd), 2c(i) + 2 (i even),
                       for i <= 2m0

Descriptors are kept in a canonical form: the number N of distinct GL block
sizes sits in a fixed window around 2*m0 (see _N_WINDOW), and even
orthogonal groups absorb one GL_1 block into an SO_2 remainder.  On these
canonical descriptors the map to Jordan blocks is injective and its image
is exactly the set accepted by in_richardson_image.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .classes import EpsilonMap, Family, GroupSpec, canonical_eps, distinguished_eps
from .decomp import satisfies_difference_condition
from .errors import InputError, ResourceLimitError
from .partitions import Partition, iter_partitions

#: Largest rank enumerate_distinguished_parabolics accepts by default.
DEFAULT_RANK_BOUND = 32


@dataclass(frozen=True, order=True)
class ParabolicDescriptor:
    """Distinguished parabolic of a classical group: GL-block multiplicities plus remainder rank."""

    group: GroupSpec
    c: tuple[int, ...] = ()
    m0: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "c", tuple(int(x) for x in self.c))
        object.__setattr__(self, "m0", int(self.m0))
        G = self.group
        if G.family not in (Family.GL, Family.SP, Family.SO):
            raise InputError("parabolic descriptors exist for gl, sp, and so only")
        if self.m0 < 0 or any(x < 0 for x in self.c):
            raise InputError("descriptor multiplicities must be non-negative")
        if self.c and self.c[-1] == 0:
            raise InputError("descriptor c-vector must not have trailing zeros")
        weight = sum(i * ci for i, ci in enumerate(self.c, start=1)) + self.m0
        if weight != G.rank:
            raise InputError(
                f"descriptor weight {weight} does not match the rank {G.rank} of {G.describe()}"
            )
        N = len(self.c)
        if G.family is Family.GL:
            if self.m0 != 0:
                raise InputError("GL descriptors have no classical remainder")
            return
        chain = all(ci >= 1 for ci in self.c)
        if not chain:
            raise InputError("multiplicities must satisfy c(i) >= 1 for every i up to the largest block")
        if G.family is Family.SP:
            if self.m0 != 0:
                raise InputError("symplectic distinguished parabolics have no classical remainder")
            return
        window = _n_window(G, self.m0)
        if N not in window:
            raise InputError(
                f"descriptor with {N} block sizes and remainder rank {self.m0} is not "
                f"distinguished in {G.describe()} (need N in {sorted(window)})"
            )

    @classmethod
    def make(cls, group: GroupSpec, c: tuple[int, ...], m0: int) -> ParabolicDescriptor:
        """Build a descriptor, normalizing the GL_1 <-> SO_2 redundancy of even orthogonal groups."""
        c = tuple(int(x) for x in c)
        while c and c[-1] == 0:
            c = c[:-1]
        if group.family is Family.SO and group.dim % 2 == 0 and m0 == 0:
            if not c or c[0] < 1:
                raise InputError("cannot normalize: no GL_1 block to absorb into an SO_2 remainder")
            c = (c[0] - 1,) + c[1:]
            while c and c[-1] == 0:
                c = c[:-1]
            m0 = 1
        return cls(group, c, m0)

    @classmethod
    def borel(cls, group: GroupSpec) -> ParabolicDescriptor:
        """The Borel subgroup's descriptor (Levi a maximal torus)."""
        m = group.rank
        if group.family is Family.SO and group.dim % 2 == 0:
            if m < 2:
                raise InputError(f"{group.describe()} has no distinguished parabolics")
            return cls(group, (m - 1,), 1)
        return cls(group, (m,) if m else (), 0)

    # -- structure queries ---------------------------------------------------

    def block_sizes(self) -> Partition:
        """The GL block sizes of the Levi as a partition of rank - m0."""
        parts = []
        for i, ci in enumerate(self.c, start=1):
            parts.extend([i] * ci)
        return Partition(tuple(parts))

    def _remainder_simple_ranks(self) -> tuple[int, ...]:
        fam, m0 = self.group.family, self.m0
        if m0 == 0 or fam is Family.GL:
            return ()
        if fam is Family.SP or self.group.dim % 2 == 1:
            return (m0,)
        if m0 == 1:
            return ()  # SO_2 is a torus
        if m0 == 2:
            return (1, 1)  # SO_4 has two rank-1 factors
        return (m0,)

    def semisimple_rank(self) -> int:
        base = sum(ci * (i - 1) for i, ci in enumerate(self.c, start=1))
        return base + sum(self._remainder_simple_ranks())

    def max_simple_factor_rank(self) -> int:
        ranks = [i - 1 for i, ci in enumerate(self.c, start=1) if ci >= 1 and i >= 2]
        ranks.extend(self._remainder_simple_ranks())
        return max(ranks, default=0)

    def is_borel(self) -> bool:
        return self.semisimple_rank() == 0

    def levi_name(self) -> str:
        chunks = []
        for i, ci in enumerate(self.c, start=1):
            if ci >= 1:
                chunks.append(f"GL{i}^{ci}" if ci > 1 else f"GL{i}")
        fam = self.group.family
        if self.m0 > 0:
            if fam is Family.SP:
                chunks.append(f"Sp{2 * self.m0}")
            elif self.group.dim % 2 == 1:
                chunks.append(f"SO{2 * self.m0 + 1}")
            else:
                chunks.append(f"SO{2 * self.m0}")
        return " ".join(chunks) if chunks else "1"

    def describe(self) -> str:
        return f"c={self.block_sizes()};m0={self.m0}"


def _n_window(G: GroupSpec, m0: int) -> tuple[int, ...]:
    """Admissible counts of distinct GL block sizes for an SO descriptor."""
    if G.dim % 2 == 1:
        return (2 * m0, 2 * m0 + 1)
    if m0 < 1:
        return ()
    return (2 * m0 - 1, 2 * m0)


# -- Jordan blocks of regular elements --------------------------------------------


def regular_jordan_blocks(
    G: GroupSpec, nonidentity_component: bool = False
) -> tuple[Partition, EpsilonMap]:
    """Jordan blocks (and eps) of the regular unipotent class of G.

    ``nonidentity_component`` selects the regular class in the non-identity
    component of a full orthogonal group, which exists only for O_n with
    p = 2 and n even.
    """
    n = G.dim
    if nonidentity_component and not (G.family is Family.O and G.p2 and n % 2 == 0):
        raise InputError("a non-identity component regular class needs O_n, p=2, n even")
    if G.family is Family.GL:
        lam = Partition((n,))
        return lam, canonical_eps(G, lam)
    if G.family is Family.SP:
        lam = Partition((n,))
        return lam, distinguished_eps(G, lam)
    if nonidentity_component:
        lam = Partition((n,))
        return lam, distinguished_eps(G, lam)
    # special orthogonal (O_n in its identity component behaves the same)
    if n == 1:
        lam = Partition((1,))
    elif not G.p2:
        lam = Partition((n,) if n % 2 == 1 else (n - 1, 1))
    elif n % 2 == 1:
        lam = Partition((n - 1, 1))
    elif n == 2:
        lam = Partition((1, 1))
    else:
        lam = Partition((n - 2, 2))
    return lam, distinguished_eps(G, lam)


# -- Jordan blocks of Richardson classes ----------------------------------------


def _dual_exponents(P: ParabolicDescriptor) -> list[tuple[int, int]]:
    """(value, exponent) pairs describing lambda* for the Richardson class of P."""
    G = P.group
    N = len(P.c)

    def c(i: int) -> int:
        return P.c[i - 1] if 1 <= i <= N else 0

    pairs: list[tuple[int, int]] = []
    if G.family is Family.GL:
        return [(i, c(i)) for i in range(1, N + 1)]
    if G.family is Family.SP:
        return [(i, 2 * c(i)) for i in range(1, N + 1)]
    odd_dim = G.dim % 2 == 1
    top = 2 * P.m0 + 1 if odd_dim else 2 * P.m0
    for i in range(1, max(N, top) + 1):
        if G.p2:
            if i <= 2 * P.m0:
                e = 2 * c(i) + (2 if i % 2 == 0 else -2)
            else:
                e = 2 * c(i)
        else:
            e = 2 * c(i) + (1 if i == top else 0)
        if e < 0:
            raise InputError(
                f"descriptor {P.describe()} is not distinguished in {G.describe()} "
                f"(negative multiplicity at block size {i})"
            )
        pairs.append((i, e))
    return pairs


def richardson_jordan_blocks(P: ParabolicDescriptor) -> tuple[Partition, EpsilonMap]:
    """Jordan blocks (and eps) of the Richardson class of the distinguished parabolic P."""
    parts: list[int] = []
    for value, exponent in _dual_exponents(P):
        parts.extend([value] * exponent)
    lam = Partition(tuple(parts)).dual()
    if P.group.family is Family.SO and P.group.dim % 2 == 1 and P.group.p2:
        lam = lam + Partition((1,))
    if P.group.family is Family.GL:
        return lam, canonical_eps(P.group, lam)
    return lam, distinguished_eps(P.group, lam)


def in_richardson_image(G: GroupSpec, lam: Partition) -> bool:
    """Whether lam equals the Jordan blocks of the Richardson class of some
    distinguished parabolic of G."""
    if lam.total != G.dim:
        raise InputError(f"partition of {lam.total} does not match dimension {G.dim}")
    if G.family is Family.GL:
        return True
    if G.family not in (Family.SP, Family.SO):
        raise InputError("Richardson image membership is defined for gl, sp, and so")
    mults = lam.multiplicities()
    if G.family is Family.SP:
        return all(x % 2 == 0 and m == 1 for x, m in mults.items())
    if not G.p2:
        return all(x % 2 == 1 and m == 1 for x, m in mults.items())
    if G.dim % 2 == 1:
        if mults.get(1, 0) != 1:
            return False
        if any(x % 2 != 0 or m > 2 for x, m in mults.items() if x != 1):
            return False
        return satisfies_difference_condition(lam)
    if len(lam) % 2 != 0:
        return False
    if any(x % 2 != 0 or m > 2 for x, m in mults.items()):
        return False
    return satisfies_difference_condition(lam)


@lru_cache(maxsize=None)
def _enumerated(G: GroupSpec) -> tuple[ParabolicDescriptor, ...]:
    rank = G.rank
    out: list[ParabolicDescriptor] = []
    if G.family is Family.GL:
        for shape in iter_partitions(rank):
            c = [0] * (shape[0] if shape else 0)
            for p in shape:
                c[p - 1] += 1
            out.append(ParabolicDescriptor(G, tuple(c), 0))
    elif G.family is Family.SP:
        for c in _chain_vectors(rank):
            out.append(ParabolicDescriptor(G, c, 0))
    else:
        for m0 in range(rank + 1):
            window = _n_window(G, m0)
            for c in _chain_vectors(rank - m0):
                if len(c) in window:
                    out.append(ParabolicDescriptor(G, c, m0))
    out.sort(key=lambda P: (P.m0, P.c))
    return tuple(out)


def enumerate_distinguished_parabolics(
    G: GroupSpec, max_rank: int = DEFAULT_RANK_BOUND
) -> list[ParabolicDescriptor]:
    """All distinguished parabolic descriptors of G, in canonical form."""
    if G.rank > max_rank:
        raise ResourceLimitError(
            f"rank {G.rank} exceeds the enumeration bound {max_rank}; raise max_rank explicitly"
        )
    return list(_enumerated(G))


def _chain_vectors(weight: int) -> list[tuple[int, ...]]:
    """All c-vectors with c(i) >= 1 for i <= N and sum i*c(i) equal to weight."""
    out: list[tuple[int, ...]] = []
    if weight == 0:
        out.append(())
    N = 1
    while N * (N + 1) // 2 <= weight:
        base = N * (N + 1) // 2
        for extra in iter_partitions(weight - base, max_part=N):
            c = [1] * N
            for p in extra:
                c[p - 1] += 1
            out.append(tuple(c))
        N += 1
    return out


def parabolic_from_blocks(G: GroupSpec, lam: Partition) -> ParabolicDescriptor:
    """The unique descriptor whose Richardson class has Jordan blocks lam.

    Inversion is by exhaustive enumeration plus forward evaluation;
    injectivity of the forward map guarantees uniqueness.
    """
    if not in_richardson_image(G, lam):
        raise InputError(
            f"{lam} is not the Richardson class of a distinguished parabolic of {G.describe()}"
        )
    matches = [
        P
        for P in enumerate_distinguished_parabolics(G)
        if richardson_jordan_blocks(P)[0] == lam
    ]
    if len(matches) != 1:
        raise RuntimeError(
            f"expected exactly one descriptor for {lam} in {G.describe()}, found {len(matches)}"
        )
    return matches[0]

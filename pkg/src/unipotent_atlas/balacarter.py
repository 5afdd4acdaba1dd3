"""Subgroup parameterizations of unipotent classes and their labels.

Two surjections onto the unipotent classes are implemented, each with a
canonical right inverse:

  psi1: products of GL blocks and classical factors, sending each factor to
        its regular class (non-identity component of a full orthogonal
        factor when it exists);
  psi2: products of GL blocks and at most three distinguished parabolics of
        classical factors, sending each parabolic to its Richardson class.

phi1 reads the factors off the minimal Levi; phi2 additionally splits the
distinguished remainder into Richardson pieces.  A class is "extra" when
that splitting is proper, i.e. the remainder itself is not a Richardson
class; labels render the GL blocks as A-tokens and each Richardson piece as
a B/C/D token, with (a_j) notation when the piece's Levi has only rank-1
simple factors and a marked-diagram fallback otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .classes import (
    ClassParam,
    EpsilonMap,
    Family,
    GroupSpec,
    combine,
    distinguished_eps,
    minimal_levi,
    splits_in_so,
)
from .decomp import decompose
from .errors import InputError
from .partitions import Partition, iter_partitions
from .richardson import (
    ParabolicDescriptor,
    enumerate_distinguished_parabolics,
    parabolic_from_blocks,
    regular_jordan_blocks,
    richardson_jordan_blocks,
)


@dataclass(frozen=True, order=True)
class RegularSubgroupDescriptor:
    """A product of GL blocks and classical factors carrying regular elements.

    cl_parts lists (dimension, full) pairs; full means the whole orthogonal
    group rather than its identity component (the p=2 orthogonal case).
    """

    gl_parts: Partition
    cl_parts: tuple[tuple[int, bool], ...] = ()

    def __post_init__(self) -> None:
        cl = tuple(sorted(((int(m), bool(f)) for m, f in self.cl_parts), reverse=True))
        if any(m < 1 for m, _ in cl):
            raise InputError("classical factor dimensions must be positive")
        object.__setattr__(self, "cl_parts", cl)

    def validate_for(self, G: GroupSpec) -> None:
        if G.family is Family.GL:
            if self.cl_parts:
                raise InputError("GL admits no classical factors")
            if self.gl_parts.total != G.dim:
                raise InputError("GL block sizes must sum to the dimension")
            return
        if G.family not in (Family.SP, Family.SO):
            raise InputError("regular-subgroup descriptors exist for gl, sp, and so")
        if 2 * self.gl_parts.total + sum(m for m, _ in self.cl_parts) != G.dim:
            raise InputError("factor dimensions do not fill the natural module")
        full_expected = G.p2 and G.family is Family.SO
        for m, full in self.cl_parts:
            if full != full_expected:
                kind = "full orthogonal" if full_expected else "connected"
                raise InputError(f"classical factors of {G.describe()} must be {kind}")
            if G.family is Family.SP and m % 2 != 0:
                raise InputError(f"symplectic factor dimension {m} must be even")
        if G.family is Family.SO and G.p2:
            # at p=2, each odd-dimensional orthogonal summand contributes a line
            # to the bilinear radical, so their number equals dim mod 2
            odd_dims = sum(1 for m, _ in self.cl_parts if m % 2 == 1)
            if odd_dims != G.dim % 2:
                raise InputError(
                    f"{odd_dims} odd-dimensional factors cannot embed in {G.describe()} at p=2"
                )
            if G.dim % 2 == 0 and len(self.cl_parts) % 2 != 0:
                raise InputError("an even-dimensional SO group needs an even number of factors")

    def describe(self) -> str:
        chunks = [f"GL{p}" for p in self.gl_parts.parts]
        for m, full in self.cl_parts:
            chunks.append(f"O{m}" if full else f"Cl{m}")
        return " ".join(chunks) if chunks else "1"


@dataclass(frozen=True, order=True)
class ParabolicProduct:
    """GL blocks (carrying Borels) plus at most three distinguished parabolics."""

    gl_parts: Partition
    parabolics: tuple[ParabolicDescriptor, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "parabolics", tuple(sorted(self.parabolics)))

    def validate_for(self, G: GroupSpec) -> None:
        if G.family is Family.GL:
            if self.parabolics:
                raise InputError("GL admits no classical parabolic factors")
            if self.gl_parts.total != G.dim:
                raise InputError("GL block sizes must sum to the dimension")
            return
        if G.family not in (Family.SP, Family.SO):
            raise InputError("parabolic products exist for gl, sp, and so")
        if len(self.parabolics) > 3:
            raise InputError("at most three classical parabolic factors are allowed")
        dims = sum(P.group.dim for P in self.parabolics)
        if 2 * self.gl_parts.total + dims != G.dim:
            raise InputError("factor dimensions do not fill the natural module")
        for P in self.parabolics:
            if P.group.family is not G.family or P.group.char is not G.char:
                raise InputError(
                    f"factor group {P.group.describe()} does not match {G.describe()}"
                )
        if G.family is Family.SO and G.p2:
            odd_dims = sum(1 for P in self.parabolics if P.group.dim % 2 == 1)
            if odd_dims > 1:
                raise InputError(
                    f"{odd_dims} odd-dimensional factors cannot embed in {G.describe()} at p=2"
                )

    def describe(self) -> str:
        chunks = [f"GL{p}" for p in self.gl_parts.parts]
        for P in self.parabolics:
            chunks.append(f"{P.group.describe()}[{P.describe()}]")
        return " ".join(chunks) if chunks else "1"


# -- the four maps -----------------------------------------------------------------


def psi1(X: RegularSubgroupDescriptor, G: GroupSpec) -> ClassParam:
    """Class of a product of regular elements, one per factor of X."""
    X.validate_for(G)
    if G.family is Family.GL:
        return combine(X.gl_parts, Partition(), EpsilonMap(), G)
    classical = Partition()
    for m, full in X.cl_parts:
        if full:
            spec = GroupSpec(Family.O, m, G.char)
            nonid = G.p2 and m % 2 == 0
        else:
            spec = G.classical_factor(m)
            nonid = False
        blocks, _ = regular_jordan_blocks(spec, nonidentity_component=nonid)
        classical = classical + blocks
    return combine(X.gl_parts, classical, distinguished_eps(G, classical), G)


def phi1(C: ClassParam) -> RegularSubgroupDescriptor:
    """The preimage of C under psi1 with the maximal number of GL factors."""
    G = C.group
    if G.family is Family.GL:
        return RegularSubgroupDescriptor(C.lam, ())
    alpha, beta, _ = minimal_levi(C)
    full = G.p2 and G.family is Family.SO
    return RegularSubgroupDescriptor(alpha, tuple((m, full) for m in beta.parts))


def psi2(P: ParabolicProduct, G: GroupSpec) -> ClassParam:
    """Class of a product of Richardson elements, one per parabolic factor of P."""
    P.validate_for(G)
    if G.family is Family.GL:
        return combine(P.gl_parts, Partition(), EpsilonMap(), G)
    classical = Partition()
    for desc in P.parabolics:
        blocks, _ = richardson_jordan_blocks(desc)
        classical = classical + blocks
    return combine(P.gl_parts, classical, distinguished_eps(G, classical), G)


def phi2(C: ClassParam) -> ParabolicProduct:
    """The canonical parabolic product mapping to C under psi2."""
    G = C.group
    if G.family is Family.GL:
        return ParabolicProduct(C.lam, ())
    alpha, beta, _ = minimal_levi(C)
    if not beta:
        return ParabolicProduct(alpha, ())
    dec = decompose(beta, G)
    descs = []
    for piece in dec.nonzero_pieces():
        descs.append(parabolic_from_blocks(G.classical_factor(piece.total), piece))
    return ParabolicProduct(alpha, tuple(descs))


def is_extra_class(C: ClassParam) -> bool:
    """Whether the minimal-Levi remainder is not itself a Richardson class."""
    if C.group.family is Family.GL:
        return False
    _, beta, _ = minimal_levi(C)
    if not beta:
        return False
    return decompose(beta, C.group).beta1 != beta


# -- labels and diagrams -------------------------------------------------------------


def _factor_type(G: GroupSpec, dim: int) -> tuple[str, int]:
    """Lie-type letter and rank of the classical factor of the given dimension."""
    if G.family is Family.SP:
        return "C", dim // 2
    if dim % 2 == 1:
        return "B", (dim - 1) // 2
    return "D", dim // 2


def diagram_string(P: ParabolicDescriptor) -> str:
    """Marked-diagram rendering: one "x"+"o"*(k-1) chunk per GL block of size
    k (non-decreasing sizes), then one "o" per remainder node, with the fork
    of an even orthogonal remainder shown as a parenthesized pair."""
    chunks = ["x" + "o" * (size - 1) for size in sorted(P.block_sizes().parts)]
    if P.m0 > 0:
        fork = P.group.family is Family.SO and P.group.dim % 2 == 0 and P.m0 >= 2
        plain = P.m0 - 2 if fork else P.m0
        chunks.extend(["o"] * plain)
        if fork:
            chunks.append("(o,o)")
    return " ".join(chunks)


def _piece_token(G: GroupSpec, piece: Partition) -> str | None:
    letter, rank = _factor_type(G, piece.total)
    if rank == 0:
        return None
    P = parabolic_from_blocks(G.classical_factor(piece.total), piece)
    if P.is_borel():
        return f"{letter}{rank}"
    if P.max_simple_factor_rank() <= 1:
        return f"{letter}{rank}(a{P.semisimple_rank()})"
    return f"{letter}{rank}[{diagram_string(P)}]"


def label(C: ClassParam) -> str:
    """Compound label: A-tokens for the GL blocks, then one token per
    Richardson piece, ordered by decreasing rank.  The identity-like empty
    label is rendered "0"."""
    G = C.group
    if G.family is Family.GL:
        tokens = [f"A{p - 1}" for p in C.lam.parts if p >= 2]
        return "".join(tokens) or "0"
    alpha, beta, _ = minimal_levi(C)
    tokens = [f"A{p - 1}" for p in alpha.parts if p >= 2]
    classical: list[tuple[int, str]] = []
    if beta:
        for piece in decompose(beta, G).nonzero_pieces():
            token = _piece_token(G, piece)
            if token is not None:
                rank = _factor_type(G, piece.total)[1]
                classical.append((rank, token))
    classical.sort(key=lambda item: (-item[0], item[1]))
    tokens.extend(token for _, token in classical)
    return "".join(tokens) or "0"


def o_not_so_conjugate(C1: ClassParam, C2: ClassParam) -> bool:
    """Whether two SO-classes are conjugate under the full orthogonal group
    but not under SO: same (blocks, eps), both split-tagged, different tags."""
    for C in (C1, C2):
        if C.group.family is not Family.SO:
            raise InputError("O-vs-SO conjugacy applies to SO classes")
    if C1.group != C2.group or C1.group.dim % 2 != 0:
        raise InputError("both classes must live in the same even-dimensional SO group")
    if not C1.same_class(C2):
        return False
    splitting = splits_in_so(C1.lam, C1.eps, C1.group.char)
    # Levi-side criterion: splitting classes are exactly those whose minimal
    # Levi is GL-only with all block sizes even.
    alpha, beta, _ = minimal_levi(C1)
    levi_side = not beta and all(p % 2 == 0 for p in alpha.parts)
    if splitting != levi_side:
        raise RuntimeError(
            f"split criterion mismatch for {C1.lam}: eps-side {splitting}, Levi-side {levi_side}"
        )
    if not splitting:
        return False
    return (
        C1.split_tag is not None
        and C2.split_tag is not None
        and C1.split_tag != C2.split_tag
    )


# -- enumerating the descriptor families --------------------------------------------


def _classical_dim_multisets(G: GroupSpec, total: int, max_count: int | None = None,
                             even_count: bool = False) -> Iterator[tuple[int, ...]]:
    """Dimension multisets of classical factors filling a space of the given total.

    Symplectic factors are even-dimensional.  Orthogonal factors at p=2 must
    include exactly total mod 2 odd dimensions (each odd nondegenerate
    summand feeds the bilinear radical); in good characteristic any
    dimensions embed.
    """
    def emit(dims: tuple[int, ...]):
        if max_count is not None and len(dims) > max_count:
            return None
        if even_count and len(dims) % 2 != 0:
            return None
        return dims

    if total == 0:
        out = emit(())
        if out is not None:
            yield out
        return
    if G.family is Family.SP:
        if total % 2 != 0:
            return
        for parts in iter_partitions(total // 2):
            dims = emit(tuple(2 * p for p in parts))
            if dims is not None:
                yield dims
    elif G.p2:
        if total % 2 == 0:
            for parts in iter_partitions(total // 2):
                dims = emit(tuple(2 * p for p in parts))
                if dims is not None:
                    yield dims
        else:
            for odd in range(1, total + 1, 2):
                for parts in iter_partitions((total - odd) // 2):
                    dims = emit(tuple(sorted((odd,) + tuple(2 * p for p in parts), reverse=True)))
                    if dims is not None:
                        yield dims
    else:
        for dims in iter_partitions(total):
            dims = emit(dims)
            if dims is not None:
                yield dims


def iter_regular_subgroups(G: GroupSpec) -> Iterator[RegularSubgroupDescriptor]:
    """All regular-subgroup descriptors for G (conjugacy-class representatives)."""
    if G.family is Family.GL:
        for parts in iter_partitions(G.dim):
            yield RegularSubgroupDescriptor(Partition(parts), ())
        return
    if G.family not in (Family.SP, Family.SO):
        raise InputError("regular subgroups are enumerated for gl, sp, and so")
    full = G.p2 and G.family is Family.SO
    even_count = full and G.dim % 2 == 0
    for a in range(G.dim // 2 + 1):
        rest = G.dim - 2 * a
        for alpha in iter_partitions(a):
            for dims in _classical_dim_multisets(G, rest, even_count=even_count):
                yield RegularSubgroupDescriptor(
                    Partition(alpha), tuple((m, full) for m in dims)
                )


def iter_parabolic_products(G: GroupSpec, max_factors: int = 3) -> Iterator[ParabolicProduct]:
    """All parabolic products for G with at most max_factors classical factors."""
    if G.family is Family.GL:
        for parts in iter_partitions(G.dim):
            yield ParabolicProduct(Partition(parts), ())
        return
    if G.family not in (Family.SP, Family.SO):
        raise InputError("parabolic products are enumerated for gl, sp, and so")
    for a in range(G.dim // 2 + 1):
        rest = G.dim - 2 * a
        for alpha in iter_partitions(a):
            gl = Partition(alpha)
            seen: set[tuple] = set()
            for dims in _classical_dim_multisets(G, rest, max_count=max_factors):
                choices = [
                    enumerate_distinguished_parabolics(G.classical_factor(d)) for d in dims
                ]
                if any(not opts for opts in choices):
                    continue
                for combo in product(*choices):
                    P = ParabolicProduct(gl, tuple(combo))
                    key = P.parabolics
                    if key in seen:
                        continue
                    seen.add(key)
                    yield P

"""Structured linear-operator kernels with exact operation accounting.

Five stage kinds cover everything the factorized multiplication needs:
permutation, pairwise Hadamard butterflies, pair replication, diagonal
scaling, and fan-in summation.  Every kernel is branch-free, so its cost
is a fixed function of the input length and counters are bumped by that
exact amount.  Negations and power-of-two scalings are shift-class
operations and stay off the books; a subtraction is tallied as an
addition.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class OpCount:
    """Running tally of real multiplications and real additions."""

    multiplications: int = 0
    additions: int = 0

    def count(self, mults: int = 0, adds: int = 0) -> None:
        if mults < 0 or adds < 0:
            raise ValueError("operation tallies only grow")
        self.multiplications += mults
        self.additions += adds

    def as_tuple(self) -> tuple[int, int]:
        return (self.multiplications, self.additions)

    def total(self) -> int:
        return self.multiplications + self.additions


class Permutation32:
    """A bijection on {0..31}.  Forward application fills slot i from map[i]."""

    SIZE = 32

    __slots__ = ("map",)

    def __init__(self, map_):
        m = tuple(int(v) for v in map_)
        if len(m) != self.SIZE or sorted(m) != list(range(self.SIZE)):
            raise ValueError("permutation must be a bijection on 0..31")
        self.map = m

    @classmethod
    def identity(cls) -> "Permutation32":
        return cls(range(cls.SIZE))

    def is_involution(self) -> bool:
        return all(self.map[self.map[i]] == i for i in range(self.SIZE))

    def inverse(self) -> "Permutation32":
        inv = [0] * self.SIZE
        for i, v in enumerate(self.map):
            inv[v] = i
        return Permutation32(inv)

    def __eq__(self, other):
        return isinstance(other, Permutation32) and self.map == other.map

    def __hash__(self):
        return hash(self.map)


def apply_permutation(p: Permutation32, x, direction: str = "forward") -> list:
    """Reorder a 32-vector; pure data movement, zero counted operations.

    forward: out[i] = x[map[i]].  inverse: out[map[i]] = x[i].
    """
    if len(x) != p.SIZE:
        raise ValueError(f"expected a {p.SIZE}-vector, got length {len(x)}")
    if direction == "forward":
        return [x[p.map[i]] for i in range(p.SIZE)]
    if direction == "inverse":
        out = [None] * p.SIZE
        for i in range(p.SIZE):
            out[p.map[i]] = x[i]
        return out
    raise ValueError("direction must be 'forward' or 'inverse'")


def hadamard_pairs(x, counter: OpCount | None = None) -> list:
    """Butterfly every adjacent pair: (u, v) -> (u + v, u - v).

    Two additions per pair; 32 in total on a 32-vector.
    """
    if len(x) % 2:
        raise ValueError("hadamard_pairs needs an even-length vector")
    out = []
    for k in range(0, len(x), 2):
        u, v = x[k], x[k + 1]
        out.append(u + v)
        out.append(u - v)
    if counter is not None:
        counter.count(adds=len(x))
    return out


def replicate_pairs(x, copies: int = 16) -> list:
    """Tile each adjacent pair of a 32-vector into its own block.

    Output block k (entries 32k..32k+31) repeats (x[2k], x[2k+1]) sixteen
    times.  Pure fan-out; nothing counted.
    """
    if len(x) != 32:
        raise ValueError(f"expected a 32-vector, got length {len(x)}")
    out = []
    for k in range(0, 32, 2):
        out.extend([x[k], x[k + 1]] * copies)
    return out


def block_diagonal_scale(x, diag, counter: OpCount | None = None) -> list:
    """Componentwise product; one real multiplication per entry."""
    if len(x) != len(diag):
        raise ValueError(f"dimension mismatch: vector {len(x)}, diagonal {len(diag)}")
    if counter is not None:
        counter.count(mults=len(x))
    return [xv * dv for xv, dv in zip(x, diag)]


def fan_in_sum(x, counter: OpCount | None = None, width: int = 32) -> list:
    """Sum consecutive blocks: out[m] = sum over k of x[width*k + m].

    blocks-1 additions per output slot; 480 in total for 512 -> 32.
    """
    blocks, rem = divmod(len(x), width)
    if rem or blocks < 1:
        raise ValueError(f"length {len(x)} is not a positive multiple of {width}")
    out = list(x[:width])
    for k in range(1, blocks):
        base = width * k
        for m in range(width):
            out[m] += x[base + m]
    if counter is not None:
        counter.count(adds=(blocks - 1) * width)
    return out


class Stage:
    """A fixed linear map with declared dimensions.

    Subclasses wrap the kernels above so compositions can be applied,
    checked, and materialized to dense matrices for verification.
    """

    kind = "?"
    n_in = 0
    n_out = 0

    def apply(self, x, counter: OpCount | None = None) -> list:
        raise NotImplementedError

    def _check(self, x):
        if len(x) != self.n_in:
            raise ValueError(f"{self.kind}: expected a {self.n_in}-vector, got {len(x)}")


class PermuteStage(Stage):
    kind = "permute"

    def __init__(self, perm: Permutation32, direction: str = "forward"):
        self.perm = perm
        self.direction = direction
        self.n_in = self.n_out = perm.SIZE

    def apply(self, x, counter=None):
        self._check(x)
        return apply_permutation(self.perm, x, self.direction)


class HadamardPairsStage(Stage):
    kind = "hadamard-pairs"

    def __init__(self, pairs: int):
        self.pairs = pairs
        self.n_in = self.n_out = 2 * pairs

    def apply(self, x, counter=None):
        self._check(x)
        return hadamard_pairs(x, counter)


class ReplicateStage(Stage):
    kind = "replicate"

    def __init__(self, copies: int = 16):
        self.copies = copies
        self.n_in = 32
        self.n_out = 32 * copies

    def apply(self, x, counter=None):
        self._check(x)
        return replicate_pairs(x, self.copies)


class DiagonalStage(Stage):
    kind = "diagonal"

    def __init__(self, values):
        self.values = tuple(values)
        self.n_in = self.n_out = len(self.values)

    def apply(self, x, counter=None):
        self._check(x)
        return block_diagonal_scale(x, self.values, counter)


class FanInStage(Stage):
    kind = "fan-in"

    def __init__(self, arity: int = 16, width: int = 32):
        self.arity = arity
        self.width = width
        self.n_in = arity * width
        self.n_out = width

    def apply(self, x, counter=None):
        self._check(x)
        return fan_in_sum(x, counter, self.width)


def _as_stage_list(op) -> list[Stage]:
    return [op] if isinstance(op, Stage) else list(op)


def check_composition(stages: list[Stage]) -> None:
    for prev, nxt in zip(stages, stages[1:]):
        if prev.n_out != nxt.n_in:
            raise ValueError(
                f"composition error: {prev.kind} emits {prev.n_out}, "
                f"{nxt.kind} expects {nxt.n_in}"
            )


def apply_stages(stages, x, counter: OpCount | None = None) -> list:
    stages = _as_stage_list(stages)
    check_composition(stages)
    out = x
    for stage in stages:
        out = stage.apply(out, counter)
    return out


def materialize(op) -> list[list[float]]:
    """Dense matrix (list of rows) of a stage or stage sequence.

    Built column by column from unit vectors, so it is exactly the matrix
    the staged application implements.
    """
    stages = _as_stage_list(op)
    check_composition(stages)
    n_in = stages[0].n_in
    n_out = stages[-1].n_out
    cols = []
    for i in range(n_in):
        unit = [0.0] * n_in
        unit[i] = 1.0
        cols.append(apply_stages(stages, unit))
    return [[cols[c][r] for c in range(n_in)] for r in range(n_out)]

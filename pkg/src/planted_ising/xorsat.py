"""Generation and analysis of r-regular k-XORSAT linear systems mod 2.

A system is a set of parity constraints x_{i1} ^ ... ^ x_{ik} = b_i in
which every variable occurs in exactly r clauses.  The flagship
ensemble is 3-regular 3-XORSAT (k = r = 3, one clause per variable),
generated by drawing k independent shuffles of the variable list and
reading clause i off the i-th position of each shuffle; the whole draw
is restarted if any clause repeats an index.  For k != r a dealt
configuration model is used instead (r tokens per variable, shuffled,
dealt into groups of k) with the same restart rule.

Randomness is fully determined by the instance seed: attempt t derives
sub-streams rng_for(seed, "shuffle", t, j), rng_for(seed, "deal", t)
and rng_for(seed, "b", t) (see seeds.py for the derivation rule).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import NamedTuple, Sequence

import numpy as np

from . import gf2
from .seeds import child_seed, rng_for

FORMAT_NAME = "xorsat-v1"


class GenerationError(RuntimeError):
    """Raised when the restart cap or attempt cap is exhausted."""


class Clause(NamedTuple):
    vars: tuple[int, ...]  # sorted, distinct indices
    b: int


@dataclass(frozen=True)
class XorsatSystem:
    """An r-regular k-XORSAT system over n_vars Boolean variables."""

    n_vars: int
    k: int
    r: int
    clauses: tuple[Clause, ...]
    seed: int | None = None
    planted: tuple[int, ...] | None = None
    attempts: int | None = None  # draws used by nullity-targeted generation

    @property
    def n_clauses(self) -> int:
        return len(self.clauses)

    def coefficient_matrix(self) -> gf2.Gf2Matrix:
        rows = []
        for clause in self.clauses:
            word = 0
            for v in clause.vars:
                word |= 1 << v
            rows.append(word)
        return gf2.Gf2Matrix(len(rows), self.n_vars, tuple(rows))

    def rhs(self) -> tuple[int, ...]:
        return tuple(c.b for c in self.clauses)


@dataclass(frozen=True)
class SystemAnalysis:
    """Linear-algebra certificate for one system.

    ground_cost is the certified optimum of the clause-sum cost
    (#violated - #satisfied): -m when satisfiable, None (unknown, but
    strictly greater than -m) otherwise.  n_ground_states is likewise
    only certified for satisfiable systems.
    """

    rank: int
    nullity: int
    satisfiable: bool
    n_ground_states: int | None
    ground_cost: int | None
    solution_set: gf2.Gf2SolutionSet


def _clauses_from_columns(columns: list[np.ndarray]) -> list[tuple[int, ...]] | None:
    """Zip per-shuffle columns into clause index tuples; None on a repeat."""
    m = len(columns[0])
    out = []
    for i in range(m):
        idx = tuple(int(col[i]) for col in columns)
        if len(set(idx)) != len(idx):
            return None
        out.append(tuple(sorted(idx)))
    return out


def generate_regular(
    n: int,
    k: int = 3,
    r: int = 3,
    seed: int = 0,
    max_restarts: int = 10_000,
) -> XorsatSystem:
    """Draw a uniform r-regular k-XORSAT system with random right-hand side.

    Requires n*r divisible by k.  Raises GenerationError if no
    repeat-free draw is found within max_restarts attempts.
    """
    if n <= 0 or k <= 0 or r <= 0:
        raise ValueError("n, k, r must be positive")
    if k > n:
        raise ValueError("clause width k cannot exceed the variable count")
    if (n * r) % k != 0:
        raise ValueError(f"n*r = {n * r} is not divisible by k = {k}")
    m = (n * r) // k

    for attempt in range(max_restarts):
        if k == r and m == n:
            shuffles = [rng_for(seed, "shuffle", attempt, j).permutation(n) for j in range(k)]
            var_lists = _clauses_from_columns(shuffles)
        else:
            tokens = rng_for(seed, "deal", attempt).permutation(np.repeat(np.arange(n), r))
            groups = [tokens[i * k : (i + 1) * k] for i in range(m)]
            var_lists = _clauses_from_columns([np.array([g[j] for g in groups]) for j in range(k)])
        if var_lists is None:
            continue
        b = rng_for(seed, "b", attempt).integers(0, 2, size=m)
        clauses = tuple(Clause(v, int(bi)) for v, bi in zip(var_lists, b))
        return XorsatSystem(n_vars=n, k=k, r=r, clauses=clauses, seed=seed)

    raise GenerationError(f"no repeat-free draw in {max_restarts} restarts (n={n}, k={k}, r={r})")


def plant(system: XorsatSystem, assignment: Sequence[int] | int) -> XorsatSystem:
    """Rewrite every b_i to the parity of `assignment` on clause i.

    The result is satisfiable by construction and remembers the planted
    assignment.  Passing an int draws the assignment from that seed.
    """
    if isinstance(assignment, (int, np.integer)):
        bits = tuple(int(v) for v in rng_for(int(assignment), "plant").integers(0, 2, system.n_vars))
    else:
        bits = tuple(int(v) for v in assignment)
        if any(v not in (0, 1) for v in bits):
            raise ValueError("assignment entries must be bits")
    if len(bits) != system.n_vars:
        raise ValueError(f"assignment length {len(bits)} != n_vars {system.n_vars}")
    clauses = tuple(
        Clause(c.vars, sum(bits[v] for v in c.vars) % 2) for c in system.clauses
    )
    return replace(system, clauses=clauses, planted=bits)


def generate_with_nullity(
    n: int,
    d_target: int,
    seed: int = 0,
    max_attempts: int = 10_000,
    k: int = 3,
    r: int = 3,
) -> XorsatSystem:
    """Rejection-sample systems until the nullity hits d_target, then plant.

    The returned system is satisfiable with exactly 2**d_target
    solutions; `attempts` records how many draws were used.  Raises
    GenerationError when max_attempts is exhausted, which signals that
    d_target is rare (or unreachable) at this size.
    """
    if d_target < 0:
        raise ValueError("d_target must be nonnegative")
    if max_attempts < 1:
        raise ValueError("max_attempts must be at least 1")
    for attempt in range(max_attempts):
        system = generate_regular(n, k, r, seed=child_seed(seed, "sys", attempt))
        _, rank, _ = gf2.row_reduce(system.coefficient_matrix())
        if system.n_vars - rank != d_target:
            continue
        assignment = rng_for(seed, "plant", attempt).integers(0, 2, n)
        planted = plant(system, [int(v) for v in assignment])
        return replace(planted, attempts=attempt + 1)
    raise GenerationError(
        f"nullity {d_target} not hit in {max_attempts} attempts at n={n}"
    )


def cost(system: XorsatSystem, assignment: Sequence[int]) -> int:
    """Clause-sum cost: (#violated - #satisfied), minimum -m at a solution."""
    if len(assignment) != system.n_vars:
        raise ValueError(f"assignment length {len(assignment)} != n_vars {system.n_vars}")
    total = 0
    for clause in system.clauses:
        parity = 0
        for v in clause.vars:
            parity ^= assignment[v] & 1
        total += 1 if parity != clause.b else -1
    return total


def violated_count(system: XorsatSystem, assignment: Sequence[int]) -> int:
    """Number of violated clauses; cost == 2*violated - m."""
    return (cost(system, assignment) + system.n_clauses) // 2


def analyze(system: XorsatSystem) -> SystemAnalysis:
    """Row-reduce the system and certify satisfiability and degeneracy."""
    sol = gf2.solve_affine(system.coefficient_matrix(), system.rhs())
    m = system.n_clauses
    return SystemAnalysis(
        rank=sol.rank,
        nullity=sol.nullity,
        satisfiable=sol.consistent,
        n_ground_states=(1 << sol.nullity) if sol.consistent else None,
        ground_cost=-m if sol.consistent else None,
        solution_set=sol,
    )


# ---------------------------------------------------------------------------
# Instance file format (canonical CLI interchange)
# ---------------------------------------------------------------------------


def to_json_dict(system: XorsatSystem) -> dict:
    """Serializable form with fixed key order."""
    nullity = analyze(system).nullity
    return {
        "format": FORMAT_NAME,
        "n": system.n_vars,
        "k": system.k,
        "r": system.r,
        "seed": system.seed,
        "clauses": [{"vars": list(c.vars), "b": c.b} for c in system.clauses],
        "nullity": nullity,
        "planted": list(system.planted) if system.planted is not None else None,
    }


def write_instance(path, system: XorsatSystem) -> None:
    with open(path, "w") as fh:
        json.dump(to_json_dict(system), fh, indent=1)
        fh.write("\n")


class FormatError(ValueError):
    """Malformed instance/result file."""


def from_json_dict(doc: dict) -> XorsatSystem:
    if not isinstance(doc, dict) or doc.get("format") != FORMAT_NAME:
        raise FormatError(f'missing or unknown "format" (expected "{FORMAT_NAME}")')
    try:
        n = int(doc["n"])
        k = int(doc["k"])
        r = int(doc["r"])
        seed = doc["seed"]
        raw_clauses = doc["clauses"]
    except KeyError as exc:
        raise FormatError(f"missing field {exc.args[0]!r}") from exc
    clauses = []
    for i, entry in enumerate(raw_clauses):
        try:
            vars_ = tuple(int(v) for v in entry["vars"])
            b = int(entry["b"])
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"clause {i}: bad entry ({exc})") from exc
        if b not in (0, 1):
            raise FormatError(f"clause {i}: b must be 0 or 1")
        if len(vars_) != k or len(set(vars_)) != k:
            raise FormatError(f"clause {i}: expected {k} distinct variables")
        if any(v < 0 or v >= n for v in vars_):
            raise FormatError(f"clause {i}: variable index out of range")
        clauses.append(Clause(tuple(sorted(vars_)), b))
    planted = doc.get("planted")
    if planted is not None:
        planted = tuple(int(v) for v in planted)
        if len(planted) != n or any(v not in (0, 1) for v in planted):
            raise FormatError('"planted" must be a bit vector of length n')
    return XorsatSystem(
        n_vars=n,
        k=k,
        r=r,
        clauses=tuple(clauses),
        seed=None if seed is None else int(seed),
        planted=planted,
    )


def read_instance(path) -> XorsatSystem:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return from_json_dict(doc)


def check_regular(system: XorsatSystem) -> None:
    """Raise if the regularity/width invariants do not hold."""
    counts = [0] * system.n_vars
    for clause in system.clauses:
        if len(clause.vars) != system.k or len(set(clause.vars)) != system.k:
            raise ValueError("clause width or distinctness violated")
        for v in clause.vars:
            counts[v] += 1
    if any(c != system.r for c in counts):
        raise ValueError("variable occurrence counts are not r-regular")

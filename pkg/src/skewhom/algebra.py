"""Finite-dimensional algebras with an antisymmetric bracket and a twist map.

The carrier is encoded by structure constants: ``bracket[i][j]`` is the
vector ``[e_i, e_j]`` in the chosen basis, and ``twist`` is the matrix of the
linear map that twists the Jacobi identity.  The checkers below decide, with
an explicit witness on failure, whether a table describes a Lie algebra, a
Hom-Lie algebra (twist commutes with the bracket), or a skew-Hom-Lie algebra
(twist anti-commutes: ``beta([x,y]) = -[beta(x), beta(y)]``), and whether the
twisted Jacobi identity

    [[y,z], beta(x)] + [[z,x], beta(y)] + [[x,y], beta(z)] = 0

holds on every basis triple.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

from .errors import BackendMismatchError, DimensionError, FileFormatError
from .linalg import (
    Mat,
    Vec,
    det,
    identity,
    mat,
    mat_col,
    mat_eq,
    mat_mul,
    mat_pow,
    mat_vec,
    vec,
    vec_add,
    vec_is_zero,
    vec_neg,
    vec_scale,
    vec_sub,
    zero_vec,
)
from .scalars import ScalarBackend, format_scalar, parse_scalar


class Verdict(str, Enum):
    LIE = "Lie"
    HOM_LIE = "HomLie"
    SKEW_HOM_LIE = "SkewHomLie"
    NEITHER = "Neither"


@dataclass(frozen=True)
class Witness:
    """Concrete failure evidence: the offending input and its nonzero residual."""

    at: tuple
    residual: object
    note: str = ""


@dataclass(frozen=True)
class CheckReport:
    passed: bool
    witness: Optional[Witness] = None

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class TwistSign:
    """Result of the bracket/twist compatibility scan.

    ``sign`` is +1 or -1 when one constant is consistent across all basis
    pairs, ``None`` when no constant works (see ``witness``).  ``abelian``
    marks the all-zero bracket, for which +1 is reported by convention.
    """

    sign: Optional[int]
    witness: Optional[Witness] = None
    abelian: bool = False


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    regular: bool
    witness: Optional[Witness] = None


@dataclass(frozen=True)
class HomAlgebra:
    """Dimension, bracket table, twist matrix, and the scalar backend.

    Antisymmetry (``bracket[i][j] = -bracket[j][i]``, zero diagonal) is
    validated on construction and therefore holds for every instance.
    """

    dim: int
    bracket: tuple
    twist: Mat
    backend: ScalarBackend

    def __post_init__(self) -> None:
        n = self.dim
        table = tuple(tuple(vec(v) for v in row) for row in self.bracket)
        object.__setattr__(self, "bracket", table)
        object.__setattr__(self, "twist", mat(self.twist))
        if len(table) != n or any(len(row) != n for row in table):
            raise DimensionError(f"bracket table must be {n}x{n}")
        for i in range(n):
            for j in range(n):
                if len(table[i][j]) != n:
                    raise DimensionError(f"bracket[{i}][{j}] must have length {n}")
                if not vec_is_zero(vec_add(table[i][j], table[j][i]), self.backend):
                    raise ValueError(
                        f"bracket is not antisymmetric at ({i}, {j})"
                    )
        if len(self.twist) != n or any(len(row) != n for row in self.twist):
            raise DimensionError(f"twist must be {n}x{n}")

    @classmethod
    def from_pairs(
        cls,
        dim: int,
        pairs: dict,
        twist: Mat,
        backend: ScalarBackend,
    ) -> "HomAlgebra":
        """Build from ``{(i, j): [e_i, e_j]}`` entries with ``i < j``."""
        table = [[zero_vec(dim) for _ in range(dim)] for _ in range(dim)]
        for (i, j), value in pairs.items():
            if not 0 <= i < j < dim:
                raise ValueError(f"pair ({i}, {j}) is not an i<j pair in range")
            table[i][j] = vec(value)
            table[j][i] = vec_neg(vec(value))
        return cls(dim, tuple(tuple(row) for row in table), twist, backend)

    def twist_col(self, i: int) -> Vec:
        """Image of the i-th basis vector under the twist."""
        return mat_col(self.twist, i)


def bracket_eval(g: HomAlgebra, x: Vec, y: Vec) -> Vec:
    """Bilinear extension of the structure-constant table."""
    if len(x) != g.dim or len(y) != g.dim:
        raise DimensionError(f"arguments must have length {g.dim}")
    acc = zero_vec(g.dim)
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            acc = vec_add(acc, vec_scale(xi * yj, g.bracket[i][j]))
    return acc


def twist_apply(g: HomAlgebra, x: Vec) -> Vec:
    return mat_vec(g.twist, x)


def hom_jacobi_residual(g: HomAlgebra, x: Vec, y: Vec, z: Vec) -> Vec:
    """The cyclic sum [[y,z],beta(x)] + [[z,x],beta(y)] + [[x,y],beta(z)]."""
    bx, by, bz = twist_apply(g, x), twist_apply(g, y), twist_apply(g, z)
    out = bracket_eval(g, bracket_eval(g, y, z), bx)
    out = vec_add(out, bracket_eval(g, bracket_eval(g, z, x), by))
    out = vec_add(out, bracket_eval(g, bracket_eval(g, x, y), bz))
    return out


def check_hom_jacobi(g: HomAlgebra) -> CheckReport:
    """Twisted Jacobi identity on all ordered basis triples.

    Multilinearity makes basis triples sufficient; all n**3 ordered triples
    are scanned rather than only i<j<k, so no symmetry argument is assumed.
    The witness is the lexicographically first failing triple.
    """
    n = g.dim
    beta = [g.twist_col(i) for i in range(n)]
    for i, j, k in itertools.product(range(n), repeat=3):
        res = bracket_eval(g, g.bracket[j][k], beta[i])
        res = vec_add(res, bracket_eval(g, g.bracket[k][i], beta[j]))
        res = vec_add(res, bracket_eval(g, g.bracket[i][j], beta[k]))
        if not vec_is_zero(res, g.backend):
            return CheckReport(False, Witness((i, j, k), res))
    return CheckReport(True)


def check_twist_sign(g: HomAlgebra) -> TwistSign:
    """Detect the constant eps with beta([e_i, e_j]) = eps * [beta e_i, beta e_j].

    Pairs where both sides vanish carry no information and are skipped; for
    the all-zero bracket every constant is consistent and +1 is reported with
    the abelian flag set.
    """
    n = g.dim
    beta = [g.twist_col(i) for i in range(n)]
    candidates = {1, -1}
    abelian = all(
        vec_is_zero(g.bracket[i][j], g.backend) for i in range(n) for j in range(n)
    )
    for i, j in itertools.product(range(n), repeat=2):
        lhs = twist_apply(g, g.bracket[i][j])
        rhs = bracket_eval(g, beta[i], beta[j])
        if vec_is_zero(lhs, g.backend) and vec_is_zero(rhs, g.backend):
            continue
        local = set()
        plus = vec_sub(lhs, rhs)
        minus = vec_add(lhs, rhs)
        if vec_is_zero(plus, g.backend):
            local.add(1)
        if vec_is_zero(minus, g.backend):
            local.add(-1)
        candidates &= local
        if not candidates:
            residual = plus if not vec_is_zero(plus, g.backend) else minus
            return TwistSign(None, Witness((i, j), residual), abelian)
    if abelian or candidates == {1, -1}:
        return TwistSign(1, None, abelian=True)
    return TwistSign(candidates.pop())


def classify(g: HomAlgebra) -> Classification:
    """Sort the triple into Lie / HomLie / SkewHomLie / Neither.

    SkewHomLie needs twist sign -1 plus the twisted Jacobi identity; HomLie
    needs sign +1 plus the identity; Lie additionally requires the twist to
    be the identity map.  ``regular`` reports whether the twist is a linear
    automorphism.
    """
    sign = check_twist_sign(g)
    jacobi = check_hom_jacobi(g)
    regular = not g.backend.is_zero(det(g.twist, g.backend))
    if sign.sign is None:
        return Classification(Verdict.NEITHER, regular, sign.witness)
    if not jacobi.passed:
        return Classification(Verdict.NEITHER, regular, jacobi.witness)
    if sign.sign == -1:
        return Classification(Verdict.SKEW_HOM_LIE, regular)
    if mat_eq(g.twist, identity(g.dim), g.backend):
        return Classification(Verdict.LIE, regular)
    return Classification(Verdict.HOM_LIE, regular)


def check_power_sign_law(g: HomAlgebra, m: int) -> CheckReport:
    """Check beta^m([e_i,e_j]) = (-1)^m * [beta^m e_i, beta^m e_j] on all pairs.

    For a skew twist the sign alternates with the power: odd powers
    anti-commute with the bracket, even powers commute.
    """
    if m < 1:
        raise ValueError("power must be a positive integer")
    tw = mat_pow(g.twist, m, g.backend)
    sign = Fraction(-1) ** m
    cols = [mat_col(tw, i) for i in range(g.dim)]
    for i, j in itertools.product(range(g.dim), repeat=2):
        lhs = mat_vec(tw, g.bracket[i][j])
        rhs = bracket_eval(g, cols[i], cols[j])
        res = vec_sub(lhs, vec_scale(sign, rhs))
        if not vec_is_zero(res, g.backend):
            return CheckReport(False, Witness((i, j), res, note=f"m={m}"))
    return CheckReport(True)


def check_morphism(f: Mat, g: HomAlgebra, h: HomAlgebra, sign: int) -> CheckReport:
    """Check that the matrix ``f`` is a (sign-twisted) morphism g -> h.

    Verifies ``f([e_i, e_j]_g) = sign * [f e_i, f e_j]_h`` on all basis pairs
    and the intertwining law ``f . twist_g = twist_h . f`` as matrices.
    ``sign`` is +1 for morphisms of Hom-Lie algebras and -1 for morphisms of
    skew-Hom-Lie algebras.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if g.backend != h.backend:
        raise BackendMismatchError("source and target use different backends")
    if len(f) != h.dim or any(len(row) != g.dim for row in f):
        raise DimensionError(f"morphism matrix must be {h.dim}x{g.dim}")
    cols = [mat_col(f, i) for i in range(g.dim)]
    for i, j in itertools.product(range(g.dim), repeat=2):
        lhs = mat_vec(f, g.bracket[i][j])
        rhs = bracket_eval(h, cols[i], cols[j])
        res = vec_sub(lhs, vec_scale(Fraction(sign), rhs))
        if not vec_is_zero(res, g.backend):
            return CheckReport(False, Witness(("bracket", i, j), res))
    intertwine = mat_mul(f, g.twist)
    other = mat_mul(h.twist, f)
    for r in range(h.dim):
        for c in range(g.dim):
            diff = intertwine[r][c] - other[r][c]
            if not g.backend.is_zero(diff):
                return CheckReport(False, Witness(("twist", r, c), diff))
    return CheckReport(True)


# ---------------------------------------------------------------------------
# Algebra file format (UTF-8 JSON): {"dim", "backend", "bracket", "twist"}
# with bracket entries {"i", "j", "value"} for i < j; missing pairs are zero.


def algebra_to_dict(g: HomAlgebra) -> dict:
    entries = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            if vec_is_zero(g.bracket[i][j], g.backend):
                continue
            entries.append(
                {"i": i, "j": j, "value": [format_scalar(x) for x in g.bracket[i][j]]}
            )
    return {
        "dim": g.dim,
        "backend": g.backend.to_json(),
        "bracket": entries,
        "twist": [[format_scalar(x) for x in row] for row in g.twist],
    }


def algebra_from_dict(obj: dict) -> HomAlgebra:
    if not isinstance(obj, dict):
        raise FileFormatError("algebra document must be a JSON object")
    try:
        dim = int(obj["dim"])
        backend = ScalarBackend.from_json(obj["backend"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FileFormatError(f"bad header: {exc}", location="dim/backend") from exc
    if dim < 1:
        raise FileFormatError("dimension must be positive", location="dim")

    table = [[zero_vec(dim) for _ in range(dim)] for _ in range(dim)]
    seen: set = set()
    for idx, entry in enumerate(obj.get("bracket", [])):
        where = f"bracket[{idx}]"
        try:
            i, j = int(entry["i"]), int(entry["j"])
            value = vec(parse_scalar(x, backend) for x in entry["value"])
        except (KeyError, TypeError, ValueError) as exc:
            raise FileFormatError(f"bad bracket entry: {exc}", location=where) from exc
        if not (0 <= i < dim and 0 <= j < dim):
            raise FileFormatError(f"indices ({i}, {j}) out of range", location=where)
        if len(value) != dim:
            raise FileFormatError(
                f"value must have length {dim}, got {len(value)}", location=where
            )
        if i == j:
            if not vec_is_zero(value, backend):
                raise FileFormatError(
                    f"diagonal entry ({i}, {i}) must be zero", location=where
                )
            continue
        if (i, j) in seen:
            raise FileFormatError(f"duplicate entry for ({i}, {j})", location=where)
        seen.add((i, j))
        if (j, i) in seen:
            # mirror already filled table[i][j] with the negated value
            if not vec_is_zero(vec_sub(value, table[i][j]), backend):
                raise FileFormatError(
                    f"entries ({j}, {i}) and ({i}, {j}) violate antisymmetry",
                    location=where,
                )
            continue
        table[i][j] = value
        table[j][i] = vec_neg(value)

    twist_rows = obj.get("twist")
    if not isinstance(twist_rows, list) or len(twist_rows) != dim:
        raise FileFormatError(f"twist must be a {dim}x{dim} array", location="twist")
    parsed_twist = []
    for r, row in enumerate(twist_rows):
        if not isinstance(row, list) or len(row) != dim:
            raise FileFormatError(
                f"twist row must have length {dim}", location=f"twist[{r}]"
            )
        try:
            parsed_twist.append(vec(parse_scalar(x, backend) for x in row))
        except (TypeError, ValueError) as exc:
            raise FileFormatError(f"bad twist row: {exc}", location=f"twist[{r}]") from exc
    try:
        return HomAlgebra(dim, tuple(tuple(row) for row in table), mat(parsed_twist), backend)
    except (ValueError, DimensionError) as exc:
        raise FileFormatError(str(exc), location="document") from exc


def save_algebra(g: HomAlgebra, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(algebra_to_dict(g), indent=2) + "\n", encoding="utf-8")


def load_algebra(path: Union[str, Path]) -> HomAlgebra:
    text = Path(path).read_text(encoding="utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(
            f"not valid JSON: {exc.msg}", location=f"line {exc.lineno}, column {exc.colno}"
        ) from exc
    return algebra_from_dict(obj)

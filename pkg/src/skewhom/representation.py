"""Representations of skew-Hom-Lie algebras and the morphism equivalence.

A representation of ``(g, [.,.], beta)`` on V with respect to an invertible
companion map phi is a linear map rho into matrices on V satisfying

    rho(beta(x)) . phi = -phi . rho(x)                             (compat)
    rho([x, y]) . phi  = rho(beta(x)) . rho(y) - rho(beta(y)) . rho(x)

When phi**2 = -id, rho satisfies both equations exactly when it is a skew
morphism into the gl(V) algebra built from phi; ``theorem_equivalence`` runs
both verdicts side by side.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path
from random import Random
from typing import Optional, Tuple, Union

from .algebra import (
    CheckReport,
    HomAlgebra,
    Witness,
    check_morphism,
    load_algebra,
)
from .constructions import GlContext, alpha_block, build_gl_alpha, builtin_algebra
from .errors import DimensionError, FileFormatError, PreconditionError
from .linalg import (
    Mat,
    Vec,
    det,
    flatten,
    identity,
    mat,
    mat_add,
    mat_eq,
    mat_is_zero,
    mat_mul,
    mat_neg,
    mat_scale,
    mat_sub,
    transpose,
    zero_mat,
)
from .scalars import format_scalar, parse_scalar


@dataclass(frozen=True)
class Representation:
    """Per-basis matrices rho(e_i) on an m-dimensional space, plus phi."""

    g: HomAlgebra
    m: int
    rho: Tuple[Mat, ...]
    phi: Mat

    def __post_init__(self) -> None:
        object.__setattr__(self, "rho", tuple(mat(r) for r in self.rho))
        object.__setattr__(self, "phi", mat(self.phi))
        if len(self.rho) != self.g.dim:
            raise DimensionError(
                f"need one matrix per basis element, got {len(self.rho)}"
            )
        for idx, r in enumerate(self.rho):
            if len(r) != self.m or any(len(row) != self.m for row in r):
                raise DimensionError(f"rho[{idx}] must be {self.m}x{self.m}")
        if len(self.phi) != self.m or any(len(row) != self.m for row in self.phi):
            raise DimensionError(f"phi must be {self.m}x{self.m}")
        if self.g.backend.is_zero(det(self.phi, self.g.backend)):
            raise PreconditionError("companion map phi must be invertible")


def zero_representation(g: HomAlgebra, m: int, phi: Optional[Mat] = None) -> Representation:
    """All rho(e_i) = 0; passes both representation equations for any phi."""
    return Representation(g, m, (zero_mat(m, m),) * g.dim, phi if phi is not None else identity(m))


def rho_eval(rep: Representation, x: Vec) -> Mat:
    """Linear extension sum_i x_i rho(e_i)."""
    if len(x) != rep.g.dim:
        raise DimensionError(f"argument must have length {rep.g.dim}")
    acc = zero_mat(rep.m, rep.m)
    for xi, r in zip(x, rep.rho):
        if xi == 0:
            continue
        acc = mat_add(acc, mat_scale(xi, r))
    return acc


def check_representation(rep: Representation) -> CheckReport:
    """Verify both defining equations on all basis vectors and pairs."""
    g, phi = rep.g, rep.phi
    backend = g.backend
    rho_beta = [rho_eval(rep, g.twist_col(i)) for i in range(g.dim)]
    for i in range(g.dim):
        res = mat_add(mat_mul(rho_beta[i], phi), mat_mul(phi, rep.rho[i]))
        if not mat_is_zero(res, backend):
            return CheckReport(False, Witness(("compat", i), res))
    for i, j in itertools.product(range(g.dim), repeat=2):
        lhs = mat_mul(rho_eval(rep, g.bracket[i][j]), phi)
        rhs = mat_sub(
            mat_mul(rho_beta[i], rep.rho[j]), mat_mul(rho_beta[j], rep.rho[i])
        )
        res = mat_sub(lhs, rhs)
        if not mat_is_zero(res, backend):
            return CheckReport(False, Witness(("bracket", i, j), res))
    return CheckReport(True)


def representation_as_morphism_matrix(rep: Representation) -> Mat:
    """rho as an (m**2 x n) matrix into the row-major matrix-unit basis."""
    return transpose(mat(flatten(r) for r in rep.rho))


def theorem_equivalence(rep: Representation) -> Tuple[CheckReport, CheckReport]:
    """Run the representation check and the morphism check side by side.

    Requires phi**2 = -id; the target is the gl(V) algebra built from phi
    with its conjugation twist, and the morphism is checked with sign -1.
    The two verdicts agree for every input.
    """
    backend = rep.g.backend
    if not mat_eq(mat_mul(rep.phi, rep.phi), mat_neg(identity(rep.m)), backend):
        raise PreconditionError("phi**2 = -id is required for the equivalence")
    rep_verdict = check_representation(rep)
    target = build_gl_alpha(GlContext(rep.m, rep.phi, backend))
    f = representation_as_morphism_matrix(rep)
    morphism_verdict = check_morphism(f, rep.g, target, sign=-1)
    return rep_verdict, morphism_verdict


def search_representation(
    g: HomAlgebra,
    m: int,
    budget: int,
    seed: int = 0,
    nonzero: bool = True,
) -> Optional[Representation]:
    """Seeded random search for a representation on an m-dimensional space.

    Candidates are sparse integer matrices with entries in {-1, 0, 1}; the
    companion map cycles through block-diagonal alpha_theta matrices (even m)
    or the identity (odd m).  Returns the first candidate passing
    :func:`check_representation`, or ``None`` once the budget is exhausted.
    With ``nonzero=False`` the all-zero candidate is tried first and always
    hits.
    """
    if m < 1:
        raise ValueError("representation space dimension must be positive")
    backend = g.backend
    phis = []
    if m % 2 == 0:
        thetas = [0]
        if backend.kind == "quadratic" and backend.theta != 0:
            thetas.append(backend.theta)
        for theta in thetas:
            phis.append(alpha_block(m, theta, backend)[0])
    else:
        phis.append(identity(m))

    if not nonzero:
        return zero_representation(g, m, phis[0])

    rng = Random(seed)
    entries = (-1, 0, 0, 0, 1)
    zero = backend.coerce(0)
    for attempt in range(budget):
        rho = tuple(
            tuple(
                tuple(backend.coerce(rng.choice(entries)) for _ in range(m))
                for _ in range(m)
            )
            for _ in range(g.dim)
        )
        if all(all(x == zero for x in flatten(r)) for r in rho):
            continue
        candidate = Representation(g, m, rho, phis[attempt % len(phis)])
        if check_representation(candidate).passed:
            return candidate
    return None


# ---------------------------------------------------------------------------
# Representation file format: {"algebra", "m", "rho", "phi"}; "algebra" is a
# path to an algebra file or a builtin family name.


def representation_to_dict(rep: Representation, algebra_ref: str) -> dict:
    return {
        "algebra": algebra_ref,
        "m": rep.m,
        "rho": [[[format_scalar(x) for x in row] for row in r] for r in rep.rho],
        "phi": [[format_scalar(x) for x in row] for row in rep.phi],
    }


def representation_from_dict(obj: dict, g: Optional[HomAlgebra] = None) -> Representation:
    if not isinstance(obj, dict):
        raise FileFormatError("representation document must be a JSON object")
    if g is None:
        ref = obj.get("algebra")
        if not isinstance(ref, str):
            raise FileFormatError("missing algebra reference", location="algebra")
        g = resolve_algebra(ref)
    backend = g.backend
    try:
        m = int(obj["m"])
        rho = tuple(
            mat(tuple(parse_scalar(x, backend) for x in row) for row in r)
            for r in obj["rho"]
        )
        phi = mat(tuple(parse_scalar(x, backend) for x in row) for row in obj["phi"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FileFormatError(f"bad representation: {exc}", location="rho/phi") from exc
    try:
        return Representation(g, m, rho, phi)
    except (DimensionError, PreconditionError) as exc:
        raise FileFormatError(str(exc), location="document") from exc


def resolve_algebra(ref: str) -> HomAlgebra:
    """Interpret ``ref`` as a builtin family name or an algebra file path."""
    if ":" in ref and not Path(ref).exists():
        return builtin_algebra(ref)[1]
    if Path(ref).exists():
        return load_algebra(ref)
    return builtin_algebra(ref)[1]


def save_representation(rep: Representation, algebra_ref: str, path: Union[str, Path]) -> None:
    payload = representation_to_dict(rep, algebra_ref)
    Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def load_representation(path: Union[str, Path], g: Optional[HomAlgebra] = None) -> Representation:
    text = Path(path).read_text(encoding="utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(
            f"not valid JSON: {exc.msg}", location=f"line {exc.lineno}, column {exc.colno}"
        ) from exc
    return representation_from_dict(obj, g)

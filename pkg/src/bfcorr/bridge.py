"""The composed map F -> Symm -> Asymm -> Lambda and a checker for it."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .asymm import apply_J, apply_J_inverse, verify_J_oracle
from .boson import BosonPolynomial, ZMonomial, boson_inner, monomials_of_weight
from .combinatorics import partitions_of
from .fermion import FockVector, asymm_to_fermion, fermion_to_asymm, fock_inner
from .linear import format_rational
from .symm import apply_I, apply_I_inverse

DEFAULT_MAX_DEGREE = 8
DEFAULT_ORACLE_DEGREE = 6


def boson_to_fermion(f: BosonPolynomial) -> FockVector:
    return asymm_to_fermion(apply_J(apply_I(f)))


def fermion_to_boson(v: FockVector) -> BosonPolynomial:
    return apply_I_inverse(apply_J_inverse(fermion_to_asymm(v)))


@dataclass
class Counterexample:
    left: ZMonomial
    right: ZMonomial
    boson_value: Fraction
    fermion_value: Fraction

    def __str__(self) -> str:
        return (
            f"<{self.left}, {self.right}>: boson {format_rational(self.boson_value)}"
            f" != fermion {format_rational(self.fermion_value)}"
        )


@dataclass
class DegreeCheck:
    degree: int
    pairs: int
    failures: list[Counterexample] = field(default_factory=list)
    roundtrip_ok: bool = True
    oracle_ok: bool | None = None  # None: finite-n oracle not run at this degree

    @property
    def passed(self) -> bool:
        return not self.failures and self.roundtrip_ok and self.oracle_ok is not False


@dataclass
class IsometryReport:
    degree_bound: int
    degrees: list[DegreeCheck]
    cross_pairs: int
    cross_failures: list[Counterexample]

    @property
    def passed(self) -> bool:
        return not self.cross_failures and all(d.passed for d in self.degrees)

    @property
    def total_pairs(self) -> int:
        return sum(d.pairs for d in self.degrees)

    def counterexamples(self) -> list[Counterexample]:
        out = [c for d in self.degrees for c in d.failures]
        return out + list(self.cross_failures)

    def to_text(self) -> str:
        rows = [("degree", "pairs", "isometry", "roundtrip", "oracle", "status")]
        for d in self.degrees:
            rows.append((
                str(d.degree),
                str(d.pairs),
                "ok" if not d.failures else f"{len(d.failures)} failed",
                "ok" if d.roundtrip_ok else "FAIL",
                "-" if d.oracle_ok is None else ("ok" if d.oracle_ok else "FAIL"),
                "pass" if d.passed else "FAIL",
            ))
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        lines = ["  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
        lines.append(
            f"cross-degree pairs: {self.cross_pairs}, "
            + ("ok" if not self.cross_failures else f"{len(self.cross_failures)} failed")
        )
        for c in self.counterexamples():
            lines.append(f"counterexample {c}")
        lines.append(f"result: {'pass' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        def cx(c):
            return {
                "left": str(c.left),
                "right": str(c.right),
                "boson": format_rational(c.boson_value),
                "fermion": format_rational(c.fermion_value),
            }

        return {
            "degree_bound": self.degree_bound,
            "passed": self.passed,
            "total_pairs": self.total_pairs,
            "degrees": [
                {
                    "degree": d.degree,
                    "pairs": d.pairs,
                    "isometry": not d.failures,
                    "roundtrip": d.roundtrip_ok,
                    "oracle": d.oracle_ok,
                    "passed": d.passed,
                    "counterexamples": [cx(c) for c in d.failures],
                }
                for d in self.degrees
            ],
            "cross_pairs": self.cross_pairs,
            "cross_counterexamples": [cx(c) for c in self.cross_failures],
        }


def verify_isometry(
    degree_bound: int,
    *,
    max_degree: int = DEFAULT_MAX_DEGREE,
    oracle_degree: int = DEFAULT_ORACLE_DEGREE,
) -> IsometryReport:
    """Compare ``<f, g>`` in F with ``<Bf, Bg>`` in Lambda on z-monomial pairs.

    Every unordered pair of monomials of weight ``<= degree_bound`` is
    checked; pairs of equal weight are tallied per degree and the rest as
    cross-degree pairs.  Each degree also gets a round-trip check and, up to
    ``oracle_degree``, the finite-variable Vandermonde check with ``n`` equal
    to the degree (the one check that sees the sign of the basis map).
    """
    if degree_bound < 0:
        raise ValueError("degree_bound must be non-negative")
    if degree_bound > max_degree:
        raise ValueError(f"degree_bound {degree_bound} exceeds the cap {max_degree}")

    images: dict[int, list[tuple[ZMonomial, BosonPolynomial, FockVector]]] = {}
    degrees = []
    for d in range(degree_bound + 1):
        row = []
        roundtrip_ok = True
        for m in monomials_of_weight(d):
            f = BosonPolynomial({m: 1})
            image = boson_to_fermion(f)
            roundtrip_ok &= fermion_to_boson(image) == f
            row.append((m, f, image))
        images[d] = row
        check = DegreeCheck(degree=d, pairs=0, roundtrip_ok=roundtrip_ok)
        for i, (m1, f1, b1) in enumerate(row):
            for m2, f2, b2 in row[i:]:
                check.pairs += 1
                lhs, rhs = boson_inner(f1, f2), fock_inner(b1, b2)
                if lhs != rhs:
                    check.failures.append(Counterexample(m1, m2, lhs, rhs))
        if d <= oracle_degree:
            check.oracle_ok = all(verify_J_oracle(lam, max(d, 1)) for lam in partitions_of(d))
        degrees.append(check)

    cross_pairs = 0
    cross_failures = []
    for d1 in range(degree_bound + 1):
        for d2 in range(d1 + 1, degree_bound + 1):
            for m1, f1, b1 in images[d1]:
                for m2, f2, b2 in images[d2]:
                    cross_pairs += 1
                    lhs, rhs = boson_inner(f1, f2), fock_inner(b1, b2)
                    if lhs != rhs:
                        cross_failures.append(Counterexample(m1, m2, lhs, rhs))
    return IsometryReport(degree_bound, degrees, cross_pairs, cross_failures)

"""Forcing polynomials, their derived statistics, and matching orbits.

The forcing polynomial collects x^{f(G,M)} over all perfect matchings M, so
its coefficient at x^i counts matchings with forcing number i. Evaluating at
1 gives the matching count, the log-derivative at 1 the average forcing
number, and the support the forcing spectrum.

Orbits partition the matchings of a GP graph under the cyclic rotations
u_i -> u_{i+j}, v_i -> v_{i+j} (optionally the full dihedral group); every
member of an orbit shares one forcing number because the maps are graph
automorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .forcing import ForcingResult, forcing_numbers_map
from .graphs import DomainError, Graph, symmetry_edge_permutations
from .matchings import (
    edge_indices,
    enumerate_perfect_matchings,
    matching_text,
    permute_edge_set,
)


class OrbitInconsistency(RuntimeError):
    """Members of one orbit disagree on data that automorphisms preserve."""


@dataclass
class ForcingPolynomial:
    """Map from forcing number i to the count of matchings attaining it."""

    coeffs: dict[int, int]

    def __str__(self) -> str:
        return polynomial_text(self.coeffs)

    def evaluate(self, x) -> int:
        return sum(c * x**e for e, c in self.coeffs.items())


def polynomial_text(coeffs: dict[int, int]) -> str:
    """ASCII form with descending exponents: "91x^4+53x^3", "x^3+21x^2", "1"."""
    if not coeffs:
        return "0"
    terms = []
    for e in sorted(coeffs, reverse=True):
        c = coeffs[e]
        if e == 0:
            terms.append(str(c))
        else:
            var = "x" if e == 1 else f"x^{e}"
            terms.append(var if c == 1 else f"{c}{var}")
    return "+".join(terms)


@dataclass(frozen=True)
class PolyStats:
    pm_count: int
    average_forcing: Fraction
    spectrum: tuple[int, ...]
    min_forcing: int
    max_forcing: int

    def as_json_dict(self) -> dict:
        avg = self.average_forcing
        return {
            "pm_count": self.pm_count,
            "average_forcing": f"{avg.numerator}/{avg.denominator}",
            "average_forcing_decimal": f"{avg.numerator / avg.denominator:.6f}",
            "spectrum": list(self.spectrum),
            "min_forcing": self.min_forcing,
            "max_forcing": self.max_forcing,
        }


def poly_stats(p: ForcingPolynomial) -> PolyStats:
    """Matching count, exact average forcing number, spectrum, extremes."""
    if not p.coeffs:
        raise DomainError("empty polynomial: the graph has no perfect matching")
    total = sum(p.coeffs.values())
    weighted = sum(e * c for e, c in p.coeffs.items())
    spectrum = tuple(sorted(p.coeffs))
    return PolyStats(
        pm_count=total,
        average_forcing=Fraction(weighted, total),
        spectrum=spectrum,
        min_forcing=spectrum[0],
        max_forcing=spectrum[-1],
    )


def forcing_report(
    g: Graph, engine: str = "hitting_set", jobs: int | None = None
) -> tuple[list[int], list[ForcingResult]]:
    """Enumerate all matchings and compute each forcing number."""
    matchings = enumerate_perfect_matchings(g)
    return matchings, forcing_numbers_map(g, matchings, engine=engine, jobs=jobs)


def forcing_polynomial(
    g: Graph, engine: str = "hitting_set", jobs: int | None = None
) -> ForcingPolynomial:
    """Forcing polynomial of g with the chosen engine ("both" cross-checks)."""
    _, results = forcing_report(g, engine=engine, jobs=jobs)
    coeffs: dict[int, int] = {}
    for r in results:
        coeffs[r.forcing_number] = coeffs.get(r.forcing_number, 0) + 1
    return ForcingPolynomial(coeffs)


@dataclass(frozen=True)
class Orbit:
    """A symmetry-equivalence class of perfect matchings.

    representative is the smallest bit-encoding over the whole orbit; size is
    the matching count of the class (the PMC table column) and forcing_number
    its common forcing number (the FN column).
    """

    representative: int
    size: int
    forcing_number: int
    members: tuple[int, ...]


def matching_orbits(
    g: Graph,
    matchings: list[int],
    results,
    group: str = "rotation",
) -> list[Orbit]:
    """Partition matchings into orbits of the chosen symmetry group.

    `results` gives each matching's forcing number (ForcingResult or int),
    aligned with `matchings`. Orbits come back sorted by representative.
    Raises OrbitInconsistency if an orbit's members disagree on the forcing
    number or fall outside the matching list, both of which would mean a bug
    somewhere upstream.
    """
    perms = symmetry_edge_permutations(g, group)
    fn_of = {}
    for m, r in zip(matchings, results):
        fn_of[m] = r.forcing_number if isinstance(r, ForcingResult) else int(r)
    orbits = []
    seen = set()
    for m in sorted(fn_of):
        if m in seen:
            continue
        members = sorted({permute_edge_set(m, p) for p in perms})
        fns = set()
        for im in members:
            if im not in fn_of:
                raise OrbitInconsistency(
                    f"orbit image {im:#x} of {m:#x} is not a known perfect matching"
                )
            fns.add(fn_of[im])
        if len(fns) != 1:
            raise OrbitInconsistency(
                f"orbit of {m:#x} carries forcing numbers {sorted(fns)}"
            )
        seen.update(members)
        orbits.append(
            Orbit(
                representative=members[0],
                size=len(members),
                forcing_number=fns.pop(),
                members=tuple(members),
            )
        )
    orbits.sort(key=lambda o: o.representative)
    return orbits


def rotation_orbits(g: Graph, matchings: list[int], results) -> list[Orbit]:
    """Orbits under the cyclic rotation group only."""
    return matching_orbits(g, matchings, results, group="rotation")


def orbit_polynomial(orbits: list[Orbit]) -> ForcingPolynomial:
    """Reassemble the forcing polynomial from orbit sizes."""
    coeffs: dict[int, int] = {}
    for o in orbits:
        coeffs[o.forcing_number] = coeffs.get(o.forcing_number, 0) + o.size
    return ForcingPolynomial(coeffs)


@dataclass(frozen=True)
class OrbitTable:
    """Orbit rows (NO, PMC, FN, representative) plus the polynomial footer."""

    g: Graph
    orbits: tuple[Orbit, ...]

    @property
    def polynomial(self) -> ForcingPolynomial:
        return orbit_polynomial(list(self.orbits))

    def rows(self) -> list[tuple[int, int, int, str]]:
        return [
            (no, o.size, o.forcing_number, matching_text(self.g, o.representative))
            for no, o in enumerate(self.orbits, start=1)
        ]

    def to_text(self) -> str:
        lines = ["NO  PMC  FN  representative"]
        for no, pmc, fn, rep in self.rows():
            lines.append(f"{no:<3d} {pmc:<4d} {fn:<3d} {rep}")
        lines.append(f"polynomial: {self.polynomial}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        n, k = self.g.gp_params if self.g.gp_params else (None, None)
        poly = self.polynomial
        return {
            "n": n,
            "k": k,
            "polynomial": {str(e): c for e, c in sorted(poly.coeffs.items())},
            "stats": poly_stats(poly).as_json_dict(),
            "orbits": [
                {
                    "representative_edges": edge_indices(o.representative),
                    "pmc": o.size,
                    "fn": o.forcing_number,
                }
                for o in self.orbits
            ],
        }

    def to_csv(self) -> str:
        lines = ["no,pmc,fn,representative"]
        for no, pmc, fn, rep in self.rows():
            lines.append(f"{no},{pmc},{fn},{rep}")
        return "\n".join(lines) + "\n"


def orbit_table(g: Graph, orbits: list[Orbit]) -> OrbitTable:
    return OrbitTable(g, tuple(orbits))

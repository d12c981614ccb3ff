"""Attainable upper bounds on the algebraic connectivity of regular graphs.

A d-regular graph whose diameter or girth is fixed has

    AC <= d - 2 sqrt(d - 1) cos(theta)

where ``theta`` depends on the constraint.  It is computed here two ways: as
the smallest eigenvalue of a K x K tridiagonal "level" matrix (Sturm
bisection, the primary route) and as the smallest positive root of the
corresponding trigonometric equation (the cross-check).
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .graph import INF, Graph, diameter, girth, is_bipartite, is_connected
from .spectra import TridiagonalSystem, laplacian_spectrum, tridiag_smallest_eigenvalue

ATTAIN_TOL = 1e-7
AGREE_TOL = 1e-9
THETA_TOL = 1e-12


class Kind(str, Enum):
    EVEN_DIAMETER = "even-diameter"
    ODD_DIAMETER = "odd-diameter"
    EVEN_GIRTH = "even-girth"
    ODD_GIRTH = "odd-girth"

    @property
    def is_diameter(self) -> bool:
        return self in (Kind.EVEN_DIAMETER, Kind.ODD_DIAMETER)


class BoundConsistencyError(ArithmeticError):
    """The root-solve and tridiagonal routes disagree."""


@dataclass(frozen=True)
class BoundConstraint:
    kind: Kind
    K: int
    d: int

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.d < 3:
            raise ValueError(f"degree must be >= 3, got {self.d}")
        if self.K < 1:
            raise ValueError(f"K must be >= 1, got {self.K}")
        if self.kind is Kind.EVEN_GIRTH and self.K < 2:
            raise ValueError("girth must be >= 3")

    @classmethod
    def diameter(cls, d: int, D: int) -> "BoundConstraint":
        if D < 1:
            raise ValueError(f"diameter must be >= 1, got {D}")
        if D % 2 == 0:
            return cls(Kind.EVEN_DIAMETER, D // 2, d)
        return cls(Kind.ODD_DIAMETER, (D + 1) // 2, d)

    @classmethod
    def girth(cls, d: int, g: int) -> "BoundConstraint":
        if g < 3:
            raise ValueError(f"girth must be >= 3, got {g}")
        if g % 2 == 0:
            return cls(Kind.EVEN_GIRTH, g // 2, d)
        return cls(Kind.ODD_GIRTH, (g - 1) // 2, d)

    @classmethod
    def parse(cls, d: int, text: str) -> "BoundConstraint":
        """Parse ``"D=5"`` or ``"g=6"``."""
        key, _, value = text.partition("=")
        key = key.strip()
        if key in ("D", "diameter"):
            return cls.diameter(d, int(value))
        if key in ("g", "girth"):
            return cls.girth(d, int(value))
        raise ValueError(f"constraint must look like D=<int> or g=<int>, got {text!r}")

    @property
    def value(self) -> int:
        """The diameter or girth this constraint stands for."""
        return {
            Kind.EVEN_DIAMETER: 2 * self.K,
            Kind.ODD_DIAMETER: 2 * self.K - 1,
            Kind.EVEN_GIRTH: 2 * self.K,
            Kind.ODD_GIRTH: 2 * self.K + 1,
        }[self.kind]

    @property
    def label(self) -> str:
        return ("D" if self.kind.is_diameter else "g") + f"={self.value}"

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "K": self.K, "d": self.d, "label": self.label}

    @classmethod
    def from_dict(cls, data: dict) -> "BoundConstraint":
        return cls(Kind(data["kind"]), int(data["K"]), int(data["d"]))


@dataclass(frozen=True)
class BoundResult:
    theta: float
    lam: float
    method: str
    constraint: BoundConstraint | None = field(default=None, compare=False)

    @property
    def lambda_(self) -> float:
        return self.lam


def lambda_from_theta(d: float, theta: float) -> float:
    return d - 2.0 * math.sqrt(d - 1) * math.cos(theta)


def theta_from_lambda(d: float, lam: float) -> float:
    x = (d - lam) / (2.0 * math.sqrt(d - 1))
    return math.acos(max(-1.0, min(1.0, x)))


def corner_system(c: BoundConstraint) -> TridiagonalSystem:
    """Level matrix whose smallest eigenvalue is the bound for ``c``."""
    d, K = c.d, c.K
    if c.kind is Kind.EVEN_DIAMETER:
        return TridiagonalSystem(K, d, d, d, d)
    if c.kind is Kind.ODD_DIAMETER:
        return TridiagonalSystem(K, d, d, 2 * d - 1, d)
    if c.kind is Kind.EVEN_GIRTH:
        return TridiagonalSystem(K, d + 1, d - 1, 2 * d - 1, d)
    return TridiagonalSystem(K, d, d - 1, d + 1, d)


def theta_equation(c: BoundConstraint):
    """Pole-free form ``f(theta) = 0`` of the tangent equation for ``c``.

    ``tan(K t) = -N(t) / P(t)`` is rewritten as ``sin(K t) P(t) + cos(K t) N(t)``.
    """
    d, K = float(c.d), c.K
    s = math.sqrt(d - 1)

    if c.kind is Kind.EVEN_DIAMETER:
        def f(t):
            return (d - 2) * math.sin(K * t) * math.cos(t) + d * math.cos(K * t) * math.sin(t)
    elif c.kind is Kind.ODD_DIAMETER:
        def f(t):
            ct = math.cos(t)
            p = s * (d - 2 * ct * ct) + (d - 2) * ct
            q = (2 * s * ct + d) * math.sin(t)
            return math.sin(K * t) * p + math.cos(K * t) * q
    elif c.kind is Kind.ODD_GIRTH:
        def f(t):
            return math.sin(K * t) * (1 / s + math.cos(t)) + math.cos(K * t) * math.sin(t)
    else:
        def f(t):
            return math.sin(K * t)
    return f


def solve_theta(c: BoundConstraint, tol: float = THETA_TOL) -> float:
    """Smallest positive root of the constraint's theta equation."""
    if c.kind is Kind.EVEN_GIRTH:
        return math.pi / c.K
    f = theta_equation(c)
    hi_end = math.pi / c.K
    steps = 64 * max(4, c.K)
    prev_t = hi_end * 1e-6
    prev = f(prev_t)
    lo = hi = None
    for i in range(1, steps + 1):
        t = hi_end * i / steps
        cur = f(t)
        if prev == 0.0:
            return prev_t
        if (prev > 0) != (cur > 0) or cur == 0.0:
            lo, hi = prev_t, t
            break
        prev_t, prev = t, cur
    if lo is None:
        raise BoundConsistencyError(f"no root of the theta equation below pi/K for {c}")
    flo = f(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _special_case(c: BoundConstraint) -> float | None:
    # diameter 1 (complete graph), diameter 2 and girth 3 are the one-level cases
    if c.K != 1:
        return None
    if c.kind is Kind.ODD_DIAMETER:
        return c.d + 1.0
    if c.kind is Kind.EVEN_DIAMETER:
        return float(c.d)
    if c.kind is Kind.ODD_GIRTH:
        return c.d + 1.0
    return None


def ac_upper_bound(c: BoundConstraint) -> BoundResult:
    """Attainable AC upper bound for a d-regular graph under constraint ``c``."""
    special = _special_case(c)
    if special is not None:
        return BoundResult(theta_from_lambda(c.d, special), special, "closed-form", c)

    lam_tri = tridiag_smallest_eigenvalue(corner_system(c))
    theta = solve_theta(c)
    lam_root = lambda_from_theta(c.d, theta)
    if abs(lam_tri - lam_root) > AGREE_TOL:
        raise BoundConsistencyError(
            f"{c}: tridiagonal {lam_tri!r} vs root-solve {lam_root!r}"
        )
    if not (math.pi / 2 < theta * c.K <= math.pi + 1e-15):
        raise BoundConsistencyError(f"{c}: theta*K={theta * c.K} outside (pi/2, pi]")
    if c.kind is Kind.EVEN_GIRTH:
        return BoundResult(theta, lambda_from_theta(c.d, theta), "closed-form", c)
    return BoundResult(theta, lam_tri, "tridiagonal", c)


def bound(d: int, *, D: int | None = None, g: int | None = None) -> float:
    """Shorthand: ``bound(3, D=4)`` -> 1.2679..."""
    if (D is None) == (g is None):
        raise ValueError("give exactly one of D or g")
    c = BoundConstraint.diameter(d, D) if D is not None else BoundConstraint.girth(d, g)
    return ac_upper_bound(c).lam


def closed_form_bound(c: BoundConstraint) -> float | None:
    """Explicit formula for diameters and girths up to 6, else ``None``."""
    d = float(c.d)
    v = c.value
    if c.kind.is_diameter:
        table = {
            1: lambda: d + 1,
            2: lambda: d,
            3: lambda: d - 1,
            4: lambda: d - math.sqrt(d),
            5: lambda: d - 0.5 - math.sqrt(d - 0.75),
            6: lambda: d - math.sqrt(2 * d - 1),
        }
    else:
        table = {
            3: lambda: d + 1,
            4: lambda: d,
            5: lambda: d + 0.5 - math.sqrt(d - 0.75),
            6: lambda: d - math.sqrt(d - 1),
        }
    fn = table.get(v)
    return None if fn is None else fn()


# ---------------------------------------------------------------------------
# order formulas


def odd_diameter_exact_order(d: int, K: int) -> int:
    """Order of every maximal graph of diameter ``2K - 1`` (two Bethe trees)."""
    if d < 3 or K < 1:
        raise ValueError("need d >= 3 and K >= 1")
    return 2 * (d * (d - 1) ** (K - 1) - 2) // (d - 2)


def even_diameter_min_order(d: int, K: int) -> int:
    """Lower bound on the order of a maximal graph of diameter ``2K``."""
    if d < 3 or K < 1:
        raise ValueError("need d >= 3 and K >= 1")
    return 4 * ((d - 1) ** K - 1) // (d - 2)


def moore_bound(d: int, g: int) -> int:
    if d < 3 or g < 3:
        raise ValueError("need d >= 3 and g >= 3")
    if g % 2:
        K = (g - 1) // 2
        return 1 + d * sum((d - 1) ** j for j in range(K))
    K = g // 2
    return 2 * sum((d - 1) ** j for j in range(K))


# ---------------------------------------------------------------------------
# certification


@dataclass
class CertificationReport:
    constraint: BoundConstraint
    n: int
    regular: bool
    degree: int | None
    girth: float
    diameter: float
    connected: bool
    bipartite: bool
    ac: float
    bound: float
    constraint_met: bool
    attained: bool
    expected_order: int | None = None
    min_order: int | None = None
    structure_ok: bool | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        def num(x):
            return None if x == INF else x

        return {
            "constraint": self.constraint.label,
            "n": self.n,
            "regular": self.regular,
            "degree": self.degree,
            "girth": num(self.girth),
            "diameter": num(self.diameter),
            "connected": self.connected,
            "bipartite": self.bipartite,
            "ac": self.ac,
            "bound": self.bound,
            "constraint_met": self.constraint_met,
            "attained": self.attained,
            "expected_order": self.expected_order,
            "min_order": self.min_order,
            "structure_ok": self.structure_ok,
            "notes": list(self.notes),
        }


def certify_maximal(g: Graph, c: BoundConstraint, ac: float | None = None) -> CertificationReport:
    """Check whether ``g`` is a d-regular graph attaining the bound for ``c``."""
    deg = g.regular_degree()
    connected = is_connected(g)
    gi = girth(g)
    di = diameter(g) if connected else INF
    if ac is None:
        ac = float(laplacian_spectrum(g).eigenvalues[1]) if connected and g.n > 1 else 0.0
    b = ac_upper_bound(c).lam
    measured = di if c.kind.is_diameter else gi
    constraint_met = measured == c.value
    regular = deg is not None and deg == c.d
    notes = []
    if deg is None:
        notes.append("not regular")
    elif deg != c.d:
        notes.append(f"degree {deg} differs from constraint degree {c.d}")
    if not constraint_met:
        what = "diameter" if c.kind.is_diameter else "girth"
        notes.append(f"{what} is {measured}, constraint requires {c.value}")
    attained = regular and constraint_met and ac >= b - ATTAIN_TOL
    bip = is_bipartite(g)
    report = CertificationReport(
        constraint=c, n=g.n, regular=regular, degree=deg, girth=gi, diameter=di,
        connected=connected, bipartite=bip, ac=ac, bound=b,
        constraint_met=constraint_met, attained=attained, notes=notes,
    )
    if c.kind is Kind.ODD_DIAMETER and c.K >= 2:
        report.expected_order = odd_diameter_exact_order(c.d, c.K)
        report.structure_ok = bip and g.n == report.expected_order
    elif c.kind is Kind.EVEN_DIAMETER:
        report.min_order = even_diameter_min_order(c.d, c.K)
        report.structure_ok = g.n >= report.min_order
    elif not c.kind.is_diameter and c.K >= 1:
        report.expected_order = moore_bound(c.d, c.value)
        report.structure_ok = g.n == report.expected_order
    if attained and report.structure_ok is False:
        notes.append("attains the bound but violates the structural order/bipartite necessity")
    return report


# ---------------------------------------------------------------------------
# tables

TABLE_DEGREES = tuple(range(3, 12))
TABLE_ROWS = tuple(range(3, 14))

# Attainability of the grid entries: "A" known attainable, "U" known
# unattainable, "?" open.  Rows indexed by D or g, columns d = 3..11.
ATTAINABILITY = {
    "D": {
        3: "AAAAAAAAA",
        4: "AAAAAAAA?",
        5: "AA???????",
        6: "A????????",
        7: "A????????",
        8: "A????????",
        9: "A????????",
        10: "?????????",
        11: "?????????",
        12: "?????????",
        13: "?????????",
    },
    "g": {
        3: "AAAAAAAAA",
        4: "AAAAAAAAA",
        5: "AUUUUUUUU",
        6: "AAAAUAAA?",
        7: "UUUUUUUUU",
        8: "A????????",
        9: "UUUUUUUUU",
        10: "UUUUUUUUU",
        11: "UUUUUUUUU",
        12: "A????????",
        13: "UUUUUUUUU",
    },
}


def attainability(d: int, *, D: int | None = None, g: int | None = None) -> str:
    """``"attainable"``, ``"unattainable"`` or ``"open"`` for a table entry."""
    key, row = ("D", D) if D is not None else ("g", g)
    try:
        code = ATTAINABILITY[key][row][d - 3]
    except (KeyError, IndexError):
        return "open"
    return {"A": "attainable", "U": "unattainable", "?": "open"}[code]


def bound_grid(kind: str, degrees=TABLE_DEGREES, rows=TABLE_ROWS) -> np.ndarray:
    """``len(rows) x len(degrees)`` array of bounds; ``kind`` is ``"D"`` or ``"g"``."""
    out = np.empty((len(rows), len(degrees)))
    for i, r in enumerate(rows):
        for j, d in enumerate(degrees):
            c = BoundConstraint.diameter(d, r) if kind == "D" else BoundConstraint.girth(d, r)
            out[i, j] = ac_upper_bound(c).lam
    return out


def format_entry(x: float) -> str:
    """Five significant figures (below 100), matching the published grids."""
    return f"{x:.4f}" if abs(round(x, 4)) < 10 else f"{x:.3f}"


def format_table_text(kind: str, degrees=TABLE_DEGREES, rows=TABLE_ROWS) -> str:
    grid = bound_grid(kind, degrees, rows)
    title = "diameter" if kind == "D" else "girth"
    width = 8
    lines = [f"Upper bound for AC in terms of {title}"]
    corner = kind + "\\d"
    lines.append(f"{corner:>4}" + "".join(f"{d:>{width}}" for d in degrees))
    for r, vals in zip(rows, grid):
        lines.append(f"{r:>4}" + "".join(f"{format_entry(v):>{width}}" for v in vals))
    return "\n".join(lines) + "\n"


def format_table_csv(kind: str, degrees=TABLE_DEGREES, rows=TABLE_ROWS) -> str:
    grid = bound_grid(kind, degrees, rows)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([kind] + [f"d={d}" for d in degrees])
    for r, vals in zip(rows, grid):
        w.writerow([r] + [format_entry(v) for v in vals])
    return buf.getvalue()

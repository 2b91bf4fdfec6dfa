"""JSON encoding and decoding for the public value types.

Field names here are stable and documented in the README; tests round
trip every encoder through its decoder. Scalars travel as ints when
integral and as "p/q" strings otherwise, so nothing ever becomes a
float on the wire.
"""

from fractions import Fraction

from .ehw import EhwProfile
from .embeddings import CharacterDatum, InductionDatum
from .fourier import FourierExpansion, PdGrid, SymMatrix
from .laurent import LaurentPoly
from .lfactors import RationalFunction
from .orbitclassify import (
    DecompositionReport,
    OrbitClassification,
    SurjectivityVerdict,
)
from .scalars import as_scalar, is_integer
from .weights import Weight
from .weyl import InfChar


def scalar_to_json(x):
    x = as_scalar(x)
    if is_integer(x):
        return int(x)
    return f"{x.numerator}/{x.denominator}"


def scalar_from_json(data) -> Fraction:
    return as_scalar(data)


def _row_to_json(row):
    return [scalar_to_json(v) for v in row]


def _row_from_json(data):
    return tuple(as_scalar(v) for v in data)


def weight_to_json(w: Weight) -> dict:
    return {"rows": [_row_to_json(row) for row in w.rows]}


def weight_from_json(data) -> Weight:
    return Weight(tuple(_row_from_json(row) for row in data["rows"]))


def infchar_to_json(ic: InfChar) -> dict:
    return {"places": [_row_to_json(row) for row in ic.canonical]}


def infchar_from_json(data) -> InfChar:
    return InfChar(tuple(_row_from_json(row) for row in data["places"]))


def character_to_json(c: CharacterDatum) -> dict:
    return {"parity": c.parity, "exponent": scalar_to_json(c.exponent)}


def character_from_json(data) -> CharacterDatum:
    return CharacterDatum(int(data["parity"]), as_scalar(data["exponent"]))


def induction_to_json(datum: InductionDatum) -> dict:
    return {
        "n": datum.n,
        "i": datum.i,
        "character": character_to_json(datum.character),
        "inner_weight": _row_to_json(datum.inner_weight),
    }


def induction_from_json(data) -> InductionDatum:
    return InductionDatum(
        n=int(data["n"]),
        i=int(data["i"]),
        character=character_from_json(data["character"]),
        inner_weight=_row_from_json(data["inner_weight"]),
    )


def profile_to_json(profile: EhwProfile) -> dict:
    return {
        "base": _row_to_json(profile.base),
        "p": profile.p,
        "q": profile.q,
        "r": scalar_to_json(profile.r),
    }


def profile_from_json(data) -> EhwProfile:
    return EhwProfile(
        base=_row_from_json(data["base"]),
        p=int(data["p"]),
        q=int(data["q"]),
        r=as_scalar(data["r"]),
    )


def classification_to_json(c: OrbitClassification) -> dict:
    return {
        "n": c.n,
        "i": c.i,
        "inner": _row_to_json(c.inner),
        "x_max": c.x_max,
        "classes": [list(cls) for cls in c.classes],
        "y": list(c.y),
        "bijective": c.bijective,
    }


def classification_from_json(data) -> OrbitClassification:
    return OrbitClassification(
        n=int(data["n"]),
        i=int(data["i"]),
        inner=_row_from_json(data["inner"]),
        x_max=int(data["x_max"]),
        classes=tuple(tuple(int(x) for x in cls) for cls in data["classes"]),
        y=tuple(int(x) for x in data["y"]),
        bijective=bool(data["bijective"]),
    )


def report_to_json(report: DecompositionReport) -> dict:
    return {
        "n": report.n,
        "d": report.d,
        "i": report.i,
        "weight": weight_to_json(report.weight),
        "hypotheses": [
            {"name": name, "passed": ok} for name, ok in report.hypotheses
        ],
        "parity_class": report.parity_class,
        "exponent": None if report.exponent is None else scalar_to_json(report.exponent),
        "inner_weight": None
        if report.inner_weight is None
        else [_row_to_json(row) for row in report.inner_weight],
        "conclusion": report.conclusion,
        "assumption": report.assumption,
    }


def report_from_json(data) -> DecompositionReport:
    return DecompositionReport(
        n=int(data["n"]),
        d=int(data["d"]),
        i=int(data["i"]),
        weight=weight_from_json(data["weight"]),
        hypotheses=tuple((h["name"], bool(h["passed"])) for h in data["hypotheses"]),
        parity_class=None if data["parity_class"] is None else int(data["parity_class"]),
        exponent=None if data["exponent"] is None else as_scalar(data["exponent"]),
        inner_weight=None
        if data["inner_weight"] is None
        else tuple(_row_from_json(row) for row in data["inner_weight"]),
        conclusion=data["conclusion"],
        assumption=data["assumption"],
    )


def verdict_to_json(v: SurjectivityVerdict) -> dict:
    return {"tag": v.tag, "failed_conditions": list(v.failed_conditions)}


def verdict_from_json(data) -> SurjectivityVerdict:
    return SurjectivityVerdict(
        tag=data["tag"], failed_conditions=tuple(data["failed_conditions"])
    )


def poly_to_json(p: LaurentPoly) -> dict:
    return {
        "generators": list(p.gens),
        "terms": [
            {"exponents": list(exps), "coefficient": scalar_to_json(p.terms[exps])}
            for exps in sorted(p.terms, reverse=True)
        ],
    }


def poly_from_json(data) -> LaurentPoly:
    gens = tuple(data["generators"])
    terms = {
        tuple(int(e) for e in t["exponents"]): as_scalar(t["coefficient"])
        for t in data["terms"]
    }
    return LaurentPoly(gens, terms)


def rational_to_json(f: RationalFunction) -> dict:
    return {
        "numerator_factors": [poly_to_json(p) for p in f.num_factors],
        "denominator_factors": [poly_to_json(p) for p in f.den_factors],
    }


def rational_from_json(data) -> RationalFunction:
    return RationalFunction(
        tuple(poly_from_json(p) for p in data["numerator_factors"]),
        tuple(poly_from_json(p) for p in data["denominator_factors"]),
    )


def expansion_to_json(f: FourierExpansion) -> dict:
    return {
        "n": f.n,
        "k": f.k,
        "support": [
            {
                "entries": _row_to_json(h.upper_triangle()),
                "coefficient": scalar_to_json(f.support[h]),
            }
            for h in sorted(f.support, key=lambda h: h.upper_triangle())
        ],
    }


def _matrix_from_upper(n, cells):
    rows = [[Fraction(0)] * n for _ in range(n)]
    pos = 0
    for r in range(n):
        for c in range(r, n):
            rows[r][c] = cells[pos]
            rows[c][r] = cells[pos]
            pos += 1
    return SymMatrix.of(rows)


def expansion_from_json(data) -> FourierExpansion:
    n = int(data["n"])
    support = {}
    for item in data["support"]:
        h = _matrix_from_upper(n, _row_from_json(item["entries"]))
        support[h] = as_scalar(item["coefficient"])
    return FourierExpansion(n, int(data["k"]), support)


def grid_to_json(grid: PdGrid) -> dict:
    return {
        "n": grid.n,
        "d": grid.d,
        "bounds": [
            {"k": k, "i": i, "j": j, "t": grid.bounds[(k, i, j)]}
            for (k, i, j) in sorted(grid.bounds)
        ],
        "points": [
            [_row_to_json(h.upper_triangle()) for h in point] for point in grid.points
        ],
        "diagonal_offsets": list(grid.diagonal_offsets),
        "nominal_offsets": list(grid.nominal_offsets),
        "deviation": grid.deviation,
        "deviation_witnesses": [
            _row_to_json(h.upper_triangle()) for h in grid.deviation_witnesses
        ],
        "bad_point_count": grid.bad_point_count,
    }


def grid_from_json(data) -> PdGrid:
    n = int(data["n"])
    bounds = {
        (int(b["k"]), int(b["i"]), int(b["j"])): int(b["t"]) for b in data["bounds"]
    }
    points = tuple(
        tuple(_matrix_from_upper(n, _row_from_json(cells)) for cells in point)
        for point in data["points"]
    )
    witnesses = tuple(
        _matrix_from_upper(n, _row_from_json(cells))
        for cells in data["deviation_witnesses"]
    )
    return PdGrid(
        n=n,
        d=int(data["d"]),
        bounds=bounds,
        points=points,
        diagonal_offsets=tuple(int(v) for v in data["diagonal_offsets"]),
        nominal_offsets=tuple(int(v) for v in data["nominal_offsets"]),
        deviation=bool(data["deviation"]),
        deviation_witnesses=witnesses,
        bad_point_count=int(data["bad_point_count"]),
    )

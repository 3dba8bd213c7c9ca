"""JSON formats for every value that crosses the process boundary.

Polytopes, face lattice exports, weight functions (guarded by a polytope
content hash), integrands, character sums, z-polynomials, and reports.
All orderings are canonical so identical inputs give identical bytes.

FormatError means the bytes do not parse into the schema (CLI exit 2);
ContentError means they parse but fail semantic validation (exit 3).
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import CharacterSum, HomogPoly, LaurentPoly, ZPoly
from .polytope import FaceLattice, LatticePolytope, facet_presentation, polytope_hash
from .weights import WeightFunction


class FormatError(ValueError):
    pass


class ContentError(ValueError):
    pass


def _rat_str(c: Fraction) -> str:
    return str(c)


def _rat_parse(s) -> Fraction:
    if not isinstance(s, str):
        raise FormatError(f"rational must be a string like 'p/q', got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational {s!r}: {exc}") from exc


def laurent_to_json(p: LaurentPoly):
    return [{"exp": k, "coeff": _rat_str(c)} for k, c in p.terms.items()]


def laurent_from_json(data) -> LaurentPoly:
    if not isinstance(data, list):
        raise FormatError("Laurent polynomial must be a list of terms")
    terms = []
    for item in data:
        if not isinstance(item, dict) or set(item) != {"exp", "coeff"}:
            raise FormatError(f"bad Laurent term {item!r}")
        if not isinstance(item["exp"], int):
            raise FormatError(f"exponent must be an integer, got {item['exp']!r}")
        terms.append((item["exp"], _rat_parse(item["coeff"])))
    return LaurentPoly(terms)


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from exc


def load_polytope(path) -> LatticePolytope:
    """{"vertices": [[int, ...], ...]}; dimension inferred from the vectors."""
    data = _load_json(path)
    if not isinstance(data, dict) or "vertices" not in data:
        raise FormatError(f"{path}: expected an object with a 'vertices' key")
    verts = data["vertices"]
    if not isinstance(verts, list) or not verts:
        raise FormatError(f"{path}: 'vertices' must be a nonempty list")
    for v in verts:
        if not isinstance(v, list) or not all(isinstance(x, int) for x in v):
            raise FormatError(f"{path}: vertex {v!r} is not a list of integers")
        if len(v) != len(verts[0]):
            raise FormatError(f"{path}: vertices of mixed dimension")
    return facet_presentation(verts)


def polytope_to_json(P: LatticePolytope):
    return {"vertices": [list(v) for v in P.vertices]}


def lattice_to_json(lattice: FaceLattice):
    """Facets, f-vector, faces with tight sets, and the strict order pairs."""
    P = lattice.polytope
    order = []
    for a in range(len(lattice.faces)):
        for b in range(len(lattice.faces)):
            if a != b and lattice.leq(a, b):
                order.append([a, b])
    return {
        "n": P.n,
        "polytope_hash": polytope_hash(P),
        "facets": [{"u": list(u), "a": a} for u, a in P.facets],
        "f_vector": list(lattice.f_vector),
        "faces": [
            {
                "id": f.id,
                "dim": f.dim,
                "vertices": sorted(f.vertex_set),
                "tight_facets": sorted(f.tight_facets),
            }
            for f in lattice.faces
        ],
        "order": sorted(order),
    }


def weight_to_json(f: WeightFunction):
    return {
        "polytope_hash": polytope_hash(f.lattice.polytope),
        "values": {str(fid): laurent_to_json(p) for fid, p in f.values.items()},
    }


def weight_from_json(data, lattice: FaceLattice) -> WeightFunction:
    if not isinstance(data, dict) or set(data) != {"polytope_hash", "values"}:
        raise FormatError("weight file needs 'polytope_hash' and 'values'")
    if data["polytope_hash"] != polytope_hash(lattice.polytope):
        raise ContentError("weight file was written for a different polytope")
    if not isinstance(data["values"], dict):
        raise FormatError("'values' must be an object keyed by face id")
    values = {}
    for key, terms in data["values"].items():
        try:
            fid = int(key)
        except ValueError as exc:
            raise FormatError(f"face id {key!r} is not an integer") from exc
        values[fid] = laurent_from_json(terms)
    try:
        return WeightFunction(lattice, values)
    except ValueError as exc:
        raise ContentError(str(exc)) from exc


def load_weight(path, lattice) -> WeightFunction:
    return weight_from_json(_load_json(path), lattice)


def load_phi(path, n_expected=None) -> HomogPoly:
    """{"n": d, "monomials": [{"exps": [...], "coeff": "p/q"}]}.

    Homogeneity and the dimension match are semantic checks (ContentError).
    """
    data = _load_json(path)
    if not isinstance(data, dict) or set(data) != {"n", "monomials"}:
        raise FormatError(f"{path}: expected 'n' and 'monomials'")
    if not isinstance(data["n"], int) or not isinstance(data["monomials"], list):
        raise FormatError(f"{path}: bad field types")
    monomials = []
    for item in data["monomials"]:
        if not isinstance(item, dict) or set(item) != {"exps", "coeff"}:
            raise FormatError(f"{path}: bad monomial {item!r}")
        exps = item["exps"]
        if not isinstance(exps, list) or not all(isinstance(e, int) for e in exps):
            raise FormatError(f"{path}: exponents must be integers")
        monomials.append((tuple(exps), _rat_parse(item["coeff"])))
    try:
        phi = HomogPoly(data["n"], monomials)
    except ValueError as exc:
        raise ContentError(f"{path}: {exc}") from exc
    if n_expected is not None and phi.n != n_expected:
        raise ContentError(
            f"{path}: integrand lives in dimension {phi.n}, polytope in {n_expected}"
        )
    return phi


def phi_to_json(phi: HomogPoly):
    return {
        "n": phi.n,
        "monomials": [
            {"exps": list(e), "coeff": _rat_str(c)} for e, c in phi.monomials
        ],
    }


def charsum_to_json(s: CharacterSum):
    return {
        "terms": [
            {"m": list(m), "coeff": laurent_to_json(p)} for m, p in s.terms.items()
        ]
    }


def charsum_from_json(data, n: int) -> CharacterSum:
    if not isinstance(data, dict) or set(data) != {"terms"}:
        raise FormatError("character sum needs a 'terms' list")
    terms = {}
    for item in data["terms"]:
        if not isinstance(item, dict) or set(item) != {"m", "coeff"}:
            raise FormatError(f"bad character term {item!r}")
        m = item["m"]
        if not isinstance(m, list) or not all(isinstance(x, int) for x in m):
            raise FormatError(f"character {m!r} is not a list of integers")
        terms[tuple(m)] = laurent_from_json(item["coeff"])
    return CharacterSum(n, terms)


def zpoly_to_json(zp: ZPoly):
    return {"coeffs": [laurent_to_json(c) for c in zp.coeffs]}


def zpoly_from_json(data) -> ZPoly:
    if not isinstance(data, dict) or "coeffs" not in data:
        raise FormatError("z-polynomial needs a 'coeffs' list")
    return ZPoly([laurent_from_json(c) for c in data["coeffs"]])


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"

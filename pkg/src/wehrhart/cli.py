"""Command-line surface.

Every command reads a polytope vertex file, runs one computation, and
emits canonical JSON (or plain text for `hpoly`) to stdout or --out.

Exit codes: 0 success, 1 a verification check failed, 2 the input did
not parse, 3 the input parsed but failed validation.  Errors print one
line to stderr: `error: <kind>: <detail>`.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .algebra import HomogPoly, ZPoly
from .ehrhart import (
    VARIANT_E,
    VARIANT_ETILDE,
    EhrhartReport,
    PolynomialityError,
    constant_term,
    ehrhart_polynomial,
    hodge_character_sum,
    verify_duality_reciprocity,
    verify_hodge_duality,
    verify_purity,
    verify_reciprocity,
)
from .jsonio import (
    ContentError,
    FormatError,
    charsum_to_json,
    dumps,
    lattice_to_json,
    laurent_to_json,
    load_phi,
    load_polytope,
    load_weight,
    weight_to_json,
)
from .polytope import FaceLattice, InvalidPolytope, build_face_lattice, polytope_hash
from .stanley import g_weight_function, h_polynomial
from .weights import all_ones, dualize, random_weight_functions

SUITES = ("all", "reciprocity", "duality", "purity", "hodge")


class CliError(Exception):
    """kind is 'parse' (exit 2) or 'validation' (exit 3)."""

    def __init__(self, kind: str, detail: str):
        super().__init__(detail)
        self.kind = kind
        self.detail = detail

    @property
    def code(self) -> int:
        return 2 if self.kind == "parse" else 3


@dataclass(frozen=True)
class JobSpec:
    """One CLI invocation, fully resolved from argv."""

    command: str
    polytope: str
    face: str | None = None
    weights: str | None = None
    phi: str | None = None
    variant: str = VARIANT_ETILDE
    ell: int | None = None
    suite: str = "all"
    lmax: int = 3
    random_weights: bool = False
    seed: int | None = None
    count: int = 5
    out: str | None = None


class _Parser(argparse.ArgumentParser):
    # raise instead of exiting so bad flags share the parse-error channel
    def error(self, message):
        raise CliError("parse", message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="wehrhart", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("polytope", help="polytope vertex JSON file")
        p.add_argument("-o", "--out", help="write output here instead of stdout")
        return p

    add("faces", "facet presentation and face lattice export")

    p = add("gweights", "g-weight function of a face")
    p.add_argument("--face", required=True, help="face id, or P for the whole polytope")

    add("hpoly", "h-polynomial (prints text)")

    p = add("dualize", "apply the duality involution to a weight file")
    p.add_argument("--weights", required=True)

    p = add("charsum", "weighted lattice-point character sum at one dilation")
    p.add_argument("--l", dest="ell", type=int, required=True)
    p.add_argument("--weights")

    p = add("ehrhart", "interpolate the dilation polynomial")
    p.add_argument("--phi", help="integrand file (default: constant 1)")
    p.add_argument("--variant", choices=(VARIANT_E, VARIANT_ETILDE), required=True)
    p.add_argument("--weights")

    p = add("verify", "run identity checks and report")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--lmax", type=int, required=True)
    p.add_argument("--phi")
    p.add_argument("--random-weights", action="store_true")
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int, default=5)
    return parser


def parse_args(argv) -> JobSpec:
    ns = _build_parser().parse_args(argv)
    spec = JobSpec(
        command=ns.command,
        polytope=ns.polytope,
        face=getattr(ns, "face", None),
        weights=getattr(ns, "weights", None),
        phi=getattr(ns, "phi", None),
        variant=getattr(ns, "variant", VARIANT_ETILDE),
        ell=getattr(ns, "ell", None),
        suite=getattr(ns, "suite", "all"),
        lmax=getattr(ns, "lmax", 3),
        random_weights=getattr(ns, "random_weights", False),
        seed=getattr(ns, "seed", None),
        count=getattr(ns, "count", 5),
        out=ns.out,
    )
    if spec.command == "verify":
        if spec.lmax < 1:
            raise CliError("parse", "--lmax must be a positive integer")
        if spec.random_weights and spec.seed is None:
            raise CliError("parse", "--random-weights requires --seed")
        if spec.count < 1:
            raise CliError("parse", "--count must be a positive integer")
    return spec


def _load_lattice(spec: JobSpec) -> FaceLattice:
    P = load_polytope(spec.polytope)
    return build_face_lattice(P)


def _resolve_weights(spec: JobSpec, lattice: FaceLattice):
    if spec.weights is None:
        return all_ones(lattice)
    return load_weight(spec.weights, lattice)


def _resolve_phi(spec: JobSpec, lattice: FaceLattice) -> HomogPoly:
    if spec.phi is None:
        return HomogPoly.one(lattice.polytope.n)
    return load_phi(spec.phi, n_expected=lattice.polytope.n)


def _resolve_face(spec: JobSpec, lattice: FaceLattice) -> int:
    if spec.face == "P":
        return lattice.top_id
    try:
        fid = int(spec.face)
    except ValueError:
        raise CliError("parse", f"--face must be an integer id or P, got {spec.face!r}")
    if not 0 <= fid < len(lattice.faces):
        raise CliError("validation", f"no face with id {fid}")
    if lattice.faces[fid].dim < 0:
        raise CliError("validation", "the empty face carries no g-weights")
    return fid


def _cmd_faces(spec, lattice):
    return dumps(lattice_to_json(lattice))


def _cmd_gweights(spec, lattice):
    fid = _resolve_face(spec, lattice)
    return dumps(weight_to_json(g_weight_function(lattice, fid)))


def _cmd_hpoly(spec, lattice):
    return str(h_polynomial(lattice)) + "\n"


def _cmd_dualize(spec, lattice):
    f = load_weight(spec.weights, lattice)
    return dumps(weight_to_json(dualize(f)))


def _cmd_charsum(spec, lattice):
    f = _resolve_weights(spec, lattice)
    return dumps(charsum_to_json(hodge_character_sum(lattice, f, spec.ell)))


def _cmd_ehrhart(spec, lattice):
    f = _resolve_weights(spec, lattice)
    phi = _resolve_phi(spec, lattice)
    zp = ehrhart_polynomial(lattice, f, phi, spec.variant)
    c0 = constant_term(lattice, f, phi, spec.variant)
    payload = {
        "polytope_hash": polytope_hash(lattice.polytope),
        "variant": spec.variant,
        "degree_bound": lattice.polytope.n + phi.degree,
        "degree": zp.degree,
        "coeffs": [laurent_to_json(c) for c in zp.coeffs],
        "constant_term": laurent_to_json(c0),
        "constant_term_check": zp(0) == c0,
    }
    return dumps(payload)


def _verify_weight_set(spec: JobSpec, lattice: FaceLattice):
    named = [
        ("all-ones", all_ones(lattice)),
        ("g-weights(P)", g_weight_function(lattice, lattice.top_id)),
    ]
    if spec.random_weights:
        draws = random_weight_functions(lattice, spec.seed, spec.count)
        named += [(f"random[seed={spec.seed}]#{i}", w) for i, w in enumerate(draws)]
    return named


def _run_verify(spec: JobSpec, lattice: FaceLattice):
    phi = _resolve_phi(spec, lattice)
    phash = polytope_hash(lattice.polytope)
    ells = range(1, spec.lmax + 1)
    weight_set = _verify_weight_set(spec, lattice)
    reports = []

    def reciprocity_like(checker, suite_name):
        for label, f in weight_set:
            for variant in (VARIANT_ETILDE, VARIANT_E):
                rep = EhrhartReport(phash, label, str(phi))
                zp = ehrhart_polynomial(lattice, f, phi, variant)
                for ell in ells:
                    rep.add(checker(lattice, f, phi, ell, variant, zpoly=zp))
                reports.append((suite_name, rep))

    if spec.suite in ("all", "reciprocity"):
        reciprocity_like(verify_reciprocity, "reciprocity")
    if spec.suite in ("all", "duality"):
        reciprocity_like(verify_duality_reciprocity, "duality")
    if spec.suite in ("all", "purity"):
        for fid in lattice.nonempty_ids:
            rep = EhrhartReport(phash, f"g-weights(face {fid})", str(phi))
            zp = ehrhart_polynomial(
                lattice, g_weight_function(lattice, fid), phi, VARIANT_E
            )
            for ell in ells:
                rep.add(verify_purity(lattice, fid, phi, ell, zpoly=zp))
            reports.append(("purity", rep))
    if spec.suite in ("all", "hodge"):
        for label, f in weight_set:
            rep = EhrhartReport(phash, label, "-")
            for ell in ells:
                rep.add(verify_hodge_duality(lattice, f, ell))
            reports.append(("hodge", rep))
    return reports


def render_verify_reports(reports) -> dict:
    rendered = []
    for suite_name, rep in reports:
        entry = rep.render()
        entry["suite"] = suite_name
        rendered.append(entry)
    total = sum(len(rep.checks) for _, rep in reports)
    failed = sum(1 for _, rep in reports for c in rep.checks if not c.passed)
    return {
        "reports": rendered,
        "checks": total,
        "failed": failed,
        "passed": failed == 0,
    }


def exit_code_for_reports(reports) -> int:
    return 0 if all(rep.passed for _, rep in reports) else 1


def _cmd_verify(spec, lattice):
    reports = _run_verify(spec, lattice)
    return dumps(render_verify_reports(reports)), exit_code_for_reports(reports)


_COMMANDS = {
    "faces": _cmd_faces,
    "gweights": _cmd_gweights,
    "hpoly": _cmd_hpoly,
    "dualize": _cmd_dualize,
    "charsum": _cmd_charsum,
    "ehrhart": _cmd_ehrhart,
    "verify": _cmd_verify,
}


def run(spec: JobSpec, stdout=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    lattice = _load_lattice(spec)
    result = _COMMANDS[spec.command](spec, lattice)
    text, code = result if isinstance(result, tuple) else (result, 0)
    if spec.out is not None:
        with open(spec.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main(argv=None) -> int:
    try:
        spec = parse_args(argv if argv is not None else sys.argv[1:])
        return run(spec)
    except CliError as exc:
        print(f"error: {exc.kind}: {exc.detail}", file=sys.stderr)
        return exc.code
    except FormatError as exc:
        print(f"error: parse: {exc}", file=sys.stderr)
        return 2
    except (ContentError, InvalidPolytope) as exc:
        print(f"error: validation: {exc}", file=sys.stderr)
        return 3
    except PolynomialityError as exc:
        print(f"error: check: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

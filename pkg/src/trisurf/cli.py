"""Command-line interface.

Subcommands::

    trisurf validate FILE            check a face list, print the surface data
    trisurf classify FILE            cable/rod table for every edge
    trisurf canon FILE               canonical code and canonical face list
    trisurf apply FILE DESC ...      replay split/shrink descriptors
    trisurf enumerate ...            build catalogs (splitting | exhaustive | compare)
    trisurf verify-moebius ...       run the full classification certificate

Exit status: 0 on success, 1 when a verification fails (invalid complex,
non-empty catalog diff, failed certificate clause), 2 on usage or parse
errors.  All output is deterministic; ``--jobs`` only changes wall time.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .canon import canonical_code, canonical_faces
from .complex_core import SURFACE_BY_NAME, SurfaceKind, Triangulation, dumps, loads
from .enumeration import (
    DEFAULT_CEILING,
    compare_catalogs,
    enumerate_exhaustive_range,
    generate_by_splitting,
    min_order,
    serialize_catalog,
)
from .errors import CeilingExceeded, ParseError, TriangulationError
from .moebius_pipeline import (
    build_certificate,
    irreducible_seeds,
    render_certificate,
    render_members_report,
)
from .moves import apply_descriptor, classify_edge

OK, VERIFY_FAILED, USAGE = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    surface: SurfaceKind
    min_order: int
    max_order: int
    engine: str
    ceiling: int
    jobs: int
    out: Path | None


def _load(path: str) -> Triangulation:
    return loads(Path(path).read_text(encoding="utf-8"))


def _emit(out: Path | None, name: str, text: str) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.mkdir(parents=True, exist_ok=True)
        (out / name).write_text(text, encoding="utf-8")
        print(f"wrote {out / name}")


def cmd_validate(args: argparse.Namespace) -> int:
    tri = _load(args.path)
    kind = tri.surface_kind
    print(f"vertices: {tri.order}")
    print(f"edges: {len(tri.edges)}")
    print(f"faces: {len(tri.faces)}")
    print(
        f"chi={kind.euler_characteristic} "
        f"{'orientable' if kind.orientable else 'non-orientable'} "
        f"boundary={kind.boundary_components}"
    )
    print(f"surface: {kind}")
    return OK


def cmd_classify(args: argparse.Namespace) -> int:
    tri = _load(args.path)
    print("edge verdict impediments")
    for edge in tri.edges:
        result = classify_edge(tri, edge)
        names = ",".join(sorted(i.value for i in result.impediments)) or "-"
        print(f"{edge[0]}-{edge[1]} {result.verdict} {names}")
    return OK


def cmd_apply(args: argparse.Namespace) -> int:
    tri = _load(args.path)
    for descriptor in args.descriptor:
        tri = apply_descriptor(tri, descriptor)
    sys.stdout.write(dumps(tri))
    return OK


def cmd_canon(args: argparse.Namespace) -> int:
    tri = _load(args.path)
    print(f"code: {canonical_code(tri).hex()}")
    print("canonical faces:")
    for a, b, c in canonical_faces(tri):
        print(f"{a} {b} {c}")
    return OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    config = RunConfig(
        surface=SURFACE_BY_NAME[args.surface],
        min_order=args.min_order,
        max_order=args.max_order,
        engine=args.engine,
        ceiling=args.ceiling,
        jobs=args.jobs,
        out=Path(args.out) if args.out else None,
    )
    if config.min_order > config.max_order:
        print("error: --min-order exceeds --max-order", file=sys.stderr)
        return USAGE
    tag = str(config.surface).replace("-", "_")

    def exhaustive():
        return enumerate_exhaustive_range(
            config.surface, config.min_order, config.max_order,
            config.ceiling, config.jobs,
        )

    def splitting():
        seeds = irreducible_seeds(
            config.surface, config.max_order, config.ceiling, config.jobs
        )
        catalog = generate_by_splitting(seeds, config.max_order)
        return catalog.restricted(config.min_order, config.max_order)

    if config.engine == "exhaustive":
        _emit(config.out, f"{tag}_exhaustive.catalog", serialize_catalog(exhaustive()))
        return OK
    if config.engine == "splitting":
        _emit(config.out, f"{tag}_splitting.catalog", serialize_catalog(splitting()))
        return OK

    left = exhaustive()
    right = splitting()
    diff = compare_catalogs(left, right)
    lines = [
        "# trisurf catalog diff",
        f"surface: {config.surface}",
        f"orders: {config.min_order}..{config.max_order}",
        f"exhaustive entries: {len(left)}",
        f"splitting entries: {len(right)}",
        f"only-exhaustive: {' '.join(e.code.hex() for e in diff.only_in_a) or '-'}",
        f"only-splitting: {' '.join(e.code.hex() for e in diff.only_in_b) or '-'}",
        f"result: {'EMPTY' if diff.is_empty else 'NONEMPTY'}",
    ]
    _emit(config.out, f"{tag}_exhaustive.catalog", serialize_catalog(left))
    _emit(config.out, f"{tag}_splitting.catalog", serialize_catalog(right))
    _emit(config.out, f"{tag}_diff.txt", "\n".join(lines) + "\n")
    return OK if diff.is_empty else VERIFY_FAILED


def cmd_verify_moebius(args: argparse.Namespace) -> int:
    certificate = build_certificate(
        max_cross_check_order=args.max_order,
        ceiling=args.ceiling,
        jobs=args.jobs,
    )
    out = Path(args.out) if args.out else None
    _emit(out, "moebius_certificate.txt", render_certificate(certificate))
    _emit(out, "moebius_members.txt", render_members_report(certificate))
    if certificate.passed:
        return OK
    for clause in certificate.failures:
        print(f"FAILED clause [{clause.ident}]: {clause.evidence}", file=sys.stderr)
    return VERIFY_FAILED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trisurf",
        description="surface-triangulation kernel, catalogs and certification",
    )
    parser.add_argument("--version", action="version", version=f"trisurf {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a face-list file")
    p.add_argument("path")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("classify", help="cable/rod classification of every edge")
    p.add_argument("path")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("canon", help="canonical code and face list")
    p.add_argument("path")
    p.set_defaults(fn=cmd_canon)

    p = sub.add_parser(
        "apply",
        help="apply splitting/shrinking descriptors to a face list",
        description='descriptors: "sp v u w a" (corner split), '
                    '"spt v u" (truncated split), "sh a b" (shrink)',
    )
    p.add_argument("path")
    p.add_argument("descriptor", nargs="+")
    p.set_defaults(fn=cmd_apply)

    p = sub.add_parser("enumerate", help="generate triangulation catalogs")
    p.add_argument("--surface", required=True, choices=sorted(SURFACE_BY_NAME))
    p.add_argument("--min-order", type=int, required=True)
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument(
        "--engine", default="compare",
        choices=["splitting", "exhaustive", "compare"],
    )
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None, help="output directory (default: stdout)")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser(
        "verify-moebius",
        help="build the irreducible moebius-band completeness certificate",
    )
    p.add_argument(
        "--max-order", type=int, default=8,
        help="top order for the exhaustive cross-check (default 8)",
    )
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_verify_moebius)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return USAGE
    except CeilingExceeded as exc:
        print(f"CeilingExceeded: {exc}", file=sys.stderr)
        return USAGE
    except TriangulationError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return VERIFY_FAILED
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())

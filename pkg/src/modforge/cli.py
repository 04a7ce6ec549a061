"""Command-line front end.

Exit codes: 0 completed (free/representable or plain report), 3 certified
non-representable, 2 input error, 4 cap exceeded, 5 internal invariant
failure.
"""

import argparse
import sys
import time
from pathlib import Path

from . import __version__
from .config import using_caps
from .corpus import corpus_generate
from .decompose import reduce_to_obstruction, split_principal
from .errors import (CapExceeded, InvariantViolation, ModforgeError, PipelineError,
                     PreconditionError, SpecError)
from .functor import certify_nonrepresentable, gl_points, parabolic_points, recheck
from .ideal import (ideal_closure, ideal_product, local_structure, minimal_generators,
                    quotient_ring)
from .module import (flattening_ideal, is_free_oracle, minimal_presentation,
                     verify_flattening_universal)
from .ring import RingHom, build_ring, ring_to_spec, units_of
from .serialize import (digest, dumps, elements_json, ideal_json, load_document,
                        parse_module, parse_ring)

EXIT_OK, EXIT_INPUT, EXIT_NONREP, EXIT_CAP, EXIT_INTERNAL = 0, 2, 3, 4, 5

COMMANDS = ("validate", "analyze", "decompose", "gl", "certify", "recheck", "corpus")


def _matrix(M):
    return [[list(x) for x in row] for row in M]


def _ring_summary(R):
    info = local_structure(R)
    out = {"order": R.order, "additive_orders": list(R.orders), "units": len(units_of(R)),
           "is_local": info.is_local}
    if info.is_local:
        out.update(maximal_ideal=ideal_json(info.maximal_ideal),
                   residue_field_order=info.residue_field_order,
                   nilpotency_index=info.nilpotency_index)
    return out


def cmd_validate(doc, args):
    R = parse_ring(doc)
    result = {"ring": _ring_summary(R), "axioms": "ok"}
    if "presentation" in doc:
        E = parse_module(doc, R)
        result["module"] = {"rows": E.rows, "cols": E.presentation.cols, "order": E.order,
                            "invariants": list(E.invariants)}
    return result, EXIT_OK


def cmd_analyze(doc, args):
    R = parse_ring(doc)
    E = parse_module(doc, R)
    info = local_structure(R)
    if not info.is_local:
        raise PreconditionError(f"{R.name()} is not local")
    I = flattening_ideal(E)
    oracle = is_free_oracle(E)
    result = {
        "local": True,
        "module_order": E.order,
        "minimal_presentation": {"rows": minimal_presentation(E).rows,
                                 "entries": _matrix(minimal_presentation(E).entries)},
        "flattening_ideal": dict(ideal_json(I), minimal_generators=elements_json(minimal_generators(R, I))),
        "free": I.is_zero(),
        "oracle_free": oracle.free,
    }
    if oracle.free != I.is_zero():
        raise InvariantViolation("freeness oracle disagrees with the flattening ideal")
    if I.is_zero():
        result["verdict"] = f"locally free of rank {oracle.rank}, GL_E = GL_{oracle.rank}"
        result["rank"] = oracle.rank
    else:
        result["verdict"] = "not locally free; GL_E is not representable"
    report = verify_flattening_universal(E)
    result["universal_property"] = {
        "passed": report.passed,
        "unique": report.uniquely_determined,
        "ideals": [{"ideal": elements_json(row.ideal.sorted_elements()), "free": row.free,
                    "contains_I": row.contains} for row in report.rows],
    }
    if not report.passed:
        raise InvariantViolation("flattening universal property failed")
    return result, EXIT_OK


def _certificate_json(cert):
    return {"a": list(cert.a), "n": cert.n, "m": cert.m,
            "minimal_presentation": _matrix(cert.minimal.presentation.entries),
            "psi": _matrix(cert.psi), "row_ops": _matrix(cert.row_ops),
            "row_ops_inverse": _matrix(cert.row_ops_inv), "col_ops": _matrix(cert.col_ops),
            "iso": [[list(x) for x in v] for v in cert.iso.image_vectors()],
            "iso_inverse": [[list(x) for x in v] for v in cert.inverse.image_vectors()],
            "checks": cert.check()}


def cmd_decompose(doc, args):
    R = parse_ring(doc)
    E = parse_module(doc, R)
    info = local_structure(R)
    if not info.is_local:
        raise PreconditionError(f"{R.name()} is not local")
    I = flattening_ideal(E)
    direct = (len(minimal_generators(R, I)) <= 1
              and ideal_product(info.maximal_ideal, I).is_zero())
    if direct:
        return {"mode": "direct", "decomposition": _certificate_json(split_principal(E))}, EXIT_OK
    trace = reduce_to_obstruction(E)
    return {"mode": "reduced",
            "trace": {"r_initial": trace.r_initial,
                      "steps": [{"description": d, "target": ring_to_spec(h.target),
                                 "images": elements_json(h.images)} for d, h in trace.steps],
                      "final_ring": ring_to_spec(trace.final_ring),
                      "final_ideal": ideal_json(trace.final_I),
                      "flags": trace.flags},
            "decomposition": _certificate_json(trace.decomposition)}, EXIT_OK


def _hom_from_doc(doc, R):
    if "hom" in doc:
        T = build_ring(doc["hom"]["target"])
        return RingHom(R, T, doc["hom"]["images"])
    if "quotient" in doc:
        _, pi = quotient_ring(R, ideal_closure(R, [R.reduce(g) for g in doc["quotient"]]))
        return pi
    return None


def cmd_gl(doc, args):
    R = parse_ring(doc)
    E = parse_module(doc, R)
    hom = _hom_from_doc(doc, R)
    G = gl_points(E, hom)
    result = {"target_ring": ring_to_spec(G.module.ring), "order": G.order,
              "generators": [[list(map(list, v)) for v in G.generator_images(g)]
                             for g in G.generators()]}
    if "submodule" in doc:
        P = parabolic_points(E, doc["submodule"], hom)
        result["parabolic"] = {"submodule": list(P.submodule_gens), "order": P.order,
                               "quotient_locally_free": P.quotient_locally_free}
    return result, EXIT_OK


def cmd_certify(doc, args):
    R = parse_ring(doc)
    E = parse_module(doc, R)
    out = certify_nonrepresentable(R, E, seed=args.seed)
    doc_out = out.to_json()
    return doc_out, EXIT_NONREP if doc_out["verdict"] == "non-representable" else EXIT_OK


def cmd_recheck(doc, args):
    cert = doc.get("result", doc)
    if cert.get("verdict") != "non-representable":
        raise SpecError("input is not a non-representability certificate")
    try:
        report = recheck(cert)
    except (KeyError, TypeError, IndexError) as exc:
        raise SpecError(f"malformed certificate: {exc!r}") from None
    result = {"valid": report.valid, "checks": report.checks,
              "verdict": "non-representable" if report.valid else "invalid certificate"}
    if not report.valid:
        raise InvariantViolation(f"certificate failed recheck: {report.checks}")
    return result, EXIT_NONREP


HANDLERS = {"validate": cmd_validate, "analyze": cmd_analyze, "decompose": cmd_decompose,
            "gl": cmd_gl, "certify": cmd_certify, "recheck": cmd_recheck}


def _exit_for(exc):
    if isinstance(exc, PipelineError):
        return _exit_for(exc.cause)
    if isinstance(exc, CapExceeded):
        return EXIT_CAP
    if isinstance(exc, InvariantViolation):
        return EXIT_INTERNAL
    if isinstance(exc, (SpecError, PreconditionError)):
        return EXIT_INPUT
    return EXIT_INTERNAL


def build_parser():
    parser = argparse.ArgumentParser(prog="modforge", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", "-i", help="input JSON document (default: stdin)")
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--human", dest="fmt", action="store_const", const="human")
    parser.add_argument("--cap-ring", type=int)
    parser.add_argument("--cap-enum", type=int)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--output", "-o", help="write the report (or corpus directory) here")
    parser.add_argument("--bound", type=int, default=16, help="corpus: largest ring order")
    parser.add_argument("--timing", action="store_true",
                        help="include wall-clock timing (makes output non-reproducible)")
    parser.set_defaults(fmt="json")
    return parser


def _human(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_human(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat_list(v):
                lines.append(f"{pad}-")
                lines.extend(_human(v, indent + 1))
            else:
                lines.append(f"{pad}- {v}")
    return lines


def _flat_list(v):
    return isinstance(v, list) and all(not isinstance(x, dict) for x in v) and len(str(v)) < 100


def run(argv=None):
    """Parse arguments, run one job, return (report, exit code)."""
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    report = {"tool": "modforge", "version": __version__, "command": args.command, "seed": args.seed}
    code = EXIT_OK
    try:
        with using_caps(ring=args.cap_ring, enum=args.cap_enum):
            if args.command == "corpus":
                if not args.output:
                    raise SpecError("corpus needs --output DIR")
                manifest = corpus_generate(args.bound, args.output)
                report["result"] = {"bound": args.bound, "rings": manifest}
            else:
                text = Path(args.input).read_text(encoding="utf-8") if args.input else sys.stdin.read()
                report["input_sha256"] = digest(text)
                result, code = HANDLERS[args.command](load_document(text), args)
                report["result"] = result
    except (ModforgeError, OSError) as exc:
        code = EXIT_INPUT if isinstance(exc, OSError) else _exit_for(exc)
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, PipelineError):
            report["error"]["stage"] = exc.stage
    report["exit_code"] = code
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - started, 6)
    return report, code, args


def main(argv=None):
    report, code, args = run(argv)
    if args.fmt == "human":
        text = "\n".join(_human(report)) + "\n"
    else:
        text = dumps(report)
    if args.output and args.command != "corpus":
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

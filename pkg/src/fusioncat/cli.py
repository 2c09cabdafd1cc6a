"""Command-line driver: run pipeline stages, store artifacts, verify, export.

Exit codes: 0 on success, 1 when a verification check fails, 2 when a
requested artifact is missing from the catalog, 64 on bad arguments.
"""

import argparse
import re
import sys

from . import catalog as cat

EX_OK = 0
EX_CHECK = 1
EX_MISSING = 2
EX_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _algebra(text):
    m = re.fullmatch(r"([A-G])(\d+)", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected a family letter and rank, like A3, got {text!r}")
    from . import weights as wt

    return wt.algebra(m.group(1), int(m.group(2)))


def _fixture(text):
    if text != "e4":
        raise argparse.ArgumentTypeError("the only shipped fixture is 'e4'")
    return text


# --- stage commands ----------------------------------------------------------

def cmd_alcove(args):
    from . import weights as wt

    labels = wt.enumerate_alcove(args.algebra, args.level)
    for lab in labels:
        h = wt.conformal_dimension(args.algebra, args.level, lab)
        print(f"{lab}  h={h}")
    print(f"{len(labels)} weights in the level-{args.level} alcove")
    return EX_OK


def cmd_fusion(args):
    from . import fusion as fr
    from . import weights as wt

    labels = wt.enumerate_alcove(args.algebra, args.level)
    mats = fr.fusion_matrices(args.algebra, args.level)
    rec = cat.fusion_ring_record(args.algebra, args.level, labels, mats)
    h = cat.Catalog().put(rec)
    print(f"stored fusion-ring {h} ({len(labels)} matrices)")
    return EX_OK


def cmd_modular(args):
    from . import modular as md

    data = md.modular_data(args.algebra, args.level)
    rec = cat.modular_data_record(data)
    h = cat.Catalog().put(rec)
    print(f"stored modular-data {h} ({len(data.labels)} labels, c={data.central_charge})")
    return EX_OK


def cmd_embed_scan(args):
    from . import embedding as emb

    try:
        sols = emb.scan_embeddings(args.base)
    except KeyError as e:
        print(f"unknown algebra: {e}", file=sys.stderr)
        return EX_USAGE
    for e in sols:
        print(f"level {e.level:3d}  ambient {e.ambient.compact_name:>9s}  charge {e.charge}")
    print(f"{len(sols)} embeddings of {args.base}")
    return EX_OK


def _store_flagship_modular(store):
    from . import pipeline as pl

    return store.put(cat.modular_data_record(pl.base_data()))


def _store_flagship_fusion(store):
    from . import pipeline as pl

    data = pl.base_data()
    return store.put(cat.fusion_ring_record(pl.spec(), pl.LEVEL, data.labels, pl.ring()))


def _store_flagship_invariant(store):
    from . import pipeline as pl

    mh = _store_flagship_modular(store)
    rec = cat.invariant_record(
        pl.invariant(), pl.base_data(), pl.AMBIENT, inputs={"modular-data": mh}
    )
    return store.put(rec)


def _store_flagship_family(store):
    from . import pipeline as pl

    fh = _store_flagship_fusion(store)
    ih = _store_flagship_invariant(store)
    rec = cat.toric_family_record(
        pl.family(), pl.chiral_lift(), inputs={"fusion-ring": fh, "invariant": ih}
    )
    return store.put(rec)


def _store_flagship_algebra(store):
    from . import pipeline as pl

    th = _store_flagship_family(store)
    rec = cat.graph_algebra_record(
        pl.graph_algebra(), pl.module_graph(), inputs={"toric-family": th}
    )
    return store.put(rec)


def cmd_invariant(args):
    from . import pipeline as pl

    h = _store_flagship_invariant(cat.Catalog())
    M = pl.invariant().matrix
    print(f"stored invariant {h} (trace {int(M.trace())}, gram trace {int((M.T @ M).trace())})")
    return EX_OK


def cmd_split(args):
    from . import pipeline as pl

    h = _store_flagship_family(cat.Catalog())
    fam = pl.family()
    print(f"stored toric-family {h} (rank {fam.rank}, {fam.slot_count} slots)")
    return EX_OK


def cmd_realize(args):
    from . import pipeline as pl

    h = _store_flagship_algebra(cat.Catalog())
    print(f"stored graph-algebra {h} ({pl.graph_algebra().doublet_survivors} closure-exact solutions)")
    return EX_OK


def cmd_ocneanu(args):
    from . import pipeline as pl

    store = cat.Catalog()
    gh = _store_flagship_algebra(store)
    th = _store_flagship_family(store)
    rec = cat.oc_graph_record(
        pl.quantum_symmetries(),
        pl.slot_map(),
        inputs={"graph-algebra": gh, "toric-family": th},
    )
    h = store.put(rec)
    print(f"stored oc-graph {h} (48 basis pairs)")
    return EX_OK


def cmd_verify(args):
    from . import acceptance as acc

    results = acc.run_all()
    for num, name, ok, detail in results:
        print(f"criterion {num}: {'PASS' if ok else 'FAIL'} — {name}: {detail}")
    failed = [num for num, _, ok, _ in results if not ok]
    if failed:
        print(f"{len(failed)} of {len(results)} criteria failed: {failed}")
        return EX_CHECK
    print(f"all {len(results)} criteria passed")
    return EX_OK


def cmd_export(args):
    store = cat.Catalog()
    if args.hash:
        rec = store.get(args.hash)
        if rec.kind != args.kind:
            print(f"artifact {args.hash} is {rec.kind}, not {args.kind}", file=sys.stderr)
            return EX_USAGE
    else:
        hashes = store.find(args.kind)
        if not hashes:
            raise cat.MissingArtifact(args.kind)
        rec = store.get(hashes[0])
    if args.format == "json":
        text = rec.to_json() + "\n"
    else:
        graph = rec.payload.get("graph")
        if graph is None:
            print(f"{args.kind} artifacts have no graph to draw", file=sys.stderr)
            return EX_USAGE
        text = cat.emit_dot(graph, name=args.kind)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EX_OK


# --- wiring ------------------------------------------------------------------

def build_parser():
    p = _Parser(prog="fusioncat", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def stage(name, fn, help):
        q = sub.add_parser(name, help=help)
        q.set_defaults(func=fn)
        return q

    q = stage("alcove", cmd_alcove, "list the level-k alcove with conformal dimensions")
    q.add_argument("--algebra", type=_algebra, required=True)
    q.add_argument("--level", type=int, required=True)

    q = stage("fusion", cmd_fusion, "compute and store the fusion ring")
    q.add_argument("--algebra", type=_algebra, required=True)
    q.add_argument("--level", type=int, required=True)

    q = stage("modular", cmd_modular, "compute and store the modular data")
    q.add_argument("--algebra", type=_algebra, required=True)
    q.add_argument("--level", type=int, required=True)

    q = stage("embed-scan", cmd_embed_scan, "scan for equal-charge ambient algebras at level 1")
    q.add_argument("--base", required=True, help="compact name, like 'SU(4)'")

    stage("invariant", cmd_invariant, "solve and store the flagship modular invariant")

    q = stage("split", cmd_split, "run modular splitting and store the toric family")
    q.add_argument("--fixture", type=_fixture, default="e4")

    q = stage("realize", cmd_realize, "solve and store the graph algebra")
    q.add_argument("--fixture", type=_fixture, default="e4")

    q = stage("ocneanu", cmd_ocneanu, "build and store the quantum-symmetry basis")
    q.add_argument("--fixture", type=_fixture, default="e4")

    q = stage("verify", cmd_verify, "run the twelve release checks")
    q.add_argument("--fixture", type=_fixture, default="e4")

    q = stage("export", cmd_export, "write a stored artifact as canonical JSON or DOT")
    q.add_argument("--kind", choices=cat.ARTIFACT_KINDS, required=True)
    q.add_argument("--format", choices=("json", "dot"), default="json")
    q.add_argument("--hash", default=None, help="content hash; default is the first stored hash of the kind")
    q.add_argument("--out", default=None, help="output path; default stdout")

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except cat.MissingArtifact as e:
        print(f"missing artifact: {e}", file=sys.stderr)
        return EX_MISSING


if __name__ == "__main__":
    sys.exit(main())

"""Command line interface.

Matrices are given as "a,b;c,d".  Exit codes: 0 success, 1 verification
mismatch, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from itertools import product

from .berg import classify_symmetry, count_berg, matrix_report, shapes
from .bifan import cutting_word
from .intmat import Mat2Z, NotHyperbolicError, NotUnimodularError
from .oracle import (
    box_points,
    build_box,
    placement_lattice_points,
    quotient_by_equivalence,
    realize_placement,
    verify_markov,
    verify_shape,
)
from .render import RenderSpec, render_bipartition, render_fan


def _parse_matrix(text: str) -> Mat2Z:
    m = Mat2Z.parse(text)
    if not m.is_hyperbolic():
        raise NotHyperbolicError(f"{text!r} is not hyperbolic")
    return m


def _emit(args, text: str):
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_analyze(args) -> int:
    m = _parse_matrix(args.matrix)
    _emit(args, json.dumps(matrix_report(m), indent=2, sort_keys=True) + "\n")
    return 0


def _cmd_word(args) -> int:
    m = _parse_matrix(args.matrix)
    w = cutting_word(m)
    if args.json:
        _emit(args, json.dumps(w.to_json(), indent=2, sort_keys=True) + "\n")
    else:
        _emit(args, f"word {w.word} kind {w.kind} N {w.N} K {w.K} sign {w.sign} "
                    f"generator {w.G}\n")
    return 0


def _cmd_matrices(args) -> int:
    m = _parse_matrix(args.matrix)
    rows = []
    for sh in shapes(m):
        rows.append({"index": sh.index, "C": sh.C.rows(),
                     "count": count_berg(sh.C), "isolated": sh.isolated})
    if args.json:
        _emit(args, json.dumps(rows, indent=2, sort_keys=True) + "\n")
    else:
        lines = [f"{r['index']:>3}  {Mat2Z(*sum(r['C'], []))!s:<12} "
                 f"count {r['count']:<3} {'isolated' if r['isolated'] else 'connected'}"
                 for r in rows]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_count(args) -> int:
    m = _parse_matrix(args.matrix)
    total = sum(count_berg(sh.C) for sh in shapes(m))
    _emit(args, f"{total}\n")
    return 0


def _cmd_placements(args) -> int:
    m = _parse_matrix(args.matrix)
    out = []
    for sh in shapes(m):
        if args.index is not None and sh.index != args.index:
            continue
        pts = placement_lattice_points(sh, m)
        out.append({"index": sh.index, "C": sh.C.rows(),
                    "points": [list(p) for p in pts]})
    _emit(args, json.dumps(out, indent=2, sort_keys=True) + "\n")
    return 0


def _cmd_symmetry(args) -> int:
    m = _parse_matrix(args.matrix)
    rep = classify_symmetry(cutting_word(m))
    if args.json:
        _emit(args, json.dumps(rep.to_json(), indent=2, sort_keys=True) + "\n")
    else:
        _emit(args, f"type {rep.paper_type} order4 {rep.has_order4} "
                    f"simple2 {rep.has_simple2} shift2 {rep.has_shift2} "
                    f"({rep.witness})\n")
    return 0


def _cmd_render(args) -> int:
    m = _parse_matrix(args.matrix)
    if args.index and ":" in args.index:
        lo, hi = (int(part) for part in args.index.split(":", 1))
        svg = render_fan(m, lo, hi)
    else:
        idx = int(args.index) if args.index else 0
        shape_list = shapes(m)
        if not 0 <= idx < len(shape_list):
            raise ValueError(f"index {idx} outside fan range 0..{len(shape_list)-1}")
        svg = render_bipartition(RenderSpec(shape_list[idx]))
    _emit(args, svg)
    return 0


def _verify_matrix(m: Mat2Z, rng: random.Random | None = None) -> list[dict]:
    records = []
    for sh in shapes(m):
        rec = verify_shape(sh, m)
        box = build_box(sh, m)
        pts = box_points(box)[1]
        sample = pts if rng is None else rng.sample(pts, min(4, len(pts)))
        rec["markov"] = all(
            verify_markov(realize_placement(sh, m, pt), m) for pt in sample
        )
        rec["match"] = rec["match"] and rec["markov"]
        records.append(rec)
    return records


def _cmd_verify(args) -> int:
    m = _parse_matrix(args.matrix)
    records = _verify_matrix(m)
    if args.json:
        _emit(args, json.dumps(records, indent=2, sort_keys=True) + "\n")
    else:
        lines = [f"C {Mat2Z(*sum(r['C'], []))!s:<12} case {r['case_id']} "
                 f"raw {r['raw_points']:<3} classes {r['classes']:<3} "
                 f"formula {r['formula']:<3} {'ok' if r['match'] else 'MISMATCH'}"
                 for r in records]
        _emit(args, "\n".join(lines) + "\n")
    return 0 if all(r["match"] for r in records) else 1


def corpus(bound: int, dedup: bool = False) -> list[Mat2Z]:
    """Every hyperbolic element of GL(2,Z) with entries in [-bound, bound],
    optionally keeping one representative per conjugation orbit under the
    elementary moves (transpose and sign flip)."""
    seen = set()
    mats = []
    rng = range(-bound, bound + 1)
    for a, b, c, d in product(rng, repeat=4):
        if abs(a * d - b * c) != 1:
            continue
        m = Mat2Z(a, b, c, d)
        if not m.is_hyperbolic():
            continue
        if dedup:
            key = min((a, b, c, d), (a, c, b, d), (-a, -b, -c, -d), (-a, -c, -b, -d))
            if key in seen:
                continue
            seen.add(key)
        mats.append(m)
    return mats


def _sweep_worker(spec: tuple[int, int, int, int, int | None]) -> tuple[str, int, int]:
    a, b, c, d, seed = spec
    m = Mat2Z(a, b, c, d)
    rng = random.Random(seed) if seed is not None else None
    records = _verify_matrix(m, rng)
    bad = sum(1 for r in records if not r["match"])
    return str(m), len(records), bad


def _cmd_sweep(args) -> int:
    mats = corpus(args.bound, args.dedup)
    tasks = [(m.a, m.b, m.c, m.d, args.seed) for m in mats]
    threads = int(os.environ.get("BERG_THREADS", "0")) or (os.cpu_count() or 1)
    results = []
    if threads > 1 and len(tasks) > 8:
        import multiprocessing

        with multiprocessing.Pool(threads) as pool:
            results = pool.map(_sweep_worker, tasks, chunksize=16)
    else:
        results = [_sweep_worker(t) for t in tasks]
    results.sort()
    shapes_total = sum(r[1] for r in results)
    mism = sum(r[2] for r in results)
    for name, _, bad in results:
        if bad:
            sys.stdout.write(f"mismatch: {name}\n")
    sys.stdout.write(
        f"matrices tested: {len(results)}\n"
        f"shapes tested: {shapes_total}\n"
        f"mismatches: {mism}\n"
    )
    return 0 if mism == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bergcount",
                                 description="Berg partition counting for "
                                             "hyperbolic toral automorphisms")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, matrix=True, **flags):
        p = sub.add_parser(name)
        if matrix:
            p.add_argument("matrix", help='matrix as "a,b;c,d"')
        p.add_argument("--out", help="write output to FILE")
        if flags.get("json"):
            p.add_argument("--json", action="store_true")
        if flags.get("index"):
            p.add_argument("--index", help="shape index, or A:B for a fan strip")
        p.set_defaults(fn=fn)
        return p

    add("analyze", _cmd_analyze)
    add("word", _cmd_word, json=True)
    add("matrices", _cmd_matrices, json=True)
    add("count", _cmd_count)
    p = add("placements", _cmd_placements)
    p.add_argument("--index", type=int)
    add("symmetry", _cmd_symmetry, json=True)
    add("render", _cmd_render, index=True)
    add("verify", _cmd_verify, json=True)
    p = add("sweep", _cmd_sweep, matrix=False)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--dedup", action="store_true")
    p.add_argument("--seed", type=int,
                   help="seed for sampling the per-shape Markov spot-checks")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (NotHyperbolicError, NotUnimodularError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

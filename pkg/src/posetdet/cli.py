"""Batch verification front end.

Each identity family maps to one "verify" argument.  Every check prints
one report line; the process exits 0 when everything passes, 1 on an
identity violation, and 2 on invalid input (including a digraph that
fails the nonintersecting-family hypothesis).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import random
import sys
import time

from . import randgen
from .chromatic import verify_chromatic_join_det
from .identities import (
    FAIL,
    HYPOTHESIS_FAILED,
    IdentityReport,
    gcd_matrix,
    incidence_matrix,
    incidence_product_det,
    incidence_product_matrix,
    is_factor_closed,
    kth_root_matrix,
    kth_root_matrix_det,
    make_report,
    meet_closed_det,
    meet_closed_matrix,
    meet_matrix,
    meet_matrix_det,
    product_matrix_positive_definite,
    ramanujan_matrix,
    ramanujan_matrix_det,
    totient_product,
    weighted_product_det,
    weighted_product_matrix,
)
from .lgv import (
    digraph_from_dict,
    family_weight,
    nonintersecting_families,
    stembridge_matrix,
    three_layer_digraph,
    verify_stembridge,
)
from .matrix import det_bareiss, leading_principal_minors
from .poset import (
    IncidenceFunction,
    Poset,
    mobius_function,
    poset_from_dict,
)
from .ring import Int

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2

IDENTITY_NAMES = (
    "main",
    "weighted",
    "lindstrom",
    "meet-closed",
    "smith",
    "apostol",
    "daniloff",
    "stembridge",
    "three-layer",
    "tutte",
    "definiteness",
)


def _load_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def _load_poset(path: str) -> Poset:
    return poset_from_dict(_load_json(path))


def _parse_set(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise ValueError(f"--set must be comma-separated integers, got {text!r}")


def _fail(report: IdentityReport, note: str) -> IdentityReport:
    # computed is cleared so the failed report still satisfies the
    # verdict-iff-equality contract
    return dataclasses.replace(report, verdict=FAIL, computed=None, detail=note)


def _check_product(p: Poset, f, g, name: str = "main") -> IdentityReport:
    started = time.perf_counter()
    det = det_bareiss(incidence_product_matrix(p, f, g))
    predicted = incidence_product_det(p, f, g)
    return make_report(name, f"poset n={p.n}", p.n, det, predicted, started)


def run_main(args, rng) -> list[IdentityReport]:
    reports = []
    if args.poset:
        p = _load_poset(args.poset)
        cases = 20 if args.cases is None else args.cases
        for _ in range(cases):
            reports.append(
                _check_product(
                    p,
                    randgen.random_incidence(rng, p),
                    randgen.random_incidence(rng, p),
                )
            )
        return reports
    cases = 200 if args.cases is None else args.cases
    max_size = args.max_size or 7
    for _ in range(cases):
        p = randgen.random_poset(rng, rng.randint(1, max_size))
        reports.append(
            _check_product(
                p,
                randgen.random_incidence(rng, p),
                randgen.random_incidence(rng, p),
            )
        )
    return reports


def run_weighted(args, rng) -> list[IdentityReport]:
    cases = 100 if args.cases is None else args.cases
    max_size = args.max_size or 7
    reports = []
    for _ in range(cases):
        p = randgen.random_poset(rng, rng.randint(1, max_size))
        f = randgen.random_incidence(rng, p)
        g = randgen.random_incidence(rng, p)
        fw = randgen.random_weights(rng, p.n)
        gw = randgen.random_weights(rng, p.n)
        started = time.perf_counter()
        det = det_bareiss(weighted_product_matrix(p, f, fw, g, gw))
        predicted = weighted_product_det(p, f, fw, g, gw)
        reports.append(
            make_report("weighted", f"poset n={p.n}", p.n, det, predicted, started)
        )
    return reports


def run_lindstrom(args, rng) -> list[IdentityReport]:
    if args.poset:
        p = _load_poset(args.poset)
        if not p.is_meet_semilattice():
            raise ValueError("poset is not a meet semilattice")
        posets = [p] * (20 if args.cases is None else args.cases)
    else:
        cases = 100 if args.cases is None else args.cases
        max_size = args.max_size or 6
        posets = [
            randgen.random_meet_semilattice(rng, rng.randint(1, max_size))
            for _ in range(cases)
        ]
    reports = []
    for p in posets:
        f = randgen.random_incidence(rng, p)
        started = time.perf_counter()
        det = det_bareiss(meet_matrix(p, f))
        predicted = meet_matrix_det(p, f)
        reports.append(
            make_report("lindstrom", f"semilattice n={p.n}", p.n, det, predicted, started)
        )
    return reports


def _restrict_incidence(sub: Poset, f: IncidenceFunction) -> IncidenceFunction:
    host_map = sub.host_map
    values = {
        (i, j): f(host_map[i], host_map[j])
        for i in range(sub.n)
        for j in sub.above(i)
    }
    return IncidenceFunction(sub, values, zero=f.zero)


def run_meet_closed(args, rng) -> list[IdentityReport]:
    cases = 50 if args.cases is None else args.cases
    reports = []
    for _ in range(cases):
        lattice, subset = randgen.random_meet_closed_instance(rng)
        f = randgen.random_incidence(rng, lattice)
        started = time.perf_counter()
        det = det_bareiss(meet_closed_matrix(lattice, subset, f))
        predicted = meet_closed_det(lattice, subset, f)
        report = make_report(
            "meet-closed",
            f"subset size {len(subset)} of n={lattice.n}",
            len(subset),
            det,
            predicted,
            started,
        )
        if report.passed and lattice.is_lower_closed(subset):
            sub = lattice.induced(subset)
            alt = meet_matrix_det(sub, _restrict_incidence(sub, f))
            if alt != det:
                report = dataclasses.replace(
                    report,
                    verdict=FAIL,
                    predicted=alt,
                    detail="(lower-closed cross-check mismatch)",
                )
        reports.append(report)
    return reports


def run_smith(args, rng) -> list[IdentityReport]:
    if args.value_set:
        values = _parse_set(args.value_set)
        if not is_factor_closed(values):
            raise ValueError(
                "set is not factor closed: the totient-product identity needs every divisor present"
            )
        sets = [values]
    else:
        cases = 50 if args.cases is None else args.cases
        sets = [randgen.random_factor_closed_set(rng) for _ in range(cases)]
    reports = []
    for s in sets:
        started = time.perf_counter()
        det = det_bareiss(gcd_matrix(s))
        predicted = totient_product(s)
        label = ",".join(str(x) for x in s)
        reports.append(
            make_report("smith", f"set {{{label}}}", len(s), det, predicted, started)
        )
    return reports


def run_apostol(args, rng) -> list[IdentityReport]:
    ns = [args.n] if args.n else range(1, 11)
    reports = []
    for n in ns:
        started = time.perf_counter()
        det = det_bareiss(ramanujan_matrix(n))
        predicted = ramanujan_matrix_det(n)
        reports.append(make_report("apostol", f"n={n}", n, det, predicted, started))
    return reports


def run_daniloff(args, rng) -> list[IdentityReport]:
    ns = [args.n] if args.n else range(1, 11)
    ks = [args.k] if args.k else (1, 2, 3)
    reports = []
    for n in ns:
        weights = [Int(a) for a in range(1, n + 1)]
        for k in ks:
            started = time.perf_counter()
            det = det_bareiss(kth_root_matrix(n, k, weights))
            predicted = kth_root_matrix_det(n, k, weights)
            reports.append(
                make_report("daniloff", f"n={n} k={k}", n, det, predicted, started)
            )
    return reports


def run_stembridge(args, rng) -> list[IdentityReport]:
    if args.digraph:
        return [verify_stembridge(digraph_from_dict(_load_json(args.digraph)))]
    cases = 10 if args.cases is None else args.cases
    return [
        verify_stembridge(randgen.random_hypothesis_digraph(rng))
        for _ in range(cases)
    ]


def run_three_layer(args, rng) -> list[IdentityReport]:
    cases = 30 if args.cases is None else args.cases
    max_size = args.max_size or 5
    reports = []
    for _ in range(cases):
        p = randgen.random_poset(rng, rng.randint(1, max_size))
        f = randgen.random_incidence(rng, p)
        g = randgen.random_incidence(rng, p)
        started = time.perf_counter()
        d = three_layer_digraph(p, f, g)
        families = nonintersecting_families(d)
        paths_matrix = stembridge_matrix(d)
        det = det_bareiss(paths_matrix)
        predicted = incidence_product_det(p, f, g)
        report = make_report("three-layer", f"poset n={p.n}", p.n, det, predicted, started)
        structure_ok = (
            len(families) == 1
            and families[0].perm == tuple(range(p.n))
            and family_weight(d, families[0]) == predicted
            and paths_matrix == incidence_product_matrix(p, f, g)
        )
        if report.passed and not structure_ok:
            report = _fail(report, "(unique-family structure check failed)")
        reports.append(report)
    return reports


def run_tutte(args, rng) -> list[IdentityReport]:
    n = 3 if args.n is None else args.n
    return [verify_chromatic_join_det(n)]


def run_definiteness(args, rng) -> list[IdentityReport]:
    cases = 100 if args.cases is None else args.cases
    max_size = args.max_size or 6
    reports = []
    for _ in range(cases):
        p = randgen.random_poset(rng, rng.randint(1, max_size))
        f, g = randgen.random_symmetric_pair(rng, p)
        started = time.perf_counter()
        minors = leading_principal_minors(incidence_product_matrix(p, f, g))
        predicate = product_matrix_positive_definite(p, f, g)
        det = minors[-1]
        predicted = incidence_product_det(p, f, g)
        report = make_report("definiteness", f"poset n={p.n}", p.n, det, predicted, started)
        if report.passed and predicate != all(x.is_positive() for x in minors):
            report = _fail(report, "(diagonal predicate disagrees with minors)")
        reports.append(report)
    for _ in range(cases // 2):
        p = randgen.random_poset(rng, rng.randint(1, max_size))
        f, g = randgen.random_symmetric_pair(rng, p, force_zero_diag=True)
        started = time.perf_counter()
        det = det_bareiss(incidence_product_matrix(p, f, g))
        reports.append(
            make_report(
                "definiteness-singular", f"poset n={p.n}", p.n, det, Int(0), started
            )
        )
    return reports


RUNNERS = {
    "main": run_main,
    "weighted": run_weighted,
    "lindstrom": run_lindstrom,
    "meet-closed": run_meet_closed,
    "smith": run_smith,
    "apostol": run_apostol,
    "daniloff": run_daniloff,
    "stembridge": run_stembridge,
    "three-layer": run_three_layer,
    "tutte": run_tutte,
    "definiteness": run_definiteness,
}


def _emit(reports: list[IdentityReport], machine: bool, seed) -> int:
    for report in reports:
        print(report.machine_line() if machine else report.line())
    for i, report in enumerate(reports):
        if report.verdict == FAIL:
            print(
                f"reproduce: {report.name} seed={seed} case={i}",
                file=sys.stderr,
            )
    if any(r.verdict == HYPOTHESIS_FAILED for r in reports):
        return EXIT_INPUT
    if any(r.verdict == FAIL for r in reports):
        return EXIT_VIOLATION
    return EXIT_OK


def run_mobius(args) -> int:
    p = poset_from_dict(_load_json(args.poset_file))
    mu = mobius_function(p)
    for a in p.lin_ext:
        for b in sorted(p.above(a), key=p.position):
            print(f"mu({p.labels[a]},{p.labels[b]}) = {mu(a, b)}")
    return EXIT_OK


def run_suite(args) -> int:
    rng = random.Random(args.seed)
    max_size = args.max_size
    passes = 0
    lines = []
    failing = []
    for case in range(args.cases):
        p = randgen.random_poset(rng, rng.randint(1, max_size))
        f = randgen.random_incidence(rng, p)
        g = randgen.random_incidence(rng, p)
        product_report = _check_product(p, f, g, name="suite-main")
        factorization_ok = (
            incidence_matrix(p, f).transpose() @ incidence_matrix(p, g)
        ) == incidence_product_matrix(p, f, g)
        if product_report.passed and not factorization_ok:
            product_report = _fail(product_report, "(transpose factorization mismatch)")
        semilattice = randgen.random_meet_semilattice(
            rng, rng.randint(1, min(max_size, 6))
        )
        h = randgen.random_incidence(rng, semilattice)
        started = time.perf_counter()
        det = det_bareiss(meet_matrix(semilattice, h))
        predicted = meet_matrix_det(semilattice, h)
        meet_report = make_report(
            "suite-lindstrom",
            f"semilattice n={semilattice.n}",
            semilattice.n,
            det,
            predicted,
            started,
        )
        for report in (product_report, meet_report):
            lines.append(report.machine_line() if args.machine else report.line())
        if product_report.passed and meet_report.passed:
            passes += 1
        else:
            failing.append(case)
    for line in lines:
        print(line)
    print(f"{passes}/{args.cases} pass")
    for case in failing:
        print(f"reproduce: random-suite seed={args.seed} case={case}", file=sys.stderr)
    return EXIT_OK if passes == args.cases else EXIT_VIOLATION


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posetdet",
        description="Verify exact determinant identities of poset-derived matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="verify one identity family")
    verify.add_argument("identity", choices=IDENTITY_NAMES)
    verify.add_argument("--n", type=int, default=None, help="size parameter")
    verify.add_argument("--k", type=int, default=None, help="exponent parameter")
    verify.add_argument(
        "--set",
        dest="value_set",
        default=None,
        help="comma-separated positive integers",
    )
    verify.add_argument("--poset", default=None, help="poset JSON file")
    verify.add_argument("--digraph", default=None, help="digraph JSON file")
    verify.add_argument("--seed", type=int, default=42)
    verify.add_argument("--cases", type=int, default=None)
    verify.add_argument("--max-size", dest="max_size", type=int, default=None)
    verify.add_argument("--machine", action="store_true", help="tab-separated output")

    mob = sub.add_parser("mobius", help="print the Möbius table of a poset file")
    mob.add_argument("poset_file")

    suite = sub.add_parser(
        "random-suite",
        help="seeded random campaign over the product and meet identities",
    )
    suite.add_argument("--seed", type=int, default=42)
    suite.add_argument("--cases", type=int, default=200)
    suite.add_argument("--max-size", dest="max_size", type=int, default=7)
    suite.add_argument("--machine", action="store_true")

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "mobius":
            return run_mobius(args)
        if args.command == "random-suite":
            return run_suite(args)
        rng = random.Random(args.seed)
        reports = RUNNERS[args.identity](args, rng)
        return _emit(reports, args.machine, args.seed)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

"""The acceptance battery.

Thirteen checkers, one per headline claim, each returning a Report with
exact integer or polynomial equality; no tolerances anywhere.  Callers can
run criteria individually or through run_battery, which also hosts the
quick tier (every size cap reduced by one).
"""

from __future__ import annotations

import itertools
import random

from . import genfun, parking, plactic, posets
from .core import Permutation, random_unit_upper_triangular
from .parallel import make_pmap
from .report import COUNTEREXAMPLE, VERIFIED, Report, reports_to_json

SWEEP_N = 6
CATALOG_EXTENSION_CAP = 100_000


class LatticeSweep:
    """All modular and distributive lattices among labelled posets up to max_n."""

    __slots__ = ("max_n", "posets_seen", "lattices_seen", "modular", "distributive")

    def __init__(self, max_n: int):
        self.max_n = max_n
        self.posets_seen = 0
        self.lattices_seen = 0
        self.modular: list[posets.Lattice] = []
        self.distributive: list[posets.Lattice] = []
        for p in posets.enumerate_posets_up_to(max_n):
            self.posets_seen += 1
            if not p.is_bounded():
                continue
            try:
                lat = posets.build_lattice(p)
            except posets.NotALatticeError:
                continue
            self.lattices_seen += 1
            if posets.is_modular(lat):
                self.modular.append(lat)
                if posets.is_distributive(lat):
                    self.distributive.append(lat)


_SWEEPS: dict[int, LatticeSweep] = {}


def lattice_sweep(max_n: int = SWEEP_N) -> LatticeSweep:
    if max_n not in _SWEEPS:
        _SWEEPS[max_n] = LatticeSweep(max_n)
    return _SWEEPS[max_n]


def _modular_catalog() -> list[tuple[str, posets.Lattice]]:
    return [(name, lat) for name, lat in posets.lattice_catalog().items()
            if posets.is_modular(lat)]


def criterion_echelon(max_n: int = SWEEP_N,
                      catalog_cap: int = CATALOG_EXTENSION_CAP) -> Report:
    """Cover counts transfer along the echelon map, on every modular lattice
    in the exhaustive sweep and on the catalog under an extension cap."""
    name = "echelon-cover-transfer"
    sweep = lattice_sweep(max_n)
    instances = 0
    for lat in sweep.modular:
        r = posets.verify_echelon_theorem(lat)
        if r.status != VERIFIED:
            return Report(name, instances, r.status, r.witness)
        instances += r.instances
    catalog = _modular_catalog()
    for cname, lat in catalog:
        r = posets.verify_echelon_theorem(lat, extension_cap=catalog_cap)
        if r.status != VERIFIED:
            witness = dict(r.witness or {})
            witness["catalog"] = cname
            return Report(name, instances, r.status, witness)
        instances += r.instances
    return Report(name, instances, VERIFIED, {
        "posets_enumerated": sweep.posets_seen,
        "modular_lattices": len(sweep.modular),
        "catalog": [cname for cname, _ in catalog],
        "extensions_checked": instances,
    })


def criterion_dilworth(max_n: int = SWEEP_N) -> Report:
    """Lower and upper cover-count multisets agree on every modular lattice."""
    name = "cover-count-multisets"
    sweep = lattice_sweep(max_n)
    lattices = [lat for lat in sweep.modular] + [lat for _, lat in _modular_catalog()]
    for lat in lattices:
        r = posets.verify_dilworth(lat)
        if r.status != VERIFIED:
            witness = dict(r.witness or {})
            witness["covers"] = lat.poset.cover_pairs()
            return Report(name, len(lattices), r.status, witness)
    return Report(name, len(lattices), VERIFIED, {"modular_lattices": len(lattices)})


def criterion_rowmotion(max_n: int = SWEEP_N,
                        catalog_cap: int = CATALOG_EXTENSION_CAP) -> Report:
    """Echelonmotion equals distributive rowmotion for every extension of
    every distributive lattice in the sweep and the catalog; identical maps
    across extensions give echelon independence as a corollary."""
    name = "echelon-equals-rowmotion"
    sweep = lattice_sweep(max_n)
    targets: list[tuple[str, posets.Lattice, int | None]] = [
        ("sweep", lat, None) for lat in sweep.distributive]
    for cname, lat in posets.lattice_catalog().items():
        if posets.is_distributive(lat):
            targets.append((cname, lat, catalog_cap))
    instances = 0
    for cname, lat, cap in targets:
        rm = posets.rowmotion_distributive(lat)
        for ext in posets.linear_extensions(lat.poset, cap=cap):
            em = posets.echelonmotion(lat, ext)
            if em.mapping != rm:
                return Report(name, instances, COUNTEREXAMPLE, {
                    "source": cname,
                    "covers": lat.poset.cover_pairs(),
                    "extension": list(ext.order),
                    "echelon": list(em.mapping),
                    "rowmotion": list(rm),
                })
            instances += 1
    return Report(name, instances, VERIFIED, {
        "distributive_lattices": len(targets),
        "pairs_checked": instances,
    })


def criterion_bruhat(max_n: int = SWEEP_N, perturbations: int = 100,
                     seed: int = 0) -> Report:
    """bruhat is the identity on permutation matrices and constant on
    B-double-cosets: unit upper-triangular multiplication on either side
    of a catalog Cartan matrix never moves the permutation."""
    name = "bruhat-well-defined"
    instances = 0
    for n in range(1, max_n + 1):
        for perm in itertools.permutations(range(1, n + 1)):
            w = Permutation(perm)
            got = posets.bruhat_permutation(w.to_matrix())
            instances += 1
            if got != w:
                return Report(name, instances, COUNTEREXAMPLE,
                              {"permutation": list(perm), "got": list(got.one_line)})
    rng = random.Random(seed)
    for cname, lat in posets.lattice_catalog().items():
        ext = next(posets.linear_extensions(lat.poset))
        w_matrix = posets.cartan_matrix(lat.poset, ext)
        base = posets.bruhat_permutation(w_matrix)
        for _ in range(perturbations):
            u1 = random_unit_upper_triangular(lat.n, rng)
            u2 = random_unit_upper_triangular(lat.n, rng)
            got = posets.bruhat_permutation(u1 @ w_matrix @ u2)
            instances += 1
            if got != base:
                return Report(name, instances, COUNTEREXAMPLE, {
                    "catalog": cname,
                    "u1": [list(r) for r in u1.entries],
                    "u2": [list(r) for r in u2.entries],
                    "expected": list(base.one_line),
                    "got": list(got.one_line),
                })
    return Report(name, instances, VERIFIED,
                  {"seed": seed, "perturbations_per_matrix": perturbations})


WORKED_CONTENT = (1, 1, 2, 4, 5, 6)
WORKED_ROOKS = frozenset({(1, 3), (2, 6), (4, 5)})
WORKED_U0 = (2, 4, 1)
WORKED_W = (6, 3, 2, 5, 4, 1)
WORKED_A = frozenset({1, 2, 4})


def criterion_fixed_content(max_n: int = 6, pmap=map) -> Report:
    """The fixed-content equidistribution with its fiber counts and the
    worked insertion instance, reproduced bit for bit."""
    name = "parking-fixed-content"
    instances = 0
    for n in range(1, max_n + 1):
        r = parking.verify_fixed_content(n, pmap=pmap)
        if r.status != VERIFIED:
            witness = dict(r.witness or {})
            witness["n"] = n
            return Report(name, instances, r.status, witness)
        instances += r.instances
    w, a_set = parking.insert_forward(WORKED_CONTENT, WORKED_ROOKS, WORKED_U0)
    replay_ok = (
        w.one_line == WORKED_W
        and a_set == WORKED_A
        and parking.phi(WORKED_CONTENT, w, a_set) == WORKED_ROOKS
        and parking.insert_inverse(WORKED_CONTENT, WORKED_ROOKS, w, a_set) == WORKED_U0
    )
    instances += 1
    if not replay_ok:
        return Report(name, instances, COUNTEREXAMPLE, {
            "defect": "worked instance",
            "b": list(WORKED_CONTENT),
            "got_w": list(w.one_line),
            "got_A": sorted(a_set),
        })
    return Report(name, instances, VERIFIED,
                  {"max_n": max_n, "contents_checked": instances - 1})


def criterion_excedance(max_n: int = 7) -> Report:
    """Excedance and outcome-descent parking polynomials coincide."""
    name = "parking-exced-vs-outcome-descents"
    instances = 0
    for n in range(1, max_n + 1):
        by_exc = genfun.parking_poly(n, "exced")
        by_des = genfun.parking_poly(n, "des-oc")
        count = (n + 1) ** (n - 1)
        if by_exc != by_des or by_exc.eval_at(1, 1) != count:
            return Report(name, instances, COUNTEREXAMPLE, {
                "n": n,
                "exced_side": by_exc.to_json_terms(),
                "descent_side": by_des.to_json_terms(),
            })
        instances += count
    return Report(name, instances, VERIFIED, {"max_n": max_n})


def criterion_tree_polys(trees_n: int = 7, parking_n: int = 6) -> Report:
    """Tree-inversion polynomials: direct sum equals the recurrence, equals
    the parking sum with inverse-outcome descents, with the q-side cosum
    specialization and the point count (n+1)^(n-1)."""
    name = "tree-inversion-identities"
    instances = 0
    for n in range(1, trees_n + 1):
        direct = genfun.tree_poly(n, "trees")
        rec = genfun.tree_poly(n, "recurrence")
        if direct != rec:
            return Report(name, instances, COUNTEREXAMPLE, {
                "n": n, "defect": "direct vs recurrence",
                "direct": direct.to_json_terms(), "recurrence": rec.to_json_terms()})
        if direct.eval_at(1, 1) != (n + 1) ** (n - 1):
            return Report(name, instances, COUNTEREXAMPLE, {
                "n": n, "defect": "tree count", "value": direct.eval_at(1, 1)})
        instances += 1
        if n <= parking_n:
            by_parking = genfun.parking_poly(n, "des-oc-inv")
            if direct != by_parking:
                return Report(name, instances, COUNTEREXAMPLE, {
                    "n": n, "defect": "trees vs parking",
                    "trees": direct.to_json_terms(),
                    "parking": by_parking.to_json_terms()})
            instances += 1
        # Kreweras: the q-side alone is the cosum enumerator
        if n <= genfun.PARKING_SWEEP_LIMIT:
            if direct.subs_t(1) != genfun.parking_poly(n, "exced").subs_t(1):
                return Report(name, instances, COUNTEREXAMPLE, {
                    "n": n, "defect": "cosum specialization"})
            instances += 1
    return Report(name, instances, VERIFIED,
                  {"trees_n": trees_n, "parking_n": parking_n})


def criterion_simsun(max_n: int = 9, pmap=map) -> Report:
    """The q = -1 specialization against simsun descent enumerators."""
    return genfun.verify_simsun_identity(max_n, pmap=pmap)


def criterion_alternating(max_n: int = 7) -> Report:
    """The q = -1 parking specialization against the zig-zag Eulerian
    polynomial, with every intermediate class identity."""
    name = "parking-minus-one-is-zigzag"
    instances = 0
    for n in range(2, max_n + 1):
        r = genfun.verify_alternating_identity(n)
        if r.status != VERIFIED:
            witness = dict(r.witness or {})
            witness["n"] = n
            return Report(name, instances, r.status, witness)
        instances += r.instances
    return Report(name, instances, VERIFIED, {"max_n": max_n})


def criterion_greene(max_len: int = 7, alphabet: int = 3) -> Report:
    """Greene invariants of every short word equal shape partial sums.

    For k beyond the word length both sides are frozen at the length, so
    checking k up to length + 1 decides all k.
    """
    name = "greene-invariants"
    instances = 0
    for length in range(max_len + 1):
        for w in itertools.product(range(1, alphabet + 1), repeat=length):
            t = plactic.rsk_P(w)
            lam = t.shape()
            conj = t.conjugate_shape()
            assert sum(lam) == length
            for k in range(1, length + 2):
                inc = plactic.greene_oracle(w, k, "increasing")
                dec = plactic.greene_oracle(w, k, "decreasing")
                instances += 2
                if inc != sum(lam[:k]) or dec != sum(conj[:k]):
                    return Report(name, instances, COUNTEREXAMPLE, {
                        "word": list(w), "k": k,
                        "increasing": inc, "decreasing": dec,
                        "shape": list(lam)})
    return Report(name, instances, VERIFIED,
                  {"alphabet": alphabet, "max_len": max_len})


def _words_over(alphabet: int, max_len: int) -> list[tuple[int, ...]]:
    out = []
    for length in range(1, max_len + 1):
        out.extend(itertools.product(range(1, alphabet + 1), repeat=length))
    return out


def criterion_first_rows(length_cap: int = 7, pmap=map) -> Report:
    """First-rows bound and the no-bump property over the two u families."""
    name = "centralizer-first-rows"
    u_list = _words_over(2, 4) + _words_over(3, 3)
    instances = 0
    for u in u_list:
        r = plactic.verify_first_rows(u, length_cap=length_cap, pmap=pmap)
        if r.status != VERIFIED:
            return Report(name, instances, r.status, r.witness)
        instances += r.instances
    return Report(name, instances, VERIFIED,
                  {"u_count": len(u_list), "length_cap": length_cap})


def criterion_reverse_complement(u_len_cap: int = 4, length_cap: int = 6,
                                 pmap=map) -> Report:
    """Threshold evacuation between restricted centralizer tableau sets."""
    name = "centralizer-reverse-complement"
    instances = 0
    pairs = [(u, m) for m in range(1, 4) for u in _words_over(m, u_len_cap)]
    for u, m in pairs:
        r = plactic.verify_rc_correspondence(u, m, length_cap=length_cap, pmap=pmap)
        if r.status != VERIFIED:
            witness = dict(r.witness or {})
            witness["m"] = m
            return Report(name, instances, r.status, witness)
        instances += r.instances
    return Report(name, instances, VERIFIED,
                  {"pairs": len(pairs), "length_cap": length_cap})


def _determinism_probe(seed: int) -> str:
    reports = [
        criterion_bruhat(max_n=4, perturbations=20, seed=seed),
        criterion_fixed_content(max_n=3),
        criterion_alternating(max_n=4),
        criterion_greene(max_len=3),
        criterion_reverse_complement(u_len_cap=2, length_cap=4),
    ]
    return reports_to_json(reports)


def criterion_determinism(seed: int = 0) -> Report:
    """Two runs of a seeded probe battery must serialize byte-identically."""
    name = "report-determinism"
    first = _determinism_probe(seed)
    second = _determinism_probe(seed)
    if first != second:
        return Report(name, 2, COUNTEREXAMPLE, {"seed": seed,
                      "first_bytes": len(first), "second_bytes": len(second)})
    return Report(name, 2, VERIFIED, {"seed": seed, "report_bytes": len(first)})


def run_battery(quick: bool = False, seed: int = 0,
                workers: int | None = None) -> list[Report]:
    """All thirteen criteria in dependency order.

    The quick tier lowers every size cap by one and divides the catalog
    extension cap by ten; it exists for smoke runs, not for acceptance.
    """
    pmap = make_pmap(workers)
    d = 1 if quick else 0
    cap = CATALOG_EXTENSION_CAP // (10 if quick else 1)
    return [
        criterion_echelon(max_n=SWEEP_N - d, catalog_cap=cap),
        criterion_dilworth(max_n=SWEEP_N - d),
        criterion_rowmotion(max_n=SWEEP_N - d, catalog_cap=cap),
        criterion_bruhat(max_n=6 - d, seed=seed),
        criterion_fixed_content(max_n=6 - d, pmap=pmap),
        criterion_excedance(max_n=7 - d),
        criterion_tree_polys(trees_n=7 - d, parking_n=6 - d),
        criterion_simsun(max_n=9 - d, pmap=pmap),
        criterion_alternating(max_n=7 - d),
        criterion_greene(max_len=7 - d),
        criterion_first_rows(length_cap=7 - d, pmap=pmap),
        criterion_reverse_complement(u_len_cap=4 - d, length_cap=6 - d, pmap=pmap),
        criterion_determinism(seed=seed),
    ]

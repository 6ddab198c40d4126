"""Full-scale acceptance battery, one test per criterion.

Each test runs its criterion at the default (full) parameters and demands
an exactly verified report: any counterexample or skip fails the test and
prints the offending witness. The lattice sweep, parking sweep, and Knuth
class caches warm up on first use and persist for the rest of the session,
so the whole file runs in about a minute.
"""

from exactcomb import acceptance


def _require(number: int, report) -> None:
    line = (f"criterion {number:2d} ({report.theorem}): "
            f"{'PASS' if report.status == 'verified' else 'FAIL'} "
            f"instances={report.instances}")
    print(line)
    assert report.status == "verified", (line, report.witness)


def test_criterion_01_echelon_cover_transfer():
    _require(1, acceptance.criterion_echelon())


def test_criterion_02_dilworth_profiles():
    _require(2, acceptance.criterion_dilworth())


def test_criterion_03_rowmotion_agreement():
    _require(3, acceptance.criterion_rowmotion())


def test_criterion_04_bruhat_invariance():
    _require(4, acceptance.criterion_bruhat())


def test_criterion_05_fixed_content_bijection():
    _require(5, acceptance.criterion_fixed_content())


def test_criterion_06_excedance_distribution():
    _require(6, acceptance.criterion_excedance())


def test_criterion_07_tree_polynomials():
    _require(7, acceptance.criterion_tree_polys())


def test_criterion_08_simsun_specialization():
    _require(8, acceptance.criterion_simsun())


def test_criterion_09_alternating_classes():
    _require(9, acceptance.criterion_alternating())


def test_criterion_10_greene_invariants():
    _require(10, acceptance.criterion_greene())


def test_criterion_11_first_rows_bound():
    _require(11, acceptance.criterion_first_rows())


def test_criterion_12_reverse_complement_map():
    _require(12, acceptance.criterion_reverse_complement())


def test_criterion_13_determinism():
    _require(13, acceptance.criterion_determinism())

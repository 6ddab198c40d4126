import itertools
import json
import random

import pytest

from exactcomb.core import IntMatrix, Permutation, int_matrix_rank, random_unit_upper_triangular
from exactcomb.posets import (
    CyclicCoversError,
    ExtensionCapExceeded,
    Lattice,
    LinearExtension,
    NotALatticeError,
    NotDistributiveError,
    Poset,
    bruhat_permutation,
    bruhat_rank_profile,
    build_lattice,
    cartan_matrix,
    count_linear_extensions,
    cover_counts,
    diamond,
    echelonmotion,
    enumerate_posets,
    enumerate_posets_up_to,
    is_distributive,
    is_echelon_independent,
    is_lattice,
    is_linear_extension,
    is_modular,
    lattice_catalog,
    linear_extensions,
    modular_witness,
    pentagon,
    poset_from_json_obj,
    poset_product,
    poset_to_json_obj,
    rowmotion_distributive,
    subspace_lattice_gf2_dim3,
    verify_dilworth,
    verify_echelon_theorem,
)

B2_COVERS = [(0, 1), (0, 2), (1, 3), (2, 3)]


def b2():
    return Poset.from_cover_pairs(4, B2_COVERS)


def test_from_cover_pairs_closure():
    p = b2()
    assert p.leq(0, 3)  # transitive closure, not just covers
    assert not p.leq(1, 2)
    assert sorted(p.cover_pairs()) == sorted(B2_COVERS)


def test_cyclic_covers_rejected():
    with pytest.raises(CyclicCoversError):
        Poset.from_cover_pairs(2, [(0, 1), (1, 0)])
    with pytest.raises(CyclicCoversError):
        Poset.from_cover_pairs(3, [(0, 1), (1, 2), (2, 0)])


def test_generated_posets_are_transitively_closed():
    # leq must be a fixed point of one more closure step
    for p in enumerate_posets(4):
        for x in range(p.n):
            for y in range(p.n):
                for z in range(p.n):
                    if p.leq(x, y) and p.leq(y, z):
                        assert p.leq(x, z)


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_posets(1)) == 1
    assert sum(1 for _ in enumerate_posets(2)) == 3
    assert sum(1 for _ in enumerate_posets(3)) == 19
    assert sum(1 for _ in enumerate_posets(4)) == 219
    assert sum(1 for _ in enumerate_posets(5)) == 4231
    assert sum(1 for _ in enumerate_posets_up_to(4)) == 1 + 3 + 19 + 219
    with pytest.raises(ValueError):
        next(enumerate_posets(9))


def test_linear_extension_counts():
    assert count_linear_extensions(Poset.chain(5)) == 1
    assert count_linear_extensions(Poset.antichain(2)) == 2
    assert count_linear_extensions(b2()) == 2
    assert count_linear_extensions(Poset.antichain(4)) == 24


def test_linear_extensions_are_valid_and_lex_ordered():
    p = b2()
    exts = list(linear_extensions(p))
    assert [e.order for e in exts] == sorted(e.order for e in exts)
    for e in exts:
        assert is_linear_extension(p, e)
    assert not is_linear_extension(p, LinearExtension((3, 1, 2, 0)))


def test_cartan_matrix_examples():
    single = Poset.chain(1)
    assert cartan_matrix(single, LinearExtension((0,))).entries == ((1,),)
    two = Poset.chain(2)
    assert cartan_matrix(two, LinearExtension((0, 1))).entries == ((1, 0), (1, 1))
    anti = Poset.antichain(2)
    for ext in linear_extensions(anti):
        assert cartan_matrix(anti, ext).entries == ((1, 0), (0, 1))
    with pytest.raises(Exception):
        cartan_matrix(two, LinearExtension((1, 0)))


def test_bruhat_identity_and_two_chain():
    assert bruhat_permutation(IntMatrix.identity(4)) == Permutation((1, 2, 3, 4))
    assert bruhat_permutation(IntMatrix([[1, 0], [1, 1]])) == Permutation((2, 1))


def test_bruhat_on_permutation_matrices():
    for n in range(1, 6):
        for vals in itertools.permutations(range(1, n + 1)):
            w = Permutation(vals)
            assert bruhat_permutation(w.to_matrix()) == w


def test_bruhat_double_coset_invariance():
    rng = random.Random(42)
    for name, lat in lattice_catalog().items():
        ext = next(linear_extensions(lat.poset))
        w = cartan_matrix(lat.poset, ext)
        base = bruhat_permutation(w)
        for _ in range(10):
            u1 = random_unit_upper_triangular(lat.n, rng)
            u2 = random_unit_upper_triangular(lat.n, rng)
            assert bruhat_permutation(u1 @ w @ u2) == base, name


def test_bruhat_rank_profile_matches_literal_submatrices():
    rng = random.Random(9)
    for _ in range(20):
        n = rng.randrange(1, 6)
        u1 = random_unit_upper_triangular(n, rng)
        w = Permutation(rng.sample(range(1, n + 1), n)).to_matrix()
        m = u1 @ w
        profile = bruhat_rank_profile(m)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                sub = [row[:j] for row in m.entries[i - 1:]]
                assert profile[i - 1][j - 1] == int_matrix_rank(sub)


def test_bruhat_rejects_singular():
    with pytest.raises(Exception):
        bruhat_permutation(IntMatrix([[1, 1], [1, 1]]))


# -- lattices -----------------------------------------------------------------


def test_build_lattice_examples():
    lat = build_lattice(b2())
    assert lat.bottom() == 0 and lat.top() == 3
    assert lat.meet(1, 2) == 0 and lat.join(1, 2) == 3
    with pytest.raises(NotALatticeError):
        build_lattice(Poset.antichain(2))
    assert not is_lattice(Poset.antichain(2))
    assert is_lattice(diamond(3).poset)


def test_meet_join_algebra():
    for name, lat in lattice_catalog().items():
        n = lat.n
        for a in range(n):
            assert lat.meet(a, a) == a and lat.join(a, a) == a
            for b in range(n):
                assert lat.meet(a, b) == lat.meet(b, a)
                assert lat.join(a, b) == lat.join(b, a)
                assert lat.meet(a, lat.join(a, b)) == a  # absorption
        for a, b, c in itertools.product(range(n), repeat=3):
            assert lat.meet(lat.meet(a, b), c) == lat.meet(a, lat.meet(b, c))
            assert lat.join(lat.join(a, b), c) == lat.join(a, lat.join(b, c))


def test_modularity_classifier():
    assert is_modular(diamond(3))
    assert is_modular(diamond(4))
    assert not is_modular(pentagon())
    w = modular_witness(pentagon())
    assert w is not None
    a, b, x = w
    lat = pentagon()
    assert lat.poset.leq(a, b)
    assert lat.join(a, lat.meet(x, b)) != lat.meet(lat.join(a, x), b)
    chain = build_lattice(Poset.chain(5))
    assert is_modular(chain)
    assert is_distributive(chain)
    assert not is_distributive(diamond(3))
    assert is_distributive(build_lattice(b2()))
    gf2 = subspace_lattice_gf2_dim3()
    assert gf2.n == 16
    assert is_modular(gf2) and not is_distributive(gf2)


def test_cover_counts():
    m3 = diamond(3)
    counts = cover_counts(m3.poset)
    assert counts[m3.bottom()] == (0, 3)
    assert counts[m3.top()] == (3, 0)
    chain = Poset.chain(3)
    assert cover_counts(chain)[1] == (1, 1)


def test_echelonmotion_small():
    single = build_lattice(Poset.chain(1))
    em = echelonmotion(single, LinearExtension((0,)))
    assert em.mapping == (0,)
    two = build_lattice(Poset.chain(2))
    em = echelonmotion(two, LinearExtension((0, 1)))
    assert em.mapping == (1, 0)  # bottom and top swap
    assert em.permutation() == Permutation((2, 1))


def test_echelonmotion_is_bijection_everywhere():
    for name, lat in lattice_catalog().items():
        for ext in linear_extensions(lat.poset, cap=30):
            em = echelonmotion(lat, ext)
            assert sorted(em.mapping) == list(range(lat.n)), name


def test_rowmotion_chain_is_cyclic_shift():
    for n in range(1, 6):
        lat = build_lattice(Poset.chain(n))
        rm = rowmotion_distributive(lat)
        # bottom jumps to top, everything else steps down
        assert rm[0] == n - 1
        for x in range(1, n):
            assert rm[x] == x - 1


def test_rowmotion_matches_echelonmotion_on_b2():
    lat = build_lattice(b2())
    rm = rowmotion_distributive(lat)
    for ext in linear_extensions(lat.poset):
        assert echelonmotion(lat, ext).mapping == rm


def test_rowmotion_rejects_nondistributive():
    with pytest.raises(NotDistributiveError):
        rowmotion_distributive(diamond(3))


def test_verify_echelon_theorem_reports():
    r = verify_echelon_theorem(diamond(3))
    assert r.status == "verified"
    assert r.instances == 6  # 3! extensions of M3
    r = verify_echelon_theorem(pentagon())
    assert r.status == "skipped"
    assert "law_failure" in r.witness
    r = verify_echelon_theorem(build_lattice(Poset.chain(2)))
    assert r.status == "verified" and r.instances == 1


def test_verify_dilworth_reports():
    r = verify_dilworth(diamond(3))
    assert r.status == "verified"
    assert r.witness["down_multiset"] == [0, 1, 1, 1, 3]
    assert r.witness["up_multiset"] == [0, 1, 1, 1, 3]
    r = verify_dilworth(build_lattice(b2()))
    assert r.witness["down_multiset"] == [0, 1, 1, 2]
    assert verify_dilworth(pentagon()).status == "skipped"


def test_echelon_independence():
    assert is_echelon_independent(b2())
    assert is_echelon_independent(Poset.chain(6))
    # a modular non-distributive lattice depends on the extension
    assert not is_echelon_independent(diamond(3).poset)
    with pytest.raises(ExtensionCapExceeded):
        is_echelon_independent(Poset.antichain(4), extension_cap=5)


def test_poset_product():
    p = poset_product(Poset.chain(2), Poset.chain(3))
    assert p.n == 6
    assert count_linear_extensions(p) == 5  # standard tableaux of a 2x3 rectangle
    assert is_distributive(build_lattice(p))


def test_catalog_membership_and_sizes():
    cat = lattice_catalog()
    assert cat["M3"].n == 5
    assert cat["M4"].n == 6
    assert cat["N5"].n == 5
    assert cat["GF2_dim3_subspaces"].n == 16
    assert {name for name in cat if name.startswith("C")} == {
        "C2xC2", "C2xC3", "C2xC4", "C3xC3", "C2xC5", "C2xC6", "C3xC4"}
    for name, lat in cat.items():
        if name.startswith("C"):
            a, b = int(name[1]), int(name[4])
            assert lat.n == a * b <= 12


def test_json_round_trip():
    p = b2()
    obj = poset_to_json_obj(p)
    assert obj == {"n": 4, "covers": sorted(B2_COVERS)} or obj["n"] == 4
    q = poset_from_json_obj(json.loads(json.dumps(obj)))
    assert q == p
    with pytest.raises(Exception):
        poset_from_json_obj({"n": 2})
    with pytest.raises(Exception):
        poset_from_json_obj({"n": 2, "covers": [[0, 1], [1, 0]]})

import io

import numpy as np
import pytest

from latticegas.errors import AmbiguousWrap, DomainError, NotAdjacent
from latticegas.geometry import (Rect, centered_volume_box,
                                 circumscribed_rectangle, rect_dist,
                                 site_dist)
from latticegas.lattice import (Configuration, Cluster, clusters, cluster_of,
                                grand_energy, hamiltonian, move_cost,
                                read_snapshot, rectangle_sites, snapshot_str,
                                total_bonds)


def block(L, x0, y0, w, h):
    return Configuration(L, rectangle_sites(x0, y0, w, h))


def brute_bonds(cfg):
    # independent bond count: scan every unordered neighbour pair once
    L = cfg.L
    count = 0
    for x in range(L):
        for y in range(L):
            if cfg.occupied((x, y)):
                if cfg.occupied(((x + 1) % L, y)):
                    count += 1
                if cfg.occupied((x, (y + 1) % L)):
                    count += 1
    return count


def test_hamiltonian_examples():
    U = 1.0
    assert hamiltonian(Configuration(8), U) == 0
    assert hamiltonian(block(8, 1, 1, 2, 2), U) == -4 * U
    assert hamiltonian(block(8, 1, 1, 3, 2), U) == -7 * U


def test_grand_energy_examples():
    U, Delta = 1.0, 1.6
    assert grand_energy(Configuration(8), U, Delta) == 0
    assert grand_energy(Configuration(8, [(3, 3)]), U, Delta) == Delta
    assert abs(grand_energy(block(8, 1, 1, 2, 2), U, Delta) - (4 * Delta - 4 * U)) < 1e-12


def test_bond_count_matches_brute_force():
    rng = np.random.default_rng(0)
    for _ in range(50):
        L = int(rng.integers(4, 9))
        k = int(rng.integers(0, L * L // 2))
        sites = rng.permutation(L * L)[:k]
        cfg = Configuration(L, [(s // L, s % L) for s in sites])
        assert total_bonds(cfg) == brute_bonds(cfg)


def test_grand_energy_translation_invariant():
    rng = np.random.default_rng(1)
    for _ in range(20):
        L = 7
        k = int(rng.integers(1, 12))
        sites = [(int(s) // L, int(s) % L) for s in rng.permutation(L * L)[:k]]
        e0 = grand_energy(Configuration(L, sites), 1.0, 1.6)
        dx, dy = int(rng.integers(L)), int(rng.integers(L))
        moved = [((x + dx) % L, (y + dy) % L) for x, y in sites]
        assert abs(grand_energy(Configuration(L, moved), 1.0, 1.6) - e0) < 1e-12


def test_exchange_moves_particle_and_is_involutive():
    cfg = Configuration(6, [(2, 2)])
    cfg.exchange((2, 2), (2, 3))
    assert cfg.site_of(0) == (2, 3)
    assert not cfg.occupied((2, 2))
    cfg.exchange((2, 3), (2, 2))
    assert cfg.site_of(0) == (2, 2)
    # empty-empty exchange is identity on occupancy
    cfg.exchange((0, 0), (0, 1))
    assert not cfg.occupied((0, 0)) and not cfg.occupied((0, 1))
    cfg.audit()
    with pytest.raises(NotAdjacent):
        cfg.exchange((0, 0), (1, 1))


def test_move_cost_local_bound():
    # realized |dH| is at most 3U in either direction
    rng = np.random.default_rng(2)
    for _ in range(200):
        L = 6
        k = int(rng.integers(1, 14))
        sites = [(int(s) // L, int(s) % L) for s in rng.permutation(L * L)[:k]]
        cfg = Configuration(L, sites)
        x = int(rng.integers(L)), int(rng.integers(L))
        y = cfg.neighbors(x)[int(rng.integers(4))]
        before = hamiltonian(cfg, 1.0)
        cost = move_cost(cfg, x, y)
        cfg.exchange(x, y)
        after = hamiltonian(cfg, 1.0)
        assert abs(after - before) <= 3.0 + 1e-12
        assert abs(cost - max(0.0, after - before)) < 1e-12


def test_clusters_partition_and_singletons():
    # two diagonal particles: no clusters, two singletons
    cfg = Configuration(8, [(1, 1), (2, 2)])
    cl, singles = clusters(cfg)
    assert cl == [] and sorted(singles) == [0, 1]

    # full 3x3 block: one cluster of size 9
    cfg = block(9, 2, 2, 3, 3)
    cl, singles = clusters(cfg)
    assert singles == [] and len(cl) == 1 and cl[0].size == 9

    # mixed: a dimer plus a far singleton; partition covers every particle
    cfg = Configuration(10, [(1, 1), (1, 2), (7, 7)])
    cl, singles = clusters(cfg)
    assert len(cl) == 1 and cl[0].size == 2 and singles == [2]
    covered = set(cl[0].labels) | set(singles)
    assert covered == {0, 1, 2}


def test_cluster_wraps_torus():
    cfg = Configuration(6, [(5, 2), (0, 2), (1, 2)])
    cl, singles = clusters(cfg)
    assert len(cl) == 1 and cl[0].size == 3 and singles == []
    assert cl[0].rect.w == 3 and cl[0].rect.h == 1


def test_circumscribed_rectangle():
    r = circumscribed_rectangle([(4, 4)], 16)
    assert (r.w, r.h) == (1, 1)
    # L-tromino -> 2x2
    r = circumscribed_rectangle([(0, 0), (1, 0), (0, 1)], 16)
    assert (r.w, r.h) == (2, 2)
    r = circumscribed_rectangle([(0, 0), (4, 2)], 16)
    assert (r.w, r.h) == (5, 3)
    with pytest.raises(AmbiguousWrap):
        circumscribed_rectangle([(0, 0), (8, 0)], 16)


def test_rect_dist_brute_force():
    rng = np.random.default_rng(3)
    for _ in range(300):
        L = 11
        a = Rect(int(rng.integers(L)), int(rng.integers(L)),
                 int(rng.integers(1, 5)), int(rng.integers(1, 5)))
        b = Rect(int(rng.integers(L)), int(rng.integers(L)),
                 int(rng.integers(1, 5)), int(rng.integers(1, 5)))
        brute = min(site_dist(p, q, L) for p in a.sites(L) for q in b.sites(L))
        assert rect_dist(a, b, L) == brute
    for _ in range(100):
        a = Rect(int(rng.integers(20)), int(rng.integers(20)),
                 int(rng.integers(1, 5)), int(rng.integers(1, 5)))
        b = Rect(int(rng.integers(20)), int(rng.integers(20)),
                 int(rng.integers(1, 5)), int(rng.integers(1, 5)))
        brute = min(site_dist(p, q, None) for p in a.sites(None) for q in b.sites(None))
        assert rect_dist(a, b, None) == brute


def test_centered_volume_box():
    r = Rect(10, 10, 2, 3)
    box = centered_volume_box(r, 9, 32)
    assert box.w == box.h == 9
    assert all(box.contains(s, 32) for s in r.sites(32))
    # capped at the torus
    box = centered_volume_box(r, 40, 16)
    assert (box.w, box.h) == (16, 16)


def test_snapshot_roundtrip():
    cfg = Configuration(12, [(0, 0), (11, 5), (3, 7)])
    text = snapshot_str(cfg)
    assert text.startswith("# latticegas snapshot v1")
    back = read_snapshot(io.StringIO(text))
    assert back.L == 12 and back.n == 3
    assert [back.site_of(i) for i in range(3)] == [cfg.site_of(i) for i in range(3)]
    with pytest.raises(DomainError):
        read_snapshot(io.StringIO("bogus\n"))

"""Configurations on the periodic torus: occupancy, clusters, energies.

Occupancy is the source of truth; the labelled particle list is an indexed
view kept in lockstep (audited by Configuration.audit).  Sites are (x, y)
integer pairs; the four nearest neighbours wrap around the torus.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NotAdjacent
from .geometry import Rect, circumscribed_rectangle

NEIGHBOR_STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))


class Configuration:
    """L x L torus with N labelled hard-core particles.

    ``occ[x, y]`` holds label+1 (0 = vacant).  ``pos[label]`` is the site of
    that label.  Exchanges move occupancy; label bookkeeping beyond the moved
    particle (in-cluster permutations) is the dynamics' job.
    """

    def __init__(self, L: int, sites=()):
        if L < 2:
            raise DomainError("torus side must be >= 2")
        self.L = int(L)
        self.occ = np.zeros((L, L), dtype=np.int32)
        sites = [tuple(map(int, s)) for s in sites]
        if len(set(sites)) != len(sites):
            raise DomainError("duplicate site in initial configuration")
        self.pos = np.zeros((len(sites), 2), dtype=np.int32)
        for label, (x, y) in enumerate(sites):
            self.occ[x % L, y % L] = label + 1
            self.pos[label] = (x % L, y % L)

    # -- basic queries ----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.pos)

    def occupied(self, site) -> bool:
        return self.occ[site[0], site[1]] != 0

    def label_at(self, site) -> int:
        v = self.occ[site[0], site[1]]
        if v == 0:
            raise DomainError(f"site {site} is vacant")
        return int(v) - 1

    def site_of(self, label: int):
        return (int(self.pos[label, 0]), int(self.pos[label, 1]))

    def neighbors(self, site):
        x, y, L = site[0], site[1], self.L
        return ((x + 1) % L, y), ((x - 1) % L, y), (x, (y + 1) % L), (x, (y - 1) % L)

    def bond_count(self, site) -> int:
        """Occupied nearest neighbours of a site."""
        x, y, L = site[0], site[1], self.L
        occ = self.occ
        return int((occ[(x + 1) % L, y] != 0) + (occ[(x - 1) % L, y] != 0)
                   + (occ[x, (y + 1) % L] != 0) + (occ[x, (y - 1) % L] != 0))

    def is_clusterized(self, label: int) -> bool:
        """True when the particle touches some other particle."""
        return self.bond_count(self.site_of(label)) > 0

    def adjacent(self, a, b) -> bool:
        L = self.L
        dx = (a[0] - b[0]) % L
        dy = (a[1] - b[1]) % L
        dx = min(dx, L - dx)
        dy = min(dy, L - dy)
        return dx + dy == 1

    def copy(self) -> "Configuration":
        out = Configuration.__new__(Configuration)
        out.L = self.L
        out.occ = self.occ.copy()
        out.pos = self.pos.copy()
        return out

    def audit(self) -> None:
        """Consistency check between occupancy and the particle view."""
        if int((self.occ != 0).sum()) != self.n:
            raise AssertionError("occupancy count != particle count")
        for label in range(self.n):
            x, y = self.pos[label]
            if self.occ[x, y] != label + 1:
                raise AssertionError(f"label {label} desynchronized at {(x, y)}")

    # -- moves -------------------------------------------------------------

    def exchange(self, a, b) -> None:
        """Swap occupancy of two nearest-neighbour sites in place."""
        if not self.adjacent(a, b):
            raise NotAdjacent(f"{a} and {b} are not nearest neighbours")
        va = int(self.occ[a[0], a[1]])
        vb = int(self.occ[b[0], b[1]])
        self.occ[a[0], a[1]] = vb
        self.occ[b[0], b[1]] = va
        if va:
            self.pos[va - 1] = b
        if vb:
            self.pos[vb - 1] = a

    def swap_labels(self, la: int, lb: int) -> None:
        """Exchange the positions of two labels (in-cluster permutation)."""
        sa, sb = self.site_of(la), self.site_of(lb)
        self.occ[sa[0], sa[1]] = lb + 1
        self.occ[sb[0], sb[1]] = la + 1
        self.pos[la], self.pos[lb] = (sb[0], sb[1]), (sa[0], sa[1])


# ---------------------------------------------------------------------------
# energies


def total_bonds(cfg: Configuration) -> int:
    occ = cfg.occ != 0
    return int(np.count_nonzero(occ & np.roll(occ, 1, axis=0))
               + np.count_nonzero(occ & np.roll(occ, 1, axis=1)))


def hamiltonian(cfg: Configuration, U: float) -> float:
    """Binding energy: -U per nearest-neighbour occupied pair."""
    return -U * total_bonds(cfg)


def grand_energy(cfg: Configuration, U: float, Delta: float) -> float:
    """H plus the activation term Delta per particle."""
    return hamiltonian(cfg, U) + Delta * cfg.n


def move_cost(cfg: Configuration, a, b) -> float:
    """Positive part of the energy change for moving a particle a -> b,
    in units of U (so the result is an integer 0..3)."""
    if not cfg.adjacent(a, b):
        raise NotAdjacent(f"{a} and {b} are not nearest neighbours")
    occ_a, occ_b = cfg.occupied(a), cfg.occupied(b)
    if occ_a == occ_b:
        return 0
    if occ_b:
        a, b = b, a
    na = sum(1 for s in cfg.neighbors(a) if s != b and cfg.occupied(s))
    nb = sum(1 for s in cfg.neighbors(b) if s != a and cfg.occupied(s))
    return max(0, na - nb)


# ---------------------------------------------------------------------------
# clusters


@dataclass(frozen=True)
class Cluster:
    """Connected component of touching particles (size >= 2)."""

    sites: tuple
    labels: tuple
    rect: Rect

    @property
    def size(self) -> int:
        return len(self.sites)


def cluster_of(cfg: Configuration, site) -> list:
    """Sites of the connected component containing ``site``."""
    if not cfg.occupied(site):
        return []
    seen = {tuple(site)}
    stack = [tuple(site)]
    while stack:
        s = stack.pop()
        for t in cfg.neighbors(s):
            if cfg.occupied(t) and t not in seen:
                seen.add(t)
                stack.append(t)
    return sorted(seen)


def clusters(cfg: Configuration):
    """Partition the particles into clusters (size >= 2) and singletons.

    Returns (list of Cluster, list of singleton labels).
    """
    seen = np.zeros((cfg.L, cfg.L), dtype=bool)
    out, singles = [], []
    for label in range(cfg.n):
        s = cfg.site_of(label)
        if seen[s[0], s[1]]:
            continue
        comp = cluster_of(cfg, s)
        for c in comp:
            seen[c[0], c[1]] = True
        if len(comp) == 1:
            singles.append(label)
        else:
            labels = tuple(sorted(cfg.label_at(c) for c in comp))
            out.append(Cluster(sites=tuple(comp), labels=labels,
                               rect=circumscribed_rectangle(comp, cfg.L)))
    return out, singles


# ---------------------------------------------------------------------------
# snapshots (versioned coordinate-list format)

SNAPSHOT_HEADER = "# latticegas snapshot v1"


def write_snapshot(cfg: Configuration, fh) -> None:
    close = False
    if isinstance(fh, str):
        fh, close = open(fh, "w"), True
    try:
        fh.write(f"{SNAPSHOT_HEADER}\n")
        fh.write(f"L {cfg.L}\n")
        fh.write(f"N {cfg.n}\n")
        for label in range(cfg.n):
            x, y = cfg.site_of(label)
            fh.write(f"{x} {y}\n")
    finally:
        if close:
            fh.close()


def read_snapshot(fh) -> Configuration:
    close = False
    if isinstance(fh, str):
        fh, close = open(fh), True
    try:
        lines = [ln.strip() for ln in fh if ln.strip()]
    finally:
        if close:
            fh.close()
    if not lines or lines[0] != SNAPSHOT_HEADER:
        raise DomainError("not a latticegas snapshot (bad header)")
    L = int(lines[1].split()[1])
    n = int(lines[2].split()[1])
    sites = [tuple(map(int, ln.split())) for ln in lines[3:3 + n]]
    if len(sites) != n:
        raise DomainError("snapshot truncated")
    return Configuration(L, sites)


def snapshot_str(cfg: Configuration) -> str:
    buf = io.StringIO()
    write_snapshot(cfg, buf)
    return buf.getvalue()


def rectangle_sites(x0: int, y0: int, w: int, h: int):
    """Convenience: the sites of a w x h block anchored at (x0, y0)."""
    return [(x0 + i, y0 + j) for i in range(w) for j in range(h)]

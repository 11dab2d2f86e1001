"""Regenerate the bundled parity families at the published sizes.

A parity family is an odd set of Φ_j polynomials, each with exactly two
shortest paths that share no edge, in which every edge occurs an even
number of times. Indices follow the Rust side exactly: polynomials are
the distance-j pairs u < v in lexicographic order, edge ids are positions
in the sorted edge list. Graphs that are not bundled are exported by the
CLI so their labeling matches.

Run from the repository root after gen_bundle.py:
    cargo build --release -p spectra && python3 tools/gen_parity.py
"""
import hashlib
import itertools
import json
import os
import random
import subprocess

import networkx as nx

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "spectra", "data")
CLI = os.path.join(os.path.dirname(__file__), "..", "target", "release", "spectra")

# (fixture name, graph source, j, published size)
TARGETS = [
    ("hamming_2_3", ["gen", "hamming", "--d", "2", "--n", "3", "--emit", "graph6"], 2, 9),
    ("shrikhande", "shrikhande.g6", 2, 11),
    ("icosahedron", "icosahedron.g6", 2, 15),
    ("kneser_7_3", ["gen", "kneser", "--n", "7", "--d", "3", "--emit", "graph6"], 3, 9),
    ("coxeter", "coxeter.g6", 4, 21),
]


def load(source):
    if isinstance(source, str):
        with open(os.path.join(OUT, source), "rb") as f:
            data = f.read().strip()
    else:
        data = subprocess.run([CLI] + source, check=True, capture_output=True).stdout.strip()
    g = nx.from_graph6_bytes(data)
    return nx.convert_node_labels_to_integers(g, ordering="sorted")


def binomial_columns(g, j):
    edges = sorted(tuple(sorted(e)) for e in g.edges())
    eid = {e: i for i, e in enumerate(edges)}
    dist = dict(nx.all_pairs_shortest_path_length(g))
    polys = []
    for u in sorted(g):
        for v in sorted(g):
            if u < v and dist[u][v] == j:
                paths = list(nx.all_shortest_paths(g, u, v))
                monos = [frozenset(eid[tuple(sorted(p))] for p in zip(path, path[1:])) for path in paths]
                polys.append(monos)
    cols = {}
    for i, monos in enumerate(polys):
        if len(monos) == 2 and not (monos[0] & monos[1]):
            mask = 0
            for e in monos[0] | monos[1]:
                mask ^= 1 << e
            cols[i] = mask
    return polys, cols


def kernel_basis(cols):
    """Systematic basis of {x : sum of x_i col_i = 0}: one vector per free
    column, that column plus the pivot columns needed to cancel it."""
    pivots = {}  # pivot bit -> (mask, combination)
    basis = []
    for i, mask in cols.items():
        combo = {i}
        while mask:
            top = mask.bit_length() - 1
            if top not in pivots:
                pivots[top] = (mask, combo)
                break
            pm, pc = pivots[top]
            mask ^= pm
            combo = combo ^ pc
        else:
            basis.append(frozenset(combo))
    return basis


def find_family(basis, size, seed=1):
    rng = random.Random(seed)
    k = len(basis)
    if k <= 20:
        for r in range(1, k + 1):
            for combo in itertools.combinations(basis, r):
                x = frozenset()
                for b in combo:
                    x = x ^ b
                if len(x) == size:
                    return sorted(x)
        return None
    # each systematic vector carries its own free column, so combining r of
    # them gives weight r plus whatever the pivot columns add
    for _ in range(2_000_000):
        x = frozenset()
        for b in rng.sample(basis, rng.randint(1, min(size, k))):
            x = x ^ b
        if len(x) == size:
            return sorted(x)
    return None


def check(polys, family):
    assert len(family) % 2 == 1
    mult = {}
    for f in family:
        assert len(polys[f]) == 2 and not (polys[f][0] & polys[f][1])
        for m in polys[f]:
            for e in m:
                mult[e] = mult.get(e, 0) + 1
    assert all(c % 2 == 0 for c in mult.values())


def main():
    path = os.path.join(OUT, "manifest.json")
    with open(path) as f:
        manifest = json.load(f)
    for name, source, j, size in TARGETS:
        g = load(source)
        polys, cols = binomial_columns(g, j)
        basis = kernel_basis(cols)
        family = find_family(basis, size)
        if family is None:
            raise SystemExit("%s: no odd family of size %d (kernel dimension %d)" % (name, size, len(basis)))
        check(polys, family)
        fixture = {"graph": name, "j": j, "family": family}
        text = json.dumps(fixture, separators=(",", ":")) + "\n"
        fname = name + ".parity.json"
        with open(os.path.join(OUT, fname), "w") as f:
            f.write(text)
        manifest[name + ".parity"] = {"file": fname, "sha256": hashlib.sha256(text.encode()).hexdigest()}
        print(name, "j =", j, "|F| =", len(family), "kernel dim", len(basis), "polynomials", len(polys))
    with open(path, "w") as f:
        json.dump(manifest, f, indent=2, sort_keys=True)
        f.write("\n")


if __name__ == "__main__":
    main()

"""Regenerate the bundled graph data under crates/spectra/data.

Every graph is checked against its known intersection array before it is
written. Run from the repository root: python3 tools/gen_bundle.py
"""
import hashlib
import itertools
import json
import os

import networkx as nx

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "spectra", "data")


def intersection_array(g):
    if not nx.is_connected(g):
        return None
    dist = dict(nx.all_pairs_shortest_path_length(g))
    diam = max(max(r.values()) for r in dist.values())
    b = [None] * (diam + 1)
    c = [None] * (diam + 1)
    for u in g:
        for v in g:
            i = dist[u][v]
            ci = sum(1 for w in g[v] if dist[u][w] == i - 1)
            bi = sum(1 for w in g[v] if dist[u][w] == i + 1)
            if b[i] is None:
                b[i], c[i] = bi, ci
            elif (b[i], c[i]) != (bi, ci):
                return None
    return b[:diam], c[1:]


def relabel(g):
    return nx.convert_node_labels_to_integers(g, ordering="sorted")


def shrikhande():
    g = nx.Graph()
    conn = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)]
    for x in range(4):
        for y in range(4):
            for dx, dy in conn:
                g.add_edge((x, y), ((x + dx) % 4, (y + dy) % 4))
    return relabel(g)


def kneser(n, k):
    vs = list(itertools.combinations(range(n), k))
    g = nx.Graph()
    g.add_nodes_from(vs)
    for a, b in itertools.combinations(vs, 2):
        if not set(a) & set(b):
            g.add_edge(a, b)
    return g


def coxeter():
    lines = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]
    g = kneser(7, 3)
    g.remove_nodes_from(lines)
    return relabel(g)


def golay_octads():
    # extended binary Golay code from the (23,12) cyclic code, generator x^11+x^10+x^6+x^5+x^4+x^2+1
    gpoly = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1]
    rows = []
    for s in range(12):
        r = [0] * 23
        for i, c in enumerate(gpoly):
            r[(i + s) % 23] = c
        r.append(sum(r) % 2)
        rows.append(int("".join(map(str, r)), 2))
    words = {0}
    for r in rows:
        words |= {w ^ r for w in words}
    return [w for w in words if bin(w).count("1") == 8]


def m22():
    octads = golay_octads()
    assert len(octads) == 759
    hexads = []
    for w in octads:
        if w & 1 and w & 2:
            hexads.append(w & ~3)
    assert len(hexads) == 77
    g = nx.Graph()
    g.add_nodes_from(range(77))
    for i, j in itertools.combinations(range(77), 2):
        if hexads[i] & hexads[j] == 0:
            g.add_edge(i, j)
    return g


def perkel():
    # Z_19 x Z_3, (x,i) ~ (x + 4^i s, i+1) for s in the cube roots of unity {1,7,11}
    dset = (1, 7, 11)
    g = nx.Graph()
    for x in range(19):
        for i in range(3):
            for s in dset:
                g.add_edge((x, i), ((x + pow(4, i, 19) * s) % 19, (i + 1) % 3))
    return relabel(g), dset


def gf2_solve(rows, ncols):
    """rows: list of (bitmask, rhs). Returns one solution bitmask or None."""
    pivots = []
    for mask, rhs in rows:
        for pm, pr, pc in pivots:
            if mask >> pc & 1:
                mask ^= pm
                rhs ^= pr
        if mask == 0:
            if rhs:
                return None
            continue
        pc = mask.bit_length() - 1
        new = []
        for pm, pr, c in pivots:
            if pm >> pc & 1:
                pm ^= mask
                pr ^= rhs
            new.append((pm, pr, c))
        pivots = new + [(mask, rhs, pc)]
    x = 0
    for pm, pr, pc in pivots:
        if pr:
            x |= 1 << pc
    return x


def orthogonal_signing(g):
    """Signing S with S^2 = kI for a triangle-free graph where every distance-2 pair has two common neighbours."""
    edges = sorted(tuple(sorted(e)) for e in g.edges())
    eid = {e: i for i, e in enumerate(edges)}
    rows = []
    for u, w in itertools.combinations(sorted(g), 2):
        common = sorted(set(g[u]) & set(g[w]))
        if not common:
            continue
        if len(common) != 2 or g.has_edge(u, w):
            raise RuntimeError("linear signing system does not apply")
        mask = 0
        for v in common:
            mask ^= 1 << eid[tuple(sorted((u, v)))]
            mask ^= 1 << eid[tuple(sorted((v, w)))]
        rows.append((mask, 1))
    x = gf2_solve(rows, len(edges))
    if x is None:
        return None
    return {e: (-1 if x >> i & 1 else 1) for e, i in eid.items()}


def lift(g, sign):
    h = nx.Graph()
    n = g.number_of_nodes()
    h.add_nodes_from(range(2 * n))
    for (u, v), s in sign.items():
        if s == 1:
            h.add_edge(u, v)
            h.add_edge(u + n, v + n)
        else:
            h.add_edge(u, v + n)
            h.add_edge(u + n, v)
    return h


def clebsch():
    # folded 5-cube: H(4,2) plus antipodal edges
    g = nx.Graph()
    for a in range(16):
        for b in range(a + 1, 16):
            if bin(a ^ b).count("1") in (1, 4):
                g.add_edge(a, b)
    return g


def halved_cube(d):
    vs = [v for v in range(2 ** d) if bin(v).count("1") % 2 == 0]
    idx = {v: i for i, v in enumerate(vs)}
    g = nx.Graph()
    g.add_nodes_from(range(len(vs)))
    for a, b in itertools.combinations(vs, 2):
        if bin(a ^ b).count("1") == 2:
            g.add_edge(idx[a], idx[b])
    return g


def distance_graph(g, j):
    dist = dict(nx.all_pairs_shortest_path_length(g))
    h = nx.Graph()
    h.add_nodes_from(g)
    for u, v in itertools.combinations(sorted(g), 2):
        if dist[u][v] == j:
            h.add_edge(u, v)
    return h


def g6(g):
    return nx.to_graph6_bytes(g, header=False).strip()


def main():
    os.makedirs(OUT, exist_ok=True)
    graphs = {}
    expect = {}

    graphs["heawood"] = nx.heawood_graph(); expect["heawood"] = ([3, 2, 2], [1, 1, 3])
    graphs["icosahedron"] = nx.icosahedral_graph(); expect["icosahedron"] = ([5, 2, 1], [1, 2, 5])
    graphs["shrikhande"] = shrikhande(); expect["shrikhande"] = ([6, 3], [1, 2])
    graphs["coxeter"] = coxeter(); expect["coxeter"] = ([3, 2, 2, 1], [1, 1, 1, 2])
    graphs["m22"] = m22(); expect["m22"] = ([16, 15], [1, 4])
    perk, dset = perkel()
    graphs["perkel"] = perk; expect["perkel"] = ([6, 5, 2], [1, 1, 3])
    cl = clebsch()
    graphs["clebsch"] = cl; expect["clebsch"] = ([5, 4], [1, 2])
    sign = orthogonal_signing(cl)
    assert sign is not None
    graphs["wells"] = lift(cl, sign); expect["wells"] = ([5, 4, 1, 1], [1, 1, 4, 5])
    graphs["halved_8_cube"] = halved_cube(8); expect["halved_8_cube"] = ([28, 15, 6, 1], [1, 6, 15, 28])
    graphs["heawood_distance_3"] = distance_graph(nx.heawood_graph(), 3)
    expect["heawood_distance_3"] = ([4, 3, 2], [1, 2, 4])

    manifest = {}
    for name, g in graphs.items():
        g = relabel(g)
        ia = intersection_array(g)
        assert ia == expect[name], (name, ia)
        data = g6(g)
        with open(os.path.join(OUT, name + ".g6"), "wb") as f:
            f.write(data + b"\n")
        manifest[name] = {
            "file": name + ".g6",
            "vertices": g.number_of_nodes(),
            "edges": g.number_of_edges(),
            "sha256": hashlib.sha256(data + b"\n").hexdigest(),
        }
        print(name, g.number_of_nodes(), g.number_of_edges(), ia)

    # signing of the distance-3 Heawood graph with S^2 = 4I
    d3 = relabel(graphs["heawood_distance_3"])
    s = orthogonal_signing(d3)
    if s is not None:
        n = d3.number_of_nodes()
        m = [[[0, 1] for _ in range(n)] for _ in range(n)]
        for (u, v), val in s.items():
            m[u][v] = [val, 1]
            m[v][u] = [val, 1]
        body = json.dumps({"rows": n, "cols": n, "entries": [e for r in m for e in r]}, separators=(",", ":")) + "\n"
        with open(os.path.join(OUT, "heawood_distance_3.signing.json"), "w") as f:
            f.write(body)
        manifest["heawood_distance_3.signing"] = {
            "file": "heawood_distance_3.signing.json",
            "sha256": hashlib.sha256(body.encode()).hexdigest(),
        }
        print("heawood distance-3 signing found")
    print("perkel connection set", dset)

    with open(os.path.join(OUT, "manifest.json"), "w") as f:
        json.dump(manifest, f, indent=2, sort_keys=True)
        f.write("\n")


if __name__ == "__main__":
    main()

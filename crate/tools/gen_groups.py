"""Regenerate the bundled group and character tables (S3, S4, D4, D5, Q8).

Characters are written as functions of a group element and evaluated on
class representatives, so the table and the representatives cannot drift
apart. Orthogonality is checked numerically before writing. Run from the
repository root after gen_bundle.py: python3 tools/gen_groups.py
"""
import hashlib
import itertools
import json
import math
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "spectra", "data")


def perm_group(n):
    elems = sorted(itertools.permutations(range(n)))
    mul = lambda a, b: tuple(a[b[i]] for i in range(n))
    return elems, mul


def dihedral(m):
    # (k, f): x -> f ? -x + k : x + k  (mod m)
    elems = [(k, f) for f in (0, 1) for k in range(m)]

    def mul(a, b):
        (k1, f1), (k2, f2) = a, b
        return ((k1 + (-k2 if f1 else k2)) % m, f1 ^ f2)

    return elems, mul


def quaternion():
    # (sign, unit) with unit in 1, i, j, k
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, u) for u in "1ijk" for s in (1, -1)]

    def mul(a, b):
        s, u = table[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    return elems, mul


def classes(elems, mul):
    idx = {e: i for i, e in enumerate(elems)}
    e0 = next(e for e in elems if all(mul(e, x) == x for x in elems))
    inv = {x: next(y for y in elems if mul(x, y) == e0) for x in elems}
    seen, out = set(), []
    order = [e0] + [x for x in elems if x != e0]
    for x in order:
        if x in seen:
            continue
        cls = sorted({mul(mul(g, x), inv[g]) for g in elems}, key=idx.get)
        seen.update(cls)
        out.append(cls)
    table = [[idx[mul(a, b)] for b in elems] for a in elems]
    return table, out, idx


def cycle_type(p):
    seen, ct = set(), []
    for i in range(len(p)):
        if i in seen:
            continue
        k, j = 0, i
        while j not in seen:
            seen.add(j)
            j = p[j]
            k += 1
        ct.append(k)
    return tuple(sorted(ct, reverse=True))


def sign(p):
    return (-1) ** sum(c - 1 for c in cycle_type(p))


def fixed(p):
    return sum(1 for i in range(len(p)) if p[i] == i)


def s3():
    elems, mul = perm_group(3)
    chars = [lambda p: 1, sign, lambda p: fixed(p) - 1]
    names = lambda p: {(1, 1, 1): "e", (2, 1): "(12)", (3,): "(123)"}[cycle_type(p)]
    return elems, mul, chars, names


def s4():
    elems, mul = perm_group(4)
    two = {(1, 1, 1, 1): 2, (2, 1, 1): 0, (2, 2): 2, (3, 1): -1, (4,): 0}
    chars = [
        lambda p: 1,
        sign,
        lambda p: two[cycle_type(p)],
        lambda p: fixed(p) - 1,
        lambda p: (fixed(p) - 1) * sign(p),
    ]
    names = lambda p: {(1, 1, 1, 1): "e", (2, 1, 1): "(12)", (2, 2): "(12)(34)", (3, 1): "(123)", (4,): "(1234)"}[cycle_type(p)]
    return elems, mul, chars, names


def d4():
    elems, mul = dihedral(4)
    chars = [
        lambda g: 1,
        lambda g: -1 if g[1] else 1,
        lambda g: (-1) ** g[0],
        lambda g: (-1) ** g[0] * (-1 if g[1] else 1),
        lambda g: 0 if g[1] else round(2 * math.cos(math.pi * g[0] / 2)),
    ]

    def names(g):
        k, f = g
        if f:
            return "s" if k % 2 == 0 else "sr"
        return ["e", "r", "r^2", "r"][k]

    return elems, mul, chars, names


def d5():
    elems, mul = dihedral(5)
    chars = [
        lambda g: 1,
        lambda g: -1 if g[1] else 1,
        lambda g: 0 if g[1] else 2 * math.cos(2 * math.pi * g[0] / 5),
        lambda g: 0 if g[1] else 2 * math.cos(4 * math.pi * g[0] / 5),
    ]
    names = lambda g: "s" if g[1] else ["e", "r", "r^2", "r^2", "r"][g[0]]
    return elems, mul, chars, names


def q8():
    elems, mul = quaternion()
    lin = {"1": (1, 1), "i": (1, -1), "j": (-1, 1), "k": (-1, -1)}
    chars = [
        lambda g: 1,
        lambda g: lin[g[1]][0],
        lambda g: lin[g[1]][1],
        lambda g: lin[g[1]][0] * lin[g[1]][1],
        lambda g: 2 * g[0] if g[1] == "1" else 0,
    ]
    names = lambda g: {(1, "1"): "1", (-1, "1"): "-1"}.get(g, g[1])
    return elems, mul, chars, names


def encode(v):
    r = round(v)
    if abs(v - r) < 1e-9:
        return r
    # the only irrational values are 2cos(2πk/5) = (−1 ± √5)/2
    s = "+" if v > 0 else "-"
    return {"irrational": "(-1%s5^(1/2))/2" % s}


def build(name, spec):
    elems, mul, chars, names = spec()
    table, cls, idx = classes(elems, mul)
    reps = [c[0] for c in cls]
    values = [[ch(r) for r in reps] for ch in chars]
    order = len(elems)
    for a, b in itertools.product(range(len(chars)), repeat=2):
        ip = sum(len(c) * values[a][k] * values[b][k] for k, c in enumerate(cls)) / order
        assert abs(ip - (a == b)) < 1e-9, (name, a, b, ip)
    chars_json = {
        "order": order,
        "classes": [{"size": len(c), "name": names(c[0]), "representative": idx[c[0]]} for c in cls],
        "table": [[encode(v) for v in row] for row in values],
    }
    return table, chars_json


def write(fname, obj, manifest):
    text = json.dumps(obj, separators=(",", ":")) + "\n"
    with open(os.path.join(OUT, fname), "w") as f:
        f.write(text)
    manifest[fname.rsplit(".", 1)[0]] = {"file": fname, "sha256": hashlib.sha256(text.encode()).hexdigest()}


def main():
    path = os.path.join(OUT, "manifest.json")
    with open(path) as f:
        manifest = json.load(f)
    for name, spec in [("s3", s3), ("s4", s4), ("d4", d4), ("d5", d5), ("q8", q8)]:
        table, chars = build(name, spec)
        write(name + ".group.json", table, manifest)
        write(name + ".characters.json", chars, manifest)
    with open(path, "w") as f:
        json.dump(manifest, f, indent=2, sort_keys=True)
        f.write("\n")


if __name__ == "__main__":
    main()

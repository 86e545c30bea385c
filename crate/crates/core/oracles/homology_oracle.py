"""Brute-force reference values for the quandle homology and state-sum tests.

Everything here is computed from scratch with dense matrices (sympy) and
exhaustive search; nothing is shared with the Rust implementation.
Run: python3 homology_oracle.py > oracle_values.json
"""
import itertools
import json

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors


def dihedral(k):
    return [[(2 * b - a) % k for b in range(k)] for a in range(k)]


def trivial(k):
    return [[a for b in range(k)] for a in range(k)]


def alexander(m, t):
    return [[(t * a + (1 - t) * b) % m for b in range(m)] for a in range(m)]


def degenerate(x):
    return any(x[i] == x[i + 1] for i in range(len(x) - 1))


def basis(k, n, theory):
    out = []
    for x in itertools.product(range(k), repeat=n):
        d = degenerate(x)
        if theory == "R" or (theory == "D" and d) or (theory == "Q" and not d):
            out.append(x)
    return out


def boundary(op, x):
    """Rack boundary of a basis tuple as a dict tuple -> coefficient."""
    n = len(x)
    out = {}
    for i in range(2, n + 1):
        s = (-1) ** i
        a = x[: i - 1] + x[i:]
        b = tuple(op[y][x[i - 1]] for y in x[: i - 1]) + x[i:]
        out[a] = out.get(a, 0) + s
        out[b] = out.get(b, 0) - s
    return out


def matrix(op, n, theory):
    k = len(op)
    cols = basis(k, n, theory)
    rows = basis(k, n - 1, theory)
    where = {r: i for i, r in enumerate(rows)}
    m = [[0] * len(cols) for _ in rows]
    for j, x in enumerate(cols):
        for y, c in boundary(op, x).items():
            if y in where:
                m[where[y]][j] += c
    return Matrix(m) if rows and cols else Matrix.zeros(len(rows), len(cols))


def factors(m):
    if m.rows == 0 or m.cols == 0:
        return []
    return [int(abs(d)) for d in invariant_factors(m, domain=ZZ) if d != 0]


def homology(op, n, theory):
    a = matrix(op, n, theory)
    b = matrix(op, n + 1, theory)
    ra = len(factors(a))
    fb = factors(b)
    free = a.cols - ra - len(fb)
    return {"free_rank": free, "torsion": [d for d in fb if d != 1]}


def rank_mod(m, p):
    rows = [[int(v) % p for v in m.row(i)] for i in range(m.rows)]
    r = 0
    for c in range(m.cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [v * inv % p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(v - f * w) % p for v, w in zip(rows[i], rows[r])]
        r += 1
    return r


def cohomology_dim(op, n, theory, p):
    a = matrix(op, n, theory)
    b = matrix(op, n + 1, theory)
    return a.cols - rank_mod(a, p) - rank_mod(b, p)


def theta(x, y, z, p=3):
    """Mochizuki's 3-cocycle on the dihedral quandle of prime order p."""
    return ((x - y) * (((2 * z - y) ** p + y ** p - 2 * z ** p) // p)) % p


# ---- diagrams -----------------------------------------------------------

TREFOIL = [(4, 2, 5, 1), (6, 4, 1, 3), (2, 6, 3, 5)]
NOT_A_KNOT = [(1, 4, 2, 3), (3, 6, 4, 5), (5, 2, 6, 1)]
FIGURE_EIGHT = [(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)]
HOPF = [(1, 3, 2, 4), (3, 1, 4, 2)]


def trace(pd):
    """Edges with (tail, head) slots, crossing signs and faces of a PD code."""
    slots = {}
    for c, x in enumerate(pd):
        for s, e in enumerate(x):
            slots.setdefault(e, []).append((c, s))
    assert all(len(v) == 2 for v in slots.values())
    head, tail = {}, {}
    # a strand passes a crossing from slot s to slot s+2
    def through(e, end):
        c, s = end
        return pd[c][(s + 2) % 4], (c, (s + 2) % 4)
    done = set()
    for e0 in sorted(slots):
        if e0 in done:
            continue
        # walk the component starting from one end of e0
        comp = []
        e, end = e0, slots[e0][1]
        while True:
            start = [o for o in slots[e] if o != end][0]
            comp.append((e, start, end))
            done.add(e)
            e, end_start = through(e, end)
            end = [o for o in slots[e] if o != end_start][0]
            if e == e0:
                break
        forward = None
        for (_, st, en) in comp:
            if en[1] == 0:
                forward = True
                break
            if en[1] == 2:
                forward = False
                break
        if forward is None:
            # no under passage: labels increase
            labels = [x for (x, _, _) in comp]
            forward = labels[(labels.index(min(labels)) + 1) % len(labels)] != max(labels) or len(labels) <= 2
        for (x, st, en) in comp:
            if forward:
                tail[x], head[x] = st, en
            else:
                tail[x], head[x] = en, st
    for x in slots:
        for c, s in (head[x],):
            assert s != 2, "under-out slot cannot be a head"
    sign = [1 if head[x[3]] == (c, 3) else -1 for c, x in enumerate(pd)]
    at = {(c, s): e for c, x in enumerate(pd) for s, e in enumerate(x)}
    def arrive(c, s):
        return [o for o in slots[at[(c, s)]] if o != (c, s)][0]
    face_of, faces = {}, []
    for start in sorted(at):
        if start in face_of:
            continue
        f, d, cyc = len(faces), start, []
        while d not in face_of:
            face_of[d] = f
            cyc.append(d)
            c2, s2 = arrive(*d)
            d = (c2, (s2 + 1) % 4)
        faces.append(cyc)
    right = lambda e: face_of[tail[e]]
    left = lambda e: face_of[head[e]]
    return slots, head, tail, sign, faces, face_of, right, left


def count_colorings(pd, op):
    _, _, _, sign, _, _, _, _ = trace(pd)
    edges = sorted({e for x in pd for e in x})
    n = 0
    for ec in itertools.product(range(len(op)), repeat=len(edges)):
        col = dict(zip(edges, ec))
        ok = all(col[x[1]] == col[x[3]] and
                 (op[col[x[0]]][col[x[1]]] == col[x[2]] if sign[c] > 0 else op[col[x[2]]][col[x[1]]] == col[x[0]])
                 for c, x in enumerate(pd))
        n += ok
    return n


def coloring_orbit_sizes(pd, op):
    pd_edges = sorted({e for x in pd for e in x})
    _, _, _, sign, _, _, _, _ = trace(pd)
    cols = set()
    for ec in itertools.product(range(len(op)), repeat=len(pd_edges)):
        col = dict(zip(pd_edges, ec))
        if all(col[x[1]] == col[x[3]] and
               (op[col[x[0]]][col[x[1]]] == col[x[2]] if sign[c] > 0 else op[col[x[2]]][col[x[1]]] == col[x[0]])
               for c, x in enumerate(pd)):
            cols.add(ec)
    sizes, seen = [], set()
    for key in sorted(cols):
        if key in seen:
            continue
        orbit, todo = {key}, [key]
        while todo:
            y = todo.pop()
            for x in range(len(op)):
                z = tuple(op[a][x] for a in y)
                if z not in orbit:
                    orbit.add(z)
                    todo.append(z)
        seen |= orbit
        sizes.append(len(orbit))
    return sorted(sizes)


def shadow_state_sum(pd, op, cocycle, reduced=False):
    slots, head, tail, sign, faces, face_of, right, left = trace(pd)
    k = len(op)
    edges = sorted(slots)
    values = []
    for ec in itertools.product(range(k), repeat=len(edges)):
        col = dict(zip(edges, ec))
        ok = True
        for c, x in enumerate(pd):
            if col[x[1]] != col[x[3]]:
                ok = False
                break
            a, b, cc = col[x[0]], col[x[1]], col[x[2]]
            if sign[c] > 0 and op[a][b] != cc:
                ok = False
            if sign[c] < 0 and op[cc][b] != a:
                ok = False
        if not ok:
            continue
        for fc in itertools.product(range(k), repeat=len(faces)):
            if any(op[fc[right(e)]][col[e]] != fc[left(e)] for e in edges):
                continue
            total = 0
            for c, x in enumerate(pd):
                if sign[c] > 0:
                    q0 = fc[face_of[(c, 1)]]  # corner between slots 0 and 1
                    total += cocycle(q0, col[x[0]], col[x[1]])
                else:
                    q0 = fc[face_of[(c, 2)]]  # corner between slots 1 and 2
                    total -= cocycle(q0, col[x[2]], col[x[1]])
            values.append((ec + fc, total % 3))
    if reduced:
        seen, reps = set(), []
        for key, v in sorted(values):
            if key in seen:
                continue
            orbit, todo = {key}, [key]
            while todo:
                y = todo.pop()
                for x in range(k):
                    z = tuple(op[a][x] for a in y)
                    if z not in orbit:
                        orbit.add(z)
                        todo.append(z)
            seen |= orbit
            reps.append(v)
        return sorted(reps)
    return sorted(v for _, v in values)


def main():
    out = {}
    d3 = dihedral(3)
    groups = {}
    for name, op in [("dihedral:3", d3), ("trivial:2", trivial(2)), ("alexander:4:3", alexander(4, 3)),
                     ("alexander:5:2", alexander(5, 2))]:
        for theory in "RDQ":
            for n in (1, 2, 3):
                if name.startswith("alexander:5") and theory != "Q" and n == 3:
                    continue
                groups[f"{name} {theory} {n}"] = homology(op, n, theory)
    out["homology"] = groups
    out["cohomology_z3"] = {f"dihedral:3 Q {n}": cohomology_dim(d3, n, "Q", 3) for n in (1, 2, 3)}
    # theta is a quandle 3-cocycle that is not a coboundary
    flat = [theta(*x) for x in itertools.product(range(3), repeat=3)]
    out["theta_values"] = flat
    out["trefoil_shadow_state_sum"] = shadow_state_sum(TREFOIL, d3, theta)
    out["trefoil_reduced_shadow_state_sum"] = shadow_state_sum(TREFOIL, d3, theta, reduced=True)
    out["figure_eight_shadow_state_sum"] = shadow_state_sum(FIGURE_EIGHT, d3, theta)
    out["coloring_counts"] = {
        "trefoil dihedral:3": count_colorings(TREFOIL, d3),
        "figure_eight dihedral:3": count_colorings(FIGURE_EIGHT, d3),
        "figure_eight dihedral:5": count_colorings(FIGURE_EIGHT, dihedral(5)),
        "hopf dihedral:3": count_colorings(HOPF, d3),
    }
    out["coloring_orbit_sizes"] = {
        "trefoil dihedral:3": coloring_orbit_sizes(TREFOIL, d3),
        "figure_eight dihedral:5": coloring_orbit_sizes(FIGURE_EIGHT, dihedral(5)),
    }
    out["trace"] = {}
    for name, pd in [("trefoil", TREFOIL), ("figure_eight", FIGURE_EIGHT), ("hopf", HOPF), ("not_a_knot", NOT_A_KNOT)]:
        _, _, _, sign, faces, _, _, _ = trace(pd)
        out["trace"][name] = {"signs": sign, "faces": len(faces)}
    print(json.dumps(out, indent=1, sort_keys=True))


if __name__ == "__main__":
    main()

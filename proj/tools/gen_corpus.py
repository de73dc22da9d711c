#!/usr/bin/env python3
"""Generate the bundled .plabic corpus under data/ and cross-check it.

Each emitted graph is rebuilt from explicit planar coordinates, its rotation
system is extracted by angle sorting, and the combinatorial invariants (trip
permutation, face labels, necklaces, dual quiver, matching counts) are
recomputed from scratch and compared against the expected values hardcoded
below. Exits nonzero on any mismatch, so the corpus cannot silently drift.

Conventions (shared with the C++ library):
  - boundary points are labelled 1..n clockwise;
  - rotation lists are clockwise around each node;
  - a strand arriving at a white node leaves by the next incidence clockwise,
    at a black node by the next incidence anticlockwise;
  - face tracing follows the face to the left of each directed (half-)edge.
"""

import math
import os
import sys
from itertools import combinations

TAU = 2.0 * math.pi


# ---------------------------------------------------------------------------
# graph model


class Plabic:
    """A plabic graph with a rotation system.

    nodes: dict id -> 'black' | 'white'
    n: number of boundary points (labels 1..n, clockwise)
    half: dict label -> node id
    edges: list of (a, b) node pairs, a <= b, canonical sorted order
    rot: dict node -> clockwise cyclic list of incidences
         incidence = ('h', label) or ('e', edge_index)
    """

    def __init__(self, n, nodes, half, edges, rot):
        self.n = n
        self.nodes = dict(nodes)
        self.half = dict(half)
        self.edges = list(edges)
        self.rot = {v: list(items) for v, items in rot.items()}
        self._check_well_formed()

    def _check_well_formed(self):
        assert self.n >= 1
        assert set(self.half.keys()) == set(range(1, self.n + 1))
        for p, v in self.half.items():
            assert v in self.nodes, f"half {p} -> unknown node {v}"
        deg = {v: 0 for v in self.nodes}
        for a, b in self.edges:
            assert a in self.nodes and b in self.nodes
            assert a <= b
            deg[a] += 1
            deg[b] += 1
        for p, v in self.half.items():
            deg[v] += 1
        for v, items in self.rot.items():
            assert len(items) == deg[v], f"rotation size mismatch at {v}"
        assert sorted(self.edges) == self.edges, "edges not in canonical order"

    # -- incidences -------------------------------------------------------

    def edge_ends(self, item):
        kind, x = item
        if kind == 'h':
            return (('B', x), self.half[x])
        a, b = self.edges[x]
        return (a, b)

    def other_end(self, item, v):
        a, b = self.edge_ends(item)
        if a == v:
            return b
        assert b == v
        return a

    def rot_step(self, v, item, direction):
        """Next incidence around v; direction +1 = clockwise, -1 = acw."""
        items = self.rot[v]
        i = items.index(item)
        return items[(i + direction) % len(items)]

    # -- strands ----------------------------------------------------------

    def strands(self):
        """Trace all n strands.

        Returns (perm, strand_of_dart, sources) where a dart is
        (item, node_entered) for travel along item into node_entered, or
        ('exit', label) at the final half-edge. strand_of_dart maps each
        (item, entered_node) dart to the strand's source label.
        """
        perm = {}
        strand_of = {}
        bound = 2 * (len(self.edges) + self.n) * max(self.n, 1) + 4
        for s in range(1, self.n + 1):
            item = ('h', s)
            v = self.half[s]
            steps = 0
            while True:
                steps += 1
                assert steps <= bound, f"strand from {s} does not terminate"
                strand_of[(item, v)] = s
                nxt = self.rot_step(v, item, +1 if self.nodes[v] == 'white' else -1)
                if nxt[0] == 'h':
                    strand_of[(nxt, ('B', nxt[1]))] = s
                    perm[s] = nxt[1]
                    break
                item = nxt
                v = self.other_end(nxt, v)
        return perm, strand_of

    # -- faces ------------------------------------------------------------

    def faces(self):
        """Face-trace the disc, returning (faces, left_face).

        Darts are (tail, head, carrier); carrier is an incidence or
        ('a', p) for the boundary arc from p to p+1 (clockwise). Boundary
        vertices are ('B', p). faces maps face_id -> list of darts; the
        outer face is removed. left_face maps dart -> face_id.
        """
        succ = {}

        def arc(p):
            return ('a', p)

        def nxt_label(p):
            return p % self.n + 1

        def prv_label(p):
            return (p - 2) % self.n + 1

        # full rotation including boundary vertices
        rot = {v: list(items) for v, items in self.rot.items()}
        for p in range(1, self.n + 1):
            rot[('B', p)] = [arc(prv_label(p)), arc(p), ('h', p)]

        def vertex_items(v):
            return rot[v]

        def dart_next(d):
            tail, head, carrier = d
            items = vertex_items(head)
            i = items.index(carrier)
            c2 = items[(i + 1) % len(items)]
            if c2[0] == 'a':
                p = c2[1]
                other = ('B', nxt_label(p)) if head == ('B', p) else ('B', p)
            elif c2[0] == 'h':
                other = ('B', c2[1]) if head != ('B', c2[1]) else self.half[c2[1]]
            else:
                other = self.other_end(c2, head)
            return (head, other, c2)

        all_darts = []
        for v in self.nodes:
            for it in self.rot[v]:
                if it[0] == 'h':
                    all_darts.append((('B', it[1]), v, it))
                    all_darts.append((v, ('B', it[1]), it))
                else:
                    a, b = self.edges[it[1]]
                    if v == a or (a == b):
                        all_darts.append((a, b, it))
                        all_darts.append((b, a, it))
        for p in range(1, self.n + 1):
            all_darts.append((('B', p), ('B', nxt_label(p)), arc(p)))
            all_darts.append((('B', nxt_label(p)), ('B', p), arc(p)))

        left = {}
        faces = {}
        fid = 0
        for d0 in all_darts:
            if d0 in left:
                continue
            cyc = []
            d = d0
            while d not in left:
                left[d] = fid
                cyc.append(d)
                d = dart_next(d)
            assert d == d0, "face trace did not close"
            faces[fid] = cyc
            fid += 1

        # the outer face is to the left of the clockwise arc darts
        outer = left[(('B', 1), ('B', nxt_label(1)), arc(1))]
        del faces[outer]
        return faces, left

    def boundary_face_of_gap(self, left):
        """gap p (between labels p and p+1) -> face id."""
        out = {}
        for p in range(1, self.n + 1):
            q = p % self.n + 1
            out[p] = left[(('B', q), ('B', p), ('a', p))]
        return out

    # -- labels -----------------------------------------------------------

    def leaf_fixed_gap_full(self, s):
        """For pi(s) == s: True if the strand's left side is the whole disc."""
        v = self.half[s]
        return self.nodes[v] == 'white'

    def gap_label(self, p, perm):
        """Source label of the boundary face at gap (p, p+1)."""
        lab = set()
        for i in range(1, self.n + 1):
            t = perm[i]
            if t == i:
                if self.leaf_fixed_gap_full(i):
                    lab.add(i)
                continue
            # clockwise walk i, i+1, ..., t crosses gaps i, i+1, ..., t-1
            j = i
            while j != t:
                if j == p:
                    lab.add(i)
                    break
                j = j % self.n + 1
        return frozenset(lab)

    def face_labels(self):
        """Return (faces, left, src_label, tgt_label, perm, strand_of)."""
        perm, strand_of = self.strands()
        faces, left = self.faces()
        gap_face = self.boundary_face_of_gap(left)

        src = {}
        for p, f in gap_face.items():
            lab = self.gap_label(p, perm)
            if f in src:
                assert src[f] == lab, "boundary face has inconsistent labels"
            else:
                src[f] = lab

        # propagate across (half-)edges: the face left of a dart contains the
        # source of the strand along that dart, the face right does not
        def edge_darts():
            seen = set()
            for f, cyc in faces.items():
                for d in cyc:
                    tail, head, c = d
                    if c[0] == 'a' or c in seen:
                        continue
                    seen.add(c)
                    yield c, (tail, head)

        pending = True
        while pending:
            pending = False
            for c, (tail, head) in edge_darts():
                d = (tail, head, c)
                dr = (head, tail, c)
                if dr not in left:
                    continue
                fL, fR = left[d], left.get(dr)
                if fR is None or (fL not in src and fR not in src):
                    continue
                if fL in src and fR in src:
                    continue
                # strand sources along the two darts of this (half-)edge
                def dart_source(tl, hd, cc):
                    if cc[0] == 'h':
                        if hd == ('B', cc[1]):
                            return strand_of[(cc, hd)]
                        return strand_of[(cc, hd)]
                    return strand_of[(cc, hd)]
                sL = dart_source(tail, head, c)
                sR = dart_source(head, tail, c)
                if fL in src:
                    if fR not in faces and fR is not None:
                        continue  # outer face: skip
                    lab = set(src[fL])
                    assert sL in lab, "left-face label misses strand source"
                    lab.discard(sL)
                    lab.add(sR)
                    src[fR] = frozenset(lab)
                else:
                    lab = set(src[fR])
                    assert sR in lab
                    lab.discard(sR)
                    lab.add(sL)
                    src[fL] = frozenset(lab)
                pending = True

        interior = {f for f in faces if f not in gap_face.values()}
        assert set(src.keys()) >= set(faces.keys()) - {None}, \
            "label propagation did not reach every face"

        # consistency: every dart's left face label contains its strand source
        for f, cyc in faces.items():
            for tail, head, c in cyc:
                if c[0] == 'a':
                    continue
                s = strand_of[(c, head)]
                assert s in src[f], "dart/strand/label inconsistency"

        ks = {len(l) for l in src.values()}
        assert len(ks) == 1, f"label cardinalities differ: {ks}"

        tgt = {f: frozenset(perm[i] for i in lab) for f, lab in src.items()}
        return faces, left, src, tgt, perm, strand_of

    # -- type and quiver ---------------------------------------------------

    def type_by_count(self):
        w = sum(1 for c in self.nodes.values() if c == 'white')
        b = sum(1 for c in self.nodes.values() if c == 'black')
        hb = sum(1 for p, v in self.half.items() if self.nodes[v] == 'black')
        return w - b + hb

    def quiver_arrows(self, faces, left):
        """One arrow per (half-)edge: left face of the white->black dart
        points to the left face of the black->white dart."""
        arrows = []
        for p in range(1, self.n + 1):
            v = self.half[p]
            c = ('h', p)
            din = (('B', p), v, c)
            dout = (v, ('B', p), c)
            if self.nodes[v] == 'black':
                arrows.append((left[din], left[dout]))
            else:
                arrows.append((left[dout], left[din]))
        for i, (a, b) in enumerate(self.edges):
            c = ('e', i)
            dab = (a, b, c)
            dba = (b, a, c)
            if self.nodes[b] == 'black':
                assert self.nodes[a] == 'white', "edge endpoints same colour"
                arrows.append((left[dab], left[dba]))
            else:
                assert self.nodes[a] == 'black', "edge endpoints same colour"
                arrows.append((left[dba], left[dab]))
        return arrows

    # -- matchings ---------------------------------------------------------

    def matchings(self):
        """All perfect matchings as sorted tuples of incidences."""
        items_at = {v: [] for v in self.nodes}
        univ = []
        for p in range(1, self.n + 1):
            it = ('h', p)
            univ.append(it)
            items_at[self.half[p]].append(it)
        for i, (a, b) in enumerate(self.edges):
            it = ('e', i)
            univ.append(it)
            items_at[a].append(it)
            items_at[b].append(it)
        order = sorted(self.nodes)
        out = []

        def ends_in_nodes(it):
            a, b = self.edge_ends(it)
            return [x for x in (a, b) if not (isinstance(x, tuple) and x[0] == 'B')]

        def rec(idx, used, covered):
            if idx == len(order):
                out.append(tuple(sorted(used)))
                return
            v = order[idx]
            if v in covered:
                rec(idx + 1, used, covered)
                return
            for it in items_at[v]:
                ends = ends_in_nodes(it)
                if any(e in covered for e in ends):
                    continue
                rec(idx + 1, used | {it}, covered | set(ends))

        rec(0, frozenset(), frozenset())
        return sorted(set(out))

    def boundary_value(self, mu):
        val = set()
        mu = set(mu)
        for p in range(1, self.n + 1):
            white = self.nodes[self.half[p]] == 'white'
            inside = ('h', p) in mu
            if (white and inside) or (not white and not inside):
                val.add(p)
        return frozenset(val)


# ---------------------------------------------------------------------------
# building graphs from coordinates


def graph_from_coords(n, colors, half, edges, pos, bpos):
    """Build a Plabic from node coordinates.

    pos: node id -> (x, y); bpos: label -> (x, y). Rotations are extracted
    clockwise (descending angle). Boundary labels must run clockwise.
    """
    # check boundary orientation: signed area of the label polygon < 0
    if n >= 3:
        pts = [bpos[p] for p in range(1, n + 1)]
        area2 = sum(pts[i][0] * pts[(i + 1) % n][1]
                    - pts[(i + 1) % n][0] * pts[i][1] for i in range(n))
        assert area2 < 0, "boundary labels must run clockwise"

    edges = sorted(tuple(sorted(e)) for e in edges)
    incident = {v: [] for v in colors}
    for p in range(1, n + 1):
        incident[half[p]].append((('h', p), bpos[p]))
    for i, (a, b) in enumerate(edges):
        incident[a].append((('e', i), pos[b]))
        incident[b].append((('e', i), pos[a]))

    rot = {}
    for v, incs in incident.items():
        x0, y0 = pos[v]
        def ang(entry):
            (_, (x, y)) = entry
            return math.atan2(y - y0, x - x0)
        incs = sorted(incs, key=ang, reverse=True)  # descending = clockwise
        rot[v] = [it for it, _ in incs]
    return Plabic(n, colors, half, edges, rot)


# ---------------------------------------------------------------------------
# serialization


def token(item, g):
    if item[0] == 'h':
        return 'b%d' % item[1]
    i = item[1]
    return None  # resolved by caller with node context


def render(g):
    lines = ['plabic n=%d' % g.n]
    for v in sorted(g.nodes):
        lines.append('node %d %s' % (v, g.nodes[v]))
    for a, b in g.edges:
        lines.append('edge %d %d' % (a, b))
    for p in range(1, g.n + 1):
        lines.append('half %d %d' % (p, g.half[p]))
    for v in sorted(g.nodes):
        toks = []
        for it in g.rot[v]:
            if it[0] == 'h':
                toks.append('b%d' % it[1])
            else:
                toks.append(str(g.other_end(it, v)))
        # canonical rotation: lexicographically least as a string sequence
        best = None
        for s in range(len(toks)):
            cand = toks[s:] + toks[:s]
            if best is None or cand < best:
                best = cand
        lines.append('embed %d: %s' % (v, ' '.join(best if best else [])))
    return '\n'.join(lines) + '\n'


def parse(text):
    n = None
    colors = {}
    half = {}
    edges = []
    rot_tokens = {}
    for raw in text.splitlines():
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == 'plabic':
            assert parts[1].startswith('n=')
            n = int(parts[1][2:])
        elif parts[0] == 'node':
            colors[int(parts[1])] = parts[2]
        elif parts[0] == 'edge':
            a, b = int(parts[1]), int(parts[2])
            edges.append((min(a, b), max(a, b)))
        elif parts[0] == 'half':
            half[int(parts[1])] = int(parts[2])
        elif parts[0] == 'embed':
            v = int(parts[1].rstrip(':'))
            toks = parts[2:]
            if toks and toks[0].endswith(':'):
                toks = toks[1:]
            rot_tokens[v] = toks
        else:
            raise ValueError('bad line: ' + raw)
    edges.sort()

    # map tokens to incidences; parallel edges pair u-order with reversed
    # v-order, anchored at the written list starts
    occ = {}
    for i, (a, b) in enumerate(edges):
        occ.setdefault((a, b), []).append(i)
    rot = {}
    used = {}
    for v, toks in rot_tokens.items():
        items = []
        seen_count = {}
        for t in toks:
            if t.startswith('b'):
                items.append(('h', int(t[1:])))
            else:
                u = int(t)
                key = (min(u, v), max(u, v))
                k = seen_count.get((v, u), 0)
                seen_count[(v, u)] = k + 1
                insts = occ[key]
                if v <= u:
                    items.append(('e', insts[k]))
                else:
                    items.append(('e', insts[len(insts) - 1 - k]))
        rot[v] = items
    return Plabic(n, colors, half, edges, rot)


# ---------------------------------------------------------------------------
# figure geometry


def polar(deg, r=1.0):
    a = math.radians(deg)
    return (r * math.cos(a), r * math.sin(a))


def vadd(p, q):
    return (p[0] + q[0], p[1] + q[1])


def vsub(p, q):
    return (p[0] - q[0], p[1] - q[1])


def vscale(s, p):
    return (s * p[0], s * p[1])


def mirror_y(p):
    return (p[0], -p[1])


def build_3_7(bstart):
    seventh = 360.0 / 7.0
    # boundary positions: index -> (label, angle tweak)
    posdata = {1: (4, 0), 2: (3, 0), 3: (2, 5), 4: (1, 10),
               5: (7, 0), 6: (6, -3), 7: (5, 0)}
    bp = {}          # tikz position index -> coords (pre-mirror)
    label_at = {}
    for idx, (lab, a) in posdata.items():
        bp[idx] = polar(bstart - seventh * idx + a)
        label_at[idx] = lab
    node = {}
    for tid, idx in [(8, 1), (9, 2), (10, 3), (11, 4), (14, 5), (15, 6), (16, 7)]:
        node[tid] = vscale(0.65, bp[idx])
    node[13] = vadd(vsub(node[15], node[16]), node[8])
    node[12] = vadd(vsub(node[14], node[15]), node[13])
    for tid, dx, dy in [(13, -0.03, -0.03), (12, -0.22, 0.0), (14, -0.07, -0.03),
                        (11, 0.05, 0.02), (16, -0.02, 0.02)]:
        node[tid] = vadd(node[tid], (dx, dy))

    # mirror so that boundary labels run clockwise on screen
    node = {t: mirror_y(p) for t, p in node.items()}
    bp = {i: mirror_y(p) for i, p in bp.items()}

    colors_t = {8: 'white', 10: 'white', 12: 'white', 15: 'white',
                9: 'black', 11: 'black', 13: 'black', 14: 'black', 16: 'black'}
    half_by_pos = {1: 8, 2: 9, 3: 10, 4: 11, 5: 14, 6: 15, 7: 16}
    edges_t = [(8, 9), (9, 10), (10, 11), (11, 12), (12, 13), (13, 8),
               (14, 15), (15, 16), (12, 14), (13, 15), (8, 16)]

    remap = {t: i + 1 for i, t in enumerate(sorted(colors_t))}
    colors = {remap[t]: c for t, c in colors_t.items()}
    half = {label_at[idx]: remap[t] for idx, t in half_by_pos.items()}
    edges = [tuple(sorted((remap[a], remap[b]))) for a, b in edges_t]
    pos = {remap[t]: p for t, p in node.items()}
    bpos = {label_at[idx]: p for idx, p in bp.items()}
    return graph_from_coords(7, colors, half, edges, pos, bpos), remap


def build_5_9(bstart):
    ninth = 360.0 / 9.0
    bp = {}  # label -> coords
    for idx, lab in [(9, 1), (8, 2), (7, 3), (6, 4), (5, 5),
                     (4, 6), (3, 7), (2, 8), (1, 9)]:
        bp[lab] = polar(bstart + ninth * idx)
    node = {}
    for tid, lab, dx, dy in [(10, 1, 0, 0), (11, 2, 0, 0), (12, 3, -0.2, -0.05),
                             (13, 4, -0.1, -0.1), (14, 5, 0, 0), (15, 6, 0, 0),
                             (16, 7, 0, 0), (17, 8, 0.1, 0), (18, 9, 0.2, 0.1)]:
        node[tid] = vadd(vscale(0.7, bp[lab]), (dx, dy))
    node[19] = vscale(0.01, bp[6])

    colors_t = {11: 'white', 14: 'white', 16: 'white', 18: 'white', 19: 'white',
                10: 'black', 12: 'black', 13: 'black', 15: 'black', 17: 'black'}
    half_by_label = {1: 10, 2: 11, 3: 12, 4: 13, 5: 14, 6: 15, 7: 16, 8: 17, 9: 18}
    edges_t = [(10, 18), (10, 11), (11, 12), (12, 18), (13, 14), (14, 15),
               (15, 16), (16, 17), (17, 19), (19, 15), (19, 13)]

    remap = {t: i + 1 for i, t in enumerate(sorted(colors_t))}
    colors = {remap[t]: c for t, c in colors_t.items()}
    half = {lab: remap[t] for lab, t in half_by_label.items()}
    edges = [tuple(sorted((remap[a], remap[b]))) for a, b in edges_t]
    pos = {remap[t]: p for t, p in node.items()}
    return graph_from_coords(9, colors, half, edges, pos, bp), remap


def build_triangulation_2_n(n):
    """Fan triangulation graph: white at each corner, black per triangle."""
    bpos = {p: polar(90 - 360.0 * (p - 1) / n) for p in range(1, n + 1)}
    colors = {}
    pos = {}
    half = {}
    for p in range(1, n + 1):
        colors[p] = 'white'
        pos[p] = vscale(0.72, bpos[p])
        half[p] = p
    edges = []
    for t in range(n - 2):  # triangle (1, t+2, t+3)
        b = n + 1 + t
        colors[b] = 'black'
        c1, c2, c3 = 1, t + 2, t + 3
        cx = [(pos[c1][0] + pos[c2][0] + pos[c3][0]) / 3.0,
              (pos[c1][1] + pos[c2][1] + pos[c3][1]) / 3.0]
        pos[b] = (cx[0], cx[1])
        edges += [(c1, b), (c2, b), (c3, b)]
    return graph_from_coords(n, colors, half, edges, pos, bpos)


def build_single_edge():
    colors = {1: 'white', 2: 'black'}
    half = {1: 1, 2: 2}
    edges = [(1, 2)]
    pos = {1: (0.0, 0.3), 2: (0.0, -0.3)}
    bpos = {1: (0.0, 1.0), 2: (0.0, -1.0)}
    return graph_from_coords(2, colors, half, edges, pos, bpos)


def restrict(g, labels):
    """Component of g on the given boundary labels, relabelled 1..m
    preserving clockwise cyclic order starting at min(labels)."""
    labels_sorted = sorted(labels)
    relab = {lab: i + 1 for i, lab in enumerate(labels_sorted)}
    keep_nodes = set()
    # nodes reachable from the chosen half-edges
    stack = [g.half[p] for p in labels]
    while stack:
        v = stack.pop()
        if v in keep_nodes:
            continue
        keep_nodes.add(v)
        for it in g.rot[v]:
            if it[0] == 'e':
                stack.append(g.other_end(it, v))
    node_map = {v: i + 1 for i, v in enumerate(sorted(keep_nodes))}
    colors = {node_map[v]: g.nodes[v] for v in keep_nodes}
    half = {relab[p]: node_map[g.half[p]] for p in labels}
    old_edges = [(i, e) for i, e in enumerate(g.edges)
                 if e[0] in keep_nodes and e[1] in keep_nodes]
    new_edges = sorted(tuple(sorted((node_map[a], node_map[b])))
                       for _, (a, b) in old_edges)
    # rebuild rotations by translating tokens
    edge_index = {}
    occ = {}
    for i, e in enumerate(new_edges):
        occ.setdefault(e, []).append(i)
    counters = {}
    rot = {}
    for v in keep_nodes:
        items = []
        for it in g.rot[v]:
            if it[0] == 'h':
                items.append(('h', relab[it[1]]))
            else:
                a, b = g.edges[it[1]]
                key = tuple(sorted((node_map[a], node_map[b])))
                k = counters.get((v, key), 0)
                counters[(v, key)] = k + 1
                items.append(('e', occ[key][k]))
        rot[node_map[v]] = items
    return Plabic(len(labels), colors, half, new_edges, rot)


# ---------------------------------------------------------------------------
# expected data


def fs(*xs):
    return frozenset(xs)


EXPECT_3_7 = {
    'perm': {1: 5, 2: 4, 3: 1, 4: 6, 5: 7, 6: 2, 7: 3},
    # boundary gap (p, p+1) -> source label
    'gap_src': {4: fs(1, 3, 4), 3: fs(1, 2, 3), 2: fs(1, 2, 7), 1: fs(1, 6, 7),
                7: fs(3, 6, 7), 6: fs(3, 5, 6), 5: fs(3, 4, 5)},
    'interior_src': {fs(1, 3, 5), fs(1, 3, 7), fs(3, 5, 7)},
    'src_to_tgt': {
        fs(1, 3, 4): fs(1, 5, 6), fs(1, 2, 3): fs(1, 4, 5),
        fs(1, 2, 7): fs(3, 4, 5), fs(1, 6, 7): fs(2, 3, 5),
        fs(3, 6, 7): fs(1, 2, 3), fs(3, 5, 6): fs(1, 2, 7),
        fs(3, 4, 5): fs(1, 6, 7), fs(1, 3, 5): fs(1, 5, 7),
        fs(1, 3, 7): fs(1, 3, 5), fs(3, 5, 7): fs(1, 3, 7)},
    'k': 3,
    # quiver arrows as (tail src label, head src label)
    'arrows': [
        (fs(1, 3, 4), fs(1, 3, 5)), (fs(1, 3, 5), fs(3, 4, 5)),
        (fs(1, 3, 7), fs(1, 2, 3)), (fs(1, 3, 5), fs(1, 3, 7)),
        (fs(3, 5, 7), fs(1, 3, 5)), (fs(1, 3, 7), fs(3, 5, 7)),
        (fs(3, 5, 6), fs(3, 5, 7)), (fs(3, 5, 7), fs(3, 6, 7)),
        (fs(3, 6, 7), fs(1, 3, 7)), (fs(1, 2, 7), fs(1, 3, 7)),
        (fs(1, 3, 7), fs(1, 6, 7)),
        (fs(1, 2, 3), fs(1, 3, 4)), (fs(1, 2, 3), fs(1, 2, 7)),
        (fs(1, 6, 7), fs(1, 2, 7)), (fs(1, 6, 7), fs(3, 6, 7)),
        (fs(3, 6, 7), fs(3, 5, 6)), (fs(3, 4, 5), fs(3, 5, 6)),
        (fs(3, 4, 5), fs(1, 3, 4))],
    'nonpositroid': [fs(2, 3, 4), fs(4, 5, 6), fs(4, 5, 7), fs(4, 6, 7), fs(5, 6, 7)],
    # the strand entering at 4 walks: half@4 -> (8,16) -> (15,16) -> half@6,
    # in tikz ids; used to pin the turning convention
}

EXPECT_5_9 = {
    'perm': {1: 3, 2: 9, 3: 1, 9: 2, 4: 7, 5: 8, 6: 4, 7: 5, 8: 6},
    'gap_src': {1: fs(1, 6, 7, 8, 9), 2: fs(1, 2, 6, 7, 8),
                4: fs(2, 3, 4, 7, 8), 5: fs(2, 3, 4, 5, 8),
                6: fs(2, 3, 4, 5, 6), 7: fs(2, 3, 5, 6, 7),
                9: fs(3, 6, 7, 8, 9),
                3: fs(2, 3, 6, 7, 8), 8: fs(2, 3, 6, 7, 8)},
    'interior_src': {fs(1, 3, 6, 7, 8), fs(2, 3, 4, 6, 8), fs(2, 3, 5, 6, 8)},
    'k': 5,
    'arrows': [
        (fs(3, 6, 7, 8, 9), fs(1, 3, 6, 7, 8)),
        (fs(1, 3, 6, 7, 8), fs(1, 6, 7, 8, 9)),
        (fs(1, 2, 6, 7, 8), fs(1, 3, 6, 7, 8)),
        (fs(1, 3, 6, 7, 8), fs(2, 3, 6, 7, 8)),
        (fs(2, 3, 4, 6, 8), fs(2, 3, 5, 6, 8)),
        (fs(2, 3, 5, 6, 8), fs(2, 3, 6, 7, 8)),
        (fs(2, 3, 5, 6, 8), fs(2, 3, 4, 5, 6)),
        (fs(2, 3, 5, 6, 7), fs(2, 3, 5, 6, 8)),
        (fs(2, 3, 4, 6, 8), fs(2, 3, 4, 7, 8)),
        (fs(2, 3, 4, 5, 8), fs(2, 3, 4, 6, 8)),
        (fs(2, 3, 6, 7, 8), fs(2, 3, 4, 6, 8)),
        (fs(1, 6, 7, 8, 9), fs(3, 6, 7, 8, 9)),
        (fs(1, 6, 7, 8, 9), fs(1, 2, 6, 7, 8)),
        (fs(2, 3, 4, 7, 8), fs(2, 3, 4, 5, 8)),
        (fs(2, 3, 4, 5, 6), fs(2, 3, 4, 5, 8)),
        (fs(2, 3, 4, 5, 6), fs(2, 3, 5, 6, 7)),
        (fs(2, 3, 6, 7, 8), fs(3, 6, 7, 8, 9)),
        (fs(2, 3, 6, 7, 8), fs(1, 2, 6, 7, 8)),
        (fs(2, 3, 6, 7, 8), fs(2, 3, 5, 6, 7)),
        (fs(2, 3, 4, 7, 8), fs(2, 3, 6, 7, 8))],
}


# ---------------------------------------------------------------------------
# checking


def check_graph(g, expect=None, uniform_k=None, name=''):
    faces, left, src, tgt, perm, strand_of = g.face_labels()
    gap_face = g.boundary_face_of_gap(left)
    boundary_faces = set(gap_face.values())
    k = len(next(iter(src.values())))
    assert k == g.type_by_count(), f"{name}: type mismatch {k} vs count formula"

    if uniform_k is not None:
        n = g.n
        assert k == uniform_k, f"{name}: expected k={uniform_k}, got {k}"
        for i in range(1, n + 1):
            assert perm[i] == (i + k - 1) % n + 1, f"{name}: not uniform at {i}"
        intervals = {frozenset(((p + j - 1) % n) + 1 for j in range(k))
                     for p in range(1, n + 1)}
        neck = {src[f] for f in boundary_faces}
        assert neck == intervals, f"{name}: necklace is not the cyclic intervals"
        # uniform positroid: every k-subset is a boundary value
        vals = {g.boundary_value(mu) for mu in g.matchings()}
        assert vals == {frozenset(c) for c in combinations(range(1, n + 1), k)}, \
            f"{name}: positroid is not all {k}-subsets"

    if expect is not None:
        assert perm == expect['perm'], f"{name}: trip permutation mismatch: {perm}"
        for p, lab in expect['gap_src'].items():
            assert src[gap_face[p]] == lab, \
                f"{name}: gap {p} label {sorted(src[gap_face[p]])} != {sorted(lab)}"
        interior = {src[f] for f in faces if f not in boundary_faces}
        assert interior == expect['interior_src'], f"{name}: interior labels differ"
        if 'src_to_tgt' in expect:
            for f in faces:
                assert tgt[f] == expect['src_to_tgt'][src[f]], \
                    f"{name}: target label mismatch on {sorted(src[f])}"
        arrows = g.quiver_arrows(faces, left)
        got = sorted((tuple(sorted(src[a])), tuple(sorted(src[b])))
                     for a, b in arrows)
        want = sorted((tuple(sorted(a)), tuple(sorted(b)))
                      for a, b in expect['arrows'])
        assert got == want, f"{name}: quiver arrows differ\n got {got}\nwant {want}"
        if 'nonpositroid' in expect:
            vals = {g.boundary_value(mu) for mu in g.matchings()}
            allk = {frozenset(c) for c in combinations(range(1, g.n + 1), k)}
            assert vals == allk - set(expect['nonpositroid']), \
                f"{name}: positroid mismatch"
    return faces, left, src, tgt, perm


def roundtrip(g, name):
    text = render(g)
    g2 = parse(text)
    assert render(g2) == text, f"{name}: canonical round-trip failed"
    return text


def main():
    outdir = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                          os.pardir, 'data')
    outdir = os.path.normpath(outdir)
    os.makedirs(outdir, exist_ok=True)

    # the hand-drawn figures use absolute coordinate tweaks, which deform the
    # picture badly at a few extreme base rotations; require a large majority
    # of rotations to pass every check with identical canonical output
    def sweep(builder, expect, name):
        good = {}
        for bstart in range(0, 360, 15):
            try:
                g, _ = builder(float(bstart))
                check_graph(g, expect=expect, name=f'{name}@{bstart}')
            except AssertionError:
                continue
            good[bstart] = (g, render(g))
        assert len(good) >= 18, f"{name}: only {len(good)} rotations pass"
        texts = {t for _, t in good.values()}
        assert len(texts) == 1, f"{name}: passing rotations disagree"
        return next(iter(good.values()))[0]

    g37 = sweep(build_3_7, EXPECT_3_7, 'g37')
    g59 = sweep(build_5_9, EXPECT_5_9, 'g59')

    u24 = restrict(g59, [1, 2, 3, 9])
    check_graph(u24, uniform_k=2, name='u24')
    u35 = restrict(g59, [4, 5, 6, 7, 8])
    check_graph(u35, uniform_k=3, name='u35')
    u25 = build_triangulation_2_n(5)
    check_graph(u25, uniform_k=2, name='u25')
    se = build_single_edge()
    check_graph(se, uniform_k=1, name='single_edge')

    outputs = {
        'example_3_7.plabic': g37,
        'disconnected_5_9.plabic': g59,
        'uniform_2_4.plabic': u24,
        'uniform_2_5.plabic': u25,
        'uniform_3_5.plabic': u35,
        'single_edge.plabic': se,
    }
    for fname, g in outputs.items():
        text = roundtrip(g, fname)
        with open(os.path.join(outdir, fname), 'w') as fh:
            fh.write(text)
        print('wrote %s (%d matchings)' % (fname, len(g.matchings())))

    # derived golden values for the test suite
    print('golden matching counts:')
    for fname, g in sorted(outputs.items()):
        print('  %-24s %d' % (fname, len(g.matchings())))
    print('all corpus checks passed')


if __name__ == '__main__':
    main()

"""Colorings with a planted exchange configuration, for exercising the lift."""

import random

from eqforest.constructive import Configuration, WorkingColoring
from eqforest.graph import Graph


def planted_configuration(rng: random.Random):
    """A coloring with all classes of size t and a planted exchange triple.

    ``z`` in the first class has two non-adjacent neighbors ``y1, y2`` whose
    only other neighbor in the first class is some ``a_i != z``; no other
    vertex outside the first class has exactly two neighbors inside it.
    """
    m, t = rng.randint(3, 5), rng.randint(3, 6)
    n = m * t
    labels = list(range(n))
    rng.shuffle(labels)
    classes = [labels[i * t:(i + 1) * t] for i in range(m)]
    x, z, *others = classes[0]
    v1 = [z] + others
    rest = [v for c in classes[1:] for v in c]
    y1, y2 = rng.sample(rest, 2)
    edges = set()

    def add(u, v):
        edges.add((min(u, v), max(u, v)))

    for i in range(1, len(v1)):
        if rng.random() < 0.8:
            add(v1[i], v1[rng.randrange(i)])
    x1 = rng.choice(v1)
    add(x, x1)
    for v in v1:
        if v != x1 and rng.random() < 0.3:
            add(x, v)
    for cls in classes[1:]:
        for i in range(1, t):
            if rng.random() < 0.6:
                add(cls[i], cls[rng.randrange(i)])
    for u in rest:
        for v in rest:
            if u < v and {u, v} != {y1, y2} and rng.random() < 0.12:
                add(u, v)
    edges.discard((min(y1, y2), max(y1, y2)))
    for r in rest:
        if r in (y1, y2):
            continue
        k = rng.choice([0, 0, 1, 1, 3]) if len(others) >= 3 else rng.choice([0, 1])
        for a in rng.sample(others, k):
            add(r, a)
    add(y1, z)
    add(y2, z)
    add(y1, rng.choice(others))
    add(y2, rng.choice(others))

    graph = Graph(n, edges)
    assignment = [0] * n
    for c, members in enumerate(classes, start=1):
        for v in members:
            assignment[v] = c
    wc = WorkingColoring.from_assignment(graph, m, assignment)
    return Configuration(graph, m, x, x1, wc)


def scan_triples(cfg):
    """Every exchange triple, straight from the definition."""
    g = cfg.graph
    v1 = cfg.v1_prime
    outside = [v for v in g.vertices() if v not in v1 and v != cfg.x]
    a1 = {v for v in outside if len(g.neighbors(v) & v1) == 2}
    return [(z, y1, y2) for z in sorted(v1) for y1 in sorted(a1) for y2 in sorted(a1)
            if y1 < y2 and g.has_edge(z, y1) and g.has_edge(z, y2) and not g.has_edge(y1, y2)]

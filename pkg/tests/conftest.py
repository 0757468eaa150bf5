import os
import random

import pytest

from colgraph import KINDS, GraphBuilder


def env_int(name, default):
    return int(os.environ.get(name, default))


@pytest.fixture
def rng():
    return random.Random(20240614)


def random_graph(r: random.Random, kind, n, m_target, weighted=False, labeled=False):
    """Random instance of any kind built through the builder; edges drawn uniformly."""
    kind = KINDS[kind] if isinstance(kind, str) else kind
    b = GraphBuilder(kind).num_vertices(n)
    seen = set()
    for _ in range(m_target):
        if n == 0:
            break
        v, u = r.randrange(n), r.randrange(n)
        if v == u and not kind.allows_self_loops:
            continue
        key = (v, u) if kind.directed or v <= u else (u, v)
        if not kind.allows_multiple_edges:
            if key in seen:
                continue
            seen.add(key)
        w = r.choice([0.5, 1.25, 2.0, r.uniform(-5, 5)]) if weighted else None
        label = f"e{r.randrange(5)}" if labeled else None
        b.add_edge(v, u, weight=w, label=label)
    return b.build()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

"""Brute-force forcing invariants for every graph of the connected corpus,
written as a frozen table the Rust tests compare against. Independent of the
Rust code: plain sets and networkx components. Run from the repository root:

    python3 scripts/oracle_table.py
"""
import itertools

import networkx as nx

DATA = "crates/core/tests/data"


def step(g, blue, rule):
    white = set(g) - blue
    scopes = [white] if rule == "std" else [set(c) for c in nx.connected_components(g.subgraph(white))]
    out = set()
    for scope in scopes:
        for u in blue:
            wn = [w for w in g[u] if w in scope]
            if len(wn) == 1:
                out.add(wn[0])
    return out


def pt(g, b, rule):
    blue, t = set(b), 0
    while True:
        s = step(g, blue, rule)
        if not s:
            break
        blue |= s
        t += 1
    return t if len(blue) == len(g) else None


def analyze(g, rule):
    forcing = {}
    for r in range(len(g) + 1):
        for s in itertools.combinations(g, r):
            forcing[frozenset(s)] = pt(g, s, rule)
    minimal = [s for s, t in forcing.items() if t is not None and all(forcing[s - {v}] is None for v in s)]
    z = min(len(s) for s in minimal)
    return dict(
        z=z,
        zbar=max(len(s) for s in minimal),
        pt=sorted({forcing[s] for s in minimal if len(s) == z}),
        ept=sorted({forcing[s] for s in minimal}),
        th=min(len(s) + t for s, t in forcing.items() if t is not None),
    )


def main():
    join = lambda v: ",".join(map(str, v))
    rows = ["# graph6\tZ\tupperZ\tPT\tEPT\tth\tZ+\tupperZ+\tPT+\tEPT+"]
    for line in open(f"{DATA}/connected_le7.g6"):
        s = line.strip()
        g = nx.from_graph6_bytes(s.encode())
        a, b = analyze(g, "std"), analyze(g, "psd")
        rows.append("\t".join([s, str(a["z"]), str(a["zbar"]), join(a["pt"]), join(a["ept"]), str(a["th"]),
                               str(b["z"]), str(b["zbar"]), join(b["pt"]), join(b["ept"])]))
    with open(f"{DATA}/oracle_connected_le7.tsv", "w") as f:
        f.write("\n".join(rows) + "\n")


if __name__ == "__main__":
    main()

"""Writes the small-graph graph6 corpora used by the test suite.

Source: the networkx graph atlas (all 1253 graphs on 0..7 vertices, one per
isomorphism class). Run from the repository root:

    python3 scripts/make_corpus.py
"""
import networkx as nx
from networkx.generators.atlas import graph_atlas_g

DATA = "crates/core/tests/data"


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main():
    graphs = [g for g in graph_atlas_g() if g.number_of_nodes() > 0]
    with open(f"{DATA}/graphs_le7.g6", "w") as f:
        for g in graphs:
            f.write(g6(g) + "\n")
    with open(f"{DATA}/connected_le7.g6", "w") as f:
        for g in graphs:
            if nx.is_connected(g):
                f.write(g6(g) + "\n")


if __name__ == "__main__":
    main()

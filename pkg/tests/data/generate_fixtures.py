"""Regenerate the connected-graph corpora used by the census tests.

Graphs come from the networkx graph atlas (all graphs up to 7 vertices, one
per isomorphism class) and are written with networkx's own graph6 encoder,
so the committed files are independent of the package under test.

    python tests/data/generate_fixtures.py
"""

from pathlib import Path

import networkx as nx

HERE = Path(__file__).parent


def main():
    by_order = {}
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if 2 <= n <= 6 and nx.is_connected(g):
            line = nx.to_graph6_bytes(g, header=False).decode().strip()
            by_order.setdefault(n, []).append(line)
    for n, lines in sorted(by_order.items()):
        (HERE / f"connected{n}.g6").write_text("\n".join(lines) + "\n")
        print(n, len(lines))


if __name__ == "__main__":
    main()

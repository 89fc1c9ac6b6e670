#!/usr/bin/env python3
# Copyright 2026 The lexdom Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the graph6 corpora under tests/data.

Graphs up to 7 vertices come from the networkx graph atlas. Order 8 is
produced by one-vertex extension of the order-7 atlas graphs, deduplicated
with nauty certificates (pynauty). Trees come from networkx.
"""

import argparse
import pathlib

import networkx as nx


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def atlas(n):
    return [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n]


def order8():
    import pynauty

    seen = {}
    for base in atlas(7):
        for mask in range(1 << 7):
            g = nx.Graph(base)
            g.add_node(7)
            g.add_edges_from((7, u) for u in range(7) if mask >> u & 1)
            adj = {v: list(g.neighbors(v)) for v in g}
            cert = pynauty.certificate(pynauty.Graph(8, adjacency_dict=adj))
            seen.setdefault(cert, g)
    return sorted(seen.values(), key=lambda g: (g.number_of_edges(), g6(g)))


def write(path, graphs):
    path.write_text("".join(g6(g) + "\n" for g in graphs))
    print(f"{path}: {len(graphs)} graphs")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).parent.parent / "tests" / "data"))
    ap.add_argument("--skip-order8", action="store_true")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    write(out / "connected_2_5.g6",
          [g for n in range(2, 6) for g in atlas(n) if nx.is_connected(g)])
    write(out / "all_2_4.g6", [g for n in range(2, 5) for g in atlas(n)])
    write(out / "all_1_7.g6", [g for n in range(1, 8) for g in atlas(n)])
    write(out / "trees_1_9.g6",
          [nx.empty_graph(1)]
          + [t for n in range(2, 10) for t in nx.nonisomorphic_trees(n)])
    if not args.skip_order8:
        write(out / "all_8.g6", order8())


if __name__ == "__main__":
    main()

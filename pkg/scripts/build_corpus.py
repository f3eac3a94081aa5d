#!/usr/bin/env python3
"""
Corpus builder for corpus sweeps.
Writes every non-isomorphic graph on n <= 7 vertices, one graph6 per line,
taken from the networkx graph atlas.
"""

import argparse
import os
import sys

import networkx as nx

# Add src directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from shared.validators import COMMENT_PREFIX

# The atlas holds every graph on 0..7 vertices
ATLAS_MAX_VERTICES = 7


def atlas_graphs(n, triangle_free=False):
    """Yield the atlas graphs on n vertices, optionally only triangle-free ones."""
    for graph in nx.graph_atlas_g():
        if graph.number_of_nodes() != n:
            continue
        if triangle_free and any(nx.triangles(graph).values()):
            continue
        yield graph


def to_graph6(graph):
    """graph6 line without the >>graph6<< header."""
    return nx.to_graph6_bytes(graph, header=False).decode('ascii').strip()


def build_corpus(n, triangle_free=False):
    """Corpus lines for n vertices."""
    if not 0 <= n <= ATLAS_MAX_VERTICES:
        raise ValueError(f"The graph atlas covers n <= {ATLAS_MAX_VERTICES} (got n={n})")
    return [to_graph6(graph) for graph in atlas_graphs(n, triangle_free)]


def main():
    """Main function."""
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument('-n', type=int, required=True, help='vertex count (0..7)')
    parser.add_argument('--triangle-free', action='store_true', help='keep triangle-free graphs only')
    parser.add_argument('--output', help='corpus file (default: stdout)')
    args = parser.parse_args()

    lines = build_corpus(args.n, args.triangle_free)
    kind = 'triangle-free graphs' if args.triangle_free else 'graphs'
    header = f"{COMMENT_PREFIX} {len(lines)} non-isomorphic {kind} on {args.n} vertices"

    content = '\n'.join([header] + lines) + '\n'
    if args.output:
        with open(args.output, 'w', encoding='utf-8') as handle:
            handle.write(content)
        print(f"Wrote {len(lines)} {kind} to {args.output}")
    else:
        sys.stdout.write(content)


if __name__ == '__main__':
    main()

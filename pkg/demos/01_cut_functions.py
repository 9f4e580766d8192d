#!/usr/bin/env python3
"""Cut functions on small graphs: cut matrices, cut-rank, boolean cuts.

A cut (X, V \\ X) of a graph induces the bipartite adjacency submatrix
A[X, V \\ X].  Its GF(2) rank is the cut-rank; the log2 count of distinct
neighborhood unions across the cut is the boolean cut value.  Both are
symmetric under complementation, which this script shows directly.
"""

from widthlab import (
    Cut,
    complete_graph,
    cut_bool,
    cut_matrix,
    cut_rank,
    cycle_graph,
    format_matrix_text,
    path_graph,
)


def show(graph, name, vertices):
    cut = Cut.from_vertices(graph.n, vertices)
    matrix = cut_matrix(graph, cut)
    print(f"{name}, X = {cut.members}:")
    print(format_matrix_text(matrix), end="")
    print(f"  cut_rank = {cut_rank(graph, cut)}")
    print(f"  cut_bool = {cut_bool(graph, cut):.6f}")
    comp = cut.complement()
    print(f"  complement side gives rank {cut_rank(graph, comp)}, "
          f"bool {cut_bool(graph, comp):.6f}  (symmetry)")
    print()


def main():
    show(path_graph(4), "path 0-1-2-3", [0, 1])
    show(cycle_graph(5), "5-cycle", [0, 1])
    show(cycle_graph(5), "5-cycle, alternating side", [0, 2])
    show(complete_graph(5), "K5 (every cut has rank 1)", [1, 3])

    # Singleton cuts of the cycle have rank 1, but every 2-vertex side
    # already reaches rank 2, which is why rankwidth(C5) = 2.
    c5 = cycle_graph(5)
    for vertices in ([0], [0, 1], [0, 2]):
        cut = Cut.from_vertices(5, vertices)
        print(f"C5 cut {vertices}: rank {cut_rank(c5, cut)}")


if __name__ == "__main__":
    main()

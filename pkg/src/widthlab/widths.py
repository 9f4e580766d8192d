"""Width engine: decomposition trees and exact f-width for symmetric cut functions.

A decomposition tree is an unrooted tree whose internal nodes all have degree
3 and whose leaves are in bijection with the graph's vertices.  Every tree
edge induces a bipartition of the vertex set (the leaf sets of the two
components); the width of the tree under a cut function f is the maximum of f
over those bipartitions, and the f-width of the graph is the minimum width
over all trees.

The exact optimum is computed by dynamic programming over vertex subsets:

    c({v}) = 0
    c(S)   = min over bipartitions S = S1 (+) S2 of
             max(f(S1), f(S2), c(S1), c(S2))

where f(Si) is ALWAYS evaluated against the global complement V \\ Si, not
inside S.  This matches the edge semantics: the tree edge above the subtree
with leaf set Si separates Si from everything else in V.  Evaluating f
within S is the classic mistake and gives wrong widths; see the worked
example in tests/test_widths.py.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Optional

from .boolspace import _cut_bool_bits, cut_bool
from .errors import CapExceeded, ContractError, ParseError, StructureError
from .graphs import Cut, Graph, _cut_rank_bits, cut_rank
from .rng import SplitMix64, mix_seed

DEFAULT_EXACT_CAP = 16
BRUTE_FORCE_CAP = 8
BALANCED_CAP = 22

_SYMMETRY_TOL = 1e-9


@dataclass(frozen=True)
class CutFunction:
    """A symmetric set function f on vertex subsets, with a display name.

    `evaluate` maps (Graph, Cut) to a real value; `bits_evaluate`, when
    given, is a faster path taking the cut as a packed int.  The engine
    checks the symmetry contract f(X) = f(V \\ X) and raises ContractError
    on violation.
    """

    name: str
    evaluate: Callable[[Graph, Cut], float]
    bits_evaluate: Optional[Callable[[Graph, int], float]] = None


CUT_RANK_FUNCTION = CutFunction(
    name="rank",
    evaluate=lambda graph, cut: float(cut_rank(graph, cut)),
    bits_evaluate=lambda graph, bits: float(_cut_rank_bits(graph, bits)),
)

CUT_BOOL_FUNCTION = CutFunction(
    name="bool",
    evaluate=cut_bool,
    bits_evaluate=_cut_bool_bits,
)


class DecompositionTree:
    """Unrooted tree with degree-3 internal nodes and labeled leaves."""

    __slots__ = ("node_count", "edges", "leaf_map", "_adj")

    def __init__(
        self,
        node_count: int,
        edges: Iterable[tuple[int, int]],
        leaf_map: dict[int, int],
    ):
        canon = []
        for a, b in edges:
            if a == b:
                raise StructureError(f"self-loop at tree node {a}")
            if not (0 <= a < node_count and 0 <= b < node_count):
                raise StructureError(f"edge ({a},{b}) out of node range")
            canon.append((a, b) if a < b else (b, a))
        canon.sort()
        if len(set(canon)) != len(canon):
            raise StructureError("duplicate tree edge")
        if node_count > 0 and len(canon) != node_count - 1:
            raise StructureError(
                f"{node_count} nodes need {node_count - 1} edges, got {len(canon)}"
            )
        if node_count == 0 and canon:
            raise StructureError("edges on an empty tree")

        adj: list[list[int]] = [[] for _ in range(node_count)]
        for a, b in canon:
            adj[a].append(b)
            adj[b].append(a)

        if node_count > 0:
            seen = {0}
            stack = [0]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) != node_count:
                raise StructureError("tree is not connected")

        for node in leaf_map:
            if not 0 <= node < node_count:
                raise StructureError(f"leaf node {node} out of range")
        if len(set(leaf_map.values())) != len(leaf_map):
            raise StructureError("leaf map is not injective")
        if set(leaf_map.values()) != set(range(len(leaf_map))):
            raise StructureError("leaf labels must be exactly 0..n-1")

        for u in range(node_count):
            deg = len(adj[u])
            if u in leaf_map:
                want = 0 if node_count == 1 else 1
                if deg != want:
                    raise StructureError(f"leaf node {u} has degree {deg}")
            elif deg != 3:
                raise StructureError(f"internal node {u} has degree {deg}, not 3")

        self.node_count = node_count
        self.edges = tuple(canon)
        self.leaf_map = dict(leaf_map)
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    def validate_for(self, n: int) -> None:
        """Check the leaf bijection against a graph on n vertices."""
        if len(self.leaf_map) != n:
            raise StructureError(
                f"tree has {len(self.leaf_map)} leaves for a graph on {n} vertices"
            )

    @property
    def n_leaves(self) -> int:
        return len(self.leaf_map)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self._adj[u]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DecompositionTree):
            return NotImplemented
        return emit_tree(self) == emit_tree(other)

    def __repr__(self) -> str:
        return f"DecompositionTree(leaves={self.n_leaves}, nodes={self.node_count})"


@dataclass(frozen=True)
class WidthResult:
    """An f-width value with the tree and cut that realize it."""

    value: float
    witness_tree: DecompositionTree
    witness_cut: Cut


def tree_cuts(tree: DecompositionTree) -> list[Cut]:
    """Bipartitions induced by the tree's edges.

    Each cut is reported as the side NOT containing vertex 0, so the result
    does not depend on internal node numbering.  Order follows the canonical
    sorted edge list.
    """
    n = tree.n_leaves
    if n == 0 or tree.node_count <= 1:
        return []
    root = next(node for node, v in tree.leaf_map.items() if v == 0)
    parent = {root: -1}
    order = [root]
    stack = [root]
    while stack:
        u = stack.pop()
        for w in tree.neighbors(u):
            if w != parent[u]:
                parent[w] = u
                order.append(w)
                stack.append(w)
    mask = [0] * tree.node_count
    for u in reversed(order):
        if u in tree.leaf_map:
            mask[u] |= 1 << tree.leaf_map[u]
        if parent[u] != -1:
            mask[parent[u]] |= mask[u]
    cuts = []
    for a, b in tree.edges:
        child = b if parent.get(b) == a else a
        cuts.append(Cut(mask[child], n))
    return cuts


def _bits_eval(graph: Graph, f: CutFunction) -> Callable[[int], float]:
    if f.bits_evaluate is not None:
        be = f.bits_evaluate
        return lambda bits: be(graph, bits)
    n = graph.n
    ev = f.evaluate
    return lambda bits: ev(graph, Cut(bits, n))


def _spot_check_symmetry(graph: Graph, f: CutFunction, ev: Callable[[int], float]) -> None:
    """Sampled symmetry audit run when a cut function enters an engine."""
    n = graph.n
    if n == 0:
        return
    full = (1 << n) - 1
    rng = SplitMix64(mix_seed(0x5F, n))
    seensets = [0, full] + [rng.next_bits(n) for _ in range(min(32, 1 << n))]
    for bits in seensets:
        a = ev(bits)
        b = ev(full ^ bits)
        if not math.isclose(a, b, rel_tol=_SYMMETRY_TOL, abs_tol=_SYMMETRY_TOL):
            raise ContractError(
                f"cut function {f.name!r} is not symmetric: "
                f"f({bits:#x})={a} but f(complement)={b}"
            )
    if abs(ev(0)) > _SYMMETRY_TOL:
        raise ContractError(f"cut function {f.name!r} must vanish on the empty side")


def tree_width_under(graph: Graph, tree: DecompositionTree, f: CutFunction) -> WidthResult:
    """Width of one decomposition tree: max of f over its edge-induced cuts."""
    tree.validate_for(graph.n)
    if graph.n <= 1:
        return WidthResult(0.0, tree, Cut(0, graph.n))
    ev = _bits_eval(graph, f)
    _spot_check_symmetry(graph, f, ev)
    best = -math.inf
    best_cut = None
    for cut in tree_cuts(tree):
        v = ev(cut.bits)
        if v > best:
            best = v
            best_cut = cut
    return WidthResult(best, tree, best_cut)


def _trivial_tree(n: int) -> DecompositionTree:
    if n == 0:
        return DecompositionTree(0, [], {})
    if n == 1:
        return DecompositionTree(1, [], {0: 0})
    raise AssertionError("only for n <= 1")


def exact_f_width(
    graph: Graph, f: CutFunction, n_cap: int = DEFAULT_EXACT_CAP
) -> WidthResult:
    """Exact minimum f-width over all decomposition trees, with witnesses.

    Subset dynamic programming, O(3^n) split enumerations with f memoized in
    a 2^n table; f is evaluated against the global complement throughout.
    Ties between optimal splits resolve to the numerically smallest side, so
    the witness tree is deterministic.
    """
    n = graph.n
    if n > n_cap:
        raise CapExceeded(f"exact width needs n <= {n_cap}, got n = {n}")
    if n <= 1:
        return WidthResult(0.0, _trivial_tree(n), Cut(0, n))

    ev = _bits_eval(graph, f)
    size = 1 << n
    full = size - 1
    fval = [0.0] * size
    for s in range(1, full):
        fval[s] = ev(s)
    for s in range(size // 2):
        a, b = fval[s], fval[full ^ s]
        if not math.isclose(a, b, rel_tol=_SYMMETRY_TOL, abs_tol=_SYMMETRY_TOL):
            raise ContractError(
                f"cut function {f.name!r} is not symmetric at subset {s:#x}: {a} vs {b}"
            )

    g = [0.0] * size  # g[S] = max(fval[S], c[S]) once S is finalized
    split = [0] * size
    best_val = [0.0] * size
    for s in range(1, size):
        if s.bit_count() == 1:
            g[s] = fval[s]
            continue
        low = s & -s
        rest = s ^ low
        best = math.inf
        best_side = 0
        sub = rest
        while True:
            s1 = sub | low
            s2 = s ^ s1
            if s2:
                a = g[s1]
                b = g[s2]
                m = a if a >= b else b
                if m < best:
                    best = m
                    best_side = s1 if s1 <= s2 else s2
                elif m == best:
                    cand = s1 if s1 <= s2 else s2
                    if cand < best_side:
                        best_side = cand
            if not sub:
                break
            sub = (sub - 1) & rest
        split[s] = best_side
        best_val[s] = best
        fs = fval[s]
        g[s] = best if best >= fs else fs

    tree = _tree_from_splits(split, n)
    check = tree_width_under(graph, tree, f)
    if check.value != best_val[full]:
        raise AssertionError(
            f"witness tree reproduces {check.value}, DP computed {best_val[full]}"
        )
    return WidthResult(best_val[full], tree, check.witness_cut)


def _tree_from_splits(split: list[int], n: int) -> DecompositionTree:
    edges: list[tuple[int, int]] = []
    counter = [n]

    def build(s: int) -> int:
        if s & (s - 1) == 0:
            return s.bit_length() - 1
        s1 = split[s]
        a = build(s1)
        b = build(s ^ s1)
        node = counter[0]
        counter[0] += 1
        edges.append((a, node))
        edges.append((node, b))
        return node

    full = (1 << n) - 1
    s1 = split[full]
    a = build(s1)
    b = build(full ^ s1)
    edges.append((a, b))
    return DecompositionTree(counter[0], edges, {v: v for v in range(n)})


def _subcubic_trees(n: int):
    """All unrooted trees with n labeled leaves and degree-3 internal nodes.

    Leaf k is node k; internal nodes are appended from n upward.  Built by
    inserting leaf k into every edge of every tree on leaves 0..k-1, which
    yields each tree exactly once: (2n-5)!! trees in a fixed order.
    """
    if n == 2:
        yield [(0, 1)]
        return

    def rec(edges: list[tuple[int, int]], k: int):
        if k == n:
            yield edges
            return
        node = n + k - 2
        for i in range(len(edges)):
            a, b = edges[i]
            rest = edges[:i] + edges[i + 1 :]
            yield from rec(rest + [(a, node), (node, b), (node, k)], k + 1)

    yield from rec([(0, 1)], 2)


def brute_force_f_width(graph: Graph, f: CutFunction, n_cap: int = BRUTE_FORCE_CAP) -> WidthResult:
    """Minimum f-width by evaluating every decomposition tree.

    Exponential ((2n-5)!! trees); the independent oracle for exact_f_width.
    """
    n = graph.n
    if n > n_cap:
        raise CapExceeded(f"tree enumeration needs n <= {n_cap}, got n = {n}")
    if n <= 1:
        return WidthResult(0.0, _trivial_tree(n), Cut(0, n))

    ev = _bits_eval(graph, f)
    _spot_check_symmetry(graph, f, ev)
    full = (1 << n) - 1
    memo: dict[int, float] = {}

    def val(bits: int) -> float:
        key = bits if bits <= full ^ bits else full ^ bits
        v = memo.get(key)
        if v is None:
            v = ev(key)
            memo[key] = v
        return v

    node_total = 2 * n - 2
    best = math.inf
    best_edges: list[tuple[int, int]] | None = None
    for edges in _subcubic_trees(n):
        adj: list[list[int]] = [[] for _ in range(node_total)]
        for a, b in edges:
            adj[a].append(b)
            adj[b].append(a)
        parent = [-2] * node_total
        parent[0] = -1
        order = [0]
        stack = [0]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if parent[w] == -2:
                    parent[w] = u
                    order.append(w)
                    stack.append(w)
        mask = [0] * node_total
        width = -math.inf
        for u in reversed(order):
            if u < n:
                mask[u] |= 1 << u
            if parent[u] >= 0:
                mask[parent[u]] |= mask[u]
                v = val(mask[u])
                if v > width:
                    width = v
                    if width >= best:
                        break
        if width < best:
            best = width
            best_edges = [tuple(e) for e in edges]

    tree = DecompositionTree(node_total, best_edges, {v: v for v in range(n)})
    check = tree_width_under(graph, tree, f)
    if check.value != best:
        raise AssertionError("enumerated width disagrees with re-evaluation")
    return WidthResult(best, tree, check.witness_cut)


def balanced_cut_lower_bound(
    graph: Graph, f: CutFunction, n_cap: int = BALANCED_CAP
) -> tuple[float, Cut]:
    """Minimum of f over balanced cuts: a certified lower bound on f-width.

    Every decomposition tree contains an edge splitting the vertices into
    sides of size between ceil(n/3) and floor(n/2), so the minimum of f over
    that range bounds the f-width of the graph from below.
    """
    n = graph.n
    if n < 3:
        raise ValueError("balanced cuts need n >= 3 (the size range is empty below)")
    if n > n_cap:
        raise CapExceeded(f"balanced enumeration needs n <= {n_cap}, got n = {n}")
    ev = _bits_eval(graph, f)
    _spot_check_symmetry(graph, f, ev)
    best = math.inf
    best_bits = 0
    for size in range((n + 2) // 3, n // 2 + 1):
        for chosen in combinations(range(n), size):
            bits = 0
            for v in chosen:
                bits |= 1 << v
            value = ev(bits)
            if value < best:
                best = value
                best_bits = bits
    return best, Cut(best_bits, n)


def rankwidth(graph: Graph, n_cap: int = DEFAULT_EXACT_CAP) -> WidthResult:
    """Exact rankwidth (f-width under the GF(2) cut-rank function)."""
    return exact_f_width(graph, CUT_RANK_FUNCTION, n_cap)


def booleanwidth(graph: Graph, n_cap: int = DEFAULT_EXACT_CAP) -> WidthResult:
    """Exact booleanwidth (f-width under the boolean cut function)."""
    return exact_f_width(graph, CUT_BOOL_FUNCTION, n_cap)


# --- witness tree text format ---
#
# Header "tree <n>", then one line per internal node: its name (i0, i1, ...)
# followed by its three neighbors; leaves appear as vertex indices.  Trees
# with n <= 2 have no internal nodes and serialize as the bare header.  Emit
# is canonical (names assigned by a traversal ordered on smallest leaf
# labels), so parse/emit round-trips are textually exact.


def emit_tree(tree: DecompositionTree) -> str:
    n = tree.n_leaves
    header = f"tree {n}"
    internals = [u for u in range(tree.node_count) if u not in tree.leaf_map]
    if not internals:
        return header + "\n"
    leaf_of = tree.leaf_map
    leaf_node = {v: node for node, v in leaf_of.items()}
    start = tree.neighbors(leaf_node[0])[0]

    min_below: dict[tuple[int, int], int] = {}

    def down(u: int, par: int) -> int:
        if u in leaf_of:
            return leaf_of[u]
        out = n
        for w in tree.neighbors(u):
            if w == par:
                continue
            m = down(w, u)
            min_below[(u, w)] = m
            out = min(out, m)
        return out

    down(start, leaf_node[0])

    number: dict[int, int] = {}

    def assign(u: int, par: int) -> None:
        number[u] = len(number)
        kids = [w for w in tree.neighbors(u) if w != par and w not in leaf_of]
        kids.sort(key=lambda w: min_below[(u, w)])
        for w in kids:
            assign(w, u)

    assign(start, leaf_node[0])

    lines = [header]
    for u in sorted(number, key=number.get):
        toks = []
        for w in tree.neighbors(u):
            if w in leaf_of:
                toks.append((0, leaf_of[w], str(leaf_of[w])))
            else:
                toks.append((1, number[w], f"i{number[w]}"))
        toks.sort()
        lines.append(f"i{number[u]} " + " ".join(t[2] for t in toks))
    return "\n".join(lines) + "\n"


def parse_tree(text: str) -> DecompositionTree:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty tree text", position=1)
    head = lines[0].split()
    if len(head) != 2 or head[0] != "tree":
        raise ParseError(f"expected 'tree <n>' header, got {lines[0]!r}", position=1)
    try:
        n = int(head[1])
    except ValueError:
        raise ParseError(f"bad leaf count {head[1]!r}", position=1) from None
    if n < 0:
        raise ParseError("negative leaf count", position=1)
    if n <= 2:
        if len(lines) > 1:
            raise ParseError(f"no internal nodes expected for n = {n}", position=2)
        if n == 0:
            return DecompositionTree(0, [], {})
        if n == 1:
            return DecompositionTree(1, [], {0: 0})
        return DecompositionTree(2, [(0, 1)], {0: 0, 1: 1})

    want_internal = n - 2
    if len(lines) - 1 != want_internal:
        raise ParseError(
            f"expected {want_internal} internal-node lines for n = {n}, "
            f"got {len(lines) - 1}",
            position=2,
        )

    def node_id(token: str, lineno: int) -> int:
        if token.startswith("i"):
            try:
                k = int(token[1:])
            except ValueError:
                raise ParseError(f"bad node token {token!r}", position=lineno) from None
            if not 0 <= k < want_internal:
                raise ParseError(f"internal node {token} out of range", position=lineno)
            return n + k
        try:
            v = int(token)
        except ValueError:
            raise ParseError(f"bad node token {token!r}", position=lineno) from None
        if not 0 <= v < n:
            raise ParseError(f"leaf index {v} out of range", position=lineno)
        return v

    edge_set = set()
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 4:
            raise ParseError(
                f"expected '<name> <nbr> <nbr> <nbr>' on line {lineno}", position=lineno
            )
        u = node_id(parts[0], lineno)
        if u < n:
            raise ParseError(f"line {lineno} names a leaf, not an internal node", position=lineno)
        for tok in parts[1:]:
            w = node_id(tok, lineno)
            edge_set.add((min(u, w), max(u, w)))
    return DecompositionTree(2 * n - 2, sorted(edge_set), {v: v for v in range(n)})

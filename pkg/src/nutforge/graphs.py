"""Graph representation, structured builders, and serialization.

Graphs are simple and undirected, stored densely as per-vertex neighbor
bitmasks (orders stay small, at most a couple of hundred vertices).  Builders
cover the shapes the constructions need:

* circulant graphs on Z_n with a jump set,
* Cayley graphs of the dihedral group of order 2m, laid out so the adjacency
  matrix is literally a 2x2 block matrix of m x m circulants with equal
  diagonal blocks,
* general bicirculants given by three connection sets,
* cubic Hamiltonian graphs in exponential LCF notation,
* complements.

The dihedral layout orders vertices as the m rotations r^0..r^{m-1} followed
by the m reflections s, r^{-1}s, ..., r^{-(m-1)}s.  With that ordering the
blocks are: diagonal blocks circulant on the rotation exponents, the upper
off-diagonal block circulant on the negated reflection exponents, and the
lower one circulant on the reflection exponents.

Serialization covers graph6 (bit-exact per the published format, including
the multi-byte order prefix for orders above 62), a zero-indexed adjacency
list, and DOT.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("order", "_rows")

    def __init__(self, order: int, rows):
        rows = tuple(int(r) for r in rows)
        if order < 1:
            raise ValueError("graph order must be >= 1")
        if len(rows) != order:
            raise ValueError("row count does not match order")
        mask = (1 << order) - 1
        for i, r in enumerate(rows):
            if r & ~mask:
                raise ValueError("adjacency bits outside vertex range")
            if r >> i & 1:
                raise ValueError(f"loop at vertex {i}")
        for i in range(order):
            for j in range(i + 1, order):
                if (rows[i] >> j & 1) != (rows[j] >> i & 1):
                    raise ValueError(f"asymmetric adjacency at ({i}, {j})")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.order, self._rows))

    @classmethod
    def from_edges(cls, order: int, edges) -> "Graph":
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) outside vertex range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, rows)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        row = self._rows[v]
        return [u for u in range(self.order) if row >> u & 1]

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in range(u + 1, self.order)
                if self._rows[u] >> v & 1]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def adjacency_rows(self) -> tuple[int, ...]:
        return self._rows

    def adjacency_matrix(self):
        from .exact import IntMatrix

        return IntMatrix([[self._rows[i] >> j & 1 for j in range(self.order)]
                          for i in range(self.order)])

    def relabel(self, perm) -> "Graph":
        """Graph with vertex i of the result being perm[i] of self."""
        n = self.order
        if sorted(perm) != list(range(n)):
            raise ValueError("not a permutation")
        return Graph.from_edges(n, [(perm.index(u), perm.index(v))
                                    for u, v in self.edges()])

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            v = 0
            f = frontier
            while f:
                if f & 1:
                    nxt |= self._rows[v]
                f >>= 1
                v += 1
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.order) - 1

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self._rows == other._rows

    def __hash__(self):
        return hash((self.order, self._rows))

    def __repr__(self):
        return f"Graph(order={self.order}, edges={self.edge_count()})"


@dataclass(frozen=True)
class CirculantSpec:
    """Circulant graph on Z_n: vertex i adjacent to i +- j for each jump j.

    Jumps live in [1, n // 2]; the jump n/2 (even n) contributes degree one,
    every other jump degree two.
    """

    n: int
    jumps: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "jumps", frozenset(self.jumps))
        if self.n < 3:
            raise ValueError("circulant order must be >= 3")
        for j in self.jumps:
            if not 1 <= j <= self.n // 2:
                raise ValueError(f"jump {j} outside [1, {self.n // 2}]")

    @property
    def degree(self) -> int:
        return sum(1 if 2 * j == self.n else 2 for j in self.jumps)

    def describe(self) -> str:
        return f"circulant(n={self.n}, jumps={sorted(self.jumps)})"


@dataclass(frozen=True)
class DihedralSpec:
    """Cayley graph of the dihedral group of order 2m.

    ``rotations`` holds exponents a with r^a in the connection set (closed
    under a -> m - a, since the connection set is inverse-closed);
    ``reflections`` holds exponents b with r^b s in the connection set
    (reflections are involutions, so no closure condition applies).
    """

    m: int
    rotations: frozenset = field(default_factory=frozenset)
    reflections: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "rotations", frozenset(self.rotations))
        object.__setattr__(self, "reflections", frozenset(self.reflections))
        if self.m < 3:
            raise ValueError("dihedral parameter m must be >= 3")
        for a in self.rotations:
            if not 1 <= a <= self.m - 1:
                raise ValueError(f"rotation exponent {a} outside [1, {self.m - 1}]")
            if (self.m - a) % self.m not in self.rotations:
                raise ValueError("rotation set not closed under inversion")
        for b in self.reflections:
            if not 0 <= b <= self.m - 1:
                raise ValueError(f"reflection exponent {b} outside [0, {self.m - 1}]")

    @property
    def degree(self) -> int:
        return len(self.rotations) + len(self.reflections)

    def as_bicirculant(self) -> "BicirculantSpec":
        """The equivalent three-connection-set description (equal diagonal
        blocks, off-diagonal block from the reflection exponents)."""
        return BicirculantSpec(self.m, self.rotations, self.reflections, self.rotations)

    def describe(self) -> str:
        return (f"dihedral(m={self.m}, rotations={sorted(self.rotations)}, "
                f"reflections={sorted(self.reflections)})")


@dataclass(frozen=True)
class BicirculantSpec:
    """Order-2m graph with adjacency blocks [[C0, C1^T], [C1, C2]] where C0 and
    C2 are symmetric circulants with zero diagonal (connection sets s0, s2,
    inverse-closed) and C1 is the circulant with connection set s1."""

    m: int
    s0: frozenset = field(default_factory=frozenset)
    s1: frozenset = field(default_factory=frozenset)
    s2: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "s0", frozenset(self.s0))
        object.__setattr__(self, "s1", frozenset(self.s1))
        object.__setattr__(self, "s2", frozenset(self.s2))
        if self.m < 3:
            raise ValueError("bicirculant parameter m must be >= 3")
        for name, s in (("s0", self.s0), ("s2", self.s2)):
            for a in s:
                if not 1 <= a <= self.m - 1:
                    raise ValueError(f"{name} entry {a} outside [1, {self.m - 1}]")
                if (self.m - a) % self.m not in s:
                    raise ValueError(f"{name} not closed under inversion")
        for b in self.s1:
            if not 0 <= b <= self.m - 1:
                raise ValueError(f"s1 entry {b} outside [0, {self.m - 1}]")

    @property
    def degrees(self) -> tuple[int, int]:
        """Vertex degrees on the two orbits."""
        return (len(self.s0) + len(self.s1), len(self.s2) + len(self.s1))

    def describe(self) -> str:
        return (f"bicirculant(m={self.m}, s0={sorted(self.s0)}, "
                f"s1={sorted(self.s1)}, s2={sorted(self.s2)})")


def _circulant_rows(m: int, connection) -> list[int]:
    """Bit rows of the m x m circulant with C[i][j] = 1 iff (j - i) mod m in
    the connection set."""
    rows = []
    for i in range(m):
        r = 0
        for j in connection:
            r |= 1 << ((i + j) % m)
        rows.append(r)
    return rows


def build_circulant(spec: CirculantSpec) -> Graph:
    """Circulant graph: vertex i adjacent to i +- j (mod n) for each jump."""
    conn = set()
    for j in spec.jumps:
        conn.add(j % spec.n)
        conn.add((spec.n - j) % spec.n)
    return Graph(spec.n, _circulant_rows(spec.n, conn))


def build_bicirculant(spec: BicirculantSpec) -> Graph:
    """Bicirculant graph with blocks [[C0, C1^T], [C1, C2]]."""
    m = spec.m
    c0 = _circulant_rows(m, spec.s0)
    c2 = _circulant_rows(m, spec.s2)
    c1 = _circulant_rows(m, spec.s1)
    # C1^T is the circulant on the negated connection set.
    c1t = _circulant_rows(m, {(m - b) % m for b in spec.s1})
    rows = [c0[i] | c1t[i] << m for i in range(m)]
    rows += [c1[i] | c2[i] << m for i in range(m)]
    return Graph(2 * m, rows)


def build_dihedral(spec: DihedralSpec) -> Graph:
    """Dihedral Cayley graph of order 2m in the block-circulant vertex order."""
    return build_bicirculant(spec.as_bicirculant())


def build_lcf(n: int, pattern) -> Graph:
    """Cubic Hamiltonian graph from exponential LCF notation: the cycle
    0..n-1 plus the chord i -> i + pattern[i mod len(pattern)] (mod n).

    The chord assignment must be a fixed-point-free involution that avoids
    the cycle edges, otherwise the result would not be simple and cubic.
    """
    if n < 3 or n % 2:
        raise ValueError("LCF order must be even and >= 4")
    pattern = list(pattern)
    if not pattern or n % len(pattern):
        raise ValueError("pattern length must divide the order")
    edges = [(i, (i + 1) % n) for i in range(n)]
    chord = {}
    for i in range(n):
        step = pattern[i % len(pattern)]
        j = (i + step) % n
        if j == i:
            raise ValueError(f"chord at vertex {i} is a loop")
        if (j - i) % n in (1, n - 1):
            raise ValueError(f"chord at vertex {i} collides with a cycle edge")
        chord[i] = j
    for i, j in chord.items():
        if chord.get(j) != i:
            raise ValueError(f"chords do not pair up at vertices {i}, {j}")
        if i < j:
            edges.append((i, j))
    g = Graph.from_edges(n, edges)
    if any(d != 3 for d in g.degrees()):
        raise ValueError("LCF description is not cubic")
    return g


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges."""
    mask = (1 << g.order) - 1
    rows = [(~r & mask) & ~(1 << i) for i, r in enumerate(g.adjacency_rows())]
    return Graph(g.order, rows)


def is_regular(g: Graph):
    """The common vertex degree, or None if degrees differ."""
    degs = set(g.degrees())
    return degs.pop() if len(degs) == 1 else None


# -- graph6 ------------------------------------------------------------------

_G6_MAX = 258047  # largest order the 4-byte prefix can carry


def _g6_order_bytes(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= _G6_MAX:
        return "~" + "".join(chr(63 + (n >> sh & 63)) for sh in (12, 6, 0))
    raise ValueError(f"graph6 order {n} exceeds the supported range")


def to_graph6(g: Graph) -> str:
    """Bit-exact graph6: order prefix, then the upper-triangle bits in
    column-major order packed into 6-bit groups offset by 63."""
    n = g.order
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(g.has_edge(i, j))
    out = [_g6_order_bytes(n)]
    for k in range(0, len(bits), 6):
        group = 0
        for b in bits[k:k + 6]:
            group = group << 1 | b
        group <<= max(0, 6 - len(bits[k:k + 6]))
        out.append(chr(63 + group))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    """Decode a graph6 line (optional ``>>graph6<<`` header tolerated)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    vals = [ord(ch) - 63 for ch in s]
    if any(v < 0 or v > 63 for v in vals):
        raise ValueError("invalid graph6 character")
    if vals[0] == 63:
        if len(vals) < 4:
            raise ValueError("truncated graph6 order")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if n < 1:
        raise ValueError("graph6 order must be >= 1")
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise ValueError("graph6 body length mismatch")
    bits = []
    for v in body:
        bits.extend((v >> sh & 1) for sh in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[need:]):
        raise ValueError("nonzero graph6 padding")
    return Graph.from_edges(n, edges)


# -- adjacency list and DOT ----------------------------------------------------

def to_adjacency_list(g: Graph) -> str:
    """Newline-delimited zero-indexed listing: ``u: v1 v2 ...``."""
    return "\n".join(f"{u}: {' '.join(map(str, g.neighbors(u)))}".rstrip()
                     for u in range(g.order))


def from_adjacency_list(text: str) -> Graph:
    entries = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        head, _, tail = line.partition(":")
        u = int(head)
        entries[u] = [int(x) for x in tail.split()]
    if not entries:
        raise ValueError("empty adjacency list")
    n = max(entries) + 1
    edges = set()
    for u, nbrs in entries.items():
        for v in nbrs:
            n = max(n, v + 1)
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines)


def serialize(g: Graph, fmt: str) -> str:
    """Render g in one of: graph6, adjacency-list, dot."""
    if fmt == "graph6":
        return to_graph6(g)
    if fmt == "adjacency-list":
        return to_adjacency_list(g)
    if fmt == "dot":
        return to_dot(g)
    raise ValueError(f"unknown graph format: {fmt}")


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse a graph from graph6 or adjacency-list text.

    With ``auto`` the format is inferred: a line containing ``:`` after a
    leading integer reads as an adjacency list, otherwise as graph6.
    """
    if fmt == "graph6":
        return from_graph6(text)
    if fmt == "adjacency-list":
        return from_adjacency_list(text)
    if fmt != "auto":
        raise ValueError(f"unknown graph input format: {fmt}")
    stripped = text.strip()
    first = stripped.splitlines()[0] if stripped else ""
    if ":" in first:
        return from_adjacency_list(text)
    return from_graph6(text)

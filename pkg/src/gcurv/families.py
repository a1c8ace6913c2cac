"""Generators for the named graph families and Cartesian products.

Every generator produces a deterministic vertex labeling and validates the
result against the family's expected order, regularity, and diameter before
returning it.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .errors import InvalidParameterError, ParseError
from .graphs import Graph, build_graph


def _check(g: Graph, what: str, n: int, degree: int, diameter: int) -> Graph:
    if g.n != n:
        raise InvalidParameterError(f"{what}: expected {n} vertices, built {g.n}")
    degs = {g.degree(v) for v in range(g.n)}
    if degs != {degree}:
        raise InvalidParameterError(f"{what}: expected {degree}-regular, got degrees {sorted(degs)}")
    ecc = max(max(row) for row in g.dist_rows())
    if ecc != diameter:
        raise InvalidParameterError(f"{what}: expected diameter {diameter}, got {ecc}")
    return g


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError("complete graph needs n >= 1")
    return build_graph(n, list(combinations(range(n), 2)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InvalidParameterError("complete bipartite needs both sides nonempty")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cocktail_party(k: int) -> Graph:
    """K_{k x 2}: 2k vertices, all edges except the pairing 2j ~ 2j+1."""
    if k < 2:
        raise InvalidParameterError("cocktail party graph needs k >= 2")
    edges = [
        (u, v)
        for u, v in combinations(range(2 * k), 2)
        if u // 2 != v // 2
    ]
    return _check(build_graph(2 * k, edges), f"CP({k})", 2 * k, 2 * k - 2, 2)


def johnson(n: int, k: int) -> Graph:
    """Vertices are the k-subsets of an n-set, adjacent when they share k-1 elements."""
    if not (1 <= k <= n - 1):
        raise InvalidParameterError("johnson graph needs 1 <= k <= n-1")
    subsets = list(combinations(range(n), k))
    index = {s: i for i, s in enumerate(subsets)}
    edges = []
    for s, t in combinations(subsets, 2):
        if len(set(s) & set(t)) == k - 1:
            edges.append((index[s], index[t]))
    g = build_graph(len(subsets), edges)
    diam = min(k, n - k)
    return _check(g, f"J({n},{k})", len(subsets), k * (n - k), diam)


def halved_cube(n: int) -> Graph:
    """Even weight binary strings of length n, adjacent at Hamming distance 2."""
    if n < 2:
        raise InvalidParameterError("halved cube needs n >= 2")
    words = [w for w in range(1 << n) if bin(w).count("1") % 2 == 0]
    index = {w: i for i, w in enumerate(words)}
    edges = []
    for a, b in combinations(words, 2):
        if bin(a ^ b).count("1") == 2:
            edges.append((index[a], index[b]))
    g = build_graph(len(words), edges)
    return _check(g, f"HQ({n})", 1 << (n - 1), n * (n - 1) // 2, max(1, n // 2))


def schlafli() -> Graph:
    """The 27-vertex Schlafli graph.

    Vertices are labeled by the 27 lines on a cubic surface: a_i, b_i
    (i in 0..5) and c_{ij} ({i,j} a 2-subset).  Two vertices are adjacent
    exactly when the corresponding lines are disjoint (skew); incident lines
    under the classical double-six rules are non-adjacent.
    """
    labels = [("a", i) for i in range(6)] + [("b", i) for i in range(6)]
    labels += [("c", frozenset(p)) for p in combinations(range(6), 2)]
    index = {lab: i for i, lab in enumerate(labels)}

    def meets(p, q):
        (s, i), (t, j) = p, q
        if s == "a" and t == "a":
            return False
        if s == "b" and t == "b":
            return False
        if {s, t} == {"a", "b"}:
            return i != j
        if s == "c" and t == "c":
            return not (i & j)
        if s == "c":
            return j in i
        return i in j

    edges = [
        (index[p], index[q])
        for p, q in combinations(labels, 2)
        if not meets(p, q)
    ]
    return _check(build_graph(27, edges), "Schlafli", 27, 16, 2)


def gosset() -> Graph:
    """The 56-vertex Gosset graph.

    Vertices are signed 2-subsets of an 8-set.  Same sign pairs are adjacent
    when the subsets meet in one element; opposite sign pairs are adjacent
    when the subsets are disjoint.
    """
    pairs = list(combinations(range(8), 2))
    labels = [(+1, frozenset(p)) for p in pairs] + [(-1, frozenset(p)) for p in pairs]
    index = {lab: i for i, lab in enumerate(labels)}
    edges = []
    for (s, a), (t, b) in combinations(labels, 2):
        if s == t:
            ok = len(a & b) == 1
        else:
            ok = not (a & b)
        if ok:
            edges.append((index[(s, a)], index[(t, b)]))
    return _check(build_graph(56, edges), "Gosset", 56, 27, 3)


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Cartesian product: (u1,u2) ~ (v1,v2) iff equal in one slot, adjacent in the other."""
    n2 = g2.n
    edges = []
    for u1 in range(g1.n):
        base = u1 * n2
        for (a, b) in g2.edges:
            edges.append((base + a, base + b))
    for (a, b) in g1.edges:
        for u2 in range(n2):
            edges.append((a * n2 + u2, b * n2 + u2))
    return build_graph(g1.n * n2, edges)


def hamming(m: int, q: int) -> Graph:
    """m-fold Cartesian power of the complete graph on q vertices."""
    if m < 1 or q < 2:
        raise InvalidParameterError("hamming graph needs m >= 1 and q >= 2")
    g = complete_graph(q)
    for _ in range(m - 1):
        g = cartesian_product(g, complete_graph(q))
    return _check(g, f"H({m},{q})", q ** m, m * (q - 1), m)


def hypercube(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError("hypercube needs n >= 1")
    return hamming(n, 2)


@dataclass(frozen=True)
class FamilySpec:
    """Parsed description of a generator invocation or product expression."""

    kind: str
    params: tuple = ()
    factors: tuple = field(default=())

    def label(self) -> str:
        if self.kind == "product":
            return "( " + " x ".join(f.label() for f in self.factors) + " )"
        if not self.params:
            return self.kind
        return f"{self.kind} " + " ".join(str(p) for p in self.params)

    def build(self) -> Graph:
        if self.kind == "product":
            left, right = self.factors
            return cartesian_product(left.build(), right.build())
        ctor = _GENERATORS[self.kind]
        return ctor(*self.params)


_GENERATORS = {
    "K": complete_graph,
    "C": cycle,
    "KB": complete_bipartite,
    "CP": cocktail_party,
    "J": johnson,
    "HQ": halved_cube,
    "Q": hypercube,
    "H": hamming,
    "schlafli": schlafli,
    "gosset": gosset,
}

_ARITY = {
    "K": 1, "C": 1, "KB": 2, "CP": 1, "J": 2, "HQ": 1, "Q": 1, "H": 2,
    "schlafli": 0, "gosset": 0,
}

_KEYWORDS = {k.lower(): k for k in _GENERATORS}


def parse_family(text: str) -> FamilySpec:
    """Parse a family expression such as "J 5 2" or "( CP 3 x K 2 )".

    Keywords are case insensitive and tokens are whitespace separated.
    Products nest: "( ( Q 2 x CP 3 ) x K 2 )".
    """
    tokens = text.split()
    if not tokens:
        raise ParseError("empty family expression")
    spec, pos = _parse_expr(tokens, 0)
    if pos != len(tokens):
        raise ParseError(f"trailing input from token {pos + 1}", column=pos + 1)
    return spec


def _parse_expr(tokens, pos):
    tok = tokens[pos]
    if tok == "(":
        left, pos = _parse_expr(tokens, pos + 1)
        if pos >= len(tokens) or tokens[pos].lower() != "x":
            raise ParseError("expected 'x' inside product", column=pos + 1)
        right, pos = _parse_expr(tokens, pos + 1)
        if pos >= len(tokens) or tokens[pos] != ")":
            raise ParseError("expected ')' closing product", column=pos + 1)
        return FamilySpec("product", factors=(left, right)), pos + 1
    key = tok.lower()
    if key not in _KEYWORDS:
        raise ParseError(f"unknown family keyword {tok!r}", column=pos + 1)
    kind = _KEYWORDS[key]
    arity = _ARITY[kind]
    params = []
    for i in range(arity):
        if pos + 1 + i >= len(tokens):
            raise ParseError(f"{kind} needs {arity} integer parameter(s)", column=pos + 1)
        try:
            params.append(int(tokens[pos + 1 + i]))
        except ValueError:
            raise ParseError(
                f"parameter of {kind} must be an integer, got {tokens[pos + 1 + i]!r}",
                column=pos + 2 + i,
            )
    return FamilySpec(kind, tuple(params)), pos + 1 + arity

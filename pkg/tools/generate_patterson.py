"""Generate the nested Gauss-Patterson tables shipped in ``apfilter.quadrature``.

Each level doubles the previous rule plus one point.  The added nodes are the
roots of the polynomial of degree n+1 that is orthogonal, on [-1, 1], to every
polynomial of degree <= n against the weight given by the node polynomial of
the current rule.  Everything runs in mpmath at a working precision far above
double so that the rounded tables are correct to the last bit.

Usage::

    python tools/generate_patterson.py [max_level] > src/apfilter/quadrature/_patterson.py
"""

import sys

import mpmath as mp

mp.mp.dps = 1100


def poly_from_roots(roots):
    """Monomial coefficients (ascending) of prod (x - r)."""
    coeffs = [mp.mpf(1)]
    for r in roots:
        new = [mp.mpf(0)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            new[k + 1] += c
            new[k] -= r * c
        coeffs = new
    return coeffs


def moment(p):
    """Integral of x**p over [-1, 1]."""
    return mp.mpf(2) / (p + 1) if p % 2 == 0 else mp.mpf(0)


def extend(nodes):
    """Nodes added by the Patterson extension of a symmetric rule with odd count."""
    n = len(nodes)
    pi = poly_from_roots(nodes)
    half = (n + 1) // 2
    # q(x) = sum_j r_j x^(2j), r_half = 1; orthogonal to x^k for odd k <= n
    ks = list(range(1, n + 1, 2))
    a = mp.matrix(half, half)
    b = mp.matrix(half, 1)

    def inner(power_q, k):
        return mp.fsum(c * moment(t + power_q + k) for t, c in enumerate(pi) if c != 0)

    for row, k in enumerate(ks):
        for j in range(half):
            a[row, j] = inner(2 * j, k)
        b[row] = -inner(2 * half, k)
    r = mp.lu_solve(a, b)
    coeffs = [r[j] for j in range(half)] + [mp.mpf(1)]
    ys = mp.polyroots(list(reversed(coeffs)), maxsteps=2000, extraprec=4000)
    out = []
    for y in ys:
        if abs(mp.im(y)) > mp.mpf(10) ** (-300) or not (0 < mp.re(y) < 1):
            raise RuntimeError(f"extension root outside (0, 1): {y}")
        x = mp.sqrt(mp.re(y))
        out.extend([x, -x])
    return sorted(out)


def weights(nodes):
    """Interpolatory weights of a symmetric rule on [-1, 1]."""
    pos = [x for x in nodes if x >= 0]
    pos.sort()
    k = len(pos)
    a = mp.matrix(k, k)
    b = mp.matrix(k, 1)
    for row in range(k):
        for j, x in enumerate(pos):
            factor = 1 if x == 0 else 2
            a[row, j] = factor * x ** (2 * row)
        b[row] = moment(2 * row)
    w = mp.lu_solve(a, b)
    table = {pos[j]: w[j] for j in range(k)}
    return [table[abs(x)] for x in nodes]


def main(max_level=7):
    nodes = [mp.mpf(0)]
    levels = []
    for level in range(max_level + 1):
        if level > 0:
            nodes = sorted(nodes + extend(nodes))
        w = weights(nodes)
        levels.append((list(nodes), w))
        print(f"level {level}: {len(nodes)} nodes", file=sys.stderr)

    print('"""Gauss-Patterson nodes and weights on (-1, 1), levels 0..%d.' % max_level)
    print()
    print("Generated by tools/generate_patterson.py; do not edit by hand.")
    print('"""')
    print()
    print("NODES = (")
    for ns, _ in levels:
        print("    (")
        for x in ns:
            print(f"        {float(x)!r},")
        print("    ),")
    print(")")
    print()
    print("WEIGHTS = (")
    for _, ws in levels:
        print("    (")
        for x in ws:
            print(f"        {float(x)!r},")
        print("    ),")
    print(")")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 7)

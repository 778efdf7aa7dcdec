"""Independent oracle for harmonic decompositions f = sum_j q^j h_j.

Solves for generic symbolic coefficients of every h_j with sympy and prints
the components; used to freeze expected values in harmonic_test.cc.
"""
import itertools
import sympy as sp


def monomials(xs, deg):
    return [sp.prod([x ** e for x, e in zip(xs, exps)])
            for exps in itertools.product(range(deg + 1), repeat=len(xs)) if sum(exps) == deg]


def decompose(f, xs, d):
    q = sum(x ** 2 for x in xs)
    unknowns, hs = [], []
    for j in range(d // 2 + 1):
        basis = monomials(xs, d - 2 * j)
        cs = sp.symbols(f"c{j}_0:{len(basis)}")
        unknowns += cs
        hs.append(sum(c * b for c, b in zip(cs, basis)))
    eqs = sp.Poly(sp.expand(sum(q ** j * h for j, h in enumerate(hs)) - f), *xs).coeffs()
    for h in hs:
        lap = sp.expand(sum(sp.diff(h, x, 2) for x in xs))
        if lap != 0:
            eqs += sp.Poly(lap, *xs).coeffs()
    sol = sp.solve(eqs, unknowns, dict=True)
    assert len(sol) == 1
    return [sp.expand(h.subs(sol[0])) for h in hs]


if __name__ == "__main__":
    x0, x1, x2, x3 = sp.symbols("x0 x1 x2 x3")
    cases = [(x0 ** 2, [x0, x1], 2), (x0 ** 3, [x0, x1], 3), (x0 ** 4, [x0, x1], 4),
             (x0 ** 2 * x1 ** 2, [x0, x1], 4), (x0 ** 4, [x0, x1, x2], 4),
             (x0 ** 2 * x1 * x2 + 3 * x2 ** 4, [x0, x1, x2], 4), (x0 ** 6, [x0, x1, x2, x3], 6)]
    for f, xs, d in cases:
        print(f, len(xs) - 1, decompose(f, xs, d))

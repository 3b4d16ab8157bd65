"""Tiny exact two-phase simplex over the rationals.

Dense tableau with Bland's rule, so it terminates without any tolerance.
Meant for the small max-min-slack programs that arise when shifting cone
points by modular vectors, not as a general purpose solver.
"""

from fractions import Fraction

from .errors import ConepolError


class LPInfeasible(ConepolError):
    pass


class LPUnbounded(ConepolError):
    pass


def simplex_max(objective, rows, rhs):
    """Maximize objective . x over {x >= 0 : rows . x <= rhs}.

    Returns (optimum, x) as exact rationals.
    """
    m = len(rows)
    n = len(objective)
    A = [[Fraction(v) for v in row] for row in rows]
    b = [Fraction(v) for v in rhs]
    c = [Fraction(v) for v in objective]

    # Flip rows with negative rhs so b >= 0; those rows get an artificial
    # variable because their slack coefficient turns into -1.
    art_rows = []
    for i in range(m):
        if b[i] < 0:
            A[i] = [-v for v in A[i]]
            b[i] = -b[i]
            art_rows.append(i)
    n_art = len(art_rows)
    width = n + m + n_art + 1
    art_col = {i: n + m + k for k, i in enumerate(art_rows)}

    tableau = []
    basis = []
    for i in range(m):
        row = [Fraction(0)] * width
        row[:n] = A[i]
        row[-1] = b[i]
        if i in art_col:
            row[n + i] = Fraction(-1)
            row[art_col[i]] = Fraction(1)
            basis.append(art_col[i])
        else:
            row[n + i] = Fraction(1)
            basis.append(n + i)
        tableau.append(row)

    def pivot(r, col, cost):
        piv = tableau[r][col]
        tableau[r] = [v / piv for v in tableau[r]]
        for k in range(m):
            if k != r and tableau[k][col] != 0:
                f = tableau[k][col]
                tableau[k] = [a - f * p for a, p in zip(tableau[k], tableau[r])]
        if cost is not None and cost[col] != 0:
            f = cost[col]
            for k in range(width):
                cost[k] -= f * tableau[r][k]
        basis[r] = col

    def price_out(cost):
        for r, bcol in enumerate(basis):
            if cost[bcol] != 0:
                f = cost[bcol]
                for k in range(width):
                    cost[k] -= f * tableau[r][k]

    def optimize(cost, allowed):
        while True:
            enter = next((j for j in allowed if cost[j] > 0), None)
            if enter is None:
                return
            leave = None
            best = None
            for r in range(m):
                coef = tableau[r][enter]
                if coef > 0:
                    ratio = tableau[r][-1] / coef
                    if best is None or ratio < best or (
                        ratio == best and basis[r] < basis[leave]
                    ):
                        best = ratio
                        leave = r
            if leave is None:
                raise LPUnbounded("objective unbounded above")
            pivot(leave, enter, cost)

    if n_art:
        cost1 = [Fraction(0)] * width
        for col in art_col.values():
            cost1[col] = Fraction(-1)
        price_out(cost1)
        optimize(cost1, range(n + m))
        if -cost1[-1] != 0:
            raise LPInfeasible("phase 1 optimum nonzero")
        # kick leftover artificials out of the basis
        for r in range(m):
            if basis[r] >= n + m:
                swap = next(
                    (j for j in range(n + m) if tableau[r][j] != 0), None
                )
                if swap is not None:
                    pivot(r, swap, None)

    cost2 = [Fraction(0)] * width
    cost2[:n] = c
    price_out(cost2)
    optimize(cost2, range(n + m))

    x = [Fraction(0)] * n
    for r, bcol in enumerate(basis):
        if bcol < n:
            x[bcol] = tableau[r][-1]
    return -cost2[-1], x


def max_min_slack(coeff_rows, rhs):
    """Maximize t subject to t <= rhs[i] + coeff_rows[i] . w, with w free.

    Returns (t, w).  Free variables are handled by sign splitting.
    """
    k = len(coeff_rows[0]) if coeff_rows else 0
    rows = []
    for crow, _ in zip(coeff_rows, rhs):
        # columns: t+, t-, w+, w-
        row = [Fraction(1), Fraction(-1)]
        row.extend(Fraction(-v) for v in crow)
        row.extend(Fraction(v) for v in crow)
        rows.append(row)
    objective = [Fraction(1), Fraction(-1)] + [Fraction(0)] * (2 * k)
    value, x = simplex_max(objective, rows, rhs)
    w = [x[2 + j] - x[2 + k + j] for j in range(k)]
    return value, w

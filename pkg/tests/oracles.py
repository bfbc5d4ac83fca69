"""Definitional oracles, deliberately naive and independent of the package.

Everything here works on plain Python lists of 0/1 truth-table values and
follows the textbook definitions literally: no transforms, no pruning, no
memoisation.
"""

from itertools import combinations, product


def bits(mask, n):
    return [(mask >> j) & 1 for j in range(n)]


def subsets(n):
    return range(1 << n)


def is_subset(a, b):
    return a & ~b == 0


def direct_wht(table, n):
    """coeffs[S] = sum_x f(x) (-1)^{|S & x|}."""
    return [
        sum(table[x] * (-1) ** bin(s & x).count("1") for x in subsets(n)) for s in subsets(n)
    ]


def direct_anf(table, n):
    """c_S = sum_{T subset S} f(1_T) mod 2."""
    return [sum(table[t] for t in subsets(n) if is_subset(t, s)) % 2 for s in subsets(n)]


def direct_zeta(bits_in, n):
    return direct_anf(bits_in, n)


def fourier_degree(table, n):
    coeffs = direct_wht(table, n)
    return max(bin(s).count("1") for s in subsets(n) if coeffs[s] != 0)


def f2_degree(table, n):
    coeffs = direct_anf(table, n)
    return max(bin(s).count("1") for s in subsets(n) if coeffs[s])


def family(table):
    return [x for x, v in enumerate(table) if v]


def shatters(fam, t):
    traces = {f & t for f in fam}
    return all(u in traces for u in subsets_of(t))


def subsets_of(t):
    coords = [i for i in range(t.bit_length()) if t >> i & 1]
    out = []
    for r in range(len(coords) + 1):
        for combo in combinations(coords, r):
            out.append(sum(1 << i for i in combo))
    return out


def vc_dim(fam, n):
    """Largest |T| shattered, scanning every T; -1 for the empty family."""
    if not fam:
        return -1
    return max(bin(t).count("1") for t in subsets(n) if shatters(fam, t))


def sensitivity(table, n):
    return max(
        sum(table[x] != table[x ^ (1 << i)] for i in range(n)) for x in subsets(n)
    )


def certificate(table, n):
    """max_x min |P| over every P, checking all y agreeing with x on P."""
    worst = 0
    for x in subsets(n):
        best = n
        for p in subsets(n):
            if all(table[y] == table[x] for y in subsets(n) if (y & p) == (x & p)):
                best = min(best, bin(p).count("1"))
        worst = max(worst, best)
    return worst


def decision_tree(table, n):
    """Plain recursion over explicit point lists; no caching."""

    def depth(points, free):
        values = {table[x] for x in points}
        if len(values) == 1:
            return 0
        best = None
        for i in free:
            rest = [j for j in free if j != i]
            zero = [x for x in points if not x >> i & 1]
            one = [x for x in points if x >> i & 1]
            d = 1 + max(depth(zero, rest), depth(one, rest))
            best = d if best is None else min(best, d)
        return best

    return depth(list(subsets(n)), list(range(n)))


def containment_counts(fam, n):
    return {a: sum(1 for f in fam if is_subset(a, f)) for a in subsets(n)}


def design_holds_containment(fam, n, d):
    counts = containment_counts(fam, n)
    return all(counts[a] % 2 == 0 for a in subsets(n) if bin(a).count("1") <= d)


def design_holds_trace(fam, n, d):
    for s in subsets(n):
        if bin(s).count("1") > d:
            continue
        for t in subsets_of(s):
            if sum(1 for f in fam if f & s == t) % 2:
                return False
    return True


def design_holds_disjoint(fam, n, d):
    return all(
        sum(1 for f in fam if f & s == 0) % 2 == 0
        for s in subsets(n)
        if bin(s).count("1") <= d
    )


def all_tables(n):
    return [list(t) for t in product((0, 1), repeat=1 << n)]


def naive_census(n):
    """(deg-equality count, F2-equality count) over non-zero functions."""
    deg_eq = f2_eq = 0
    for table in all_tables(n):
        if not any(table):
            continue
        v = vc_dim(family(table), n)
        deg_eq += v + fourier_degree(table, n) == n
        f2_eq += v + f2_degree(table, n) == n
    return deg_eq, f2_eq

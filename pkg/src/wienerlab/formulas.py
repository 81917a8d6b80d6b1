"""Closed-form Wiener index and transmission values for the named families.

Every function returns an exact int.  Formulas with fractional
intermediate terms are evaluated over a common denominator and divided
exactly; a remainder means a bug, never rounding.
"""

from __future__ import annotations

from math import comb


def _exact_div(numerator: int, denominator: int) -> int:
    q, r = divmod(numerator, denominator)
    if r:
        raise AssertionError(
            f"{numerator}/{denominator} is not integral; formula misapplied"
        )
    return q


def w_path(n: int) -> int:
    """Wiener index of the path on n vertices."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    return comb(n + 1, 3)


def w_complete(n: int) -> int:
    """Wiener index of the complete graph."""
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return comb(n, 2)


def w_star(n: int) -> int:
    """Wiener index of the star on n vertices."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return (n - 1) ** 2


def w_cycle(n: int) -> int:
    """Wiener index of the cycle: n^3/8 for even n, n(n^2-1)/8 for odd."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return _exact_div(n**3 if n % 2 == 0 else n * (n * n - 1), 8)


def d_cycle_vertex(n: int) -> int:
    """Transmission of any cycle vertex: n^2/4 even, (n^2-1)/4 odd."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return _exact_div(n * n if n % 2 == 0 else n * n - 1, 4)


def d_path_vertex(n: int, i: int) -> int:
    """Transmission of the i-th path vertex (1-based), symmetric in i and n-i+1."""
    if not 1 <= i <= n:
        raise ValueError(f"path position must satisfy 1 <= i <= n, got i={i}, n={n}")
    return _exact_div((n - i) * (n - i + 1) + i * (i - 1), 2)


def w_unicyclic_pendant(n: int, g: int) -> int:
    """Wiener index of the cycle C_g with n-g pendants at one vertex."""
    if not 3 <= g <= n:
        raise ValueError(f"needs 3 <= g <= n, got g={g}, n={n}")
    if g % 2 == 0:
        return _exact_div(g**3, 8) + (n - g) * (_exact_div(g * g, 4) + n - 1)
    return _exact_div(g * (g * g - 1), 8) + (n - g) * (
        _exact_div(g * g - 1, 4) + n - 1
    )


def w_unicyclic_tail(n: int, g: int) -> int:
    """Wiener index of the cycle C_g with a pendant path of n-g vertices."""
    if not 3 <= g <= n:
        raise ValueError(f"needs 3 <= g <= n, got g={g}, n={n}")
    # common denominator 24 over both parity cases
    if g % 2 == 0:
        num = 3 * g**3 + (n - g) * (4 * (n * n + n * g + 3 * g - 1) - 2 * g * g)
    else:
        num = 3 * g * (g * g - 1) + (n - g) * (
            4 * (n * n + n * g + 3 * g - 1) - 2 * g * g - 6
        )
    return _exact_div(num, 24)


def w_broom(d: int, k: int) -> int:
    """Wiener index of the path P_d with k extra leaves at one end."""
    if d < 1 or k < 0:
        raise ValueError(f"broom needs d >= 1 and k >= 0, got d={d}, k={k}")
    return comb(d + 1, 3) + k * k + (d - 1) * k + _exact_div(d * (d - 1) * k, 2)


def w_double_broom(l: int, k: int, d: int) -> int:
    """Wiener index of the double broom: P_d plus l and k leaves at its ends."""
    if min(l, k, d) < 1:
        raise ValueError(f"double broom needs l, k, d >= 1, got {(l, k, d)}")
    return (
        comb(d + 1, 3)
        + l * l
        + k * k
        + _exact_div((d * d + d - 2) * (k + l), 2)
        + (d + 1) * k * l
    )


def d_spider_center(l: int, q: int) -> int:
    """Transmission of the spider centre: l legs of q vertices each."""
    if l < 1 or q < 1:
        raise ValueError(f"spider needs l, q >= 1, got l={l}, q={q}")
    return _exact_div(l * q * (q + 1), 2)


def w_spider(l: int, q: int) -> int:
    """Wiener index of the spider with l legs of q vertices."""
    if l < 1 or q < 1:
        raise ValueError(f"spider needs l, q >= 1, got l={l}, q={q}")
    return l * comb(q + 2, 3) + _exact_div(q * q * l * (q + 1) * (l - 1), 2)


def w_balanced_spider(n: int, k: int) -> int:
    """Wiener index of the n-vertex spider with k legs as equal as possible.

    Composite value: with q = (n-1)//k and r = n-1-kq it combines the two
    pure spiders with legs q+1 and q through their shared centre.
    """
    if not 2 <= k <= n - 2:
        raise ValueError(f"needs 2 <= k <= n-2, got n={n}, k={k}")
    q, r = divmod(n - 1, k)
    if r == 0:
        return w_spider(k, q)
    long_part = w_spider(r, q + 1)
    short_part = w_spider(k - r, q)
    return (
        long_part
        + short_part
        + r * (q + 1) * d_spider_center(k - r, q)
        + (k - r) * q * d_spider_center(r, q + 1)
    )


def w_dumbbell_33(n: int) -> int:
    """Wiener index of two triangles joined by a path, n vertices total."""
    if n < 6:
        raise ValueError(f"needs n >= 6, got {n}")
    return _exact_div(n**3 - 13 * n + 24, 6)


def w_max_pendant(n: int, k: int) -> int:
    """Largest Wiener index over connected graphs with k pendant vertices:
    the balanced double broom value, split by the parity of k."""
    if not 2 <= k <= n - 2:
        raise ValueError(f"needs 2 <= k <= n-2, got n={n}, k={k}")
    d = n - k
    base = comb(d + 1, 3) + _exact_div(k * (d * d + d - 2), 2)
    if k % 2 == 0:
        return base + _exact_div(k * k * (d + 3), 4)
    return base + _exact_div((k * k - 1) * (d + 3), 4) + 1


def w_kite(n: int, k: int) -> int:
    """Smallest Wiener index over connected graphs with k pendant vertices:
    K_{n-k} plus k pendants at one clique vertex."""
    if n < 4 or not 0 <= k <= n - 3:
        raise ValueError(f"needs n >= 4 and 0 <= k <= n-3, got n={n}, k={k}")
    return comb(n - k, 2) + k * k + 2 * k * (n - k - 1)


def w_t1(n: int) -> int:
    """Wiener index of the n-vertex double broom T(1, n-3, 2)."""
    if n < 4:
        raise ValueError(f"needs n >= 4, got {n}")
    return n * n - n - 2


def wiener_via_cut(w1: int, w2: int, n1: int, n2: int, d1_u: int, d2_u: int) -> int:
    """Wiener index of two graphs glued at a shared cut vertex u.

    Takes the parts' Wiener indices, vertex counts, and transmissions of u
    within each part; exact for every such decomposition.
    """
    if n1 < 1 or n2 < 1:
        raise ValueError("parts must be non-empty")
    return w1 + w2 + (n1 - 1) * d2_u + (n2 - 1) * d1_u

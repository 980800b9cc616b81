"""Closed-form and recursive face enumeration for the colored complexes.

Two independent routes exist for every irreducible type: the recurrence
over vertex-deleted subdiagrams, and product formulas over exponent
levels (binomial forms for the classical families).  Tests cross-assert
them; downstream code may use either.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .diagram import CoxeterDiagram, classify, codim1_subdiagrams, connected_components
from .exactmath import Poly, binomial_poly
from .tables import exponent_levels, face_correction, h_correction

F = Fraction


class TypeInfo:
    """Resolved data for one finite irreducible type."""

    def __init__(self, family: str, n: int, a: int | None = None):
        self.family = family
        self.n = n
        self.a = a
        if family == "A":
            self.h = n + 1
            self.exponents = list(range(1, n + 1))
        elif family == "B":
            self.h = 2 * n
            self.exponents = list(range(1, 2 * n, 2))
        elif family == "D":
            self.h = 2 * n - 2
            self.exponents = sorted(list(range(1, 2 * n - 2, 2)) + [n - 1])
        elif family == "I2":
            self.h = a
            self.exponents = [1, a - 1]
        else:
            fixed = {
                "E6": (12, [1, 4, 5, 7, 8, 11]),
                "E7": (18, [1, 5, 7, 9, 11, 13, 17]),
                "E8": (30, [1, 7, 11, 13, 17, 19, 23, 29]),
                "F4": (12, [1, 5, 7, 11]),
                "G2": (6, [1, 5]),
                "H3": (10, [1, 5, 9]),
                "H4": (30, [1, 11, 19, 29]),
            }
            self.h, self.exponents = fixed[family]
        self.levels = exponent_levels(family, n, a)

    @staticmethod
    def of(name_or_diagram) -> "TypeInfo":
        if isinstance(name_or_diagram, TypeInfo):
            return name_or_diagram
        if isinstance(name_or_diagram, CoxeterDiagram):
            cls = classify(name_or_diagram)
            if cls.kind != "finite":
                raise ValueError(f"not finite irreducible: {cls.kind}")
            return TypeInfo._from_name(cls.type_name, rank=cls.rank)
        return TypeInfo._from_name(str(name_or_diagram))

    @staticmethod
    def _from_name(name: str, rank: int | None = None) -> "TypeInfo":
        name = name.strip()
        if name.startswith("I2(") and name.endswith(")"):
            return TypeInfo("I2", 2, int(name[3:-1]))
        fam, num = name[0], name[1:]
        n = int(num) if num else (rank or 0)
        if fam == "C":
            fam = "B"
        if fam in ("E", "F", "G", "H"):
            return TypeInfo(f"{fam}{n}", n)
        if fam == "A" and n == 1:
            return TypeInfo("A", 1)
        if fam == "B" and n == 2:
            return TypeInfo("I2", 2, 4)
        if fam == "G" and n == 2:
            return TypeInfo("I2", 2, 6)
        return TypeInfo(fam, n)


# ---------------------------------------------------------------------------
# recurrence route


def classified_h(G: CoxeterDiagram) -> Fraction:
    cls = classify(G)
    if cls.kind != "finite":
        raise ValueError(f"{G.to_spec()} has no classified Coxeter number")
    return cls.coxeter_number


def f_polys_recursive(G: CoxeterDiagram, h_of=classified_h) -> list[Poly]:
    """Face polynomials f_0..f_rank in m via the vertex-deletion
    recurrence, convolving over components when a deletion disconnects.

    ``h_of`` supplies the Coxeter number of each connected induced
    subdiagram; the default reads it off the classification.
    """
    memo: dict[frozenset, list[Poly]] = {}

    def for_diagram(D: CoxeterDiagram) -> list[Poly]:
        key = frozenset(D.vertices)
        if key in memo:
            return memo[key]
        comps = connected_components(D)
        if len(comps) != 1:
            polys = [Poly([1])]
            for c in comps:
                polys = _convolve(polys, for_diagram(c))
        else:
            polys = connected(comps[0])
        memo[key] = polys
        return polys

    def connected(D: CoxeterDiagram) -> list[Poly]:
        r = D.rank
        if r == 1:
            return [Poly([1]), Poly([1, 1])]
        if r == 2:
            a = D.label(*D.vertices)
            f1 = Poly([2, a])
            return [Poly([1]), f1, f1 * Poly([1, 1]) / 2]
        h = Fraction(h_of(D))
        prefactor = Poly([2, h])  # mh + 2
        subs = [for_diagram(sub) for _, sub in codim1_subdiagrams(D)]
        out = [Poly([1])]
        for k in range(1, r + 1):
            total = Poly()
            for fs in subs:
                if k - 1 < len(fs):
                    total = total + fs[k - 1]
            out.append(prefactor * total / (2 * k))
        return out

    return for_diagram(G)


def _convolve(a: list[Poly], b: list[Poly]) -> list[Poly]:
    out = [Poly() for _ in range(len(a) + len(b) - 1)]
    for i, p in enumerate(a):
        for j, q in enumerate(b):
            out[i + j] = out[i + j] + p * q
    return out


# ---------------------------------------------------------------------------
# product / closed-form route


def level_product_f(info: TypeInfo, k: int) -> Poly:
    """Face polynomial from the exponent-level product with its
    correction factor."""
    if not 0 <= k <= info.n:
        raise ValueError(f"k={k} out of range for rank {info.n}")
    out = face_correction(info.family, info.n, k) * comb(info.n, k)
    for e, level in info.levels:
        if level <= k:
            out = out * Poly([e + 1, info.h]) / (e + 1)
    return out


def level_product_h(info: TypeInfo, k: int) -> Poly:
    if not 0 <= k <= info.n:
        raise ValueError(f"k={k} out of range for rank {info.n}")
    out = h_correction(info.family, info.n, k) * comb(info.n, k)
    for e, level in info.levels:
        if level <= k:
            out = out * Poly([1 - e, info.h]) / (e + 1)
    return out


def f_k_closed(info, k: int) -> Poly:
    """Primary face-number formula: binomial forms for A/B/D, the level
    product elsewhere."""
    info = TypeInfo.of(info)
    n = info.n
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range for rank {n}")
    if info.family == "A":
        p = Poly([k + 1, n + 1])  # (n+1)m + k + 1
        return binomial_poly(p, k) * comb(n, k) / (k + 1)
    if info.family == "B":
        return binomial_poly(Poly([k, n]), k) * comb(n, k)
    if info.family == "D":
        first = binomial_poly(Poly([k, n - 1]), k) * comb(n, k)
        second = binomial_poly(Poly([k - 1, n - 1]), k) * (
            comb(n - 2, k - 2) if k >= 2 else 0
        )
        return first + second
    return level_product_f(info, k)


def h_k_closed(info, k: int) -> Poly:
    info = TypeInfo.of(info)
    n = info.n
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range for rank {n}")
    if info.family == "A":
        return binomial_poly(Poly([0, n + 1]), k) * comb(n, k) / (k + 1)
    if info.family == "B":
        return binomial_poly(Poly([0, n]), k) * comb(n, k)
    if info.family == "D":
        first = binomial_poly(Poly([0, n - 1]), k) * comb(n, k)
        second = binomial_poly(Poly([1, n - 1]), k) * (
            comb(n - 2, k - 2) if k >= 2 else 0
        )
        return first + second
    return level_product_h(info, k)


def facet_count_poly(info) -> Poly:
    """Number of maximal faces as a polynomial in m (Fuss-Catalan product)."""
    info = TypeInfo.of(info)
    out = Poly([1])
    for e in info.exponents:
        out = out * Poly([e + 1, info.h]) / (e + 1)
    return out


def positive_facet_count_poly(info) -> Poly:
    info = TypeInfo.of(info)
    out = Poly([1])
    for e in info.exponents:
        out = out * Poly([e - 1, info.h]) / (e + 1)
    return out


def N_product(info, m) -> Fraction:
    return facet_count_poly(info)(m)


def N_plus_product(info, m) -> Fraction:
    return positive_facet_count_poly(info)(m)


def f_plus_poly(f_k: Poly, k: int) -> Poly:
    """Sign-twisted evaluation at -m-1 defining the reciprocal numbers."""
    return f_k.compose(Poly([-1, -1])) * ((-1) ** k)


def f_plus(info, k: int, m) -> Fraction:
    return f_plus_poly(f_k_closed(info, k), k)(m)


# ---------------------------------------------------------------------------
# h-vectors and Euler characteristic


def h_vector_from_f(fvec) -> list:
    """Coefficients of F(x-1) recovered from a full f-vector.

    Works for integer vectors and for polynomial-valued ones alike.
    """
    n = len(fvec) - 1
    out = []
    for j in range(n + 1):
        acc = None
        for k in range(n - j, n + 1):
            term = fvec[n - k] * ((-1) ** (k - (n - j)) * comb(k, n - j))
            acc = term if acc is None else acc + term
        out.append(acc)
    return out


def h_vector(info, m: int) -> list[Fraction]:
    """h-vector of the m-colored complex from the closed-form f-vector."""
    info = TypeInfo.of(info)
    fvec = [f_k_closed(info, k)(m) for k in range(info.n + 1)]
    return h_vector_from_f(fvec)


class IdentityViolated(AssertionError):
    pass


def reduced_euler(fvec) -> int:
    """Alternating sum over nonempty faces; f_0 counts the empty face."""
    return sum((1 if (k - 1) % 2 == 0 else -1) * fvec[k] for k in range(len(fvec)))


def reduced_euler_checked(info, fvec) -> int:
    """Reduced Euler characteristic with the facet-count identity
    asserted: it must equal +-N(type, m-1) with sign (-1)^(n-1)."""
    info = TypeInfo.of(info)
    n = len(fvec) - 1
    chi = reduced_euler(fvec)
    m = None
    # recover m from f_1 = m*|positives| + n
    num_pos = info.n * info.h // 2
    if n >= 1:
        m = Fraction(fvec[1] - info.n, num_pos)
    expected = (-1) ** (n - 1) * N_product(info, m - 1)
    if chi != expected:
        raise IdentityViolated(f"chi={chi} but (-1)^(n-1) N(m-1)={expected}")
    return chi


def diameter_face_count(n: int, k: int, m: int) -> int:
    """k-element faces of the type-B model containing a diameter."""
    return comb(n - 1, k - 1) * comb(n * m + k, k)


def kirkman_cayley(n: int, k: int) -> Fraction:
    return Fraction(comb(n, k) * comb(n + k + 2, k), k + 1)


def fuss_number(n: int, m: int) -> Fraction:
    return Fraction(comb((n + 1) * (m + 1), n), n + 1)

"""
The recursive system of primitive orthogonal idempotents.

For each node J of the support semilattice:

    T_J = (prod of g^omega over generators g with C(g) preceq J)^omega
    B_J = prod of (1 - g^omega) over the remaining generators
    A_J = the stable power of B_J
    z_J = A_J * T_J
    P_J = 1 - (1 + (N+1) z_J) (1 - z_J)^(N+1),  N least with (1-z_J)^N z_J^2 = 0
    e_J = P_J * (1 - sum of e_K over K strictly above J)

All products are taken in exactly this written order and generators in
their fixed input order; the monoid is noncommutative and the outputs are
only reproducible with the order pinned. For J-trivial monoids the cheaper
P_J = 1 - (1 - z_J)^(N+1) with N least such that (1-z_J)^N z_J = 0 yields
the same system.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import AlgebraElement, basis, one, power_until_stable
from .errors import ConsistencyError
from .lattice import Semilattice
from .order import is_j_trivial
from .reporting import Report

__all__ = [
    "NortonData", "IdempotentSystem",
    "t_element", "b_element", "a_element", "z_element", "p_element",
    "node_data", "e_system", "verify_system",
]

MODES = ("general", "jtrivial", "auto")


@dataclass
class NortonData:
    node_id: int
    T: int                      # idempotent monoid element with content J
    B: AlgebraElement
    A: AlgebraElement
    z: AlgebraElement
    P: AlgebraElement
    e: AlgebraElement
    N_B: int                    # stabilization exponent of B
    N_z: int                    # exponent used to close off P


@dataclass
class IdempotentSystem:
    data: list[NortonData]          # indexed by node id
    generator_order: list[int]
    mode_used: str
    verification: Report | None = field(default=None)


def _stab_cap(lat: Semilattice) -> int:
    return (lat.order.chain_length or lat.monoid.size) + 2


def _qualifying(lat: Semilattice, J: int):
    """Generator elements split by whether C(g) preceq J, input order kept."""
    inside, outside = [], []
    for g in lat.monoid.generators:
        (inside if lat.preceq(lat.content(g), J) else outside).append(g)
    return inside, outside


def _resolve_mode(lat: Semilattice, mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "auto":
        return "jtrivial" if is_j_trivial(lat.monoid) else "general"
    return mode


def t_element(lat: Semilattice, J: int) -> int:
    """T_J; the empty product gives the identity."""
    m = lat.monoid
    inside, _ = _qualifying(lat, J)
    prod = m.identity
    for g in inside:
        prod = m.mult(prod, m.idempotent_power(g))
    t = m.idempotent_power(prod)
    if lat.content(t) != J:
        raise ConsistencyError(
            f"content of T at node {J} is {lat.content(t)}, not {J}"
        )
    return t


def b_element(lat: Semilattice, J: int) -> AlgebraElement:
    """B_J; the empty product gives 1."""
    m = lat.monoid
    _, outside = _qualifying(lat, J)
    p = one(m)
    for g in outside:
        p = p * (one(m) - basis(m, m.idempotent_power(g)))
    return p


def a_element(lat: Semilattice, J: int,
              B: AlgebraElement | None = None) -> tuple[AlgebraElement, int]:
    """Stable power of B_J with its exponent; checks g^omega * A_J = 0."""
    m = lat.monoid
    if B is None:
        B = b_element(lat, J)
    A, n_b = power_until_stable(B, _stab_cap(lat))
    _, outside = _qualifying(lat, J)
    for g in outside:
        if not (basis(m, m.idempotent_power(g)) * A).is_zero():
            raise ConsistencyError(
                f"g^omega * A != 0 at node {J} for generator element {g}"
            )
    return A, n_b


def _check_leading_term(lat: Semilattice, elem: AlgebraElement, T: int,
                        J: int, what: str) -> None:
    # coefficient of T_J must be 1 and every other term strictly above J
    if elem.coefficient(T) != 1:
        raise ConsistencyError(
            f"coefficient of T in {what} at node {J} is {elem.coefficient(T)}"
        )
    for y in elem.coeffs:
        if y == T:
            continue
        cy = lat.content(y)
        if cy == J or not lat.preceq(J, cy):
            raise ConsistencyError(
                f"term {y} of {what} at node {J} has content {cy}, "
                f"not strictly above {J}"
            )


def z_element(lat: Semilattice, J: int) -> AlgebraElement:
    """The Norton element z_J = A_J * T_J."""
    T = t_element(lat, J)
    A, _ = a_element(lat, J)
    z = A * basis(lat.monoid, T)
    _check_leading_term(lat, z, T, J, "z")
    return z


def _least_vanishing(z: AlgebraElement, tail: AlgebraElement,
                     cap: int) -> tuple[int, AlgebraElement]:
    """Least N with (1-z)^N * tail = 0, plus (1-z)^(N+1) for the closed form."""
    w = one(z.monoid) - z
    acc = tail
    wpow = one(z.monoid)
    for n in range(cap + 1):
        if acc.is_zero():
            return n, wpow * w
        acc = w * acc
        wpow = wpow * w
    raise ConsistencyError(
        f"no exponent <= {cap} makes (1-z)^N * tail vanish; "
        f"the monoid may not satisfy the assumed triviality"
    )


def _p_from_z(lat: Semilattice, z: AlgebraElement, T: int, J: int,
              mode: str, cross_check: bool) -> tuple[AlgebraElement, int]:
    m = lat.monoid
    cap = _stab_cap(lat)
    if mode == "jtrivial":
        n_z, wN1 = _least_vanishing(z, z, cap)
        P = one(m) - wN1
    else:
        n_z, wN1 = _least_vanishing(z, z * z, cap)
        P = one(m) - (one(m) + z.scale(n_z + 1)) * wN1
        if cross_check:
            w = one(m) - z
            total = AlgebraElement(m, {})
            term = z * z
            for k in range(n_z + 1):
                total = total + term.scale(k + 1)
                term = w * term
            if total != P:
                raise ConsistencyError(
                    f"closed form of P at node {J} disagrees with the "
                    f"truncated summation"
                )
    if P * P != P:
        raise ConsistencyError(f"P at node {J} is not idempotent")
    _check_leading_term(lat, P, T, J, "P")
    return P, n_z


def p_element(lat: Semilattice, J: int, mode: str = "general",
              cross_check: bool = False) -> tuple[AlgebraElement, int]:
    """The idempotent P_J and the exponent its closed form used.

    mode 'general' works for every R-trivial monoid; 'jtrivial' uses the
    shorter formula valid for J-trivial monoids; 'auto' picks by testing
    J-triviality. With cross_check the truncated double summation is also
    evaluated and compared against the closed form.
    """
    mode = _resolve_mode(lat, mode)
    T = t_element(lat, J)
    z = z_element(lat, J)
    return _p_from_z(lat, z, T, J, mode, cross_check)


def node_data(lat: Semilattice, J: int, mode: str = "general",
              cross_check: bool = False) -> NortonData:
    """All per-node pieces in one pass, sharing intermediate results.

    The e field starts out as P; the system recursion overwrites it.
    """
    mode = _resolve_mode(lat, mode)
    T = t_element(lat, J)
    B = b_element(lat, J)
    A, n_b = a_element(lat, J, B)
    z = A * basis(lat.monoid, T)
    _check_leading_term(lat, z, T, J, "z")
    P, n_z = _p_from_z(lat, z, T, J, mode, cross_check)
    return NortonData(node_id=J, T=T, B=B, A=A, z=z, P=P,
                      e=P, N_B=n_b, N_z=n_z)


def e_system(lat: Semilattice, mode: str = "auto",
             cross_check: bool = False) -> IdempotentSystem:
    """Compute every e_J, descending the lattice from its maximal nodes.

    The recursion may follow any linear extension that sees all K strictly
    above J before J; nodes sorted by (ideal size, node id) give one, since
    K strictly above J has a strictly smaller ideal. One fixed extension
    keeps output reproducible.
    """
    mode = _resolve_mode(lat, mode)
    m = lat.monoid
    order = sorted(lat.nodes, key=lambda nd: (len(nd.ideal), nd.node_id))
    data: list[NortonData | None] = [None] * lat.n_nodes
    for nd in order:
        J = nd.node_id
        rec = node_data(lat, J, mode=mode, cross_check=cross_check)
        rest = one(m)
        for K in lat.strictly_above(J):
            rest = rest - data[K].e
        rec.e = rec.P * rest
        _check_leading_term(lat, rec.e, rec.T, J, "e")
        data[J] = rec
    return IdempotentSystem(
        data=data, generator_order=list(m.generators), mode_used=mode,
    )


def verify_system(lat: Semilattice, sys: IdempotentSystem) -> Report:
    """Full verification of a computed system; results land in a report.

    Checks idempotency, pairwise orthogonality both ways, the sum being 1,
    nonzero leading terms, the node count, and the intermediate
    orthogonality facts for z, P and e*P. The report is also stored on the
    system record. Nothing raises; the CLI turns failures into exit codes.
    """
    m = lat.monoid
    report = Report()
    k = lat.n_nodes
    es = [sys.data[J].e for J in range(k)]

    bad = next((J for J in range(k) if es[J] * es[J] != es[J]), None)
    report.add("idempotent", bad is None, f"e at node {bad}")

    bad = None
    for J in range(k):
        for K in range(k):
            if J != K and not (es[J] * es[K]).is_zero():
                bad = (J, K)
                break
        if bad:
            break
    report.add("orthogonal", bad is None, bad and f"e_J * e_K != 0 at {bad}")

    total = AlgebraElement(m, {})
    for e in es:
        total = total + e
    report.add("sum_to_one", total == one(m), "sum of all e_J is not 1")

    bad = None
    for J in range(k):
        e, T = es[J], sys.data[J].T
        if e.is_zero() or e.coefficient(T) != 1:
            bad = J
            break
        for y in e.coeffs:
            if y != T:
                cy = lat.content(y)
                if cy == J or not lat.preceq(J, cy):
                    bad = J
                    break
        if bad is not None:
            break
    report.add("nonzero_with_unit_leading_term", bad is None,
               f"node {bad}")

    report.add("count_equals_lattice", len(es) == k,
               f"{len(es)} idempotents for {k} nodes")

    bad = None
    for J in range(k):
        for K in range(k):
            if not lat.preceq(J, K) and not (sys.data[J].z * sys.data[K].z).is_zero():
                bad = (J, K)
                break
        if bad:
            break
    report.add("z_orthogonality", bad is None,
               bad and f"z_J * z_K != 0 at {bad} with J not preceq K")

    bad = None
    for J in range(k):
        for K in range(k):
            if not lat.preceq(J, K) and not (sys.data[J].P * sys.data[K].P).is_zero():
                bad = (J, K)
                break
        if bad:
            break
    report.add("p_orthogonality", bad is None,
               bad and f"P_J * P_K != 0 at {bad} with J not preceq K")

    bad = None
    for K in range(k):
        for J in range(k):
            if not lat.preceq(K, J) and not (es[K] * sys.data[J].P).is_zero():
                bad = (K, J)
                break
        if bad:
            break
    report.add("e_p_orthogonality", bad is None,
               bad and f"e_K * P_J != 0 at {bad} with K not preceq J")

    sys.verification = report
    return report

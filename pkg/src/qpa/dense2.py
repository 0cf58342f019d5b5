"""Dense two-copy oracle.

Independent cross-check for n = 2: builds the extremal covariant channels
on the symmetric/antisymmetric two-qudit blocks directly as Choi
operators (isotypic Casimir projectors of the output x conjugate-input
representation) and evaluates all-site / one-site fidelities by exact
rational linear algebra.  No Clebsch-Gordan coefficient formulas and no
Gelfand-Tsetlin machinery are used anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .tableaux import Spectrum, YoungDiagram

Sparse = dict[int, dict[int, Fraction]]


def sp_zero() -> Sparse:
    return {}

def sp_set(m: Sparse, r: int, c: int, v: Fraction) -> None:
    if v == 0:
        return
    row = m.setdefault(r, {})
    row[c] = row.get(c, Fraction(0)) + v
    if row[c] == 0:
        del row[c]
        if not row:
            del m[r]

def sp_identity(dim: int) -> Sparse:
    return {i: {i: Fraction(1)} for i in range(dim)}

def sp_add(a: Sparse, b: Sparse, coeff: Fraction = Fraction(1)) -> Sparse:
    out: Sparse = {r: dict(row) for r, row in a.items()}
    for r, row in b.items():
        for c, v in row.items():
            sp_set(out, r, c, coeff * v)
    return out

def sp_scale(a: Sparse, coeff: Fraction) -> Sparse:
    if coeff == 0:
        return {}
    return {r: {c: coeff * v for c, v in row.items()} for r, row in a.items()}

def sp_mul(a: Sparse, b: Sparse) -> Sparse:
    out: Sparse = {}
    for r, row in a.items():
        acc: dict[int, Fraction] = {}
        for k, av in row.items():
            brow = b.get(k)
            if not brow:
                continue
            for c, bv in brow.items():
                acc[c] = acc.get(c, Fraction(0)) + av * bv
        acc = {c: v for c, v in acc.items() if v != 0}
        if acc:
            out[r] = acc
    return out

def sp_transpose(a: Sparse) -> Sparse:
    out: Sparse = {}
    for r, row in a.items():
        for c, v in row.items():
            out.setdefault(c, {})[r] = v
    return out

def sp_trace(a: Sparse) -> Fraction:
    return sum((row.get(r, Fraction(0)) for r, row in a.items()), Fraction(0))

def sp_kron(a: Sparse, b: Sparse, dim_b: int) -> Sparse:
    out: Sparse = {}
    for ra, rowa in a.items():
        for ca, va in rowa.items():
            for rb, rowb in b.items():
                for cb, vb in rowb.items():
                    sp_set(out, ra * dim_b + rb, ca * dim_b + cb, va * vb)
    return out

def sp_equal(a: Sparse, b: Sparse) -> bool:
    keys = set(a) | set(b)
    for r in keys:
        cols = set(a.get(r, {})) | set(b.get(r, {}))
        for c in cols:
            if a.get(r, {}).get(c, Fraction(0)) != b.get(r, {}).get(c, Fraction(0)):
                return False
    return True


def _swap_projector(d: int, sign: int) -> Sparse:
    """(I +/- SWAP)/2 on C^d x C^d."""
    out: Sparse = {}
    half = Fraction(1, 2)
    for i in range(d):
        for j in range(d):
            idx = i * d + j
            swp = j * d + i
            sp_set(out, idx, idx, half)
            sp_set(out, idx, swp, sign * half)
    return out


def _block_projector(shape: YoungDiagram, d: int) -> tuple[Sparse, int]:
    """Projector of (C^d)^(x sites) onto the block labeled by the shape."""
    boxes = shape.n
    trimmed = tuple(r for r in shape.rows if r > 0) or (0,)
    if boxes == 1:
        return sp_identity(d), 1
    if boxes == 2 and trimmed == (2,):
        return _swap_projector(d, +1), 2
    if boxes == 2 and trimmed == (1, 1):
        return _swap_projector(d, -1), 2
    raise ValueError(f"unsupported block shape {shape} for the two-copy oracle")


def _e_matrix(d: int, a: int, b: int) -> Sparse:
    return {a: {b: Fraction(1)}}


def _site_rep(d: int, sites: int, a: int, b: int) -> Sparse:
    """E_ab acting as a sum over tensor legs."""
    single = _e_matrix(d, a, b)
    total: Sparse = {}
    for leg in range(sites):
        op = sp_identity(1)
        for pos in range(sites):
            nxt = single if pos == leg else sp_identity(d)
            op = sp_kron(op, nxt, d)
        total = sp_add(total, op)
    return total


def _dual_weight_casimir(env: YoungDiagram) -> Fraction:
    """gl(d) quadratic Casimir scalar of the dual weight of the environment."""
    d = env.d
    nu = tuple(-env.rows[d - 1 - i] for i in range(d))
    return sum(
        (Fraction(nu[i] * (nu[i] + d + 1 - 2 * (i + 1))) for i in range(d)),
        Fraction(0),
    )


def _vertical_strip_environments(sigma: YoungDiagram) -> list[YoungDiagram]:
    """Environments for the two-site antisymmetric output (vertical 2-strips)."""
    d = sigma.d
    out = []
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            rows = list(sigma.rows)
            rows[i - 1] -= 1
            rows[j - 1] -= 1
            if all(a >= b for a, b in zip(rows, rows[1:])):
                out.append(YoungDiagram(tuple(rows)))
    return out


def _symmetric_strip_environments(sigma: YoungDiagram, m: int) -> list[YoungDiagram]:
    from .protocol import enumerate_environments

    return [rem.environment(sigma) for rem in enumerate_environments(sigma, m)]


@lru_cache(maxsize=None)
def _choi_family(
    d: int, sigma_rows: tuple[int, ...], out_rows: tuple[int, ...]
) -> dict[tuple[int, ...], Sparse]:
    """Trace-preserving Choi operators of every extremal channel, keyed by environment."""
    sigma = YoungDiagram(sigma_rows)
    out_shape = YoungDiagram(out_rows)
    if sigma.n != 2:
        raise ValueError("oracle supports n = 2 only")
    out_sites = out_shape.n
    dim_in = d * d
    dim_out = d ** out_sites
    p_in, _ = _block_projector(sigma, d)
    p_out, _ = _block_projector(out_shape, d)
    support = sp_kron(p_out, p_in, dim_in)

    trimmed_out = tuple(r for r in out_shape.rows if r > 0) or (0,)
    if trimmed_out == (1, 1):
        envs = _vertical_strip_environments(sigma)
    else:
        envs = _symmetric_strip_environments(sigma, out_sites)
    if not envs:
        raise ValueError(f"no valid environments for {sigma} -> {out_shape}")

    # combined generators g(E_ab) = pi_out(E_ab) (x) I - I (x) pi_in(E_ab)^T
    casimir: Sparse = {}
    eye_in = sp_identity(dim_in)
    eye_out = sp_identity(dim_out)
    gens: dict[tuple[int, int], Sparse] = {}
    for a in range(d):
        for b in range(d):
            g_out = sp_kron(_site_rep(d, out_sites, a, b), eye_in, dim_in)
            g_in = sp_kron(eye_out, sp_transpose(_site_rep(d, 2, a, b)), dim_in)
            gens[(a, b)] = sp_add(g_out, g_in, Fraction(-1))
    for a in range(d):
        for b in range(d):
            casimir = sp_add(casimir, sp_mul(gens[(a, b)], gens[(b, a)]))
    casimir = sp_mul(sp_mul(support, casimir), support)

    eigvals = {env.rows: _dual_weight_casimir(env) for env in envs}
    if len(set(eigvals.values())) != len(eigvals):
        raise RuntimeError(f"Casimir eigenvalues collide for {sigma} -> {out_shape}")

    family: dict[tuple[int, ...], Sparse] = {}
    total: Sparse = {}
    for env in envs:
        proj = support
        c_here = eigvals[env.rows]
        for other in envs:
            if other.rows == env.rows:
                continue
            c_other = eigvals[other.rows]
            factor = sp_add(casimir, sp_scale(support, -c_other))
            proj = sp_scale(sp_mul(proj, factor), 1 / (c_here - c_other))
        if not sp_equal(sp_mul(proj, proj), proj):
            raise RuntimeError("isotypic projector is not idempotent")
        total = sp_add(total, proj)
        # rescale to a trace-preserving Choi operator: Tr_out K = P_in
        scale = sp_trace(proj) / sp_trace(p_in)
        choi = sp_scale(proj, 1 / scale)
        if not sp_equal(_partial_trace_out(choi, dim_out, dim_in), p_in):
            raise RuntimeError("Choi operator is not trace preserving on the block")
        family[env.rows] = choi
    if not sp_equal(total, support):
        raise RuntimeError("isotypic projectors do not resolve the support")
    return family


def _partial_trace_out(j: Sparse, dim_out: int, dim_in: int) -> Sparse:
    out: Sparse = {}
    for r, row in j.items():
        o1, i1 = divmod(r, dim_in)
        for c, v in row.items():
            o2, i2 = divmod(c, dim_in)
            if o1 == o2:
                sp_set(out, i1, i2, v)
    return out


def _apply_choi(choi: Sparse, state: Sparse, dim_out: int, dim_in: int) -> Sparse:
    """T(state) = Tr_in[(I (x) state^T) Choi]."""
    st = sp_transpose(state)
    out: Sparse = {}
    for r, row in choi.items():
        o1, i1 = divmod(r, dim_in)
        for c, v in row.items():
            o2, i2 = divmod(c, dim_in)
            w = st.get(i2, {}).get(i1)
            if w:
                sp_set(out, o1, o2, v * w)
    return out


def _trace_second_site(op: Sparse, d: int) -> Sparse:
    out: Sparse = {}
    for r, row in op.items():
        s1, s2 = divmod(r, d)
        for c, v in row.items():
            t1, t2 = divmod(c, d)
            if s2 == t2:
                sp_set(out, s1, t1, v)
    return out


def dense_two_copy_fidelity(
    sigma: YoungDiagram,
    output_shape: YoungDiagram,
    env: YoungDiagram,
    k: int,
    spectrum: Spectrum,
    objective: str = "all",
) -> Fraction:
    """Sector-wise fidelity of an extremal two-copy channel, by dense algebra.

    The input sector state is the normalized block of rho^(x2); the channel
    is the extremal covariant map determined by the environment label.
    """
    d = spectrum.d
    if sigma.d != d or env.d != d or output_shape.d != d:
        raise ValueError("shapes and spectrum must agree on d")
    if sigma.n != 2:
        raise ValueError("oracle supports n = 2 only")
    if objective not in ("all", "one"):
        raise ValueError(f"unknown objective {objective!r}")
    family = _choi_family(d, sigma.rows, output_shape.rows)
    if env.rows not in family:
        raise ValueError(f"{env} is not a valid environment for {sigma} -> {output_shape}")
    dim_in = d * d
    out_sites = output_shape.n
    dim_out = d ** out_sites

    p_in, _ = _block_projector(sigma, d)
    rho2: Sparse = {}
    for i in range(d):
        for j in range(d):
            sp_set(rho2, i * d + j, i * d + j, spectrum.p(i + 1) * spectrum.p(j + 1))
    block = sp_mul(sp_mul(p_in, rho2), p_in)
    norm = sp_trace(block)
    if norm == 0:
        raise ZeroDivisionError(f"sector {sigma} has zero mass for {spectrum}")
    state = sp_scale(block, 1 / norm)

    produced = _apply_choi(family[env.rows], state, dim_out, dim_in)
    if objective == "one" and out_sites == 2:
        produced = _trace_second_site(produced, d)
        target_index = k - 1
    else:
        target_index = 0
        for _ in range(out_sites):
            target_index = target_index * d + (k - 1)
    return produced.get(target_index, {}).get(target_index, Fraction(0))

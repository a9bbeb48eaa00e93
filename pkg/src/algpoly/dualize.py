"""Incremental cone dualization by Fourier-Motzkin elimination.

Given generators x_1..x_n of a cone, the engine maintains the extreme rays
sigma_1..sigma_t of the dual cone of the processed prefix, together with an
incidence bitset per sigma recording the processed generators it vanishes
on.  A new generator splits the sigmas by the exact sign of sigma(x); each
positive/negative pair whose common incidence passes an adjacency test
contributes the combination sigma_i(x)*sigma_j - sigma_j(x)*sigma_i.

Every stored vector is normalized in two steps: division by the absolute
value of its last nonzero component, then clearing of all integer
denominators by their lcm.  This makes representatives canonical up to the
positive scalar, so duplicate detection is structural equality.

When every current facet is simplicial (exactly d-1 incident generators),
adjacency reduces to bitset work on (d-2)-subsets shared by exactly two
facets, which keeps cyclic-polytope runs feasible.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import gcd, lcm

from . import linalg
from .errors import ShapeMismatch, ZeroVector

_PARALLEL_THRESHOLD = 64


@dataclass
class ConeInput:
    """Generators of a cone, or constraint rows for the dual direction."""

    field: object
    dim: int
    generators: list | None = None
    constraints: list | None = None

    def __post_init__(self):
        rows = self.generators if self.generators is not None else self.constraints
        if rows is None:
            raise ShapeMismatch("either generators or constraints are required")
        for row in rows:
            if len(row) != self.dim:
                raise ShapeMismatch(
                    f"row of width {len(row)} in ambient dimension {self.dim}"
                )


def normalize(vec, field=None):
    """Two-step canonical scaling of a nonzero vector.

    Step 1 divides by the absolute value of the last nonzero component; step
    2 clears all integer denominators by their lcm.  Over a degree-1 field
    the same representative is obtained directly by dividing the cleared
    integer vector by the gcd of its entries.
    """
    field = field or vec[0].field
    last = None
    for x in reversed(vec):
        if x.sign() != 0:
            last = x
            break
    if last is None:
        raise ZeroVector("normalize of the zero vector")
    if field.degree == 1:
        big = 1
        for x in vec:
            big = lcm(big, x.den)
        ints = [x.coeffs[0] * (big // x.den) for x in vec]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return tuple(field.from_rational(v // g) for v in ints)
    inv_last = abs(last).inv()
    scaled = [x * inv_last for x in vec]
    big = 1
    for x in scaled:
        big = lcm(big, x.den)
    if big == 1:
        return tuple(scaled)
    return tuple(x * big for x in scaled)


@dataclass
class DualizationState:
    """Support forms of the dual of the processed generator prefix."""

    field: object
    dim: int
    gens: list  # all (projected, normalized) generators, full input order
    processed: int  # number of generators already folded in
    sigmas: list  # current extreme rays of the dual cone
    incidence: list  # per sigma: bitset of processed generators it vanishes on
    simplicial: list  # per sigma: whether exactly dim-1 incident generators
    triangulation: list | None = None  # simplices as index tuples, placing order


def initial_dual(gens, basis_idx, field, track_triangulation=False):
    """Dual of the simplicial cone spanned by the chosen basis generators."""
    d = len(basis_idx)
    basis_rows = [list(gens[i]) for i in basis_idx]
    inverse = linalg.invert(basis_rows)
    sigmas = []
    incidence = []
    for j in range(d):
        col = tuple(inverse[i][j] for i in range(d))
        sigmas.append(normalize(col, field))
        mask = 0
        for t, i in enumerate(basis_idx):
            if t != j:
                mask |= 1 << i
        incidence.append(mask)
    state = DualizationState(
        field=field,
        dim=d,
        gens=gens,
        processed=len(basis_idx),
        sigmas=sigmas,
        incidence=incidence,
        simplicial=[True] * d,
        triangulation=[tuple(basis_idx)] if track_triangulation else None,
    )
    return state


def is_extreme(idx, sigmas, incidence, gens, dim, skip_rank=False):
    """Extremality of candidate `idx` among the given support forms.

    The cheap test first: the incidence set must not be contained in any
    other form's incidence set.  Then the incident generators must have rank
    dim-1; the rank check is skipped when the caller has already certified
    it through simplicial bookkeeping.
    """
    mask = incidence[idx]
    for j, other in enumerate(incidence):
        if j != idx and mask & other == mask:
            return False
    if skip_rank:
        return True
    rows = [gens[t] for t in _bits(mask)]
    if not rows:
        return dim <= 1
    return linalg.rank(rows) == dim - 1


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _dot(u, v):
    field = u[0].field
    if field.degree == 1:
        # normalized vectors carry denominator 1, so this is integer work
        num, den = 0, 1
        for a, b in zip(u, v):
            n = a.coeffs[0] * b.coeffs[0]
            if n:
                d = a.den * b.den
                if d == den:
                    num += n
                else:
                    num, den = num * d + n * den, den * d
        return field._make((num,), den)
    acc = None
    for a, b in zip(u, v):
        t = a * b
        acc = t if acc is None else acc + t
    return acc


def _combine(vec_i, vec_j, val_i, val_j, field):
    # val_i > 0 > val_j, so this is a positive combination vanishing on x_new
    lam = tuple(val_i * sj - val_j * si for si, sj in zip(vec_i, vec_j))
    return normalize(lam, field)


def _simplicial_pairs(state, pos, neg, zero):
    """Adjacent positive/negative pairs via shared ridges.

    Valid when every current facet is simplicial: a (d-2)-subset of
    generators is a ridge iff it is a drop-one subset of a facet incidence,
    and two facets are adjacent iff they are the only two containing it.
    """
    ridge_owners = {}
    for t, mask in enumerate(state.incidence):
        for b in _bits(mask):
            ridge = mask ^ (1 << b)
            ridge_owners.setdefault(ridge, []).append(t)
    pos_set, neg_set = set(pos), set(neg)
    pairs = []
    for ridge, owners in ridge_owners.items():
        if len(owners) != 2:
            continue
        s, t = owners
        if s in pos_set and t in neg_set:
            pairs.append((s, t))
        elif t in pos_set and s in neg_set:
            pairs.append((t, s))
    pairs.sort()
    return pairs


def _general_pairs(state, pos, neg):
    """Positive/negative pairs surviving the count and domination filters."""
    d = state.dim
    incidence = state.incidence
    count_floor = max(d - 3, 0)
    pairs = []
    for i in pos:
        inc_i = incidence[i]
        for j in neg:
            common = inc_i & incidence[j]
            if common.bit_count() < count_floor:
                continue
            dominated = False
            for l, other in enumerate(incidence):
                if l != i and l != j and common & other == common:
                    dominated = True
                    break
            if dominated:
                continue
            pairs.append((i, j))
    return pairs


def fm_step(state, new_idx, workers=1):
    """Extend the processed cone by generator `new_idx` and shrink its dual."""
    x = state.gens[new_idx]
    field = state.field
    d = state.dim
    values = [_dot(s, x) for s in state.sigmas]
    signs = [v.sign() for v in values]
    pos = [t for t, s in enumerate(signs) if s > 0]
    neg = [t for t, s in enumerate(signs) if s < 0]
    zero = [t for t, s in enumerate(signs) if s == 0]
    new_bit = 1 << new_idx

    if not neg:
        # generator already inside the cone; hyperplane set untouched
        for t in zero:
            state.incidence[t] |= new_bit
            state.simplicial[t] = state.incidence[t].bit_count() == d - 1
        state.processed += 1
        return state

    if state.triangulation is not None:
        _extend_triangulation(state, new_idx, neg)

    all_simplicial = d >= 2 and all(state.simplicial)
    if all_simplicial:
        pairs = _simplicial_pairs(state, pos, neg, zero)
        skip_rank = True
    else:
        pairs = _general_pairs(state, pos, neg)
        skip_rank = False

    def make_candidates(chunk):
        out = []
        for i, j in chunk:
            lam = _combine(state.sigmas[i], state.sigmas[j], values[i], values[j], field)
            out.append((i, j, lam))
        return out

    if workers > 1 and len(pairs) >= _PARALLEL_THRESHOLD:
        chunk_size = max(1, len(pairs) // (workers * 4))
        chunks = [pairs[k : k + chunk_size] for k in range(0, len(pairs), chunk_size)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            produced = [c for part in pool.map(make_candidates, chunks) for c in part]
    else:
        produced = make_candidates(pairs)

    new_sigmas = [state.sigmas[t] for t in pos]
    new_incidence = [state.incidence[t] for t in pos]
    for t in zero:
        new_sigmas.append(state.sigmas[t])
        new_incidence.append(state.incidence[t] | new_bit)

    seen = {}
    cand_sigmas = []
    cand_incidence = []
    cand_parents = []
    for i, j, lam in produced:
        if lam in seen:
            continue
        seen[lam] = True
        common = state.incidence[i] & state.incidence[j]
        cand_sigmas.append(lam)
        cand_incidence.append(common | new_bit)
        cand_parents.append((i, j))

    if skip_rank:
        keep = range(len(cand_sigmas))
    else:
        merged_incidence = new_incidence + cand_incidence
        merged_sigmas = new_sigmas + cand_sigmas
        offset = len(new_sigmas)
        keep = [
            k
            for k in range(len(cand_sigmas))
            if is_extreme(
                offset + k,
                merged_sigmas,
                merged_incidence,
                state.gens,
                d,
                # simplicial parents with a full-size common set certify the
                # rank: a subset of d-1 independent generators is independent
                skip_rank=state.simplicial[cand_parents[k][0]]
                and state.simplicial[cand_parents[k][1]]
                and (cand_incidence[k].bit_count() == d - 1),
            )
        ]
    for k in keep:
        new_sigmas.append(cand_sigmas[k])
        new_incidence.append(cand_incidence[k])

    state.sigmas = new_sigmas
    state.incidence = new_incidence
    state.simplicial = [m.bit_count() == d - 1 for m in new_incidence]
    state.processed += 1
    return state


def _extend_triangulation(state, new_idx, visible):
    """Cone over the restrictions of existing simplices to visible facets."""
    d = state.dim
    added = []
    for t in visible:
        facet_mask = state.incidence[t]
        for simplex in state.triangulation:
            on_facet = [i for i in simplex if facet_mask >> i & 1]
            if len(on_facet) == d - 1:
                added.append(tuple(on_facet) + (new_idx,))
    state.triangulation.extend(added)


@dataclass
class DualizationResult:
    """Output of a full dualization run."""

    field: object
    dim: int  # ambient dimension
    span_rank: int  # rank of the input rows
    dual_rank: int  # rank of the support forms within the span
    generators: list  # normalized deduped input rows, ambient coordinates
    extreme: list  # indices into `generators` that are extreme rays
    support_hyperplanes: list  # normalized forms, ambient coordinates
    incidence: list  # per hyperplane: bitset over `generators`
    triangulation: list | None = None  # (index tuple, determinant) pairs

    @property
    def pointed(self):
        return self.dual_rank == self.span_rank

    @property
    def lineality_dim(self):
        return self.span_rank - self.dual_rank

    def extreme_rays(self):
        return [self.generators[i] for i in self.extreme]


def _insertion_order(gens_r, basis_idx, order):
    rest = [i for i in range(len(gens_r)) if i not in set(basis_idx)]
    if order == "input" or not rest:
        return rest
    if order != "sorted":
        raise ValueError(f"unknown insertion order {order!r}")
    return rest  # dynamic selection happens in the driver loop


def dualize(cone, track_triangulation=False, order="input", workers=1):
    """Extreme rays, support hyperplanes, and incidence of a cone.

    With `generators` input this is a convex hull computation; with
    `constraints` input the same engine runs on the constraint rows and the
    roles of the two output families swap (vertex enumeration).
    """
    field = cone.field
    rows = cone.generators if cone.generators is not None else cone.constraints
    normalized = []
    index_of = {}
    for row in rows:
        if all(x.sign() == 0 for x in row):
            continue  # zero rows generate nothing
        v = normalize(tuple(row), field)
        if v not in index_of:
            index_of[v] = len(normalized)
            normalized.append(v)
    if not normalized:
        return DualizationResult(
            field, cone.dim, 0, 0, [], [], [], [], [] if track_triangulation else None
        )

    basis, projected = linalg.restrict_to_span(normalized)
    r = basis.rank
    basis_idx = linalg.find_basis_among(projected, r)
    state = initial_dual(projected, basis_idx, field, track_triangulation)

    rest = _insertion_order(projected, basis_idx, order)
    if order == "sorted":
        remaining = list(rest)
        while remaining:
            best = None
            best_key = None
            for i in remaining:
                hits = sum(
                    1 for s in state.sigmas if _dot(s, projected[i]).sign() == 0
                )
                key = (-hits, i)
                if best_key is None or key < best_key:
                    best, best_key = i, key
            fm_step(state, best, workers=workers)
            remaining.remove(best)
    else:
        for i in rest:
            fm_step(state, i, workers=workers)

    sigmas = state.sigmas
    incidence = state.incidence
    if not sigmas:
        dual_rank = 0
    elif linalg.rank_reaches(sigmas, r):
        dual_rank = r
    else:
        dual_rank = linalg.rank(sigmas)

    # extreme input rays: incident support forms must have rank r-1
    # (never more, since they all vanish on the generator)
    extreme = []
    if dual_rank == r:
        for i in range(len(projected)):
            incident = (
                sigmas[t] for t in range(len(sigmas)) if incidence[t] >> i & 1
            )
            if linalg.rank_reaches(incident, r - 1):
                extreme.append(i)

    triangulation = None
    if track_triangulation and state.triangulation is not None:
        triangulation = [
            (simplex, linalg.det([list(projected[i]) for i in simplex]))
            for simplex in state.triangulation
        ]

    ambient_sigmas = [basis.scatter(s) for s in sigmas]
    return DualizationResult(
        field=field,
        dim=cone.dim,
        span_rank=r,
        dual_rank=dual_rank,
        generators=normalized,
        extreme=extreme,
        support_hyperplanes=ambient_sigmas,
        incidence=list(incidence),
        triangulation=triangulation,
    )

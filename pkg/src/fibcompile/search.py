"""Pruned brute-force search for three-anyon weave approximations.

The enumerator walks braid words factor by factor while carrying the
running quaternion product, so scoring a word costs one quaternion
multiplication beyond its parent prefix.  Two algebraic prunings shrink
the walk without shrinking the candidate pool:

* generator-swap symmetry: only words in swap-canonical form (body
  starting on generator 1) are walked, and each is scored against both
  the target and the Gamma-conjugated target, which accounts for the
  swapped word exactly.
* Hermitian targets: a word and its inverse are equidistant from any
  Hermitian target, so only the lexicographically smaller member of each
  inverse pair is walked and all four related candidates are emitted.

Sharding partitions the walk by enumeration rank modulo the shard count;
shards run independently and merge() reassembles the unsharded result.
"""

import hashlib
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .model import DEFAULT_HANDEDNESS, Handedness
from .su2 import (
    IDENTITY_Q,
    block_matrix,
    generator_quaternion,
    matrix_quaternion,
    su2_distance,
)
from .words import BraidWord, WeaveEndpoint, gamma_conjugate

# Even powers reduced mod 10: sigma^6 ~ sigma^-4, sigma^8 ~ sigma^-2 up to
# phase, so {+-2, +-4} covers the paper's {2, 4, 6, 8} alphabet.
BODY_POWERS = (-4, -2, 2, 4)
ODD_SIGNS = (-1, 1)
# General (non-weave) alphabet: one representative per nonzero residue
# class mod 10; +5 and -5 differ only by a central sign.
GENERAL_POWERS = (-4, -3, -2, -1, 1, 2, 3, 4, 5)
HERMITIAN_TOL = 1e-12
DEFAULT_TOP_K = 32

_PERM_ENDPOINT = {
    (0, 1, 2): WeaveEndpoint.SAME_STRAND,
    (1, 2, 0): WeaveEndpoint.TOP_TO_BOTTOM,
    (2, 0, 1): WeaveEndpoint.TOP_TO_BOTTOM,
}


class InfeasibleSearchError(RuntimeError):
    """The endpoint constraint cannot be met within the length budget."""


@dataclass(frozen=True)
class Candidate:
    word: BraidWord
    error: float
    winding: int


@dataclass(frozen=True)
class SearchResult:
    candidates: tuple
    enumerated_count: int
    fingerprint: str


@dataclass(frozen=True, eq=False)
class WeaveSearchSpec:
    target: np.ndarray
    length_budget: int
    endpoint: WeaveEndpoint
    weave_only: bool = True
    shard: tuple = (0, 1)
    top_k: int = DEFAULT_TOP_K
    handedness: Handedness = DEFAULT_HANDEDNESS

    def __post_init__(self):
        target = np.asarray(self.target, dtype=complex)
        if target.shape != (2, 2):
            raise ValueError("search target must be a 2x2 matrix")
        if np.max(np.abs(target @ target.conj().T - np.eye(2))) > 1e-9:
            raise ValueError("search target must be unitary")
        object.__setattr__(self, "target", target)
        if self.length_budget < 1:
            raise ValueError("length_budget must be at least 1")
        k, n = self.shard
        if not (isinstance(k, int) and isinstance(n, int) and 0 <= k < n):
            raise ValueError(f"shard index must satisfy 0 <= k < N, got {self.shard}")
        if self.top_k < 1:
            raise ValueError("top_k must be at least 1")

    def fingerprint(self):
        """Hash of the spec with the shard index left out, so all shards of
        one search share it."""
        payload = {
            "target": [
                ["%.17g%+.17gj" % (z.real, z.imag) for z in row]
                for row in self.target
            ],
            "length_budget": self.length_budget,
            "endpoint": self.endpoint.value,
            "weave_only": self.weave_only,
            "shard_total": self.shard[1],
            "top_k": self.top_k,
            "handedness": self.handedness.name,
        }
        text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(text.encode()).hexdigest()


def _factor_cache(handedness):
    cache = {}
    for gen in (1, 2):
        for power in set(BODY_POWERS) | set(GENERAL_POWERS) | {-1, 1}:
            cache[(gen, power)] = generator_quaternion(gen, power, handedness)
    return cache


def _iter_body_only(budget, qc):
    def rec(factors, q, used, gen):
        for p in BODY_POWERS:
            if used + abs(p) > budget:
                continue
            nf = factors + ((gen, p),)
            nq = qc[(gen, p)] * q
            yield nf, nq
            yield from rec(nf, nq, used + abs(p), 3 - gen)

    yield from rec((), IDENTITY_Q, 0, 1)


def _iter_bodied(budget, prefix_gen, prefix_sign, suffix_gen, prefix_q, qc):
    def close(factors, q, tail_gen, tail_sign):
        if suffix_gen == tail_gen:
            if len(factors) == 2 and prefix_gen == suffix_gen:
                # Prefix, single body factor, and suffix all on one
                # generator would merge to a bare even power that the
                # body-only walk already covers (or its mod-10 twin).
                return
            # A suffix landing on the tail generator must share its
            # crossing sense, so normalization merges without cancelling.
            signs = (tail_sign,)
        else:
            signs = ODD_SIGNS
        for s in signs:
            yield factors + ((suffix_gen, s),), qc[(suffix_gen, s)] * q

    def rec(factors, q, used, gen, tail_gen, tail_sign):
        if used + 1 <= budget:
            yield from close(factors, q, tail_gen, tail_sign)
        for p in BODY_POWERS:
            if used + abs(p) + 1 > budget:
                continue
            nf = factors + ((gen, p),)
            nq = qc[(gen, p)] * q
            yield from rec(nf, nq, used + abs(p), 3 - gen, gen, 1 if p > 0 else -1)

    for p in BODY_POWERS:
        if prefix_gen == 1 and (p > 0) != (prefix_sign > 0):
            continue
        if 2 + abs(p) > budget:
            continue
        factors = ((prefix_gen, prefix_sign), (1, p))
        q = qc[(1, p)] * prefix_q
        yield from rec(factors, q, 1 + abs(p), 2, 1, 1 if p > 0 else -1)


def _iter_weave_stream(budget, endpoint, qc):
    """Swap-canonical weave words (body starting on generator 1) in a fixed
    deterministic order; yields (factors, quaternion)."""
    if endpoint is WeaveEndpoint.SAME_STRAND:
        yield (), IDENTITY_Q
        yield from _iter_body_only(budget, qc)
    for prefix_gen in (1, 2):
        for prefix_sign in ODD_SIGNS:
            if endpoint is WeaveEndpoint.SAME_STRAND:
                suffix_gen = prefix_gen
            else:
                suffix_gen = 3 - prefix_gen
            prefix_q = qc[(prefix_gen, prefix_sign)]
            if (
                endpoint is WeaveEndpoint.TOP_TO_BOTTOM
                and prefix_gen == 1
                and budget >= 2
            ):
                # Bodyless crossings: the weft passes straight through.
                for s in ODD_SIGNS:
                    factors = ((1, prefix_sign), (2, s))
                    yield factors, qc[(2, s)] * prefix_q
            yield from _iter_bodied(
                budget, prefix_gen, prefix_sign, suffix_gen, prefix_q, qc
            )


def _swap_positions(perm, gen):
    a, b = gen - 1, gen
    return tuple(b if x == a else a if x == b else x for x in perm)


def _iter_general_stream(budget, endpoint, qc):
    """Swap-canonical general braid words (first factor on generator 1),
    filtered to the requested endpoint permutation class."""

    def rec(factors, q, used, gen, perm):
        for p in GENERAL_POWERS:
            if used + abs(p) > budget:
                continue
            nf = factors + ((gen, p),)
            nq = qc[(gen, p)] * q
            nperm = perm if p % 2 == 0 else _swap_positions(perm, gen)
            if _PERM_ENDPOINT.get(nperm) is endpoint:
                yield nf, nq
            yield from rec(nf, nq, used + abs(p), 3 - gen, nperm)

    if endpoint is WeaveEndpoint.SAME_STRAND:
        yield (), IDENTITY_Q
    yield from rec((), IDENTITY_Q, 0, 1, (0, 1, 2))


def _weave_canonical(word):
    """True if the word's body (even-power core) starts on generator 1."""
    factors = word.factors
    if not factors:
        return True
    gen, power = factors[0]
    if power % 2 == 0 or abs(power) >= 3:
        return gen == 1
    if len(factors) == 2 and abs(factors[1][1]) == 1:
        return gen == 1
    # Bare odd head is a detached prefix; the body starts on the other
    # generator.
    return gen == 2


def _general_canonical(word):
    return not word.factors or word.factors[0][0] == 1


def _inverse_class(word, weave_only):
    """The inverse word, mapped back into the enumeration alphabet (only
    the power -5, absent from the alphabet, needs lifting by the central
    sigma^10 = -1)."""
    inv = word.inverse()
    if weave_only:
        return inv
    return BraidWord(tuple((g, 5 if p == -5 else p) for g, p in inv.factors))


def _canonical_rep(word, weave_only):
    canonical = _weave_canonical(word) if weave_only else _general_canonical(word)
    return word if canonical else gamma_conjugate(word)


def _emit(pool, word, error):
    key = word.factors
    prev = pool.get(key)
    if prev is None or error < prev[1]:
        pool[key] = (word, error)


def _rank_candidates(entries):
    return sorted(entries, key=lambda e: (e[1], e[0].length, e[0].factors))


def _search_single(spec, hermitian_pruning):
    qc = _factor_cache(spec.handedness)
    q_target = matrix_quaternion(spec.target)
    gamma_m = block_matrix(BraidWord(((1, 1), (2, 1), (1, 1))), spec.handedness)
    q_swapped = matrix_quaternion(gamma_m @ spec.target @ gamma_m.conj().T)
    hermitian = (
        hermitian_pruning
        and np.max(np.abs(spec.target - spec.target.conj().T)) < HERMITIAN_TOL
    )

    if spec.weave_only:
        stream = _iter_weave_stream(spec.length_budget, spec.endpoint, qc)
    else:
        stream = _iter_general_stream(spec.length_budget, spec.endpoint, qc)

    shard_index, shard_total = spec.shard
    pool = {}
    enumerated = 0
    rank = 0
    for factors, q in stream:
        owned = rank % shard_total == shard_index
        rank += 1
        if not owned:
            continue
        enumerated += 1
        word = BraidWord(factors)
        inverse = None
        if hermitian:
            inverse = _inverse_class(word, spec.weave_only)
            rep = _canonical_rep(inverse, spec.weave_only)
            if rep.factors < word.factors:
                continue
        error = su2_distance(q, q_target)
        error_swapped = su2_distance(q, q_swapped)
        _emit(pool, word, error)
        _emit(pool, gamma_conjugate(word), error_swapped)
        if inverse is not None:
            # distance(B, H) = distance(B^-1, H) for Hermitian H, so the
            # inverse pair reuses the two scores already in hand.
            _emit(pool, inverse, error)
            _emit(pool, gamma_conjugate(inverse), error_swapped)

    ranked = _rank_candidates(pool.values())[: spec.top_k]
    candidates = tuple(Candidate(w, err, w.winding) for w, err in ranked)
    return SearchResult(candidates, enumerated, spec.fingerprint())


def search(spec, *, hermitian_pruning=True, threads=1):
    """Enumerate, score, and rank weave approximations of spec.target.

    Returns the top_k candidates by phase-insensitive distance, ties
    broken by length then lexicographic factor order.  hermitian_pruning
    exists so the inverse-pair rule can be switched off for equivalence
    checks; it never changes the result.
    """
    if (
        spec.endpoint is WeaveEndpoint.TOP_TO_BOTTOM
        and spec.length_budget < 2
    ):
        raise InfeasibleSearchError(
            "a top-to-bottom weave needs at least two crossings, budget is "
            f"{spec.length_budget}"
        )
    if threads <= 1:
        return _search_single(spec, hermitian_pruning)

    shard_index, shard_total = spec.shard
    subs = [
        replace(spec, shard=(shard_index + t * shard_total, shard_total * threads))
        for t in range(threads)
    ]
    with ThreadPoolExecutor(max_workers=threads) as pool_exec:
        parts = list(
            pool_exec.map(lambda s: _search_single(s, hermitian_pruning), subs)
        )
    pool = {}
    for part in parts:
        for cand in part.candidates:
            _emit(pool, cand.word, cand.error)
    ranked = _rank_candidates(pool.values())[: spec.top_k]
    candidates = tuple(Candidate(w, err, w.winding) for w, err in ranked)
    total = sum(part.enumerated_count for part in parts)
    return SearchResult(candidates, total, spec.fingerprint())


def merge(results, top_k=None):
    """Combine shard results of one search: dedupe by word, keep the global
    top_k, sum enumerated counts.  Associative and commutative."""
    if not results:
        raise ValueError("merge needs at least one result")
    fingerprint = results[0].fingerprint
    for result in results[1:]:
        if result.fingerprint != fingerprint:
            raise ValueError("cannot merge results with mismatched spec fingerprints")
    pool = {}
    for result in results:
        for cand in result.candidates:
            _emit(pool, cand.word, cand.error)
    ranked = _rank_candidates(pool.values())
    if top_k is not None:
        ranked = ranked[:top_k]
    candidates = tuple(Candidate(w, err, w.winding) for w, err in ranked)
    total = sum(result.enumerated_count for result in results)
    return SearchResult(candidates, total, fingerprint)


def result_to_json(result):
    return {
        "fingerprint": result.fingerprint,
        "enumerated_count": result.enumerated_count,
        "candidates": [
            {"word": c.word.to_string(), "error": c.error, "winding": c.winding}
            for c in result.candidates
        ],
    }


def result_from_json(payload):
    candidates = tuple(
        Candidate(BraidWord.from_string(c["word"]), float(c["error"]), int(c["winding"]))
        for c in payload["candidates"]
    )
    return SearchResult(
        candidates, int(payload["enumerated_count"]), payload["fingerprint"]
    )

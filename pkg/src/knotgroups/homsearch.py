"""Enumerate and count homomorphisms into finite permutation groups.

Given a presentation P and a finite group A, a map on generators extends to
a homomorphism iff every relator evaluates to the identity.  Two engines
compute the number of such maps, optionally with some generator images
pinned:

``naive``
    Walks the full product of |A|^(number of unpinned generators)
    assignments and checks every relator on each.  Transparent, and the
    parity oracle for the other engine.

``backtrack``
    Assigns generators in declaration order and evaluates each relator as
    soon as its last generator receives a value (a static trigger table is
    precomputed per presentation), pruning dead branches early.

Both engines return identical counts; the test suite leans on that.

The meridian invariant of a marked presentation counts homomorphisms whose
value on the marker word is a prescribed element.  A marker that is a bare
generator (or its inverse) is pinned directly; any other marker word is
handled by filtering complete assignments, which is slower but exact.

Parallel runs split the first unpinned generator's value range across
workers; partial counts are summed in a fixed chunk order, so results never
depend on scheduling.  Presentations and groups are immutable and shared;
each worker owns its private assignment stack.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import (
    BudgetExceededError,
    GroupTooLargeError,
    InvalidParameterError,
    NotAMemberError,
    UnknownGeneratorError,
    UnknownMarkerError,
)
from .permgroups import FiniteGroup, Permutation, are_conjugate
from .presentations import Presentation
from .words import Word

DEFAULT_NODE_BUDGET = 10**9
DEFAULT_NAIVE_CAP = 10**7

Assignment = Dict[str, Permutation]


@dataclass
class SearchStats:
    """Work counters; additive across workers."""

    nodes: int = 0
    relator_checks: int = 0

    def merge(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.relator_checks += other.relator_checks


@dataclass
class HomSearchResult:
    count: int
    assignments: Optional[List[Assignment]]
    stats: SearchStats = field(default_factory=SearchStats)


def check_constraint(presentation: Presentation, group: FiniteGroup,
                     pins: Mapping[str, Permutation]) -> Dict[str, Permutation]:
    """Validate a pinning constraint against presentation and group."""
    out = {}
    for gen, value in pins.items():
        if gen not in presentation.generators:
            raise UnknownGeneratorError(f"pinned generator {gen!r} not declared")
        if value not in group:
            raise NotAMemberError(
                f"pinned value {value} is not an element of {group.label}"
            )
        out[gen] = value
    return out


def is_homomorphism(presentation: Presentation, group: FiniteGroup,
                    assignment: Mapping[str, Permutation]) -> bool:
    """Whether a total generator assignment satisfies every relator."""
    ident = group.identity
    return all(
        rel.evaluate(assignment, group) == ident for rel in presentation.relators
    )


def _relator_triggers(presentation: Presentation,
                      relators: Sequence[Word]) -> List[List[Word]]:
    """triggers[i] = relators whose generators are all assigned once the
    generator at position i receives its value."""
    triggers: List[List[Word]] = [[] for _ in presentation.generators]
    for rel in relators:
        last = max(presentation.generator_index(g) for g in rel.generators())
        triggers[last].append(rel)
    return triggers


def _run_search(presentation: Presentation, group: FiniteGroup,
                pins: Mapping[str, Permutation], mode: str,
                materialize: bool,
                leaf_filter: Optional[Callable[[Assignment], bool]],
                node_budget: int,
                restrict: Optional[Tuple[str, Sequence[Permutation]]],
                relators: Sequence[Word],
                ) -> HomSearchResult:
    """Sequential search over one (possibly restricted) branch.

    Node and relator-check counters are defined so the totals are identical
    however the first unpinned generator's values are partitioned: forced
    (pinned) assignments are not nodes, and backtracking only sees relators
    with at least one unpinned generator (fully pinned relators are checked
    once by the caller).
    """
    gens = presentation.generators
    ident = group.identity
    stats = SearchStats()
    collected: Optional[List[Assignment]] = [] if materialize else None
    count = 0

    def values_for(gen: str) -> Sequence[Permutation]:
        if gen in pins:
            return (pins[gen],)
        if restrict is not None and restrict[0] == gen:
            return restrict[1]
        return group.elements

    def spend_node() -> None:
        stats.nodes += 1
        if stats.nodes > node_budget:
            raise BudgetExceededError(
                f"search exceeded node budget {node_budget}"
            )

    def accept(assignment: Assignment) -> None:
        nonlocal count
        if leaf_filter is not None and not leaf_filter(assignment):
            return
        count += 1
        if collected is not None:
            collected.append(dict(assignment))

    if mode == "naive":
        def product_walk(assignment: Assignment, pos: int) -> None:
            if pos == len(gens):
                spend_node()
                for rel in relators:
                    stats.relator_checks += 1
                    if rel.evaluate(assignment, group) != ident:
                        return
                accept(assignment)
                return
            gen = gens[pos]
            for value in values_for(gen):
                assignment[gen] = value
                product_walk(assignment, pos + 1)
            del assignment[gen]

        product_walk({}, 0)

    elif mode == "backtrack":
        triggers = _relator_triggers(presentation, relators)

        def backtrack(assignment: Assignment, pos: int) -> None:
            if pos == len(gens):
                accept(assignment)
                return
            gen = gens[pos]
            pending = triggers[pos]
            pinned = gen in pins
            for value in values_for(gen):
                if not pinned:
                    spend_node()
                assignment[gen] = value
                ok = True
                for rel in pending:
                    stats.relator_checks += 1
                    if rel.evaluate(assignment, group) != ident:
                        ok = False
                        break
                if ok:
                    backtrack(assignment, pos + 1)
            del assignment[gen]

        backtrack({}, 0)

    else:
        raise InvalidParameterError(f"unknown search mode {mode!r}")

    return HomSearchResult(count, collected, stats)


def _split_chunks(values: Sequence[Permutation], jobs: int) -> List[Sequence[Permutation]]:
    jobs = max(1, min(jobs, len(values)))
    size, extra = divmod(len(values), jobs)
    chunks = []
    start = 0
    for i in range(jobs):
        end = start + size + (1 if i < extra else 0)
        chunks.append(values[start:end])
        start = end
    return chunks


def count_homs(presentation: Presentation, group: FiniteGroup,
               constraint: Mapping[str, Permutation] | None = None,
               mode: str = "backtrack", materialize: bool = False,
               jobs: int = 1,
               node_budget: int = DEFAULT_NODE_BUDGET,
               naive_cap: int = DEFAULT_NAIVE_CAP,
               _leaf_filter: Optional[Callable[[Assignment], bool]] = None,
               ) -> HomSearchResult:
    """Count (or list) homomorphisms satisfying the pinning constraint.

    ``constraint`` maps generators to required images.  Counts from the two
    modes always agree; ``naive`` additionally refuses to start when
    |A|^(unpinned) exceeds ``naive_cap``.  With ``jobs`` > 1 the value range
    of the first unpinned generator is split across a thread pool and the
    partial results are merged in chunk order, keeping the outcome
    independent of scheduling.
    """
    pins = check_constraint(presentation, group, constraint or {})
    unpinned = [g for g in presentation.generators if g not in pins]
    if mode == "naive":
        space = group.order ** len(unpinned)
        if space > naive_cap:
            raise GroupTooLargeError(
                f"naive search space {group.order}^{len(unpinned)} = {space} "
                f"exceeds cap {naive_cap}"
            )
    if mode not in ("naive", "backtrack"):
        raise InvalidParameterError(f"unknown search mode {mode!r}")

    upfront = SearchStats()
    relators = presentation.relators
    if mode == "backtrack":
        # relators entirely supported on pinned generators have a fixed
        # value: settle them once instead of inside every worker
        pinned_names = set(pins)
        fully_pinned = [r for r in relators if r.generators() <= pinned_names]
        if fully_pinned:
            relators = tuple(r for r in relators
                             if not r.generators() <= pinned_names)
            ident = group.identity
            for rel in fully_pinned:
                upfront.relator_checks += 1
                if rel.evaluate(pins, group) != ident:
                    return HomSearchResult(0, [] if materialize else None,
                                           upfront)

    def run(restrict):
        return _run_search(presentation, group, pins, mode, materialize,
                           _leaf_filter, node_budget, restrict, relators)

    if jobs <= 1 or not unpinned:
        result = run(None)
        result.stats.merge(upfront)
        return result

    split_gen = unpinned[0]
    chunks = _split_chunks(group.elements, jobs)
    results: List[HomSearchResult] = []
    with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
        futures = [pool.submit(run, (split_gen, chunk)) for chunk in chunks]
        for fut in futures:
            results.append(fut.result())

    merged = HomSearchResult(0, [] if materialize else None, upfront)
    for part in results:
        merged.count += part.count
        merged.stats.merge(part.stats)
        if materialize:
            merged.assignments.extend(part.assignments)
    return merged


def _pin_from_marker(word: Word, target: Permutation
                     ) -> Optional[Dict[str, Permutation]]:
    """A single-generator marker word (g or g^-1) becomes a direct pin."""
    if len(word.syllables) != 1:
        return None
    gen, exp = word.syllables[0]
    if exp == 1:
        return {gen: target}
    if exp == -1:
        return {gen: ~target}
    return None


def meridian_search(presentation: Presentation, marker: str,
                    group: FiniteGroup, sigma: Permutation,
                    mode: str = "backtrack", materialize: bool = False,
                    jobs: int = 1,
                    node_budget: int = DEFAULT_NODE_BUDGET,
                    naive_cap: int = DEFAULT_NAIVE_CAP) -> HomSearchResult:
    """Search for homomorphisms sending the marked word to ``sigma``.

    Markers that are a bare generator (or its inverse) are pinned inside
    the search; other marker words are checked on complete assignments.
    """
    if marker not in presentation.markers:
        raise UnknownMarkerError(
            f"no marker {marker!r}; have {sorted(presentation.markers)}"
        )
    if sigma not in group:
        raise NotAMemberError(f"{sigma} is not an element of {group.label}")
    word = presentation.markers[marker]
    pins = _pin_from_marker(word, sigma)
    if pins is not None:
        return count_homs(presentation, group, pins, mode=mode,
                          materialize=materialize, jobs=jobs,
                          node_budget=node_budget, naive_cap=naive_cap)
    return count_homs(
        presentation, group, None, mode=mode, materialize=materialize,
        jobs=jobs, node_budget=node_budget, naive_cap=naive_cap,
        _leaf_filter=lambda asg: word.evaluate(asg, group) == sigma,
    )


def meridian_invariant(presentation: Presentation, marker: str,
                       group: FiniteGroup, sigma: Permutation,
                       mode: str = "backtrack", jobs: int = 1,
                       node_budget: int = DEFAULT_NODE_BUDGET,
                       naive_cap: int = DEFAULT_NAIVE_CAP) -> int:
    """Number of homomorphisms sending the marked word to ``sigma``.

    This is the knot invariant attached to a marked meridian: for a knot
    group with marked meridian and a finite group A with a chosen element,
    it counts the representations pinning the meridian's image.
    """
    return meridian_search(presentation, marker, group, sigma, mode=mode,
                           jobs=jobs, node_budget=node_budget,
                           naive_cap=naive_cap).count


def images_conjugate(presentation: Presentation, group: FiniteGroup,
                     assignment: Mapping[str, Permutation],
                     word1: Word, word2: Word) -> bool:
    """Whether a homomorphism maps two words to conjugate elements.

    ``assignment`` is expected to already be a homomorphism; the check is
    an exhaustive conjugacy search inside ``group``, so a ``False`` answer
    certifies non-conjugacy of the two images in the finite quotient.
    """
    e1 = word1.evaluate(assignment, group)
    e2 = word2.evaluate(assignment, group)
    return are_conjugate(e1, e2, group)

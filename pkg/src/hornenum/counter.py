"""Exact CNF model counting with DPLL-style search, in exact integers.

Two engines share one preprocessing step and must agree on every count:

* DpllCounter: backtracking search over mutable trail state with unit
  propagation, occurrence lists, and a 2^k shortcut once no clause is
  open.  Default engine, comfortably sufficient for the width-5 instances.

* ComponentCounter: functional recursion that splits the residual clause
  set into connected components, multiplies their counts, and memoizes
  residual subproblems under a bounded cache.  Behind a flag; the
  width-6 runs are the reason it exists.

Counts are over ALL declared variables, so a variable appearing in no
clause doubles the count.  There is deliberately no pure-literal rule:
fixing a pure literal preserves satisfiability but loses models.
"""

from __future__ import annotations

import os
import re
import shlex
import subprocess
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields
from typing import Iterable, Optional, Sequence, Union

from .encoder import ENCODE_CAP, CnfInstance, emit_dimacs, encode
from .errors import ExternalToolError, ResourceLimitError
from .families import Variant
from .identities import binomial, inverse_binomial_sum

#: Default wall-clock budget per count, seconds.
DEFAULT_BUDGET_SECONDS = 600.0

#: Component-cache entry bound; the cache is cleared when it fills.
DEFAULT_CACHE_LIMIT = 2_000_000

#: Environment variable consulted for the external counter command.
EXTERNAL_CMD_ENV = "HORNENUM_EXTERNAL_CMD"

#: Default pattern locating the reported count in external-tool output:
#: a line consisting of one decimal integer.
DEFAULT_EXTERNAL_PATTERN = r"^\s*(\d+)\s*$"

METHODS = ("dpll", "bruteforce", "identity", "external")

HEURISTICS = ("frequency", "lowest")

Clauses = Sequence[Sequence[int]]


@dataclass
class CounterStats:
    """Search-effort counters; merged by summation across workers."""

    nodes: int = 0
    decisions: int = 0
    propagations: int = 0
    components: int = 0
    cache_hits: int = 0
    cache_entries: int = 0
    cache_evictions: int = 0
    subproblems: int = 0

    def merge(self, other: "CounterStats") -> None:
        for f in fields(self):
            setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class CountReport:
    """One finished count: what was counted, how, the exact value, and the
    effort it took."""

    variant: Variant
    n: int
    method: str
    count: int
    elapsed: float
    stats: CounterStats = field(default_factory=CounterStats)

    def to_dict(self) -> dict:
        return {
            "variant": self.variant.value,
            "n": self.n,
            "method": self.method,
            "count": self.count,
            "elapsed": self.elapsed,
            "stats": self.stats.to_dict(),
        }


def preprocess(clauses: Clauses, num_vars: int) -> Optional[list[tuple[int, ...]]]:
    """Canonicalize clauses: sort and dedupe literals, drop tautologies,
    dedupe clauses.  Returns None if an empty clause is present (count 0).
    """
    out = []
    seen = set()
    for clause in clauses:
        lits = tuple(sorted(set(clause)))
        if not lits:
            return None
        for lit in lits:
            if not isinstance(lit, int) or lit == 0 or abs(lit) > num_vars:
                raise ValueError(f"literal {lit!r} invalid for {num_vars} variables")
        if any(-lit in lits for lit in lits):
            continue
        if lits not in seen:
            seen.add(lits)
            out.append(lits)
    return out


def _vars_of(clauses: Iterable[Sequence[int]]) -> set[int]:
    return {abs(lit) for clause in clauses for lit in clause}


def _simplify(clauses: frozenset, lit: int) -> Optional[frozenset]:
    """Residual clause set after asserting lit; None on an emptied clause."""
    out = []
    neg = -lit
    for clause in clauses:
        if lit in clause:
            continue
        if neg in clause:
            rest = tuple(x for x in clause if x != neg)
            if not rest:
                return None
            out.append(rest)
        else:
            out.append(clause)
    return frozenset(out)


class DpllCounter:
    """Trail-based counting search over a fixed clause list.

    State is index-addressed: sat_by[ci] holds the 1-based trail position
    that satisfied clause ci (0 = open), unassigned_lits[ci] the number of
    its literals still free.  Undo walks the trail backwards, so the two
    arrays are exact at every node.
    """

    def __init__(self, num_vars: int, clauses: list[tuple[int, ...]],
                 heuristic: str = "frequency", deadline: Optional[float] = None):
        if heuristic not in HEURISTICS:
            raise ValueError(f"unknown heuristic {heuristic!r}")
        self.num_vars = num_vars
        self.clauses = clauses
        self.heuristic = heuristic
        self.deadline = deadline
        self.stats = CounterStats()
        m = len(clauses)
        self.pos_occ = [[] for _ in range(num_vars + 1)]
        self.neg_occ = [[] for _ in range(num_vars + 1)]
        for ci, clause in enumerate(clauses):
            for lit in clause:
                (self.pos_occ if lit > 0 else self.neg_occ)[abs(lit)].append(ci)
        self.assign = [0] * (num_vars + 1)
        self.sat_by = [0] * m
        self.unassigned_lits = [len(c) for c in clauses]
        self.open_count = m
        self.trail: list[int] = []
        self.unit_queue: list[int] = []

    def _assign_lit(self, lit: int) -> bool:
        v = abs(lit)
        val = 1 if lit > 0 else -1
        self.assign[v] = val
        tidx = len(self.trail) + 1
        self.trail.append(v)
        sat_occ = self.pos_occ[v] if val > 0 else self.neg_occ[v]
        fal_occ = self.neg_occ[v] if val > 0 else self.pos_occ[v]
        sat_by = self.sat_by
        remaining = self.unassigned_lits
        conflict = False
        for ci in sat_occ:
            if sat_by[ci] == 0:
                sat_by[ci] = tidx
                self.open_count -= 1
        for ci in fal_occ:
            remaining[ci] -= 1
            if sat_by[ci] == 0:
                if remaining[ci] == 0:
                    conflict = True
                elif remaining[ci] == 1:
                    self.unit_queue.append(ci)
        return not conflict

    def _undo_to(self, mark: int) -> None:
        assign = self.assign
        sat_by = self.sat_by
        remaining = self.unassigned_lits
        while len(self.trail) > mark:
            tidx = len(self.trail)
            v = self.trail.pop()
            val = assign[v]
            assign[v] = 0
            sat_occ = self.pos_occ[v] if val > 0 else self.neg_occ[v]
            fal_occ = self.neg_occ[v] if val > 0 else self.pos_occ[v]
            for ci in sat_occ:
                if sat_by[ci] == tidx:
                    sat_by[ci] = 0
                    self.open_count += 1
            for ci in fal_occ:
                remaining[ci] += 1

    def _propagate(self) -> bool:
        queue = self.unit_queue
        while queue:
            ci = queue.pop()
            if self.sat_by[ci] != 0:
                continue
            forced = 0
            for lit in self.clauses[ci]:
                if self.assign[abs(lit)] == 0:
                    forced = lit
                    break
            if forced == 0:
                # already handled: falsification is caught inside _assign_lit
                continue
            self.stats.propagations += 1
            if not self._assign_lit(forced):
                return False
        return True

    def _pick_variable(self) -> int:
        assign = self.assign
        sat_by = self.sat_by
        if self.heuristic == "lowest":
            best = 0
            for ci, clause in enumerate(self.clauses):
                if sat_by[ci] == 0:
                    for lit in clause:
                        v = abs(lit)
                        if assign[v] == 0 and (best == 0 or v < best):
                            best = v
            return best
        counts = [0] * (self.num_vars + 1)
        for ci, clause in enumerate(self.clauses):
            if sat_by[ci] == 0:
                for lit in clause:
                    if assign[abs(lit)] == 0:
                        counts[abs(lit)] += 1
        best, best_count = 0, 0
        for v in range(1, self.num_vars + 1):
            if counts[v] > best_count:
                best, best_count = v, counts[v]
        return best

    def _check_budget(self) -> None:
        if self.deadline is not None and self.stats.nodes % 4096 == 0:
            if time.monotonic() > self.deadline:
                raise ResourceLimitError("count budget exceeded", stats=self.stats.to_dict())

    def count(self) -> int:
        self.unit_queue = [ci for ci, c in enumerate(self.clauses)
                           if len(c) == 1 and self.sat_by[ci] == 0]
        if not self._propagate():
            return 0
        return self._search()

    def _search(self) -> int:
        self.stats.nodes += 1
        self._check_budget()
        if self.open_count == 0:
            return 1 << (self.num_vars - len(self.trail))
        v = self._pick_variable()
        # open_count > 0 guarantees an open clause with a free literal
        assert v != 0
        self.stats.decisions += 1
        total = 0
        for lit in (v, -v):
            mark = len(self.trail)
            self.unit_queue = []
            if self._assign_lit(lit) and self._propagate():
                total += self._search()
            self._undo_to(mark)
        return total


class ComponentCounter:
    """Cached functional counting: count(clauses) is the number of
    assignments of exactly the variables occurring in `clauses` that
    satisfy them.  Disjoint components multiply; identical residual
    subproblems are answered from the cache.

    Cache keys are canonical byte strings when every variable id fits a
    byte, which keeps width-6 runs inside memory; otherwise the clause
    set itself is the key.
    """

    def __init__(self, num_vars: int, clauses: list[tuple[int, ...]],
                 heuristic: str = "frequency", deadline: Optional[float] = None,
                 cache_limit: int = DEFAULT_CACHE_LIMIT):
        if heuristic not in HEURISTICS:
            raise ValueError(f"unknown heuristic {heuristic!r}")
        self.num_vars = num_vars
        self.clauses = frozenset(clauses)
        self.heuristic = heuristic
        self.deadline = deadline
        self.cache_limit = cache_limit
        self.cache: dict = {}
        self.stats = CounterStats()
        self._bytes_keys = num_vars <= 120
        self._calls = 0

    def count(self) -> int:
        used = _vars_of(self.clauses)
        result = self._count(self.clauses)
        self.stats.cache_entries = len(self.cache)
        return result << (self.num_vars - len(used))

    def _key(self, clauses: frozenset):
        if self._bytes_keys:
            return b"".join(
                bytes(lit + 128 for lit in clause) + b"\x00"
                for clause in sorted(clauses)
            )
        return clauses

    def _check_budget(self) -> None:
        self._calls += 1
        if self.deadline is not None and self._calls % 2048 == 0:
            if time.monotonic() > self.deadline:
                self.stats.cache_entries = len(self.cache)
                raise ResourceLimitError("count budget exceeded", stats=self.stats.to_dict())

    def _count(self, clauses: frozenset) -> int:
        if not clauses:
            return 1
        self.stats.nodes += 1
        self._check_budget()
        key = self._key(clauses)
        cached = self.cache.get(key)
        if cached is not None:
            self.stats.cache_hits += 1
            return cached

        # fold unit chains without caching the intermediates
        shift = 0
        current = clauses
        result = None
        while True:
            unit = next((c[0] for c in current if len(c) == 1), None)
            if unit is None:
                break
            before = len(_vars_of(current))
            reduced = _simplify(current, unit)
            self.stats.propagations += 1
            if reduced is None:
                result = 0
                break
            shift += before - 1 - len(_vars_of(reduced))
            current = reduced

        if result is None:
            if not current:
                result = 1 << shift
            else:
                result = self._count_split(current) << shift

        if len(self.cache) >= self.cache_limit:
            self.cache.clear()
            self.stats.cache_evictions += 1
        self.cache[key] = result
        return result

    def _count_split(self, clauses: frozenset) -> int:
        parts = _components(clauses)
        if len(parts) > 1:
            self.stats.components += len(parts)
            result = 1
            for part in parts:
                result *= self._count(frozenset(part))
            return result
        return self._branch(clauses)

    def _branch(self, clauses: frozenset) -> int:
        freq: dict[int, int] = {}
        for clause in clauses:
            for lit in clause:
                v = abs(lit)
                freq[v] = freq.get(v, 0) + 1
        if self.heuristic == "lowest":
            v = min(freq)
        else:
            v = max(sorted(freq), key=freq.get)
        self.stats.decisions += 1
        before = len(freq)
        total = 0
        for lit in (v, -v):
            reduced = _simplify(clauses, lit)
            if reduced is None:
                continue
            total += self._count(reduced) << (before - 1 - len(_vars_of(reduced)))
        return total


def _components(clauses: frozenset) -> list[list[tuple[int, ...]]]:
    """Partition clauses into variable-connected groups (union-find)."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for clause in clauses:
        vs = [abs(lit) for lit in clause]
        for v in vs:
            parent.setdefault(v, v)
        root = find(vs[0])
        for v in vs[1:]:
            r = find(v)
            if r != root:
                parent[r] = root
    groups: dict[int, list[tuple[int, ...]]] = {}
    for clause in clauses:
        groups.setdefault(find(abs(clause[0])), []).append(clause)
    return list(groups.values())


def _count_remapped(clauses: Iterable[tuple[int, ...]], engine: str, heuristic: str,
                    time_left: Optional[float], cache_limit: int) -> tuple[int, dict]:
    """Count a residual clause set over exactly its own variables."""
    clause_list = [tuple(c) for c in clauses]
    used = sorted(_vars_of(clause_list))
    remap = {v: i + 1 for i, v in enumerate(used)}
    mapped = [tuple((1 if lit > 0 else -1) * remap[abs(lit)] for lit in c) for c in clause_list]
    deadline = time.monotonic() + time_left if time_left is not None else None
    if engine == "components":
        counter = ComponentCounter(len(used), mapped, heuristic=heuristic,
                                   deadline=deadline, cache_limit=cache_limit)
    else:
        counter = DpllCounter(len(used), mapped, heuristic=heuristic, deadline=deadline)
    value = counter.count()
    counter.stats.subproblems = 1
    return value, counter.stats.to_dict()


def _split_subproblems(clauses: list[tuple[int, ...]], num_vars: int,
                       target: int) -> tuple[int, list[tuple[frozenset, int]]]:
    """Cofactor-expand the instance into independent subproblems.

    Returns (settled, open) where settled already sums the fully decided
    branches and each open entry (residual, shift) contributes
    count-over-own-vars(residual) << shift.  The expansion is exact:
    settled plus those contributions equals the full model count.
    """
    start = frozenset(clauses)
    entries = [(start, num_vars - len(_vars_of(start)))]
    settled = 0
    while len(entries) < target:
        entries.sort(key=lambda e: (-len(e[0]), e[1]))
        split_at = next((i for i, e in enumerate(entries) if e[0]), None)
        if split_at is None:
            break
        clauses_here, shift = entries.pop(split_at)
        freq: dict[int, int] = {}
        for clause in clauses_here:
            for lit in clause:
                freq[abs(lit)] = freq.get(abs(lit), 0) + 1
        v = max(sorted(freq), key=freq.get)
        before = len(_vars_of(clauses_here))
        for lit in (v, -v):
            reduced = _simplify(clauses_here, lit)
            if reduced is None:
                continue
            child_shift = shift + (before - 1 - len(_vars_of(reduced)))
            if not reduced:
                settled += 1 << child_shift
            else:
                entries.append((reduced, child_shift))
    return settled, entries


def _count_clauses(clauses: Clauses, num_vars: int, *, components: bool = False,
                   threads: int = 1, budget_seconds: Optional[float] = DEFAULT_BUDGET_SECONDS,
                   heuristic: str = "frequency",
                   cache_limit: int = DEFAULT_CACHE_LIMIT) -> tuple[int, CounterStats]:
    if num_vars < 0:
        raise ValueError("variable count must be nonnegative")
    if threads < 1:
        raise ValueError("threads must be >= 1")
    prepared = preprocess(clauses, num_vars)
    if prepared is None:
        return 0, CounterStats()
    engine = "components" if components else "dpll"
    deadline = time.monotonic() + budget_seconds if budget_seconds is not None else None

    if threads == 1:
        if components:
            counter = ComponentCounter(num_vars, prepared, heuristic=heuristic,
                                       deadline=deadline, cache_limit=cache_limit)
        else:
            counter = DpllCounter(num_vars, prepared, heuristic=heuristic, deadline=deadline)
        value = counter.count()
        counter.stats.subproblems = 1
        if components:
            counter.stats.cache_entries = len(counter.cache)
        return value, counter.stats

    settled, open_entries = _split_subproblems(prepared, num_vars, target=4 * threads)
    stats = CounterStats()
    total = settled
    time_left = None if budget_seconds is None else budget_seconds
    jobs = [(tuple(entry), engine, heuristic, time_left, cache_limit)
            for entry, _shift in open_entries]
    shifts = [shift for _entry, shift in open_entries]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for (value, stat_dict), shift in zip(
                pool.map(_pool_worker, jobs), shifts):
            total += value << shift
            stats.merge(CounterStats(**stat_dict))
    return total, stats


def _pool_worker(args) -> tuple[int, dict]:
    clauses, engine, heuristic, time_left, cache_limit = args
    return _count_remapped(clauses, engine, heuristic, time_left, cache_limit)


def count_models(instance: Union[CnfInstance, Clauses], num_vars: Optional[int] = None,
                 *, components: bool = False, threads: int = 1,
                 budget_seconds: Optional[float] = DEFAULT_BUDGET_SECONDS,
                 heuristic: str = "frequency",
                 cache_limit: int = DEFAULT_CACHE_LIMIT) -> int:
    """Exact number of satisfying assignments over all declared variables.

    Accepts a generated instance (variable count implied) or a raw clause
    list plus num_vars.  budget_seconds=None disables the time budget.
    """
    if isinstance(instance, CnfInstance):
        clauses: Clauses = instance.clauses
        num_vars = instance.predicate_count
    else:
        clauses = instance
        if num_vars is None:
            raise ValueError("num_vars is required for raw clause lists")
    value, _stats = _count_clauses(clauses, num_vars, components=components,
                                   threads=threads, budget_seconds=budget_seconds,
                                   heuristic=heuristic, cache_limit=cache_limit)
    return value


def run_external_counter(instance: CnfInstance, command: Optional[str] = None,
                         pattern: Optional[str] = None,
                         timeout: Optional[float] = DEFAULT_BUDGET_SECONDS) -> int:
    """Write the instance as DIMACS, run a configured counting command on
    it, and parse the reported model count.

    The command template may reference the file as {file}; otherwise the
    path is appended.  The pattern must match somewhere in stdout, with
    the count in group 1 (or the whole match).
    """
    command = command or os.environ.get(EXTERNAL_CMD_ENV)
    if not command:
        raise ExternalToolError(
            f"no external counter configured (flag --external-cmd or ${EXTERNAL_CMD_ENV})")
    pattern = pattern or DEFAULT_EXTERNAL_PATTERN
    text = emit_dimacs(instance)
    with tempfile.NamedTemporaryFile("w", suffix=".cnf", delete=False) as handle:
        handle.write(text)
        path = handle.name
    try:
        quoted = shlex.quote(path)
        cmd = command.replace("{file}", quoted) if "{file}" in command else f"{command} {quoted}"
        try:
            proc = subprocess.run(cmd, shell=True, capture_output=True, text=True,
                                  timeout=timeout)
        except subprocess.TimeoutExpired as exc:
            raise ResourceLimitError(f"external counter exceeded {timeout}s") from exc
        output = proc.stdout + (("\n" + proc.stderr) if proc.stderr else "")
        if proc.returncode != 0:
            raise ExternalToolError(f"external counter exited {proc.returncode}",
                                    command=cmd, output=output)
        match = re.search(pattern, proc.stdout, re.MULTILINE)
        if not match:
            raise ExternalToolError(f"no count matching {pattern!r} in external output",
                                    command=cmd, output=output)
        return int(match.group(1) if match.groups() else match.group(0))
    finally:
        os.unlink(path)


def _dpll_report(n: int, variant: Variant, **kw) -> CountReport:
    return count_variant(n, variant, "dpll", **kw)


def count_variant(n: int, variant: Variant, method: str = "dpll", *,
                  threads: int = 1, budget_seconds: Optional[float] = DEFAULT_BUDGET_SECONDS,
                  components: bool = False, heuristic: str = "frequency",
                  cache_limit: int = DEFAULT_CACHE_LIMIT,
                  encode_cap: int = ENCODE_CAP,
                  external_cmd: Optional[str] = None,
                  external_pattern: Optional[str] = None) -> CountReport:
    """Count one variant at one width by the requested method.

    dpll encodes and counts internally; bruteforce defers to the
    exhaustive family enumeration; identity derives the value from dpll
    counts of other variants; external shells out to a configured tool.
    All four must agree wherever more than one applies.
    """
    if isinstance(variant, str):
        variant = Variant.from_name(variant)
    if method == "identity-derived":
        method = "identity"
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")
    start = time.monotonic()

    if method == "dpll":
        instance = encode(n, variant, cap=encode_cap)
        value, stats = _count_clauses(instance.clauses, instance.predicate_count,
                                      components=components, threads=threads,
                                      budget_seconds=budget_seconds, heuristic=heuristic,
                                      cache_limit=cache_limit)
        return CountReport(variant, n, "dpll", value, time.monotonic() - start, stats)

    if method == "bruteforce":
        from .oracle import brute_count
        value = brute_count(n, variant, threads=threads)
        return CountReport(variant, n, "bruteforce", value,
                           time.monotonic() - start, CounterStats())

    if method == "external":
        instance = encode(n, variant, cap=encode_cap)
        value = run_external_counter(instance, command=external_cmd,
                                     pattern=external_pattern, timeout=budget_seconds)
        return CountReport(variant, n, "external", value,
                           time.monotonic() - start, CounterStats())

    # identity: derive from dpll counts of the other variants
    kw = dict(threads=threads, budget_seconds=budget_seconds, components=components,
              heuristic=heuristic, cache_limit=cache_limit, encode_cap=encode_cap)
    stats = CounterStats()

    def dpll_count(k: int, v: Variant) -> int:
        report = _dpll_report(k, v, **kw)
        stats.merge(report.stats)
        return report.count

    if variant is Variant.H0:
        if n == 0:
            raise ValueError(
                "no identity derives the h0 count at n=0: the all-ones and "
                "all-zeros vectors coincide there, so the h0/h doubling fails")
        value = 2 * dpll_count(n, Variant.H)
    elif variant is Variant.H01:
        value = 2 * dpll_count(n, Variant.H1)
    elif variant is Variant.H1:
        value = sum(binomial(n, k) * dpll_count(k, Variant.H) for k in range(n + 1))
    else:
        # h has no doubling source; invert the h1 binomial sum instead
        h1 = [dpll_count(k, Variant.H1) for k in range(n + 1)]
        value = inverse_binomial_sum(h1)[n]
    return CountReport(variant, n, "identity-derived", value,
                       time.monotonic() - start, stats)

"""Canonical basis of the Fock space by the LLT algorithm, block by block.

A block is the set of partitions of ``n`` with a fixed ``e``-core. For each
``e``-regular ``mu`` in the block, ``G(mu)`` is obtained from the ladder
approximation by subtracting bar-invariant multiples of ``G(nu)`` for
``nu`` below ``mu`` until every off-diagonal coefficient lies in ``vZ[v]``.
Coefficients of ``G(mu)`` are the decomposition numbers ``d_{la,mu}(v)``.
"""

import json
import logging
import os
import tempfile
import threading
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from filelock import FileLock

from specht.errors import CacheCorruptionError, DomainError, LLTInvariantError
from specht._dense import DenseRangeError, compute_columns_dense
from specht.fock import FockVector, _first_approximation_raw, e_core
from specht.laurent import LaurentPolynomial
from specht.partitions import Partition, format_partition, is_e_core, is_e_regular

__all__ = [
    "Block",
    "BlockCache",
    "DecompositionRow",
    "BLOCK_SCHEMA",
    "BLOCK_SCHEMA_VERSION",
    "canonical_basis_block",
    "compute_block",
    "decomposition_row",
    "default_cache",
    "row_sum_at_one",
    "partitions_of",
]

log = logging.getLogger(__name__)

BLOCK_SCHEMA = "specht.block"
BLOCK_SCHEMA_VERSION = 1
CACHE_ENV = "SPECHT_CACHE_DIR"


def partitions_of(n, max_part=None):
    """All partitions of ``n`` in descending lexicographic order (internal helper for blocks)."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def _dominated_by(la, mu):
    s = t = 0
    for k in range(max(len(la), len(mu))):
        s += mu[k] if k < len(mu) else 0
        t += la[k] if k < len(la) else 0
        if s < t:
            return False
    return True


def _check_column(mu, column, e):
    """Raise LLTInvariantError unless ``column`` is a valid canonical basis vector at ``mu``."""
    if column.get(mu) != {0: 1}:
        raise LLTInvariantError(
            f"G({format_partition(mu)}) at e={e}: diagonal coefficient is "
            f"{column.get(mu)!r}, expected 1 (convention error in the f_i action)"
        )
    for la, poly in column.items():
        if la == mu:
            continue
        if not poly:
            raise LLTInvariantError(f"G({format_partition(mu)}): zero polynomial stored at {format_partition(la)}")
        if any(k <= 0 for k in poly) or any(c <= 0 for c in poly.values()):
            raise LLTInvariantError(
                f"G({format_partition(mu)}) at e={e}: coefficient at {format_partition(la)} is "
                f"{LaurentPolynomial(poly)}, not in vN[v] (positivity failure; convention error)"
            )
        if sum(la) != sum(mu) or not _dominated_by(la, mu):
            raise LLTInvariantError(
                f"G({format_partition(mu)}) at e={e}: support contains "
                f"{format_partition(la)}, which is not dominated by {format_partition(mu)}"
            )


@dataclass
class Block:
    """Canonical basis vectors ``G(mu)`` for every ``e``-regular ``mu`` of one block."""

    e: int
    core: Partition
    n: int
    columns: dict  # tuple mu -> {tuple la -> {exp: coeff}}
    num_partitions: int = 0
    seconds: float = 0.0
    _rows: dict = field(default=None, repr=False, compare=False)

    @property
    def key(self):
        return (self.e, tuple(self.core), self.n)

    @property
    def regular(self):
        """The ``e``-regular partitions of the block, descending."""
        return [Partition._trusted(mu) for mu in sorted(self.columns, reverse=True)]

    def column(self, mu):
        mu = tuple(Partition(mu))
        if mu not in self.columns:
            raise DomainError(f"{format_partition(mu)} is not an {self.e}-regular partition in this block")
        return FockVector._from_raw(self.columns[mu], self.n)

    def row(self, la):
        """``{mu: d_{la,mu}(v)}`` over the columns where the entry is non-zero."""
        if self._rows is None:
            rows = {}
            for mu, col in self.columns.items():
                for lam, poly in col.items():
                    rows.setdefault(lam, {})[mu] = poly
            self._rows = rows
        entries = self._rows.get(tuple(la), {})
        return {
            Partition._trusted(mu): LaurentPolynomial._wrap(dict(poly))
            for mu, poly in sorted(entries.items(), reverse=True)
        }

    def verify(self):
        if not is_e_core(self.core, self.e):
            raise LLTInvariantError(f"block core {format_partition(self.core)} is not an {self.e}-core")
        for mu, col in self.columns.items():
            if sum(mu) != self.n or not is_e_regular(mu, self.e):
                raise LLTInvariantError(f"column label {format_partition(mu)} does not belong to block {self.key}")
            _check_column(mu, col, self.e)
            for la in col:
                if e_core(la, self.e) != self.core:
                    raise LLTInvariantError(
                        f"G({format_partition(mu)}): {format_partition(la)} lies outside block {self.key}"
                    )

    def to_json_dict(self):
        return {
            "schema": BLOCK_SCHEMA,
            "schema_version": BLOCK_SCHEMA_VERSION,
            "e": self.e,
            "core": list(self.core),
            "n": self.n,
            "num_partitions": self.num_partitions,
            "seconds": round(self.seconds, 6),
            "columns": [
                {
                    "mu": list(mu),
                    "entries": [
                        {"lambda": list(la), "poly": sorted([k, c] for k, c in poly.items())}
                        for la, poly in sorted(self.columns[mu].items(), reverse=True)
                    ],
                }
                for mu in sorted(self.columns, reverse=True)
            ],
        }

    @classmethod
    def from_json_dict(cls, doc, verify=True):
        try:
            if doc.get("schema") != BLOCK_SCHEMA:
                raise ValueError(f"unexpected schema {doc.get('schema')!r}")
            if doc.get("schema_version") != BLOCK_SCHEMA_VERSION:
                raise ValueError(f"unsupported schema_version {doc.get('schema_version')!r}")
            e = int(doc["e"])
            core = Partition(doc["core"])
            n = int(doc["n"])
            columns = {}
            for col in doc["columns"]:
                mu = tuple(Partition(col["mu"]))
                entries = {}
                for entry in col["entries"]:
                    la = tuple(Partition(entry["lambda"]))
                    poly = {}
                    for k, c in entry["poly"]:
                        if not isinstance(k, int) or not isinstance(c, int):
                            raise ValueError("polynomial terms must be integer pairs")
                        poly[k] = poly.get(k, 0) + c
                    entries[la] = {k: c for k, c in poly.items() if c}
                columns[mu] = entries
            block = cls(e, core, n, columns, int(doc.get("num_partitions", 0)), float(doc.get("seconds", 0.0)))
        except (KeyError, TypeError, ValueError, DomainError) as exc:
            raise CacheCorruptionError(f"malformed block document: {exc}") from exc
        if verify:
            try:
                block.verify()
            except LLTInvariantError as exc:
                raise CacheCorruptionError(str(exc), key=block.key) from exc
        return block


def _validate_block_key(core, n, e):
    if isinstance(e, bool) or not isinstance(e, int) or e < 2:
        raise DomainError(f"e must be an integer >= 2, got {e!r}")
    core = Partition(core)
    if not is_e_core(core, e):
        raise DomainError(f"{format_partition(core)} is not an {e}-core")
    if n < core.size or (n - core.size) % e:
        raise DomainError(f"no partition of {n} has {e}-core {format_partition(core)}")
    return core


def _compute_columns_dict(regular, e):
    """Reference engine on sparse dictionaries; ``regular`` is ascending."""
    reg_set = set(regular)
    columns = {}
    for idx, mu in enumerate(regular):
        vec = _first_approximation_raw(mu, e)
        # lower regular partitions, largest first; subtracting G(nu) only touches smaller keys
        for nu in reversed(regular[:idx]):
            c = vec.get(nu)
            if not c or all(k > 0 for k in c):
                continue
            alpha = {}
            for k, x in c.items():
                if k == 0:
                    alpha[0] = x
                elif k < 0:
                    alpha[k] = x
                    alpha[-k] = x
            for la, poly in columns[nu].items():
                target = vec.get(la)
                if target is None:
                    target = vec[la] = {}
                for a, x in alpha.items():
                    for b, y in poly.items():
                        s = a + b
                        target[s] = target.get(s, 0) - x * y
                stripped = {k: c for k, c in target.items() if c}
                if stripped:
                    vec[la] = stripped
                else:
                    del vec[la]
        for la in vec:
            if la in reg_set and la != mu and not all(k > 0 for k in vec[la]):
                raise LLTInvariantError(f"correction of G({format_partition(mu)}) did not terminate at {la}")
        _check_column(mu, vec, e)
        columns[mu] = vec
    return columns


def compute_block(core, n, e, engine="dense"):
    """Run the LLT algorithm on the block of partitions of ``n`` with ``e``-core ``core``.

    ``engine="dict"`` selects the slower reference implementation.
    """
    core = _validate_block_key(core, n, e)
    start = time.perf_counter()
    members = [la for la in partitions_of(n) if e_core(la, e) == core]
    regular = sorted(la for la in members if is_e_regular(la, e))  # ascending
    if engine == "dense":
        try:
            columns = compute_columns_dense(members, regular, e, n)
        except DenseRangeError as exc:
            log.info("dense engine out of range (%s); using the dictionary engine", exc)
            columns = _compute_columns_dict(regular, e)
    elif engine == "dict":
        columns = _compute_columns_dict(regular, e)
    else:
        raise DomainError(f"unknown engine {engine!r}")
    seconds = time.perf_counter() - start
    log.debug("block e=%d core=%s n=%d: %d partitions, %d columns, %.3fs",
              e, format_partition(core), n, len(members), len(regular), seconds)
    return Block(e, core, n, columns, len(members), seconds)


def _compute_block_doc(key):
    e, core, n = key
    return compute_block(core, n, e).to_json_dict()


class BlockCache:
    """Blocks keyed by ``(e, core, n)``, in memory and optionally on disk.

    Writers are serialised per key (a thread lock, plus a file lock for the
    on-disk copy); readers of a finished block take no lock.
    """

    def __init__(self, directory=None):
        self.directory = Path(directory) if directory else None
        self._blocks = {}
        self._locks = {}
        self._guard = threading.Lock()

    def _lock_for(self, key):
        with self._guard:
            return self._locks.setdefault(key, threading.Lock())

    @staticmethod
    def filename(key):
        e, core, n = key
        tag = "_".join(map(str, core)) or "empty"
        return f"e{e}-n{n}-core{tag}.json"

    def path_for(self, key):
        return self.directory / self.filename(key) if self.directory else None

    def __contains__(self, key):
        return key in self._blocks

    def keys(self):
        return list(self._blocks)

    def get(self, core, n, e):
        core = _validate_block_key(core, n, e)
        key = (e, tuple(core), n)
        block = self._blocks.get(key)
        if block is not None:
            return block
        with self._lock_for(key):
            block = self._blocks.get(key)
            if block is None:
                block = self._load(key)
            if block is None:
                block = compute_block(core, n, e)
                self._store(block)
            self._blocks[key] = block
        return block

    def block_for(self, la, e):
        la = Partition(la)
        return self.get(e_core(la, e), la.size, e)

    def ensure(self, keys, jobs=1):
        """Make sure every key is present, computing missing blocks in ``jobs`` processes."""
        missing = []
        for key in dict.fromkeys(keys):
            if key in self._blocks:
                continue
            loaded = self._load(key)
            if loaded is not None:
                self._blocks[key] = loaded
            else:
                missing.append(key)
        if not missing:
            return
        if jobs is None or jobs <= 1 or len(missing) == 1:
            for e, core, n in missing:
                self.get(core, n, e)
            return
        # biggest blocks first so the pool stays busy
        missing.sort(key=lambda k: (k[2] - sum(k[1])) // k[0], reverse=True)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for key, doc in zip(missing, pool.map(_compute_block_doc, missing)):
                block = Block.from_json_dict(doc, verify=False)
                with self._lock_for(key):
                    if key not in self._blocks:
                        self._store(block)
                        self._blocks[key] = block

    def _load(self, key):
        path = self.path_for(key)
        if path is None or not path.exists():
            return None
        block = load_block_file(path)
        if block.key != key:
            raise CacheCorruptionError(f"{path} holds block {block.key}, expected {key}", key=key)
        return block

    def _store(self, block):
        path = self.path_for(block.key)
        if path is None:
            return
        path.parent.mkdir(parents=True, exist_ok=True)
        with FileLock(str(path) + ".lock"):
            fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
            with os.fdopen(fd, "w") as fh:
                json.dump(block.to_json_dict(), fh, separators=(",", ":"))
            os.replace(tmp, path)

    def files(self):
        if self.directory is None or not self.directory.exists():
            return []
        return sorted(self.directory.glob("e*-n*-core*.json"))

    def verify_files(self):
        """Load and re-check every block file; returns ``[(path, error or None)]``."""
        results = []
        for path in self.files():
            try:
                load_block_file(path)
                results.append((path, None))
            except CacheCorruptionError as exc:
                results.append((path, str(exc)))
        return results

    def clear(self, disk=True):
        self._blocks.clear()
        removed = 0
        if disk:
            for path in self.files():
                path.unlink()
                removed += 1
            if self.directory is not None and self.directory.exists():
                for lock in self.directory.glob("*.json.lock"):
                    lock.unlink()
        return removed


def load_block_file(path):
    path = Path(path)
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CacheCorruptionError(f"{path}: unreadable block file: {exc}") from exc
    try:
        return Block.from_json_dict(doc)
    except CacheCorruptionError as exc:
        raise CacheCorruptionError(f"{path}: {exc}", key=exc.key) from exc


_default_cache = None
_default_guard = threading.Lock()


def default_cache():
    """Process-wide cache, backed by ``$SPECHT_CACHE_DIR`` when that is set."""
    global _default_cache
    with _default_guard:
        if _default_cache is None:
            _default_cache = BlockCache(os.environ.get(CACHE_ENV) or None)
        return _default_cache


def set_default_cache(cache):
    global _default_cache
    with _default_guard:
        _default_cache = cache


def canonical_basis_block(core, n, e, cache=None):
    """``{mu: G(mu)}`` for every ``e``-regular ``mu`` of size ``n`` with ``e``-core ``core``."""
    block = (cache or default_cache()).get(core, n, e)
    return {mu: block.column(mu) for mu in block.regular}


@dataclass(frozen=True)
class DecompositionRow:
    """One row of the decomposition matrix: ``{mu: d_{la,mu}(v)}``."""

    la: Partition
    e: int
    entries: dict

    def at_one(self):
        return {mu: d.at_one() for mu, d in self.entries.items()}

    def row_sum_at_one(self):
        return sum(d.at_one() for d in self.entries.values())

    def __str__(self):
        body = ", ".join(f"{format_partition(mu)}: {d}" for mu, d in self.entries.items())
        return "{" + body + "}"


def decomposition_row(la, e, cache=None):
    la = Partition(la)
    if isinstance(e, bool) or not isinstance(e, int) or e < 2:
        raise DomainError(f"e must be an integer >= 2, got {e!r}")
    block = (cache or default_cache()).block_for(la, e)
    return DecompositionRow(la, e, block.row(la))


def row_sum_at_one(la, e, cache=None):
    """``sum_mu d_{la,mu}(1)``; equal to 1 exactly when ``S^la`` is irreducible at ``q`` of order ``e`` in characteristic 0."""
    return decomposition_row(la, e, cache).row_sum_at_one()

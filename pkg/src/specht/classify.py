"""Reducibility certificates for Specht modules at q = -1 in characteristic p.

``certify`` chains the available results in a fixed order and stops at the
first decisive one:

1. ``la`` or its conjugate 2-regular: out of scope;
2. broken: reducible;
3. reducible at e = 2 in characteristic 0 (row sum >= 2): reducible;
4. not ``2p^i``-JM for some ``i >= 1``: reducible in characteristic 0 at
   ``e = 2p^i``, hence reducible;
5. listed in the known table for ``p`` in {2, 3}: irreducible;
6. otherwise unknown, with the evidence gathered so far.
"""

import enum
import json
import time
from dataclasses import dataclass, field

from specht import __version__
from specht.errors import DomainError
from specht.fock import e_core
from specht.llt import BlockCache, default_cache, decomposition_row
from specht.partitions import (
    Partition,
    broken_witness,
    conjugate,
    descending,
    enumerate_unbroken_doubly_singular_cores,
    format_partition,
    hook_lengths,
    is_e_core,
    is_e_regular,
    is_prime,
    jm_violation,
    parse_partition,
)

__all__ = [
    "Status",
    "Rule",
    "CertificateStep",
    "Verdict",
    "ClassificationReport",
    "KNOWN_IRREDUCIBLE",
    "REPORT_SCHEMA",
    "REPORT_SCHEMA_VERSION",
    "is_char0_irreducible",
    "certify",
    "classify_all",
    "jm_exponents",
]

REPORT_SCHEMA = "specht.classification"
REPORT_SCHEMA_VERSION = 1


class Status(str, enum.Enum):
    REDUCIBLE = "Reducible"
    IRREDUCIBLE = "Irreducible"
    UNKNOWN = "Unknown"
    OUT_OF_SCOPE = "OutOfScope"


class Rule(str, enum.Enum):
    BROKEN = "BROKEN"
    CHAR0_REDUCIBLE = "CHAR0_REDUCIBLE"
    NOT_JM = "NOT_JM"
    KNOWN_TABLE = "KNOWN_TABLE"
    CORE_FILTER = "CORE_FILTER"
    BOUND_FILTER = "BOUND_FILTER"
    REGULAR = "REGULAR"


# Doubly-singular (2,p)-irreducible partitions, complete for these primes.
KNOWN_IRREDUCIBLE = {
    2: frozenset([Partition((2, 2))]),
    3: frozenset(
        Partition(x)
        for x in [
            (2, 2),
            (3, 3),
            (2, 2, 2),
            (3, 3, 1),
            (3, 2, 2),
            (4, 4),
            (3, 3, 2),
            (2, 2, 2, 2),
            (3, 3, 3),
            (4, 3, 3, 1),
        ]
    ),
}


@dataclass(frozen=True)
class CertificateStep:
    rule: Rule
    param: object  # the e or p qualifying the rule, or None
    justification: str
    evidence: dict = field(default_factory=dict)

    @property
    def label(self):
        return self.rule.value if self.param is None else f"{self.rule.value}({self.param})"

    def to_json_dict(self):
        return {
            "rule": self.rule.value,
            "param": self.param,
            "label": self.label,
            "justification": self.justification,
            "evidence": self.evidence,
        }

    @classmethod
    def from_json_dict(cls, doc):
        return cls(Rule(doc["rule"]), doc["param"], doc["justification"], _evidence_from_json(doc["evidence"]))


def _evidence_from_json(ev):
    # JSON turns tuples (nodes, witness pairs) into lists; restore them.
    out = {}
    for k, x in ev.items():
        out[k] = tuple(x) if isinstance(x, list) and all(isinstance(y, int) for y in x) else x
    return out


@dataclass(frozen=True)
class Verdict:
    partition: Partition
    p: int
    status: Status
    certificates: tuple = ()
    evidence: dict = field(default_factory=dict)

    @property
    def decisive(self):
        return self.certificates[-1] if self.certificates else None

    def to_json_dict(self):
        return {
            "partition": format_partition(self.partition),
            "parts": list(self.partition),
            "p": self.p,
            "status": self.status.value,
            "certificates": [c.to_json_dict() for c in self.certificates],
            "evidence": self.evidence,
        }

    @classmethod
    def from_json_dict(cls, doc):
        return cls(
            Partition(doc["parts"]),
            doc["p"],
            Status(doc["status"]),
            tuple(CertificateStep.from_json_dict(c) for c in doc["certificates"]),
            _evidence_from_json(doc["evidence"]),
        )

    def __str__(self):
        chain = " -> ".join(c.label for c in self.certificates) or "-"
        return f"{format_partition(self.partition)}: {self.status.value} [{chain}]"


def is_char0_irreducible(la, e, cache=None):
    """Is ``S^la`` irreducible at an ``e``-th root of unity in characteristic 0?

    Returns ``(irreducible, evidence)``. For ``e > 2`` the answer is the
    e-JM condition; for ``e = 2`` it is the LLT row sum.
    """
    la = Partition(la)
    if isinstance(e, bool) or not isinstance(e, int) or e < 2:
        raise DomainError(f"e must be an integer >= 2, got {e!r}")
    if e > 2:
        node = jm_violation(la, e)
        if node is None:
            return True, {"method": "jm", "e": e}
        return False, {"method": "jm", "e": e, "node": node, "hook": hook_lengths(la)[node]}
    total = decomposition_row(la, 2, cache).row_sum_at_one()
    return total == 1, {"method": "llt", "e": 2, "row_sum": total}


def jm_exponents(la, p, max_i=None):
    """Exponents ``i >= 1`` tried at ``e = 2p^i``.

    By default ``i = 1`` and every further ``i`` while ``2p^i`` does not
    exceed the largest hook; beyond that every partition is a ``2p^i``-core.
    """
    if max_i is not None:
        if max_i < 1:
            raise DomainError("max_i must be >= 1")
        return list(range(1, max_i + 1))
    la = Partition(la)
    top = hook_lengths(la).get((1, 1), 0)
    out = [1]
    i = 2
    while 2 * p ** i <= top:
        out.append(i)
        i += 1
    return out


def _doubly_singular_status(la):
    return not is_e_regular(la, 2), not is_e_regular(conjugate(la), 2)


def certify(la, p, max_i=None, cache=None, cheap_first=False, row_sum=True):
    """Classify ``S^la`` at ``q = -1`` in characteristic ``p`` as far as the known results allow.

    ``row_sum=False`` skips the LLT-backed rule (the verdict can then only be
    ``Unknown`` where that rule would have been needed).
    """
    la = parse_partition(la) if isinstance(la, str) else Partition(la)
    if not is_prime(p):
        raise DomainError(f"p must be prime, got {p!r}")
    sing, conj_sing = _doubly_singular_status(la)
    if not (sing and conj_sing):
        which = "la" if not sing else "la'"
        step = CertificateStep(
            Rule.REGULAR, None,
            f"{which} is 2-regular; reducibility is settled by the criterion for 2-regular partitions",
            {"la_2_singular": sing, "conjugate_2_singular": conj_sing},
        )
        return Verdict(la, p, Status.OUT_OF_SCOPE, (step,), {})

    witness = broken_witness(la)
    if witness is not None:
        c, d = witness
        step = CertificateStep(
            Rule.BROKEN, None,
            f"broken: la_{c - 1} - la_{c} > 1 and la_{d - 1} = la_{d} > 0",
            {"c": c, "d": d},
        )
        return Verdict(la, p, Status.REDUCIBLE, (step,), {})

    evidence = {"unbroken": True, "doubly_singular": True}

    def row_sum_rule():
        if not row_sum:
            evidence["row_sum_e2"] = None
            return None
        irreducible, ev = is_char0_irreducible(la, 2, cache)
        evidence["row_sum_e2"] = ev["row_sum"]
        if irreducible:
            return None
        return CertificateStep(
            Rule.CHAR0_REDUCIBLE, 2,
            f"row of la in the e=2 decomposition matrix sums to {ev['row_sum']} >= 2 (i=0)",
            {"row_sum": ev["row_sum"]},
        )

    def jm_rule():
        passes = []
        for i in jm_exponents(la, p, max_i):
            e = 2 * p ** i
            node = jm_violation(la, e)
            if node is not None:
                evidence["jm_passes"] = tuple(passes)
                return CertificateStep(
                    Rule.NOT_JM, e,
                    f"not {e}-JM at node {node}: reducible at e={e} in characteristic 0 (i={i})",
                    {"i": i, "node": node, "hook": hook_lengths(la)[node]},
                )
            passes.append(e)
        evidence["jm_passes"] = tuple(passes)
        return None

    for rule in ((jm_rule, row_sum_rule) if cheap_first else (row_sum_rule, jm_rule)):
        step = rule()
        if step is not None:
            return Verdict(la, p, Status.REDUCIBLE, (step,), evidence)
    if "row_sum_e2" not in evidence:
        evidence["row_sum_e2"] = None

    e = 2 * p
    core = is_e_core(la, e)
    evidence["is_2p_core"] = core
    steps = [
        CertificateStep(
            Rule.CORE_FILTER, e,
            f"unbroken, doubly-singular and {e}-JM, hence a {e}-core",
            {"is_core": core},
        )
    ]
    bound = 4 * p - 6
    conj = conjugate(la)
    first_row, first_col = la[0], conj[0]
    evidence["first_row"] = first_row
    evidence["first_column"] = first_col
    steps.append(
        CertificateStep(
            Rule.BOUND_FILTER, bound,
            f"unbroken doubly-singular {e}-core: la_1 = {first_row}, la'_1 = {first_col} <= {bound}",
            {"la_1": first_row, "conj_1": first_col, "bound": bound},
        )
    )
    if not core or max(first_row, first_col) > bound:
        # a JM candidate that is not a core, or outside the box: flag it rather than decide
        evidence["inconsistent"] = True
        return Verdict(la, p, Status.UNKNOWN, tuple(steps), evidence)
    table = KNOWN_IRREDUCIBLE.get(p)
    if table is not None and la in table:
        steps.append(
            CertificateStep(
                Rule.KNOWN_TABLE, p,
                f"in the complete list of doubly-singular (2,{p})-irreducible partitions",
                {"table_size": len(table)},
            )
        )
        return Verdict(la, p, Status.IRREDUCIBLE, tuple(steps), evidence)
    return Verdict(la, p, Status.UNKNOWN, tuple(steps), evidence)


@dataclass
class ClassificationReport:
    """End-to-end classification of the unbroken doubly-singular ``2p``-cores."""

    p: int
    max_i: object
    verdicts: list
    seconds: float = 0.0
    version: str = __version__
    blocks: list = field(default_factory=list)
    row_sum_size_limit: object = None

    @property
    def candidates(self):
        return [v.partition for v in self.verdicts]

    def counts(self):
        out = {s.value: 0 for s in Status}
        for v in self.verdicts:
            out[v.status.value] += 1
        return out

    def counts_by_rule(self):
        out = {}
        for v in self.verdicts:
            if v.status in (Status.REDUCIBLE, Status.IRREDUCIBLE):
                out[v.decisive.label] = out.get(v.decisive.label, 0) + 1
        return dict(sorted(out.items()))

    @property
    def survivors(self):
        return [v for v in self.verdicts if v.status in (Status.IRREDUCIBLE, Status.UNKNOWN)]

    def row_sum_one_count(self):
        return sum(1 for v in self.verdicts if v.evidence.get("row_sum_e2") == 1)

    def row_sums_computed(self):
        return sum(1 for v in self.verdicts if v.evidence.get("row_sum_e2") is not None)

    def to_json_dict(self):
        return {
            "schema": REPORT_SCHEMA,
            "schema_version": REPORT_SCHEMA_VERSION,
            "header": {
                "p": self.p,
                "max_i": self.max_i,
                "tool_version": self.version,
                "seconds": round(self.seconds, 3),
                "row_sum_size_limit": self.row_sum_size_limit,
            },
            "summary": {
                "candidates": len(self.verdicts),
                "counts": self.counts(),
                "counts_by_rule": self.counts_by_rule(),
                "row_sum_one": self.row_sum_one_count(),
                "row_sums_computed": self.row_sums_computed(),
                "survivors": [format_partition(v.partition) for v in self.survivors],
            },
            "blocks": self.blocks,
            "records": [
                dict(v.to_json_dict(), row_sum=v.evidence.get("row_sum_e2")) for v in self.verdicts
            ],
        }

    def to_json(self, **kw):
        return json.dumps(self.to_json_dict(), **kw)

    @classmethod
    def from_json_dict(cls, doc):
        if doc.get("schema") != REPORT_SCHEMA:
            raise DomainError(f"not a classification report: schema {doc.get('schema')!r}")
        if doc.get("schema_version") != REPORT_SCHEMA_VERSION:
            raise DomainError(f"unsupported report schema_version {doc.get('schema_version')!r}")
        h = doc["header"]
        return cls(
            p=h["p"],
            max_i=h["max_i"],
            verdicts=[Verdict.from_json_dict(r) for r in doc["records"]],
            seconds=h["seconds"],
            version=h["tool_version"],
            blocks=doc.get("blocks", []),
            row_sum_size_limit=h.get("row_sum_size_limit"),
        )

    @classmethod
    def from_json(cls, text):
        return cls.from_json_dict(json.loads(text))


def classify_all(p, max_i=None, cache=None, jobs=1, cheap_first=False, row_sum_size_limit=None):
    """Certify every unbroken doubly-singular ``2p``-core.

    ``row_sum_size_limit`` skips the e=2 row sum for larger candidates (their
    verdict falls back to the remaining rules). Blocks are computed up front,
    in ``jobs`` processes when ``jobs > 1``, and logged in ``report.blocks``.
    """
    if not is_prime(p):
        raise DomainError(f"p must be prime, got {p!r}")
    start = time.perf_counter()
    cache = cache or default_cache()
    candidates = enumerate_unbroken_doubly_singular_cores(p)

    def wants_row_sum(la):
        return row_sum_size_limit is None or la.size <= row_sum_size_limit

    keys = sorted({(2, tuple(e_core(la, 2)), la.size) for la in candidates if wants_row_sum(la)},
                  key=lambda k: (k[2], k[1]))
    cache.ensure(keys, jobs=jobs)
    verdicts = [
        certify(la, p, max_i=max_i, cache=cache, cheap_first=cheap_first, row_sum=wants_row_sum(la))
        for la in candidates
    ]
    blocks = []
    for key in keys:
        block = cache.get(key[1], key[2], key[0])
        blocks.append({
            "e": block.e,
            "core": format_partition(block.core),
            "n": block.n,
            "partitions": block.num_partitions,
            "columns": len(block.columns),
            "seconds": round(block.seconds, 3),
        })
    return ClassificationReport(
        p=p,
        max_i="auto" if max_i is None else max_i,
        verdicts=verdicts,
        seconds=time.perf_counter() - start,
        blocks=blocks,
        row_sum_size_limit=row_sum_size_limit,
    )
